"""Scalar divergences: classical and Uhlmann fidelity, the reverse-test
minimal fidelity F_min and its generalized-f family, relative entropies,
trace distances, and bounds on the reverse-test statistical distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionMismatchError, DomainError, SingularStateError, ValidationError
from .linalg import (
    HermitianMatrix,
    apply_spectral,
    eig_hermitian,
    geometric_mean,
    matrix_pinv_sqrt,
    matrix_sqrt,
    support_projector,
    trace_norm,
)
from .states import DensityMatrix, ProbDist, PureState

STRICT_POSITIVE_MIN_EIG = 1e-10


def _check_sizes(p: ProbDist, q: ProbDist) -> None:
    if p.size != q.size:
        raise DimensionMismatchError(f"distribution sizes differ: {p.size} vs {q.size}")


def _check_dims(rho: DensityMatrix, sigma: DensityMatrix) -> None:
    if rho.dim != sigma.dim:
        raise DimensionMismatchError(f"state dims differ: {rho.dim} vs {sigma.dim}")


def _require_full_rank(rho: DensityMatrix, name: str = "rho") -> None:
    if rho.min_eigenvalue() <= STRICT_POSITIVE_MIN_EIG:
        raise SingularStateError(
            f"{name} is singular (min eigenvalue {rho.min_eigenvalue():.3e}); "
            "use the pure-target closed form or regularize explicitly"
        )


def classical_fidelity(p: ProbDist, q: ProbDist) -> float:
    """Bhattacharyya coefficient sum_x sqrt(p(x) q(x))."""
    _check_sizes(p, q)
    return float(np.sum(np.sqrt(p.weights * q.weights)))


def uhlmann_fidelity(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """tr sqrt(sqrt(sigma) rho sqrt(sigma)), the largest monotone extension."""
    _check_dims(rho, sigma)
    rs = matrix_sqrt(rho.matrix).entries
    w = np.linalg.eigvalsh(rs @ sigma.mat @ rs)
    return float(min(np.sum(np.sqrt(np.clip(w, 0.0, None))), 1.0))


def t_operator(rho: DensityMatrix, sigma: DensityMatrix) -> HermitianMatrix:
    """T = sqrt(rho^-1/2 sigma rho^-1/2); (sqrt(rho) T)(sqrt(rho) T)† = sigma."""
    _check_dims(rho, sigma)
    _require_full_rank(rho)
    ir = matrix_pinv_sqrt(rho.matrix).entries
    return matrix_sqrt(HermitianMatrix(ir @ sigma.mat @ ir))


def f_min(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Reverse-test optimal fidelity tr(rho T); the smallest monotone extension."""
    t = t_operator(rho, sigma)
    return float(min(max(np.trace(rho.mat @ t.entries).real, 0.0), 1.0))


def f_min_via_geomean(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Same quantity through the operator geometric mean tr(rho # sigma)."""
    _check_dims(rho, sigma)
    _require_full_rank(rho)
    g = geometric_mean(rho.matrix, sigma.matrix)
    return float(min(max(np.trace(g.entries).real, 0.0), 1.0))


def f_min_pure(rho: DensityMatrix, phi: PureState) -> float:
    """F_min against a pure target; 0 when phi leaves the support of rho."""
    if rho.dim != phi.dim:
        raise DimensionMismatchError(f"state dims differ: {rho.dim} vs {phi.dim}")
    proj = support_projector(rho.matrix).entries
    if np.linalg.norm(phi.amplitudes - proj @ phi.amplitudes) > 1e-8:
        return 0.0
    v = matrix_pinv_sqrt(rho.matrix).entries @ phi.amplitudes
    return float(min(1.0 / np.linalg.norm(v), 1.0))


@dataclass(frozen=True)
class OperatorMonotoneSpec:
    """Scalar operator monotone function on [0, inf).

    For ``custom`` maps operator monotonicity is the caller's responsibility;
    the map is evaluated as given.
    """

    kind: str  # "power" or "custom"
    alpha: float | None = None
    fn: Callable[[float], float] | None = None

    def __post_init__(self):
        if self.kind == "power":
            if self.alpha is None or not 0.0 < self.alpha <= 1.0:
                raise ValidationError(f"power exponent must lie in (0, 1], got {self.alpha}")
        elif self.kind == "custom":
            if self.fn is None:
                raise ValidationError("custom spec needs a callable")
        else:
            raise ValidationError(f"unknown operator-monotone kind {self.kind!r}")

    @classmethod
    def power(cls, alpha: float) -> "OperatorMonotoneSpec":
        return cls(kind="power", alpha=alpha)

    @classmethod
    def sqrt(cls) -> "OperatorMonotoneSpec":
        return cls(kind="power", alpha=0.5)

    @classmethod
    def custom(cls, fn: Callable[[float], float]) -> "OperatorMonotoneSpec":
        return cls(kind="custom", fn=fn)

    def __call__(self, t: float) -> float:
        if self.kind == "power":
            return float(max(t, 0.0) ** self.alpha)
        return float(self.fn(t))


def generalized_fidelity_classical(p: ProbDist, q: ProbDist, f: OperatorMonotoneSpec) -> float:
    """F_f(p, q) = sum_x p(x) f(q(x)/p(x)); zero-mass points contribute 0.

    The zero-mass convention matches the limit p*f(q/p) -> 0, valid for the
    power family; custom maps hit a zero-mass point only if the caller
    guarantees f(t)/t -> 0, otherwise the point is rejected.
    """
    _check_sizes(p, q)
    total = 0.0
    for pw, qw in zip(p.weights, q.weights):
        if pw <= 0.0:
            if qw > 0.0 and f.kind == "custom":
                raise DomainError(
                    "custom operator-monotone map at a zero-mass point: "
                    "the p(x)=0 convention requires f(t)/t -> 0"
                )
            continue
        total += pw * f(qw / pw)
    return float(total)


def f_f_min(rho: DensityMatrix, sigma: DensityMatrix, f: OperatorMonotoneSpec) -> float:
    """Generalized minimal fidelity tr(sqrt(rho) f(T^2) sqrt(rho))."""
    t = t_operator(rho, sigma)
    ft2 = apply_spectral(t, lambda lam: f(lam * lam))
    return float(np.trace(rho.mat @ ft2.entries).real)


def quasi_entropy_comparison(
    rho: DensityMatrix, sigma: DensityMatrix, alpha: float
) -> tuple[float, float]:
    """Compare the alpha quasi-entropy with the reverse-test minimal fidelity.

    Returns (s_alpha, one_minus_f_alpha_min) with
    s_alpha = 1 - tr rho^(1-alpha) sigma^alpha and
    F_alpha_min = tr sqrt(rho) (rho^-1/2 sigma rho^-1/2)^alpha sqrt(rho),
    the exponent pairing under which both reduce to
    1 - sum p^(1-alpha) q^alpha on commuting pairs.  The minimality of
    F_alpha_min among monotone extensions gives
    s_alpha <= one_minus_f_alpha_min, with equality iff the pair commutes.
    """
    if not 0.0 < alpha < 1.0:
        raise ValidationError(f"alpha must lie in (0, 1), got {alpha}")
    _check_dims(rho, sigma)
    _require_full_rank(rho)
    _require_full_rank(sigma, name="sigma")
    rho_pow = apply_spectral(rho.matrix, lambda t: max(t, 0.0) ** (1.0 - alpha)).entries
    sig_pow = apply_spectral(sigma.matrix, lambda t: max(t, 0.0) ** alpha).entries
    s_alpha = 1.0 - float(np.trace(rho_pow @ sig_pow).real)
    f_alpha_min = f_f_min(rho, sigma, OperatorMonotoneSpec.power(alpha))
    return s_alpha, 1.0 - f_alpha_min


def kl_divergence(p: ProbDist, q: ProbDist) -> float:
    """sum_x p(x) ln(p(x)/q(x)); +inf when supp p is not inside supp q."""
    _check_sizes(p, q)
    total = 0.0
    for pw, qw in zip(p.weights, q.weights):
        if pw <= 0.0:
            continue
        if qw <= 0.0:
            return math.inf
        total += pw * math.log(pw / qw)
    return float(total)


def reverse_relative_entropy(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """D^R(rho || sigma) = tr rho ln(sqrt(rho) sigma^-1 sqrt(rho))."""
    _check_dims(rho, sigma)
    if sigma.min_eigenvalue() <= STRICT_POSITIVE_MIN_EIG:
        raise SingularStateError("sigma must be strictly positive for D^R")
    rs = matrix_sqrt(rho.matrix).entries
    isig = np.linalg.inv(sigma.mat)
    core = HermitianMatrix(rs @ isig @ rs)
    dec = eig_hermitian(core)
    # rho and core share the kernel of rho, so log is taken on the support
    w = dec.eigenvalues
    cut = 1e-14 * max(1.0, float(abs(w[-1])))
    logw = np.where(w > cut, np.log(np.where(w > cut, w, 1.0)), 0.0)
    logm = (dec.frame * logw) @ dec.frame.conj().T
    return float(np.trace(rho.mat @ logm).real)


def trace_distance_classical(p: ProbDist, q: ProbDist) -> float:
    _check_sizes(p, q)
    return float(0.5 * np.sum(np.abs(p.weights - q.weights)))


def trace_distance_quantum(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    _check_dims(rho, sigma)
    return float(0.5 * trace_norm(rho.mat - sigma.mat))


def delta_max_pure(rho: DensityMatrix, phi: PureState) -> float:
    """Closed form for the pure-target reverse-test distance: 1 - c with
    c the largest weight such that rho - c |phi><phi| stays PSD."""
    c = f_min_pure(rho, phi) ** 2
    return float(1.0 - c)


@dataclass(frozen=True)
class DeltaMaxBounds:
    lower: float
    upper: float
    upper_via_measurement: float

    def __post_init__(self):
        if self.lower > min(self.upper, self.upper_via_measurement) + 1e-10:
            raise ValidationError("delta-max lower bound exceeds an upper bound")


def delta_max_bounds(rho: DensityMatrix, sigma: DensityMatrix) -> DeltaMaxBounds:
    """Sandwich 1 - F_min <= Delta_max <= sqrt(1 - F_min^2), plus the
    sharper measurement bound Delta(M(rho), M(T rho T)) in the T eigenbasis."""
    t = t_operator(rho, sigma)
    fmin = float(min(max(np.trace(rho.mat @ t.entries).real, 0.0), 1.0))
    dec = eig_hermitian(t)
    p = np.array([float((dec.frame[:, i].conj() @ rho.mat @ dec.frame[:, i]).real) for i in range(rho.dim)])
    q = dec.eigenvalues**2 * p
    via_meas = float(0.5 * np.sum(np.abs(p - q)))
    return DeltaMaxBounds(
        lower=1.0 - fmin,
        upper=math.sqrt(max(1.0 - fmin * fmin, 0.0)),
        upper_via_measurement=via_meas,
    )
