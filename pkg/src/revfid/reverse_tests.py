"""Reverse tests: preparation channels plus classical distribution pairs
that map back onto a given pair of quantum states.

The minimal construction diagonalizes T = sqrt(rho^-1/2 sigma rho^-1/2)
and reads the optimal (p, q) off the eigenframe; the general family is
parameterized by a contraction A commuting against T, completed to an
isometry row block and embedded in a larger PSD matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .divergences import classical_fidelity, t_operator, uhlmann_fidelity
from .errors import DomainError, RevfidError, ValidationError
from .linalg import HermitianMatrix, eig_hermitian, matrix_pinv, matrix_sqrt, trace_norm
from .states import DensityMatrix, ProbDist, PureState, make_density, rng_for

COLUMN_NORM_TOL = 1e-9
DROP_COLUMN_NORM = 1e-12


@dataclass(frozen=True)
class ReverseTest:
    """Preparation matrix (unit columns) with source distributions p, q."""

    prep: np.ndarray
    p: ProbDist
    q: ProbDist

    def __post_init__(self):
        n = np.asarray(self.prep, dtype=complex)
        if n.ndim != 2:
            raise ValidationError("prep must be a dim x m matrix")
        if n.shape[1] != self.p.size or n.shape[1] != self.q.size:
            raise ValidationError("prep column count must match p and q sizes")
        norms = np.linalg.norm(n, axis=0)
        if np.any(np.abs(norms - 1.0) > COLUMN_NORM_TOL):
            raise ValidationError("prep columns must be unit vectors")
        n.setflags(write=False)
        object.__setattr__(self, "prep", n)

    @property
    def dim(self) -> int:
        return self.prep.shape[0]

    @property
    def size(self) -> int:
        return self.prep.shape[1]

    def prepared_pair(self) -> tuple[np.ndarray, np.ndarray]:
        cols = self.prep
        rho = (cols * self.p.weights) @ cols.conj().T
        sigma = (cols * self.q.weights) @ cols.conj().T
        return rho, sigma

    def fidelity(self) -> float:
        return classical_fidelity(self.p, self.q)


@dataclass(frozen=True)
class GeneralReverseTestParams:
    a_matrix: np.ndarray
    a_prime: np.ndarray
    c_block: np.ndarray
    t_tilde: HermitianMatrix
    frame: np.ndarray


@dataclass(frozen=True)
class VerificationReport:
    rho_residual: float
    sigma_residual: float
    fidelity_of_pq: float
    passes: bool
    tolerance: float


def verify_reverse_test(
    rt: ReverseTest, rho: DensityMatrix, sigma: DensityMatrix, tol: float = 1e-7
) -> VerificationReport:
    """Trace-norm residuals of the preparation identities."""
    prep_rho, prep_sigma = rt.prepared_pair()
    r_res = trace_norm(prep_rho - rho.mat)
    s_res = trace_norm(prep_sigma - sigma.mat)
    return VerificationReport(
        rho_residual=r_res,
        sigma_residual=s_res,
        fidelity_of_pq=rt.fidelity(),
        passes=bool(r_res <= tol and s_res <= tol),
        tolerance=tol,
    )


def minimal_reverse_test(rho: DensityMatrix, sigma: DensityMatrix) -> ReverseTest:
    """Optimal reverse test on an alphabet of size dim.

    Diagonalize T, set p(x) = <e_x|rho|e_x>, q(x) = lambda_x^2 p(x), and
    prepare with the normalized columns of sqrt(rho) V.  Its classical
    fidelity equals tr(rho T).
    """
    t = t_operator(rho, sigma)
    dec = eig_hermitian(t)
    sr = matrix_sqrt(rho.matrix).entries
    cols = sr @ dec.frame
    p = np.linalg.norm(cols, axis=0) ** 2
    q = dec.eigenvalues**2 * p
    prep = cols / np.linalg.norm(cols, axis=0)
    return ReverseTest(prep=prep, p=ProbDist(p), q=ProbDist(q))


def sample_contraction(t: HermitianMatrix, seed: int) -> np.ndarray:
    """Random contraction A with TA = A†T >= 0 and ||A||_op <= 1."""
    w = np.linalg.eigvalsh(t.entries)
    if w[0] <= 1e-12 * max(1.0, float(abs(w[-1]))):
        raise DomainError("sample_contraction requires strictly positive T")
    d = t.dim
    rng = rng_for(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    h = g @ g.conj().T
    a = np.linalg.inv(t.entries) @ h
    opnorm = np.linalg.norm(a, ord=2)
    if opnorm > 1.0:
        a = a / (opnorm * (1.0 + 1e-12))
    return a


def _check_contraction(t: np.ndarray, a: np.ndarray) -> None:
    scale = max(1.0, np.linalg.norm(t))
    if np.linalg.norm(a, ord=2) > 1.0 + 1e-10:
        raise ValidationError("A is not a contraction")
    ta = t @ a
    if np.linalg.norm(ta - a.conj().T @ t) > 1e-8 * scale:
        raise ValidationError("A violates TA = A†T")
    if np.linalg.eigvalsh(0.5 * (ta + ta.conj().T))[0] < -1e-8 * scale:
        raise ValidationError("TA is not PSD")


def _complete_isometry_row(a: np.ndarray, env_extra: int) -> np.ndarray:
    """A' with A A† + A' A'† = I, placed in d x env_extra."""
    d = a.shape[0]
    m = np.eye(d) - a @ a.conj().T
    w, e = np.linalg.eigh(0.5 * (m + m.conj().T))
    w = np.clip(w, 0.0, None)
    nonzero = np.where(w > 1e-12)[0]
    if len(nonzero) > env_extra:
        raise ValidationError(
            f"env_dim too small: completing the isometry needs {len(nonzero)} "
            f"extra columns, only {env_extra} available"
        )
    a_prime = np.zeros((d, env_extra), dtype=complex)
    for j, idx in enumerate(nonzero):
        a_prime[:, j] = np.sqrt(w[idx]) * e[:, idx]
    return a_prime


def general_reverse_test(
    rho: DensityMatrix,
    sigma: DensityMatrix,
    a: np.ndarray,
    env_dim: int | None = None,
) -> tuple[ReverseTest, GeneralReverseTestParams]:
    """A-parameterized reverse test over an alphabet of size env_dim.

    With A = identity and env_dim = dim this reduces to the minimal test;
    strict contractions give strictly smaller classical fidelity.
    """
    d = rho.dim
    if env_dim is None:
        env_dim = 2 * d
    if env_dim < d:
        raise ValidationError(f"env_dim {env_dim} must be >= dim {d}")
    t = t_operator(rho, sigma)
    a = np.asarray(a, dtype=complex)
    if a.shape != (d, d):
        raise ValidationError(f"contraction must be {d}x{d}, got {a.shape}")
    _check_contraction(t.entries, a)

    k = env_dim - d
    a_prime = _complete_isometry_row(a, k)
    ta = 0.5 * ((t.entries @ a) + (t.entries @ a).conj().T)
    tap = t.entries @ a_prime
    # Schur complement of this C against the TA block is eps * I, so the
    # assembled block matrix stays PSD without any search.
    eps = 1e-9 * float(np.trace(t.entries).real)
    c = tap.conj().T @ matrix_pinv(HermitianMatrix(ta)).entries @ tap + eps * np.eye(k)
    t_tilde = HermitianMatrix(
        np.block([[ta, tap], [tap.conj().T, c]]) if k else ta
    )
    scale = max(1.0, t_tilde.fro_norm())
    if np.linalg.eigvalsh(t_tilde.entries)[0] < -1e-7 * scale:
        raise ValidationError("assembled block matrix is not PSD; A is outside the valid family")
    dec = eig_hermitian(t_tilde)

    big_sqrt = np.hstack([matrix_sqrt(rho.matrix).entries, np.zeros((d, k))])
    cols = big_sqrt @ dec.frame
    norms = np.linalg.norm(cols, axis=0)
    keep = norms > DROP_COLUMN_NORM
    cols = cols[:, keep]
    norms = norms[keep]
    p = norms**2
    q = dec.eigenvalues[keep] ** 2 * p
    rt = ReverseTest(prep=cols / norms, p=ProbDist(p), q=ProbDist(q))
    params = GeneralReverseTestParams(
        a_matrix=a, a_prime=a_prime, c_block=c, t_tilde=t_tilde, frame=dec.frame
    )
    return rt, params


def pure_target_reverse_test(rho: DensityMatrix, phi: PureState) -> ReverseTest:
    """Optimal reverse test when sigma is the pure state |phi><phi|.

    q is a point mass on the target column; p gives that column the largest
    weight c keeping rho - c|phi><phi| PSD and spreads the rest over the
    eigenvectors of the remainder.
    """
    from .divergences import f_min_pure

    c = f_min_pure(rho, phi) ** 2
    remainder = rho.mat - c * np.outer(phi.amplitudes, phi.amplitudes.conj())
    w, v = np.linalg.eigh(0.5 * (remainder + remainder.conj().T))
    cols = [phi.amplitudes]
    p = [c]
    for i in range(len(w)):
        if w[i] > 1e-12:
            cols.append(v[:, i])
            p.append(float(w[i]))
    q = np.zeros(len(p))
    q[0] = 1.0
    return ReverseTest(prep=np.column_stack(cols), p=ProbDist(np.array(p)), q=ProbDist(q))


def mixture_reverse_test(
    components: list[tuple[ReverseTest, float, float]]
) -> ReverseTest:
    """Block-concatenate component tests with mixture weights (lambda, mu).

    The result prepares the lambda-mixture of the component rho's and the
    mu-mixture of the sigma's, with classical fidelity
    sum_y sqrt(lambda_y mu_y) F(p_y, q_y).
    """
    if not components:
        raise ValidationError("mixture needs at least one component")
    lams = np.array([lam for _, lam, _ in components])
    mus = np.array([mu for _, _, mu in components])
    if abs(lams.sum() - 1.0) > 1e-9 or abs(mus.sum() - 1.0) > 1e-9:
        raise ValidationError("mixture weights must each sum to 1")
    if np.any(lams < -1e-12) or np.any(mus < -1e-12):
        raise ValidationError("mixture weights must be nonnegative")
    dim = components[0][0].dim
    if any(rt.dim != dim for rt, _, _ in components):
        raise ValidationError("component tests must share the Hilbert dimension")
    prep = np.hstack([rt.prep for rt, _, _ in components])
    p = np.concatenate([lam * rt.p.weights for rt, lam, _ in components])
    q = np.concatenate([mu * rt.q.weights for rt, _, mu in components])
    return ReverseTest(prep=prep, p=ProbDist(p), q=ProbDist(q))


def hidden_pair(rho: DensityMatrix, sigma: DensityMatrix) -> tuple[DensityMatrix, DensityMatrix]:
    """States (rho, T rho T) whose Uhlmann fidelity equals F_min(rho, sigma).

    Asserts the W-factor contract W_rho = sqrt(rho), W_sigma = sqrt(rho) T:
    W_rho W_rho† = rho, W_sigma W_sigma† = sigma, and
    W_rho W_sigma† = W_sigma W_rho† >= 0.
    """
    t = t_operator(rho, sigma)
    w_rho = matrix_sqrt(rho.matrix).entries
    w_sigma = w_rho @ t.entries
    cross = w_rho @ w_sigma.conj().T
    checks = (
        trace_norm(w_rho @ w_rho.conj().T - rho.mat),
        trace_norm(w_sigma @ w_sigma.conj().T - sigma.mat),
        trace_norm(cross - cross.conj().T),
    )
    if max(checks) > 1e-9 * max(1.0, trace_norm(rho.mat)):
        raise RevfidError(f"W-factor contract violated, residuals {checks}")
    if np.linalg.eigvalsh(0.5 * (cross + cross.conj().T))[0] < -1e-9:
        raise RevfidError("W-factor cross term is not PSD")
    sigma_prime = make_density(t.entries @ rho.mat @ t.entries)
    return rho, sigma_prime


def hidden_pair_fidelity(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    rho_p, sigma_p = hidden_pair(rho, sigma)
    return uhlmann_fidelity(rho_p, sigma_p)
