"""SLD/RLD Fisher information, tangent reverse estimation, curve-length
functionals, geodesics of the minimal fidelity, the general RLD geodesic
flow, and the variational path-length fidelity estimator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.integrate import simpson
from scipy.linalg import solve_sylvester

from .divergences import classical_fidelity, f_min, uhlmann_fidelity
from .errors import DomainError, SingularStateError, ValidationError
from .linalg import HermitianMatrix, eig_hermitian, matrix_sqrt
from .reverse_tests import minimal_reverse_test
from .states import DensityMatrix, ProbDist, SignedVector, make_density, rng_for

FLOW_CONSTRAINT_TOL = 1e-4


@dataclass(frozen=True)
class TangentPoint:
    """State with a traceless Hermitian velocity."""

    state: DensityMatrix
    velocity: HermitianMatrix

    def __post_init__(self):
        if self.velocity.dim != self.state.dim:
            raise ValidationError("velocity dimension does not match the state")
        if abs(np.trace(self.velocity.entries).real) > 1e-9:
            raise ValidationError("velocity must be traceless")


@dataclass(frozen=True)
class FisherReport:
    """Fisher information under the SLD and/or RLD metric."""

    j_sld: float | None = None
    j_rld: float | None = None
    sld: HermitianMatrix | None = None
    rld: np.ndarray | None = None

    def __post_init__(self):
        if self.j_sld is not None and self.j_rld is not None:
            if self.j_rld < self.j_sld - 1e-9:
                raise ValidationError("RLD Fisher information below SLD value")


@dataclass(frozen=True)
class Curve:
    """Sampled path of states on a strictly increasing grid in [0, 1]."""

    times: np.ndarray
    states: tuple[DensityMatrix, ...]
    velocities: tuple[HermitianMatrix, ...] | None = None

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        if t.ndim != 1 or len(t) != len(self.states):
            raise ValidationError("times and states must have equal length")
        if len(t) > 1 and np.any(np.diff(t) <= 0):
            raise ValidationError("time grid must be strictly increasing")
        if self.velocities is not None and len(self.velocities) != len(self.states):
            raise ValidationError("velocities length must match states")
        t.setflags(write=False)
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "states", tuple(self.states))
        if self.velocities is not None:
            object.__setattr__(self, "velocities", tuple(self.velocities))


@dataclass(frozen=True)
class GeodesicState:
    """(rho, L) pair feeding the RLD geodesic flows."""

    state: DensityMatrix
    rld_matrix: np.ndarray

    def constraint_residual(self) -> float:
        r = self.state.mat
        l = self.rld_matrix
        return float(np.linalg.norm(r @ l.conj().T - l @ r))


def _require_positive(rho: DensityMatrix) -> None:
    if rho.min_eigenvalue() <= 1e-10:
        raise SingularStateError("operation requires a strictly positive state")


def sld_fisher(tp: TangentPoint) -> FisherReport:
    """Solve drho = (L rho + rho L)/2 and return J^S = tr L^2 rho."""
    _require_positive(tp.state)
    w, v = np.linalg.eigh(tp.state.mat)
    d_tilde = v.conj().T @ tp.velocity.entries @ v
    l_tilde = 2.0 * d_tilde / np.add.outer(w, w)
    sld = HermitianMatrix(v @ l_tilde @ v.conj().T)
    j = float(np.trace(sld.entries @ tp.velocity.entries).real)
    return FisherReport(j_sld=max(j, 0.0), sld=sld)


def rld_fisher(tp: TangentPoint) -> FisherReport:
    """L = drho rho^-1 and J^R = tr(drho rho^-1 drho)."""
    _require_positive(tp.state)
    inv = np.linalg.inv(tp.state.mat)
    rld = tp.velocity.entries @ inv
    j = float(np.trace(tp.velocity.entries @ inv @ tp.velocity.entries).real)
    return FisherReport(j_rld=max(j, 0.0), rld=rld)


def fisher_both(tp: TangentPoint) -> FisherReport:
    s = sld_fisher(tp)
    r = rld_fisher(tp)
    return FisherReport(j_sld=s.j_sld, j_rld=r.j_rld, sld=s.sld, rld=r.rld)


def tangent_reverse_estimation(
    tp: TangentPoint,
) -> tuple[np.ndarray, ProbDist, SignedVector]:
    """Minimal tangent reverse estimation (N, p, dp) with N p N† = rho and
    N dp N† = drho; the classical Fisher information of (p, dp) equals J^R."""
    _require_positive(tp.state)
    sr = matrix_sqrt(tp.state.matrix).entries
    isr = np.linalg.inv(sr)
    s = HermitianMatrix(isr @ tp.velocity.entries @ isr)
    dec = eig_hermitian(s)
    cols = sr @ dec.frame
    norms = np.linalg.norm(cols, axis=0)
    p = norms**2
    dp = dec.eigenvalues * p
    return cols / norms, ProbDist(p), SignedVector(dp, total=0.0)


def classical_fisher(p: ProbDist, dp: SignedVector) -> float:
    mask = p.weights > 0
    return float(np.sum(dp.values[mask] ** 2 / p.weights[mask]))


def fmin_geodesic(rho: DensityMatrix, sigma: DensityMatrix, n_samples: int = 33) -> Curve:
    """Commutative-RLD geodesic realizing F_min: the classical great circle
    of the minimal reverse test pushed through its preparation map."""
    if n_samples < 2:
        raise ValidationError("need at least 2 samples")
    rt = minimal_reverse_test(rho, sigma)
    fid = classical_fidelity(rt.p, rt.q)
    times = np.linspace(0.0, 1.0, n_samples)
    if fid >= 1.0 - 1e-12:
        zero = HermitianMatrix(np.zeros((rho.dim, rho.dim)))
        return Curve(times, tuple([rho] * n_samples), tuple([zero] * n_samples))
    theta = math.acos(min(max(fid, 0.0), 1.0))
    sp = np.sqrt(rt.p.weights)
    sq = np.sqrt(rt.q.weights)
    n = rt.prep
    states, velocities = [], []
    for t in times:
        amp = (math.sin((1.0 - t) * theta) * sp + math.sin(t * theta) * sq) / math.sin(theta)
        damp = (
            theta
            * (-math.cos((1.0 - t) * theta) * sp + math.cos(t * theta) * sq)
            / math.sin(theta)
        )
        pt = amp**2
        dpt = 2.0 * amp * damp
        states.append(make_density((n * pt) @ n.conj().T))
        velocities.append(HermitianMatrix((n * dpt) @ n.conj().T))
    return Curve(times, tuple(states), tuple(velocities))


def _fd_velocities(curve: Curve) -> list[HermitianMatrix]:
    """Central differences, one-sided at the endpoints.

    On uniform grids with enough samples the interior stencil is upgraded
    to fourth order so panel refinement converges below quadrature noise.
    """
    t = curve.times
    mats = [s.mat for s in curve.states]
    n = len(t)
    steps = np.diff(t)
    uniform = n >= 5 and np.ptp(steps) < 1e-12 * steps[0]
    h = steps[0] if uniform else None
    out = []
    for i in range(n):
        if i == 0:
            if uniform:
                d = (-3 * mats[0] + 4 * mats[1] - mats[2]) / (2 * h)
            else:
                d = (mats[1] - mats[0]) / (t[1] - t[0])
        elif i == n - 1:
            if uniform:
                d = (3 * mats[-1] - 4 * mats[-2] + mats[-3]) / (2 * h)
            else:
                d = (mats[-1] - mats[-2]) / (t[-1] - t[-2])
        elif uniform and 2 <= i <= n - 3:
            d = (mats[i - 2] - 8 * mats[i - 1] + 8 * mats[i + 1] - mats[i + 2]) / (12 * h)
        else:
            d = (mats[i + 1] - mats[i - 1]) / (t[i + 1] - t[i - 1])
        out.append(HermitianMatrix(d))
    return out


def _resample(curve: Curve, panels: int) -> Curve:
    """Linear interpolation of the states onto a uniform panels+1 grid."""
    times = np.linspace(0.0, 1.0, panels + 1)
    states = []
    for t in times:
        i = int(np.searchsorted(curve.times, t, side="right")) - 1
        i = min(max(i, 0), len(curve.times) - 2)
        u = (t - curve.times[i]) / (curve.times[i + 1] - curve.times[i])
        m = (1.0 - u) * curve.states[i].mat + u * curve.states[i + 1].mat
        states.append(make_density(m))
    return Curve(times, tuple(states))


def curve_length(curve: Curve, metric: str = "rld", panels: int | None = None) -> float:
    """Integral of sqrt(J_t) along the curve by composite Simpson quadrature.

    Velocities missing from the curve are filled by finite differences.
    """
    if metric not in ("sld", "rld"):
        raise ValidationError(f"metric must be 'sld' or 'rld', got {metric!r}")
    if panels is not None:
        curve = _resample(curve, panels)
    if len(curve.states) < 3:
        if len(curve.states) == 1:
            return 0.0
        raise ValidationError("need at least 3 samples for quadrature")
    vels = list(curve.velocities) if curve.velocities is not None else _fd_velocities(curve)
    speeds = []
    for state, vel in zip(curve.states, vels):
        j = _metric_speed_squared(state, vel, metric)
        speeds.append(math.sqrt(max(j, 0.0)))
    return float(simpson(np.array(speeds), x=curve.times))


def _metric_speed_squared(state: DensityMatrix, vel: HermitianMatrix, metric: str) -> float:
    """J in the state's eigenbasis, taking the boundary limit where the
    velocity vanishes together with an eigenvalue (great circles touching
    the simplex boundary); a velocity component off the support of a
    singular state has no finite metric and is rejected."""
    w, v = np.linalg.eigh(state.mat)
    d = v.conj().T @ vel.entries @ v
    w = np.maximum(w, 1e-290)
    if metric == "rld":
        j = float(np.sum(np.abs(d) ** 2 / w[None, :]))
    else:
        j = float(np.sum(2.0 * np.abs(d) ** 2 / np.add.outer(w, w)))
    if not math.isfinite(j) or j > 1e15:
        raise DomainError("metric undefined: velocity leaves the support of a singular state")
    return j


def geodesic_start(rho: DensityMatrix, sigma: DensityMatrix) -> tuple[GeodesicState, float]:
    """Unit-speed initial data (rho, L0) for the commutative geodesic flow,
    plus the total arc time 2 arccos F_min."""
    curve = fmin_geodesic(rho, sigma, n_samples=3)
    v0 = curve.velocities[0].entries
    inv = np.linalg.inv(rho.mat)
    j0 = float(np.trace(v0 @ inv @ v0).real)
    if j0 <= 1e-18:
        return GeodesicState(rho, np.zeros_like(rho.mat)), 0.0
    total = math.sqrt(j0)
    l0 = (v0 @ inv) / total
    return GeodesicState(rho, l0), total


def _check_flow_start(start: GeodesicState) -> None:
    if start.constraint_residual() > 1e-8:
        raise ValidationError("start violates rho L† = L rho")
    tr_lr = np.trace(start.rld_matrix @ start.state.mat).real
    if abs(tr_lr) > 1e-8:
        raise ValidationError("start violates tr(L rho) = 0")
    inv = np.linalg.inv(start.state.mat)
    j = float(np.trace(start.rld_matrix.conj().T @ start.rld_matrix @ start.state.mat).real)
    if abs(j - 1.0) > 1e-6:
        raise ValidationError(f"start is not unit speed: J^R = {j}")
    del inv


def _integrate_flow(start: GeodesicState, dt: float, steps: int, deriv_l) -> Curve:
    rho = start.state.mat.copy()
    l = start.rld_matrix.copy()
    total = dt * steps
    times = [0.0]
    states = [start.state]
    velocities = [HermitianMatrix(total * 0.5 * (l @ rho + rho @ l.conj().T))]
    for k in range(steps):
        # classical 4-stage Runge-Kutta on the coupled (rho, L) system
        def f(r, m):
            return m @ r, deriv_l(r, m)

        k1r, k1l = f(rho, l)
        k2r, k2l = f(rho + 0.5 * dt * k1r, l + 0.5 * dt * k1l)
        k3r, k3l = f(rho + 0.5 * dt * k2r, l + 0.5 * dt * k2l)
        k4r, k4l = f(rho + dt * k3r, l + dt * k3l)
        rho = rho + dt / 6.0 * (k1r + 2 * k2r + 2 * k3r + k4r)
        l = l + dt / 6.0 * (k1l + 2 * k2l + 2 * k3l + k4l)
        rho = 0.5 * (rho + rho.conj().T)
        rho = rho / np.trace(rho).real  # the flow conserves trace analytically
        residual = np.linalg.norm(rho @ l.conj().T - l @ rho)
        if residual > FLOW_CONSTRAINT_TOL:
            raise DomainError(
                f"step {k + 1} rejected: constraint residual {residual:.3e} "
                f"exceeds {FLOW_CONSTRAINT_TOL}"
            )
        times.append((k + 1) * dt / total)
        states.append(make_density(rho))
        velocities.append(HermitianMatrix(total * 0.5 * (l @ rho + rho @ l.conj().T)))
    return Curve(np.array(times), tuple(states), tuple(velocities))


def commutative_geodesic_flow(start: GeodesicState, dt: float, steps: int) -> Curve:
    """Flow of 2 dL/dt + L^2 + 1 = 0, drho/dt = L rho (commutative family).

    The grid is normalized to [0, 1]; velocities are derivatives with
    respect to the normalized parameter.
    """
    _check_flow_start(start)

    def deriv_l(_r, m):
        return -0.5 * (m @ m + np.eye(m.shape[0]))

    return _integrate_flow(start, dt, steps, deriv_l)


def rld_geodesic_flow(start: GeodesicState, dt: float, steps: int) -> Curve:
    """General RLD geodesic: dL/dt solved from the Sylvester equation
    rho dL + dL rho = -(rho L†L + rho) each stage, drho/dt = L rho."""
    _check_flow_start(start)

    def deriv_l(r, m):
        rhs = -(r @ m.conj().T @ m + r)
        try:
            return solve_sylvester(r, r, rhs)
        except Exception as exc:  # singular rho along the flow
            raise DomainError(f"flow halted: Sylvester solve failed ({exc})") from exc

    return _integrate_flow(start, dt, steps, deriv_l)


def _gl_nodes(order: int = 8) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * w  # map to [0, 1]


def _chart_length(anchors: Sequence[np.ndarray], order: int = 8) -> float:
    """RLD length of the path rho(t) = G(t)G(t)†/tr, G piecewise linear
    through the anchors, with analytic velocities per segment."""
    nodes, weights = _gl_nodes(order)
    total = 0.0
    for g0, g1 in zip(anchors[:-1], anchors[1:]):
        dg = g1 - g0
        seg = 0.0
        for u, w in zip(nodes, weights):
            g = g0 + u * dg
            m = g @ g.conj().T
            tau = float(np.trace(m).real)
            if tau <= 0.0:
                raise DomainError("degenerate chart point")
            dm = dg @ g.conj().T + g @ dg.conj().T
            dtau = float(np.trace(dm).real)
            rho = m / tau
            drho = dm / tau - m * (dtau / tau**2)
            winv = np.linalg.eigvalsh(rho)
            if winv[0] <= 1e-13:
                raise DomainError("chart path leaves the positive cone")
            inv = np.linalg.inv(rho)
            j = float(np.trace(drho @ inv @ drho).real)
            seg += w * math.sqrt(max(j, 0.0))
        total += seg
    return total


def fr_estimate(
    rho: DensityMatrix,
    sigma: DensityMatrix,
    control_points: int = 3,
    iterations: int = 20,
    seed: int = 0,
) -> float:
    """Variational upper path: cos of half the shortest RLD length found.

    The search space is the exact commutative geodesic plus piecewise
    square-root-factor paths refined by coordinate descent, so the result
    always lies in [F_min, F] up to quadrature noise.
    """
    _require_positive(rho)
    _require_positive(sigma)
    fmin_val = f_min(rho, sigma)
    if fmin_val >= 1.0 - 1e-12:
        return 1.0
    best = 2.0 * math.acos(fmin_val)  # exact length of the commutative geodesic

    geo = fmin_geodesic(rho, sigma, n_samples=control_points + 2)
    anchors = [matrix_sqrt(s.matrix).entries.astype(complex) for s in geo.states]
    try:
        current = _chart_length(anchors)
    except DomainError:
        return math.cos(0.5 * best)
    best = min(best, current)

    rng = rng_for(seed)
    scale = float(np.mean([np.linalg.norm(a) for a in anchors]))
    step = 0.1 * scale
    shrink_levels = 0
    d = rho.dim
    for _ in range(iterations):
        improved = False
        for i in range(1, len(anchors) - 1):
            direction = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
            direction /= np.linalg.norm(direction)
            for sign in (1.0, -1.0):
                trial = [a.copy() for a in anchors]
                trial[i] = trial[i] + sign * step * direction
                try:
                    length = _chart_length(trial)
                except DomainError:
                    continue
                if length < current - 1e-12:
                    anchors = trial
                    current = length
                    improved = True
                    break
        best = min(best, current)
        if not improved:
            step *= 0.5
            shrink_levels += 1
            if shrink_levels >= 12:
                break
    return float(min(math.cos(0.5 * best), 1.0))


@dataclass(frozen=True)
class ExpansionReport:
    eps: tuple[float, ...]
    residuals: tuple[float, ...]
    slope: float
    arccos_bound_ok: bool


def arccos_bound_holds(grid_step: float = 1e-3, slack: float = 1e-9) -> bool:
    """arccos F <= sqrt(2 (1-F) (1 + (1-F)/6)) on a uniform grid of F.

    Evaluated exactly as written; the check reports honestly and this form
    is in fact violated for small F (at F = 0 the left side is pi/2 while
    the right side is sqrt(7/3)).  See :func:`arccos_product_bound_holds`
    for the version with the correction factor outside the root, which
    does hold on all of [0, 1].
    """
    grid = np.arange(0.0, 1.0 + grid_step / 2, grid_step)
    lhs = np.arccos(np.clip(grid, 0.0, 1.0))
    rhs = np.sqrt(2.0 * (1.0 - grid) * (1.0 + (1.0 - grid) / 6.0))
    return bool(np.all(lhs <= rhs + slack))


def arccos_product_bound_holds(grid_step: float = 1e-3, slack: float = 1e-9) -> bool:
    """arccos F <= sqrt(2 (1-F)) * (1 + (1-F)/6) on a uniform grid of F."""
    grid = np.arange(0.0, 1.0 + grid_step / 2, grid_step)
    lhs = np.arccos(np.clip(grid, 0.0, 1.0))
    rhs = np.sqrt(2.0 * (1.0 - grid)) * (1.0 + (1.0 - grid) / 6.0)
    return bool(np.all(lhs <= rhs + slack))


def expansion_check(
    tp: TangentPoint,
    eps_list: Sequence[float] = (1e-1, 5e-2, 2.5e-2, 1.25e-2),
    which: str = "fmin",
) -> ExpansionReport:
    """Order-of-convergence of 1 - F(rho, rho + eps drho) = eps^2 J / 8 + O(eps^3).

    ``which`` selects F_min (against J^R) or the Uhlmann fidelity (against
    J^S).  The fitted log-log slope of the residual should sit near 3.
    """
    if which not in ("fmin", "uhlmann"):
        raise ValidationError("which must be 'fmin' or 'uhlmann'")
    rep = fisher_both(tp)
    j = rep.j_rld if which == "fmin" else rep.j_sld
    residuals = []
    for eps in eps_list:
        shifted = tp.state.mat + eps * tp.velocity.entries
        if np.linalg.eigvalsh(0.5 * (shifted + shifted.conj().T))[0] < -1e-8:
            raise DomainError(f"state leaves the PSD cone at eps = {eps}")
        sigma = make_density(shifted)
        fid = f_min(tp.state, sigma) if which == "fmin" else uhlmann_fidelity(tp.state, sigma)
        residuals.append(abs(fid - (1.0 - eps * eps * j / 8.0)))
    if all(r == 0.0 for r in residuals):
        slope = math.inf
    else:
        floor = 1e-300
        slope = float(
            np.polyfit(np.log(np.asarray(eps_list)), np.log(np.maximum(residuals, floor)), 1)[0]
        )
    return ExpansionReport(
        eps=tuple(eps_list),
        residuals=tuple(residuals),
        slope=slope,
        arccos_bound_ok=arccos_bound_holds(),
    )
