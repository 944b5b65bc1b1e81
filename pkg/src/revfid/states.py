"""Quantum states, classical distributions, channels, measurements, and the
seeded random generators that drive the property suites.

All random_* functions are pure in (parameters, seed): they build a fresh
``numpy`` generator from the seed, so repeated calls agree bit-for-bit.
Parallel trials should use distinct (seed, stream) pairs via
:func:`rng_for`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError, ValidationError
from .linalg import HermitianMatrix, trace_norm

TRACE_TOL = 1e-8
EIG_TOL = 1e-8


def rng_for(seed: int, stream: int = 0) -> np.random.Generator:
    """Independent generator for (seed, stream); streams never share state."""
    return np.random.default_rng([int(seed), int(stream)])


@dataclass(frozen=True)
class DensityMatrix:
    """Unit-trace PSD Hermitian matrix."""

    matrix: HermitianMatrix

    def __post_init__(self):
        m = self.matrix.entries
        tr = float(np.trace(m).real)
        if abs(tr - 1.0) > 1e-10:
            raise ValidationError(f"density matrix trace {tr} deviates from 1")
        if np.linalg.eigvalsh(m)[0] < -1e-10:
            raise ValidationError("density matrix is not PSD within tolerance")

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def mat(self) -> np.ndarray:
        return self.matrix.entries

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.mat)[0])


@dataclass(frozen=True)
class PureState:
    """Unit vector in C^dim."""

    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        n = np.linalg.norm(a)
        if abs(n - 1.0) > 1e-8:
            raise ValidationError(f"state vector norm {n} deviates from 1")
        a = a / n
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def projector(self) -> DensityMatrix:
        return DensityMatrix(HermitianMatrix(np.outer(self.amplitudes, self.amplitudes.conj())))


@dataclass(frozen=True)
class ProbDist:
    """Finite probability distribution; tiny negative weights are clipped."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        if w.min(initial=0.0) < -1e-10:
            raise ValidationError(f"negative weight {w.min()} in probability vector")
        w = np.clip(w, 0.0, None)
        s = w.sum()
        if abs(s - 1.0) > 1e-8:
            raise ValidationError(f"probability weights sum to {s}")
        w = w / s
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def size(self) -> int:
        return self.weights.shape[0]


@dataclass(frozen=True)
class SignedVector:
    """Real vector with a caller-declared total (0 for tangent vectors)."""

    values: np.ndarray
    total: float = 0.0

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).reshape(-1)
        if abs(v.sum() - self.total) > 1e-9:
            raise ValidationError(f"values sum to {v.sum()}, declared total {self.total}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def size(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class Channel:
    """CPTP map in Kraus form."""

    kraus: tuple[np.ndarray, ...]

    def __post_init__(self):
        ks = tuple(np.asarray(k, dtype=complex) for k in self.kraus)
        if not ks:
            raise ValidationError("channel needs at least one Kraus operator")
        shape = ks[0].shape
        if any(k.shape != shape for k in ks):
            raise ValidationError("Kraus operators have inconsistent shapes")
        comp = sum(k.conj().T @ k for k in ks)
        if np.linalg.norm(comp - np.eye(shape[1])) > 1e-8:
            raise ValidationError("Kraus operators do not satisfy completeness")
        for k in ks:
            k.setflags(write=False)
        object.__setattr__(self, "kraus", ks)

    @property
    def dim_in(self) -> int:
        return self.kraus[0].shape[1]

    @property
    def dim_out(self) -> int:
        return self.kraus[0].shape[0]


def make_density(entries) -> DensityMatrix:
    """Validate and normalize an array into a DensityMatrix.

    Symmetrizes, clips eigenvalues in [-1e-8, 0) to zero, renormalizes a
    trace within 1e-8 of one; anything worse is rejected with diagnostics.
    """
    h = HermitianMatrix(entries)
    tr = float(np.trace(h.entries).real)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValidationError(f"trace {tr} deviates from 1 by more than {TRACE_TOL}")
    w, v = np.linalg.eigh(h.entries)
    if w[0] < -EIG_TOL:
        raise ValidationError(f"min eigenvalue {w[0]:.3e} below -{EIG_TOL}")
    w = np.clip(w, 0.0, None)
    w = w / w.sum()
    return DensityMatrix(HermitianMatrix((v * w) @ v.conj().T))


def _ginibre(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_density(dim: int, rank: int, seed: int) -> DensityMatrix:
    """Ginibre-induced random state of the given rank."""
    if not 1 <= rank <= dim:
        raise ValidationError(f"rank {rank} out of range for dim {dim}")
    g = _ginibre(rng_for(seed), dim, rank)
    m = g @ g.conj().T
    return DensityMatrix(HermitianMatrix(m / np.trace(m).real))


def random_pure(dim: int, seed: int) -> PureState:
    v = _ginibre(rng_for(seed), dim, 1).reshape(-1)
    return PureState(v / np.linalg.norm(v))


def random_channel(dim_in: int, dim_out: int, kraus_count: int, seed: int) -> Channel:
    """Random CPTP map: QR isometry into dim_out x kraus_count, sliced."""
    if kraus_count < 1:
        raise ValidationError("kraus_count must be >= 1")
    if dim_out * kraus_count < dim_in:
        raise ValidationError("dim_out * kraus_count must be >= dim_in for an isometry")
    g = _ginibre(rng_for(seed), dim_out * kraus_count, dim_in)
    q, r = np.linalg.qr(g)
    # fix the phase convention so the isometry is a pure function of the seed
    q = q * np.sign(np.diag(r).real)
    kraus = [q[i * dim_out : (i + 1) * dim_out, :] for i in range(kraus_count)]
    return Channel(tuple(kraus))


def apply_channel(lam: Channel, rho: DensityMatrix) -> DensityMatrix:
    if lam.dim_in != rho.dim:
        raise DimensionMismatchError(f"channel input dim {lam.dim_in} != state dim {rho.dim}")
    out = sum(k @ rho.mat @ k.conj().T for k in lam.kraus)
    return make_density(out)


def preparation_channel(columns: np.ndarray) -> Channel:
    """Channel sending the x-th basis distribution to the pure state in column x."""
    n = np.asarray(columns, dtype=complex)
    dim, m = n.shape
    kraus = []
    for x in range(m):
        k = np.zeros((dim, m), dtype=complex)
        k[:, x] = n[:, x]
        kraus.append(k)
    return Channel(tuple(kraus))


def embed_classical(p: ProbDist) -> DensityMatrix:
    return DensityMatrix(HermitianMatrix(np.diag(p.weights.astype(complex))))


def measure(effects: Sequence, rho: DensityMatrix) -> ProbDist:
    """Born probabilities tr(E_x rho) for a POVM given as a list of effects."""
    mats = [e.entries if isinstance(e, HermitianMatrix) else np.asarray(e, dtype=complex) for e in effects]
    if any(m.shape != (rho.dim, rho.dim) for m in mats):
        raise DimensionMismatchError("effect dimensions do not match the state")
    total = sum(mats)
    if np.linalg.norm(total - np.eye(rho.dim)) > 1e-8:
        raise ValidationError("effects do not sum to the identity (incomplete POVM)")
    for m in mats:
        if np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0] < -1e-9:
            raise ValidationError("effect is not PSD")
    w = np.array([float(np.trace(m @ rho.mat).real) for m in mats])
    return ProbDist(np.clip(w, 0.0, None))


def basis_measurement(frame: np.ndarray) -> list[np.ndarray]:
    """Rank-one projectors onto the columns of a unitary frame."""
    f = np.asarray(frame, dtype=complex)
    return [np.outer(f[:, i], f[:, i].conj()) for i in range(f.shape[1])]


def tensor(rho: DensityMatrix, sigma: DensityMatrix) -> DensityMatrix:
    return make_density(np.kron(rho.mat, sigma.mat))


def random_tangent(dim: int, seed: int, scale: float = 0.2) -> tuple[DensityMatrix, HermitianMatrix]:
    """Full-rank state plus a traceless Hermitian velocity (property-suite fuel).

    The velocity is scaled relative to the state's smallest eigenvalue so
    that rho + eps * v stays PSD for eps up to roughly 1/scale.
    """
    rho = random_density(dim, dim, seed)
    g = _ginibre(rng_for(seed, stream=1), dim, dim)
    v = 0.5 * (g + g.conj().T)
    v = v - np.trace(v).real * np.eye(dim) / dim
    norm = np.linalg.norm(v)
    if norm > 0:
        v = v * (scale * rho.min_eigenvalue() / norm) * dim
    return rho, HermitianMatrix(v)


def state_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    """Trace-norm distance used in residual checks."""
    return trace_norm(a.mat - b.mat)
