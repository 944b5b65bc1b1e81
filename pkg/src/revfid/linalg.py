"""Dense Hermitian linear algebra: spectral calculus, PSD utilities,
geometric mean and trace norm.

Every operation symmetrizes its input as (H + H†)/2 before decomposing,
so floating-point drift never leaks non-Hermitian parts downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionMismatchError, DomainError, NotPsdError, ValidationError

# Eigenvalues above -PSD_TOL_FACTOR * ||H||_F are clipped to zero; anything
# lower is a hard PSD violation.  Shared by sqrt/pinv/geometric mean so all
# callers agree on the cone boundary.
PSD_TOL_FACTOR = 1e-10
STRICT_POS_FACTOR = 1e-12


def _as_square_complex(entries) -> np.ndarray:
    a = np.asarray(entries, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(float))):
        raise ValidationError("matrix has non-finite entries")
    return a


@dataclass(frozen=True)
class HermitianMatrix:
    """Complex square matrix with the Hermiticity contract enforced."""

    entries: np.ndarray

    def __post_init__(self):
        a = _as_square_complex(self.entries)
        object.__setattr__(self, "entries", 0.5 * (a + a.conj().T))
        self.entries.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def fro_norm(self) -> float:
        return float(np.linalg.norm(self.entries))


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalue/eigenframe pair, eigenvalues ascending, frame unitary."""

    eigenvalues: np.ndarray
    frame: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.frame * self.eigenvalues) @ self.frame.conj().T


@dataclass(frozen=True)
class PsdReport:
    is_psd: bool
    min_eigenvalue: float
    tolerance_used: float


def _hermitian(H) -> HermitianMatrix:
    if isinstance(H, HermitianMatrix):
        return H
    return HermitianMatrix(H)


def eig_hermitian(H) -> SpectralDecomposition:
    """Eigendecompose a Hermitian matrix; eigenvalues sorted ascending."""
    H = _hermitian(H)
    w, v = np.linalg.eigh(H.entries)
    return SpectralDecomposition(eigenvalues=w, frame=v)


def apply_spectral(H, f: Callable[[float], float]) -> HermitianMatrix:
    """Apply a scalar real map through the eigenbasis of H."""
    dec = eig_hermitian(H)
    with np.errstate(all="ignore"):
        fw = np.array([f(lam) for lam in dec.eigenvalues], dtype=float)
    bad = ~np.isfinite(fw)
    if bad.any():
        lam = dec.eigenvalues[bad][0]
        raise DomainError(f"scalar map undefined at eigenvalue {lam!r}")
    return HermitianMatrix((dec.frame * fw) @ dec.frame.conj().T)


def psd_check(H) -> PsdReport:
    H = _hermitian(H)
    w = np.linalg.eigvalsh(H.entries)
    tol = PSD_TOL_FACTOR * max(1.0, H.fro_norm())
    return PsdReport(is_psd=bool(w[0] >= -tol), min_eigenvalue=float(w[0]), tolerance_used=tol)


def _psd_spectrum(H) -> tuple[np.ndarray, np.ndarray]:
    """Eigensystem with negative eigenvalues clipped; raises if below tolerance."""
    H = _hermitian(H)
    dec = eig_hermitian(H)
    tol = PSD_TOL_FACTOR * max(1.0, H.fro_norm())
    if dec.eigenvalues[0] < -tol:
        report = PsdReport(False, float(dec.eigenvalues[0]), tol)
        raise NotPsdError(
            f"matrix is not PSD: min eigenvalue {dec.eigenvalues[0]:.3e} < -{tol:.3e}",
            report=report,
        )
    return np.clip(dec.eigenvalues, 0.0, None), dec.frame


def matrix_sqrt(P) -> HermitianMatrix:
    """Principal square root of a PSD matrix."""
    w, v = _psd_spectrum(P)
    return HermitianMatrix((v * np.sqrt(w)) @ v.conj().T)


def matrix_pinv(P) -> HermitianMatrix:
    """Moore-Penrose inverse of a PSD matrix; acts as 0 on the kernel."""
    w, v = _psd_spectrum(P)
    cut = PSD_TOL_FACTOR * max(1.0, float(w[-1]) if len(w) else 1.0)
    inv = np.where(w > cut, 1.0 / np.where(w > cut, w, 1.0), 0.0)
    return HermitianMatrix((v * inv) @ v.conj().T)


def matrix_pinv_sqrt(P) -> HermitianMatrix:
    """Moore-Penrose inverse of the square root of a PSD matrix."""
    w, v = _psd_spectrum(P)
    cut = PSD_TOL_FACTOR * max(1.0, float(w[-1]) if len(w) else 1.0)
    inv = np.where(w > cut, 1.0 / np.sqrt(np.where(w > cut, w, 1.0)), 0.0)
    return HermitianMatrix((v * inv) @ v.conj().T)


def support_projector(P) -> HermitianMatrix:
    w, v = _psd_spectrum(P)
    cut = PSD_TOL_FACTOR * max(1.0, float(w[-1]) if len(w) else 1.0)
    mask = (w > cut).astype(float)
    return HermitianMatrix((v * mask) @ v.conj().T)


def _require_strictly_positive(A: HermitianMatrix, *, what: str = "matrix") -> None:
    w = np.linalg.eigvalsh(A.entries)
    if w[0] <= STRICT_POS_FACTOR * max(1.0, A.fro_norm()):
        raise DomainError(
            f"{what} is singular (min eigenvalue {w[0]:.3e}); "
            "regularize explicitly (A + eps*I) before calling"
        )


def geometric_mean(A, B) -> HermitianMatrix:
    """Operator geometric mean A # B = sqrt(A) sqrt(A^-1/2 B A^-1/2) sqrt(A)."""
    A = _hermitian(A)
    B = _hermitian(B)
    if A.dim != B.dim:
        raise DimensionMismatchError(f"dimension mismatch: {A.dim} vs {B.dim}")
    _require_strictly_positive(A, what="first argument of geometric_mean")
    ra = matrix_sqrt(A).entries
    ira = np.linalg.inv(ra)
    inner = matrix_sqrt(HermitianMatrix(ira @ B.entries @ ira.conj().T)).entries
    return HermitianMatrix(ra @ inner @ ra.conj().T)


def weighted_geometric_mean(A, B, alpha: float) -> HermitianMatrix:
    """A #_alpha B = sqrt(A) (A^-1/2 B A^-1/2)^alpha sqrt(A), alpha in (0, 1]."""
    A = _hermitian(A)
    B = _hermitian(B)
    if A.dim != B.dim:
        raise DimensionMismatchError(f"dimension mismatch: {A.dim} vs {B.dim}")
    _require_strictly_positive(A, what="first argument of weighted_geometric_mean")
    ra = matrix_sqrt(A).entries
    ira = np.linalg.inv(ra)
    inner = apply_spectral(
        HermitianMatrix(ira @ B.entries @ ira.conj().T),
        lambda t: max(t, 0.0) ** alpha,
    ).entries
    return HermitianMatrix(ra @ inner @ ra.conj().T)


def trace_norm(X) -> float:
    """Sum of singular values of an arbitrary complex square matrix."""
    a = _as_square_complex(X.entries if isinstance(X, HermitianMatrix) else X)
    return float(np.sum(np.linalg.svd(a, compute_uv=False)))
