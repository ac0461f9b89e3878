"""Dense complex and Hermitian matrix primitives.

Operators are square complex numpy arrays. A bipartite operator on A x B
with local dimensions (n_a, n_b) is an (n_a*n_b) x (n_a*n_b) matrix in
row-major Kronecker ordering, i.e. composite index (a, b) = a*n_b + b.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

# Asymmetry up to this level is treated as rounding noise; beyond it the
# Hermitian part is still taken but a warning is issued.
HERMITICITY_TOL = 1e-12


class DegenerateOperatorError(ValueError):
    """Raised when a quantity is undefined on the zero operator."""


def as_square_matrix(m) -> np.ndarray:
    """Coerce to a finite square complex128 array or raise ValueError."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrix entries must be finite")
    return a


def asymmetry(m) -> float:
    """Max-entry deviation of m from its conjugate transpose."""
    a = np.asarray(m, dtype=np.complex128)
    if a.size == 0:
        return 0.0
    return float(np.abs(a - a.conj().T).max())


def hermitian_part(m, warn_tol: float = HERMITICITY_TOL) -> np.ndarray:
    """(m + m^dag)/2, warning when the asymmetry exceeds warn_tol."""
    a = as_square_matrix(m)
    delta = asymmetry(a)
    if delta > warn_tol:
        warnings.warn(
            f"asymmetry {delta:.3e} exceeds {warn_tol:.1e}; taking the Hermitian part",
            RuntimeWarning,
            stacklevel=2,
        )
    return (a + a.conj().T) / 2


def hermitian_eigen(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix with eigenvalues descending.

    Returns (vals, vecs): vals real and nonincreasing, vecs unitary with
    column k the eigenvector of vals[k], so (vecs * vals) @ vecs^dag
    reconstructs the input.
    """
    vals, vecs = np.linalg.eigh(hermitian_part(m))
    return vals[::-1].copy(), vecs[:, ::-1].copy()


def trace_norm(m) -> float:
    """Trace norm ||m||_1, the sum of singular values.

    For Hermitian m this equals the sum of |eigenvalues| and is the
    unrestricted distinguishability norm of a discrimination operator.
    """
    a = as_square_matrix(m)
    if not a.any():
        return 0.0
    return float(np.linalg.svd(a, compute_uv=False).sum())


def hermitian_sign(m) -> np.ndarray:
    """Spectral sign of a Hermitian matrix; kernel directions map to +1.

    The result s is Hermitian with s^2 = 1 and tr(s m) = ||m||_1, i.e. the
    optimal Hermitian contraction against m.
    """
    vals, vecs = np.linalg.eigh(hermitian_part(m))
    signs = np.where(vals >= 0.0, 1.0, -1.0)
    s = (vecs * signs) @ vecs.conj().T
    return (s + s.conj().T) / 2


def optimal_contraction_complex(m) -> np.ndarray:
    """Unitary c maximizing Re tr(c m), from the polar factors of m.

    tr(c m) = ||m||_1 and real. For a unitary input this is its adjoint;
    by convention the identity is returned for m = 0.
    """
    a = as_square_matrix(m)
    if not a.any():
        return np.eye(a.shape[0], dtype=np.complex128)
    u, _, vh = np.linalg.svd(a)
    return (u @ vh).conj().T


@dataclass(frozen=True, eq=False)
class BipartiteOperator:
    """A square operator on A x B with declared local dimensions.

    When `hermitian` is true the stored matrix is the Hermitian part of the
    input (symmetrized on construction, warning above rounding level). The
    matrix is frozen read-only.
    """

    n_a: int
    n_b: int
    matrix: np.ndarray
    hermitian: bool = True

    def __post_init__(self):
        if self.n_a < 1 or self.n_b < 1:
            raise ValueError(f"local dimensions must be >= 1, got ({self.n_a}, {self.n_b})")
        m = as_square_matrix(self.matrix)
        dim = self.n_a * self.n_b
        if m.shape != (dim, dim):
            raise ValueError(
                f"matrix has shape {m.shape}, expected ({dim}, {dim}) "
                f"for local dimensions ({self.n_a}, {self.n_b})"
            )
        m = hermitian_part(m) if self.hermitian else m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.n_a * self.n_b

    def reshaped(self) -> np.ndarray:
        """The matrix as an (n_a, n_b, n_a, n_b) view."""
        return self.matrix.reshape(self.n_a, self.n_b, self.n_a, self.n_b)

    def is_zero(self) -> bool:
        return not self.matrix.any()


def swap_subsystems(z: BipartiteOperator) -> BipartiteOperator:
    """Exchange the roles of A and B: S z S^dag for the flip S|a,b> = |b,a>."""
    m = z.reshaped().transpose(1, 0, 3, 2).reshape(z.dim, z.dim)
    return BipartiteOperator(z.n_b, z.n_a, m, hermitian=z.hermitian)


def partial_trace(z: BipartiteOperator, keep: str) -> np.ndarray:
    """Trace out one tensor factor.

    keep="A" returns the (n_a, n_a) operator tr_B(z); keep="B" returns the
    (n_b, n_b) operator tr_A(z). Both preserve the total trace.
    """
    r = z.reshaped()
    if keep == "A":
        return np.einsum("ibjb->ij", r)
    if keep == "B":
        return np.einsum("aiaj->ij", r)
    raise ValueError(f'keep must be "A" or "B", got {keep!r}')


def block_frame_sums(u, n_a: int, n_b: int) -> tuple[np.ndarray, np.ndarray]:
    """Sum_ij B_ij B_ij^dag and Sum_ij B_ij^dag B_ij over the n_a x n_a grid
    of n_b x n_b blocks B_ij of u.

    For unitary u both sums equal n_a times the identity on the second
    factor; the same identity for matrix units is what makes n_a the right
    scale for product-witness lower bounds.
    """
    a = as_square_matrix(u)
    if a.shape[0] != n_a * n_b:
        raise ValueError(f"matrix of size {a.shape[0]} does not split into ({n_a}, {n_b}) blocks")
    b = a.reshape(n_a, n_b, n_a, n_b)
    left = np.einsum("ipjq,irjq->pr", b, b.conj())
    right = np.einsum("iqjp,iqjr->pr", b.conj(), b)
    return left, right
