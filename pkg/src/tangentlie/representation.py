"""Matrix representations and their block-matrix prolongation to T(g)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_TOLERANCE, DimensionError, LieAlgebra, ad_matrix, as_vector
from .report import VerificationReport, tensor_check


class InvalidRepresentationError(ValueError):
    def __init__(self, report: VerificationReport):
        self.report = report
        super().__init__(f"representation failed its homomorphism check:\n{report}")


@dataclass(frozen=True, eq=False)
class Representation:
    """``matrices[i]`` is the image of basis element X_i, each of shape (degree, degree)."""

    matrices: np.ndarray
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        mats = np.array(self.matrices, dtype=float)
        if mats.ndim != 3 or mats.shape[1] != mats.shape[2] or mats.shape[0] == 0:
            raise ValueError(f"expected a stack of square matrices, got shape {mats.shape}")
        mats.setflags(write=False)
        object.__setattr__(self, "matrices", mats)

    @property
    def algebra_dim(self) -> int:
        return self.matrices.shape[0]

    @property
    def degree(self) -> int:
        return self.matrices.shape[1]

    @classmethod
    def zero(cls, algebra_dim: int, degree: int) -> "Representation":
        return cls(np.zeros((algebra_dim, degree, degree)))

    @classmethod
    def adjoint(cls, g: LieAlgebra) -> "Representation":
        return cls(np.stack([ad_matrix(g, g.basis(i)).matrix for i in range(g.dim)]), g.tolerance)


def apply(rep: Representation, x) -> np.ndarray:
    x = as_vector(x, rep.algebra_dim, "x")
    return np.einsum("i,iab->ab", x, rep.matrices)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def check_representation(rep: Representation, g: LieAlgebra) -> VerificationReport:
    """Check phi([X_i, X_j]) = [phi(X_i), phi(X_j)] for all basis pairs (i, j)."""
    if rep.algebra_dim != g.dim:
        raise DimensionError("rep.algebra_dim", g.dim, rep.algebra_dim)
    P = rep.matrices
    lhs = np.einsum("ijk,kab->ijab", g.structure_constants, P)
    rhs = np.einsum("iab,jbc->ijac", P, P)
    rhs = rhs - rhs.transpose(1, 0, 2, 3)
    n = rep.degree
    residual = (lhs - rhs).reshape(g.dim, g.dim, n * n)
    tol = min(rep.tolerance, g.tolerance)
    return VerificationReport((tensor_check("representation", residual, tol),))


def prolong_representation(
    rep: Representation, g: LieAlgebra, *, check: bool = True
) -> Representation:
    """Degree-2n representation of T(g).

    Complete lifts map to block-diag(phi(X_i), phi(X_i)); vertical lifts map
    to the matrix with phi(X_i) in the lower-left block and zeros elsewhere.
    """
    if check:
        report = check_representation(rep, g)
        if not report.passed:
            raise InvalidRepresentationError(report)
    m, n = rep.algebra_dim, rep.degree
    out = np.zeros((2 * m, 2 * n, 2 * n))
    out[:m, :n, :n] = rep.matrices
    out[:m, n:, n:] = rep.matrices
    out[m:, n:, :n] = rep.matrices
    return Representation(out, rep.tolerance)


def prolonged_matrix(rep: Representation, complete, vertical) -> np.ndarray:
    """Block form ((phi(b), 0), (phi(a), phi(b))) for complete part b and vertical part a."""
    pb = apply(rep, complete)
    pa = apply(rep, vertical)
    return np.block([[pb, np.zeros_like(pb)], [pa, pb]])


def kernel_dimension(rep: Representation) -> int:
    """Dimension of the kernel of x -> apply(rep, x).

    Rank counts singular values above tolerance times the largest one, or
    above the bare tolerance when every matrix is zero.
    """
    cols = rep.matrices.reshape(rep.algebra_dim, -1).T
    s = np.linalg.svd(cols, compute_uv=False)
    top = s[0] if s.size else 0.0
    threshold = rep.tolerance * top if top > 0 else rep.tolerance
    return rep.algebra_dim - int(np.count_nonzero(s > threshold))

