"""Real Lie algebras given by structure constants.

The single convention used throughout the package is

    [X_i, X_j] = sum_k C[i, j, k] X_k

with 0-based indices. Elements are plain coefficient vectors (numpy arrays
of length ``dim``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .report import VerificationReport, tensor_check

DEFAULT_TOLERANCE = 1e-9


class DimensionError(ValueError):
    """An operand does not have the dimension its context requires."""

    def __init__(self, operand: str, expected, got):
        self.operand = operand
        self.expected = expected
        self.got = got
        super().__init__(f"{operand}: expected dimension {expected}, got {got}")


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    structure_constants: np.ndarray
    basis_names: tuple[str, ...] = ()
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        c = _frozen(self.structure_constants)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]) or c.shape[0] == 0:
            raise ValueError(f"structure constants must have shape (m, m, m), got {c.shape}")
        object.__setattr__(self, "structure_constants", c)
        m = c.shape[0]
        names = tuple(self.basis_names) or tuple(f"X{i + 1}" for i in range(m))
        if len(names) != m:
            raise DimensionError("basis_names", m, len(names))
        object.__setattr__(self, "basis_names", names)
        if self.tolerance < 0:
            raise ValueError("tolerance must be non-negative")

    @property
    def dim(self) -> int:
        return self.structure_constants.shape[0]

    def basis(self, i: int) -> np.ndarray:
        e = np.zeros(self.dim)
        e[i] = 1.0
        return e

    def with_tolerance(self, tolerance: float) -> "LieAlgebra":
        return LieAlgebra(self.structure_constants, self.basis_names, tolerance)

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, basis={list(self.basis_names)})"


@dataclass(frozen=True, eq=False)
class LinearMap:
    """Linear map between coefficient spaces, ``matrix`` of shape (target, source)."""

    matrix: np.ndarray
    source_dim: Optional[int] = field(default=None)
    target_dim: Optional[int] = field(default=None)

    def __post_init__(self):
        mat = _frozen(self.matrix)
        if mat.ndim != 2:
            raise ValueError(f"linear map matrix must be 2-dimensional, got shape {mat.shape}")
        rows, cols = mat.shape
        if self.source_dim is not None and self.source_dim != cols:
            raise DimensionError("matrix columns", self.source_dim, cols)
        if self.target_dim is not None and self.target_dim != rows:
            raise DimensionError("matrix rows", self.target_dim, rows)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "source_dim", cols)
        object.__setattr__(self, "target_dim", rows)

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        return cls(np.eye(dim))

    @classmethod
    def zero(cls, source_dim: int, target_dim: int) -> "LinearMap":
        return cls(np.zeros((target_dim, source_dim)))

    def __call__(self, x) -> np.ndarray:
        return self.matrix @ as_vector(x, self.source_dim, "argument")

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if not isinstance(other, LinearMap):
            return NotImplemented
        if other.target_dim != self.source_dim:
            raise DimensionError("composed map", self.source_dim, other.target_dim)
        return LinearMap(self.matrix @ other.matrix)


def as_vector(x, dim: int, operand: str) -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if v.shape != (dim,):
        raise DimensionError(operand, dim, v.shape[0] if v.ndim == 1 else v.shape)
    return v


def bracket(g: LieAlgebra, x, y) -> np.ndarray:
    x = as_vector(x, g.dim, "x")
    y = as_vector(y, g.dim, "y")
    return np.einsum("i,j,ijk->k", x, y, g.structure_constants)


def ad_matrix(g: LieAlgebra, x) -> LinearMap:
    """Matrix of ``y -> [x, y]``; entry (k, j) is sum_i x_i C[i, j, k]."""
    x = as_vector(x, g.dim, "x")
    return LinearMap(np.einsum("i,ijk->kj", x, g.structure_constants))


def jacobiator(g: LieAlgebra) -> np.ndarray:
    """Tensor J[i, j, k, :] = [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j]."""
    c = g.structure_constants
    t = np.einsum("ijl,lkn->ijkn", c, c)
    return t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)


def verify_algebra(g: LieAlgebra) -> VerificationReport:
    """Exhaustively check antisymmetry and the Jacobi identity.

    Antisymmetry covers both C[i, i, :] = 0 and C[i, j, :] = -C[j, i, :].
    """
    c = g.structure_constants
    anti = tensor_check("antisymmetry", c + c.transpose(1, 0, 2), g.tolerance)
    jac = tensor_check("jacobi", jacobiator(g), g.tolerance)
    return VerificationReport((anti, jac))


def check_homomorphism(F: LinearMap, g: LieAlgebra, h: LieAlgebra) -> VerificationReport:
    """Check F([X_i, X_j]) = [F X_i, F X_j] on every basis pair of ``g``.

    The residual at pair (i, j) is lhs - rhs in ``h`` coordinates.
    """
    if F.source_dim != g.dim:
        raise DimensionError("F.source_dim", g.dim, F.source_dim)
    if F.target_dim != h.dim:
        raise DimensionError("F.target_dim", h.dim, F.target_dim)
    M = F.matrix
    lhs = np.einsum("ijk,nk->ijn", g.structure_constants, M)
    rhs = np.einsum("ai,bj,abn->ijn", M, M, h.structure_constants)
    tol = min(g.tolerance, h.tolerance)
    return VerificationReport((tensor_check("homomorphism", lhs - rhs, tol),))


def from_brackets(
    dim: int,
    entries: Sequence[tuple[int, int, int, float]],
    basis_names: Sequence[str] = (),
    tolerance: float = DEFAULT_TOLERANCE,
) -> LieAlgebra:
    """Build an algebra from (i, j, k, c) entries meaning C[i, j, k] = c = -C[j, i, k]."""
    c = np.zeros((dim, dim, dim))
    for i, j, k, val in entries:
        c[i, j, k] = val
        c[j, i, k] = -val
    return LieAlgebra(c, tuple(basis_names), tolerance)


def nonzero_brackets(g: LieAlgebra) -> list[tuple[int, int, int, float]]:
    """Entries (i, j, k, c) with i < j and c != 0, in index order."""
    c = g.structure_constants
    return [
        (i, j, k, float(c[i, j, k]))
        for i in range(g.dim)
        for j in range(i + 1, g.dim)
        for k in range(g.dim)
        if c[i, j, k] != 0
    ]


def is_verified(g: LieAlgebra) -> bool:
    return verify_algebra(g).passed


__all__ = [
    "DEFAULT_TOLERANCE",
    "DimensionError",
    "LieAlgebra",
    "LinearMap",
    "ad_matrix",
    "as_vector",
    "bracket",
    "check_homomorphism",
    "from_brackets",
    "is_verified",
    "jacobiator",
    "nonzero_brackets",
    "verify_algebra",
]
