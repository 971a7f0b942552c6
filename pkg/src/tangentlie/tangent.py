"""The tangent Lie algebra T(g) = g x g and its lift coordinates.

A tangent element is a pair (base, fiber) of coefficient vectors. Under the
lift map it becomes sum_i base_i X_i^C + fiber_i X_i^V in the 2m-dimensional
algebra whose basis is ordered complete lifts first, then vertical lifts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    DimensionError,
    LieAlgebra,
    LinearMap,
    as_vector,
    bracket,
    verify_algebra,
)


class UnverifiedAlgebraError(ValueError):
    """Raised when an operation needs an algebra that passes ``verify_algebra``."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"algebra failed verification:\n{report}")


@dataclass(frozen=True)
class TangentElement:
    base: np.ndarray
    fiber: np.ndarray

    def __post_init__(self):
        base = np.asarray(self.base, dtype=float)
        fiber = np.asarray(self.fiber, dtype=float)
        if base.ndim != 1:
            raise DimensionError("base", "a vector", base.shape)
        if fiber.shape != base.shape:
            raise DimensionError("fiber", base.shape[0], fiber.shape[0] if fiber.ndim == 1 else fiber.shape)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "fiber", fiber)

    @property
    def dim(self) -> int:
        return self.base.shape[0]

    def __add__(self, other: "TangentElement") -> "TangentElement":
        return TangentElement(self.base + other.base, self.fiber + other.fiber)

    def __neg__(self) -> "TangentElement":
        return TangentElement(-self.base, -self.fiber)

    def __sub__(self, other: "TangentElement") -> "TangentElement":
        return self + (-other)

    def __mul__(self, scalar: float) -> "TangentElement":
        return TangentElement(scalar * self.base, scalar * self.fiber)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TangentElement):
            return NotImplemented
        return np.array_equal(self.base, other.base) and np.array_equal(self.fiber, other.fiber)

    def __hash__(self):
        return hash((self.base.tobytes(), self.fiber.tobytes()))

    def to_vector(self) -> np.ndarray:
        return np.concatenate([self.base, self.fiber])

    @classmethod
    def zero(cls, dim: int) -> "TangentElement":
        return cls(np.zeros(dim), np.zeros(dim))


@dataclass(frozen=True, eq=False)
class TangentAlgebra(LieAlgebra):
    """A 2m-dimensional :class:`LieAlgebra` remembering the algebra it was built from."""

    parent: LieAlgebra = None

    @property
    def parent_dim(self) -> int:
        return self.parent.dim

    @property
    def underlying(self) -> LieAlgebra:
        return self


def _check_member(g: LieAlgebra, p: TangentElement, operand: str) -> None:
    if p.dim != g.dim:
        raise DimensionError(operand, g.dim, p.dim)


def tangent_bracket(g: LieAlgebra, p: TangentElement, q: TangentElement) -> TangentElement:
    """Bracket on T(g): ([x, y], [x, w] + [v, y]) for p = (x, v), q = (y, w)."""
    _check_member(g, p, "p")
    _check_member(g, q, "q")
    base = bracket(g, p.base, q.base)
    fiber = bracket(g, p.base, q.fiber) + bracket(g, p.fiber, q.base)
    return TangentElement(base, fiber)


def tangent_structure_constants(c: np.ndarray) -> np.ndarray:
    m = c.shape[0]
    t = np.zeros((2 * m, 2 * m, 2 * m))
    t[:m, :m, :m] = c           # [X_i^C, X_j^C] = C_ij^k X_k^C
    t[:m, m:, m:] = c           # [X_i^C, X_j^V] = C_ij^k X_k^V
    t[m:, :m, m:] = c           # [X_i^V, X_j^C] = C_ij^k X_k^V
    return t


def tangent_algebra(g: LieAlgebra, *, check: bool = True) -> TangentAlgebra:
    """Build T(g) with basis (X_1^C..X_m^C, X_1^V..X_m^V).

    Raises :class:`UnverifiedAlgebraError` if ``g`` fails ``verify_algebra``
    (pass ``check=False`` to skip the guard).
    """
    if check:
        report = verify_algebra(g)
        if not report.passed:
            raise UnverifiedAlgebraError(report)
    names = tuple(f"{n}^C" for n in g.basis_names) + tuple(f"{n}^V" for n in g.basis_names)
    return TangentAlgebra(
        tangent_structure_constants(g.structure_constants),
        names,
        g.tolerance,
        parent=g,
    )


def omega(g: LieAlgebra, p: TangentElement) -> np.ndarray:
    """Lift coordinates of ``p``: the concatenation base || fiber."""
    _check_member(g, p, "p")
    return p.to_vector()


def omega_inverse(g: LieAlgebra, e) -> TangentElement:
    e = np.asarray(e, dtype=float)
    if e.ndim != 1 or e.shape[0] % 2:
        raise DimensionError("e", "an even length", e.shape)
    as_vector(e, 2 * g.dim, "e")
    m = g.dim
    return TangentElement(e[:m].copy(), e[m:].copy())


def tangent_map(F: LinearMap) -> LinearMap:
    """The induced map (base, fiber) -> (F base, F fiber) on lift coordinates."""
    M = F.matrix
    z = np.zeros_like(M)
    return LinearMap(np.block([[M, z], [z, M]]))


def is_vertical_ideal(t: TangentAlgebra) -> bool:
    """True if the vertical lifts span an abelian ideal of ``t`` (exact zero test)."""
    m = t.parent_dim
    c = t.structure_constants
    verticals_commute = not np.any(c[m:, m:, :])
    into_vertical = not np.any(c[:, m:, :m]) and not np.any(c[m:, :, :m])
    return verticals_commute and into_vertical
