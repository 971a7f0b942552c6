"""Sampled checks of the affine-map identities behind the tangent bracket.

Every map involved is affine on the coefficient space, ``x -> M x + offset``:

* ``left(a)``      x -> [a, x]
* ``right(a)``     x -> [x, a]
* ``scale(lam)``   x -> lam x
* ``translate(b)`` x -> x + b

The tangent map of an affine map sends a tangent vector (p, v) to
(M p + offset, M v). Identities involving a sum of maps inside the tangent
functor are evaluated as a sum of tangent vectors over one common base
point: each summand must land on the right-hand side's base point, and the
fibers add.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algebra import LieAlgebra, ad_matrix, bracket
from .report import Check, VerificationReport


@dataclass(frozen=True)
class AffineMap:
    matrix: np.ndarray
    offset: np.ndarray

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.matrix @ x + self.offset

    def __matmul__(self, other: "AffineMap") -> "AffineMap":
        return AffineMap(self.matrix @ other.matrix, self.matrix @ other.offset + self.offset)

    def tangent(self, point: np.ndarray, vector: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return self(point), self.matrix @ vector


class _Maps:
    """Factory for the elementary affine maps of one algebra."""

    def __init__(self, g: LieAlgebra):
        self.g = g
        self.m = g.dim
        self._c = g.structure_constants

    def br(self, x, y):
        return bracket(self.g, x, y)

    def left(self, a) -> AffineMap:
        return AffineMap(ad_matrix(self.g, a).matrix, np.zeros(self.m))

    def right(self, a) -> AffineMap:
        # entry (k, i) is sum_j a_j C[i, j, k]
        return AffineMap(np.einsum("j,ijk->ki", a, self._c), np.zeros(self.m))

    def scale(self, lam: float) -> AffineMap:
        return AffineMap(lam * np.eye(self.m), np.zeros(self.m))

    def translate(self, b) -> AffineMap:
        return AffineMap(np.eye(self.m), np.asarray(b, dtype=float))


def _pointwise(lhs: AffineMap, rhs: AffineMap, x: np.ndarray) -> float:
    return float(np.max(np.abs(lhs(x) - rhs(x))))


def _tangent_sum(lhs: Sequence[AffineMap], rhs: AffineMap, point, vector) -> float:
    base, fiber = rhs.tangent(point, vector)
    worst = 0.0
    total = np.zeros_like(fiber)
    for f in lhs:
        b, v = f.tangent(point, vector)
        worst = max(worst, float(np.max(np.abs(b - base))))
        total = total + v
    return max(worst, float(np.max(np.abs(total - fiber))))


def _tangent_oplus(lhs: Sequence[AffineMap], rhs: AffineMap, point, vector) -> float:
    """Component-wise sum of tangent vectors: (p1 + p2, v1 + v2)."""
    base, fiber = rhs.tangent(point, vector)
    sb = np.zeros_like(base)
    sv = np.zeros_like(fiber)
    for f in lhs:
        b, v = f.tangent(point, vector)
        sb, sv = sb + b, sv + v
    return max(float(np.max(np.abs(sb - base))), float(np.max(np.abs(sv - fiber))))


# Each identity takes (maps, a, b, c, lam, x, vector) and returns a residual.
def _left_is_negated_right(M, a, b, c, lam, x, v):
    return _pointwise(M.left(a), M.scale(-1) @ M.right(a), x)


def _right_is_negated_left(M, a, b, c, lam, x, v):
    return _pointwise(M.right(b), M.scale(-1) @ M.left(b), x)


def _right_commutes_with_scaling(M, a, b, c, lam, x, v):
    return _pointwise(M.right(b) @ M.scale(lam), M.scale(lam) @ M.right(b), x)


def _left_scales_with_argument(M, a, b, c, lam, x, v):
    return _pointwise(M.left(lam * a), M.scale(lam) @ M.left(a), x)


def _right_shifts_translation(M, a, b, c, lam, x, v):
    lhs = M.right(c) @ M.translate(b)
    rhs = M.translate(M.br(b, c)) @ M.right(c)
    return _pointwise(lhs, rhs, x)


def _tangent_left_additive(M, a, b, c, lam, x, v):
    # (c, v) is a tangent vector at c
    return _tangent_oplus([M.left(a), M.left(b)], M.left(a + b), c, v)


def _jacobi_first_slot(M, a, b, c, lam, x, v):
    bc_a = M.br(M.br(b, c), a)
    ab_c = M.br(M.br(a, b), c)
    lhs = [
        M.translate(bc_a) @ M.right(c) @ M.right(b),
        M.translate(ab_c) @ M.left(M.br(b, c)),
    ]
    rhs = M.scale(-1) @ M.right(b) @ M.left(c)
    return _tangent_sum(lhs, rhs, a, v)


def _jacobi_second_slot(M, a, b, c, lam, x, v):
    bc_a = M.br(M.br(b, c), a)
    ab_c = M.br(M.br(a, b), c)
    lhs = [
        M.translate(bc_a) @ M.right(c) @ M.left(a),
        M.translate(ab_c) @ M.right(a) @ M.right(c),
    ]
    rhs = M.scale(-1) @ M.left(M.br(c, a))
    return _tangent_sum(lhs, rhs, b, v)


def _jacobi_third_slot(M, a, b, c, lam, x, v):
    bc_a = M.br(M.br(b, c), a)
    ab_c = M.br(M.br(a, b), c)
    lhs = [
        M.translate(bc_a) @ M.left(M.br(a, b)),
        M.translate(ab_c) @ M.right(a) @ M.left(b),
    ]
    rhs = M.scale(-1) @ M.right(b) @ M.right(a)
    return _tangent_sum(lhs, rhs, c, v)


IDENTITIES: tuple[tuple[str, Callable], ...] = (
    ("left_is_negated_right", _left_is_negated_right),
    ("right_is_negated_left", _right_is_negated_left),
    ("right_commutes_with_scaling", _right_commutes_with_scaling),
    ("left_scales_with_argument", _left_scales_with_argument),
    ("right_shifts_translation", _right_shifts_translation),
    ("tangent_left_additive", _tangent_left_additive),
    ("tangent_jacobi_first_slot", _jacobi_first_slot),
    ("tangent_jacobi_second_slot", _jacobi_second_slot),
    ("tangent_jacobi_third_slot", _jacobi_third_slot),
)


def verify_appendix_identities(g: LieAlgebra, samples: int, seed: int) -> VerificationReport:
    """Evaluate the nine identities on ``samples`` seeded random draws.

    Coefficients are uniform in [-1, 1]; the scalar is uniform in [-2, 2].
    Each check reports its max residual and the first failing sample index.
    Failures are report content: this never raises for an invalid algebra.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    M = _Maps(g)
    m = g.dim
    residuals = np.zeros((len(IDENTITIES), samples))
    for s in range(samples):
        a, b, c, x, v = rng.uniform(-1.0, 1.0, size=(5, m))
        lam = rng.uniform(-2.0, 2.0)
        for n, (_, fn) in enumerate(IDENTITIES):
            residuals[n, s] = fn(M, a, b, c, lam, x, v)
    checks = []
    for n, (name, _) in enumerate(IDENTITIES):
        row = residuals[n]
        worst = float(row.max())
        bad = np.flatnonzero(row > g.tolerance)
        if len(bad):
            checks.append(Check(name, False, worst, (int(bad[0]),)))
        else:
            checks.append(Check(name, True, worst))
    return VerificationReport(tuple(checks))
