"""Matrix groups: exponential, the tangent-bundle embedding into GL(2n), and
numerical differentiation of prolonged group representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, log2
from typing import Optional, Sequence

import numpy as np

from .algebra import DimensionError, LieAlgebra
from .report import Check, VerificationReport
from .representation import Representation, apply, check_representation, prolong_representation

MAX_CONDITION = 1e12
DEFAULT_STEP = 1e-5


def matrix_exp(A) -> np.ndarray:
    """Exponential by scaling and squaring with a truncated Taylor series.

    The matrix is scaled by 2**-s so its 1-norm is at most 1/2, the series
    is summed until terms stop changing the result, then squared s times.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"matrix_exp needs a square matrix, got shape {A.shape}")
    n = A.shape[0]
    norm = np.linalg.norm(A, 1)
    s = max(0, int(ceil(log2(norm / 0.5)))) if norm > 0.5 else 0
    X = A / 2.0**s
    result = np.eye(n)
    term = np.eye(n)
    for k in range(1, 30):
        term = term @ X / k
        result = result + term
        if np.max(np.abs(term)) <= np.finfo(float).eps * np.max(np.abs(result)):
            break
    for _ in range(s):
        result = result @ result
    return result


@dataclass(frozen=True, eq=False)
class MatrixGroupElementPair:
    """A point g of a matrix group with a tangent vector A at g (ambient coordinates)."""

    group_part: np.ndarray
    tangent_part: np.ndarray

    def __post_init__(self):
        g = np.array(self.group_part, dtype=float)
        a = np.array(self.tangent_part, dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise ValueError(f"group part must be square, got shape {g.shape}")
        if a.shape != g.shape:
            raise DimensionError("tangent_part", g.shape, a.shape)
        if not np.all(np.isfinite(g)) or np.linalg.cond(g) > MAX_CONDITION:
            raise np.linalg.LinAlgError("group part is singular (condition number above 1e12)")
        object.__setattr__(self, "group_part", g)
        object.__setattr__(self, "tangent_part", a)

    @property
    def n(self) -> int:
        return self.group_part.shape[0]

    def __mul__(self, other: "MatrixGroupElementPair") -> "MatrixGroupElementPair":
        g1, a1 = self.group_part, self.tangent_part
        g2, a2 = other.group_part, other.tangent_part
        return MatrixGroupElementPair(g1 @ g2, a1 @ g2 + g1 @ a2)

    @classmethod
    def identity(cls, n: int) -> "MatrixGroupElementPair":
        return cls(np.eye(n), np.zeros((n, n)))


def j_embed(p: MatrixGroupElementPair) -> np.ndarray:
    """Block matrix ((g, 0), (A, g))."""
    g, a = p.group_part, p.tangent_part
    return np.block([[g, np.zeros_like(g)], [a, g]])


def central_difference(f, h: float) -> np.ndarray:
    return (f(h) - f(-h)) / (2.0 * h)


def _coefficients(realization: np.ndarray, target: np.ndarray, what: str) -> np.ndarray:
    """Coefficients y with sum_i y_i realization[i] = target (least squares, checked)."""
    basis = realization.reshape(realization.shape[0], -1).T
    y, *_ = np.linalg.lstsq(basis, target.ravel(), rcond=None)
    miss = np.max(np.abs(basis @ y - target.ravel())) if target.size else 0.0
    scale = max(1.0, float(np.max(np.abs(target))))
    if miss > 1e-8 * scale:
        raise ValueError(f"{what} is not in the span of the matrix realization (residual {miss:.3g})")
    return y


def _phi_of_product(rep: Representation, factors: Sequence[np.ndarray]) -> np.ndarray:
    out = np.eye(rep.degree)
    for x in factors:
        out = out @ matrix_exp(apply(rep, x))
    return out


def prolonged_group_rep(
    rep: Representation,
    g: LieAlgebra,
    p: MatrixGroupElementPair,
    realization: Representation,
    factorization: Optional[Sequence] = None,
    h: float = DEFAULT_STEP,
) -> np.ndarray:
    """Matrix ((Phi(g), 0), (dPhi_g(A), Phi(g))) of the prolonged group representation.

    ``factorization`` is a list of algebra elements x_1..x_r with
    g = exp(R x_1) ... exp(R x_r) in the matrix ``realization`` R; Phi is
    then exp(phi x_1) ... exp(phi x_r). It may be omitted only when g is the
    identity. dPhi_g(A) is a central difference along t -> g exp(t g^-1 A),
    taken in the unit direction and rescaled (the differential is linear in A).
    """
    if rep.algebra_dim != g.dim:
        raise DimensionError("rep.algebra_dim", g.dim, rep.algebra_dim)
    if realization.algebra_dim != g.dim:
        raise DimensionError("realization.algebra_dim", g.dim, realization.algebra_dim)
    if realization.degree != p.n:
        raise DimensionError("group element", realization.degree, p.n)
    gm = p.group_part
    if factorization is None:
        if not np.allclose(gm, np.eye(p.n), rtol=0.0, atol=1e-12):
            raise ValueError("a factorization into exponentials is required for non-identity group elements")
        factorization = []
    factors = [np.asarray(x, dtype=float) for x in factorization]
    rebuilt = _phi_of_product(realization, factors)
    if np.max(np.abs(rebuilt - gm)) > 1e-8 * max(1.0, float(np.max(np.abs(gm)))):
        raise ValueError("factorization does not reproduce the group element")

    phi_g = _phi_of_product(rep, factors)
    y = _coefficients(realization.matrices, np.linalg.solve(gm, p.tangent_part), "g^-1 A")
    size = float(np.linalg.norm(y))
    if size == 0.0:
        d_phi = np.zeros_like(phi_g)
    else:
        unit = apply(rep, y / size)
        d_phi = size * central_difference(lambda t: phi_g @ matrix_exp(t * unit), h)
    return np.block([[phi_g, np.zeros_like(phi_g)], [d_phi, phi_g]])


def final_proposition_deviation(
    rep: Representation,
    g: LieAlgebra,
    realization: Representation,
    complete,
    vertical,
    h: float,
    inner_step: float = DEFAULT_STEP,
) -> float:
    """Max entrywise gap between the derivative of the prolonged group
    representation along t -> (exp(tB), t A exp(tB)) and the prolonged
    algebra representation at (complete, vertical)."""
    b = np.asarray(complete, dtype=float)
    a = np.asarray(vertical, dtype=float)
    B = apply(realization, b)
    A = apply(realization, a)

    def curve(t: float) -> np.ndarray:
        gt = matrix_exp(t * B)
        p = MatrixGroupElementPair(gt, t * A @ gt)
        return prolonged_group_rep(rep, g, p, realization, [t * b], inner_step)

    numeric = central_difference(curve, h)
    expected = apply(prolong_representation(rep, g, check=False), np.concatenate([b, a]))
    return float(np.max(np.abs(numeric - expected)))


def step_tolerance(h: float) -> float:
    return 100.0 * h * h


def check_final_proposition(
    rep: Representation,
    g: LieAlgebra,
    realization: Representation,
    samples: int,
    seed: int,
    h: float = DEFAULT_STEP,
) -> VerificationReport:
    """Compare the prolonged algebra representation with the differential at
    the identity of the prolonged group representation on sampled tangent
    elements (coefficients uniform in [-1, 1]).

    Passes iff the max deviation is at most 100 h**2. The reported location
    is the first sample over that bound.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    if realization.algebra_dim != g.dim:
        raise DimensionError("realization.algebra_dim", g.dim, realization.algebra_dim)
    rep_report = check_representation(rep, g)
    rng = np.random.default_rng(seed)
    devs = np.array([
        final_proposition_deviation(rep, g, realization, *rng.uniform(-1.0, 1.0, size=(2, g.dim)), h)
        for _ in range(samples)
    ])
    tol = step_tolerance(h)
    bad = np.flatnonzero(devs > tol)
    worst = float(devs.max())
    if len(bad):
        check = Check("final_proposition", False, worst, (int(bad[0]),))
    else:
        check = Check("final_proposition", True, worst)
    return VerificationReport(rep_report.checks + (check,))


def convergence_ratio(
    rep: Representation,
    g: LieAlgebra,
    realization: Representation,
    samples: int,
    seed: int,
    h: float,
) -> tuple[float, float, float]:
    """(deviation at h, deviation at h/2, their ratio) on the same samples."""
    coarse = check_final_proposition(rep, g, realization, samples, seed, h)["final_proposition"]
    fine = check_final_proposition(rep, g, realization, samples, seed, h / 2)["final_proposition"]
    d1, d2 = coarse.max_residual, fine.max_residual
    ratio = d1 / d2 if d2 > 0 else float("inf") if d1 > 0 else float("nan")
    return d1, d2, ratio
