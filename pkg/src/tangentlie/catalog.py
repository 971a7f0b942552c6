"""Standard algebras with exact integer structure constants, and their matrix representations.

Algebra names: ``abelian(m)``, ``heisenberg3``, ``so3``, ``sl2``, ``gl2``,
``upper_triangular2``. Representation names take the form
``<algebra>/<rep>``, e.g. ``so3/vector`` or ``heisenberg3/adjoint``.
"""

from __future__ import annotations

import re

import numpy as np

from .algebra import LieAlgebra, from_brackets
from .representation import Representation

ALGEBRA_NAMES = ("abelian(m)", "heisenberg3", "so3", "sl2", "gl2", "upper_triangular2")

_ABELIAN = re.compile(r"abelian\((\d+)\)$")


class UnknownCatalogEntry(KeyError):
    pass


def _unit(n: int, i: int, j: int) -> np.ndarray:
    e = np.zeros((n, n))
    e[i, j] = 1.0
    return e


def _levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[j, i, k] = -1.0
    return eps


def abelian(m: int) -> LieAlgebra:
    if m < 1:
        raise ValueError("abelian algebra needs m >= 1")
    return LieAlgebra(np.zeros((m, m, m)), tuple(f"A{i + 1}" for i in range(m)))


def heisenberg3() -> LieAlgebra:
    # X, Y, Z with [X, Y] = Z
    return from_brackets(3, [(0, 1, 2, 1)], ("X", "Y", "Z"))


def so3() -> LieAlgebra:
    return LieAlgebra(_levi_civita(), ("L1", "L2", "L3"))


def sl2() -> LieAlgebra:
    return from_brackets(3, [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)], ("H", "E", "F"))


def gl2() -> LieAlgebra:
    # basis E11, E12, E21, E22
    entries = [
        (0, 1, 1, 1),
        (0, 2, 2, -1),
        (1, 2, 0, 1),
        (1, 2, 3, -1),
        (1, 3, 1, 1),
        (2, 3, 2, -1),
    ]
    return from_brackets(4, entries, ("E11", "E12", "E21", "E22"))


def upper_triangular2() -> LieAlgebra:
    # basis E11, E12, E22
    return from_brackets(3, [(0, 1, 1, 1), (1, 2, 1, 1)], ("E11", "E12", "E22"))


_ALGEBRAS = {
    "heisenberg3": heisenberg3,
    "so3": so3,
    "sl2": sl2,
    "gl2": gl2,
    "upper_triangular2": upper_triangular2,
}


def catalog_algebra(name: str) -> LieAlgebra:
    name = name.strip()
    match = _ABELIAN.match(name)
    if match:
        return abelian(int(match.group(1)))
    try:
        return _ALGEBRAS[name]()
    except KeyError:
        raise UnknownCatalogEntry(
            f"unknown algebra {name!r}; known: {', '.join(ALGEBRA_NAMES)}"
        ) from None


# Defining (or otherwise faithful) matrix representations, keyed by algebra.
def _so3_vector() -> np.ndarray:
    # L_k v = e_k x v, so (L_k)_{ij} = -eps_{kij}
    return -_levi_civita()


def _sl2_defining() -> np.ndarray:
    return np.stack([np.diag([1.0, -1.0]), _unit(2, 0, 1), _unit(2, 1, 0)])


def _gl2_defining() -> np.ndarray:
    return np.stack([_unit(2, 0, 0), _unit(2, 0, 1), _unit(2, 1, 0), _unit(2, 1, 1)])


def _heisenberg3_defining() -> np.ndarray:
    return np.stack([_unit(3, 0, 1), _unit(3, 1, 2), _unit(3, 0, 2)])


def _upper_triangular2_defining() -> np.ndarray:
    return np.stack([_unit(2, 0, 0), _unit(2, 0, 1), _unit(2, 1, 1)])


def _abelian_diagonal(m: int) -> np.ndarray:
    return np.stack([_unit(m, i, i) for i in range(m)])


_NAMED_REPS = {
    "so3": {"vector": _so3_vector},
    "sl2": {"defining": _sl2_defining},
    "gl2": {"defining": _gl2_defining},
    "heisenberg3": {"defining": _heisenberg3_defining},
    "upper_triangular2": {"defining": _upper_triangular2_defining},
}


def representation_names(algebra: str) -> list[str]:
    """Representation names available for a catalog algebra."""
    base = algebra.strip()
    if _ABELIAN.match(base):
        named = ["diagonal"]
    else:
        catalog_algebra(base)
        named = list(_NAMED_REPS.get(base, {}))
    return named + ["adjoint", "zero"]


def catalog_representation(name: str) -> Representation:
    """Look up ``<algebra>/<rep>``; ``adjoint`` and ``zero`` exist for every algebra."""
    alg_name, sep, rep_name = name.strip().partition("/")
    if not sep:
        raise UnknownCatalogEntry(f"representation name must look like 'so3/vector', got {name!r}")
    g = catalog_algebra(alg_name)
    if rep_name == "adjoint":
        return Representation.adjoint(g)
    if rep_name == "zero":
        return Representation.zero(g.dim, 2)
    match = _ABELIAN.match(alg_name)
    if match and rep_name == "diagonal":
        return Representation(_abelian_diagonal(int(match.group(1))))
    builder = _NAMED_REPS.get(alg_name, {}).get(rep_name)
    if builder is None:
        raise UnknownCatalogEntry(
            f"unknown representation {rep_name!r} of {alg_name}; "
            f"known: {', '.join(representation_names(alg_name))}"
        )
    return Representation(builder())


def standard_algebras() -> dict[str, LieAlgebra]:
    """Every named catalog algebra, with abelian(3) standing in for the family."""
    out = {"abelian(3)": abelian(3)}
    out.update({name: build() for name, build in _ALGEBRAS.items()})
    return out


def standard_representations() -> dict[str, Representation]:
    out = {}
    for alg in standard_algebras():
        for rep in representation_names(alg):
            key = f"{alg}/{rep}"
            out[key] = catalog_representation(key)
    return out
