"""Verification reports shared by every checking routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np


@dataclass(frozen=True)
class Check:
    """Outcome of one named check.

    ``location`` is the first index tuple (0-based) at which the check was
    violated, and ``residual`` the residual value found there. Both are
    ``None`` for passing checks.
    """

    name: str
    passed: bool
    max_residual: float
    location: Optional[tuple[int, ...]] = None
    residual: Optional[np.ndarray] = field(default=None, compare=False)

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "passed": self.passed,
            "max_residual": float(self.max_residual),
        }
        if self.location is not None:
            out["location"] = list(self.location)
        if self.residual is not None:
            out["residual"] = np.asarray(self.residual, dtype=float).tolist()
        return out


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.max_residual for c in self.checks), default=0.0)

    def __iter__(self) -> Iterator[Check]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name}: max residual {c.max_residual:.6g}"
            if c.location is not None:
                line += f" at {c.location}"
            lines.append(line)
        return "\n".join(lines)


def tensor_check(name: str, residuals: np.ndarray, tolerance: float) -> Check:
    """Build a check from a residual tensor.

    The last axis holds the residual vector; the leading axes index the
    tuples being checked, scanned in lexicographic order for the first
    violation.
    """
    residuals = np.asarray(residuals, dtype=float)
    if residuals.size == 0:
        return Check(name, True, 0.0)
    norms = np.max(np.abs(residuals), axis=-1)
    worst = float(norms.max())
    bad = np.argwhere(norms > tolerance)
    if len(bad) == 0:
        return Check(name, True, worst)
    loc = tuple(int(i) for i in bad[0])
    return Check(name, False, worst, loc, residuals[loc].copy())
