"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on input or
usage errors. ``--json`` replaces the text report with a JSON document.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .algebra import DEFAULT_TOLERANCE, DimensionError, verify_algebra
from .fileio import FormatError, load_algebra, load_representation, save_algebra, save_representation
from .group import check_final_proposition, step_tolerance
from .identities import verify_appendix_identities
from .report import Check
from .representation import check_representation, prolong_representation
from .tangent import tangent_algebra

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

# Deviations below this are rounding noise; the h vs h/2 ratio is meaningless there.
CONVERGENCE_FLOOR = 1e-12


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    inputs: list[str]
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    error: Optional[str] = None
    as_json: bool = False

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return EXIT_INPUT
        return EXIT_OK if all(c.passed for c in self.checks) else EXIT_FAIL

    def add(self, checks, prefix: str = "") -> None:
        for c in checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.max_residual, c.location, c.residual))

    def as_dict(self) -> dict:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "checks": [c.as_dict() for c in self.checks],
            "notes": self.notes,
            "exit_code": self.exit_code,
        }
        if self.error is not None:
            out["error"] = self.error
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{self.command}: {' '.join(self.inputs)}"]
        for c in self.checks:
            line = f"  {'PASS' if c.passed else 'FAIL'}  {c.name:<32} max residual {c.max_residual:.6g}"
            if c.location is not None:
                line += f"  at {tuple(c.location)}"
            if c.residual is not None:
                line += "  residual [" + ", ".join(f"{x:.6g}" for x in np.ravel(c.residual)) + "]"
            lines.append(line)
        lines.extend(f"  note: {n}" for n in self.notes)
        if self.error is not None:
            lines.append(f"  error: {self.error}")
        lines.append(f"exit {self.exit_code}")
        return "\n".join(lines)


def _algebra(args, path: str):
    return load_algebra(path, args.tolerance)


def _representation(args, path: str, dim: int, what: str):
    rep = load_representation(path, args.tolerance)
    if rep.algebra_dim != dim:
        raise InputError(f"{what} {path}: algebra_dim {rep.algebra_dim} does not match algebra dim {dim}")
    return rep


def cmd_verify(args, report: RunReport) -> None:
    g = _algebra(args, args.algebra)
    report.add(verify_algebra(g))


def cmd_tangent(args, report: RunReport) -> None:
    g = _algebra(args, args.algebra)
    parent = verify_algebra(g)
    report.add(parent, "input ")
    if not parent.passed:
        report.notes.append("input failed verification; nothing written")
        return
    t = tangent_algebra(g, check=False)
    save_algebra(t, args.out)
    report.add(verify_algebra(t), "output ")
    report.notes.append(f"wrote {t.dim}-dimensional tangent algebra to {args.out}")


def cmd_prolong(args, report: RunReport) -> None:
    g = _algebra(args, args.algebra)
    rep = _representation(args, args.representation, g.dim, "representation")
    alg_report = verify_algebra(g)
    rep_report = check_representation(rep, g)
    report.add(alg_report, "input ")
    report.add(rep_report, "input ")
    if not (alg_report.passed and rep_report.passed):
        report.notes.append("inputs failed verification; nothing written")
        return
    t = tangent_algebra(g, check=False)
    prolonged = prolong_representation(rep, g, check=False)
    save_representation(prolonged, args.out)
    report.add(check_representation(prolonged, t), "output ")
    report.notes.append(
        f"wrote {prolonged.algebra_dim} matrices of size {prolonged.degree}x{prolonged.degree} to {args.out}"
    )


def cmd_bridge(args, report: RunReport) -> None:
    g = _algebra(args, args.algebra)
    rep = _representation(args, args.representation, g.dim, "representation")
    real = _representation(args, args.realization, g.dim, "realization")
    if args.step <= 0:
        raise InputError("--step must be positive")
    report.add(check_representation(real, g), "realization ")
    coarse = check_final_proposition(rep, g, real, args.samples, args.seed, args.step)
    fine = check_final_proposition(rep, g, real, args.samples, args.seed, args.step / 2)
    report.add(coarse)
    dev = coarse["final_proposition"].max_residual
    report.checks.append(Check("deviation_bound", dev <= args.max_deviation, dev))
    d1, d2 = dev, fine["final_proposition"].max_residual
    if max(d1, d2) <= CONVERGENCE_FLOOR:
        report.checks.append(Check("second_order_convergence", True, 0.0))
        report.notes.append("deviations at rounding level; convergence ratio not meaningful")
    else:
        ratio = d1 / d2 if d2 > 0 else float("inf")
        report.checks.append(Check("second_order_convergence", 3.0 <= ratio <= 5.0, abs(ratio - 4.0)))
        report.notes.append(f"deviation {d1:.6g} at h={args.step:g}, {d2:.6g} at h/2, ratio {ratio:.6g}")
    report.notes.append(f"step tolerance 100*h^2 = {step_tolerance(args.step):.6g}")


def cmd_identities(args, report: RunReport) -> None:
    g = _algebra(args, args.algebra)
    if args.samples < 1:
        raise InputError("--samples must be positive")
    report.add(verify_appendix_identities(g, args.samples, args.seed))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                        help="tolerance for identity checks (default: 1e-9)")
    common.add_argument("--json", action="store_true", help="print a JSON report instead of text")

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")

    parser = argparse.ArgumentParser(
        prog="tangentlie",
        description="Tangent Lie algebras, prolonged representations and their numerical checks. "
                    "Any file argument may be a catalog entry such as catalog:so3 or catalog:sl2/defining.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check antisymmetry and Jacobi of an algebra")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tangent", parents=[common], help="write the tangent algebra T(g)")
    p.add_argument("algebra")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("prolong", parents=[common], help="write the prolonged representation of T(g)")
    p.add_argument("algebra")
    p.add_argument("representation")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_prolong)

    p = sub.add_parser("bridge", parents=[common, sampling],
                       help="compare the prolonged representation with the differentiated group representation")
    p.add_argument("algebra")
    p.add_argument("representation")
    p.add_argument("realization", help="faithful matrix representation realizing the group")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--step", type=float, default=1e-4, help="finite-difference step h (default: 1e-4)")
    p.add_argument("--max-deviation", type=float, default=1e-6,
                   help="absolute bound on the deviation (default: 1e-6)")
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("identities", parents=[common, sampling],
                       help="sample the affine-map identities behind the tangent bracket")
    p.add_argument("algebra")
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_identities)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> RunReport:
    args = build_parser().parse_args(argv)
    inputs = [getattr(args, k) for k in ("algebra", "representation", "realization") if hasattr(args, k)]
    report = RunReport(args.command, inputs, as_json=args.json)
    try:
        args.func(args, report)
    except (FormatError, InputError, DimensionError) as exc:
        report.error = str(exc)
    except (ValueError, np.linalg.LinAlgError, OSError) as exc:
        report.error = f"{type(exc).__name__}: {exc}"
    return report


def main(argv: Optional[Sequence[str]] = None) -> int:
    report = run(argv)
    out = report.to_json() if report.as_json else report.to_text()
    stream = sys.stderr if report.error is not None and not report.as_json else sys.stdout
    print(out, file=stream)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
