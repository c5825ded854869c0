"""Command-line front end.

Every command builds a :class:`RunReport`; ``--json`` prints it as JSON,
otherwise a short human-readable summary is printed. Exit status is 0 on
success, 1 on a domain or verification failure and 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .algebra import matrix as mx
from .errors import QuadPencilError
from .groups import DEFAULT_CAP, config, config_aut_group, stabilizer_cardinality
from .hyperelliptic import associate, pic_hg, verify_pic_triangle, weierstrass_divisor
from .pencils import (
    Diagonalization,
    QuadricPencil,
    SlicePoint,
    discriminant_form,
    first_vanishing_minor,
    is_smooth,
    simultaneous_diagonalize,
)
from .picard import lattice, pic_binary_forms, pic_complete_intersections, picard_group
from .suites import SUITES


class InputError(Exception):
    """Unreadable or malformed input file (exit status 2)."""


@dataclass
class RunReport:
    command: str
    inputs: dict
    outputs: dict = field(default_factory=dict)
    checks_passed: int = 0
    checks_failed: int = 0
    seed: int = 0
    duration_ms: int = 0

    def check(self, ok: bool, count: int = 1) -> bool:
        if ok:
            self.checks_passed += count
        else:
            self.checks_failed += count
        return ok

    def to_json(self) -> dict:
        return asdict(self)


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def load_pencil(path: str) -> QuadricPencil:
    """A pencil file: ``{"Q1": ..., "Q2": ...}``, or ``{"a": ..., "b": ...}`` for a diagonal pencil."""
    data = _read_json(path)
    try:
        if isinstance(data, dict) and "Q1" in data:
            return QuadricPencil.from_json(data)
        if isinstance(data, dict) and "a" in data:
            w = SlicePoint.from_json(data)
            return QuadricPencil(mx.diag(w.a), mx.diag(w.b))
    except QuadPencilError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed pencil in {path}: {exc}") from exc
    raise InputError(f"{path} holds neither Q1/Q2 nor a/b")


def load_point(path: str) -> SlicePoint:
    data = _read_json(path)
    try:
        return SlicePoint.from_json(data)
    except QuadPencilError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed slice point in {path}: {exc}") from exc


def cmd_pic(args, report: RunReport) -> None:
    if args.table:
        n_max = args.n_max if args.n_max is not None else 10
        report.inputs = {"table": True, "n_max": n_max}
        rows = []
        for n in range(3, n_max + 1):
            level1, level2 = picard_group(n, -1), picard_group(n, -2)
            report.check(level1 == pic_binary_forms(n) and level2 == pic_complete_intersections(n))
            rows.append({"n": n, "k=-1": str(level1), "k=-2": str(level2)})
        report.outputs = {"table": rows}
        return
    if args.n is None:
        raise QuadPencilError("pic needs --n (or --table)")
    k = args.k if args.k is not None else -2
    report.inputs = {"n": args.n, "k": k}
    group = picard_group(args.n, k)
    report.check(group.is_cyclic and group.order == lattice(args.n, k).d * args.n)
    if k == -2:
        report.check(group == pic_complete_intersections(args.n))
    elif k == -1:
        report.check(group == pic_binary_forms(args.n))
    report.outputs = {"group": str(group), "structure": group.to_json()}


def cmd_smooth(args, report: RunReport) -> None:
    p = load_pencil(_require(args.pencil, "--pencil"))
    report.inputs = {"pencil": p.to_json()}
    form = discriminant_form(p)
    smooth = is_smooth(p)
    out = {"status": "smooth" if smooth else "singular", "discriminant_form": str(form),
           "coeffs": form.to_json()["coeffs"], "squarefree": smooth}
    if p.is_diagonal:
        w = SlicePoint(mx.diagonal(p.q1), mx.diagonal(p.q2))
        bad = first_vanishing_minor(w)
        report.check((bad is None) == smooth)
        if bad is not None:
            out["vanishing_minor"] = list(bad)
    report.outputs = out


def cmd_diagonalize(args, report: RunReport) -> None:
    p = load_pencil(_require(args.pencil, "--pencil"))
    report.inputs = {"pencil": p.to_json()}
    result = simultaneous_diagonalize(p)
    if isinstance(result, Diagonalization):
        d = p.congruent(result.basis)
        report.check(mx.is_diagonal(d.q1) and mx.is_diagonal(d.q2))
    report.outputs = result.to_json()


def cmd_aut(args, report: RunReport) -> None:
    w = load_point(_require(args.point, "--point"))
    k = args.k if args.k is not None else -2
    cap = args.cap if args.cap is not None else DEFAULT_CAP
    report.inputs = {"point": w.to_json(), "k": k, "cap": cap}
    auts = config_aut_group(config(w), cap)
    card = stabilizer_cardinality(w, abs(k), cap)
    report.check(card == abs(k) ** w.n * len(auts))
    report.outputs = {
        "configuration": [str(pt) for pt in config(w)],
        "config_aut_order": len(auts),
        "config_auts": [a.to_json() for a in auts],
        "stabilizer_cardinality": card,
    }


def cmd_hyperelliptic(args, report: RunReport) -> None:
    p = load_pencil(_require(args.pencil, "--pencil"))
    report.inputs = {"pencil": p.to_json()}
    model = associate(p)
    points, factors = weierstrass_divisor(model)
    out = {
        **model.to_json(),
        "F_str": str(model.form),
        "weierstrass_rational": [str(pt) for pt in points],
        "weierstrass_irreducible": [str(f) for f in factors],
    }
    report.check(len(points) + sum(f.degree for f in factors) == 2 * model.g + 2)
    if not model.below_range:
        hg, ci = pic_hg(model.g), pic_complete_intersections(p.n)
        report.check(hg.order == ci.order)
        report.check(verify_pic_triangle(model.g))
        out["pic_hg"] = str(hg)
        out["pic_complete_intersections"] = str(ci)
    report.outputs = out


def cmd_verify(args, report: RunReport) -> None:
    suite = args.suite
    n = args.n if args.n is not None else 5
    k = args.k if args.k is not None else -2
    trials = args.trials if args.trials is not None else 100
    n_max = args.n_max if args.n_max is not None else 64
    report.inputs = {"suite": suite, "n": n, "k": k, "trials": trials, "n_max": n_max}
    if suite not in SUITES:
        raise QuadPencilError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    result = SUITES[suite](n, k, trials, args.seed, n_max)
    if result:
        report.checks_passed += result.checked
    else:
        report.checks_passed += result.checked - 1
        report.checks_failed += 1
        report.outputs["counterexample"] = result.counterexample
    report.outputs["passed"] = result.passed


def _require(value, flag: str):
    if value is None:
        raise InputError(f"{flag} is required")
    return value


COMMANDS = {
    "pic": cmd_pic,
    "smooth": cmd_smooth,
    "diagonalize": cmd_diagonalize,
    "aut": cmd_aut,
    "hyperelliptic": cmd_hyperelliptic,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadpencil", description="Pencils of quadrics, their symmetry groups and Picard groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the full report as JSON")
    common.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("pic", parents=[common], help="Picard group of [W/G_k]")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--table", action="store_true", help="table for 3 <= n <= n-max at k = -1, -2")
    p.add_argument("--n-max", type=int)

    for name, text in (("smooth", "smoothness and discriminant form"),
                       ("diagonalize", "simultaneous diagonalization over Q"),
                       ("hyperelliptic", "associated hyperelliptic curve")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--pencil", metavar="FILE")

    p = sub.add_parser("aut", parents=[common], help="configuration automorphisms and stabilizer size")
    p.add_argument("--point", metavar="FILE")
    p.add_argument("--k", type=int)
    p.add_argument("--cap", type=int, help=f"largest configuration size to enumerate (default {DEFAULT_CAP})")

    p = sub.add_parser("verify", parents=[common], help="run a seeded property suite")
    p.add_argument("--suite", required=True, help=", ".join(SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--n-max", type=int)
    return parser


def _print_human(report: RunReport) -> None:
    print(f"{report.command}: {report.checks_passed} checks passed, {report.checks_failed} failed")
    for key, value in report.outputs.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{key}:")
            for row in value:
                print("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
        else:
            print(f"{key}: {json.dumps(value) if isinstance(value, (dict, list)) else value}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = RunReport(command=args.command, inputs={}, seed=args.seed)
    start = time.perf_counter()
    status = 0
    try:
        COMMANDS[args.command](args, report)
    except InputError as exc:
        report.outputs["error"] = str(exc)
        status = 2
    except QuadPencilError as exc:
        report.outputs["error"] = f"{type(exc).__name__}: {exc}"
        status = 1
    if status == 0 and report.checks_failed:
        status = 1
    report.duration_ms = int((time.perf_counter() - start) * 1000)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        _print_human(report)
    if status:
        print(report.outputs.get("error", "verification failed"), file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
