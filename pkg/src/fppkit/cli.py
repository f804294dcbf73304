"""Command line front end: ``fppkit <subcommand> ...``.

Exit codes: 0 success or overall pass, 1 check failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import classes, fibers, hj, intersection, proof, singularities, surface
from .report import FAIL, PASS, AXIOM, render_text, to_jsonable

SUBCOMMANDS = ("hj", "sing", "surface", "isect", "solve-fiber", "exclusions", "classes", "verify-paper")


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    """Raised with a document to print when a validation fails."""

    def __init__(self, doc: dict[str, Any]):
        super().__init__(doc.get("error", "check failed"))
        self.doc = doc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


# -- helpers ---------------------------------------------------------------------

def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}")


def _fraction_arg(text: str) -> tuple[int, int]:
    try:
        return hj.parse_fraction_arg(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def _styled(status: str) -> str:
    if os.environ.get("FPPKIT_COLOR", "1") == "0" or not sys.stdout.isatty():
        return status
    code = {PASS: "32", FAIL: "31", AXIOM: "36"}.get(status, "0")
    return f"\033[{code}m{status}\033[0m"


def _text(doc: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for key, value in doc.items():
            if isinstance(value, dict) or (isinstance(value, list) and value and isinstance(value[0], (dict, list, tuple))):
                lines.append(f"{pad}{key}:")
                lines.extend(_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {render_text(value)}")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_text(item, indent + 1))
            else:
                lines.append(f"{pad}{render_text(item)}")
    else:
        lines.append(f"{pad}{render_text(doc)}")
    return lines


def _emit(doc: Any, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(to_jsonable(doc), sort_keys=False, indent=2) + "\n")
    else:
        out.write("\n".join(_text(doc)) + "\n")


def _load_model(args, default: str = "X/C7") -> surface.SurfaceModel:
    try:
        if getattr(args, "model", None):
            return surface.load_model(args.model)
        return surface.preset(getattr(args, "preset", None) or default)
    except OSError as exc:
        raise UsageError(f"cannot read model: {exc}")
    except (KeyError, ValueError) as exc:
        if isinstance(exc, surface.ModelError):
            raise CheckFailed({"error": str(exc)})
        raise UsageError(f"bad model: {exc}")


def _matrix_rows(k) -> list[list[int]]:
    return [list(row) for row in k]


# -- subcommands -------------------------------------------------------------------

def _hj_doc(s: hj.HJString) -> dict[str, Any]:
    uv = hj.uv_sequences(s)
    return {"value": s.value, "string": list(s.entries), "u": list(uv.u), "v": list(uv.v)}


def cmd_hj(args) -> dict[str, Any]:
    try:
        if args.action == "eval":
            s = hj.HJString(tuple(_ints(args.arg)))
        else:
            q, a = _fraction_arg(args.arg)
            s = hj.hj_expand(q, a)
    except ValueError as exc:
        raise UsageError(str(exc))
    return _hj_doc(s)


def cmd_sing(args) -> dict[str, Any]:
    q, a = _fraction_arg(args.arg)
    try:
        p = singularities.SingularityType(q, a)
    except ValueError as exc:
        raise UsageError(str(exc))
    d = singularities.discrepancy(p)
    doc = {"type": f"1/{q}(1,{a})"}
    doc.update(_hj_doc(p.string))
    doc.update({"discrepancy": list(d.coefficients), "dpk": d.dpk, "dp2": d.dp2})
    return doc


def _invariants_doc(model: surface.SurfaceModel) -> dict[str, Any]:
    try:
        inv = surface.compute_invariants(model)
    except surface.ModelError as exc:
        raise CheckFailed({"model": model.name, "valid": False, "error": str(exc)})
    return {
        "model": model.name,
        "valid": True,
        "singularities": [f"{p.label}: 1/{p.q}(1,{p.a})" for p in model.singularities],
        "k2_resolution": model.k2_resolution,
        "K2": inv.k2_s,
        "det_R": inv.det_r,
        "D": inv.d,
        "D_prime": inv.d_prime,
        "sqrt_D_prime": inv.sqrt_d_prime,
    }


def cmd_surface(args) -> dict[str, Any]:
    if args.action == "preset":
        if args.name is None:
            return {"presets": [m.name for m in surface.quotient_presets()]}
        try:
            model = surface.preset(args.name)
        except KeyError as exc:
            raise UsageError(str(exc))
    else:
        if not args.model:
            raise UsageError("surface check requires --model PATH")
        model = _load_model(args)
    return _invariants_doc(model)


def cmd_isect(args) -> dict[str, Any]:
    model = _load_model(args)
    try:
        inc = intersection.ExceptionalIncidence(args.m, intersection.parse_hits(args.hits))
        value = intersection.ek(model, inc) if args.action == "ek" else intersection.e2(model, inc)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc))
    hits = {f"{label}:{j}": n for (label, j), n in sorted(inc.hits.items())}
    return {"model": model.name, "m": args.m, "hits": hits, args.action: value}


def _scenario(args) -> fibers.FiberScenario:
    try:
        return fibers.FiberScenario(fibers.parse_case(args.case), args.mu, reversed_order=args.reversed)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_solve_fiber(args) -> dict[str, Any]:
    sc = _scenario(args)
    sols = fibers.symmetric_solutions(sc) if args.symmetric_only else fibers.solve(sc)
    return {
        "case": list(sc.case),
        "mu": sc.mu,
        "row_sum": sc.row_sum,
        "symmetric_only": args.symmetric_only,
        "count": len(sols),
        "solutions": [{"k": _matrix_rows(s.k), "m": list(s.m)} for s in sols],
    }


def cmd_exclusions(args) -> dict[str, Any]:
    try:
        case = fibers.parse_case(args.case)
    except ValueError as exc:
        raise UsageError(str(exc))
    verdicts = fibers.exclusion_report(case)
    return {
        "case": list(case),
        "verdicts": [{"mu": v.mu, "status": v.status, "solutions": v.solutions, "detail": v.detail} for v in verdicts],
        "admissible": sorted(fibers.admissible_multiplicities(case)),
    }


def cmd_classes(args) -> dict[str, Any]:
    if args.action == "chi":
        if args.m is None:
            raise UsageError("classes chi requires --m")
        return {"m": args.m, "chi": classes.chi(args.m), "h0": classes.h0_large(classes.ClassOnFPP(args.m))}
    if args.action == "cube-roots":
        if not args.group:
            raise UsageError("classes cube-roots requires --group")
        try:
            group = classes.TorsionGroup.parse(args.group)
            count = classes.cube_roots_of_K(group, args.k_divisible)
        except ValueError as exc:
            raise UsageError(str(exc))
        return {"group": str(group), "order": group.order, "cube_roots_of_K": count}
    if args.case is None or args.mu is None:
        raise UsageError("classes exclusion requires --case and --mu")
    try:
        cert = classes.multiplicity2_exclusion(fibers.parse_case(args.case), args.mu)
    except classes.NoContradiction as exc:
        raise CheckFailed({"case": args.case, "mu": args.mu, "excluded": False, "error": str(exc)})
    except ValueError as exc:
        raise UsageError(str(exc))
    doc = {
        "case": list(cert.case),
        "mu": cert.mu,
        "steps": [{"claim": s.claim, "expected": s.expected, "computed": s.computed, "ok": s.ok} for s in cert.steps],
        "contradiction": cert.contradiction,
        "balanced": cert.balanced,
    }
    if not cert.balanced:
        raise CheckFailed(doc)
    return doc


def cmd_verify_paper(args, out) -> int:
    model_y = _load_model(args) if args.model else None
    try:
        report = proof.verify_paper(only=args.only, model_y=model_y)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        text = report.to_json()
        if args.json == "-":
            out.write(text + "\n")
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    if args.json != "-":
        for c in report.checks:
            line = f"[{_styled(c.status)}] {c.group}: {c.name}  ({c.anchor})"
            if c.status == FAIL:
                line += f"\n    expected {render_text(to_jsonable(c.expected))}, computed {render_text(to_jsonable(c.computed))}"
            out.write(line + "\n")
        counts = report.counts()
        out.write(f"{_styled(report.status)}: {counts[PASS]} pass, {counts[FAIL]} fail, {counts[AXIOM]} axiom\n")
    return 0 if report.passed else 1


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fppkit", description="Exact intersection arithmetic on quotients of fake projective planes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="emit a single JSON document")
        return sp

    sp = with_json(sub.add_parser("hj", help="Hirzebruch-Jung strings"))
    sp.add_argument("action", choices=("eval", "expand"))
    sp.add_argument("arg", help="comma separated string (eval) or q/a (expand)")

    sp = with_json(sub.add_parser("sing", help="cyclic quotient singularity data"))
    sp.add_argument("action", choices=("info",))
    sp.add_argument("arg", help="q/a for 1/q(1,a)")

    sp = with_json(sub.add_parser("surface", help="surface invariants"))
    sp.add_argument("action", choices=("check", "preset"))
    sp.add_argument("name", nargs="?", help="preset name (for preset)")
    sp.add_argument("--model", help="model JSON file")

    sp = with_json(sub.add_parser("isect", help="intersection numbers"))
    sp.add_argument("action", choices=("ek", "e2"))
    sp.add_argument("--model", help="model JSON file (default preset X/C7)")
    sp.add_argument("--preset", help="preset name instead of a model file")
    sp.add_argument("--m", type=int, required=True, help="multiple of the generator class")
    sp.add_argument("--hits", default="", help="label:index=count,...")

    sp = with_json(sub.add_parser("solve-fiber", help="solve the fibre configuration system"))
    sp.add_argument("--case", required=True, help="multiple fibre types, e.g. 2,3")
    sp.add_argument("--mu", type=int, required=True, help="multiplicity of the I_9 fibre")
    sp.add_argument("--symmetric-only", action="store_true")
    sp.add_argument("--reversed", action="store_true", help="reversed orientation of the strings")

    sp = with_json(sub.add_parser("exclusions", help="classify every I_9 multiplicity"))
    sp.add_argument("--case", required=True)

    sp = with_json(sub.add_parser("classes", help="Riemann-Roch and torsion bookkeeping"))
    sp.add_argument("action", choices=("chi", "cube-roots", "exclusion"))
    sp.add_argument("--m", type=int)
    sp.add_argument("--group", help="torsion group as cyclic orders, e.g. 2,2,2")
    sp.add_argument("--k-divisible", dest="k_divisible", action="store_true", default=None,
                    help="K is divisible by 3 (needed when 3 divides the group order)")
    sp.add_argument("--case")
    sp.add_argument("--mu", type=int)

    sp = sub.add_parser("verify-paper", help="replay every computation")
    sp.add_argument("--only", choices=proof.GROUPS)
    sp.add_argument("--json", metavar="OUT", help="write the JSON report to OUT ('-' for stdout)")
    sp.add_argument("--model", help="replacement model for the 1/7(1,5) quotient")
    return p


HANDLERS = {
    "hj": cmd_hj,
    "sing": cmd_sing,
    "surface": cmd_surface,
    "isect": cmd_isect,
    "solve-fiber": cmd_solve_fiber,
    "exclusions": cmd_exclusions,
    "classes": cmd_classes,
}


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command == "verify-paper":
            return cmd_verify_paper(args, out)
        doc = HANDLERS[args.command](args)
    except UsageError as exc:
        err.write(f"{exc}\n")
        if not str(exc).startswith("usage:"):
            err.write(parser.format_usage())
        return 2
    except CheckFailed as exc:
        _emit(exc.doc, getattr(args, "json", False), out)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    _emit(doc, args.json, out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
