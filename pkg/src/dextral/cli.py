"""Command-line front end.

    dextral check ALGEBRA.json [--field gf:3] [--witness-depth 2] [--json out.json]
    dextral leavitt GRAPH.json [--json out.json]
    dextral catalog list
    dextral catalog export ID [--param alpha=1/2] [--field gf:5]
    dextral verify [--only series] [--param-samples=-2..2] [--json out.json]

Exit status: 0 when every check passes, 1 when any fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__, catalog
from .algebra import Algebra, format_element
from .decide import decide_dextral
from .exactlin import FieldError, FieldSpec
from .formats import FormatError, algebra_from_json, dumps_algebra, graph_from_json
from .identities import IDENTITIES
from .leavitt import GraphError, classify_graph, validate_witness
from .series import SeriesKind, series
from .verification import MODULES, CheckResult, Context, run_checks

TOOL = "dextral"

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"-2..2"`` or a comma list ``"0,1,3"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"bad range {text!r}, expected LO..HI or a comma list") from None


def parse_field(text: str | None) -> FieldSpec | None:
    if text is None:
        return None
    try:
        return FieldSpec.parse(text)
    except (FieldError, ValueError) as exc:
        raise InputError(str(exc)) from None


def parse_params(items: Sequence[str]) -> dict[str, str]:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InputError(f"bad --param {item!r}, expected NAME=VALUE")
        out[key.strip()] = value.strip()
    return out


def _read(path: str) -> tuple[bytes, dict]:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be an object")
    return raw, data


def make_report(digest: str, checks: list[CheckResult], extra: dict | None = None) -> dict:
    report = {
        "tool": TOOL,
        "version": __version__,
        "input_digest": digest,
        "checks": [c.to_json() for c in checks],
    }
    if extra:
        report.update(extra)
    return report


def _sha256(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _exit_code(checks: list[CheckResult]) -> int:
    return EXIT_FAIL if any(c.status == "fail" for c in checks) else EXIT_OK


def _emit(report: dict, json_path: str | None) -> None:
    if not json_path:
        return
    text = json.dumps(report, indent=2, ensure_ascii=False, sort_keys=False) + "\n"
    if json_path == "-":
        sys.stdout.write(text)
    else:
        Path(json_path).write_text(text, encoding="utf-8")


def _human(args):
    """Stream for the readable summary; stderr when the report takes stdout."""
    return sys.stderr if getattr(args, "json", None) == "-" else sys.stdout


def _print_checks(checks: list[CheckResult], out) -> None:
    for c in checks:
        print(f"[{c.status.upper():7s}] {c.id}: {c.claim}", file=out)
        for d in c.details:
            print(f"          {d}", file=out)


# -- check ---------------------------------------------------------------------


def analyze_algebra(A: Algebra, witness_depth: int = 1) -> list[CheckResult]:
    checks = []
    for name, fn in IDENTITIES.items():
        rep = fn(A)
        r = CheckResult(f"identity.{name}", f"{name} identity on basis tuples")
        r.note("holds" if rep.holds else f"fails at {rep.violation.names(A)}")
        checks.append(r)

    r = CheckResult("dextral", "a(bc) = 0 implies b(ac) = 0")
    try:
        v = decide_dextral(A, witness_bound=witness_depth)
    except AssertionError as exc:
        r.fail(str(exc))
    else:
        if v.no:
            w = v.witness
            wit = ", ".join(format_element(A, x) for x in (w.a, w.b, w.c))
            r.note(f"no, witness ({wit}); b(ac) = {format_element(A, w.bac)}")
            r.expect(w.validate(A), "witness does not validate")
        elif v.yes:
            r.note(f"yes ({v.reason.value}{', ' + v.detail if v.detail else ''})")
        else:
            r.unknown("undecided within budget; raise --witness-depth")
    checks.append(r)

    for kind in SeriesKind:
        t = series(A, kind)
        r = CheckResult(f"series.{kind.value}", f"{kind.value} series")
        r.note(f"dims {t.dims}; reaches zero: {t.terminal_is_zero}"
               + (f" at index {t.zero_index}" if t.zero_index else ""))
        checks.append(r)
    return checks


def cmd_check(args) -> int:
    raw, data = _read(args.path)
    try:
        A = algebra_from_json(data)
        F = parse_field(args.field)
        if F is not None and F != A.field:
            A = A.over(F)
    except (FormatError, FieldError) as exc:
        raise InputError(str(exc)) from None
    checks = analyze_algebra(A, args.witness_depth)
    out = _human(args)
    print(f"{A.name}: dim {A.dim} over {A.field}", file=out)
    _print_checks(checks, out)
    _emit(make_report(_sha256(raw), checks, {"algebra": A.name}), args.json)
    return _exit_code(checks)


# -- leavitt -------------------------------------------------------------------


def cmd_leavitt(args) -> int:
    raw, data = _read(args.path)
    try:
        E = graph_from_json(data)
    except (FormatError, GraphError) as exc:
        raise InputError(str(exc)) from None
    c = classify_graph(E)
    r = CheckResult("leavitt.classify", "dextral symmetry of the Leavitt path algebra")
    violations = []
    for v in c.violations:
        ok = validate_witness(E, *v.witness)
        r.expect(ok and v.certificate is not None, f"{v.kind} at {v.where}: witness does not validate")
        wit = [str(x) for x in v.witness]
        r.note(f"{v.kind} at {v.where}: witness ({', '.join(wit)})")
        violations.append({
            "kind": v.kind,
            "where": v.where,
            "witness": wit,
            "certificate": None if v.certificate is None else {
                "multiplier": str(v.certificate.multiplier),
                "side": v.certificate.side,
                "result": str(v.certificate.result),
            },
        })
    if c.dextral:
        r.note(f"dextral; |I| = {c.isolated}, |J| = {c.looped}; {c.iso_class}")
    else:
        r.note("not dextral")
    summary = {"dextral": c.dextral, "I": c.isolated, "J": c.looped,
               "iso_class": c.iso_class, "violations": violations}
    _print_checks([r], _human(args))
    _emit(make_report(_sha256(raw), [r], {"classification": summary}), args.json)
    return _exit_code([r])


# -- catalog -------------------------------------------------------------------


def cmd_catalog_list(args) -> int:
    for e in catalog.ENTRIES:
        dim = e.dim if e.dim is not None else "n"
        params = ", ".join(p.describe() for p in e.params)
        print(f"{e.id:12s} dim {dim!s:2s} {e.label}" + (f"  [{params}]" if params else ""))
    return EXIT_OK


def cmd_catalog_export(args) -> int:
    try:
        A = catalog.instantiate(args.id, parse_params(args.param), parse_field(args.field))
    except (catalog.UnknownEntryError, catalog.DomainError, FieldError) as exc:
        raise InputError(str(exc).strip("'\"")) from None
    text = dumps_algebra(A)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- verify --------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.only is not None and args.only not in MODULES:
        from .verification import CHECKS

        if args.only not in {c.id for c in CHECKS}:
            raise InputError(f"--only must be one of {MODULES} or a check id")
    grid = parse_range(args.param_samples)
    ctx = Context(grid=tuple(grid), witness_depth=args.witness_depth)
    checks = run_checks(ctx, args.only)
    settings = {"only": args.only, "param_samples": grid, "witness_depth": args.witness_depth,
                "seed": ctx.seed}
    digest = _sha256(json.dumps(settings, sort_keys=True).encode())
    out = _human(args)
    for c in checks:
        print(f"{c.status.upper():7s} {c.id}", file=out)
        if args.verbose or c.status != "pass":
            for d in c.details:
                print(f"        {d}", file=out)
    failed = sum(c.status == "fail" for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks without failure", file=out)
    _emit(make_report(digest, checks, {"settings": settings}), args.json)
    return _exit_code(checks)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=TOOL, description="Dextral symmetry of finite-dimensional algebras.")
    p.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, field=True):
        sp.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
        sp.add_argument("--witness-depth", type=int, default=1, metavar="K",
                        help="coefficient radius of the counterexample grid search (default 1)")
        if field:
            sp.add_argument("--field", metavar="FIELD", help="'rational' or 'gf:P'")

    sp = sub.add_parser("check", help="analyze an algebra file")
    sp.add_argument("path")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("leavitt", help="classify a graph's Leavitt path algebra")
    sp.add_argument("path")
    sp.add_argument("--json", metavar="PATH")
    sp.set_defaults(func=cmd_leavitt)

    sp = sub.add_parser("catalog", help="list or export catalogued algebras")
    csub = sp.add_subparsers(dest="catalog_command", required=True)
    lp = csub.add_parser("list")
    lp.set_defaults(func=cmd_catalog_list)
    ep = csub.add_parser("export")
    ep.add_argument("id")
    ep.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    ep.add_argument("--field", metavar="FIELD")
    ep.add_argument("-o", "--output", metavar="PATH")
    ep.set_defaults(func=cmd_catalog_export)

    sp = sub.add_parser("verify", help="run the acceptance checks")
    sp.add_argument("--only", metavar="MODULE", help=f"restrict to checks touching one of {MODULES}")
    sp.add_argument("--param-samples", default="-2..2", metavar="RANGE",
                    help="integer samples for rational parameters (default -2..2)")
    sp.add_argument("-v", "--verbose", action="store_true")
    common(sp, field=False)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
