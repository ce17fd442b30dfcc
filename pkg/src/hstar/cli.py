"""Command-line interface: ``hstar <subcommand> ...``.

Exit codes: 0 success or pass, 1 a violation was found, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .cones import NoInteriorPoint, x_vector
from .inequalities import (
    BudgetExceeded,
    InvalidParameters,
    LinearFormAB,
    all_forms_at,
    check_vector,
    minimal_novel_dimension,
    q_polyhedron,
    vertices,
)
from .lattice import (
    BoxGroup,
    InvalidSimplex,
    NonTerminalError,
    PayneSimplex,
    age_profile,
    box_group,
    dilation_count_hstar,
    parallelepiped_hstar,
    payne_hstar,
)
from .polynomials import HStarVector, InvalidVector, decompose, parse_int_list
from .tables import TABLES, build_table
from .verify import SUITES, lemma_suite, oracle_suite, sumset_suite, vertex_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _emit(fmt: str, text: str, payload, tsv_rows: Sequence[Sequence] | None = None) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, default=str))
    elif fmt == "tsv":
        rows = tsv_rows if tsv_rows is not None else [[text]]
        print("\n".join("\t".join(str(c) for c in r) for r in rows))
    else:
        print(text)


def _vector(text: str) -> HStarVector:
    return HStarVector.parse(text)


# ---------------------------------------------------------------- subcommands

def cmd_compute(args) -> int:
    p = PayneSimplex.of(parse_int_list(args.alpha))
    method = {"closed": payne_hstar,
              "box": lambda q: parallelepiped_hstar(box_group(q)),
              "dilation": dilation_count_hstar}[args.method]
    h = method(p)
    try:
        x = x_vector(h)
    except NoInteriorPoint:
        x = None
    lines = [str(h)] + ([f"x: {_csv(x)}"] if x is not None else [])
    payload = {"alpha": list(p.alpha), "d": h.d, "h": list(h.coeffs),
               "x": list(x) if x is not None else None}
    _emit(args.format, "\n".join(lines), payload,
          [["h", _csv(h.coeffs)]] + ([["x", _csv(x)]] if x is not None else []))
    return EXIT_OK


def cmd_decompose(args) -> int:
    h = _vector(args.vector)
    ab = decompose(h)
    payload = {"h": list(h.coeffs), **ab.to_json(), "l": ab.l}
    text = "\n".join([f"d: {ab.d}", f"s: {ab.s}", f"l: {ab.l}",
                      f"a: {_csv(ab.a)}", f"b: {_csv(ab.b)}"])
    _emit(args.format, text, payload,
          [["d", ab.d], ["s", ab.s], ["l", ab.l], ["a", _csv(ab.a)], ["b", _csv(ab.b)]])
    return EXIT_OK


def cmd_check(args) -> int:
    h = _vector(args.vector)
    report = check_vector(h, include_conjectures=args.conjectures)
    shown = report.entries if args.verbose else [
        e for e in report.entries if not e.passed]
    lines = []
    for e in shown:
        mark = "CONJECTURE" if e.conjecture else ("ok" if e.passed else "FAIL")
        lines.append(f"{mark} {e.label} @ d={h.d}: {e.form}  [{e.h_form}]  slack {e.value}")
    lines.append(f"{'PASS' if report.passed else 'FAIL'}: {len(report.entries)} inequalities, "
                 f"{len(report.violations)} violated")
    _emit(args.format, "\n".join(lines), report.to_json(),
          [["label", "form", "h_form", "slack", "pass"]]
          + [[e.label, e.form, e.h_form, e.value, e.passed] for e in shown])
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_inequalities(args) -> int:
    d = args.dim
    if d < 2:
        raise UsageError("--dim must be at least 2")
    s = d if args.interior else None
    records, rows = [], []
    for f in all_forms_at(d, args.interior, s=s):
        if isinstance(f, LinearFormAB):
            novel = None
            if args.novel and f.family in ("superA", "variant1", "variant2", "variant3"):
                novel = minimal_novel_dimension(f, search_cap=max(d, f.d_min))
            rec = f.to_json(d, s)
            rec["novel_dimension"] = novel
            text = f"{f.tag():<24} d_min={f.d_min:<3} {f.render()}"
            if args.novel and novel is not None:
                text += f"  (new from d={novel})"
            rows.append([f.tag(), f.d_min, f.render(), rec["ab_form_folded"], rec["h_form"],
                         "" if novel is None else novel])
        else:
            rec = {"family": f.family, "params": [f.label], "vertex": [], "d_min": 1,
                   "ab_form": None, "h_form": f.render()}
            text = f"{f.label:<24} d_min=1   {f.render()}"
            rows.append([f.label, 1, "", "", f.render(), ""])
        records.append((text, rec))
    _emit(args.format, "\n".join(t for t, _ in records), [r for _, r in records],
          [["label", "d_min", "ab_form", "folded", "h_form", "novel"]] + rows)
    return EXIT_OK


def cmd_q_vertices(args) -> int:
    q = q_polyhedron(args.r, args.rp)
    vs = vertices(q, budget=args.budget)
    strs = [[str(Fraction(x)) for x in v] for v in vs]
    text = "\n".join("(" + ", ".join(v) + ")" for v in strs) or "()"
    _emit(args.format, text, {"r": args.r, "rp": args.rp, "vertices": strs},
          [[_csv(v)] for v in strs])
    return EXIT_OK


def _parse_weights(text: str) -> BoxGroup:
    try:
        n, ws = text.split(":", 1)
        return BoxGroup.cyclic(int(n), parse_int_list(ws))
    except ValueError as exc:
        raise UsageError(f"weights must look like n:w1,w2,...: {exc}") from exc


def cmd_box(args) -> int:
    if (args.alpha is None) == (args.weights is None):
        raise UsageError("give exactly one of --alpha or --weights")
    if args.alpha is not None:
        g = box_group(PayneSimplex.of(parse_int_list(args.alpha)))
    else:
        g = _parse_weights(args.weights)
    payload = g.to_json()
    lines = [f"order {g.order}, invariant factors {list(g.diagonal) or [1]}, rank {g.rank}"]
    rows = [["coords", "age", "coage", "boundary"]]
    for e in g:
        coords = ",".join(str(c) for c in e.coords)
        lines.append(f"({coords})  age {e.age}  coage {e.coage}"
                     + ("  boundary" if e.boundary else ""))
        rows.append([coords, e.age, e.coage, e.boundary])
    if args.profile:
        prof = age_profile(g, args.profile, strict=not args.lenient)
        counts = {kind: {f"{k},{l}": v for (k, l), v in sorted(getattr(prof, kind).items())}
                  for kind in ("plain", "a", "b")}
        payload["profile"] = {"convention": args.profile, "d": prof.d, **counts}
        for kind, table in counts.items():
            if table:
                lines.append(f"{kind}: " + ", ".join(f"N({k})={v}" for k, v in table.items()))
    _emit(args.format, "\n".join(lines), payload, rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    runners = {
        "oracles": lambda: oracle_suite(args.max_d, args.alpha_sum_max),
        "sumsets": lambda: sumset_suite(args.n_max, args.flight_n_max, args.keyd4_n_max),
        "lemmas": lambda: lemma_suite(args.coke_max_len),
        "vertices": lambda: vertex_suite(),
    }
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        for rec in runners[name]():
            if rec.get("kind") == "summary":
                ok &= rec["pass"]
            elif rec.get("pass") is False or rec.get("kind") in ("failure", "mismatch"):
                ok = False
            print(json.dumps(rec, default=str), flush=True)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_table(args) -> int:
    table = build_table(args.name)
    print(table.render(args.format))
    if any(row[-1] == "NO" for row in table.rows):
        return EXIT_VIOLATION
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hstar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "tsv"), default="text")

    p = sub.add_parser("compute", parents=[fmt], help="h*-vector of a Payne simplex P(alpha)")
    p.add_argument("--alpha", required=True, help="comma-separated positive weights")
    p.add_argument("--method", choices=("closed", "box", "dilation"), default="closed")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("decompose", parents=[fmt], help="a/b decomposition of an h*-vector")
    p.add_argument("--vector", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", parents=[fmt], help="test an h*-vector against all known inequalities")
    p.add_argument("--vector", required=True)
    p.add_argument("--conjectures", action="store_true",
                   help="also report the unproved dimension-7 inequalities (never affects the verdict)")
    p.add_argument("--verbose", action="store_true", help="list passing inequalities too")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("inequalities", parents=[fmt], help="all inequalities valid in dimension d")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--interior", action="store_true", help="assume an interior lattice point")
    p.add_argument("--novel", action="store_true",
                   help="annotate the smallest dimension in which each family member is new")
    p.set_defaults(func=cmd_inequalities)

    p = sub.add_parser("q-vertices", parents=[fmt], help="exact vertices of Q(r, r')")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--rp", type=int, required=True, help="r'")
    p.add_argument("--budget", type=int, default=2_000_000, help="maximum active sets examined")
    p.set_defaults(func=cmd_q_vertices)

    p = sub.add_parser("box", parents=[fmt], help="box group elements with ages")
    p.add_argument("--alpha", help="Payne simplex weights")
    p.add_argument("--weights", help="cyclic group as n:w1,...,wk")
    p.add_argument("--profile", choices=("boundary", "maximal"))
    p.add_argument("--lenient", action="store_true", help="skip non-terminal elements instead of failing")
    p.set_defaults(func=cmd_box)

    p = sub.add_parser("verify", help="run verification sweeps, JSON lines on stdout")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--alpha-sum-max", type=int, default=40)
    p.add_argument("--max-d", type=int, default=6)
    p.add_argument("--n-max", type=int, default=8, help="Kemperman-Scherk group orders")
    p.add_argument("--flight-n-max", type=int, default=20)
    p.add_argument("--keyd4-n-max", type=int, default=12)
    p.add_argument("--coke-max-len", type=int, default=7)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[fmt], help="regenerate a result table")
    p.add_argument("name", choices=sorted(TABLES))
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidVector, InvalidSimplex, InvalidParameters, NonTerminalError,
            BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
