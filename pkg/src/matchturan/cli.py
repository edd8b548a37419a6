"""Command-line front end: exact Turán computations, cover families,
candidate constructions, and theorem verification grids.

Reports are JSON (with a fixed `payload` section that is byte-identical for
identical configurations; wall time lives in a sidecar field) plus CSV
summary tables for the verification grids.  Exit status is 0 iff every
verdict in the run passed.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
import time
from pathlib import Path

from .constructions import ConstructionSpec, realize
from .containment import GraphFamily
from .covering import covering_report, family_fp
from .graphs import (
    Graph,
    complete,
    cycle,
    from_graph6,
    matching,
    path,
    read_graph6_lines,
    star,
    to_graph6,
    turan_graph,
)
from .solver import HARD_CEILING, ex_general
from .verifier import (
    CSV_COLUMNS,
    TheoremReport,
    verify_color_critical_components,
    verify_cover_family_example,
    verify_erdos_gallai,
    verify_forest_theorem,
    verify_gerbner_slope,
    verify_ma_hou,
    verify_main_theorem_exact,
    verify_tutte_berge,
)

_NAMED = {
    "K": complete,
    "C": cycle,
    "P": path,
    "S": star,
    "M": matching,
}


def parse_graph(token: str) -> Graph:
    """Named-graph grammar: K5, C7, P4, S6, M3, T(7,3), g6:<raw>."""
    token = token.strip()
    if token.startswith("g6:"):
        return from_graph6(token[3:])
    m = re.fullmatch(r"([KCPSM])(\d+)", token)
    if m:
        return _NAMED[m.group(1)](int(m.group(2)))
    m = re.fullmatch(r"T\((\d+),(\d+)\)", token)
    if m:
        return turan_graph(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"cannot parse graph token {token!r}")


def _split_top_level(expr: str) -> list[str]:
    parts = []
    depth = 0
    cur = []
    for ch in expr:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_family(expr: str, label: str | None = None) -> GraphFamily:
    """Comma-separated graph tokens; fp(<graph>,<p>) splices in the cover
    family of a graph."""
    members: list[Graph] = []
    for tok in _split_top_level(expr):
        m = re.fullmatch(r"fp\((.+),(\d+)\)", tok)
        if m:
            members.extend(family_fp(parse_graph(m.group(1)), int(m.group(2))))
        else:
            members.append(parse_graph(tok))
    return GraphFamily(members, label=label if label is not None else expr)


def parse_range(text: str) -> list[int]:
    """'a..b' (inclusive) or a single integer."""
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _envelope(command: str, payload: dict, elapsed: float) -> dict:
    return {
        "schema": 1,
        "command": command,
        "payload": payload,
        "elapsed_sec": round(elapsed, 6),
    }


def _write_json(outdir: Path, name: str, envelope: dict) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / f"{name}.json").write_text(
        json.dumps(envelope, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )


def _write_csv(outdir: Path, name: str, reports: list[TheoremReport]) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / f"{name}.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for report in reports:
            writer.writerows(report.csv_rows())


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_ex(args: argparse.Namespace) -> int:
    members = []
    labels = []
    if args.forbid:
        fam = parse_family(args.forbid)
        members.extend(fam)
        labels.append(args.forbid)
    if args.forbid_family:
        fam = parse_family(args.forbid_family)
        members.extend(fam)
        labels.append(args.forbid_family)
    if args.forbid_file:
        members.extend(read_graph6_lines(Path(args.forbid_file).read_text().splitlines()))
        labels.append(f"file:{args.forbid_file}")
    family = GraphFamily(members, label="|".join(labels))
    result = ex_general(
        args.n, args.r, family, ceiling=args.ceiling, workers=args.workers
    )
    print(f"ex({args.n}, K_{args.r}, {family.label or 'empty family'}) = {result.value}")
    for w in result.witnesses:
        print(w)
    if args.out:
        _write_json(
            Path(args.out), "ex", _envelope("ex", result.to_payload(), result.elapsed)
        )
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    graph = parse_graph(args.graph)
    t0 = time.perf_counter()
    report = covering_report(graph, args.p, label=f"fp({args.graph},{args.p})")
    elapsed = time.perf_counter() - t0
    print(f"fp({args.graph},{args.p}): {len(report.family)} member(s)"
          f"{' [fallback]' if report.fallback_used else ''}")
    for m in report.family:
        print(to_graph6(m))
    if args.out:
        outdir = Path(args.out)
        _write_json(outdir, "family", _envelope("family", report.to_payload(), elapsed))
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "family.g6").write_text(
            "\n".join(report.family.to_lines()) + "\n", encoding="utf-8"
        )
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    if args.construction == "gns":
        fam = parse_family(args.forbid)
        spec = ConstructionSpec(
            kind="gns",
            n=args.n,
            s=args.s,
            r=args.r,
            objective="kr_count" if args.objective == "kr" else "edges",
            family_graph6=tuple(to_graph6(m) for m in fam),
            family_label=fam.label,
        )
    elif args.construction == "clique":
        spec = ConstructionSpec(kind="clique", s=args.s)
    elif args.construction == "forest-extremal":
        f = parse_graph(args.forbidden)
        fam = family_fp(f, args.p - 1)
        spec = ConstructionSpec(
            kind="forest_extremal",
            n=args.n,
            p=args.p,
            t=args.t,
            family_graph6=tuple(to_graph6(m) for m in fam),
            family_label=fam.label,
        )
    else:
        spec = ConstructionSpec(kind="turan", p=args.p, parts=args.k)
    t0 = time.perf_counter()
    graph, details = realize(spec, ceiling=args.ceiling, workers=args.workers)
    elapsed = time.perf_counter() - t0
    print(to_graph6(graph))
    if "value" in details:
        print(f"value = {details['value']}")
    if args.out:
        payload = {"spec": spec.to_payload(), "graph": to_graph6(graph), **details}
        _write_json(Path(args.out), "construct", _envelope("construct", payload, elapsed))
    return 0


def _run_verify(args: argparse.Namespace) -> list[TheoremReport]:
    common = {"ceiling": args.ceiling, "workers": args.workers}
    name = args.theorem
    if name == "erdos-gallai":
        pairs = [
            (n, s)
            for s in parse_range(args.s)
            for n in parse_range(args.n)
            if n >= 2 * s + 1
        ]
        return [verify_erdos_gallai(pairs, **common)]
    if name == "ma-hou":
        quads = [
            (n, s, r, k)
            for s in parse_range(args.s)
            for r in parse_range(args.r)
            for k in parse_range(args.k)
            for n in parse_range(args.n)
            if n >= 2 * s + 1 and 2 <= r <= k
        ]
        return [verify_ma_hou(quads, **common)]
    if name == "main":
        f = parse_graph(args.forbidden)
        return [
            verify_main_theorem_exact(
                f, args.s_value, args.r_value, parse_range(args.n),
                f_name=args.forbidden, **common,
            )
        ]
    if name == "gerbner":
        f = parse_graph(args.forbidden)
        return [
            verify_gerbner_slope(
                f, args.s_value, parse_range(args.n), f_name=args.forbidden, **common
            )
        ]
    if name == "forest":
        f = parse_graph(args.forbidden)
        return [
            verify_forest_theorem(
                f, args.s_value, parse_range(args.n), f_name=args.forbidden, **common
            )
        ]
    if name == "tutte-berge":
        return [verify_tutte_berge(max(parse_range(args.n)), **common)]
    if name == "color-critical":
        f = parse_graph(args.forbidden)
        return [
            verify_color_critical_components(
                f, args.r_value, parse_range(args.p), f_name=args.forbidden, **common
            )
        ]
    return [verify_cover_family_example(**common)]


def cmd_verify(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    reports = _run_verify(args)
    elapsed = time.perf_counter() - t0
    all_pass = all(r.passed for r in reports)
    for report in reports:
        for p in report.points:
            params = ",".join(
                f"{k}={v}" for k, v in p.items()
                if isinstance(v, (int, str)) and k not in ("verdict", "uniqueness", "notes")
            )
            line = f"[{report.theorem}] {params}: {p.get('verdict', '?')}"
            if "uniqueness" in p:
                line += f" (uniqueness: {p['uniqueness']})"
            print(line)
        print(f"[{report.theorem}] summary: {json.dumps(report.summary, sort_keys=True)}")
    if args.out:
        outdir = Path(args.out)
        payload = {"reports": [r.to_payload() for r in reports]}
        if args.format in ("json", "both"):
            _write_json(outdir, args.theorem, _envelope("verify", payload, elapsed))
        if args.format in ("csv", "both"):
            _write_csv(outdir, args.theorem, reports)
    if not all_pass:
        failures = [
            {"theorem": r.theorem, "points": r.failures(), "status": r.summary.get("status")}
            for r in reports
            if not r.passed
        ]
        print(json.dumps({"failures": failures}, sort_keys=True))
        return 1
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ceiling", type=int, default=None,
                   help=f"enumeration ceiling (<= {HARD_CEILING}; default: adaptive)")
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    p.add_argument("--out", default=None, help="directory for report files")
    p.add_argument("--format", choices=("json", "csv", "both"), default="both",
                   help="report formats to write (with --out)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchturan",
        description="Exact generalized Turán numbers under a matching constraint",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ex = sub.add_parser("ex", help="exact ex(n, K_r, family) with witnesses")
    p_ex.add_argument("--n", type=int, required=True)
    p_ex.add_argument("--r", type=int, default=2)
    p_ex.add_argument("--forbid", default="", help="comma-separated graph tokens")
    p_ex.add_argument("--forbid-family", default="", help="family expression, e.g. fp(C5,2)")
    p_ex.add_argument("--forbid-file", default="", help="graph6 corpus file of forbidden graphs")
    _add_common(p_ex)
    p_ex.set_defaults(func=cmd_ex)

    p_fam = sub.add_parser("family", help="cover family of a graph")
    p_fam.add_argument("--graph", required=True)
    p_fam.add_argument("--p", type=int, required=True)
    _add_common(p_fam)
    p_fam.set_defaults(func=cmd_family)

    p_con = sub.add_parser("construct", help="candidate extremal constructions")
    con_sub = p_con.add_subparsers(dest="construction", required=True)
    c_gns = con_sub.add_parser("gns", help="split construction with optimal filling")
    c_gns.add_argument("--n", type=int, required=True)
    c_gns.add_argument("--s", type=int, required=True)
    c_gns.add_argument("--forbid", required=True)
    c_gns.add_argument("--objective", choices=("edges", "kr"), default="edges")
    c_gns.add_argument("--r", type=int, default=None)
    _add_common(c_gns)
    c_gns.set_defaults(func=cmd_construct)
    c_clq = con_sub.add_parser("clique", help="odd clique on 2s+1 vertices")
    c_clq.add_argument("--s", type=int, required=True)
    _add_common(c_clq)
    c_clq.set_defaults(func=cmd_construct)
    c_for = con_sub.add_parser("forest-extremal", help="split construction plus odd cliques")
    c_for.add_argument("--n", type=int, required=True)
    c_for.add_argument("--p", type=int, required=True)
    c_for.add_argument("--t", type=int, required=True)
    c_for.add_argument("--F", dest="forbidden", required=True,
                       help="forest whose cover family fills the construction")
    _add_common(c_for)
    c_for.set_defaults(func=cmd_construct)
    c_tur = con_sub.add_parser("turan", help="balanced complete multipartite graph")
    c_tur.add_argument("--p", type=int, required=True)
    c_tur.add_argument("--k", type=int, required=True, help="number of parts")
    _add_common(c_tur)
    c_tur.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", help="theorem verification grids")
    ver_sub = p_ver.add_subparsers(dest="theorem", required=True)

    v_eg = ver_sub.add_parser("erdos-gallai")
    v_eg.add_argument("--n", required=True, help="range, e.g. 5..9")
    v_eg.add_argument("--s", required=True, help="range, e.g. 1..3")
    _add_common(v_eg)
    v_eg.set_defaults(func=cmd_verify)

    v_mh = ver_sub.add_parser("ma-hou")
    v_mh.add_argument("--n", required=True)
    v_mh.add_argument("--s", required=True)
    v_mh.add_argument("--r", required=True)
    v_mh.add_argument("--k", required=True)
    _add_common(v_mh)
    v_mh.set_defaults(func=cmd_verify)

    v_main = ver_sub.add_parser("main")
    v_main.add_argument("--F", dest="forbidden", required=True)
    v_main.add_argument("--s", dest="s_value", type=int, required=True)
    v_main.add_argument("--r", dest="r_value", type=int, required=True)
    v_main.add_argument("--n", required=True)
    _add_common(v_main)
    v_main.set_defaults(func=cmd_verify)

    v_ger = ver_sub.add_parser("gerbner")
    v_ger.add_argument("--F", dest="forbidden", required=True)
    v_ger.add_argument("--s", dest="s_value", type=int, required=True)
    v_ger.add_argument("--n", required=True)
    _add_common(v_ger)
    v_ger.set_defaults(func=cmd_verify)

    v_for = ver_sub.add_parser("forest")
    v_for.add_argument("--F", dest="forbidden", required=True)
    v_for.add_argument("--s", dest="s_value", type=int, required=True)
    v_for.add_argument("--n", required=True)
    _add_common(v_for)
    v_for.set_defaults(func=cmd_verify)

    v_tb = ver_sub.add_parser("tutte-berge")
    v_tb.add_argument("--n", required=True, help="range; the max is the sweep bound")
    _add_common(v_tb)
    v_tb.set_defaults(func=cmd_verify)

    v_cc = ver_sub.add_parser("color-critical")
    v_cc.add_argument("--F", dest="forbidden", required=True)
    v_cc.add_argument("--r", dest="r_value", type=int, required=True)
    v_cc.add_argument("--p", required=True, help="range of cover bounds")
    _add_common(v_cc)
    v_cc.set_defaults(func=cmd_verify)

    v_pent = ver_sub.add_parser("pentagon", help="pentagon cover-family worked example")
    _add_common(v_pent)
    v_pent.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.ceiling is not None and not 1 <= args.ceiling <= HARD_CEILING:
        print(f"--ceiling must be between 1 and {HARD_CEILING}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
