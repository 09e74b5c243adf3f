"""Command-line front end: batch verification, single-pair queries, exports.

Report lines use the stable format ``PASS|FAIL <check-id> <details>``
(``XFAIL(errata) ...`` for failures recorded in the errata ledger).  Exit
status 0 means the report contains no FAIL lines; 1 means check failures;
2 means usage or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import verify as V
from .algebra import check_super_jordan
from .catalog import Catalog, MissingParameter, UnknownName
from .certificates import closed_set_eval, parse_closed_set_file, separation_test, stability_test
from .degeneration import parse_witness_file, verify_degeneration
from .envelope import EnvelopeConfig, envelope_jordan_check
from .invariants import derivation_dims, orbit_dimension
from .tablefmt import parse_algebra_file

TYPE_ALIASES = {
    "1,3": (1, 3), "13": (1, 3), "type13": (1, 3),
    "2,2": (2, 2), "22": (2, 2), "type22": (2, 2),
    "3,1": (3, 1), "31": (3, 1), "type31": (3, 1),
}


class Reporter:
    def __init__(self, fmt: str = "text", out=None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self.fails = 0

    def row(self, row: V.CheckRow):
        self.line(row.display)
        if not row.acceptable:
            self.fails += 1

    def line(self, text: str):
        if self.fmt == "tsv":
            parts = text.split(" ", 2)
            print("\t".join(parts), file=self.out)
        else:
            print(text, file=self.out)

    @property
    def status(self) -> int:
        return 1 if self.fails else 0


def _load_catalog(args) -> Catalog:
    return Catalog(Path(args.catalog) if args.catalog else None)


def _entry_algebra(cat: Catalog, name: str, param=None):
    entry = cat.entry(name)
    if entry.is_family and param is None:
        return cat.lookup(name, V.FAMILY_SAMPLES[0])
    return cat.lookup(name, param)


def cmd_verify_catalog(args, rep: Reporter) -> int:
    cat = _load_catalog(args)
    id_rows, elapsed = V.verify_identities(cat)
    for row in id_rows:
        rep.row(row)
    ok = sum(1 for r in id_rows if r.ok)
    rep.line(f"# {ok}/{len(id_rows)} algebras verified in {elapsed:.1f}s")
    for row in V.verify_orbits(cat):
        rep.row(row)
    for row in V.verify_type_remark():
        rep.row(row)
    if args.full:
        for row in V.verify_decompositions(cat):
            rep.row(row)
        for row in V.verify_even_parts(cat):
            rep.row(row)
    return rep.status


def cmd_check(args, rep: Reporter) -> int:
    af = parse_algebra_file(args.file)
    J = af.build()
    if af.family:
        from .catalog import instantiate

        J = instantiate(J, V.FAMILY_SAMPLES[0])
    result = check_super_jordan(J)
    rep.row(
        V.CheckRow(
            f"identity:{af.name or args.file}", result.ok, False,
            result.detail if not result.ok else "",
        )
    )
    return rep.status


def cmd_derive(args, rep: Reporter) -> int:
    cat = _load_catalog(args)
    J = _entry_algebra(cat, args.name)
    d = derivation_dims(J)
    rep.line(f"PASS derive:{args.name} even={d.even_dim} odd={d.odd_dim} total={d.total}")
    return 0


def cmd_orbit(args, rep: Reporter) -> int:
    cat = _load_catalog(args)
    entry = cat.entry(args.name)
    J = _entry_algebra(cat, args.name)
    od = orbit_dimension(J)
    declared = entry.orbit
    ok = declared is None or od == declared
    logged = f"orbit:{args.name}" in cat.errata_keys()
    rep.row(
        V.CheckRow(
            f"orbit:{args.name}", ok, (not ok) and logged,
            f"computed {od}" + (f", declared {declared}" if declared is not None else ""),
        )
    )
    return rep.status


def cmd_degenerate(args, rep: Reporter) -> int:
    cat = _load_catalog(args)
    if args.all:
        paths = sorted(Path(args.all).glob("*.wit"))
    else:
        paths = [Path(args.file)]
    logged = cat.errata_keys()
    for path in paths:
        wit = parse_witness_file(path)
        src, tgt = V.resolve_witness_algebras(cat, wit)
        verdict = verify_degeneration(wit, src, tgt)
        key = f"witness:{wit.label}" if wit.label else f"witness:{path.name}"
        rep.row(
            V.CheckRow(
                key, verdict.verified, (not verdict.verified) and key in logged,
                f"{verdict.status}"
                + (f" ({verdict.mode_used})" if verdict.mode_used else "")
                + (f": {verdict.detail}" if verdict.detail else ""),
            )
        )
    return rep.status


def cmd_screen(args, rep: Reporter) -> int:
    cat = _load_catalog(args)
    report = V.screen_pair(cat, args.source, args.target)
    for line in report.lines():
        rep.line(("PASS " if report.violations else "INFO ") + f"screen:{args.source}-x->{args.target} " + line)
    return 0


def cmd_closedset(args, rep: Reporter) -> int:
    cat = _load_catalog(args)
    cs = parse_closed_set_file(args.file)
    from .algebra import flatten

    entry = cat.entry(cs.source)
    logged = cat.errata_keys()
    sources = (
        [cat.lookup(cs.source, p) for p in V.FAMILY_SAMPLES]
        if entry.is_family
        else [cat.lookup(cs.source)]
    )
    for J in sources:
        table = flatten(J, cs.basis)
        sat = closed_set_eval(table, cs)
        key = f"certificate:{cs.label}:source"
        rep.row(V.CheckRow(key, sat, (not sat) and key in logged, J.name))
        if sat:
            st = stability_test(cs, table, trials=args.trials, seed=args.seed)
            key = f"certificate:{cs.label}:stability"
            rep.row(
                V.CheckRow(key, st.hits == args.trials, False, f"{st.hits}/{args.trials}")
            )
    need = int(args.trials * 0.99)
    for tname in cs.targets:
        tentry = cat.entry(tname)
        targets = (
            [cat.lookup(tname, p) for p in V.FAMILY_SAMPLES]
            if tentry.is_family
            else [cat.lookup(tname)]
        )
        for T in targets:
            sep = separation_test(cs, flatten(T, cs.basis), trials=args.trials, seed=args.seed)
            key = f"certificate:{cs.label}:separation:{tname}"
            rep.row(
                V.CheckRow(
                    key, sep.hits >= need, (sep.hits < need) and key in logged,
                    f"{sep.hits}/{args.trials}",
                )
            )
    return rep.status


def cmd_envelope(args, rep: Reporter) -> int:
    cat = _load_catalog(args)
    J = _entry_algebra(cat, args.name)
    result = envelope_jordan_check(J, EnvelopeConfig(k=args.k))
    rep.row(
        V.CheckRow(
            f"envelope:{args.name}:k={args.k}", result.ok, False,
            f"{result.pairs_checked} pairs" + (f"; {result.detail}" if result.detail else ""),
        )
    )
    return rep.status


def _build_graph(cat: Catalog, mn):
    from .atlas import build_graph

    wrows = V.verify_witnesses(cat)
    verified = [(w, v) for w, v, _ in wrows if v.verified]
    return build_graph(mn, cat, verified)


def cmd_graph(args, rep: Reporter) -> int:
    cat = _load_catalog(args)
    mn = TYPE_ALIASES[args.type]
    from .atlas import edge_monotonicity_violations, export_dot

    g = _build_graph(cat, mn)
    viol = edge_monotonicity_violations(g)
    rep.row(
        V.CheckRow(
            f"graph:type{mn[0]}{mn[1]}", not viol, False,
            f"{len(g.nodes)} nodes, {len(g.edges)} verified edges"
            + (f"; monotonicity violations {viol}" if viol else ""),
        )
    )
    if args.dot:
        text = export_dot(g)
        if args.dot == "-":
            rep.out.write(text)
        else:
            Path(args.dot).write_text(text, encoding="utf-8")
            rep.line(f"# DOT written to {args.dot}")
    return rep.status


def cmd_components(args, rep: Reporter) -> int:
    cat = _load_catalog(args)
    mn = TYPE_ALIASES[args.type]
    from .atlas import component_report

    g = _build_graph(cat, mn)
    report = component_report(mn, cat, g)
    expected = {(1, 3): (11, 12), (2, 2): (25, 13), (3, 1): (21, 15)}[mn]
    ok = report.ok(*expected)
    rep.row(
        V.CheckRow(
            f"components:type{mn[0]}{mn[1]}", ok, False,
            f"{report.component_count} components ({report.rigid_count} rigid"
            f" + {report.family_count} family), dimension {report.computed_dimension}"
            + (f"; rigidity violations {report.rigidity_violations}" if report.rigidity_violations else "")
            + (f"; unreachable {report.unreachable}" if report.unreachable else ""),
        )
    )
    return rep.status


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="superjordan",
        description="Exact verification of the 4-dimensional Jordan superalgebra classification",
    )
    parser.add_argument("--catalog", help="data root override (default: packaged data or $SUPERJORDAN_DATA)")
    parser.add_argument("--format", choices=("text", "tsv"), default="text")
    parser.add_argument("--output", help="write the report to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-catalog", help="identity + orbit suite over all 149 entries")
    p.add_argument("--full", action="store_true", help="also check decompositions and even parts")
    p.set_defaults(func=cmd_verify_catalog)

    p = sub.add_parser("check", help="check one .alg file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive", help="superderivation dimensions of a catalog entry")
    p.add_argument("name")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("orbit", help="orbit dimension of a catalog entry")
    p.add_argument("name")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("degenerate", help="replay witness file(s)")
    p.add_argument("file", nargs="?")
    p.add_argument("--all", help="directory of .wit files")
    p.set_defaults(func=cmd_degenerate)

    p = sub.add_parser("screen", help="necessary-condition screen for a pair")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("closedset", help="evaluate a certificate file with randomized trials")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_closedset)

    p = sub.add_parser("envelope", help="Grassmann-envelope Jordan check")
    p.add_argument("name")
    p.add_argument("-k", type=int, default=4)
    p.set_defaults(func=cmd_envelope)

    p = sub.add_parser("graph", help="build the verified degeneration graph of a type")
    p.add_argument("type", choices=sorted(TYPE_ALIASES))
    p.add_argument("--dot", help="write DOT here ('-' for stdout)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("components", help="irreducible-component accounting of a type")
    p.add_argument("type", choices=sorted(TYPE_ALIASES))
    p.set_defaults(func=cmd_components)

    args = parser.parse_args(argv)
    out = None
    if args.output:
        out = open(args.output, "w", encoding="utf-8")
    rep = Reporter(args.format, out)
    try:
        if args.command == "degenerate" and not args.file and not args.all:
            parser.error("degenerate needs a file or --all DIR")
        code = args.func(args, rep)
    except (UnknownName, MissingParameter, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if out:
            out.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
