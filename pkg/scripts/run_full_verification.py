#!/usr/bin/env python3
"""Run every verification sweep and write a combined report.

Usage:
    python scripts/run_full_verification.py [--out reports] [--trials 1000] [--seed 0]

Produces <out>/report.txt (one PASS/FAIL/XFAIL line per check) and one DOT
file per type with the verified degeneration graph.  Exit status is 0 when
no check line is a hard FAIL.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from superjordan import verify as V
from superjordan.atlas import build_graph, component_report, edge_monotonicity_violations, export_dot
from superjordan.catalog import Catalog


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="reports")
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--catalog", default=None)
    args = parser.parse_args()

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    cat = Catalog(args.catalog)
    lines = []
    fails = 0

    def emit(row):
        nonlocal fails
        lines.append(row.display)
        if not row.acceptable:
            fails += 1

    t0 = time.time()
    id_rows, elapsed = V.verify_identities(cat)
    for row in id_rows:
        emit(row)
    lines.append(f"# identity suite: {sum(r.ok for r in id_rows)}/{len(id_rows)} in {elapsed:.1f}s")

    for row in V.verify_orbits(cat):
        emit(row)
    for row in V.verify_type_remark():
        emit(row)
    for row in V.verify_decompositions(cat):
        emit(row)
    for row in V.verify_even_parts(cat):
        emit(row)

    wrows = V.verify_witnesses(cat)
    for _, _, row in wrows:
        emit(row)
    verified, pub_total, pub_ok = V.witness_summary(wrows)
    lines.append(f"# witnesses: {pub_ok}/{pub_total} published rows verified, {verified} total")

    for row in V.verify_certificates(cat, trials=args.trials, seed=args.seed):
        emit(row)
    for row in V.verify_lemma_screens(cat):
        emit(row)

    verified_pairs = [(w, v) for w, v, _ in wrows if v.verified]
    expected = {(1, 3): (11, 12), (2, 2): (25, 13), (3, 1): (21, 15)}
    for mn, (count, dim) in expected.items():
        g = build_graph(mn, cat, verified_pairs)
        rep = component_report(mn, cat, g)
        viol = edge_monotonicity_violations(g)
        ok = rep.ok(count, dim) and not viol
        lines.append(
            f"{'PASS' if ok else 'FAIL'} components:type{mn[0]}{mn[1]} "
            f"{rep.component_count} components ({rep.rigid_count} rigid + "
            f"{rep.family_count} family), dimension {rep.computed_dimension}"
        )
        if not ok:
            fails += 1
        dot_path = outdir / f"type{mn[0]}{mn[1]}.dot"
        dot_path.write_text(export_dot(g), encoding="utf-8")

    lines.append(f"# total time {time.time() - t0:.0f}s; hard failures: {fails}")
    report = outdir / "report.txt"
    report.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print("\n".join(lines[-12:]))
    print(f"report written to {report}")
    return 1 if fails else 0


if __name__ == "__main__":
    sys.exit(main())
