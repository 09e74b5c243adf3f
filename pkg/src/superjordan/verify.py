"""Catalog-wide verification sweeps: identities, orbit columns, decomposition
labels, even-part labels, witness replays, certificates, and lemma screens.

Every check returns structured rows; failures that correspond to recorded
errata are reported as logged exceptions rather than silent passes or hard
failures.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .algebra import SuperAlgebra, check_super_jordan, flatten
from .catalog import Catalog, CatalogEntry
from .certificates import closed_set_eval, failing_condition, separation_test, stability_test
from .degeneration import Verdict, eval_t_expression, verify_degeneration
from .invariants import (
    even_part,
    identify_algebra,
    nondegeneration_screen,
    orbit_dimension,
)

FAMILY_SAMPLES = (2, 3, 5)


@dataclass(frozen=True)
class CheckRow:
    check_id: str
    ok: bool
    logged: bool  # failure matches an erratum entry
    detail: str = ""

    @property
    def display(self) -> str:
        if self.ok:
            return f"PASS {self.check_id} {self.detail}".rstrip()
        if self.logged:
            return f"XFAIL(errata) {self.check_id} {self.detail}".rstrip()
        return f"FAIL {self.check_id} {self.detail}".rstrip()

    @property
    def acceptable(self) -> bool:
        return self.ok or self.logged


def _instances(cat: Catalog, entry: CatalogEntry) -> List[SuperAlgebra]:
    if entry.is_family:
        return [cat.lookup(entry.name, p) for p in FAMILY_SAMPLES]
    return [entry.algebra]


# ---------------------------------------------------------------------------
# identity and orbit sweeps
# ---------------------------------------------------------------------------


def verify_identities(cat: Catalog) -> Tuple[List[CheckRow], float]:
    """Supercommutativity + graded identity for every catalog entry.

    Family entries are checked symbolically over the rational-function field,
    which covers every parameter value at once."""
    rows = []
    t0 = time.time()
    for name in cat.names():
        J = cat.entry(name).algebra
        rep = check_super_jordan(J)
        rows.append(
            CheckRow(f"identity:{name}", rep.ok, False, rep.detail if not rep.ok else "")
        )
    return rows, time.time() - t0


def verify_orbits(cat: Catalog) -> List[CheckRow]:
    logged = cat.errata_keys()
    rows = []
    for name in cat.names():
        entry = cat.entry(name)
        if entry.is_family:
            for p in FAMILY_SAMPLES:
                od = orbit_dimension(cat.lookup(name, p))
                ok = od == entry.orbit
                rows.append(
                    CheckRow(
                        f"orbit:{name}@{p}",
                        ok,
                        (not ok) and f"orbit:{name}" in logged,
                        f"computed {od}, declared {entry.orbit}",
                    )
                )
        else:
            od = orbit_dimension(entry.algebra)
            ok = od == entry.orbit
            rows.append(
                CheckRow(
                    f"orbit:{name}",
                    ok,
                    (not ok) and f"orbit:{name}" in logged,
                    f"computed {od}, declared {entry.orbit}",
                )
            )
    return rows


# ---------------------------------------------------------------------------
# decomposition labels
# ---------------------------------------------------------------------------


def _interaction_blocks(J: SuperAlgebra) -> List[List[Tuple[int, int]]]:
    """Connected components of the basis-interaction graph."""
    verts = [(0, i) for i in range(J.m)] + [(1, p) for p in range(J.n)]
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def link_product(va, vb, comps):
        for parity, idx, val in comps:
            if val == 0:
                continue
            union(va, vb)
            union(va, (parity, idx))

    for i in range(J.m):
        for j in range(J.m):
            link_product((0, i), (0, j), [(0, k, J.alpha[i][j][k]) for k in range(J.m)])
        for p in range(J.n):
            link_product((0, i), (1, p), [(1, q, J.beta[i][p][q]) for q in range(J.n)])
    for p in range(J.n):
        for q in range(J.n):
            link_product((1, p), (1, q), [(0, k, J.delta[p][q][k]) for k in range(J.m)])

    groups: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda g: (-len(g), g))


def _sub_algebra(J: SuperAlgebra, block: Sequence[Tuple[int, int]]) -> SuperAlgebra:
    evens = [idx for parity, idx in block if parity == 0]
    odds = [idx for parity, idx in block if parity == 1]
    m, n = len(evens), len(odds)
    emap = {orig: new for new, orig in enumerate(evens)}
    omap = {orig: new for new, orig in enumerate(odds)}
    from .algebra import _freeze, _zero_tensor

    alpha = _zero_tensor(m, m, m)
    beta = _zero_tensor(m, n, n)
    gamma = _zero_tensor(n, m, n)
    delta = _zero_tensor(n, n, m)
    for i in evens:
        for j in evens:
            for k in evens:
                alpha[emap[i]][emap[j]][emap[k]] = J.alpha[i][j][k]
        for p in odds:
            for q in odds:
                beta[emap[i]][omap[p]][omap[q]] = J.beta[i][p][q]
                gamma[omap[p]][emap[i]][omap[q]] = J.gamma[p][i][q]
    for p in odds:
        for q in odds:
            for k in evens:
                delta[omap[p]][omap[q]][emap[k]] = J.delta[p][q][k]
    return SuperAlgebra(m, n, _freeze(alpha), _freeze(beta), _freeze(gamma), _freeze(delta))


def computed_decomposition(cat: Catalog, J: SuperAlgebra) -> List[str]:
    """Block structure of the multiplication table, each block identified
    against the low-dimensional catalog by fingerprint (or typed as (m,n))."""
    blocks = _interaction_blocks(J)
    cands = [(name, alg) for name, alg in cat.lowdim.items()]
    out = []
    for block in blocks:
        sub = _sub_algebra(J, block)
        label = identify_algebra(sub, cands)
        out.append(label if label else f"?({sub.m},{sub.n})")
    return sorted(out)


def verify_decompositions(cat: Catalog) -> List[CheckRow]:
    """Declared direct-sum labels must match the computed block structure;
    entries declared Indecomposable must not split."""
    logged = cat.errata_keys()
    rows = []
    unresolved = {"S9_3", "S10_3"}  # printed tables coincide; excluded from matching
    for name in cat.names():
        entry = cat.entry(name)
        J = cat.lookup(name, 2) if entry.is_family else entry.algebra
        blocks = computed_decomposition(cat, J)
        declared = entry.decomposition or ""
        key = f"decomposition:{name}"
        if declared.strip().lower() == "indecomposable":
            ok = len(blocks) == 1
            rows.append(
                CheckRow(key, ok, (not ok) and key in logged, f"blocks {blocks}")
            )
            continue
        declared_parts = sorted(p.strip() for p in declared.split("+"))
        if sorted(blocks) == declared_parts or _match_modulo_unresolved(
            blocks, declared_parts, unresolved
        ):
            rows.append(CheckRow(key, True, False, f"{'+'.join(blocks)}"))
        else:
            rows.append(
                CheckRow(
                    key,
                    False,
                    key in logged,
                    f"computed {'+'.join(blocks)}, declared {declared}",
                )
            )
    return rows


def _match_modulo_unresolved(blocks, declared_parts, unresolved) -> bool:
    if len(blocks) != len(declared_parts):
        return False
    for b, d in zip(sorted(blocks), sorted(declared_parts)):
        if b == d:
            continue
        if b in unresolved and d in unresolved:
            continue
        return False
    return True


def verify_even_parts(cat: Catalog) -> List[CheckRow]:
    rows = []
    for name in cat.names():
        entry = cat.entry(name)
        J = cat.lookup(name, 2) if entry.is_family else entry.algebra
        graph = cat.even_graph_for(J.m)
        cands = [(label, cat.node_algebra(label)) for label in graph.nodes]
        got = identify_algebra(even_part(J), cands)
        ok = got == entry.even_part_label
        rows.append(
            CheckRow(
                f"even-part:{name}",
                ok,
                False,
                f"identified {got}, declared {entry.even_part_label}",
            )
        )
    return rows


# ---------------------------------------------------------------------------
# witnesses and certificates
# ---------------------------------------------------------------------------


def resolve_witness_algebras(cat: Catalog, wit) -> Tuple[SuperAlgebra, SuperAlgebra]:
    if wit.source_param is not None:
        param = eval_t_expression(wit.source_param, wit.ramification())
        if param.is_constant():
            src = cat.lookup(wit.source, param.as_constant())
        else:
            src = cat.lookup(wit.source, param)
    else:
        src = cat.lookup(wit.source)
    tgt = cat.lookup(wit.target)
    return src, tgt


def verify_witnesses(cat: Catalog) -> List[Tuple[object, Verdict, CheckRow]]:
    logged = cat.errata_keys()
    out = []
    for wit in cat.witnesses():
        src, tgt = resolve_witness_algebras(cat, wit)
        verdict = verify_degeneration(wit, src, tgt)
        key = f"witness:{wit.label}" if wit.label else f"witness:{wit.source}->{wit.target}"
        ok = verdict.verified
        out.append(
            (
                wit,
                verdict,
                CheckRow(
                    key,
                    ok,
                    (not ok) and key in logged,
                    f"{verdict.status}"
                    + (f" ({verdict.mode_used})" if verdict.mode_used else "")
                    + (f": {verdict.detail}" if verdict.detail else ""),
                ),
            )
        )
    return out


def witness_summary(rows) -> Tuple[int, int, int]:
    """(verified, published_total, published_verified)"""
    published = [r for r in rows if r[0].status.startswith("published")]
    return (
        sum(1 for r in rows if r[1].verified),
        len(published),
        sum(1 for r in published if r[1].verified),
    )


def verify_certificates(
    cat: Catalog, trials: int = 1000, seed: int = 0, separation_threshold: float = 0.99
) -> List[CheckRow]:
    logged = cat.errata_keys()
    rows = []
    need = int(trials * separation_threshold)
    for cs in cat.closed_sets():
        entry = cat.entry(cs.source)
        for J in _instances(cat, entry):
            table = flatten(J, cs.basis)
            sat = closed_set_eval(table, cs)
            key = f"certificate:{cs.label}:source"
            detail = "" if sat else f"{J.name} fails {failing_condition(table, cs).text}"
            rows.append(CheckRow(key, sat, (not sat) and key in logged, detail))
            if not sat:
                continue
            st = stability_test(cs, table, trials=trials, seed=seed)
            key = f"certificate:{cs.label}:stability"
            ok = st.hits == trials
            rows.append(
                CheckRow(key, ok, (not ok) and key in logged, f"{st.hits}/{trials}")
            )
        for tname in cs.targets:
            tentry = cat.entry(tname)
            for T in _instances(cat, tentry):
                sep = separation_test(cs, flatten(T, cs.basis), trials=trials, seed=seed)
                key = f"certificate:{cs.label}:separation:{tname}"
                ok = sep.hits >= need
                rows.append(
                    CheckRow(
                        key, ok, (not ok) and key in logged, f"{sep.hits}/{trials}"
                    )
                )
    return rows


# ---------------------------------------------------------------------------
# lemma screens
# ---------------------------------------------------------------------------


def verify_lemma_screens(cat: Catalog, quick: bool = True) -> List[CheckRow]:
    rows = []
    for grp in cat.lemma_pairs:
        e = cat.entry(grp.source)
        A = cat.lookup(grp.source, FAMILY_SAMPLES[0]) if e.is_family else cat.lookup(grp.source)
        graph = cat.even_graph_for(A.m)
        for tgt in grp.targets:
            te = cat.entry(tgt)
            B = cat.lookup(tgt, FAMILY_SAMPLES[0]) if te.is_family else cat.lookup(tgt)
            rep = nondegeneration_screen(
                A,
                B,
                even_label_a=e.even_part_label,
                even_label_b=te.even_part_label,
                even_reachable=graph.reachable,
                quick=quick,
            )
            detail = rep.violations[0].item if rep.violations else "no obstruction"
            rows.append(
                CheckRow(f"screen:{grp.source}-x->{tgt}", bool(rep), False, detail)
            )
    return rows


def screen_pair(cat: Catalog, a: str, b: str, quick: bool = False):
    ea, eb = cat.entry(a), cat.entry(b)
    A = cat.lookup(a, FAMILY_SAMPLES[0]) if ea.is_family else cat.lookup(a)
    B = cat.lookup(b, FAMILY_SAMPLES[0]) if eb.is_family else cat.lookup(b)
    graph = cat.even_graph_for(A.m) if A.m == B.m else None
    return nondegeneration_screen(
        A,
        B,
        even_label_a=ea.even_part_label,
        even_label_b=eb.even_part_label,
        even_reachable=graph.reachable if graph else None,
        quick=quick,
    )


# ---------------------------------------------------------------------------
# ambient variety dimensions (cross-type remark)
# ---------------------------------------------------------------------------


def ambient_dimension(m: int, n: int) -> int:
    return m ** 3 + 3 * m * n * n


def verify_type_remark() -> List[CheckRow]:
    expected = {(4, 0): 64, (3, 1): 36, (2, 2): 32, (1, 3): 28}
    rows = []
    values = {}
    for (m, n), want in expected.items():
        got = ambient_dimension(m, n)
        values[(m, n)] = got
        rows.append(
            CheckRow(f"ambient:({m},{n})", got == want, False, f"{got} (expected {want})")
        )
    distinct = len(set(values.values())) == len(values)
    rows.append(
        CheckRow("ambient:pairwise-distinct", distinct, False, f"{sorted(values.values())}")
    )
    return rows
