"""Degeneration-invariant quantities: superderivations and orbit dimension,
the associated algebra, the Burde invariant, associativity, even-part
identification, and the necessary-condition screen for non-degenerations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import linalg
from .algebra import (
    SuperAlgebra,
    _freeze,
    _zero_tensor,
    flatten,
    power_filtration,
)


class TypeMismatch(ValueError):
    """Screen rejects pairs of different (m, n); cross-type degenerations
    cannot exist (the ambient varieties have different dimensions)."""


@dataclass(frozen=True)
class DerivationSpace:
    even_dim: int
    odd_dim: int

    @property
    def total(self) -> int:
        return self.even_dim + self.odd_dim


def _leibniz_rows(J: SuperAlgebra, d_parity: int) -> List[List[Fraction]]:
    """Rows of the linear system D(xy) = D(x)y + (-1)^{|D||x|} x D(y) over
    the block unknowns of a parity-|D| linear map."""
    m, n = J.m, J.n
    if d_parity == 0:
        # unknowns: E[i][j] (m*m) then F[p][q] (n*n)
        n_unknowns = m * m + n * n

        def d_basis(parity: int, idx: int):
            if parity == 0:
                return [(0, j, idx * m + j) for j in range(m)]
            return [(1, q, m * m + idx * n + q) for q in range(n)]

    else:
        # unknowns: R[i][q] (m*n) then S[p][k] (n*m)
        n_unknowns = 2 * m * n

        def d_basis(parity: int, idx: int):
            if parity == 0:
                return [(1, q, idx * n + q) for q in range(n)]
            return [(0, k, m * n + idx * m + k) for k in range(m)]

    basis = [(0, i) for i in range(m)] + [(1, p) for p in range(n)]

    def product_coords(pa: int, ia: int, pb: int, ib: int) -> List[Tuple[int, int, Fraction]]:
        if pa == 0 and pb == 0:
            return [(0, k, J.alpha[ia][ib][k]) for k in range(m)]
        if pa == 0 and pb == 1:
            return [(1, q, J.beta[ia][ib][q]) for q in range(n)]
        if pa == 1 and pb == 0:
            return [(1, q, J.gamma[ia][ib][q]) for q in range(n)]
        return [(0, k, J.delta[ia][ib][k]) for k in range(m)]

    rows: List[List[Fraction]] = []
    for pa, ia in basis:
        for pb, ib in basis:
            # coefficient dicts keyed by (result_parity, result_idx)
            acc: Dict[Tuple[int, int], Dict[int, Fraction]] = {}

            def add(rp: int, ri: int, unknown: int, coeff: Fraction):
                if coeff == 0:
                    return
                cell = acc.setdefault((rp, ri), {})
                cell[unknown] = cell.get(unknown, Fraction(0)) + coeff

            # D(x_a x_b)
            for rp, ri, c in product_coords(pa, ia, pb, ib):
                if c == 0:
                    continue
                for tp, ti, unk in d_basis(rp, ri):
                    add(tp, ti, unk, c)
            # - D(x_a) x_b
            for tp, ti, unk in d_basis(pa, ia):
                for rp, ri, c in product_coords(tp, ti, pb, ib):
                    add(rp, ri, unk, -c)
            # - (-1)^{|D| |x_a|} x_a D(x_b)
            sign = -1 if (d_parity * pa) % 2 else 1
            for tp, ti, unk in d_basis(pb, ib):
                for rp, ri, c in product_coords(pa, ia, tp, ti):
                    add(rp, ri, unk, -sign * c)

            for cell in acc.values():
                row = [Fraction(0)] * n_unknowns
                for unk, c in cell.items():
                    row[unk] = c
                if any(x != 0 for x in row):
                    rows.append(row)
    return rows


def derivation_dims(J: SuperAlgebra) -> DerivationSpace:
    """Dimensions of the even and odd superderivation spaces."""
    even_rows = _leibniz_rows(J, 0)
    odd_rows = _leibniz_rows(J, 1)
    m, n = J.m, J.n
    even_dim = (m * m + n * n) - linalg.rank(even_rows) if (m or n) else 0
    odd_dim = (2 * m * n) - linalg.rank(odd_rows) if (m and n) else 0
    return DerivationSpace(even_dim, odd_dim)


def orbit_dimension(J: SuperAlgebra) -> int:
    """(m+n)^2 minus the total superderivation dimension.

    This reading of the orbit-dimension formula reproduces the published
    orbit columns (16 - 12 = 4, 16 - 9 = 7, ...), unlike the graded
    m^2 + n^2 alternative.
    """
    d = derivation_dims(J)
    return (J.m + J.n) ** 2 - d.total


def ungraded_derivation_dim(table) -> int:
    """Derivation dimension of a flattened (ungraded) multiplication table."""
    d = len(table)
    rows: List[List[Fraction]] = []
    # unknowns D[a][b]: x_a -> sum_b D[a][b] x_b
    for a in range(d):
        for b in range(d):
            for k in range(d):
                row = [Fraction(0)] * (d * d)
                # D(x_a x_b)_k = sum_c C[a][b][c] D[c][k]
                for c in range(d):
                    if table[a][b][c] != 0:
                        row[c * d + k] += table[a][b][c]
                # - (D(x_a) x_b)_k = - sum_c D[a][c] C[c][b][k]
                for c in range(d):
                    if table[c][b][k] != 0:
                        row[a * d + c] -= table[c][b][k]
                # - (x_a D(x_b))_k
                for c in range(d):
                    if table[a][c][k] != 0:
                        row[b * d + c] -= table[a][c][k]
                if any(x != 0 for x in row):
                    rows.append(row)
    if not rows:
        return d * d
    return d * d - linalg.rank(rows)


def ungraded_power_dims(table, r_max: Optional[int] = None) -> List[int]:
    d = len(table)
    if r_max is None:
        r_max = d
    full = [[Fraction(1 if i == j else 0) for j in range(d)] for i in range(d)]

    def prod_span(U, W):
        vecs = []
        for u in U:
            for w in W:
                out = [Fraction(0)] * d
                for a in range(d):
                    if u[a] == 0:
                        continue
                    for b in range(d):
                        if w[b] == 0:
                            continue
                        c = u[a] * w[b]
                        row = table[a][b]
                        for k in range(d):
                            if row[k] != 0:
                                out[k] += c * row[k]
                if any(x != 0 for x in out):
                    vecs.append(out)
        return linalg.row_reduce_basis(vecs)

    powers = [full]
    dims = [d]
    for r in range(2, r_max + 1):
        vecs = []
        for i in range(1, r):
            vecs.extend(prod_span(powers[i - 1], powers[r - i - 1]))
        basis = linalg.row_reduce_basis(vecs)
        powers.append(basis)
        dims.append(len(basis))
    return dims


def associated_algebra(J: SuperAlgebra) -> SuperAlgebra:
    """Keep only the odd-times-odd products; zero the rest."""
    m, n = J.m, J.n
    return SuperAlgebra(
        m,
        n,
        _freeze(_zero_tensor(m, m, m)),
        _freeze(_zero_tensor(m, n, n)),
        _freeze(_zero_tensor(n, m, n)),
        J.delta,
        name=f"a({J.name})" if J.name else "",
        basis_order=J.basis_order,
    )


def is_associative(J: SuperAlgebra) -> bool:
    table = flatten(J)
    d = len(table)
    for a in range(d):
        for b in range(d):
            for c in range(d):
                for l in range(d):
                    lhs = sum(
                        (table[a][b][k] * table[k][c][l] for k in range(d)),
                        Fraction(0),
                    )
                    rhs = sum(
                        (table[b][c][k] * table[a][k][l] for k in range(d)),
                        Fraction(0),
                    )
                    if lhs != rhs:
                        return False
    return True


def table_is_associative(table) -> bool:
    d = len(table)
    for a in range(d):
        for b in range(d):
            for c in range(d):
                for l in range(d):
                    lhs = sum((table[a][b][k] * table[k][c][l] for k in range(d)), Fraction(0))
                    rhs = sum((table[b][c][k] * table[a][k][l] for k in range(d)), Fraction(0))
                    if lhs != rhs:
                        return False
    return True


# ---------------------------------------------------------------------------
# Burde invariant
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BurdeValue:
    i: int
    j: int
    status: str  # "defined" | "not_defined" | "not_constant"
    value: Optional[Fraction] = None
    samples_used: int = 0

    @property
    def defined(self) -> bool:
        return self.status == "defined"


def _left_mult(table, x: Sequence[Fraction]):
    d = len(table)
    return [
        [sum((x[a] * table[a][b][k] for a in range(d)), Fraction(0)) for b in range(d)]
        for k in range(d)
    ]


def _mat_mul(A, B):
    d = len(A)
    return [
        [sum((A[i][k] * B[k][j] for k in range(d)), Fraction(0)) for j in range(d)]
        for i in range(d)
    ]


def _mat_pow(A, e: int):
    out = A
    for _ in range(e - 1):
        out = _mat_mul(out, A)
    return out


def _trace(A) -> Fraction:
    return sum((A[i][i] for i in range(len(A))), Fraction(0))


def burde_invariant(
    J: SuperAlgebra, i: int = 1, j: int = 1, trials: int = 16, seed: int = 0
) -> BurdeValue:
    """Sampled value of tr(L(x)^i) tr(L(y)^j) / tr(L(x)^i L(y)^j).

    Exact agreement across all surviving samples is required; the invariant
    is a ratio of polynomials in the structure constants, so agreement on
    random points is decisive evidence and disagreement is a proof of
    non-constancy.
    """
    if i < 1 or j < 1:
        raise ValueError("exponents must be >= 1")
    if trials < 2:
        raise ValueError("need at least 2 trials")
    table = flatten(J)
    d = len(table)
    rng = random.Random(seed)
    value: Optional[Fraction] = None
    used = 0
    for _ in range(trials):
        x = [Fraction(rng.randint(-3, 3)) for _ in range(d)]
        y = [Fraction(rng.randint(-3, 3)) for _ in range(d)]
        lx = _mat_pow(_left_mult(table, x), i)
        ly = _mat_pow(_left_mult(table, y), j)
        num = _trace(lx) * _trace(ly)
        den = _trace(_mat_mul(lx, ly))
        if num == 0 or den == 0:
            continue
        used += 1
        v = num / den
        if value is None:
            value = v
        elif value != v:
            return BurdeValue(i, j, "not_constant", samples_used=used)
    if value is None:
        return BurdeValue(i, j, "not_defined", samples_used=0)
    return BurdeValue(i, j, "defined", value=value, samples_used=used)


# ---------------------------------------------------------------------------
# Even part and fingerprint identification
# ---------------------------------------------------------------------------


def even_part(J: SuperAlgebra) -> SuperAlgebra:
    """The even subalgebra (restriction of alpha), as a type (m, 0) algebra."""
    m = J.m
    return SuperAlgebra(
        m,
        0,
        J.alpha,
        _freeze(_zero_tensor(m, 0, 0)),
        _freeze(_zero_tensor(0, m, 0)),
        _freeze(_zero_tensor(0, 0, m)),
        name=f"({J.name})_0" if J.name else "",
    )


def centroid_dim(table) -> int:
    """Dimension of {phi : phi(xy) = phi(x)y = x phi(y)} on a flattened table.

    Counts block multiplicity, so it separates direct sums from
    indecomposable algebras with otherwise equal invariants."""
    d = len(table)
    rows: List[List[Fraction]] = []
    for a in range(d):
        for b in range(d):
            for l in range(d):
                # phi(x_a x_b)_l - (phi(x_a) x_b)_l = 0
                row = [Fraction(0)] * (d * d)
                for k in range(d):
                    if table[a][b][k] != 0:
                        row[k * d + l] += table[a][b][k]
                for c in range(d):
                    if table[c][b][l] != 0:
                        row[a * d + c] -= table[c][b][l]
                if any(x != 0 for x in row):
                    rows.append(row)
                # phi(x_a x_b)_l - (x_a phi(x_b))_l = 0
                row = [Fraction(0)] * (d * d)
                for k in range(d):
                    if table[a][b][k] != 0:
                        row[k * d + l] += table[a][b][k]
                for c in range(d):
                    if table[a][c][l] != 0:
                        row[b * d + c] -= table[a][c][l]
                if any(x != 0 for x in row):
                    rows.append(row)
    if not rows:
        return d * d
    return d * d - linalg.rank(rows)


def algebra_fingerprint(J: SuperAlgebra) -> tuple:
    """Isomorphism-invariant signature used to identify small Jordan algebras:
    power-filtration dims, derivation dims, associativity, annihilator dim,
    the rank of the trace form tr(L(x)L(y)), and the centroid dimension."""
    dims = power_filtration(J, max(J.m + J.n, 4))
    ders = derivation_dims(J)
    table = flatten(J)
    d = len(table)
    # annihilator = nullspace of x -> (x * e_b)_k as a map on coordinates
    ann_matrix = [
        [table[a][b][k] for a in range(d)] for b in range(d) for k in range(d)
    ]
    ann_dim = d - linalg.rank(ann_matrix)
    lmats = [_left_mult(table, [Fraction(1 if a == ii else 0) for a in range(d)]) for ii in range(d)]
    tform = [[_trace(_mat_mul(lmats[a], lmats[b])) for b in range(d)] for a in range(d)]
    tf_rank = linalg.rank(tform)
    return (
        tuple(dims),
        (ders.even_dim, ders.odd_dim),
        is_associative(J),
        ann_dim,
        tf_rank,
        centroid_dim(table),
    )


def identify_algebra(
    J: SuperAlgebra, candidates: Sequence[Tuple[str, SuperAlgebra]]
) -> Optional[str]:
    """Fingerprint match against labeled candidates; None when ambiguous."""
    fp = algebra_fingerprint(J)
    hits = [label for label, cand in candidates if algebra_fingerprint(cand) == fp]
    if len(hits) == 1:
        return hits[0]
    return None


# ---------------------------------------------------------------------------
# Non-degeneration screen
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScreenViolation:
    item: str  # power-dims | even-part | associated-algebra | burde | associativity | orbit-dimension
    detail: str


@dataclass(frozen=True)
class ScreenReport:
    source: str
    target: str
    violations: Tuple[ScreenViolation, ...]

    def __bool__(self):
        return bool(self.violations)

    def lines(self) -> List[str]:
        if not self.violations:
            return [f"{self.source} -> {self.target}: no obstruction found"]
        return [
            f"{self.source} -/-> {self.target}: {v.item} violation: {v.detail}"
            for v in self.violations
        ]


BURDE_PAIRS = ((1, 1), (1, 2), (2, 2))


def _screen_core(
    A: SuperAlgebra,
    B: SuperAlgebra,
    *,
    burde_pairs=BURDE_PAIRS,
    trials: int = 16,
    seed: int = 0,
) -> List[ScreenViolation]:
    """Lemma items (1), (4), (5): power dims, Burde, associativity."""
    out = []
    da = power_filtration(A)
    db = power_filtration(B)
    for r, (pa, pb) in enumerate(zip(da, db), start=1):
        for idx, part in ((0, "even"), (1, "odd")):
            if pa[idx] < pb[idx]:
                out.append(
                    ScreenViolation(
                        "power-dims",
                        f"dim (J^{r})_{part} {pa[idx]} < {pb[idx]}",
                    )
                )
    for i, j in burde_pairs:
        ba = burde_invariant(A, i, j, trials=trials, seed=seed)
        bb = burde_invariant(B, i, j, trials=trials, seed=seed)
        if ba.defined and bb.defined and ba.value != bb.value:
            out.append(
                ScreenViolation(
                    "burde", f"c_{{{i},{j}}}: {ba.value} vs {bb.value}"
                )
            )
    if is_associative(A) and not is_associative(B):
        out.append(ScreenViolation("associativity", "source associative, target not"))
    return out


def nondegeneration_screen(
    A: SuperAlgebra,
    B: SuperAlgebra,
    *,
    even_label_a: Optional[str] = None,
    even_label_b: Optional[str] = None,
    even_reachable: Optional[Callable[[str, str], bool]] = None,
    orbit_a: Optional[int] = None,
    orbit_b: Optional[int] = None,
    burde_pairs=BURDE_PAIRS,
    trials: int = 16,
    seed: int = 0,
    quick: bool = False,
) -> ScreenReport:
    """Collect every violated necessary condition for A -> B.

    An empty report means "no obstruction found", never "degeneration
    exists".  Cross-type pairs are rejected outright.  With ``quick`` the
    cheap conditions run first and the scan stops at the first violation.
    """
    if (A.m, A.n) != (B.m, B.n):
        raise TypeMismatch(f"({A.m},{A.n}) vs ({B.m},{B.n})")
    violations: List[ScreenViolation] = []

    def done() -> bool:
        return quick and bool(violations)

    da = power_filtration(A)
    db = power_filtration(B)
    for r, (pa, pb) in enumerate(zip(da, db), start=1):
        for idx, part in ((0, "even"), (1, "odd")):
            if pa[idx] < pb[idx]:
                violations.append(
                    ScreenViolation("power-dims", f"dim (J^{r})_{part} {pa[idx]} < {pb[idx]}")
                )

    if not done() and even_label_a and even_label_b and even_reachable is not None:
        if not even_reachable(even_label_a, even_label_b):
            violations.append(
                ScreenViolation(
                    "even-part", f"{even_label_a} does not reach {even_label_b}"
                )
            )

    if not done():
        oa = orbit_dimension(A) if orbit_a is None else orbit_a
        ob = orbit_dimension(B) if orbit_b is None else orbit_b
        if oa <= ob and flatten(A) != flatten(B):
            violations.append(
                ScreenViolation("orbit-dimension", f"{oa} <= {ob} with distinct tables")
            )

    if not done() and is_associative(A) and not is_associative(B):
        violations.append(
            ScreenViolation("associativity", "source associative, target not")
        )

    if not done():
        # associated algebras must themselves satisfy items (1), (4), (5)
        for v in _screen_core(
            associated_algebra(A),
            associated_algebra(B),
            burde_pairs=burde_pairs,
            trials=trials,
            seed=seed,
        ):
            violations.append(
                ScreenViolation("associated-algebra", f"a(J): {v.item}: {v.detail}")
            )

    if not done():
        for i, j in burde_pairs:
            ba = burde_invariant(A, i, j, trials=trials, seed=seed)
            bb = burde_invariant(B, i, j, trials=trials, seed=seed)
            if ba.defined and bb.defined and ba.value != bb.value:
                violations.append(
                    ScreenViolation("burde", f"c_{{{i},{j}}}: {ba.value} vs {bb.value}")
                )
                if quick:
                    break

    return ScreenReport(A.name or "A", B.name or "B", tuple(violations))
