"""Jordan-superalgebra data model: structure tensors, the graded identity,
power filtration, and the line-oriented table format.

A superalgebra of type (m, n) stores four structure tensors over an exact
scalar ring (Fraction, or RatFun for one-parameter families):

    alpha[i][j][k] : e_i e_j -> sum alpha e_k     (m x m x m)
    beta[i][p][q]  : e_i f_p -> sum beta f_q      (m x n x n)
    gamma[p][i][q] : f_p e_i -> sum gamma f_q     (n x m x n)
    delta[p][q][k] : f_p f_q -> sum delta e_k     (n x n x m)

Supercommutativity is a stored invariant: alpha is symmetric, gamma
mirrors beta, delta is antisymmetric (so odd squares are zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .ratfun import RatFun

Scalar = Union[Fraction, RatFun]


class GradingViolation(ValueError):
    """A listed product lands in the wrong graded component."""


class DuplicateProduct(ValueError):
    """The same product is listed twice with conflicting values."""


class SquareOfOdd(ValueError):
    """An explicit nonzero square of an odd basis vector."""


class NonHomogeneousArgument(ValueError):
    """jordan_defect needs purely even or purely odd arguments."""


def _zero_tensor(a: int, b: int, c: int):
    return [[[Fraction(0)] * c for _ in range(b)] for _ in range(a)]


def _freeze(t) -> tuple:
    return tuple(tuple(tuple(r) for r in plane) for plane in t)


@dataclass(frozen=True)
class Element:
    """A vector with even coordinates (length m) and odd coordinates (length n)."""

    even: Tuple[Scalar, ...]
    odd: Tuple[Scalar, ...]

    def is_zero(self) -> bool:
        return all(_sc_is_zero(c) for c in self.even) and all(
            _sc_is_zero(c) for c in self.odd
        )

    def parity(self) -> int:
        """0 for even, 1 for odd; raises on genuinely mixed elements."""
        has_even = any(not _sc_is_zero(c) for c in self.even)
        has_odd = any(not _sc_is_zero(c) for c in self.odd)
        if has_even and has_odd:
            raise NonHomogeneousArgument(f"mixed-parity element {self}")
        return 1 if has_odd else 0

    def scaled(self, c: Scalar) -> "Element":
        return Element(tuple(c * x for x in self.even), tuple(c * x for x in self.odd))

    def __add__(self, other: "Element") -> "Element":
        return Element(
            tuple(a + b for a, b in zip(self.even, other.even)),
            tuple(a + b for a, b in zip(self.odd, other.odd)),
        )

    def __sub__(self, other: "Element") -> "Element":
        return Element(
            tuple(a - b for a, b in zip(self.even, other.even)),
            tuple(a - b for a, b in zip(self.odd, other.odd)),
        )


def _sc_is_zero(c: Scalar) -> bool:
    if isinstance(c, RatFun):
        return c.is_zero()
    return c == 0


@dataclass(frozen=True)
class SuperAlgebra:
    m: int
    n: int
    alpha: tuple
    beta: tuple
    gamma: tuple
    delta: tuple
    name: str = ""
    basis_order: Tuple[str, ...] = ()

    def __post_init__(self):
        if not self.basis_order:
            object.__setattr__(self, "basis_order", tuple(default_basis_order(self.m, self.n)))

    # ---- basis bookkeeping -------------------------------------------------
    @property
    def dim(self) -> int:
        return self.m + self.n

    def even_labels(self) -> List[str]:
        return ["e"] if self.m == 1 else [f"e{i+1}" for i in range(self.m)]

    def odd_labels(self) -> List[str]:
        return ["f"] if self.n == 1 else [f"f{i+1}" for i in range(self.n)]

    def labels(self) -> List[str]:
        return self.even_labels() + self.odd_labels()

    def label_index(self, label: str) -> Tuple[int, int]:
        """(parity, index-within-parity) for a basis label."""
        ev, od = self.even_labels(), self.odd_labels()
        if label in ev:
            return 0, ev.index(label)
        if label in od:
            return 1, od.index(label)
        # accept e1/f1 aliases of e/f and vice versa
        if label == "e1" and self.m == 1:
            return 0, 0
        if label == "f1" and self.n == 1:
            return 1, 0
        if label == "e" and self.m >= 1:
            return 0, 0
        if label == "f" and self.n >= 1:
            return 1, 0
        raise KeyError(f"unknown basis vector {label!r} for type ({self.m},{self.n})")

    def basis_element(self, label: str) -> Element:
        parity, idx = self.label_index(label)
        ev = [Fraction(0)] * self.m
        od = [Fraction(0)] * self.n
        if parity == 0:
            ev[idx] = Fraction(1)
        else:
            od[idx] = Fraction(1)
        return Element(tuple(ev), tuple(od))

    def zero_element(self) -> Element:
        return Element(tuple([Fraction(0)] * self.m), tuple([Fraction(0)] * self.n))

    # ---- multiplication ----------------------------------------------------
    def multiply(self, x: Element, y: Element) -> Element:
        m, n = self.m, self.n
        ev = [Fraction(0)] * m
        od = [Fraction(0)] * n
        for i, xi in enumerate(x.even):
            if _sc_is_zero(xi):
                continue
            for j, yj in enumerate(y.even):
                if _sc_is_zero(yj):
                    continue
                row = self.alpha[i][j]
                c = xi * yj
                for k in range(m):
                    if not _sc_is_zero(row[k]):
                        ev[k] = ev[k] + c * row[k]
            for p, yp in enumerate(y.odd):
                if _sc_is_zero(yp):
                    continue
                row = self.beta[i][p]
                c = xi * yp
                for q in range(n):
                    if not _sc_is_zero(row[q]):
                        od[q] = od[q] + c * row[q]
        for p, xp in enumerate(x.odd):
            if _sc_is_zero(xp):
                continue
            for j, yj in enumerate(y.even):
                if _sc_is_zero(yj):
                    continue
                row = self.gamma[p][j]
                c = xp * yj
                for q in range(n):
                    if not _sc_is_zero(row[q]):
                        od[q] = od[q] + c * row[q]
            for q, yq in enumerate(y.odd):
                if _sc_is_zero(yq):
                    continue
                row = self.delta[p][q]
                c = xp * yq
                for k in range(m):
                    if not _sc_is_zero(row[k]):
                        ev[k] = ev[k] + c * row[k]
        return Element(tuple(ev), tuple(od))

    # ---- invariant checks --------------------------------------------------
    def supercommutativity_violations(self) -> List[str]:
        out = []
        m, n = self.m, self.n
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    if self.alpha[i][j][k] != self.alpha[j][i][k]:
                        out.append(f"alpha[{i}][{j}][{k}] != alpha[{j}][{i}][{k}]")
        for i in range(m):
            for p in range(n):
                for q in range(n):
                    if self.gamma[p][i][q] != self.beta[i][p][q]:
                        out.append(f"gamma[{p}][{i}][{q}] != beta[{i}][{p}][{q}]")
        for p in range(n):
            for q in range(n):
                for k in range(m):
                    if self.delta[p][q][k] != -self.delta[q][p][k]:
                        out.append(f"delta[{p}][{q}][{k}] != -delta[{q}][{p}][{k}]")
        return out

    def is_family(self) -> bool:
        """True when some structure constant is a non-constant RatFun."""
        for tensor in (self.alpha, self.beta, self.gamma, self.delta):
            for plane in tensor:
                for row in plane:
                    for c in row:
                        if isinstance(c, RatFun) and not c.is_constant():
                            return True
        return False


def default_basis_order(m: int, n: int) -> List[str]:
    """Odd vectors first for type (1,3), even first otherwise."""
    ev = ["e"] if m == 1 else [f"e{i+1}" for i in range(m)]
    od = ["f"] if n == 1 else [f"f{i+1}" for i in range(n)]
    if (m, n) == (1, 3):
        return od + ev
    return ev + od


# ---------------------------------------------------------------------------
# Loader
# ---------------------------------------------------------------------------

ProductTerm = Tuple[Scalar, str]
ProductSpec = Tuple[str, str, Sequence[ProductTerm]]


def load(
    products: Sequence[ProductSpec],
    mn: Tuple[int, int],
    name: str = "",
    basis_order: Optional[Sequence[str]] = None,
) -> SuperAlgebra:
    """Build a SuperAlgebra from a list of basis products.

    Each listed product fixes the mirrored product by supercommutativity;
    listing both orders is allowed only when consistent.
    """
    m, n = mn
    alpha = _zero_tensor(m, m, m)
    beta = _zero_tensor(m, n, n)
    gamma = _zero_tensor(n, m, n)
    delta = _zero_tensor(n, n, m)
    probe = SuperAlgebra(m, n, _freeze(alpha), _freeze(beta), _freeze(gamma), _freeze(delta))
    seen: Dict[Tuple[int, int, int, int], Dict[int, Scalar]] = {}

    for left, right, terms in products:
        lp, li = probe.label_index(left)
        rp, ri = probe.label_index(right)
        result_parity = (lp + rp) % 2
        value: Dict[int, Scalar] = {}
        for coeff, res in terms:
            tp, ti = probe.label_index(res)
            if tp != result_parity:
                raise GradingViolation(
                    f"{left}*{right} is {'odd' if result_parity else 'even'} "
                    f"but result names {res}"
                )
            value[ti] = value.get(ti, Fraction(0)) + coeff
        value = {k: v for k, v in value.items() if not _sc_is_zero(v)}
        if lp == 1 and rp == 1 and li == ri and value:
            raise SquareOfOdd(f"nonzero square {left}*{right}")

        key = (lp, li, rp, ri)
        mirror_sign = -1 if (lp == 1 and rp == 1) else 1
        mirror = {k: mirror_sign * v for k, v in value.items()}
        for k2, v2 in ((key, value), ((rp, ri, lp, li), mirror)):
            if k2 in seen:
                if seen[k2] != v2:
                    raise DuplicateProduct(
                        f"conflicting values for product {k2}: {seen[k2]} vs {v2}"
                    )
            else:
                seen[k2] = v2

    for (lp, li, rp, ri), value in seen.items():
        for k, v in value.items():
            if lp == 0 and rp == 0:
                alpha[li][ri][k] = v
            elif lp == 0 and rp == 1:
                beta[li][ri][k] = v
            elif lp == 1 and rp == 0:
                gamma[li][ri][k] = v
            else:
                delta[li][ri][k] = v

    return SuperAlgebra(
        m,
        n,
        _freeze(alpha),
        _freeze(beta),
        _freeze(gamma),
        _freeze(delta),
        name=name,
        basis_order=tuple(basis_order) if basis_order else (),
    )


# ---------------------------------------------------------------------------
# The graded Jordan identity
# ---------------------------------------------------------------------------


def jordan_defect(J: SuperAlgebra, x: Element, y: Element, z: Element, t: Element) -> Element:
    """Defect of the four-variable graded identity on homogeneous elements.

    Vanishing on every basis quadruple is equivalent (by multilinearity over
    homogeneous arguments) to the graded Jordan identity.
    """
    px, py, pz, pt = x.parity(), y.parity(), z.parity(), t.parity()
    mul = J.multiply

    def sgn(exp: int) -> int:
        return -1 if exp % 2 else 1

    one = Fraction(1)
    term1 = mul(mul(mul(x, y), z), t)
    term2 = mul(mul(mul(x, t), z), y).scaled(one * sgn(py * pz + py * pt + pz * pt))
    term3 = mul(mul(mul(y, t), z), x).scaled(
        one * sgn(px * py + px * pz + px * pt + pz * pt)
    )
    term4 = mul(mul(x, y), mul(z, t))
    term5 = mul(mul(x, t), mul(y, z)).scaled(one * sgn(pt * (py + pz)))
    term6 = mul(mul(x, z), mul(y, t)).scaled(one * sgn(py * pz))
    return term1 + term2 + term3 - term4 - term5 - term6


@dataclass(frozen=True)
class IdentityReport:
    ok: bool
    supercommutative: bool
    violation: Optional[Tuple[str, str, str, str]] = None
    defect: Optional[Element] = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def check_super_jordan(J: SuperAlgebra) -> IdentityReport:
    """Supercommutativity plus defect vanishing on all basis quadruples."""
    sviol = J.supercommutativity_violations()
    if sviol:
        return IdentityReport(False, False, detail="; ".join(sviol[:3]))
    labels = J.labels()
    basis = {lab: J.basis_element(lab) for lab in labels}
    for a in labels:
        for b in labels:
            for c in labels:
                for d in labels:
                    defect = jordan_defect(J, basis[a], basis[b], basis[c], basis[d])
                    if not defect.is_zero():
                        return IdentityReport(
                            False,
                            True,
                            violation=(a, b, c, d),
                            defect=defect,
                            detail=f"J({a},{b},{c},{d}) != 0",
                        )
    return IdentityReport(True, True)


# ---------------------------------------------------------------------------
# Graded subspaces and the power filtration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedSubspace:
    even_basis: tuple  # reduced row-echelon rows in Q^m
    odd_basis: tuple  # reduced row-echelon rows in Q^n

    @property
    def dims(self) -> Tuple[int, int]:
        return len(self.even_basis), len(self.odd_basis)


def full_space(J: SuperAlgebra) -> GradedSubspace:
    ev = tuple(
        tuple(Fraction(1 if j == i else 0) for j in range(J.m)) for i in range(J.m)
    )
    od = tuple(
        tuple(Fraction(1 if j == i else 0) for j in range(J.n)) for i in range(J.n)
    )
    return GradedSubspace(ev, od)


def subspace_product(J: SuperAlgebra, U: GradedSubspace, W: GradedSubspace) -> GradedSubspace:
    """Span of all pairwise products of homogeneous spanning vectors."""
    from .linalg import row_reduce_basis

    ev_vecs: List[List[Fraction]] = []
    od_vecs: List[List[Fraction]] = []

    def as_elem(parity: int, coords) -> Element:
        if parity == 0:
            return Element(tuple(coords), tuple([Fraction(0)] * J.n))
        return Element(tuple([Fraction(0)] * J.m), tuple(coords))

    homog_u = [(0, v) for v in U.even_basis] + [(1, v) for v in U.odd_basis]
    homog_w = [(0, v) for v in W.even_basis] + [(1, v) for v in W.odd_basis]
    for pu, vu in homog_u:
        for pw, vw in homog_w:
            prod = J.multiply(as_elem(pu, vu), as_elem(pw, vw))
            if any(c != 0 for c in prod.even):
                ev_vecs.append(list(prod.even))
            if any(c != 0 for c in prod.odd):
                od_vecs.append(list(prod.odd))
    return GradedSubspace(
        tuple(tuple(v) for v in row_reduce_basis(ev_vecs)),
        tuple(tuple(v) for v in row_reduce_basis(od_vecs)),
    )


def subspace_sum(*spaces: GradedSubspace) -> GradedSubspace:
    from .linalg import row_reduce_basis

    ev = [list(v) for sp in spaces for v in sp.even_basis]
    od = [list(v) for sp in spaces for v in sp.odd_basis]
    return GradedSubspace(
        tuple(tuple(v) for v in row_reduce_basis(ev)),
        tuple(tuple(v) for v in row_reduce_basis(od)),
    )


def power_filtration(J: SuperAlgebra, r_max: Optional[int] = None) -> List[Tuple[int, int]]:
    """Graded dimensions of J^r for r = 1..r_max (default r_max = m + n)."""
    if r_max is None:
        r_max = J.m + J.n
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    powers = [full_space(J)]
    dims = [powers[0].dims]
    for r in range(2, r_max + 1):
        terms = [
            subspace_product(J, powers[i - 1], powers[r - i - 1])
            for i in range(1, r)
        ]
        jr = subspace_sum(*terms) if terms else GradedSubspace((), ())
        powers.append(jr)
        dims.append(jr.dims)
    return dims


# ---------------------------------------------------------------------------
# Flattening to an ungraded table
# ---------------------------------------------------------------------------


def flatten(J: SuperAlgebra, basis_order: Optional[Sequence[str]] = None):
    """Full (m+n)^3 structure tensor in the declared basis ordering."""
    order = list(basis_order) if basis_order else list(J.basis_order)
    d = J.dim
    if len(order) != d:
        raise ValueError(f"basis order {order} has wrong length for dim {d}")
    idx = [J.label_index(lab) for lab in order]
    table = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for a, (pa, ia) in enumerate(idx):
        for b, (pb, ib) in enumerate(idx):
            if pa == 0 and pb == 0:
                comp = [(0, k, J.alpha[ia][ib][k]) for k in range(J.m)]
            elif pa == 0 and pb == 1:
                comp = [(1, q, J.beta[ia][ib][q]) for q in range(J.n)]
            elif pa == 1 and pb == 0:
                comp = [(1, q, J.gamma[ia][ib][q]) for q in range(J.n)]
            else:
                comp = [(0, k, J.delta[ia][ib][k]) for k in range(J.m)]
            for parity, within, val in comp:
                if _sc_is_zero(val):
                    continue
                k = idx.index((parity, within))
                table[a][b][k] = val
    return tuple(tuple(tuple(r) for r in plane) for plane in table)


def direct_sum(A: SuperAlgebra, B: SuperAlgebra, name: str = "") -> SuperAlgebra:
    m, n = A.m + B.m, A.n + B.n
    alpha = _zero_tensor(m, m, m)
    beta = _zero_tensor(m, n, n)
    gamma = _zero_tensor(n, m, n)
    delta = _zero_tensor(n, n, m)
    for J, eo, oo in ((A, 0, 0), (B, A.m, A.n)):
        for i in range(J.m):
            for j in range(J.m):
                for k in range(J.m):
                    alpha[eo + i][eo + j][eo + k] = J.alpha[i][j][k]
        for i in range(J.m):
            for p in range(J.n):
                for q in range(J.n):
                    beta[eo + i][oo + p][oo + q] = J.beta[i][p][q]
                    gamma[oo + p][eo + i][oo + q] = J.gamma[p][i][q]
        for p in range(J.n):
            for q in range(J.n):
                for k in range(J.m):
                    delta[oo + p][oo + q][eo + k] = J.delta[p][q][k]
    return SuperAlgebra(
        m, n, _freeze(alpha), _freeze(beta), _freeze(gamma), _freeze(delta), name=name
    )


def apply_graded_change(
    J: SuperAlgebra, p_even: Sequence[Sequence[Fraction]], p_odd: Sequence[Sequence[Fraction]]
) -> SuperAlgebra:
    """Structure constants after the graded basis change E_i = sum P0[i][j] e_j,
    F_p = sum P1[p][q] f_q (matrices over Fraction, must be invertible)."""
    from .linalg import invert_fraction_matrix

    m, n = J.m, J.n
    q_even = invert_fraction_matrix([list(r) for r in p_even]) if m else []
    q_odd = invert_fraction_matrix([list(r) for r in p_odd]) if n else []

    def new_even(i: int) -> Element:
        return Element(tuple(Fraction(p_even[i][j]) for j in range(m)), tuple([Fraction(0)] * n))

    def new_odd(p: int) -> Element:
        return Element(tuple([Fraction(0)] * m), tuple(Fraction(p_odd[p][q]) for q in range(n)))

    alpha = _zero_tensor(m, m, m)
    beta = _zero_tensor(m, n, n)
    gamma = _zero_tensor(n, m, n)
    delta = _zero_tensor(n, n, m)
    for i in range(m):
        Ei = new_even(i)
        for j in range(m):
            prod = J.multiply(Ei, new_even(j))
            for k in range(m):
                alpha[i][j][k] = sum(
                    (prod.even[c] * q_even[c][k] for c in range(m)), Fraction(0)
                )
        for p in range(n):
            prod = J.multiply(Ei, new_odd(p))
            for q in range(n):
                beta[i][p][q] = sum(
                    (prod.odd[c] * q_odd[c][q] for c in range(n)), Fraction(0)
                )
    for p in range(n):
        Fp = new_odd(p)
        for i in range(m):
            prod = J.multiply(Fp, new_even(i))
            for q in range(n):
                gamma[p][i][q] = sum(
                    (prod.odd[c] * q_odd[c][q] for c in range(n)), Fraction(0)
                )
        for q in range(n):
            prod = J.multiply(Fp, new_odd(q))
            for k in range(m):
                delta[p][q][k] = sum(
                    (prod.even[c] * q_even[c][k] for c in range(m)), Fraction(0)
                )
    return SuperAlgebra(
        m, n, _freeze(alpha), _freeze(beta), _freeze(gamma), _freeze(delta), name=J.name
    )
