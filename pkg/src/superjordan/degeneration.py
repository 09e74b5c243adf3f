"""Parametric witness replay: basis-change action on structure constants
and t -> 0 limits.

A witness gives the new basis as linear combinations of the source basis
with coefficients that are rational functions of the deformation
parameter t, possibly with fractional powers t^(p/q).  Fractional powers
are removed up front by the global ramification substitution t = s^N
(N = lcm of the exponent denominators), after which everything lives in
the ordinary rational-function field over s.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .algebra import SuperAlgebra, default_basis_order, flatten
from .linalg import SingularMatrix, invert_field_matrix
from .ratfun import RatFun


class NonGradedWitness(ValueError):
    """Graded mode demands block-diagonal parametric bases."""


class WitnessError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Coefficient expressions in t
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|t|\^|\(|\)|\*|/|\+|-)")
_FRAC_EXP = re.compile(r"\^\s*\(\s*-?\d+\s*/\s*(\d+)\s*\)")


def exponent_denominators(text: str) -> List[int]:
    return [int(q) for q in _FRAC_EXP.findall(text)]


def _tokenize(text: str) -> List[str]:
    out = []
    pos = 0
    while pos < len(text):
        mobj = _TOKEN.match(text, pos)
        if not mobj:
            if text[pos:].strip():
                raise WitnessError(f"cannot tokenize {text[pos:]!r}")
            break
        out.append(mobj.group(1))
        pos = mobj.end()
    return out


class _ExprParser:
    """Recursive-descent evaluator for t-expressions after t = s^N."""

    def __init__(self, tokens: List[str], ram: int):
        self.toks = tokens
        self.pos = 0
        self.ram = ram

    def peek(self) -> Optional[str]:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise WitnessError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, tok: str):
        got = self.take()
        if got != tok:
            raise WitnessError(f"expected {tok!r}, got {got!r}")

    def parse(self) -> RatFun:
        val = self.expr()
        if self.peek() is not None:
            raise WitnessError(f"trailing tokens {self.toks[self.pos:]}")
        return val

    def expr(self) -> RatFun:
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> RatFun:
        val = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary(self) -> RatFun:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFun:
        is_t = self.peek() == "t"
        base = self.atom()
        if self.peek() != "^":
            return base
        self.take()
        num, den = self.exponent()
        if den == 1:
            exp = num
        else:
            if not is_t:
                raise WitnessError("fractional exponents only allowed on t")
            if (self.ram * num) % den:
                raise WitnessError(
                    f"ramification {self.ram} does not clear exponent {num}/{den}"
                )
            return RatFun.monomial(self.ram * num // den)
        if is_t:
            return RatFun.monomial(self.ram * exp)
        if exp >= 0:
            out = RatFun.const(1)
            for _ in range(exp):
                out = out * base
            return out
        out = RatFun.const(1)
        for _ in range(-exp):
            out = out * base
        return out.inverse()

    def exponent(self) -> Tuple[int, int]:
        if self.peek() == "(":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            num = int(self.take())
            if self.peek() == "/":
                self.take()
                den = int(self.take())
            else:
                den = 1
            self.expect(")")
            return sign * num, den
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        return sign * int(self.take()), 1

    def atom(self) -> RatFun:
        tok = self.take()
        if tok == "t":
            return RatFun.monomial(self.ram)
        if tok == "(":
            val = self.expr()
            self.expect(")")
            return val
        if tok.isdigit():
            return RatFun.const(int(tok))
        raise WitnessError(f"unexpected token {tok!r}")


def eval_t_expression(text: str, ram: int) -> RatFun:
    """Evaluate a coefficient expression in t with t = s^ram."""
    return _ExprParser(_tokenize(text), ram).parse()


# ---------------------------------------------------------------------------
# Witness files
# ---------------------------------------------------------------------------


@dataclass
class Witness:
    source: str
    target: str
    mode: str = "auto"  # graded | ungraded | auto
    source_param: Optional[str] = None  # family parameter expression in t
    basis: List[Tuple[str, List[Tuple[str, str]]]] = None  # (slot, [(coeff_expr, src_label)])
    note: str = ""
    label: str = ""
    status: str = "published"  # published | published-rationalized | corrected

    def ramification(self) -> int:
        dens = []
        for _, terms in self.basis:
            for coeff, _ in terms:
                dens.extend(exponent_denominators(coeff))
        if self.source_param:
            dens.extend(exponent_denominators(self.source_param))
        ram = 1
        for q in dens:
            ram = ram * q // gcd(ram, q)
        return ram


def _split_combination(rhs: str) -> List[Tuple[str, str]]:
    """Split 'c1*v1 + c2*v2 - v3' into (coefficient-expression, label) pairs.

    Splitting happens at top-level +/- only (never inside parentheses).
    """
    terms = []
    depth = 0
    cur = ""
    sign = "+"
    chunks: List[Tuple[str, str]] = []
    for ch in rhs:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0:
            if cur.strip():
                chunks.append((sign, cur.strip()))
            sign = ch
            cur = ""
        else:
            cur += ch
    if cur.strip():
        chunks.append((sign, cur.strip()))
    for sign, chunk in chunks:
        chunk = chunk.strip()
        mobj = re.search(r"([ef]\d*)\s*$", chunk)
        if not mobj:
            raise WitnessError(f"term {chunk!r} does not end with a basis label")
        label = mobj.group(1)
        coeff = chunk[: mobj.start()].strip()
        if coeff.endswith("*"):
            coeff = coeff[:-1].strip()
        if not coeff:
            coeff = "1"
        if sign == "-":
            coeff = f"-({coeff})"
        terms.append((coeff, label))
    return terms


def parse_witness(text: str, source_name: str = "<string>") -> Witness:
    src = tgt = None
    mode = "auto"
    param = None
    basis: List[Tuple[str, List[Tuple[str, str]]]] = []
    note = ""
    label = ""
    status = "published"
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "[degeneration]":
            saw_header = True
            continue
        if line.startswith("basis:"):
            body = line[len("basis:") :].strip()
            slot, _, rhs = body.partition("=")
            basis.append((slot.strip(), _split_combination(rhs.strip())))
            continue
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key == "source":
            if "^" in val:
                src, _, param = val.partition("^")
                src = src.strip()
                param = param.strip()
                if param.startswith("(") and param.endswith(")"):
                    param = param[1:-1]
            else:
                src = val
        elif key == "target":
            tgt = val
        elif key == "mode":
            if val not in ("graded", "ungraded", "auto"):
                raise WitnessError(f"{source_name}:{lineno}: bad mode {val!r}")
            mode = val
        elif key == "note":
            note = val
        elif key == "label":
            label = val
        elif key == "status":
            status = val
        else:
            raise WitnessError(f"{source_name}:{lineno}: unknown key {key!r}")
    if not saw_header:
        raise WitnessError(f"{source_name}: missing [degeneration] header")
    if src is None or tgt is None:
        raise WitnessError(f"{source_name}: source and target are required")
    return Witness(
        source=src, target=tgt, mode=mode, source_param=param,
        basis=basis, note=note, label=label, status=status,
    )


def parse_witness_file(path) -> Witness:
    with open(path, "r", encoding="utf-8") as fh:
        wit = parse_witness(fh.read(), source_name=str(path))
    if not wit.label:
        wit.label = str(path)
    return wit


# ---------------------------------------------------------------------------
# Basis-change action and replay
# ---------------------------------------------------------------------------


def apply_basis_change_table(table, P: Sequence[Sequence], Pinv=None):
    """Constants of the same product in the basis y_a = sum_c P[a][c] x_c.

    Works over any field whose elements support + - * / (Fraction, RatFun).
    """
    d = len(table)
    if Pinv is None:
        rf = [[_to_rf(P[i][j]) for j in range(d)] for i in range(d)]
        Pinv = invert_field_matrix(rf)
        P = rf
    nonzero = [
        (c, dd, k, table[c][dd][k])
        for c in range(d)
        for dd in range(d)
        for k in range(d)
        if not _is_zero(table[c][dd][k])
    ]
    out = [[[None] * d for _ in range(d)] for _ in range(d)]
    zero = _zero_like(P[0][0])
    for a in range(d):
        for b in range(d):
            v = [zero] * d
            for c, dd, k, val in nonzero:
                pac = P[a][c]
                if _is_zero(pac):
                    continue
                pbd = P[b][dd]
                if _is_zero(pbd):
                    continue
                v[k] = v[k] + pac * pbd * val
            for l in range(d):
                acc = zero
                for k in range(d):
                    if not _is_zero(v[k]) and not _is_zero(Pinv[k][l]):
                        acc = acc + v[k] * Pinv[k][l]
                out[a][b][l] = acc
    return tuple(tuple(tuple(r) for r in plane) for plane in out)


def _to_rf(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    return RatFun.const(x)


def _is_zero(x) -> bool:
    if isinstance(x, RatFun):
        return x.is_zero()
    return x == 0


def _zero_like(x):
    if isinstance(x, RatFun):
        return RatFun.const(0)
    return Fraction(0)


def witness_matrix(wit: Witness, J: SuperAlgebra, ram: Optional[int] = None):
    """The parametric basis matrix over RatFun in s (rows = new basis slots,
    columns = source basis vectors in the canonical flatten order)."""
    if ram is None:
        ram = wit.ramification()
    order = default_basis_order(J.m, J.n)
    cols = {lab: i for i, lab in enumerate(order)}
    # accept e <-> e1 and f <-> f1 aliases
    if J.m == 1:
        cols.setdefault("e1", cols["e"])
    else:
        cols.setdefault("e", cols.get("e1", 0))
    if J.n == 1:
        cols.setdefault("f1", cols["f"])
    else:
        cols.setdefault("f", cols.get("f1", 0))
    d = J.dim
    P = [[RatFun.const(0)] * d for _ in range(d)]
    slots_seen = []
    for slot, terms in wit.basis:
        canon_slot = slot
        if canon_slot not in order:
            if canon_slot == "e1" and "e" in order:
                canon_slot = "e"
            elif canon_slot == "f1" and "f" in order:
                canon_slot = "f"
            else:
                raise WitnessError(f"slot {slot!r} not a basis vector of type ({J.m},{J.n})")
        row = order.index(canon_slot)
        slots_seen.append(canon_slot)
        for coeff, lab in terms:
            if lab not in cols:
                raise WitnessError(f"unknown source basis vector {lab!r}")
            P[row][cols[lab]] = P[row][cols[lab]] + eval_t_expression(coeff, ram)
    if sorted(slots_seen) != sorted(order):
        raise WitnessError(f"witness must define every slot of {order} exactly once")
    return P, order


def is_graded_matrix(P, order: List[str]) -> bool:
    parities = [0 if lab.startswith("e") else 1 for lab in order]
    for a in range(len(order)):
        for b in range(len(order)):
            if parities[a] != parities[b] and not P[a][b].is_zero():
                return False
    return True


@dataclass(frozen=True)
class Verdict:
    status: str  # Verified | LimitDiverges | LimitMismatch | NonGradedWitness | SingularMatrix
    mode_used: str = ""
    detail: str = ""
    limit_table: Optional[tuple] = None
    diff: Tuple[Tuple[int, int, int], ...] = ()

    @property
    def verified(self) -> bool:
        return self.status == "Verified"


def parametric_constants(wit: Witness, source: SuperAlgebra):
    """Structure constants of the parametric basis, as RatFun in s."""
    ram = wit.ramification()
    P, order = witness_matrix(wit, source, ram)
    table = flatten(source, order)
    rf_table = tuple(
        tuple(tuple(_to_rf(x) for x in row) for row in plane) for plane in table
    )
    Pinv = invert_field_matrix(P)
    return apply_basis_change_table(rf_table, P, Pinv), order, ram


def verify_degeneration(
    wit: Witness,
    source: SuperAlgebra,
    target: SuperAlgebra,
    post_iso=None,
) -> Verdict:
    """Replay the witness and compare the t -> 0 limit with the target.

    ``post_iso`` optionally applies a constant basis change (matrix rows over
    Fraction) to the limit table before comparing, for witnesses that land on
    an isomorphic copy of the target.
    """
    if (source.m, source.n) != (target.m, target.n):
        raise WitnessError("source and target types differ")
    ram = wit.ramification()
    try:
        P, order = witness_matrix(wit, source, ram)
    except WitnessError as exc:
        return Verdict("Error", detail=str(exc))
    graded = is_graded_matrix(P, order)
    if wit.mode == "graded" and not graded:
        return Verdict("NonGradedWitness", detail="basis mixes parities in graded mode")
    mode_used = "graded" if graded else "ungraded"

    table = flatten(source, order)
    rf_table = tuple(
        tuple(tuple(_to_rf(x) for x in row) for row in plane) for plane in table
    )
    try:
        Pinv = invert_field_matrix(P)
    except SingularMatrix:
        return Verdict("SingularMatrix", mode_used, "witness basis is singular")
    new_constants = apply_basis_change_table(rf_table, P, Pinv)

    d = source.dim
    limit = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for a in range(d):
        for b in range(d):
            for k in range(d):
                lv = new_constants[a][b][k].try_limit_at_zero()
                if lv is None:
                    return Verdict(
                        "LimitDiverges",
                        mode_used,
                        f"entry c[{a+1},{b+1}]^{k+1} diverges: "
                        f"valuation {new_constants[a][b][k].valuation()}",
                    )
                limit[a][b][k] = lv
    limit_t = tuple(tuple(tuple(r) for r in plane) for plane in limit)
    if post_iso is not None:
        limit_t = apply_basis_change_table(limit_t, [[Fraction(x) for x in row] for row in post_iso], None)
        limit_t = tuple(
            tuple(tuple(v.as_constant() if isinstance(v, RatFun) else v for v in row) for row in plane)
            for plane in limit_t
        )
    target_table = flatten(target, default_basis_order(target.m, target.n))
    if limit_t != target_table:
        diff = tuple(
            (a + 1, b + 1, k + 1)
            for a in range(d)
            for b in range(d)
            for k in range(d)
            if limit_t[a][b][k] != target_table[a][b][k]
        )
        return Verdict(
            "LimitMismatch",
            mode_used,
            f"{len(diff)} entries differ from {target.name}: {diff[:6]}",
            limit_table=limit_t,
            diff=diff,
        )
    return Verdict("Verified", mode_used, limit_table=limit_t)


def specialize_witness(wit: Witness, source: SuperAlgebra, t0: Fraction):
    """Structure constants at a fixed parameter value t = t0 (s = t0^(1/N)
    is not needed: we substitute s0 with s0^N = t0 only when N = 1, otherwise
    we evaluate the RatFun entries at any s0 with s0^N = t0 rational).

    For witnesses with ramification N, the fiber at s = s0 corresponds to
    t = s0^N, so this function takes s0 directly when N > 1.
    """
    new_constants, order, ram = parametric_constants(wit, source)
    d = len(order)
    out = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for a in range(d):
        for b in range(d):
            for k in range(d):
                out[a][b][k] = new_constants[a][b][k].evaluate(t0)
    return tuple(tuple(tuple(r) for r in plane) for plane in out), ram
