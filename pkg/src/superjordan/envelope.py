"""Truncated Grassmann envelope and the classical Jordan identity check.

The envelope G(A) = G0 (x) A0 + G1 (x) A1 is built over a truncated
Grassmann algebra on k generators (dimension 2**k).  A homogeneous
violation of the graded identity lifts to a violation of the ordinary
Jordan identity (x^2 y)x = x^2 (yx) inside G(A) once x is allowed to be a
sum of up to three monomials with disjoint Grassmann supports; k = 4
generators are enough because the identity has degree four.  This check
never looks at the graded-identity evaluator, so it independently
validates the sign transcription there.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Dict, List, Optional, Tuple

from .algebra import SuperAlgebra

# a G(A) element maps (grassmann_mask, parity, index) -> Fraction
GElement = Dict[Tuple[int, int, int], Fraction]


def grassmann_sign(s: int, t: int) -> int:
    """Sign of xi_S * xi_T for disjoint bitmasks (0 when not disjoint)."""
    if s & t:
        return 0
    sign = 1
    rest = s
    while rest:
        low = rest & -rest
        # each generator of T below this generator of S contributes one swap
        below = t & (low - 1)
        if bin(below).count("1") % 2:
            sign = -sign
        rest ^= low
    return sign


@dataclass(frozen=True)
class EnvelopeConfig:
    k: int = 4


@dataclass(frozen=True)
class EnvelopeReport:
    ok: bool
    pairs_checked: int
    detail: str = ""

    def __bool__(self):
        return self.ok


class _Envelope:
    def __init__(self, J: SuperAlgebra, k: int):
        if k < 0:
            raise ValueError("k must be >= 0")
        self.J = J
        self.k = k

    def mul(self, x: GElement, y: GElement) -> GElement:
        out: GElement = {}
        J = self.J
        for (s, pa, ia), ca in x.items():
            for (t, pb, ib), cb in y.items():
                sg = grassmann_sign(s, t)
                if sg == 0:
                    continue
                c = ca * cb * sg
                if pa == 0 and pb == 0:
                    comps = [(0, kk, J.alpha[ia][ib][kk]) for kk in range(J.m)]
                elif pa == 0 and pb == 1:
                    comps = [(1, q, J.beta[ia][ib][q]) for q in range(J.n)]
                elif pa == 1 and pb == 0:
                    comps = [(1, q, J.gamma[ia][ib][q]) for q in range(J.n)]
                else:
                    comps = [(0, kk, J.delta[ia][ib][kk]) for kk in range(J.m)]
                st = s | t
                for parity, idx, val in comps:
                    if val == 0:
                        continue
                    key = (st, parity, idx)
                    acc = out.get(key, Fraction(0)) + c * val
                    if acc == 0:
                        out.pop(key, None)
                    else:
                        out[key] = acc
        return out

    def jordan_holds(self, x: GElement, y: GElement) -> bool:
        xx = self.mul(x, x)
        lhs = self.mul(self.mul(xx, y), x)
        rhs = self.mul(xx, self.mul(y, x))
        return lhs == rhs


def _support_plan(parities: List[int], k: int) -> Optional[List[int]]:
    """Disjoint Grassmann masks for a list of slot parities, or None if k is
    too small.  Odd slots take one fresh generator; the first even slot takes
    the empty mask, later even slots take fresh pairs when available."""
    masks: List[int] = []
    next_gen = 0
    used_empty = False
    for p in parities:
        if p == 1:
            if next_gen >= k:
                return None
            masks.append(1 << next_gen)
            next_gen += 1
        else:
            if not used_empty:
                masks.append(0)
                used_empty = True
            elif next_gen + 1 < k:
                masks.append((1 << next_gen) | (1 << (next_gen + 1)))
                next_gen += 2
            else:
                masks.append(0)
    return masks


def envelope_jordan_check(
    J: SuperAlgebra, cfg: EnvelopeConfig = EnvelopeConfig(), random_trials: int = 20, seed: int = 0
) -> EnvelopeReport:
    """Check (x^2 y)x = x^2 (yx) in the truncated envelope.

    x runs over sums of up to three Grassmann-monomial tensors with disjoint
    supports, y over monomials; a few seeded random elements are added on top.
    """
    env = _Envelope(J, cfg.k)
    labels = J.labels()
    parities = {lab: J.label_index(lab)[0] for lab in labels}
    indices = {lab: J.label_index(lab) for lab in labels}
    pairs = 0

    def monomial(mask: int, lab: str, coeff: Fraction = Fraction(1)) -> GElement:
        p, i = indices[lab]
        return {(mask, p, i): coeff}

    def merge(parts: List[GElement]) -> GElement:
        out: GElement = {}
        for part in parts:
            for kk, v in part.items():
                out[kk] = out.get(kk, Fraction(0)) + v
        return {kk: v for kk, v in out.items() if v != 0}

    for r in (1, 2, 3):
        for combo in iproduct(labels, repeat=r):
            plan = _support_plan([parities[lab] for lab in combo], cfg.k)
            if plan is None:
                continue
            used = 0
            for msk in plan:
                used |= msk
            x = merge([monomial(msk, lab) for msk, lab in zip(plan, combo)])
            free = [g for g in range(cfg.k) if not (used >> g) & 1]
            for ylab in labels:
                if parities[ylab] == 1:
                    if not free:
                        continue
                    ymask = 1 << free[0]
                else:
                    ymask = 0
                y = monomial(ymask, ylab)
                pairs += 1
                if not env.jordan_holds(x, y):
                    return EnvelopeReport(
                        False, pairs, detail=f"fails at x={combo} supports={plan}, y={ylab}"
                    )

    rng = random.Random(seed)
    even_masks = [msk for msk in range(1 << cfg.k) if bin(msk).count("1") % 2 == 0]
    odd_masks = [msk for msk in range(1 << cfg.k) if bin(msk).count("1") % 2 == 1]

    def random_element() -> GElement:
        parts = []
        for lab in labels:
            pool = even_masks if parities[lab] == 0 else odd_masks
            if not pool:
                continue
            mask = rng.choice(pool)
            coeff = Fraction(rng.randint(-2, 2))
            if coeff:
                parts.append(monomial(mask, lab, coeff))
        return merge(parts)

    for _ in range(random_trials):
        x, y = random_element(), random_element()
        pairs += 1
        if not env.jordan_holds(x, y):
            return EnvelopeReport(False, pairs, detail="fails at a random envelope pair")
    return EnvelopeReport(True, pairs)
