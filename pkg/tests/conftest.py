import random
from fractions import Fraction

import pytest

from superjordan.algebra import load
from superjordan.catalog import Catalog


@pytest.fixture(scope="session")
def catalog():
    return Catalog()


@pytest.fixture(scope="session")
def verified_witnesses(catalog):
    from superjordan.verify import verify_witnesses

    return verify_witnesses(catalog)


def perturb_entry(catalog, name, seed):
    """Add one random structure constant to a catalog entry (respecting the
    grading and supercommutativity), giving a usually-broken neighbor."""
    rng = random.Random(seed)
    entry = catalog.entry(name)
    J = catalog.lookup(name, 2) if entry.is_family else entry.algebra
    labels = J.labels()
    ev, od = J.even_labels(), J.odd_labels()
    while True:
        a, b = rng.choice(labels), rng.choice(labels)
        pa, _ = J.label_index(a)
        pb, _ = J.label_index(b)
        if pa == 1 and pb == 1 and a == b:
            continue
        parity = (pa + pb) % 2
        target = rng.choice(ev if parity == 0 else od)
        coeff = Fraction(rng.choice((1, 2, -1)))
        extra = [(a, b, [(coeff, target)])]
        base = []
        for i in range(J.m):
            for j in range(i, J.m):
                for k in range(J.m):
                    if J.alpha[i][j][k] != 0:
                        base.append((ev[i], ev[j], [(J.alpha[i][j][k], ev[k])]))
        for i in range(J.m):
            for p in range(J.n):
                for q in range(J.n):
                    if J.beta[i][p][q] != 0:
                        base.append((ev[i], od[p], [(J.beta[i][p][q], od[q])]))
        for p in range(J.n):
            for q in range(p + 1, J.n):
                for k in range(J.m):
                    if J.delta[p][q][k] != 0:
                        base.append((od[p], od[q], [(J.delta[p][q][k], ev[k])]))
        merged = {}
        for left, right, terms in base + extra:
            merged.setdefault((left, right), [])
            merged[(left, right)] += list(terms)
        try:
            return load(
                [(l, r, ts) for (l, r), ts in merged.items()],
                (J.m, J.n),
                name=f"{name}~{seed}",
            )
        except Exception:
            continue
