import random
from fractions import Fraction

import pytest

from superjordan.algebra import apply_graded_change, check_super_jordan, flatten, load, power_filtration
from superjordan.invariants import (
    TypeMismatch,
    associated_algebra,
    burde_invariant,
    derivation_dims,
    even_part,
    identify_algebra,
    is_associative,
    nondegeneration_screen,
    orbit_dimension,
)
from superjordan.verify import screen_pair

ONE = Fraction(1)
HALF = Fraction(1, 2)


def test_derivation_dims_examples(catalog):
    assert derivation_dims(catalog.lookup("J15")) == derivation_dims(catalog.lookup("J15"))
    d15 = derivation_dims(catalog.lookup("J15"))
    assert (d15.even_dim, d15.odd_dim) == (9, 3)
    d18 = derivation_dims(catalog.lookup("J18"))
    assert (d18.even_dim, d18.odd_dim) == (9, 0)
    z = load([], (2, 2))
    dz = derivation_dims(z)
    assert (dz.even_dim, dz.odd_dim) == (8, 8)


def test_orbit_dimension_examples(catalog):
    assert orbit_dimension(catalog.lookup("J15")) == 4
    assert orbit_dimension(catalog.lookup("Jc58")) == 4
    assert orbit_dimension(catalog.lookup("Jf1")) == 15


def test_associated_algebra_examples(catalog):
    j3 = catalog.lookup("J3")
    a3 = associated_algebra(j3)
    assert flatten(a3) == flatten(catalog.lookup("J1"))
    z = load([], (1, 3))
    assert flatten(associated_algebra(z)) == flatten(z)
    for name in ("J11", "Jc42", "Jf49"):
        a = associated_algebra(catalog.lookup(name))
        aa = associated_algebra(a)
        assert flatten(aa) == flatten(a)
        assert check_super_jordan(a).ok


def test_burde_examples():
    b1 = load([("e1", "e1", [(ONE, "e1")]), ("e1", "e2", [(ONE, "e2")])], (2, 0))
    val = burde_invariant(b1, 1, 1)
    assert val.defined and val.value == 2
    z = load([], (2, 2))
    assert burde_invariant(z, 1, 1).status == "not_defined"


def test_burde_invariant_under_conjugation(catalog):
    rng = random.Random(7)
    j = catalog.lookup("J16")
    base = burde_invariant(j, 1, 1)
    assert base.defined
    for _ in range(5):
        p_even = [[Fraction(rng.choice((1, 2, -1)))]]
        p_odd = [[Fraction(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
        from superjordan.linalg import int_matrix_det_adjugate

        det, _ = int_matrix_det_adjugate([[int(x) for x in row] for row in p_odd])
        if det == 0:
            continue
        moved = apply_graded_change(j, p_even, p_odd)
        got = burde_invariant(moved, 1, 1)
        assert got.defined and got.value == base.value


def test_is_associative_examples(catalog):
    assert is_associative(catalog.lookup("J7"))
    assert not is_associative(catalog.lookup("J15"))
    assert is_associative(load([], (1, 3)))


def test_even_part_examples(catalog):
    for name, label in (("J5", "U2"), ("J7", "U1"), ("Jf42", "T5")):
        J = catalog.lookup(name)
        graph = catalog.even_graph_for(J.m)
        cands = [(lab, catalog.node_algebra(lab)) for lab in graph.nodes]
        assert identify_algebra(even_part(J), cands) == label


def test_screen_examples(catalog):
    rep = screen_pair(catalog, "J5", "J7")
    assert any(v.item == "even-part" for v in rep.violations)
    rep2 = screen_pair(catalog, "J7", "J5")
    assert any(v.item == "orbit-dimension" for v in rep2.violations)
    j = catalog.lookup("J5")
    self_rep = nondegeneration_screen(j, j)
    assert not self_rep.violations


def test_screen_type_mismatch(catalog):
    with pytest.raises(TypeMismatch):
        nondegeneration_screen(catalog.lookup("J5"), catalog.lookup("Jc1"))


def test_invariance_under_graded_changes(catalog):
    # orbit dims and power filtrations are basis invariants
    rng = random.Random(3)
    from superjordan.linalg import int_matrix_det_adjugate

    for name in ("J5", "Jc42", "Jf53"):
        J = catalog.lookup(name)
        base_orbit = orbit_dimension(J)
        base_powers = power_filtration(J)
        base_assoc = is_associative(J)
        for _ in range(3):
            while True:
                pe = [[rng.randint(-2, 2) for _ in range(J.m)] for _ in range(J.m)]
                po = [[rng.randint(-2, 2) for _ in range(J.n)] for _ in range(J.n)]
                de, _ = int_matrix_det_adjugate(pe)
                do, _ = int_matrix_det_adjugate(po)
                if de != 0 and do != 0:
                    break
            moved = apply_graded_change(
                J,
                [[Fraction(x) for x in row] for row in pe],
                [[Fraction(x) for x in row] for row in po],
            )
            assert orbit_dimension(moved) == base_orbit
            assert power_filtration(moved) == base_powers
            assert is_associative(moved) == base_assoc
