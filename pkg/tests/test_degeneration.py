import random
from fractions import Fraction

import pytest

from superjordan.algebra import flatten, load
from superjordan.degeneration import (
    WitnessError,
    apply_basis_change_table,
    eval_t_expression,
    parametric_constants,
    parse_witness,
    specialize_witness,
    verify_degeneration,
)
from superjordan.ratfun import RatFun

ONE = Fraction(1)


def wit_text(src, tgt, basis_lines, mode="auto"):
    lines = ["[degeneration]", f"source = {src}", f"target = {tgt}", f"mode = {mode}"]
    lines += [f"basis: {b}" for b in basis_lines]
    return "\n".join(lines)


def test_expression_parser():
    assert eval_t_expression("t^(7/12)", 12) == RatFun.monomial(7)
    assert eval_t_expression("1/t", 1) == RatFun.monomial(-1)
    assert eval_t_expression("(2+t)/2", 1) == (RatFun.const(2) + RatFun.var()) / 2
    assert eval_t_expression("-t^2*3", 1) == RatFun.monomial(2, -3)
    with pytest.raises(WitnessError):
        eval_t_expression("t^(1/2)", 3)  # ramification does not clear /2


def test_witness_ramification():
    w = parse_witness(
        wit_text("A", "B", ["f1 = t^(2/3)*f1", "f2 = t^(1/2)*f2", "f3 = f3", "e = e"])
    )
    assert w.ramification() == 6


def test_parametric_constants_example(catalog):
    j5 = catalog.lookup("J5")
    w = parse_witness(wit_text("J5", "J2", ["f1 = t*f1", "f2 = t*f2", "f3 = f3", "e = e"]))
    nc, order, ram = parametric_constants(w, j5)
    assert ram == 1
    e, f1, f2, f3 = (order.index(x) for x in ("e", "f1", "f2", "f3"))
    assert nc[e][f1][f2] == RatFun.const(1)
    assert nc[f2][f3][e] == RatFun.var()
    nonzero = [
        (a, b, k)
        for a in range(4)
        for b in range(4)
        for k in range(4)
        if not nc[a][b][k].is_zero()
    ]
    assert len(nonzero) == 4  # ef1, f1e, f2f3, f3f2


def test_identity_witness_returns_source(catalog):
    j5 = catalog.lookup("J5")
    w = parse_witness(wit_text("J5", "J5", ["f1 = f1", "f2 = f2", "f3 = f3", "e = e"]))
    nc, order, _ = parametric_constants(w, j5)
    flat = flatten(j5, order)
    for a in range(4):
        for b in range(4):
            for k in range(4):
                assert nc[a][b][k] == RatFun.const(flat[a][b][k])


def test_verify_degeneration_verdicts(catalog):
    j5, j2, j7 = catalog.lookup("J5"), catalog.lookup("J2"), catalog.lookup("J7")
    w = parse_witness(wit_text("J5", "J2", ["f1 = t*f1", "f2 = t*f2", "f3 = f3", "e = e"]))
    v = verify_degeneration(w, j5, j2)
    assert v.verified and v.mode_used == "graded"

    ident = parse_witness(wit_text("J7", "J5", ["f1 = f1", "f2 = f2", "f3 = f3", "e = e"]))
    v2 = verify_degeneration(ident, j7, j5)
    assert v2.status == "LimitMismatch"

    diverging = parse_witness(
        wit_text("J5", "J2", ["f1 = 1/t*f1", "f2 = f2", "f3 = f3", "e = e"])
    )
    v3 = verify_degeneration(diverging, j5, j2)
    assert v3.status == "LimitDiverges"

    singular = parse_witness(
        wit_text("J5", "J2", ["f1 = t*f1", "f2 = t*f1", "f3 = f3", "e = e"])
    )
    v4 = verify_degeneration(singular, j5, j2)
    assert v4.status == "SingularMatrix"


def test_graded_mode_rejects_mixed_basis(catalog):
    j3, j1 = catalog.lookup("J3"), catalog.lookup("J1")
    mixed = parse_witness(
        wit_text(
            "J3",
            "J1",
            ["f1 = t*f1", "f2 = f2+f3+t*e", "f3 = f3+t*e", "e = t*e"],
            mode="graded",
        )
    )
    assert verify_degeneration(mixed, j3, j1).status == "NonGradedWitness"
    auto = parse_witness(
        wit_text("J3", "J1", ["f1 = t*f1", "f2 = f2+f3+t*e", "f3 = f3+t*e", "e = t*e"])
    )
    v = verify_degeneration(auto, j3, j1)
    assert v.verified and v.mode_used == "ungraded"


def test_basis_change_composition():
    rng = random.Random(5)
    j = load([("e", "f1", [(ONE, "f2")]), ("f2", "f3", [(ONE, "e")])], (1, 3))
    table = flatten(j)
    rf = [[[RatFun.const(x) for x in row] for row in plane] for plane in table]
    rf = tuple(tuple(tuple(r) for r in p) for p in rf)
    from superjordan.linalg import int_matrix_det_adjugate

    def rand_mat():
        while True:
            g = [[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)]
            det, _ = int_matrix_det_adjugate(g)
            if det != 0:
                return [[RatFun.const(x) for x in row] for row in g]

    P, Q = rand_mat(), rand_mat()
    PQ = [
        [sum((P[i][k] * Q[k][j] for k in range(4)), RatFun.const(0)) for j in range(4)]
        for i in range(4)
    ]
    one_step = apply_basis_change_table(rf, PQ)
    two_step = apply_basis_change_table(apply_basis_change_table(rf, Q), P)
    assert one_step == two_step


def test_specialize_witness_regular_value(catalog):
    j5 = catalog.lookup("J5")
    w = parse_witness(wit_text("J5", "J2", ["f1 = t*f1", "f2 = t*f2", "f3 = f3", "e = e"]))
    table, ram = specialize_witness(w, j5, Fraction(7))
    assert ram == 1
    # the fiber at t=7 is isomorphic to the source: same ungraded invariants
    from superjordan.invariants import table_is_associative, ungraded_derivation_dim

    assert ungraded_derivation_dim(table) == ungraded_derivation_dim(flatten(j5))
    assert table_is_associative(table) == table_is_associative(flatten(j5))


def test_family_source_witness(catalog):
    w = parse_witness(
        "\n".join(
            [
                "[degeneration]",
                "source = Jc16^(t)",
                "target = Jc30",
                "basis: e1 = e1",
                "basis: e2 = t*e2",
                "basis: f1 = f1",
                "basis: f2 = f2",
            ]
        )
    )
    assert w.source_param == "t"
    param = eval_t_expression(w.source_param, w.ramification())
    src = catalog.lookup("Jc16", param)
    tgt = catalog.lookup("Jc30")
    v = verify_degeneration(w, src, tgt)
    assert v.verified and v.mode_used == "graded"
