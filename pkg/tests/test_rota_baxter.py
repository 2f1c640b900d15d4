import random

import pytest

from tridend.axioms import TripleSource, check_axioms
from tridend.exact import LinComb
from tridend.omega import builtin
from tridend.rota_baxter import (OmegaRBAlgebra, RBError, check_rb, induced_tridend, load_rb,
                                 random_elements)

T1 = builtin("trivial", 1)
M2 = builtin("matching", 2)
SHIFT = [[0, 0], [1, 0]]  # P(x, y) = (0, x)


def weight_one():
    return OmegaRBAlgebra.pointwise(2, {0: SHIFT}, {0: 1})


def test_zero_operator_passes_for_any_weight():
    for mu in (0, 1, 5):
        alg = OmegaRBAlgebra.pointwise(2, {0: [[0, 0], [0, 0]]}, {0: mu})
        assert check_rb(alg, T1).passed


def test_classical_weight_one_example():
    assert check_rb(weight_one(), T1).passed


def test_weight_two_fails_with_witness():
    alg = OmegaRBAlgebra.pointwise(2, {0: SHIFT}, {0: 2})
    rep = check_rb(alg, T1)
    assert not rep.passed
    v = rep.violations[0]
    assert v.witness == (0, 0, 0, 0)
    # P(e0)P(e0) = e1 but the right side carries the weight twice
    assert (v.lhs, v.rhs) == ("1*1", "2*1")


def test_by_hand_identity():
    # weight-one identity P(x)P(y) = P(P(x)y + xP(y) + xy) on x = e0, y = e0
    A = weight_one()
    x = A.e(0)
    lhs = A.times(A.P(0, x), A.P(0, x))
    rhs = A.P(0, A.times(A.P(0, x), x) + A.times(x, A.P(0, x)) + A.times(x, x))
    assert lhs == rhs == LinComb({1: 1})


def test_scaled_family_over_matching():
    # P_w = c_w P with mu = c satisfies the family identity for the matching table
    alg = OmegaRBAlgebra.pointwise(2, {0: SHIFT, 1: [[0, 0], [2, 0]]}, {0: 1, 1: 2})
    assert check_rb(alg, M2).passed
    wrong = OmegaRBAlgebra.pointwise(2, {0: SHIFT, 1: [[0, 0], [2, 0]]}, {0: 1, 1: 1})
    assert not check_rb(wrong, M2).passed


def test_induced_products():
    A = induced_tridend(weight_one(), T1)
    e0, e1 = A.alg.e(0), A.alg.e(1)
    assert A.prec(0, e0, e0) == LinComb.zero            # e0 * P(e0) = e0 * e1
    assert A.succ(0, e0, e1) == LinComb({1: 1})          # P(e0) * e1 = e1
    assert A.circ(0, e1, e1) == LinComb({1: 1})


def test_induced_algebra_satisfies_axioms():
    A = induced_tridend(weight_one(), T1)
    pool = random_elements(2, 40, random.Random(0))
    assert check_axioms(A, TripleSource.sampled(pool, samples=512, seed=0)).passed
    B = induced_tridend(OmegaRBAlgebra.pointwise(2, {0: SHIFT, 1: [[0, 0], [2, 0]]}, {0: 1, 1: 2}), M2)
    basis = B.basis_elements()
    assert check_axioms(B, [(x, y, z) for x in basis for y in basis for z in basis]).passed


def test_zero_operator_induces_plain_multiplication():
    A = induced_tridend(OmegaRBAlgebra.pointwise(2, {0: [[0, 0], [0, 0]]}, {0: 1}), T1)
    x, y = LinComb({0: 1, 1: 2}), LinComb({1: 3})
    assert A.prec(0, x, y) == LinComb.zero == A.succ(0, x, y)
    assert A.circ(0, x, y) == LinComb({1: 6})
    basis = A.basis_elements()
    assert check_axioms(A, [(a, b, c) for a in basis for b in basis for c in basis]).passed


def test_refusals(data_dir):
    with pytest.raises(RBError, match="Rota-Baxter identity fails"):
        induced_tridend(load_rb(data_dir / "rb_weight2.json"), T1)
    with pytest.raises(RBError, match="operators"):
        check_rb(weight_one(), M2)
    with pytest.raises(RBError, match="2x2"):
        OmegaRBAlgebra.pointwise(2, {0: [[0]]}, {0: 1})


def test_json_round_trip(data_dir):
    alg = load_rb(data_dir / "rb_weight1.json")
    assert alg.to_json() == weight_one().to_json()
