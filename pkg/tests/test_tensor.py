import itertools

import pytest

from conftest import ets_tables
from tridend.axioms import TripleSource, check_axioms
from tridend.exact import LinComb
from tridend.free import FreeTridend
from tridend.omega import builtin
from tridend.tensor import (CollapsedAlgebra, all_injective, all_surjective, collapsed_product,
                            freeness_probe, generation_probe, phi, phi_properties)
from tridend.trees import ResourceLimit, corolla, parse

M2 = builtin("matching", 2)
PA = builtin("projections_A", 2)


def test_phi_examples():
    for a, b in itertools.product(range(2), repeat=2):
        assert phi(M2, "right", a, b) == (b, a)
        assert phi(PA, "left", a, b) == (a, b)
        assert phi(PA, "right", a, b) == (a, a)
    props = phi_properties(PA)
    assert props["left"].surjective and props["left"].injective
    r = props["right"]
    assert (r.surjective, r.injective, r.image_size) == (False, False, 2)
    assert r.missing == (0, 1) and r.collision == ((0, 0), (0, 1))
    assert all_surjective(M2) and all_injective(M2)


def test_surjective_iff_injective_on_finite_tables():
    for t in ets_tables(2):
        for rep in phi_properties(t).values():
            assert rep.surjective == rep.injective


def test_collapsed_product_by_hand():
    F = FreeTridend(M2)
    x = LinComb.basis((0, corolla("x")))
    y = LinComb.basis((1, corolla("y")))
    # (0 (x) x) < (1 (x) y) = (0 <- 1) (x) x <_{0 <| 1} y = 0 (x) x <_1 y
    got = collapsed_product("prec", M2, F, x, y)
    assert got == LinComb.basis((0, parse("(| x (|:1 y |))")))
    got = collapsed_product("succ", M2, F, x, y)
    assert got == LinComb.basis((1, parse("((| x |:0) y |)")))


def test_collapsed_algebra_is_classical_tridendriform():
    C = CollapsedAlgebra(M2, FreeTridend(M2))
    gens = [C.element(w, corolla(x)) for w in range(2) for x in "xy"]
    assert check_axioms(C, TripleSource.exhaustive({2: gens}, 6)).passed
    assert C.table.size == 1


def test_collapsed_algebra_checks_table():
    with pytest.raises(ValueError):
        CollapsedAlgebra(M2, FreeTridend(builtin("trivial", 2)))


@pytest.mark.parametrize("table", [M2, builtin("trivial", 1), builtin("matching", 1)])
def test_probes_pass_when_bijective(table):
    g = generation_probe(table, ["x"], 3)
    f = freeness_probe(table, ["x"], 3)
    assert g.verdict and f.verdict
    assert all(d == e for d, e in g.dims.values())


def test_one_element_dimensions():
    f = freeness_probe(builtin("trivial", 1), ["x"], 3)
    assert f.dims == {1: (1, 1), 2: (3, 3), 3: (11, 11)}


def test_projections_fail_generation_at_degree_two():
    g = generation_probe(PA, ["x"], 3)
    assert not g.verdict and g.first_failure == 2
    assert g.dims[2] == (10, 12)
    assert "is not in the span" in g.witness
    f = freeness_probe(PA, ["x"], 3)
    assert not f.verdict and f.witness.endswith("= 0")


def test_probe_guards():
    with pytest.raises(ResourceLimit):
        generation_probe(M2, ["x"], 9)
    with pytest.raises(ValueError):
        freeness_probe(M2, ["x"], 1)

