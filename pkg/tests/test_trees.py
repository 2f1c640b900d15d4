import pytest
from hypothesis import given, settings, strategies as st

from tridend.omega import builtin
from tridend.trees import (LEAF, Leaf, ResourceLimit, TreeError, Vertex, angle_labels, corolla, count,
                           enumerate_trees, is_valid, leaf_count, leaves, parse, render, schroeder,
                           set_leftmost_type, set_rightmost_type, stats, trees_up_to, validate)

M2 = builtin("matching", 2)


def little_schroeder(n):
    """Independent oracle: (k+1) s_{k+1} = 3(2k-1) s_k - (k-2) s_{k-1}, s_1 = s_2 = 1.

    s_{n+1} counts plane trees with n+1 leaves and no unary vertex."""
    s = {1: 1, 2: 1}
    for k in range(2, n + 1):
        s[k + 1] = (3 * (2 * k - 1) * s[k] - (k - 2) * s[k - 1]) // (k + 1)
    return s[n + 1]


def test_schroeder_numbers():
    assert [schroeder(n) for n in range(1, 8)] == [little_schroeder(n) for n in range(1, 8)]
    assert [schroeder(n) for n in range(1, 5)] == [1, 3, 11, 45]


@pytest.mark.parametrize("n,x,q", [(1, 1, 1), (2, 2, 3), (3, 1, 1), (3, 2, 2), (4, 1, 2)])
def test_enumeration_matches_count(n, x, q):
    X = [f"x{i}" for i in range(x)]
    trees = enumerate_trees(n, X, q)
    assert len(trees) == count(n, x, q)
    assert len(set(trees)) == len(trees)
    assert all(is_valid(T, q) for T in trees)
    assert all(leaf_count(T) == n + 1 for T in trees)


def test_small_listings():
    assert [render(T) for T in enumerate_trees(1, ["x"], 1)] == ["(| x |)"]
    shapes = {render(T) for T in enumerate_trees(2, ["x"], 1)}
    assert shapes == {"((| x |:0) x |)", "(| x (|:0 x |))", "(| x |:0 x |)"}
    assert len(enumerate_trees(2, ["x", "y"], M2)) == 3 * 4 * 2


def test_enumeration_is_sorted_and_guarded():
    trees = enumerate_trees(3, ["x"], 2)
    assert [render(T) for T in trees] == sorted(render(T) for T in trees)
    with pytest.raises(ResourceLimit):
        enumerate_trees(9, ["x"], 1)
    assert set(trees_up_to(4, ["x"], 1)) == {2, 3, 4}


def test_validation():
    assert validate({"children": [None, None], "angles": ["x"]}) == corolla("x")
    with pytest.raises(TreeError, match="internal leaf 1 is missing a type"):
        validate(Vertex((LEAF, LEAF, LEAF), ("x", "y")))
    with pytest.raises(TreeError, match="needs at least 2"):
        validate(Vertex((LEAF,), ()))
    with pytest.raises(TreeError) as err:
        validate(Vertex((Leaf(0), Leaf(0)), ("x",)))
    assert len(err.value.problems) == 2
    assert not is_valid(corolla("x", "y", types=[5]), 2)


def test_retyping():
    T = set_leftmost_type(corolla("x"), "a")
    assert render(T) == "(|:a x |)"
    assert set_leftmost_type(set_leftmost_type(corolla("x"), "a"), "b") == set_leftmost_type(corolla("x"), "b")
    assert render(set_rightmost_type(corolla("x"), 1)) == "(| x |:1)"


def test_parse_examples():
    assert parse("(| x |)") == corolla("x")
    T = parse("(| x (|:a y |))")
    assert render(T) == "(| x (|:a y |))"
    assert angle_labels(T) == ["x", "y"]
    assert parse("(| x |:a y |)") == corolla("x", "y", types=["a"])
    assert stats(parse("(| x |:0 y (|:1 z |))")) == (4, 2, 3)


@pytest.mark.parametrize("text,pos", [("(| x |", 6), ("(| x |) junk", 8), ("(| |)", 3), ("(|:0 x |)", None)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(TreeError) as err:
        parse(text)
    if pos is not None:
        assert err.value.position == pos


def test_parse_with_table_names():
    t = builtin("matching", 2)
    assert parse("(| x |:1 y |)", t).children[1] == Leaf(1)
    with pytest.raises(TreeError):
        parse("(| x |:7 y |)", t)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_render_parse_round_trip(data):
    n = data.draw(st.integers(1, 4))
    trees = enumerate_trees(n, ["x", "y"], M2)
    T = data.draw(st.sampled_from(trees))
    assert parse(render(T), M2) == T
    assert len(leaves(T)) == n + 1
