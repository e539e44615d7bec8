from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import tree_strategy
from rainbowdom.errors import DomainError
from rainbowdom.graph import Graph, generate, prufer_decode
from rainbowdom.laws import (
    LawReport,
    characterize_weight_three,
    check_edge_perturbation,
    check_observation_lower,
    check_pendant_path_lemma,
    check_tree_bounds,
    check_vertex_deletion,
    labeled_graphs,
    pendant_paths,
)
from rainbowdom.rainbow import middle_assignment
from rainbowdom.solver import enumerate_optimal_middle, solve_middle


def test_report_holds_follows_chain():
    assert LawReport("x", "y", (1, 2, 2)).holds
    assert not LawReport("x", "y", (3, 2)).holds
    assert LawReport("x", "y", (0, 0), "==").holds
    assert LawReport("x", "y", ()).holds
    assert "holds: false" in LawReport("x", "y", (3, 2)).to_text()


@pytest.mark.parametrize(
    "g,value", [(generate("path", 2), 3), (generate("empty", 3), 3), (generate("path", 4), 5)]
)
def test_observation_examples(g, value):
    r = check_observation_lower(g, 3)
    assert r.holds and r.chain == (3, value)


def test_observation_precondition():
    with pytest.raises(DomainError):
        check_observation_lower(Graph(1), 3)


def test_weight_three_small():
    r = characterize_weight_three(4)
    assert r.holds
    assert r.witness["graphs scanned"] == {2: 2, 3: 8, 4: 64}
    assert r.witness["classes attaining 3"] == 2
    assert "classes attaining 3: 2" in r.to_text()


def test_weight_three_limit():
    with pytest.raises(DomainError):
        characterize_weight_three(6)


def test_labeled_graph_count():
    assert sum(1 for _ in labeled_graphs(4)) == 64


def test_vertex_deletion_examples():
    r = check_vertex_deletion(generate("path", 3), 0, 3)
    assert r.holds and r.chain == (1, 3, 4)
    r = check_vertex_deletion(generate("complete", 4), 2, 3)
    assert r.holds and r.chain == (3, 4, 6)
    r = check_vertex_deletion(generate("path", 2), 1, 3)
    # a lone vertex needs only one colour
    assert r.holds and r.chain == (1, 1, 3)


def test_vertex_deletion_unknown_vertex():
    with pytest.raises(DomainError):
        check_vertex_deletion(generate("path", 3), 3, 3)


def test_edge_examples():
    r = check_edge_perturbation(generate("path", 4), (0, 3), 3, "add")
    assert r.holds and r.chain == (2, 6, 6)
    r = check_edge_perturbation(generate("cycle", 4), (0, 3), 3, "delete")
    assert r.holds and r.chain == (5, 5, 9)
    r = check_edge_perturbation(generate("path", 3), (0, 2), 3, "add")
    assert r.holds and r.chain == (1, 4, 5)


def test_edge_preconditions():
    with pytest.raises(DomainError):
        check_edge_perturbation(generate("path", 3), (0, 1), 3, "add")
    with pytest.raises(DomainError):
        check_edge_perturbation(generate("path", 3), (0, 2), 3, "delete")
    with pytest.raises(DomainError):
        check_edge_perturbation(generate("path", 3), (0, 2), 3, "flip")


@pytest.mark.parametrize(
    "t,chain",
    [
        (generate("star", 4), (Fraction(5, 2), 6, 6)),
        (generate("path", 6), (Fraction(15, 2), 8, 9)),
        (generate("double_star", 2, 2), (5, 7, 8)),
    ],
)
def test_tree_bound_examples(t, chain):
    r = check_tree_bounds(t)
    assert r.holds and r.chain == chain


def test_tree_bounds_rejects_non_tree():
    with pytest.raises(DomainError):
        check_tree_bounds(generate("cycle", 3))


@settings(max_examples=40)
@given(tree_strategy(1, 10))
def test_tree_bounds_random(t):
    r = check_tree_bounds(t)
    assert r.holds
    lower, value, _ = r.chain
    assert isinstance(lower, Fraction)
    assert (value >= lower) == (value >= ceil(lower))
    assert r.witness["ceil consistent"]


def test_pendant_paths_spider():
    assert sorted(pendant_paths(generate("spider", 2, 2))) == [(0, 3, 1), (0, 4, 2)]


def test_pendant_lemma_p4_solver():
    t = generate("path", 4)
    r = check_pendant_path_lemma(t, solve_middle(t, 3).certificate)
    assert r.holds and len(r.witness["path sums"]) == 2


@pytest.mark.parametrize("t", [generate("path", 3), generate("spider", 2, 2)])
def test_pendant_lemma_every_optimum(t):
    found = enumerate_optimal_middle(t, 3)
    assert found
    for f in found:
        assert check_pendant_path_lemma(t, f).holds


def test_pendant_lemma_rejects_bad_certificates():
    t = generate("path", 4)
    with pytest.raises(DomainError):
        check_pendant_path_lemma(t, middle_assignment(t, 3))
    heavy = middle_assignment(t, 3, {x: {1, 2, 3} for x in range(4)})
    with pytest.raises(DomainError):
        check_pendant_path_lemma(t, heavy)


def _all_labeled_trees(n):
    if n <= 2:
        yield generate("path", n)
        return
    from itertools import product

    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


@pytest.mark.parametrize("n", [3, 4])
def test_pendant_lemma_all_trees_small(n):
    for t in _all_labeled_trees(n):
        for f in enumerate_optimal_middle(t, 3):
            assert check_pendant_path_lemma(t, f).holds


@given(st.sampled_from([(n, k) for n in range(1, 4) for k in (1, 2, 3)]), st.data())
def test_perturbations_random_small(nk, data):
    n, k = nk
    g = data.draw(st.sampled_from(list(labeled_graphs(n))))
    for v in range(n):
        assert check_vertex_deletion(g, v, k).holds
