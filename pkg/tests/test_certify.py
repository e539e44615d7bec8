import pytest
from hypothesis import given, settings

from conftest import tree_strategy
from rainbowdom.certify import FormulaFamily, construct_m3rdf, construct_tree_matching, formula_gamma_star_r3
from rainbowdom.errors import DomainError
from rainbowdom.graph import Edge, Vertex, generate, matching_number
from rainbowdom.rainbow import verify_mkrdf
from rainbowdom.solver import solve_middle


@pytest.mark.parametrize(
    "family,value",
    [
        (("path", 6), 8),
        (("cycle", 5), 7),
        (("complete", 5), 7),
        (("path", 2), 3),
        (("path", 3), 4),
        (("path", 4), 5),
        (("path", 5), 7),
        (("complete", 4), 6),
        (("complete", 6), 9),
        (("star", 4), 6),
        (("double_star", 2, 2), 7),
    ],
)
def test_formula_values(family, value):
    assert formula_gamma_star_r3(*family) == value


def test_formula_family_object():
    assert formula_gamma_star_r3(FormulaFamily("cycle", (7,))) == 10


@pytest.mark.parametrize(
    "family", [("path", 1), ("cycle", 2), ("complete", 1), ("star", 1), ("double_star", 0, 1), ("wheel", 5), ("path",)]
)
def test_formula_domain(family):
    with pytest.raises(DomainError):
        formula_gamma_star_r3(*family)


def test_construct_path7():
    f = construct_m3rdf("path", 7)
    assert f.support() == {
        Vertex(0): {1},
        Vertex(3): {1},
        Vertex(6): {1},
        Edge(1, 2): {1, 2, 3},
        Edge(4, 5): {1, 2, 3},
    }
    assert f.weight == 9


def test_construct_cycle6():
    f = construct_m3rdf("cycle", 6)
    assert f.support() == {Vertex(0): {1}, Vertex(3): {1}, Edge(1, 2): {1, 2, 3}, Edge(4, 5): {1, 2, 3}}
    assert f.weight == 8


def test_construct_complete4():
    f = construct_m3rdf("complete", 4)
    assert f.support() == {Edge(0, 1): {1, 2, 3}, Edge(2, 3): {1, 2, 3}}


def test_construct_cycle_n2_mod3_reuses_path():
    f = construct_m3rdf("cycle", 8)
    assert f.mask(Edge(0, 7)) == 0 and f[Vertex(7)] == {2, 3}


@pytest.mark.parametrize(
    "kind,lo,hi", [("path", 2, 60), ("cycle", 3, 60), ("complete", 2, 12)]
)
def test_constructions_valid_with_formula_weight(kind, lo, hi):
    for n in range(lo, hi + 1):
        f = construct_m3rdf(kind, n)
        assert verify_mkrdf(generate(kind, n), f).valid, (kind, n)
        assert f.weight == formula_gamma_star_r3(kind, n), (kind, n)


@pytest.mark.parametrize("kind,lo,hi", [("path", 2, 8), ("cycle", 3, 7), ("complete", 2, 5)])
def test_formula_matches_solver(kind, lo, hi):
    for n in range(lo, hi + 1):
        assert formula_gamma_star_r3(kind, n) == solve_middle(generate(kind, n), 3).value


def test_star_and_double_star_match_solver():
    for t in range(2, 6):
        assert formula_gamma_star_r3("star", t) == solve_middle(generate("star", t), 3).value
    for p in range(1, 4):
        for q in range(1, 4):
            g = generate("double_star", p, q)
            assert formula_gamma_star_r3("double_star", p, q) == solve_middle(g, 3).value


def test_construct_rejects():
    with pytest.raises(DomainError):
        construct_m3rdf("star", 4)
    with pytest.raises(DomainError):
        construct_m3rdf("cycle", 2)


def test_tree_matching_star():
    f = construct_tree_matching(generate("star", 3))
    assert f.weight == 5
    assert [x for x, c in f.items() if c == {1, 2, 3}] == [Edge(0, 1)]
    assert {x for x, c in f.items() if c == {1}} == {Vertex(2), Vertex(3)}


def test_tree_matching_p4_and_p2():
    f = construct_tree_matching(generate("path", 4))
    assert f.support() == {Edge(0, 1): {1, 2, 3}, Edge(2, 3): {1, 2, 3}} and f.weight == 6
    assert construct_tree_matching(generate("path", 2)).weight == 3


def test_tree_matching_rejects_cycle():
    with pytest.raises(DomainError):
        construct_tree_matching(generate("cycle", 4))


@settings(max_examples=100)
@given(tree_strategy(1, 10))
def test_tree_matching_random(t):
    f = construct_tree_matching(t)
    bound = t.order + matching_number(t)
    assert verify_mkrdf(t, f).valid and f.weight == bound
    assert solve_middle(t, 3).value <= bound
