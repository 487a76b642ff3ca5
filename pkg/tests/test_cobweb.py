import networkx as nx
import pytest

from fibroman.cobweb import (build, count_chains_from_point, count_chains_root_to_level,
                             enumerate_chains, export_dot, verify_observation3)
from fibroman.psi_arith import FIBONACCI, falling_factorial, psi_factorial


def as_digraph(P):
    g = nx.DiGraph()
    for s in range(1, P.num_levels + 1):
        g.add_nodes_from(P.elements(s))
    g.add_edges_from(P.edges())
    return g


@pytest.mark.parametrize("m, sizes", [(1, (1,)), (5, (1, 1, 2, 3, 5)),
                                      (8, (1, 1, 2, 3, 5, 8, 13, 21))])
def test_build_levels(m, sizes):
    assert build(m).level_sizes == sizes


def test_build_rejects_empty():
    with pytest.raises(ValueError):
        build(0)


@pytest.mark.parametrize("n, expected", [(1, 1), (4, 6), (5, 30)])
def test_root_counts(n, expected):
    assert count_chains_root_to_level(build(8), n) == expected


def test_observation1_and_2():
    P = build(12)
    for n in range(1, 13):
        assert count_chains_root_to_level(P, n) == psi_factorial(FIBONACCI, n)
        for k in range(1, n + 1):
            assert count_chains_from_point(P, k, n) == falling_factorial(FIBONACCI, n, n - k)


@pytest.mark.parametrize("k, n, expected", [(4, 4, 1), (3, 6, 120), (1, 4, 6)])
def test_point_counts(k, n, expected):
    assert count_chains_from_point(build(7), k, n) == expected


def test_count_errors():
    P = build(4)
    with pytest.raises(ValueError):
        count_chains_root_to_level(P, 5)
    with pytest.raises(ValueError):
        count_chains_from_point(P, 3, 2)


@pytest.mark.parametrize("k, n, expected", [(1, 3, 2), (2, 2, 1), (1, 5, 30)])
def test_enumerate_examples(k, n, expected):
    assert len(enumerate_chains(build(6), k, n)) == expected


def test_enumeration_matches_dp_and_graph_paths():
    P = build(7)
    g = as_digraph(P)
    for n in range(1, 8):
        for k in range(1, n + 1):
            chains = enumerate_chains(P, k, n)
            assert len(chains) == count_chains_from_point(P, k, n)
            assert chains == sorted(chains)
            for chain in chains:
                assert chain[0] == (k, 0) and chain[-1][0] == n
                assert all(P.covers(a, b) for a, b in zip(chain, chain[1:]))
            if n - k <= 4:
                targets = P.elements(n)
                via_graph = sum(1 for t in targets
                                for _ in nx.all_simple_paths(g, (k, 0), t)) if k < n else 1
                assert via_graph == len(chains)


def test_enumeration_cap():
    with pytest.raises(ValueError, match="cap 10"):
        enumerate_chains(build(6), 1, 6, cap=10)


@pytest.mark.parametrize("n, m, value", [(6, 3, 60), (9, 0, 1), (5, 2, 15)])
def test_observation3_examples(n, m, value):
    ok, lhs, rhs = verify_observation3(n, m)
    assert ok and lhs == rhs == value


@pytest.mark.parametrize("m, nodes, edges", [(2, 2, 1), (4, 7, 9), (5, 12, 24)])
def test_export_dot(m, nodes, edges):
    text = export_dot(build(m))
    assert text.startswith("digraph")
    assert text.count("->") == edges
    names = {tok.strip('";') for tok in text.split() if tok.startswith('"L')}
    assert len(names) == nodes


def test_export_dot_guard():
    with pytest.raises(ValueError):
        export_dot(build(13))
    assert export_dot(build(13), max_levels=13).count("->") > 0
