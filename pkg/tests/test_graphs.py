import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finring import graphs, rings, structure
from finring.errors import FormatError, GraphCapExceeded


def brute_iso(g, h):
    """All-permutation isomorphism search with prefix pruning (oracle)."""
    if g.vertex_count != h.vertex_count:
        return None
    n = g.vertex_count
    ga, ha = g.adjacency(), h.adjacency()

    def rec(mapping):
        v = len(mapping)
        if v == n:
            return list(mapping)
        for w in range(n):
            if w in mapping:
                continue
            if all((u in ga[v]) == (mapping[u] in ha[w]) for u in range(v)):
                result = rec(mapping + [w])
                if result is not None:
                    return result
        return None

    return rec([])


def test_zero_divisor_graph_examples():
    assert graphs.is_complete(graphs.zero_divisor_graph(rings.n0(3, 1))) == 2
    assert graphs.zero_divisor_graph(rings.gf(2, 2)).vertex_count == 0
    path = graphs.zero_divisor_graph(rings.np2(2))
    assert path.vertex_count == 3
    assert sorted(path.edges) == [(0, 1), (1, 2)]
    assert path.labels == ("a", "2a", "3a")


def test_vertex_set_matches_zero_divisors():
    for ring in (rings.zn(8), rings.np2(3), rings.ap(3), rings.matrix_ring(rings.zn(2), 2)):
        graph = graphs.zero_divisor_graph(ring)
        divisors = sorted(structure.zero_divisors(ring))
        assert graph.vertex_count == len(divisors)
        # every vertex genuinely annihilates someone on some side
        adj = graph.adjacency()
        for i, x in enumerate(divisors):
            self_annihilating = ring.mul[x][x] == 0
            assert adj[i] or self_annihilating


def test_is_complete():
    assert graphs.is_complete(graphs.zero_divisor_graph(rings.zn(9))) == 2
    assert graphs.is_complete(graphs.make_graph(1, [])) == 1
    assert graphs.is_complete(graphs.zero_divisor_graph(rings.np2(2))) is None
    assert graphs.is_complete(graphs.make_graph(0, [])) == 0


def test_canonical_form_examples():
    a = graphs.canonical_form(graphs.zero_divisor_graph(rings.zn(9)))
    b = graphs.canonical_form(
        graphs.zero_divisor_graph(rings.direct_sum(rings.zn(2), rings.zn(2)))
    )
    assert a == b
    assert graphs.canonical_form(graphs.make_graph(0, [])) == b"G1;n=0;"
    p3 = graphs.make_graph(3, [(0, 1), (1, 2)])
    assert graphs.canonical_form(p3) != graphs.canonical_form(graphs.complete_graph(3))


def test_canonical_cap():
    big = graphs.make_graph(65, [])
    with pytest.raises(GraphCapExceeded):
        graphs.canonical_form(big)
    assert graphs.canonical_form(big, cap=65) is not None


def test_graph_isomorphism_family_pairs():
    for p in (2, 3, 5):
        family = [
            rings.np2(p),
            rings.npp(p),
            rings.ap(p),
            rings.ap0(p),
            rings.direct_sum(rings.n0(p, 1), rings.zn(p)),
        ]
        gs = [graphs.zero_divisor_graph(r) for r in family]
        for a, b in itertools.combinations(gs, 2):
            witness = graphs.graph_isomorphic(a, b)
            assert witness is not None
            adj_b = b.adjacency()
            for u, v in a.edges:
                assert witness[v] in adj_b[witness[u]]


def test_graph_isomorphism_negative():
    k2 = graphs.complete_graph(2)
    p3 = graphs.make_graph(3, [(0, 1), (1, 2)])
    assert graphs.graph_isomorphic(k2, p3) is None


def test_graph_invariant_under_ring_isomorphism():
    pairs = [
        (rings.zn(6), rings.direct_sum(rings.zn(2), rings.zn(3))),
        (rings.gf(2, 2), rings.gf(2, 2)),
        (rings.direct_sum(rings.zn(2), rings.zn(2)), rings.direct_sum(rings.zn(2), rings.zn(2))),
    ]
    for a, b in pairs:
        assert structure.ring_isomorphic(a, b) is not None
        assert graphs.graph_isomorphic(
            graphs.zero_divisor_graph(a), graphs.zero_divisor_graph(b)
        ) is not None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.data())
def test_canonical_matches_brute_oracle(n, data):
    edges_all = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks_a = data.draw(st.lists(st.sampled_from(edges_all), max_size=10) if edges_all else st.just([]))
    picks_b = data.draw(st.lists(st.sampled_from(edges_all), max_size=10) if edges_all else st.just([]))
    a = graphs.make_graph(n, picks_a)
    b = graphs.make_graph(n, picks_b)
    assert (graphs.canonical_form(a) == graphs.canonical_form(b)) == (
        brute_iso(a, b) is not None
    )


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.data())
def test_permuted_graph_same_certificate(n, data):
    edges_all = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks = data.draw(st.lists(st.sampled_from(edges_all), max_size=12) if edges_all else st.just([]))
    perm = data.draw(st.permutations(list(range(n))))
    g = graphs.make_graph(n, picks)
    h = graphs.make_graph(n, [(perm[a], perm[b]) for a, b in picks])
    assert graphs.canonical_form(g) == graphs.canonical_form(h)
    assert graphs.graph_isomorphic(g, h) is not None


def test_export_dot_goldens():
    k2 = graphs.complete_graph(2)
    assert graphs.export_dot(k2) == "graph {\n  0;\n  1;\n  0 -- 1;\n}\n"
    empty = graphs.make_graph(0, [])
    assert graphs.export_dot(empty) == "graph {\n}\n"
    path = graphs.zero_divisor_graph(rings.np2(2))
    assert graphs.export_dot(path) == (
        "graph {\n"
        '  0 [label="a"];\n'
        '  1 [label="2a"];\n'
        '  2 [label="3a"];\n'
        "  0 -- 1;\n"
        "  1 -- 2;\n"
        "}\n"
    )


def test_parse_dot_round_trip():
    for graph in (
        graphs.complete_graph(4),
        graphs.zero_divisor_graph(rings.np2(2)),
        graphs.make_graph(0, []),
    ):
        again = graphs.parse_dot(graphs.export_dot(graph))
        assert again.vertex_count == graph.vertex_count
        assert again.edges == graph.edges


def test_parse_dot_errors():
    with pytest.raises(FormatError):
        graphs.parse_dot("digraph { }")
    with pytest.raises(FormatError):
        graphs.parse_dot("graph {\n  0\n}")
    with pytest.raises(FormatError):
        graphs.parse_dot("graph {\n  5;\n}\n")


def test_make_graph_validation():
    with pytest.raises(ValueError):
        graphs.make_graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        graphs.make_graph(2, [(0, 5)])
