import pytest
from hypothesis import given, strategies as st

from twodom.graph import (EdgeListParseError, Graph, gen_named,
                          gen_random_regular, min_degree, parse_edge_list,
                          to_edge_list)


def test_parse_triangle():
    g = parse_edge_list("0 1\n1 2\n2 0")
    assert g.n == 3
    assert g.edge_count == 3


def test_parse_empty_input_is_empty_graph():
    g = parse_edge_list("")
    assert g.n == 0
    assert g.edge_count == 0


def test_parse_merges_reversed_duplicates():
    g = parse_edge_list("0 1\n1 0")
    assert g.n == 2
    assert g.edge_count == 1


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# triangle\n\n0 1\n# middle\n1 2\n2 0\n")
    assert g.edge_count == 3


def test_parse_header_declares_isolated_vertices():
    g = parse_edge_list("n 5\n0 1\n")
    assert g.n == 5
    assert g.degree(4) == 0


def test_parse_errors_carry_line_numbers():
    with pytest.raises(EdgeListParseError) as err:
        parse_edge_list("0 1\nnot an edge\n")
    assert err.value.line_no == 2


def test_parse_rejects_self_loop():
    with pytest.raises(EdgeListParseError):
        parse_edge_list("3 3")


def test_parse_rejects_vertex_beyond_header():
    with pytest.raises(EdgeListParseError):
        parse_edge_list("n 2\n0 5\n")


def test_min_degree_examples():
    assert min_degree(gen_named("K4")) == 3
    assert min_degree(gen_named("P3")) == 1
    assert min_degree(gen_named("K4xK2")) == 4


def test_min_degree_rejects_empty_graph():
    with pytest.raises(ValueError):
        min_degree(Graph.from_edges(0, []))


def test_named_k4():
    g = gen_named("K4")
    assert g.n == 4
    assert g.edge_count == 6


def test_named_k4xk2():
    g = gen_named("K4xK2")
    assert g.n == 8
    assert g.edge_count == 16
    assert all(g.degree(v) == 4 for v in range(8))


def test_named_cycle_and_path():
    c5 = gen_named("C5")
    assert c5.n == 5 and all(c5.degree(v) == 2 for v in range(5))
    p4 = gen_named("P4")
    assert p4.edge_count == 3


def test_named_unknown_rejected():
    for bad in ("Q5", "K", "C2", "hexagon"):
        with pytest.raises(ValueError):
            gen_named(bad)


def test_random_regular_is_regular():
    g = gen_random_regular(8, 3, seed=7)
    assert all(g.degree(v) == 3 for v in range(8))


def test_random_regular_parity_rejected():
    with pytest.raises(ValueError):
        gen_random_regular(7, 3, seed=0)
    with pytest.raises(ValueError):
        gen_random_regular(4, 4, seed=0)


def test_random_regular_4_3_is_k4():
    # Enumeration: K4 is the only simple 3-regular graph on 4 vertices, so
    # any successful pairing must produce it.
    k4_edges = set(gen_named("K4").edges())
    for seed in range(5):
        g = gen_random_regular(4, 3, seed=seed)
        assert set(g.edges()) == k4_edges


def test_random_regular_deterministic_per_seed():
    a = gen_random_regular(30, 5, seed=11)
    b = gen_random_regular(30, 5, seed=11)
    assert a.adjacency == b.adjacency


def test_random_regular_high_degree():
    g = gen_random_regular(20, 9, seed=3)
    assert all(g.degree(v) == 9 for v in range(20))


@given(st.integers(min_value=0, max_value=10_000))
def test_serialize_roundtrip_on_random_regular(seed):
    n, d = 12, 3
    g = gen_random_regular(n, d, seed=seed)
    again = parse_edge_list(to_edge_list(g))
    assert again.n == g.n
    assert again.adjacency == g.adjacency


def test_serializer_keeps_isolated_vertices():
    g = parse_edge_list("n 4\n0 1\n")
    assert parse_edge_list(to_edge_list(g)).n == 4


def test_from_edges_validates():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])


def test_has_edge():
    g = gen_named("C5")
    assert g.has_edge(0, 1) and g.has_edge(0, 4)
    assert not g.has_edge(0, 2)
