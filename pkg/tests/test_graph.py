"""Graph core: construction, counting primitives, edge-list format."""

import random

import pytest

from stpack.graph import (
    EdgeListFormatError,
    Graph,
    GraphError,
    VertexPartition,
    build_graph,
    cross_edge_count,
    format_edge_list,
    induced_edge_count,
    min_degree,
    parse_edge_list,
    partition_cross_edges,
    read_edge_list,
    write_edge_list,
)
from stpack.verify import random_graph

from conftest import connected_random_graph


def test_build_rejects_loops_duplicates_and_bad_labels():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 1), (0, 1)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 1), (1, 0)])  # same edge, reversed
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(-1, [])


def test_basic_accessors():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert g.n == 4 and g.m == 4
    assert g.degree(0) == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert g.is_connected()
    assert min_degree(g) == 2


def test_edit_helpers_return_copies():
    g = build_graph(3, [(0, 1)])
    g2 = g.with_edge(1, 2)
    assert g.m == 1 and g2.m == 2
    g3 = g2.without_edge(0, 1)
    assert g2.has_edge(0, 1) and not g3.has_edge(0, 1)
    with pytest.raises(GraphError):
        g.with_edge(0, 1)
    with pytest.raises(GraphError):
        g.without_edge(1, 2)


def test_partition_validation():
    with pytest.raises(GraphError):
        VertexPartition(4, [[0, 1], [1, 2, 3]])  # overlap
    with pytest.raises(GraphError):
        VertexPartition(4, [[0, 1], [2]])  # missing 3
    with pytest.raises(GraphError):
        VertexPartition(4, [[0, 1, 2, 3], []])  # empty block
    p = VertexPartition(5, [[0], [1], [2, 3, 4]])
    assert (p.t, p.t1, p.t2) == (3, 2, 1)


def test_counting_identity_on_random_graphs(rng):
    for _ in range(50):
        g = connected_random_graph(rng, n_lo=4, n_hi=12)
        # random partition
        labels = [rng.randrange(3) for _ in range(g.n)]
        blocks = {}
        for v, lab in enumerate(labels):
            blocks.setdefault(lab, []).append(v)
        p = VertexPartition(g.n, list(blocks.values()))
        total = partition_cross_edges(g, p) + sum(
            induced_edge_count(g, b) for b in p.blocks
        )
        assert total == g.m


def test_cross_count_symmetry_and_monotone_induced(rng):
    g = random_graph(10, 0.5, 11)
    x = [0, 1, 2, 3]
    y = [4, 5, 6]
    assert cross_edge_count(g, x, y) == cross_edge_count(g, y, x)
    with pytest.raises(GraphError):
        cross_edge_count(g, [0, 1], [1, 2])
    assert induced_edge_count(g, [0, 1, 2]) <= induced_edge_count(g, [0, 1, 2, 3])


def test_edge_list_round_trip(tmp_path, rng):
    for _ in range(20):
        g = random_graph(rng.randint(1, 12), rng.uniform(0, 1), rng.randrange(2**31))
        path = tmp_path / "g.txt"
        write_edge_list(g, path)
        assert read_edge_list(path) == g


def test_edge_list_format_shape():
    g = build_graph(3, [(0, 2), (0, 1)])
    assert format_edge_list(g) == "3 2\n0 1\n0 2\n"


def test_parse_rejects_malformed_inputs():
    with pytest.raises(EdgeListFormatError, match="line 1"):
        parse_edge_list("")
    with pytest.raises(EdgeListFormatError, match="line 2"):
        parse_edge_list("2 1\n0 1 2\n")
    with pytest.raises(EdgeListFormatError, match="non-integer"):
        parse_edge_list("2 1\n0 x\n")
    with pytest.raises(EdgeListFormatError, match="u < v"):
        parse_edge_list("3 1\n2 1\n")
    with pytest.raises(EdgeListFormatError, match="strictly increasing"):
        parse_edge_list("3 2\n0 2\n0 1\n")
    with pytest.raises(EdgeListFormatError, match="announced"):
        parse_edge_list("3 2\n0 1\n")
    # payload errors surface as format errors too
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("2 1\n0 5\n")


def test_parse_allows_comments_and_blank_lines():
    g = parse_edge_list("# header comment\n3 1\n\n# edge\n0 2\n")
    assert g.n == 3 and g.edges() == [(0, 2)]
