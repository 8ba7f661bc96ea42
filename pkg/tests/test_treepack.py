"""Spanning-tree packing: matroid union vs partition oracle, certificates."""

import pytest

from stpack.connectivity import edge_connectivity
from stpack.families import make_complete, make_F
from stpack.graph import Graph, GraphError, VertexPartition, min_degree
from stpack.treepack import (
    MAX_ORACLE_VERTICES,
    PartitionCertificate,
    TreePacking,
    has_k_disjoint_trees,
    nw_oracle,
    tree_packing_number,
    verify_packing,
    verify_partition_certificate,
)
from stpack.verify import canonical_F_partition

from conftest import connected_random_graph, petersen


def test_known_values():
    assert tree_packing_number(make_complete(4))[0] == 2
    assert tree_packing_number(make_complete(6))[0] == 3
    cycle = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert tree_packing_number(cycle)[0] == 1
    assert tree_packing_number(petersen())[0] == 1  # 3-regular, girth 5
    tree = Graph(4, [(0, 1), (1, 2), (1, 3)])
    assert tree_packing_number(tree)[0] == 1


def test_disconnected_graph_tau_zero():
    g = Graph(4, [(0, 1), (2, 3)])
    assert tree_packing_number(g)[0] == 0
    res = has_k_disjoint_trees(g, 1)
    assert isinstance(res, PartitionCertificate)
    assert verify_partition_certificate(g, res)


def test_packing_certificates_verify(rng):
    for _ in range(40):
        g = connected_random_graph(rng, n_lo=4, n_hi=10)
        tau, packing = tree_packing_number(g)
        assert len(packing.trees) == tau
        assert verify_packing(g, packing)
        res = has_k_disjoint_trees(g, tau + 1)
        assert isinstance(res, PartitionCertificate)
        assert verify_partition_certificate(g, res)


def test_oracle_equivalence_on_random_corpus(rng):
    for _ in range(80):
        g = connected_random_graph(rng, n_lo=4, n_hi=10)
        assert tree_packing_number(g)[0] == nw_oracle(g)


def test_oracle_guard_and_edge_cases():
    with pytest.raises(GraphError):
        nw_oracle(make_complete(MAX_ORACLE_VERTICES + 1))
    assert nw_oracle(Graph(1, [])) == 0
    assert nw_oracle(Graph(4, [(0, 1), (2, 3)])) == 0


def test_all_singleton_partition_of_K4_is_not_violating():
    g = make_complete(4)
    part = VertexPartition(4, [[0], [1], [2], [3]])
    cert = PartitionCertificate(part, 2, 0)
    assert not verify_partition_certificate(g, cert)  # 6 >= 2*3


def test_single_block_partition_rejected():
    g = make_complete(4)
    cert = PartitionCertificate(VertexPartition(4, [[0, 1, 2, 3]]), 2, 1)
    assert not verify_partition_certificate(g, cert)


def test_extremal_family_certificate():
    g = make_F(11, 3)
    res = has_k_disjoint_trees(g, 3)
    assert isinstance(res, PartitionCertificate)
    assert res.deficiency == 1
    assert verify_partition_certificate(g, res)
    # the canonical five-part certificate also verifies
    part = canonical_F_partition(11)
    assert verify_partition_certificate(g, PartitionCertificate(part, 3, 1))
    tau, packing = tree_packing_number(g)
    assert tau == 2 and verify_packing(g, packing)


def test_packing_iff_k_le_tau(rng):
    for _ in range(15):
        g = connected_random_graph(rng, n_lo=4, n_hi=9)
        tau = tree_packing_number(g)[0]
        for k in range(1, tau + 2):
            res = has_k_disjoint_trees(g, k)
            if k <= tau:
                assert isinstance(res, TreePacking) and verify_packing(g, res)
            else:
                assert isinstance(res, PartitionCertificate)
                assert verify_partition_certificate(g, res)


def test_packing_bounds(rng):
    for _ in range(40):
        g = connected_random_graph(rng, n_lo=4, n_hi=10)
        tau = tree_packing_number(g)[0]
        kappa = edge_connectivity(g).kappa_prime
        assert kappa // 2 <= tau <= min(min_degree(g), g.m // (g.n - 1), kappa)


def test_verify_packing_rejects_bad_certificates():
    g = make_complete(4)
    _, packing = tree_packing_number(g)
    # duplicate a tree: edge-disjointness fails
    bad = TreePacking((packing.trees[0], packing.trees[0]))
    assert not verify_packing(g, bad)
    # a spanning cycle is not a tree
    cycle = TreePacking((frozenset([(0, 1), (1, 2), (2, 3), (0, 3)]),))
    assert not verify_packing(g, cycle)
    # foreign edge
    foreign = TreePacking((frozenset([(0, 1), (0, 2), (0, 5)]),))
    assert not verify_packing(g, foreign)
