import io

import numpy as np
import pytest

from motifclust import (DirectedGraph, DomainError, ParseError,
                        connected_components, degree_ordering,
                        parse_edge_list, split_edges, undirected_view)

from conftest import undirected_graph


def test_parse_basic_labels_and_ids():
    g = parse_edge_list("a b\nb c\nc a\n")
    assert g.node_count == 3
    assert g.labels == ["a", "b", "c"]
    assert g.num_edges == 3
    assert g.has_edge(0, 1) and g.has_edge(2, 0)


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# header\n\na b\n  # another\nb a\n")
    assert g.num_edges == 2


def test_parse_self_loops_dropped_and_counted():
    g = parse_edge_list("a a\na b\nb b\n")
    assert g.num_edges == 1
    assert g.dropped_self_loops == 2


def test_parse_duplicate_edges_keep_last_annotation():
    g = parse_edge_list("a b +1\na b -1\n", signed=True)
    assert g.num_edges == 1
    assert g.sign_of(0, 1) == -1


def test_parse_bad_token_count_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_edge_list("a b\nc\n")
    assert "line 2" in str(exc.value)


def test_parse_bad_weight():
    with pytest.raises(ParseError):
        parse_edge_list("a b -2.0\n", weighted=True)
    with pytest.raises(ParseError):
        parse_edge_list("a b xyz\n", weighted=True)


def test_parse_undirected_adds_both_orientations():
    g = parse_edge_list("a b\n", directed=False)
    assert g.has_edge(0, 1) and g.has_edge(1, 0)


def test_parse_stream_input():
    g = parse_edge_list(io.StringIO("x y\n"))
    assert g.num_edges == 1


def test_edges_sorted_lexicographically():
    g = DirectedGraph(4, [(3, 1), (0, 2), (0, 1), (2, 0)])
    assert g.edges.tolist() == [[0, 1], [0, 2], [2, 0], [3, 1]]


def test_edge_endpoint_out_of_range():
    with pytest.raises(DomainError):
        DirectedGraph(2, [(0, 2)])


def test_split_edges():
    g = DirectedGraph(3, [(0, 1), (1, 0), (1, 2)])
    split = split_edges(g)
    assert split.bidirectional == frozenset({(0, 1)})
    assert split.unidirectional == frozenset({(1, 2)})


def test_undirected_view_symmetric():
    g = DirectedGraph(3, [(0, 1), (1, 0), (1, 2)])
    u = undirected_view(g)
    assert u.has_edge(2, 1) and u.has_edge(1, 2)
    assert u.num_edges == 4


def test_subgraph_relabels_ascending():
    g = DirectedGraph(5, [(0, 3), (3, 4), (4, 0), (1, 2)])
    sub, old_ids = g.subgraph([4, 0, 3])
    assert old_ids.tolist() == [0, 3, 4]
    assert sub.edges.tolist() == [[0, 1], [1, 2], [2, 0]]


def test_connected_components_ordering():
    # components sized 3 and 2, one isolated node
    g = undirected_graph(6, [(0, 1), (1, 2), (4, 5)])
    comp = connected_components(g)
    assert comp.sizes == [3, 2, 1]
    assert comp.nodes_of(0).tolist() == [0, 1, 2]
    assert comp.nodes_of(1).tolist() == [4, 5]
    # renumbering is dense and ascending within each component
    assert [comp.renumbering[v] for v in (0, 1, 2)] == [0, 1, 2]
    assert [comp.renumbering[v] for v in (4, 5)] == [0, 1]


def test_component_tie_break_smallest_node():
    g = undirected_graph(4, [(2, 3), (0, 1)])
    comp = connected_components(g)
    # equal sizes: the component containing node 0 comes first
    assert comp.nodes_of(0).tolist() == [0, 1]


def test_degree_ordering_ties_by_id():
    # path 0-1-2: degrees 1,2,1
    g = undirected_graph(3, [(0, 1), (1, 2)])
    assert degree_ordering(g).tolist() == [0, 2, 1]


def test_adjacency_matrix_unweighted():
    g = DirectedGraph(3, [(0, 1), (1, 2)])
    a = g.adjacency_matrix().toarray()
    assert a[0, 1] == 1 and a[1, 2] == 1 and a.sum() == 2


def test_signed_graph_default_sign():
    g = DirectedGraph(2, [(0, 1)])
    assert g.sign_of(0, 1) == 1
