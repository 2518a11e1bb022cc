import networkx as nx
import pytest

from indeque.graph import Graph
from indeque.graph6 import (
    EdgeListError,
    Graph6Error,
    UnsupportedFormatError,
    parse_edge_list,
    parse_graph6,
    serialize_edge_list,
    serialize_graph6,
)
from indeque.generators import complete, cycle, path

from conftest import random_graph


def test_empty_graph_is_question_mark():
    assert serialize_graph6(Graph(0)) == "?"
    assert parse_graph6("?").n == 0


def test_triangle_is_Bw():
    assert serialize_graph6(complete(3)) == "Bw"
    assert parse_graph6("Bw") == complete(3)


def test_square_round_trip():
    line = serialize_graph6(cycle(4))
    assert parse_graph6(line) == cycle(4)


def test_optional_header():
    assert parse_graph6(">>graph6<<Bw") == complete(3)


def test_cross_check_against_networkx():
    for seed in range(150):
        n = seed % 26
        g = random_graph(seed, n, 0.1 + 0.08 * (seed % 9))
        line = serialize_graph6(g)
        ref = nx.from_graph6_bytes(line.encode())
        assert set(ref.nodes) == set(range(n))
        assert {frozenset(e) for e in ref.edges} == {
            frozenset(e) for e in g.edges()
        }
        ours = parse_graph6(nx.to_graph6_bytes(ref, header=False).decode().strip())
        assert ours == g


def test_large_header_round_trip():
    g = path(70)
    line = serialize_graph6(g)
    assert line.startswith("~")
    assert parse_graph6(line) == g
    assert nx.from_graph6_bytes(line.encode()).number_of_edges() == 69


def test_rejects_sparse6_and_digraph6():
    with pytest.raises(UnsupportedFormatError):
        parse_graph6(":Fa@x^")
    with pytest.raises(UnsupportedFormatError):
        parse_graph6("&B~~")


def test_rejects_illegal_character():
    with pytest.raises(Graph6Error):
        parse_graph6("B\x1f")


def test_rejects_wrong_body_length():
    with pytest.raises(Graph6Error):
        parse_graph6("Bww")
    with pytest.raises(Graph6Error):
        parse_graph6("D")


def test_rejects_nonzero_padding():
    # K3 needs 3 bits; set a padding bit: 0b111100 -> chr(63+60)
    with pytest.raises(Graph6Error):
        parse_graph6("B" + chr(63 + 0b111100))


def test_rejects_truncated_tilde_header():
    with pytest.raises(Graph6Error):
        parse_graph6("~a")


def test_serialize_parse_identity_on_canonical_lines():
    for seed in range(60):
        g = random_graph(seed + 7, 3 + seed % 20, 0.3)
        line = serialize_graph6(g)
        assert serialize_graph6(parse_graph6(line)) == line


def test_edge_list_round_trip():
    g = random_graph(11, 9, 0.4)
    text = serialize_edge_list(g)
    assert parse_edge_list(text) == g


def test_edge_list_comments_and_errors():
    assert parse_edge_list("# c\n3 1\n0 2\n") == Graph(3, [(0, 2)])
    with pytest.raises(EdgeListError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(EdgeListError):
        parse_edge_list("")
