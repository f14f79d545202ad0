import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strikeback import families as F
from strikeback.graphs import (
    INFINITE,
    GraphError,
    ParseError,
    SizeLimitError,
    diameter,
    domination_number,
    from_edge_list,
    from_edge_mask,
    girth,
    has_universal_vertex,
    invariants_basic,
    is_connected,
    is_isometric,
    is_k1m_free,
    isometric_shortest_path,
    least_k1m_free_m,
    parse_edge_list_text,
    parse_graph6,
    to_edge_list_text,
    to_graph6,
)
from strikeback.hypergraphs import from_graph, line_graph

from .oracles import brute_all_pairs, brute_domination, brute_girth, decode_graph6_bitwise


def seeded_gnp(count, n, p, base_seed):
    return [F.gnp(n, p, F.derive_seed(base_seed, i)) for i in range(count)]


# ---------------------------------------------------------------------------
# construction

def test_from_edge_list_triangle():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert g.m == 3
    assert girth(g) == 3


def test_loop_edge_rejected():
    with pytest.raises(GraphError):
        from_edge_list(2, [(0, 0)])


def test_out_of_range_vertex_rejected():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_c5_regular_girth():
    g = F.cycle(5)
    assert all(g.degree(v) == 2 for v in range(5))
    assert girth(g) == 5


# ---------------------------------------------------------------------------
# girth

@pytest.mark.parametrize("n", range(3, 21))
def test_girth_cycles(n):
    assert girth(F.cycle(n)) == n


def test_girth_tree_infinite():
    assert girth(F.path(6)) == INFINITE


def test_girth_petersen():
    pet = F.petersen()
    assert girth(pet) == 5
    assert brute_girth(pet) == 5


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2**21 - 1))
def test_girth_matches_brute_force(n, bits):
    g = from_edge_mask(n, bits & ((1 << (n * (n - 1) // 2)) - 1))
    assert girth(g) == brute_girth(g)


# ---------------------------------------------------------------------------
# basic invariants

def test_invariants_petersen():
    inv = invariants_basic(F.petersen())
    assert inv.min_degree == 3
    assert inv.diameter == 2
    assert inv.is_connected
    assert inv.bipartition is None


def test_invariants_c6():
    inv = invariants_basic(F.cycle(6))
    assert inv.min_degree == 2
    assert inv.diameter == 3
    assert inv.bipartition is not None
    side = inv.bipartition
    assert all(side[i] != side[(i + 1) % 6] for i in range(6))


def test_invariants_k33():
    inv = invariants_basic(F.complete_bipartite(3, 3))
    assert inv.min_degree == 3
    assert inv.diameter == 2
    assert inv.bipartition is not None


def test_diameter_disconnected_infinite():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert diameter(g) == INFINITE
    assert not is_connected(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2**21 - 1))
def test_diameter_matches_floyd_warshall(n, bits):
    g = from_edge_mask(n, bits & ((1 << (n * (n - 1) // 2)) - 1))
    dist = brute_all_pairs(g)
    assert diameter(g) == max(dist[i][j] for i in range(n) for j in range(n))


# ---------------------------------------------------------------------------
# domination

def test_domination_k5():
    size, witness = domination_number(F.complete(5))
    assert size == 1 and len(witness) == 1


def test_domination_c7():
    g = F.cycle(7)
    size, witness = domination_number(g)
    assert size == 3 == brute_domination(g)[0]
    covered = set()
    for v in witness:
        covered.add(v)
        covered.update(g.neighbors(v))
    assert covered == set(range(7))


def test_domination_petersen():
    assert domination_number(F.petersen())[0] == 3
    assert brute_domination(F.petersen())[0] == 3


def test_domination_size_limit():
    with pytest.raises(SizeLimitError):
        domination_number(F.path(40))


@pytest.mark.parametrize("seed", range(12))
def test_domination_witness_minimal(seed):
    g = F.connected_gnp(7, 0.35, F.derive_seed(99, seed))
    size, witness = domination_number(g)
    bsize, _ = brute_domination(g)
    assert size == bsize
    covered = set()
    for v in witness:
        covered.add(v)
        covered.update(g.neighbors(v))
    assert covered == set(range(g.n))


@pytest.mark.parametrize("seed", range(10))
def test_universal_vertex_iff_domination_one(seed):
    g = F.gnp(6, 0.5, F.derive_seed(7, seed))
    assert has_universal_vertex(g) == (domination_number(g)[0] == 1)


def test_universal_vertex_examples():
    assert has_universal_vertex(F.star(5))
    assert not has_universal_vertex(F.cycle(5))
    assert has_universal_vertex(F.path(3))


# ---------------------------------------------------------------------------
# K_{1,m}-freeness

def test_k1m_contains_itself():
    assert not is_k1m_free(F.star(4), 3)  # K_{1,3}


def test_k1m_c6():
    assert is_k1m_free(F.cycle(6), 3)


def test_k1m_line_graph_of_petersen_claw_free():
    assert is_k1m_free(line_graph(from_graph(F.petersen())), 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**15 - 1), st.integers(2, 5))
def test_k1m_monotone_in_m(bits, m):
    g = from_edge_mask(6, bits)
    if is_k1m_free(g, m):
        assert is_k1m_free(g, m + 1)


@pytest.mark.parametrize("seed", range(8))
def test_line_graphs_are_claw_free(seed):
    g = F.connected_gnp(7, 0.5, F.derive_seed(3, seed))
    assert is_k1m_free(line_graph(from_graph(g)), 3)


def test_least_k1m_free_m():
    assert least_k1m_free_m(F.cycle(6)) == 3
    assert least_k1m_free_m(F.star(4)) == 4  # K_{1,3} itself


# ---------------------------------------------------------------------------
# isometric paths

def test_isometric_path_c6():
    p = isometric_shortest_path(F.cycle(6), 0, 3)
    assert len(p) == 4
    assert is_isometric(F.cycle(6), p)


def test_isometric_path_petersen_diametral():
    pet = F.petersen()
    p = isometric_shortest_path(pet, 0, 7)
    assert len(p) == 3
    assert is_isometric(pet, p)


def test_path_in_c4_not_isometric():
    assert not is_isometric(F.cycle(4), (0, 1, 2, 3))


def test_isometric_rejects_non_path():
    assert not is_isometric(F.cycle(6), (0, 2, 4))


def test_isometric_path_disconnected_error():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError):
        isometric_shortest_path(g, 0, 3)


# ---------------------------------------------------------------------------
# graph6

def test_parse_d_brace_is_star():
    g = parse_graph6("D?{")
    n, edges = decode_graph6_bitwise("D?{")
    assert g.n == n == 5
    assert set(g.edges()) == edges == {(0, 4), (1, 4), (2, 4), (3, 4)}
    assert to_graph6(g) == "D?{"


def test_c5_round_trip():
    g = F.cycle(5)
    assert parse_graph6(to_graph6(g)) == g


def test_truncated_header_error():
    with pytest.raises(ParseError):
        parse_graph6("~")


def test_truncated_body_error():
    with pytest.raises(ParseError):
        parse_graph6("D?")


def test_bad_byte_error():
    with pytest.raises(ParseError):
        parse_graph6("D?\x1f")


def test_header_prefix_accepted():
    assert parse_graph6(">>graph6<<D?{") == parse_graph6("D?{")


def test_round_trip_500_seeded_gnp():
    for i, g in enumerate(seeded_gnp(500, 9, 0.4, base_seed=2024)):
        assert parse_graph6(to_graph6(g)) == g, f"instance {i}"


@pytest.mark.parametrize("seed", range(20))
def test_graph6_matches_networkx(seed):
    g = F.gnp(8, 0.5, F.derive_seed(11, seed))
    h = nx.empty_graph(g.n)
    h.add_edges_from(g.edges())
    assert to_graph6(g) == nx.to_graph6_bytes(h, header=False).decode().strip()
    back = nx.from_graph6_bytes(to_graph6(g).encode())
    assert set(back.edges()) == set(g.edges())


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**66 - 1))
def test_graph6_round_trip_property(n, bits):
    g = from_edge_mask(n, bits & ((1 << (n * (n - 1) // 2)) - 1))
    assert parse_graph6(to_graph6(g)) == g


# ---------------------------------------------------------------------------
# edge-list text

def test_edge_list_round_trip():
    g = F.petersen()
    assert parse_edge_list_text(to_edge_list_text(g)) == g


def test_edge_list_bad_header():
    with pytest.raises(ParseError):
        parse_edge_list_text("3\n0 1\n")


def test_edge_list_wrong_count():
    with pytest.raises(ParseError):
        parse_edge_list_text("3 2\n0 1\n")
