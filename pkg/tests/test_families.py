import pytest

from strikeback import families as F
from strikeback.graphs import (
    GraphError,
    bipartition,
    diameter,
    girth,
    is_connected,
    min_degree,
)


def test_cycle_7():
    g = F.cycle(7)
    assert g.n == 7 and g.m == 7
    assert all(g.degree(v) == 2 for v in range(7))
    assert girth(g) == 7


def test_cycle_too_small():
    with pytest.raises(GraphError):
        F.cycle(2)


def test_petersen_shape():
    g = F.petersen()
    assert g.n == 10 and g.m == 15
    assert all(g.degree(v) == 3 for v in range(10))
    assert girth(g) == 5
    assert diameter(g) == 2
    # canonical labelling: outer cycle, spokes, step-2 inner cycle
    assert g.adjacent(0, 1) and g.adjacent(0, 4)
    assert g.adjacent(0, 5) and g.adjacent(5, 7) and g.adjacent(7, 9)


def test_star_and_complete():
    assert F.star(6).degree(0) == 5
    assert F.complete(5).m == 10
    assert F.complete_bipartite(2, 3).m == 6
    assert bipartition(F.complete_bipartite(2, 3)) is not None


def test_path():
    g = F.path(1)
    assert g.n == 1 and g.m == 0
    assert F.path(5).m == 4


def test_gnp_deterministic():
    a = F.gnp(10, 0.35, 12345)
    b = F.gnp(10, 0.35, 12345)
    c = F.gnp(10, 0.35, 12346)
    assert a == b
    assert a != c


def test_gnp_extreme_p():
    assert F.gnp(6, 0.0, 1).m == 0
    assert F.gnp(6, 1.0, 1).m == 15


def test_bad_p_rejected():
    with pytest.raises(GraphError):
        F.gnp(5, 1.5, 0)


def test_connected_gnp_is_connected():
    for i in range(20):
        assert is_connected(F.connected_gnp(8, 0.3, F.derive_seed(5, i)))


def test_rejection_budget_exhausted():
    with pytest.raises(GraphError):
        F.connected_gnp(4, 0.0, 7, budget=10)


def test_random_connected_bipartite():
    for i in range(15):
        g = F.random_connected_bipartite(4, 5, 0.4, F.derive_seed(17, i))
        assert is_connected(g)
        side = bipartition(g)
        assert side is not None
        assert all(side[v] == 0 for v in range(4)) or all(side[v] == 1 for v in range(4))


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("n", [3, 5, 8, 12])
def test_maximal_outerplanar(n, seed):
    g = F.maximal_outerplanar(n, seed)
    assert is_connected(g)
    assert g.m == 2 * n - 3


def test_maximal_outerplanar_seed_1_example():
    g = F.maximal_outerplanar(8, 1)
    assert g.m == 13


def test_generate_dispatch():
    assert F.generate("cycle", {"n": 7}).n == 7
    assert F.generate("petersen").n == 10
    assert F.generate("maximal_outerplanar", {"n": 8}, seed=1).m == 13
    with pytest.raises(GraphError):
        F.generate("moebius", {"n": 5})
    with pytest.raises(GraphError):
        F.generate("cycle", {})


def test_corpus_spec_reproducible():
    spec = F.CorpusSpec.make("gnp", {"n": 8, "p": 0.5}, count=25, seed=42)
    first = [g for _, g in spec]
    second = [spec.instance(i) for i in range(25)]
    assert first == second
    other = F.CorpusSpec.make("gnp", {"n": 8, "p": 0.5}, count=25, seed=43)
    assert [g for _, g in other] != first


def test_corpus_spec_index_bounds():
    spec = F.CorpusSpec.make("cycle", {"n": 5}, count=3, seed=0)
    with pytest.raises(IndexError):
        spec.instance(3)


def test_derive_seed_spread():
    seeds = {F.derive_seed(42, i) for i in range(1000)}
    assert len(seeds) == 1000
