import pytest

from indeque.exact import (
    CapExceededError,
    brute_force,
    enumerate_maximum_sets,
    solve,
)
from indeque.graph import (
    Graph,
    OracleLimitError,
    alpha_brute,
    disjoint_union,
    omega_brute,
)
from indeque.generators import (
    apexiated_octahedron,
    complete,
    cycle,
    matching_with_isolated,
    path,
    triangular_grid,
)
from indeque.verify import ClusterCertificate, certificate_partition, verify_indeque

from conftest import indeque_by_enumeration, random_graph


def test_brute_path_values():
    assert brute_force(path(6)).value == 4
    assert brute_force(cycle(4)).value == 2
    g2, _ = triangular_grid(2)
    assert brute_force(g2).value == 3


def test_brute_certificate_is_lexicographically_least():
    r = brute_force(cycle(4))
    assert r.certificate.cliques == ((0, 1),)
    r = brute_force(path(6))
    assert tuple(sorted(r.certificate.covered)) == (0, 1, 3, 4)


def test_brute_limit():
    with pytest.raises(OracleLimitError):
        brute_force(path(25))
    assert brute_force(path(25), limit=25).value == 17


def test_brute_against_direct_enumeration():
    for seed in range(40):
        g = random_graph(seed + 500, 3 + seed % 8, 0.1 + 0.08 * (seed % 10))
        r = brute_force(g)
        assert r.value == indeque_by_enumeration(g)
        assert isinstance(verify_indeque(g, r.certificate.covered), ClusterCertificate)
        assert r.certificate.size == r.value


def test_solve_examples():
    assert solve(apexiated_octahedron()).value == 4
    r = solve(complete(5))
    assert r.value == 5
    assert r.stats.nodes == 0
    assert solve(matching_with_isolated(4)).value == 12
    assert solve(Graph(0)).value == 0
    assert solve(Graph(0)).certificate.cliques == ()


def test_solve_first_found_certificate_is_stable():
    g = cycle(6)
    assert solve(g).certificate == solve(g).certificate


def test_solve_matches_brute_on_random_corpus():
    for seed in range(120):
        g = random_graph(seed, 4 + seed % 13, 0.08 + 0.08 * (seed % 11))
        r = solve(g)
        assert r.value == brute_force(g).value
        assert r.optimal
        assert isinstance(verify_indeque(g, r.certificate.covered), ClusterCertificate)


def test_solve_monotone_under_vertex_deletion():
    for seed in range(25):
        g = random_graph(seed + 40, 9, 0.3)
        base = solve(g).value
        for v in range(g.n):
            rest = [u for u in range(g.n) if u != v]
            sub_edges = [
                (a - (a > v), b - (b > v)) for a, b in g.edges() if v not in (a, b)
            ]
            h = Graph(g.n - 1, sub_edges)
            val = solve(h).value
            assert base - 1 <= val <= base
        del rest


def test_solve_additive_over_disjoint_union():
    for seed in range(30):
        g1 = random_graph(seed, 3 + seed % 6, 0.4)
        g2 = random_graph(seed + 999, 3 + (seed * 7) % 6, 0.25)
        assert (
            solve(disjoint_union(g1, g2)).value == solve(g1).value + solve(g2).value
        )


def test_sandwich_inequality():
    for seed in range(40):
        g = random_graph(seed + 77, 4 + seed % 9, 0.1 + 0.07 * (seed % 9))
        val = solve(g).value
        a, w = alpha_brute(g), omega_brute(g)
        assert max(a, w) <= val <= a * w


def test_enumerate_maximum_sets_square():
    certs = enumerate_maximum_sets(cycle(4))
    covers = [tuple(sorted(c.covered)) for c in certs]
    assert covers == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    parts = {certificate_partition(c) for c in certs}
    assert parts == {(2,), (1, 1)}


def test_enumerate_maximum_sets_triangle():
    certs = enumerate_maximum_sets(complete(3))
    assert len(certs) == 1
    assert certificate_partition(certs[0]) == (3,)


def test_enumerate_octahedron_partitions():
    certs = enumerate_maximum_sets(apexiated_octahedron())
    parts = {certificate_partition(c) for c in certs}
    assert parts == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}


def test_enumerate_cap_exceeded_distinctly():
    with pytest.raises(CapExceededError) as err:
        enumerate_maximum_sets(cycle(4), cap=3)
    assert len(err.value.found) == 3
    with pytest.raises(OracleLimitError):
        enumerate_maximum_sets(path(30))


def test_result_json_shape():
    payload = solve(cycle(4)).to_json()
    assert set(payload) == {"value", "certificate", "optimal", "stats"}
    assert set(payload["stats"]) == {"nodes", "ms"}
    assert payload["optimal"] is True
