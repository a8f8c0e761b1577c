import pytest

from simug import Edge, EdgeKind, NetworkModelSpec, build_extended_graph
from simug.testkit import (OracleSizeError, RandomNetworkParams, bridged_network, brute_force_vdp,
                           default_corpus, exhaustive_min_allocation, random_network, read_manifest,
                           simple_paths, small_corpus, write_manifest)

from .conftest import FIXTURE_A


def test_brute_force_examples(fixture_a):
    assert brute_force_vdp(fixture_a, {1}, {2}) == 1
    assert brute_force_vdp(fixture_a, {3}, {3}) == 1
    g = build_extended_graph(NetworkModelSpec(4, 0, [(1, 3), (1, 4), (2, 3), (2, 4)]))
    assert brute_force_vdp(g, {1, 2}, {3, 4}) == 2


def test_simple_paths_include_single_vertices(fixture_a):
    assert simple_paths(fixture_a, {1}, {1, 3}) == [(1,), (1, 2, 3)]


def test_oracle_size_bound():
    g = build_extended_graph(NetworkModelSpec(11, 0, [(1, 2)]))
    with pytest.raises(OracleSizeError):
        brute_force_vdp(g, {1}, {2})
    with pytest.raises(OracleSizeError):
        exhaustive_min_allocation(g, NetworkModelSpec(11))


def test_exhaustive_min_allocation_examples(fixture_a):
    assert exhaustive_min_allocation(fixture_a, FIXTURE_A) == {1}
    spec = NetworkModelSpec(3, 0, [(1, 3, "p"), (2, 3, "p")])
    assert exhaustive_min_allocation(build_extended_graph(spec), spec) == {1, 2}
    spec = NetworkModelSpec(3)
    assert exhaustive_min_allocation(build_extended_graph(spec), spec) == frozenset()


def test_exhaustive_min_allocation_respects_k_max():
    spec = NetworkModelSpec(3, 0, [(1, 3, "p"), (2, 3, "p")])
    assert exhaustive_min_allocation(build_extended_graph(spec), spec, k_max=1) is None


def test_random_network_is_deterministic():
    params = RandomNetworkParams(6, 0.4, 0.3, 2, seed=7)
    assert random_network(params) == random_network(params)


@pytest.mark.parametrize("fraction, kind", [(0.0, EdgeKind.PARAMETRIZED), (1.0, EdgeKind.FIXED)])
def test_fixed_fraction_boundaries(fraction, kind):
    spec = random_network(RandomNetworkParams(6, 0.5, fraction, 1, seed=3))
    assert spec.module_edges
    assert all(e.kind is kind for e in spec.module_edges + spec.noise_edges)


def test_random_networks_validate():
    for params in default_corpus(60):
        spec = random_network(params)
        build_extended_graph(spec)
        assert spec.vertex_count <= 12
        assert all(any(e.tail == s for e in spec.noise_edges) for s in spec.noise_nodes)


@pytest.mark.parametrize("kwargs", [
    dict(node_count=1, edge_probability=0.5, fixed_fraction=0.5),
    dict(node_count=3, edge_probability=1.5, fixed_fraction=0.5),
    dict(node_count=3, edge_probability=0.5, fixed_fraction=-0.1),
    dict(node_count=3, edge_probability=0.5, fixed_fraction=0.5, noise_count=-1),
])
def test_params_validation(kwargs):
    with pytest.raises(ValueError):
        RandomNetworkParams(**kwargs)


def test_bridged_networks_have_fixed_bridges():
    for seed in range(20):
        spec = bridged_network(seed)
        build_extended_graph(spec)
        assert any(e.kind is EdgeKind.FIXED for e in spec.module_edges)


def test_small_corpus_fits_the_oracles():
    assert all(p.node_count + p.noise_count <= 8 for p in small_corpus())


def test_manifest_round_trip(tmp_path):
    params = default_corpus(5)
    path = tmp_path / "corpus.jsonl"
    write_manifest(path, params)
    assert read_manifest(path) == params
    assert len(path.read_text().splitlines()) == 5


def test_edge_helper_normalizes_tuples():
    spec = NetworkModelSpec(2, 0, [(1, 2, "f")])
    assert spec.module_edges == (Edge(1, 2, EdgeKind.FIXED),)
