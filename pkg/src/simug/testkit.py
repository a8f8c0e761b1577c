"""Brute-force oracles and seeded network generators.

Everything here is deliberately independent of the max-flow and merge
machinery it is used to check, and is only meant for small graphs.
"""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .graph import Edge, EdgeKind, ExtendedGraph, NetworkModelSpec, build_extended_graph
from .identifiability import excitation_set, verify_identifiability

MAX_ORACLE_VERTICES = 10


class OracleSizeError(ValueError):
    pass


def _check_size(g: ExtendedGraph):
    if g.vertex_count > MAX_ORACLE_VERTICES:
        raise OracleSizeError(f"oracle limited to {MAX_ORACLE_VERTICES} vertices, got {g.vertex_count}")


def simple_paths(g: ExtendedGraph, A: Iterable[int], B: Iterable[int]) -> list[tuple[int, ...]]:
    """Every simple path starting in A and ending in B, single vertices included."""
    A, B = frozenset(A), frozenset(B)
    succ = {v: sorted(e.head for e in g.out_edges[v]) for v in g.vertices}
    paths = []

    def extend(path, seen):
        if path[-1] in B:
            paths.append(tuple(path))
        for w in succ[path[-1]]:
            if w not in seen:
                path.append(w)
                seen.add(w)
                extend(path, seen)
                seen.discard(w)
                path.pop()

    for a in sorted(A):
        extend([a], {a})
    return paths


def brute_force_vdp(g: ExtendedGraph, A: Iterable[int], B: Iterable[int]) -> int:
    """Largest family of pairwise vertex-disjoint A-to-B paths, by exhaustive search."""
    _check_size(g)
    B = sorted(set(B))
    by_end: dict[int, list[int]] = {b: [] for b in B}
    for path in simple_paths(g, A, B):
        mask = 0
        for v in path:
            mask |= 1 << v
        by_end[path[-1]].append(mask)

    # paths in a disjoint family end at distinct targets, so pick at most
    # one path per target
    @lru_cache(maxsize=None)
    def best(k: int, used: int) -> int:
        if k == len(B):
            return 0
        result = best(k + 1, used)
        for mask in by_end[B[k]]:
            if not mask & used:
                result = max(result, 1 + best(k + 1, used | mask))
                if result == len(B) - k:
                    break
        return result

    return best(0, 0)


def exhaustive_min_allocation(g: ExtendedGraph, spec: NetworkModelSpec, k_max: int | None = None):
    """Smallest set of extra w-nodes whose excitation passes the verifier.

    Sets are tried by size, then lexicographically.  Returns None if nothing
    up to ``k_max`` extra nodes works.
    """
    _check_size(g)
    if k_max is None:
        k_max = g.node_count
    if k_max > g.vertex_count:
        raise OracleSizeError("k_max exceeds the vertex count")
    candidates = [v for v in g.w_nodes if v not in spec.excited]
    base = excitation_set(g, spec.excited)
    for size in range(0, k_max + 1):
        for extra in combinations(candidates, size):
            if verify_identifiability(g, base | frozenset(extra)).overall:
                return frozenset(extra)
    return None


def _reachable(edges, start) -> set[int]:
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for e in edges:
            if e.tail == v and e.head not in seen:
                seen.add(e.head)
                stack.append(e.head)
    return seen


def oracle_mergeable(t1, t2) -> bool:
    """Mergeability straight from the definition, using plain graph search."""
    vertices = t1.vertices | t2.vertices
    edges = t1.edges | t2.edges
    heads = [e.head for e in edges if e.kind is EdgeKind.PARAMETRIZED]
    if len(heads) != len(set(heads)):
        return False
    if not any(_reachable(edges, v) == vertices for v in vertices):
        return False
    return all(_reachable(edges, r) >= t1.vertices for r in t2.roots)


def oracle_characteristic_matrix(cov) -> list[list[str]]:
    """Characteristic matrix as strings: "1" mergeable, "0" a parametrized
    in-edge clash or the diagonal, "∅" anything else."""
    n = len(cov)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append("0")
            elif oracle_mergeable(cov[i], cov[j]):
                row.append("1")
            else:
                hi = {e.head for e in cov[i].edges if e.kind is EdgeKind.PARAMETRIZED}
                hj = {e.head for e in cov[j].edges if e.kind is EdgeKind.PARAMETRIZED}
                row.append("0" if hi & hj else "∅")
        out.append(row)
    return out


@dataclass(frozen=True)
class RandomNetworkParams:
    node_count: int
    edge_probability: float
    fixed_fraction: float
    noise_count: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.node_count < 2:
            raise ValueError("node_count must be at least 2")
        for name in ("edge_probability", "fixed_fraction"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        if self.noise_count < 0:
            raise ValueError("noise_count must be non-negative")


def _kind(rng: random.Random, fixed_fraction: float) -> EdgeKind:
    return EdgeKind.FIXED if rng.random() < fixed_fraction else EdgeKind.PARAMETRIZED


def random_network(params: RandomNetworkParams) -> NetworkModelSpec:
    """Erdos-Renyi style model set; each e-node gets at least one edge."""
    rng = random.Random(params.seed)
    L, p = params.node_count, params.noise_count
    module = []
    for tail in range(1, L + 1):
        for head in range(1, L + 1):
            if tail != head and rng.random() < params.edge_probability:
                module.append(Edge(tail, head, _kind(rng, params.fixed_fraction)))
    noise = []
    for source in range(L + 1, L + p + 1):
        heads = [h for h in range(1, L + 1) if rng.random() < params.edge_probability]
        if not heads:
            heads = [rng.randint(1, L)]
        noise.extend(Edge(source, h, _kind(rng, params.fixed_fraction)) for h in heads)
    return NetworkModelSpec(L, p, tuple(module), tuple(noise))


def bridged_network(seed: int) -> NetworkModelSpec:
    """Parametrized components joined by fixed edges.

    Two or three components, each a parametrized spanning tree hanging off
    a parametrized root cycle, plus a few fixed edges running from one
    component into another.
    """
    rng = random.Random(seed)
    parts = rng.randint(2, 3)
    sizes = [rng.randint(2, 4) for _ in range(parts)]
    node = 0
    components = []
    module = []
    for size in sizes:
        members = list(range(node + 1, node + size + 1))
        node += size
        components.append(members)
        module.append(Edge(members[0], members[1], EdgeKind.PARAMETRIZED))
        if rng.random() < 0.5:
            module.append(Edge(members[1], members[0], EdgeKind.PARAMETRIZED))
        for k, v in enumerate(members[2:], start=2):
            module.append(Edge(members[rng.randrange(k)], v, EdgeKind.PARAMETRIZED))
    taken = {(e.tail, e.head) for e in module}
    for _ in range(rng.randint(1, 3)):
        src, dst = rng.sample(range(parts), 2)
        tail, head = rng.choice(components[src]), rng.choice(components[dst])
        if (tail, head) not in taken:
            module.append(Edge(tail, head, EdgeKind.FIXED))
            taken.add((tail, head))
    return NetworkModelSpec(node, 0, tuple(module))


def default_corpus(count: int = 200, first_seed: int = 0) -> list[RandomNetworkParams]:
    """Mixed corpus: 2..10 w-nodes, up to 2 noise sources, at most 12 vertices."""
    fractions = (0.0, 0.3, 0.7)
    densities = (0.2, 0.3, 0.45)
    out = []
    for k in range(count):
        seed = first_seed + k
        node_count = 2 + seed % 9
        noise = (seed // 9) % 3
        out.append(RandomNetworkParams(node_count, densities[(seed // 3) % 3], fractions[seed % 3],
                                       min(noise, 12 - node_count), seed))
    return out


def small_corpus(count: int = 300, first_seed: int = 1000) -> list[RandomNetworkParams]:
    """At most 8 vertices per graph, sized for the brute-force oracles."""
    fractions = (0.0, 0.3, 0.7)
    densities = (0.25, 0.35, 0.5)
    out = []
    for k in range(count):
        seed = first_seed + k
        node_count = 2 + k % 6
        noise = min((k // 6) % 3, 8 - node_count)
        out.append(RandomNetworkParams(node_count, densities[(k // 2) % 3], fractions[k % 3], noise, seed))
    return out


def write_manifest(path, params: Iterable[RandomNetworkParams]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for p in params:
            fh.write(json.dumps(asdict(p), sort_keys=True) + "\n")


def read_manifest(path) -> list[RandomNetworkParams]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [RandomNetworkParams(**json.loads(line)) for line in lines if line.strip()]


def corpus_graphs(params: Iterable[RandomNetworkParams]):
    for p in params:
        spec = random_network(p)
        yield p, spec, build_extended_graph(spec)
