"""Network model sets and their extended graphs.

Nodes are 1-based integers.  In a graph with ``L`` measured nodes and ``p``
noise sources, ``1..L`` are w-nodes and ``L+1..L+p`` are e-nodes.  Edges are
``(tail, head, kind)`` triples; adjacency matrices are 0-based numpy arrays
with entry ``[head - 1, tail - 1]`` set for every edge.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from . import kernels


class EdgeKind(enum.Enum):
    PARAMETRIZED = "parametrized"
    FIXED = "fixed"

    @classmethod
    def parse(cls, value) -> "EdgeKind":
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower()
        for kind in cls:
            if text in (kind.value, kind.value[0], kind.name.lower()):
                return kind
        raise ValueError(f"unknown edge kind {value!r}")


P = EdgeKind.PARAMETRIZED
F = EdgeKind.FIXED


class Edge(NamedTuple):
    tail: int
    head: int
    kind: EdgeKind = EdgeKind.PARAMETRIZED

    def __str__(self):
        arrow = "->" if self.kind is EdgeKind.PARAMETRIZED else "-->"
        return f"{self.tail}{arrow}{self.head}"


def edge_key(e: Edge):
    return (e.tail, e.head, e.kind.value)


class SpecError(ValueError):
    """Invalid network model description.

    ``edge`` holds the offending edge when the problem is edge-specific.
    """

    def __init__(self, message, edge=None):
        super().__init__(message if edge is None else f"{message}: {edge.tail}->{edge.head}")
        self.reason = message
        self.edge = edge


def _edges(items) -> tuple[Edge, ...]:
    out = []
    for item in items:
        if isinstance(item, Edge):
            out.append(item)
        else:
            tail, head, *rest = item
            kind = EdgeKind.parse(rest[0]) if rest else EdgeKind.PARAMETRIZED
            out.append(Edge(int(tail), int(head), kind))
    return tuple(out)


@dataclass(frozen=True)
class NetworkModelSpec:
    """Sparsity pattern of a network model set.

    ``module_edges`` describe G (w-node to w-node), ``noise_edges`` describe
    H (e-node to w-node) and ``excited`` lists the w-nodes that already
    carry an r-signal.  Call :meth:`validate` (or build the extended graph)
    to check the invariants.
    """

    node_count: int
    noise_count: int = 0
    module_edges: tuple[Edge, ...] = ()
    noise_edges: tuple[Edge, ...] = ()
    excited: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "module_edges", _edges(self.module_edges))
        object.__setattr__(self, "noise_edges", _edges(self.noise_edges))
        object.__setattr__(self, "excited", frozenset(int(v) for v in self.excited))

    @property
    def vertex_count(self) -> int:
        return self.node_count + self.noise_count

    @property
    def noise_nodes(self) -> frozenset[int]:
        return frozenset(range(self.node_count + 1, self.vertex_count + 1))

    def validate(self) -> None:
        L, p = self.node_count, self.noise_count
        if L < 1:
            raise SpecError("node count must be at least 1")
        if p < 0:
            raise SpecError("noise count must be non-negative")
        seen = set()
        for e in self.module_edges:
            if not (1 <= e.tail <= L and 1 <= e.head <= L):
                raise SpecError("module edge index out of range", e)
            if e.tail == e.head:
                raise SpecError("self-loop", e)
            if (e.tail, e.head) in seen:
                raise SpecError("duplicate edge", e)
            seen.add((e.tail, e.head))
        for e in self.noise_edges:
            if not (L < e.tail <= L + p):
                raise SpecError("noise edge tail is not a noise source", e)
            if not 1 <= e.head <= L:
                raise SpecError("noise edge head out of range", e)
            if (e.tail, e.head) in seen:
                raise SpecError("duplicate edge", e)
            seen.add((e.tail, e.head))
        for v in self.excited:
            if not 1 <= v <= L:
                raise SpecError(f"excited node {v} is not a w-node")

    def with_excited(self, nodes: Iterable[int]) -> "NetworkModelSpec":
        return NetworkModelSpec(self.node_count, self.noise_count, self.module_edges,
                                self.noise_edges, frozenset(nodes))


@dataclass(frozen=True)
class ExtendedGraph:
    """The extended graph with its parametrized/fixed edge partition."""

    node_count: int
    noise_count: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    @property
    def vertex_count(self) -> int:
        return self.node_count + self.noise_count

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def w_nodes(self) -> range:
        return range(1, self.node_count + 1)

    @property
    def e_nodes(self) -> range:
        return range(self.node_count + 1, self.vertex_count + 1)

    def is_e_node(self, v: int) -> bool:
        return v > self.node_count

    @cached_property
    def edges_p(self) -> frozenset[tuple[int, int]]:
        return frozenset((e.tail, e.head) for e in self.edges if e.kind is EdgeKind.PARAMETRIZED)

    @cached_property
    def edges_f(self) -> frozenset[tuple[int, int]]:
        return frozenset((e.tail, e.head) for e in self.edges if e.kind is EdgeKind.FIXED)

    @cached_property
    def kind_of(self) -> dict[tuple[int, int], EdgeKind]:
        return {(e.tail, e.head): e.kind for e in self.edges}

    @cached_property
    def out_edges(self) -> dict[int, tuple[Edge, ...]]:
        out = {v: [] for v in self.vertices}
        for e in sorted(self.edges, key=edge_key):
            out[e.tail].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict[int, tuple[Edge, ...]]:
        inc = {v: [] for v in self.vertices}
        for e in sorted(self.edges, key=edge_key):
            inc[e.head].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    def _matrix(self, pairs) -> np.ndarray:
        n = self.vertex_count
        a = np.zeros((n, n), dtype=np.int64)
        for tail, head in pairs:
            a[head - 1, tail - 1] = 1
        return a

    @cached_property
    def A_p(self) -> np.ndarray:
        """Parametrized adjacency, ``A_p[head-1, tail-1] = 1``."""
        return self._matrix(self.edges_p)

    @cached_property
    def A_f(self) -> np.ndarray:
        """Fixed adjacency, ``A_f[head-1, tail-1] = 1``."""
        return self._matrix(self.edges_f)

    @cached_property
    def successor_matrix(self) -> np.ndarray:
        # kernels index [tail, head]
        return np.ascontiguousarray((self.A_p + self.A_f).T, dtype=np.uint8)

    def restrict(self, keep) -> "ExtendedGraph":
        """Same vertex set, only the edges for which ``keep(edge)`` holds."""
        return ExtendedGraph(self.node_count, self.noise_count,
                             frozenset(e for e in self.edges if keep(e)))

    def all_parametrized(self) -> "ExtendedGraph":
        return ExtendedGraph(self.node_count, self.noise_count,
                             frozenset(Edge(e.tail, e.head, EdgeKind.PARAMETRIZED) for e in self.edges))


def build_extended_graph(spec: NetworkModelSpec) -> ExtendedGraph:
    spec.validate()
    return ExtendedGraph(spec.node_count, spec.noise_count,
                         frozenset(spec.module_edges) | frozenset(spec.noise_edges))


def parametrized_in_set(g: ExtendedGraph, j: int) -> frozenset[int]:
    """Tails of the parametrized edges entering w-node ``j``."""
    if not 1 <= j <= g.node_count:
        raise ValueError(f"node {j} is not a w-node")
    return frozenset(e.tail for e in g.in_edges[j] if e.kind is EdgeKind.PARAMETRIZED)


def _local_adjacency(vertices, edges):
    order = sorted(vertices)
    index = {v: k for k, v in enumerate(order)}
    adj = np.zeros((len(order), len(order)), dtype=np.uint8)
    for e in edges:
        adj[index[e[0]], index[e[1]]] = 1
    return order, adj


def compute_roots(vertices: Iterable[int], edges: Iterable) -> frozenset[int]:
    """Vertices from which every vertex is reachable using only ``edges``.

    Empty when no such vertex exists (the subgraph is not multi-rooted).
    """
    order, adj = _local_adjacency(vertices, edges)
    if not order:
        return frozenset()
    closure = kernels.reach_matrix(adj)
    return frozenset(v for v, row in zip(order, closure) if row.all())


def is_simug(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    vertices = frozenset(vertices)
    edges = tuple(edges)
    if len(vertices) < 2:
        return False
    if any(e.tail not in vertices or e.head not in vertices for e in edges):
        return False
    if max_parametrized_indegree(edges) > 1:
        return False
    return bool(compute_roots(vertices, edges))


def max_parametrized_indegree(edges: Iterable[Edge]) -> int:
    counts: dict[int, int] = {}
    for e in edges:
        if e.kind is EdgeKind.PARAMETRIZED:
            counts[e.head] = counts.get(e.head, 0) + 1
    return max(counts.values(), default=0)


@dataclass(frozen=True)
class Simug:
    """A single-source identifiable multi-rooted subgraph.

    Build with :meth:`from_edges`, which derives the vertex and root sets.
    """

    vertices: frozenset[int]
    edges: frozenset[Edge]
    roots: frozenset[int]

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], extra_vertices: Iterable[int] = ()) -> "Simug":
        edges = frozenset(edges)
        vertices = frozenset(v for e in edges for v in (e.tail, e.head)) | frozenset(extra_vertices)
        return cls(vertices, edges, compute_roots(vertices, edges))

    @property
    def is_valid(self) -> bool:
        return is_simug(self.vertices, self.edges) and self.roots == compute_roots(self.vertices, self.edges)

    @property
    def fixed_only(self) -> bool:
        return all(e.kind is EdgeKind.FIXED for e in self.edges)

    def union(self, other: "Simug") -> "Simug":
        return Simug.from_edges(self.edges | other.edges, self.vertices | other.vertices)

    def __str__(self):
        edges = ", ".join(str(e) for e in sorted(self.edges, key=edge_key))
        return f"SIMUG(roots={sorted(self.roots)}, edges=[{edges}])"


def edge_disjoint(t1: Simug, t2: Simug) -> bool:
    """No shared edges, and no vertex has out-edges split between the two."""
    if t1.edges & t2.edges:
        return False
    tails1 = {e.tail for e in t1.edges}
    tails2 = {e.tail for e in t2.edges}
    return not (tails1 & tails2)
