"""SIMUG coverings, their characteristic matrices, and the merge reduction.

Matrix indices are 0-based positions in the current covering.  Entry
``(i, j)`` answers "is SIMUG i mergeable to SIMUG j", meaning the union is a
SIMUG and every root of SIMUG j reaches all of SIMUG i inside the union.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graph import Edge, EdgeKind, ExtendedGraph, Simug, compute_roots, edge_disjoint, is_simug


class MergeSymbol(enum.Enum):
    ONE = "1"
    ZERO = "0"
    EMPTY = "∅"

    def __str__(self):
        return self.value


ONE, ZERO, EMPTY = MergeSymbol.ONE, MergeSymbol.ZERO, MergeSymbol.EMPTY


class MergeMode(enum.Enum):
    COLUMN = "column"
    ROW = "row"


class NotMergeableError(ValueError):
    pass


class NothingToCoverError(ValueError):
    pass


@dataclass(frozen=True)
class Covering:
    """Edge-disjoint SIMUGs, in matrix order.

    ``labels[k]`` names SIMUG ``k`` by the sorted star vertices it was
    assembled from, which keeps identities stable across merges.
    """

    simugs: tuple[Simug, ...]
    labels: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.simugs)

    def __iter__(self):
        return iter(self.simugs)

    def __getitem__(self, k):
        return self.simugs[k]

    @property
    def covered_edges(self) -> frozenset[Edge]:
        return frozenset().union(*(t.edges for t in self.simugs))

    def is_valid_for(self, g: ExtendedGraph) -> bool:
        """Pairwise edge-disjoint valid SIMUGs whose edges are exactly E(g)."""
        if self.covered_edges != g.edges:
            return False
        if not all(t.is_valid for t in self.simugs):
            return False
        n = len(self.simugs)
        return all(edge_disjoint(self.simugs[a], self.simugs[b])
                   for a in range(n) for b in range(a + 1, n))


@dataclass(frozen=True)
class CharacteristicMatrix:
    entries: tuple[tuple[MergeSymbol, ...], ...]
    index_map: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> MergeSymbol:
        i, j = ij
        return self.entries[i][j]

    def row(self, i) -> tuple[MergeSymbol, ...]:
        return self.entries[i]

    def as_strings(self) -> list[list[str]]:
        return [[s.value for s in row] for row in self.entries]

    def __str__(self):
        return "\n".join(" ".join(s.value for s in row) for row in self.entries)


def initial_covering(g: ExtendedGraph) -> Covering:
    """One star per non-sink vertex: the vertex with all its outgoing edges."""
    if not g.edges:
        raise NothingToCoverError("nothing to cover: graph has no edges")
    simugs, labels = [], []
    for k in g.vertices:
        out = g.out_edges[k]
        if out:
            simugs.append(Simug.from_edges(out, (k,)))
            labels.append((k,))
    return Covering(tuple(simugs), tuple(labels))


def _conflict(t1: Simug, t2: Simug) -> bool:
    """True when some vertex gets a parametrized in-edge from each SIMUG."""
    heads1 = {e.head for e in t1.edges if e.kind is EdgeKind.PARAMETRIZED}
    return any(e.kind is EdgeKind.PARAMETRIZED and e.head in heads1 for e in t2.edges)


def mergeable(t1: Simug, t2: Simug, g: ExtendedGraph | None = None) -> bool:
    """Whether ``t1`` is mergeable to ``t2``, checked directly on the union."""
    vertices = t1.vertices | t2.vertices
    edges = t1.edges | t2.edges
    if not is_simug(vertices, edges):
        return False
    roots = compute_roots(vertices, edges)
    # every vertex of the union is reachable from a union root, so the
    # roots of t2 reach all of t1 iff they are themselves union roots
    return t2.roots <= roots


def characteristic_matrix_direct(cov: Covering, g: ExtendedGraph | None = None) -> CharacteristicMatrix:
    n = len(cov)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(ZERO)
            elif mergeable(cov[i], cov[j], g):
                row.append(ONE)
            elif not _conflict(cov[i], cov[j]):
                row.append(EMPTY)
            else:
                row.append(ZERO)
        rows.append(tuple(row))
    return CharacteristicMatrix(tuple(rows), cov.labels)


def column_products(g: ExtendedGraph) -> np.ndarray:
    """Complex inner products ``a[i, j]`` between adjacency columns.

    Column ``i`` of ``n*A_p - A_f + 1j*I`` dotted with column ``j`` of
    ``n*A_p - A_f``, for all vertex pairs (0-based).
    """
    n = g.vertex_count
    weighted = n * g.A_p - g.A_f
    left = weighted + 1j * np.eye(n)
    return left.T @ weighted


def initial_characteristic_matrix(g: ExtendedGraph) -> CharacteristicMatrix:
    """Characteristic matrix of the star covering from adjacency algebra alone."""
    n = g.vertex_count
    stars = [k for k in g.vertices if g.out_edges[k]]
    if not stars:
        raise NothingToCoverError("nothing to cover: graph has no edges")
    a = column_products(g)
    rows = []
    for i in stars:
        row = []
        for j in stars:
            value = a[i - 1, j - 1]
            if i == j or value.real >= n:
                row.append(ZERO)
            elif value.imag != 0:
                row.append(ONE)
            else:
                row.append(EMPTY)
        rows.append(tuple(row))
    return CharacteristicMatrix(tuple(rows), tuple((k,) for k in stars))


_COLUMN_RULES = {
    (ONE, ONE): ONE,
    (ONE, ZERO): ZERO,
    (ONE, EMPTY): ONE,
    (ZERO, ZERO): ZERO,
    (EMPTY, ZERO): ZERO,
    (EMPTY, EMPTY): EMPTY,
}
_COLUMN_RULES.update({(b, a): c for (a, b), c in list(_COLUMN_RULES.items())})


def merge_symbols(a: MergeSymbol, b: MergeSymbol, mode: MergeMode = MergeMode.COLUMN) -> MergeSymbol:
    """Combine the entry of the merged-from SIMUG ``a`` with that of the target ``b``."""
    if mode is MergeMode.ROW:
        if (a, b) == (EMPTY, ONE):
            return ONE
        if (a, b) == (ONE, EMPTY):
            return EMPTY
    return _COLUMN_RULES[(a, b)]


def merge_matrix(M: CharacteristicMatrix, i: int, j: int) -> CharacteristicMatrix:
    """Reduce ``M`` by merging index ``i`` into index ``j``."""
    n = M.n
    grid = [list(row) for row in M.entries]
    grid[j] = [merge_symbols(M[i, k], M[j, k], MergeMode.ROW) for k in range(n)]
    for k in range(n):
        grid[k][j] = merge_symbols(M[k, i], M[k, j], MergeMode.COLUMN)
    grid[j][j] = ZERO
    keep = [k for k in range(n) if k != i]
    entries = tuple(tuple(grid[r][c] for c in keep) for r in keep)
    labels = list(M.index_map)
    labels[j] = tuple(sorted(M.index_map[i] + M.index_map[j]))
    return CharacteristicMatrix(entries, tuple(labels[k] for k in keep))


def merge_step(M: CharacteristicMatrix, cov: Covering, i: int, j: int) -> tuple[CharacteristicMatrix, Covering]:
    if i == j or M[i, j] is not ONE:
        raise NotMergeableError(f"SIMUG {i} is not mergeable to SIMUG {j} (entry {M[i, j] if i != j else 'diagonal'})")
    union = cov[i].union(cov[j])
    simugs = list(cov.simugs)
    labels = list(cov.labels)
    simugs[j] = union
    labels[j] = tuple(sorted(cov.labels[i] + cov.labels[j]))
    del simugs[i], labels[i]
    return merge_matrix(M, i, j), Covering(tuple(simugs), tuple(labels))


def select_merge(M: CharacteristicMatrix) -> tuple[int, int] | None:
    """Next ``(i, j)`` pair to merge, or None when no entry is One.

    A row with a single One wins first (lowest row index); otherwise the row
    with the most Empty entries among rows holding a One, merged along its
    lowest-index One.
    """
    candidates = []
    for i, row in enumerate(M.entries):
        ones = [j for j, s in enumerate(row) if s is ONE]
        if len(ones) == 1:
            return i, ones[0]
        if ones:
            candidates.append((-row.count(EMPTY), i, ones[0]))
    if not candidates:
        return None
    _, i, j = min(candidates)
    return i, j


@dataclass(frozen=True)
class MergeRecord:
    source: int
    target: int
    matrix: CharacteristicMatrix
    covering: Covering


@dataclass(frozen=True)
class Reduction:
    initial_matrix: CharacteristicMatrix
    initial_covering: Covering
    steps: tuple[MergeRecord, ...]

    @property
    def covering(self) -> Covering:
        return self.steps[-1].covering if self.steps else self.initial_covering

    @property
    def matrix(self) -> CharacteristicMatrix:
        return self.steps[-1].matrix if self.steps else self.initial_matrix


def iter_merges(g: ExtendedGraph) -> Iterator[MergeRecord]:
    M = initial_characteristic_matrix(g)
    cov = initial_covering(g)
    while (pick := select_merge(M)) is not None:
        i, j = pick
        M, cov = merge_step(M, cov, i, j)
        yield MergeRecord(i, j, M, cov)


def trace_reduction(g: ExtendedGraph) -> Reduction:
    return Reduction(initial_characteristic_matrix(g), initial_covering(g), tuple(iter_merges(g)))


def reduce_covering(g: ExtendedGraph) -> Covering:
    return trace_reduction(g).covering


class PseudotreeMode(enum.Enum):
    ALL_EDGES = "all-edges"
    PARAMETRIZED_ONLY = "parametrized-only"


def pseudotree_graph(g: ExtendedGraph, mode: PseudotreeMode) -> ExtendedGraph:
    """The graph the pseudotree method works on: every remaining edge counts."""
    if mode is PseudotreeMode.PARAMETRIZED_ONLY:
        g = g.restrict(lambda e: e.kind is EdgeKind.PARAMETRIZED)
    return g.all_parametrized()


def pseudotree_baseline(g: ExtendedGraph, mode: PseudotreeMode) -> Covering:
    h = pseudotree_graph(g, mode)
    if not h.edges:
        return Covering((), ())
    return reduce_covering(h)

