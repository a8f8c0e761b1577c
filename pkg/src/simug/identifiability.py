"""Vertex-disjoint path counting and the generic identifiability check.

The verifier tests a *sufficient* condition: for every w-node ``j`` the
excited vertex set must reach the parametrized in-neighbours of ``j`` through
``|P_j|`` vertex-disjoint paths.  A failing certificate means the condition
is not met, not that the model set is unidentifiable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .graph import ExtendedGraph, parametrized_in_set

ExcitationSet = frozenset


def excitation_set(g: ExtendedGraph, excited: Iterable[int]) -> frozenset[int]:
    """Excited w-nodes together with every noise source of ``g``."""
    nodes = frozenset(excited) | frozenset(g.e_nodes)
    bad = [v for v in nodes if not 1 <= v <= g.vertex_count]
    if bad:
        raise ValueError(f"excitation nodes out of range: {sorted(bad)}")
    return nodes


def _mask(g: ExtendedGraph, nodes) -> np.ndarray:
    mask = np.zeros(g.vertex_count, dtype=np.uint8)
    for v in nodes:
        mask[v - 1] = 1
    return mask


def max_vertex_disjoint_paths(g: ExtendedGraph, A: Iterable[int], B: Iterable[int], backend=None) -> int:
    """Maximum number of pairwise vertex-disjoint paths from ``A`` to ``B``.

    A vertex in both sets is a path on its own.
    """
    A, B = frozenset(A), frozenset(B)
    if not A or not B:
        return 0
    return kernels.max_vdp(g.successor_matrix, _mask(g, A), _mask(g, B), backend=backend)


@dataclass(frozen=True)
class NodeCheck:
    node: int
    required: int
    achieved: int

    @property
    def passed(self) -> bool:
        return self.achieved == self.required


@dataclass(frozen=True)
class Certificate:
    """Per-node evidence for the disjoint-path condition."""

    excitation: frozenset[int]
    checks: tuple[NodeCheck, ...]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failing(self) -> tuple[int, ...]:
        return tuple(c.node for c in self.checks if not c.passed)

    def __getitem__(self, node: int) -> NodeCheck:
        for c in self.checks:
            if c.node == node:
                return c
        raise KeyError(node)

    def summary(self, name=str) -> str:
        if self.overall:
            return "identifiable (sufficient condition met)"
        return f"condition not met at nodes [{', '.join(name(v) for v in self.failing)}]"


def verify_identifiability(g: ExtendedGraph, U: Iterable[int], backend=None) -> Certificate:
    U = frozenset(U)
    checks = []
    for j in g.w_nodes:
        targets = parametrized_in_set(g, j)
        achieved = max_vertex_disjoint_paths(g, U, targets, backend=backend) if targets else 0
        checks.append(NodeCheck(j, len(targets), achieved))
    return Certificate(U, tuple(checks))


def is_identifiable(g: ExtendedGraph, U: Iterable[int]) -> bool:
    """Short-circuiting form of :func:`verify_identifiability`."""
    U = frozenset(U)
    for j in g.w_nodes:
        targets = parametrized_in_set(g, j)
        if targets and max_vertex_disjoint_paths(g, U, targets) != len(targets):
            return False
    return True


class SingularDrawError(RuntimeError):
    pass


def generic_rank_oracle(g: ExtendedGraph, A: Iterable[int], B: Iterable[int],
                        trials: int = 10, seed: int = 0, max_redraws: int = 20) -> int:
    """Numeric rank of ``(I - G)^-1[B, A]`` for random edge weights.

    Every edge gets an independent weight of magnitude in [0.5, 1.5] with a
    random sign; the maximum rank over ``trials`` draws is returned.  Singular
    values count when they exceed ``max(|A|, |B|) * eps * ||(I - G)^-1||_2``.
    Generically this equals the number of vertex-disjoint paths from A to B.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    A, B = sorted(set(A)), sorted(set(B))
    if not A or not B:
        return 0
    rng = np.random.default_rng(seed)
    n = g.vertex_count
    tails = np.array([e.tail - 1 for e in g.edges], dtype=np.intp)
    heads = np.array([e.head - 1 for e in g.edges], dtype=np.intp)
    rows = np.array(B) - 1
    cols = np.array(A) - 1
    best = 0
    for _ in range(trials):
        for _ in range(max_redraws):
            weights = rng.uniform(0.5, 1.5, size=len(tails)) * rng.choice([-1.0, 1.0], size=len(tails))
            system = np.eye(n)
            system[heads, tails] -= weights
            if np.linalg.cond(system) > 1e10:
                continue
            try:
                transfer = np.linalg.inv(system)
            except np.linalg.LinAlgError:
                continue
            if np.all(np.isfinite(transfer)):
                break
        else:
            raise SingularDrawError(f"(I - G) singular in {max_redraws} consecutive draws")
        sub = transfer[np.ix_(rows, cols)]
        sv = np.linalg.svd(sub, compute_uv=False)
        # scale by the whole transfer matrix: an all-rounding-noise block
        # must not count as rank one
        tol = max(sub.shape) * np.finfo(float).eps * np.linalg.norm(transfer, 2)
        best = max(best, int(np.sum(sv > tol)))
    return best
