"""Excitation allocation on top of a reduced SIMUG covering."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .covering import Covering, PseudotreeMode, pseudotree_graph, reduce_covering
from .graph import ExtendedGraph, NetworkModelSpec, Simug, build_extended_graph
from .identifiability import Certificate, excitation_set, verify_identifiability


class Method(enum.Enum):
    SIMUG = "simug"
    PSEUDOTREE_PARAM = "pseudotree-param"
    PSEUDOTREE_ALL = "pseudotree-all"


class AllocationError(RuntimeError):
    """The verifier rejected the plan even after the strict fallback."""

    def __init__(self, failing):
        super().__init__(f"allocation failed verification at nodes {list(failing)}")
        self.failing = tuple(failing)


@dataclass(frozen=True)
class AllocationPlan:
    """Where to add r-signals, and why the result is identifiable.

    ``reused`` maps a SIMUG label to the already-excited root serving it;
    ``skipped`` lists fixed-only SIMUGs left unexcited.  ``graph`` is the
    graph the certificate was computed on (it differs from the input for the
    pseudotree baselines).
    """

    new_signals: frozenset[int]
    reused: dict[tuple[int, ...], int]
    skipped: tuple[tuple[int, ...], ...]
    covering: Covering
    certificate: Certificate
    graph: ExtendedGraph
    existing: frozenset[int] = frozenset()
    fallback_used: bool = False
    pruned: tuple[int, ...] = field(default=())

    @property
    def count(self) -> int:
        return len(self.new_signals)

    @property
    def excitation(self) -> frozenset[int]:
        return excitation_set(self.graph, self.existing | self.new_signals)


def existing_excitation(t: Simug, spec: NetworkModelSpec) -> int | None:
    """Lowest root of ``t`` that already carries an r- or e-signal."""
    excited = spec.excited | spec.noise_nodes
    hits = sorted(t.roots & excited)
    return hits[0] if hits else None


def _excite_roots(cov: Covering, spec: NetworkModelSpec, skip_fixed: bool):
    new, reused, skipped = set(), {}, []
    for label, t in zip(cov.labels, cov.simugs):
        if skip_fixed and t.fixed_only:
            skipped.append(label)
            continue
        tau = existing_excitation(t, spec)
        if tau is not None:
            reused[label] = tau
        else:
            new.add(min(t.roots))
    return frozenset(new), reused, tuple(skipped)


def method_graph(spec: NetworkModelSpec, method: Method = Method.SIMUG) -> ExtendedGraph:
    g = build_extended_graph(spec)
    if method is Method.PSEUDOTREE_PARAM:
        return pseudotree_graph(g, PseudotreeMode.PARAMETRIZED_ONLY)
    if method is Method.PSEUDOTREE_ALL:
        return pseudotree_graph(g, PseudotreeMode.ALL_EDGES)
    return g


def allocate(spec: NetworkModelSpec, method: Method = Method.SIMUG) -> AllocationPlan:
    """Cover, excite one root per SIMUG, and verify.

    Fixed-only SIMUGs are skipped first; if the verifier rejects that plan,
    every SIMUG gets an excited root and the plan is verified again.
    """
    g = method_graph(spec, method)
    existing = frozenset(spec.excited)
    cov = reduce_covering(g) if g.edges else Covering((), ())
    new, reused, skipped = _excite_roots(cov, spec, skip_fixed=True)
    cert = verify_identifiability(g, excitation_set(g, existing | new))
    fallback = False
    if not cert.overall:
        fallback = True
        new, reused, skipped = _excite_roots(cov, spec, skip_fixed=False)
        cert = verify_identifiability(g, excitation_set(g, existing | new))
        if not cert.overall:
            raise AllocationError(cert.failing)
    return AllocationPlan(new, reused, skipped, cov, cert, g, existing, fallback)


def prune(plan: AllocationPlan, g: ExtendedGraph | None = None, spec: NetworkModelSpec | None = None) -> AllocationPlan:
    """Drop new signals, lowest node first, while the verifier still passes."""
    if not plan.certificate.overall:
        raise ValueError("cannot prune a plan that fails verification")
    g = plan.graph if g is None else g
    existing = plan.existing if spec is None else frozenset(spec.excited)
    keep = set(plan.new_signals)
    removed = []
    cert = plan.certificate
    for s in sorted(plan.new_signals):
        trial = verify_identifiability(g, excitation_set(g, existing | (keep - {s})))
        if trial.overall:
            keep.discard(s)
            removed.append(s)
            cert = trial
    return replace(plan, new_signals=frozenset(keep), certificate=cert, pruned=tuple(removed))


def plan(spec: NetworkModelSpec, method: Method = Method.SIMUG, pruning: bool = True) -> AllocationPlan:
    result = allocate(spec, method)
    return prune(result) if pruning else result


@dataclass(frozen=True)
class MethodResult:
    method: Method
    covering_size: int
    allocated: frozenset[int]
    signals: frozenset[int]
    certificate: Certificate
    original_certificate: Certificate

    @property
    def count(self) -> int:
        return len(self.signals)


@dataclass(frozen=True)
class ComparisonReport:
    results: tuple[MethodResult, ...]

    def __getitem__(self, method: Method) -> MethodResult:
        for r in self.results:
            if r.method is method:
                return r
        raise KeyError(method)

    @property
    def counts(self) -> dict[str, int]:
        return {r.method.value: r.count for r in self.results}


def compare_with_baseline(spec: NetworkModelSpec, pruning: bool = True) -> ComparisonReport:
    """Run the SIMUG method and both pseudotree baselines on ``spec``.

    Each baseline is allocated and pruned on its own view of the graph;
    ``original_certificate`` re-checks its signals against the real model set.
    """
    g = build_extended_graph(spec)
    results = []
    for method in Method:
        p = plan(spec, method, pruning)
        unpruned = p.new_signals | frozenset(p.pruned)
        original = verify_identifiability(g, excitation_set(g, p.existing | p.new_signals))
        results.append(MethodResult(method, len(p.covering), unpruned, p.new_signals, p.certificate, original))
    return ComparisonReport(tuple(results))
