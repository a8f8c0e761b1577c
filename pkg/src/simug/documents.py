"""Network documents (JSON or YAML) and report serialization.

A document looks like::

    nodes: 3                      # or a list of names
    noise_sources: 1
    edges:
      - {from: w1, to: w2, kind: parametrized}
      - {from: 3, to: 1, kind: fixed}
    noise_edges:
      - {source: e1, to: w2, kind: parametrized}
    excited: [w1]

Node references are names or 1-based positions.  With ``nodes: <count>``
the w-nodes are called ``w1..wL``; noise sources are always ``e1..ep``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import yaml

from .graph import Edge, EdgeKind, NetworkModelSpec, SpecError, edge_key


class DocumentError(ValueError):
    def __init__(self, message, location=None):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


@dataclass(frozen=True)
class NameMap:
    w_names: tuple[str, ...]
    e_names: tuple[str, ...]

    @classmethod
    def default(cls, L: int, p: int = 0) -> "NameMap":
        return cls(tuple(f"w{k}" for k in range(1, L + 1)), tuple(f"e{k}" for k in range(1, p + 1)))

    def name(self, v: int) -> str:
        L = len(self.w_names)
        return self.w_names[v - 1] if v <= L else self.e_names[v - L - 1]

    def names(self, vs) -> list[str]:
        return [self.name(v) for v in sorted(vs)]

    def w_index(self, ref, location) -> int:
        return self._lookup(ref, self.w_names, 0, location)

    def e_index(self, ref, location) -> int:
        return self._lookup(ref, self.e_names, len(self.w_names), location)

    @staticmethod
    def _lookup(ref, names, offset, location):
        if isinstance(ref, bool):
            raise DocumentError(f"invalid node reference {ref!r}", location)
        if isinstance(ref, str) and ref in names:
            return offset + names.index(ref) + 1
        if isinstance(ref, int) or (isinstance(ref, str) and ref.isdigit()):
            k = int(ref)
            if 1 <= k <= len(names):
                return offset + k
        raise DocumentError(f"unknown node {ref!r}", location)


def load_document(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text) if path.suffix == ".json" else yaml.safe_load(text)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise DocumentError(f"cannot parse {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a mapping", str(path))
    return doc


def _kind(entry, location):
    try:
        return EdgeKind.parse(entry.get("kind", "parametrized"))
    except ValueError as exc:
        raise DocumentError(str(exc), f"{location}.kind") from exc


def _names(raw, default_prefix, location) -> tuple[str, ...]:
    if isinstance(raw, bool):
        raise DocumentError("expected a count or a list of names", location)
    if isinstance(raw, int):
        if raw < 0:
            raise DocumentError("count must be non-negative", location)
        return tuple(f"{default_prefix}{k}" for k in range(1, raw + 1))
    if isinstance(raw, list):
        names = tuple(str(x) for x in raw)
        if len(set(names)) != len(names):
            raise DocumentError("duplicate node names", location)
        return names
    raise DocumentError("expected a count or a list of names", location)


def parse_document(doc: dict) -> tuple[NetworkModelSpec, NameMap]:
    for key in ("nodes", "edges"):
        if key not in doc:
            raise DocumentError(f"missing required key {key!r}")
    unknown = set(doc) - {"nodes", "noise_sources", "edges", "noise_edges", "excited"}
    if unknown:
        raise DocumentError(f"unknown keys {sorted(unknown)}")
    names = NameMap(_names(doc["nodes"], "w", "nodes"), _names(doc.get("noise_sources", 0), "e", "noise_sources"))
    if not names.w_names:
        raise DocumentError("at least one node is required", "nodes")

    def entries(key):
        value = doc.get(key) or []
        if not isinstance(value, list):
            raise DocumentError("expected a list", key)
        for k, entry in enumerate(value):
            if not isinstance(entry, dict):
                raise DocumentError("expected a mapping", f"{key}[{k}]")
            yield f"{key}[{k}]", entry

    module = []
    for loc, entry in entries("edges"):
        for field_name in ("from", "to"):
            if field_name not in entry:
                raise DocumentError(f"missing {field_name!r}", loc)
        module.append(Edge(names.w_index(entry["from"], f"{loc}.from"),
                           names.w_index(entry["to"], f"{loc}.to"), _kind(entry, loc)))
    noise = []
    for loc, entry in entries("noise_edges"):
        for field_name in ("source", "to"):
            if field_name not in entry:
                raise DocumentError(f"missing {field_name!r}", loc)
        noise.append(Edge(names.e_index(entry["source"], f"{loc}.source"),
                          names.w_index(entry["to"], f"{loc}.to"), _kind(entry, loc)))
    excited_raw = doc.get("excited") or []
    if not isinstance(excited_raw, list):
        raise DocumentError("expected a list", "excited")
    excited = [names.w_index(ref, f"excited[{k}]") for k, ref in enumerate(excited_raw)]
    spec = NetworkModelSpec(len(names.w_names), len(names.e_names), tuple(module), tuple(noise), frozenset(excited))
    try:
        spec.validate()
    except SpecError as exc:
        raise DocumentError(str(exc)) from exc
    return spec, names


def dump_document(spec: NetworkModelSpec, names: NameMap | None = None) -> dict:
    """Canonical document for ``spec``: names spelled out, edges sorted."""
    names = names or NameMap.default(spec.node_count, spec.noise_count)
    return {
        "nodes": list(names.w_names),
        "noise_sources": spec.noise_count,
        "edges": [{"from": names.name(e.tail), "to": names.name(e.head), "kind": e.kind.value}
                  for e in sorted(spec.module_edges, key=edge_key)],
        "noise_edges": [{"source": names.name(e.tail), "to": names.name(e.head), "kind": e.kind.value}
                        for e in sorted(spec.noise_edges, key=edge_key)],
        "excited": names.names(spec.excited),
    }


def certificate_to_dict(cert, names: NameMap) -> dict:
    return {
        "overall": cert.overall,
        "status": cert.summary(names.name),
        "excitation": names.names(cert.excitation),
        "nodes": [{"node": names.name(c.node), "required": c.required,
                   "achieved": c.achieved, "pass": c.passed} for c in cert.checks],
    }


def simug_to_dict(t, names: NameMap) -> dict:
    return {
        "roots": names.names(t.roots),
        "vertices": names.names(t.vertices),
        "edges": [{"from": names.name(e.tail), "to": names.name(e.head), "kind": e.kind.value}
                  for e in sorted(t.edges, key=edge_key)],
    }


def covering_to_dict(cov, names: NameMap) -> list[dict]:
    return [simug_to_dict(t, names) for t in cov]


def plan_to_dict(plan, names: NameMap) -> dict:
    def label(lab):
        return names.names(lab)

    return {
        "new_signals": names.names(plan.new_signals),
        "pruned": names.names(plan.pruned),
        "reused": [{"simug": label(lab), "excitation": names.name(v)} for lab, v in sorted(plan.reused.items())],
        "skipped": [label(lab) for lab in plan.skipped],
        "fallback_used": plan.fallback_used,
        "covering": covering_to_dict(plan.covering, names),
        "certificate": certificate_to_dict(plan.certificate, names),
    }


def certificate_text(cert, names: NameMap) -> str:
    width = max([4] + [len(names.name(c.node)) for c in cert.checks])
    lines = [f"{'node':<{width}}  required  achieved  status"]
    for c in cert.checks:
        lines.append(f"{names.name(c.node):<{width}}  {c.required:>8}  {c.achieved:>8}  {'ok' if c.passed else 'FAIL'}")
    lines.append(cert.summary(names.name))
    return "\n".join(lines)


def covering_text(cov, names: NameMap) -> str:
    lines = [f"{len(cov)} SIMUG(s)"]
    for k, t in enumerate(cov, start=1):
        edges = ", ".join(f"{names.name(e.tail)}{'->' if e.kind is EdgeKind.PARAMETRIZED else '-->'}{names.name(e.head)}"
                          for e in sorted(t.edges, key=edge_key))
        lines.append(f"  T{k}: roots {{{', '.join(names.names(t.roots))}}}  edges [{edges}]")
    return "\n".join(lines)
