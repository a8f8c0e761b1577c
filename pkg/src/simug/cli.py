"""Command line front end.

Exit codes: 0 success, 1 input error, 2 identifiability condition not met,
3 internal invariant breach.
"""
from __future__ import annotations

import argparse
import json
import sys

from .allocation import AllocationError, Method, compare_with_baseline, method_graph, plan
from .covering import trace_reduction
from .documents import (DocumentError, certificate_text, certificate_to_dict, covering_text,
                        covering_to_dict, load_document, parse_document, plan_to_dict)
from .dot import to_dot
from .graph import build_extended_graph
from .identifiability import excitation_set, generic_rank_oracle, parametrized_in_set, verify_identifiability

EXIT_OK, EXIT_INPUT, EXIT_CONDITION, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_SEED = 20240101


class InternalError(RuntimeError):
    pass


def _emit(args, structured, text):
    out = args.output
    if args.format == "structured":
        body = json.dumps(structured, indent=2, ensure_ascii=False) + "\n"
    else:
        body = text + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _load(args):
    return parse_document(load_document(args.input))


def _cross_check(g, cert, seed):
    """Compare every node's path count with the random-rank oracle."""
    for c in cert.checks:
        targets = parametrized_in_set(g, c.node)
        if targets and generic_rank_oracle(g, cert.excitation, targets, trials=10, seed=seed) != c.achieved:
            raise InternalError(f"rank oracle disagrees with path count at node {c.node}")


def cmd_verify(args) -> int:
    spec, names = _load(args)
    g = build_extended_graph(spec)
    excited = set() if args.no_existing else set(spec.excited)
    for k, ref in enumerate(args.excite or []):
        excited.add(names.w_index(ref, f"--excite[{k}]"))
    cert = verify_identifiability(g, excitation_set(g, excited))
    if args.cross_check:
        _cross_check(g, cert, args.seed)
    _emit(args, certificate_to_dict(cert, names), certificate_text(cert, names))
    return EXIT_OK if cert.overall else EXIT_CONDITION


def cmd_cover(args) -> int:
    spec, names = _load(args)
    method = Method(args.baseline)
    g = method_graph(spec, method)
    if not g.edges:
        _emit(args, {"method": method.value, "simugs": [], "merges": 0}, "0 SIMUG(s)")
        return EXIT_OK
    reduction = trace_reduction(g)
    structured = {
        "method": method.value,
        "initial_size": len(reduction.initial_covering),
        "merges": len(reduction.steps),
        "simugs": covering_to_dict(reduction.covering, names),
    }
    text = f"{covering_text(reduction.covering, names)}\n({len(reduction.initial_covering)} stars, {len(reduction.steps)} merges)"
    _emit(args, structured, text)
    return EXIT_OK


def cmd_allocate(args) -> int:
    spec, names = _load(args)
    method = Method(args.baseline)
    p = plan(spec, method, pruning=not args.no_prune)
    if args.cross_check:
        _cross_check(p.graph, p.certificate, args.seed)
    structured = {"method": method.value, **plan_to_dict(p, names)}
    lines = [
        f"method: {method.value}",
        f"new signals: {', '.join(names.names(p.new_signals)) or '(none)'}",
    ]
    if p.pruned:
        lines.append(f"pruned: {', '.join(names.names(p.pruned))}")
    for label, v in sorted(p.reused.items()):
        lines.append(f"reused: {names.name(v)} for SIMUG from {{{', '.join(names.names(label))}}}")
    for label in p.skipped:
        lines.append(f"skipped fixed-only SIMUG from {{{', '.join(names.names(label))}}}")
    lines.append(covering_text(p.covering, names))
    lines.append(p.certificate.summary(names.name))
    _emit(args, structured, "\n".join(lines))
    return EXIT_OK


def cmd_compare(args) -> int:
    spec, names = _load(args)
    report = compare_with_baseline(spec, pruning=not args.no_prune)
    structured = {
        r.method.value: {
            "count": r.count,
            "covering_size": r.covering_size,
            "signals": names.names(r.signals),
            "allocated": names.names(r.allocated),
            "certificate": certificate_to_dict(r.certificate, names),
            "valid_for_model_set": r.original_certificate.overall,
        }
        for r in report.results
    }
    lines = [f"{'method':<18} {'simugs':>6} {'signals':>7}  nodes"]
    for r in report.results:
        lines.append(f"{r.method.value:<18} {r.covering_size:>6} {r.count:>7}  {', '.join(names.names(r.signals)) or '-'}")
    _emit(args, structured, "\n".join(lines))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    spec, names = _load(args)
    method = Method(args.baseline)
    g = build_extended_graph(spec)
    excited = set(spec.excited)
    if args.plan:
        p = plan(spec, method, pruning=not args.no_prune)
        covering = p.covering
        excited |= p.new_signals
    else:
        h = method_graph(spec, method)
        covering = trace_reduction(h).covering if h.edges else ()
    text = to_dot(g, covering, excited, names)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simug", description="Excitation allocation for dynamic network identifiability.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="network document (JSON or YAML)")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the random-rank cross-check")
    common.add_argument("-o", "--output", help="write to a file instead of stdout")
    baseline = argparse.ArgumentParser(add_help=False)
    baseline.add_argument("--baseline", choices=[m.value for m in Method], default=Method.SIMUG.value)
    baseline.add_argument("--no-prune", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("verify", parents=[common], help="check the disjoint-path condition")
    p.add_argument("--excite", action="append", metavar="NODE", help="add an excited node (repeatable)")
    p.add_argument("--no-existing", action="store_true", help="ignore the document's excited nodes")
    p.add_argument("--cross-check", action="store_true", help="confirm path counts with the random-rank oracle")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cover", parents=[common, baseline], help="print the reduced covering")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("allocate", parents=[common, baseline], help="allocate new excitation signals")
    p.add_argument("--cross-check", action="store_true")
    p.set_defaults(func=cmd_allocate)

    p = sub.add_parser("compare", parents=[common], help="compare SIMUG allocation with the pseudotree baselines")
    p.add_argument("--no-prune", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("export-dot", parents=[common, baseline], help="render the covering as Graphviz DOT")
    p.add_argument("--plan", action="store_true", help="also mark the allocated signals")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AllocationError, InternalError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
