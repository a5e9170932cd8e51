"""Command-line driver.

Exit codes: 0 when the queried property holds (or the operation succeeded),
1 when it is refuted (a certificate is printed), 2 on input errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import corpus, io
from .bridges import countability_certificate, partition_tree
from .errors import ForgeError, ParseError, ValidationError
from .framework import (
    derive_circuit_orders,
    find_framework_detailed,
    framework_from_graph,
    verify_framework,
)
from .graph import Multigraph, cycle_matroid, to_dot
from .graph import to_json_obj as graph_to_json_obj
from .matroid import (
    DEFAULT_CAP,
    binary_tame_report,
    connectivity,
    dual_matroid,
    fundamental_set,
    minor,
)
from .realize import VertexCode, realize, verify_induces
from .signing import find_signing, verify_signing


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help="ground-set size limit (default 16; also "
                             "FRAMEWORK_FORGE_CAP)")
    common.add_argument("--format", choices=("json", "dot", "text"),
                        default="json", help="output format")

    parser = argparse.ArgumentParser(
        prog="framework-forge",
        description="finite matroid toolkit: validation, signings, graph "
                    "frameworks, realization, bridges",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.add_argument("input", help="input file, or corpus:NAME")
        return p

    add("validate", help="validate a circuit family or graph")
    add("dual", help="dual matroid")
    p = add("minor", help="contract/delete a minor")
    p.add_argument("--contract", default="", help="comma-separated labels")
    p.add_argument("--delete", default="", help="comma-separated labels")
    p = add("connect", help="k-connectivity check")
    p.add_argument("-k", type=int, default=2)
    add("sign", help="search for a signing")
    add("framework", help="search for a graph framework")
    add("realize", help="realize as a graph (searching for a framework)")
    p = add("bridges", help="bridge decomposition and partition tree")
    p.add_argument("--circuit", required=True, help="comma-separated labels")
    p.add_argument("--seed-element", default=None, help="seed bridge e0")
    add("check-graphic", help="decide graphicness with a certificate")
    add("oracle", help="run the invariant battery on the input")
    return parser


def _as_matroid(parsed, cap):
    if isinstance(parsed, Multigraph):
        return cycle_matroid(parsed, cap=cap)
    return parsed


def _labels(arg):
    return [x for x in arg.split(",") if x]


def _emit(text):
    sys.stdout.write(text)


def _graph_dot(graph):
    def labeler(v):
        return v.bitstring() if isinstance(v, VertexCode) else str(v)
    return to_dot(graph, vertex_labeler=labeler)


def run_command(args):
    cap = args.cap
    if cap is None:
        cap = int(os.environ.get("FRAMEWORK_FORGE_CAP", DEFAULT_CAP))

    try:
        parsed = io.parse_input(args.input, cap=cap)
    except (ParseError, ValidationError) as exc:
        _emit(f"input error: {exc}\n")
        return 2

    verb = args.verb
    if verb == "validate":
        m = _as_matroid(parsed, cap)
        _emit(io.dumps(io.matroid_to_json_obj(m)))
        return 0

    if verb == "dual":
        m = _as_matroid(parsed, cap)
        _emit(io.dumps(io.matroid_to_json_obj(dual_matroid(m, cap=cap))))
        return 0

    if verb == "minor":
        m = _as_matroid(parsed, cap)
        result = minor(m, _labels(args.contract), _labels(args.delete), cap=cap)
        _emit(io.dumps(io.matroid_to_json_obj(result)))
        return 0

    if verb == "connect":
        m = _as_matroid(parsed, cap)
        report = connectivity(m, args.k)
        if report.is_k_connected:
            _emit(f"{args.k}-connected\n")
            return 0
        w = report.witness
        _emit(io.dumps({
            "k_connected": False,
            "separation_order": w.k,
            "side_a": sorted(w.side_a),
            "side_b": sorted(w.side_b),
            "bases": [sorted(x) for x in w.bases_used],
        }))
        return 1

    if verb == "sign":
        m = _as_matroid(parsed, cap)
        signing = find_signing(m)
        if signing is None:
            _emit("no signing exists (matroid is not regular)\n")
            return 1
        assert verify_signing(m, signing).ok
        _emit(io.dumps(signing.to_json_obj()))
        return 0

    if verb == "framework":
        m = _as_matroid(parsed, cap)
        framework, stats = find_framework_detailed(m)
        if framework is None:
            _emit("no framework exists\n")
            _emit(f"exhausted: {stats.signings_tried} signings, "
                  f"{stats.branch_nodes} branch nodes\n")
            return 1
        _emit(io.dumps(framework.to_json_obj(m)))
        return 0

    if verb == "realize":
        m = _as_matroid(parsed, cap)
        if isinstance(parsed, Multigraph):
            framework = framework_from_graph(parsed)
        else:
            framework, _stats = find_framework_detailed(m)
            if framework is None:
                _emit("no framework exists; matroid is not graphic\n")
                return 1
        graph = realize(m, framework)
        assert verify_induces(m, graph).ok
        if args.format == "dot":
            _emit(_graph_dot(graph))
        else:
            _emit(io.dumps(graph_to_json_obj(graph)))
        return 0

    if verb == "bridges":
        m = _as_matroid(parsed, cap)
        framework = (framework_from_graph(parsed)
                     if isinstance(parsed, Multigraph) else None)
        o = frozenset(_labels(args.circuit))
        tree = partition_tree(m, o, e0=args.seed_element, framework=framework)
        cert = countability_certificate(tree)
        if args.format == "dot":
            _emit(io.partition_tree_to_dot(tree, cert))
        else:
            _emit(io.dumps(io.partition_tree_to_json_obj(tree, cert)))
        return 0

    if verb == "check-graphic":
        m = _as_matroid(parsed, cap)
        framework, stats = find_framework_detailed(m)
        if framework is None:
            _emit("not graphic: no framework exists\n")
            _emit(f"exhausted: {stats.signings_tried} signings, "
                  f"{stats.branch_nodes} branch nodes, "
                  f"{stats.sigma_variables} side variables\n")
            return 1
        report = verify_framework(m, framework)
        assert report.ok
        graph = realize(m, framework)
        assert verify_induces(m, graph).ok
        _emit(io.dumps(framework.to_json_obj(m)))
        _emit(_graph_dot(graph))
        return 0

    if verb == "oracle":
        m = _as_matroid(parsed, cap)
        return _oracle(m, cap)

    raise AssertionError(f"unhandled verb {verb!r}")


def _oracle(m, cap):
    lines = []
    ok = True

    double = dual_matroid(dual_matroid(m, cap=cap), cap=cap)
    involution = double == m
    ok &= involution
    lines.append(("dual involution", involution))

    orth = all(
        len(o & b) != 1 for o in m.circuits for b in m.cocircuits
    )
    ok &= orth
    lines.append(("orthogonality |o&b| != 1", orth))

    report = binary_tame_report(m)
    lines.append((f"binary (sizes {sorted(report.intersection_sizes)})",
                  report.is_binary))

    if len(m.ground) <= 8:
        fdt = True
        for base in m.bases:
            outside = set(m.ground) - base
            for e in outside:
                o_e = fundamental_set(m, base, e)
                for f in base:
                    b_f = fundamental_set(m, base, f)
                    meet = o_e & b_f
                    if meet not in (frozenset(), frozenset((e, f))):
                        fdt = False
                    if (f in o_e) != (e in b_f):
                        fdt = False
        ok &= fdt
        lines.append(("fundamental duality over all bases", fdt))

    for name, value in lines:
        _emit(f"{'PASS' if value else 'FAIL'}  {name}\n")
    return 0 if ok else 1


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return run_command(args)
    except ValidationError as exc:
        _emit(f"input error: {exc}\n")
        return 2
    except ForgeError as exc:
        # verdict-style failures: preconditions refuted by the instance
        _emit(f"refuted: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
