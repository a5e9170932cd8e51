"""Parsing and serialization of matroids and graphs.

Three input shapes are accepted: matroid JSON ({"elements", "circuits"}),
multigraph JSON ({"vertices", "edges"}), and plain edge-list text with one
"tail head label" triple per line ('#' starts a comment).
"""

from __future__ import annotations

import json

from .errors import ParseError, ValidationError
from .graph import Multigraph, graph_from_json_obj
from .matroid import DEFAULT_CAP, build_matroid, set_key


def matroid_to_json_obj(m):
    return {
        "elements": list(m.ground),
        "circuits": [sorted(c) for c in m.circuits],
    }


def matroid_from_json_obj(obj, cap=DEFAULT_CAP):
    try:
        elements = [str(e) for e in obj["elements"]]
        circuits = [[str(x) for x in c] for c in obj["circuits"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad matroid object: {exc}") from exc
    return build_matroid(elements, circuits, cap=cap)


def parse_edge_list(text):
    """One edge per line: "tail head label"; '#' comments; blanks skipped."""
    vertices = []
    seen = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(
                f"expected 'tail head label', got {line!r}", line=lineno)
        tail, head, label = parts
        for v in (tail, head):
            if v not in seen:
                seen.add(v)
                vertices.append(v)
        edges.append((label, tail, head))
    try:
        return Multigraph(tuple(vertices), tuple(edges))
    except ValidationError as exc:
        raise ParseError(str(exc)) from exc


def parse_text(text, fmt="auto", cap=DEFAULT_CAP):
    """Parse input text into a Matroid or a Multigraph."""
    if fmt == "auto":
        stripped = text.lstrip()
        fmt = "json" if stripped.startswith("{") else "edgelist"
    if fmt == "edgelist":
        return parse_edge_list(text)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at byte {exc.pos}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    if "circuits" in obj:
        return matroid_from_json_obj(obj, cap=cap)
    if "edges" in obj:
        return graph_from_json_obj(obj)
    raise ParseError("JSON object is neither a matroid nor a multigraph")


def parse_input(path, fmt="auto", cap=DEFAULT_CAP):
    """Read a file (or corpus:NAME) and parse it."""
    if path.startswith("corpus:"):
        from . import corpus
        try:
            return corpus.named(path.split(":", 1)[1])
        except KeyError as exc:
            raise ParseError(f"unknown corpus instance {exc.args[0]!r}") from exc
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path!r}: {exc}") from exc
    return parse_text(text, fmt=fmt, cap=cap)


def dumps(obj):
    """Canonical JSON emission: sorted keys, two-space indent."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def partition_tree_to_json_obj(tree, cert=None):
    circle = tree.decomposition.circle
    vertex_name = {v: f"v{i}" for i, v in enumerate(circle.vertices)}
    levels = []
    for depth, level in enumerate(tree.levels):
        nodes = []
        for node in level.nodes:
            entry = {
                "anchor": vertex_name[node.anchor],
                "edges": sorted(node.edges),
            }
            if cert is not None:
                entry["good"] = cert.good_flags[(depth, node.edges)]
            nodes.append(entry)
        levels.append({
            "I": sorted(level.bridges),
            "J": sorted(vertex_name[v] for v in level.attachment_vertices),
            "K": nodes,
        })
    obj = {
        "circuit": sorted(tree.decomposition.circuit),
        "seed": tree.seed,
        "base_of_contraction": sorted(tree.decomposition.base_s),
        "bridges": sorted(tree.decomposition.bridges),
        "loops": sorted(tree.decomposition.loops_of_mprime),
        "circle": list(tree.decomposition.circle_order.items),
        "levels": levels,
    }
    if cert is not None:
        obj["certificate"] = {
            "ok": cert.ok,
            "injection": {
                e: {"level": lvl, "edges": sorted(edges)}
                for e, (lvl, edges) in sorted(cert.injection.items())
            },
        }
    return obj


def partition_tree_to_dot(tree, cert=None):
    lines = ["digraph partition_tree {", '  rankdir=TB;']
    names = {}
    for depth, level in enumerate(tree.levels):
        for i, node in enumerate(level.nodes):
            name = f"n{depth}_{i}"
            names[(depth, node.edges)] = name
            label = ",".join(sorted(node.edges))
            flag = ""
            if cert is not None and depth >= 2:
                flag = " good" if cert.good_flags[(depth, node.edges)] else " bad"
            lines.append(f'  {name} [label="{label}{flag}"];')
    for depth, level in enumerate(tree.levels[:-1]):
        for node in level.nodes:
            for child in tree.children(node):
                lines.append(
                    f"  {names[(depth, node.edges)]} -> "
                    f"{names[(depth + 1, child.edges)]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
