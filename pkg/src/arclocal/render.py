"""Rendering of digraphs, reports and decomposition outcomes.

JSON objects are built with a fixed key order and emitted with two-space
indentation, so equal inputs always produce byte-identical output.
"""

from __future__ import annotations

import json

from .decompose import ALSOutcome, Decomposition
from .digraph import Digraph
from .patterns import ClassReport, PatternWitness

_PALETTE = (
    "#8dd3c7",
    "#ffffb3",
    "#bebada",
    "#fb8072",
    "#80b1d3",
    "#fdb462",
    "#b3de69",
    "#fccde5",
)


def dumps(obj) -> str:
    """Deterministic JSON text: dicts one key per line, lists inline."""
    return _render(obj, 0) + "\n"


def _render(obj, indent: int) -> str:
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        pad = " " * (indent + 2)
        items = [f"{pad}{json.dumps(k)}: {_render(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    return json.dumps(obj)


def witness_dict(w: PatternWitness) -> dict:
    return {"pattern": w.pattern, "vertices": list(w.vertices)}


def class_report_dict(d: Digraph, report: ClassReport) -> dict:
    return {
        "vertices": d.n,
        "arc_count": d.arc_count,
        "classes": {name: report.flag(name) for name in ClassReport.FLAG_NAMES},
        "witnesses": {
            name: witness_dict(w) for name, w in sorted(report.witnesses.items())
        },
    }


def class_report_text(d: Digraph, report: ClassReport) -> str:
    lines = [f"vertices: {d.n}  arcs: {d.arc_count}"]
    width = max(len(name) for name in ClassReport.FLAG_NAMES)
    for name in ClassReport.FLAG_NAMES:
        value = "yes" if report.flag(name) else "no"
        line = f"  {name:<{width}}  {value}"
        w = report.witnesses.get(name)
        if w is not None:
            line += f"  (witness: {w.record()})"
        lines.append(line)
    return "\n".join(lines) + "\n"


def decomposition_dict(cls: str, dec: Decomposition) -> dict:
    obj: dict = {"class": cls, "outcome": dec.kind}
    if dec.kind == "tripartition":
        obj["V1"] = list(dec.v1)
        obj["V2_parts"] = [list(p) for p in dec.cert.parts]
        obj["V3"] = list(dec.v3)
    elif dec.kind == "clique_cut":
        obj["cut"] = list(dec.cut)
    return obj


def als_outcome_dict(outcome: ALSOutcome) -> dict:
    obj: dict = {"class": "als", "outcome": outcome.kind}
    if outcome.kind == "odd_extended_cycle":
        obj["V2_parts"] = [list(p) for p in outcome.cert.parts]
    return obj


def rejection_dict(cls: str, reason: str, witness: PatternWitness | None) -> dict:
    obj: dict = {"class": cls, "outcome": "rejected", "reason": reason}
    if witness is not None:
        obj["witness"] = witness_dict(witness)
    return obj


def decomposition_text(cls: str, dec: Decomposition) -> str:
    lines = [f"class: {cls}", f"outcome: {dec.kind}"]
    if dec.kind == "tripartition":
        lines.append(f"V1: {list(dec.v1)}")
        lines.append(f"V2 parts: {[list(p) for p in dec.cert.parts]}")
        lines.append(f"V3: {list(dec.v3)}")
    elif dec.kind == "clique_cut":
        lines.append(f"cut: {list(dec.cut)}")
    return "\n".join(lines) + "\n"


def als_outcome_text(outcome: ALSOutcome) -> str:
    lines = ["class: als", f"outcome: {outcome.kind}"]
    if outcome.kind == "odd_extended_cycle":
        lines.append(f"V2 parts: {[list(p) for p in outcome.cert.parts]}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(d: Digraph, groups: dict[str, tuple[int, ...]] | None = None) -> str:
    """GraphViz text.  ``groups`` maps a label to vertices sharing a colour."""
    colour: dict[int, str] = {}
    label: dict[int, str] = {}
    if groups:
        for gi, (name, vertices) in enumerate(groups.items()):
            for v in vertices:
                colour[v] = _PALETTE[gi % len(_PALETTE)]
                label[v] = name
    lines = ["digraph D {", "  node [style=filled, fillcolor=white];"]
    for v in range(d.n):
        attrs = []
        if v in colour:
            attrs.append(f'fillcolor="{colour[v]}"')
            attrs.append(f'xlabel="{label[v]}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    for u, v in d.arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def decomposition_groups(dec: Decomposition) -> dict[str, tuple[int, ...]]:
    if dec.kind == "tripartition":
        groups = {}
        if dec.v1:
            groups["V1"] = dec.v1
        for i, part in enumerate(dec.cert.parts):
            groups[f"V2.{i}"] = part
        if dec.v3:
            groups["V3"] = dec.v3
        return groups
    if dec.kind == "clique_cut":
        return {"cut": dec.cut}
    return {}
