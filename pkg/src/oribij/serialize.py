"""JSON/DOT/CSV encodings of the public objects.

All JSON output is deterministic (sorted keys, sorted rows) so identical
inputs and seeds produce byte-identical reports.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .bijection import BijectionTable
from .core import Graph, Orientation, RegularMatroidRep
from .errors import InputError
from .geometry import MultilinearPolynomial
from .signatures import CIRCUIT, COCIRCUIT, Signature, explicit_signature, signature_from_weights


def load_graph_obj(obj: dict) -> Graph:
    try:
        vertices = int(obj["vertices"])
        edges = tuple((int(t), int(h)) for t, h in obj["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad graph document: {exc}") from exc
    return Graph(vertices, edges)


def load_matroid_obj(obj: dict) -> RegularMatroidRep:
    try:
        rows = [[int(x) for x in row] for row in obj["matrix"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad matroid document: {exc}") from exc
    if not rows:
        raise InputError("matroid matrix must have at least one row")
    return RegularMatroidRep.from_rows(rows)


def parse_weights(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad weight list {text!r}: {exc}") from exc


def load_signature_obj(rep: RegularMatroidRep, obj: dict) -> Signature:
    side = obj.get("side")
    if side not in (CIRCUIT, COCIRCUIT):
        raise InputError(f"signature side must be circuit or cocircuit, got {side!r}")
    if "weights" in obj:
        return signature_from_weights(rep, [Fraction(str(w)) for w in obj["weights"]], side)
    if "explicit" in obj:
        choices = []
        for item in obj["explicit"]:
            entries = [0] * rep.element_count
            for e, s in zip(item["support"], item["signs"]):
                entries[int(e)] = int(s)
            choices.append(entries)
        return explicit_signature(rep, side, choices)
    raise InputError("signature document needs 'weights' or 'explicit'")


def load_signature_pair(rep: RegularMatroidRep, obj: dict) -> tuple[Signature, Signature]:
    try:
        circuit = dict(obj["circuit"], side=CIRCUIT)
        cocircuit = dict(obj["cocircuit"], side=COCIRCUIT)
    except (KeyError, TypeError) as exc:
        raise InputError("signature file needs 'circuit' and 'cocircuit' entries") from exc
    return load_signature_obj(rep, circuit), load_signature_obj(rep, cocircuit)


def orientation_json(o: Orientation) -> list[int]:
    return [1 if s else 0 for s in o.signs]


def table_json_obj(table: BijectionTable) -> dict:
    rows = []
    for o, subgraph, tag in table.rows():
        rows.append({
            "orientation": orientation_json(o),
            "subgraph": sorted(subgraph),
            "tag": tag,
        })
    return {"elements": table.rep.element_count, "rows": rows}


def classes_json_obj(classes: Sequence[Sequence[Orientation]]) -> dict:
    out = []
    for members in classes:
        out.append({
            "representative": orientation_json(members[0]),
            "members": [orientation_json(o) for o in members],
        })
    return {"count": len(out), "classes": out}


def polynomial_json_obj(poly: MultilinearPolynomial) -> list[dict]:
    return [
        {"subset": list(subset), "coeff": coeff}
        for subset, coeff in poly.monomials()
    ]


def table_csv(table: BijectionTable) -> str:
    lines = ["orientation,subgraph,tag"]
    for o, subgraph, tag in table.rows():
        bits = "".join("1" if s else "0" for s in o.signs)
        subset = ";".join(str(e) for e in sorted(subgraph))
        lines.append(f"{bits},{subset},{tag}")
    return "\n".join(lines) + "\n"


def table_dot(table: BijectionTable) -> str:
    """One cluster per orientation, drawn with its image subgraph.

    Arcs follow the orientation; an edge is dashed exactly when it is not in
    the subgraph.
    """
    g = table.rep.graph
    if g is None:
        raise InputError("DOT output needs a graph-backed representation")
    lines = ["digraph table {"]
    for o, subgraph, tag in table.rows():
        bits = "".join("1" if s else "0" for s in o.signs)
        lines.append(f'  subgraph "cluster_{bits}" {{')
        lines.append(f'    label="{bits} [{tag}]";')
        for v in range(g.vertex_count):
            lines.append(f'    "o{bits}_v{v}";')
        for j, (tail, head) in enumerate(g.edges):
            if not o.signs[j]:
                tail, head = head, tail
            style = "solid" if j in subgraph else "dashed"
            lines.append(
                f'    "o{bits}_v{tail}" -> "o{bits}_v{head}" [style={style}, label="e{j}"];'
            )
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
