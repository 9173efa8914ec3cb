"""JSON and DOT encodings of SB quivers and Brauer graphs.

SB quiver::

    {"vertices": [...], "arrows": [{"id", "tail", "head"}],
     "cycles": [{"arrows": [...], "mult": m}]}

Brauer graph::

    {"vertices": [{"id", "mult", "order": [half-edge ids]}],
     "edges": [{"id", "half_edges": [h1, h2]}]}

Ids are ints, strings or (nested) lists; lists decode to tuples.  Output
is deterministic: sorted keys, arrows and edges sorted by id.
"""

from __future__ import annotations

import json

from .structures import Arrow, BGVertex, BrauerGraph, Cycle, Edge, SBQuiver, StructureError, sort_key


class FormatError(StructureError):
    pass


def _id_in(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, str, list)):
        raise FormatError(f"{where}: ids must be ints, strings or lists, got {x!r}")
    if isinstance(x, list):
        return tuple(_id_in(y, where) for y in x)
    return x


def _id_out(x):
    if isinstance(x, tuple):
        return [_id_out(y) for y in x]
    return x


def _field(obj, name, where, kind=None):
    if not isinstance(obj, dict) or name not in obj:
        raise FormatError(f"{where}: missing field {name!r}")
    value = obj[name]
    if kind is not None and not isinstance(value, kind):
        raise FormatError(f"{where}.{name}: expected {kind.__name__}")
    return value


def _mult(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{where}: multiplicity must be an integer")
    return x


def from_dict(data):
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    if "arrows" in data or "cycles" in data:
        return _sb_from_dict(data)
    if "edges" in data:
        return _bg_from_dict(data)
    raise FormatError("cannot tell the structure: expected 'arrows' or 'edges'")


def _sb_from_dict(d) -> SBQuiver:
    vertices = [_id_in(v, "vertices") for v in _field(d, "vertices", "$", list)]
    arrows = []
    for n, a in enumerate(_field(d, "arrows", "$", list)):
        where = f"arrows[{n}]"
        arrows.append(Arrow(_id_in(_field(a, "id", where), where),
                            _id_in(_field(a, "tail", where), where),
                            _id_in(_field(a, "head", where), where)))
    cycles = []
    for n, c in enumerate(_field(d, "cycles", "$", list)):
        where = f"cycles[{n}]"
        word = [_id_in(x, where) for x in _field(c, "arrows", where, list)]
        cycles.append(Cycle(tuple(word), _mult(_field(c, "mult", where), where)))
    arrows.sort(key=lambda a: sort_key(a.id))
    return SBQuiver(tuple(vertices), tuple(arrows), tuple(cycles))


def _bg_from_dict(d) -> BrauerGraph:
    vertices = []
    for n, v in enumerate(_field(d, "vertices", "$", list)):
        where = f"vertices[{n}]"
        order = [_id_in(h, where) for h in _field(v, "order", where, list)]
        vertices.append(BGVertex(_id_in(_field(v, "id", where), where),
                                 _mult(_field(v, "mult", where), where), tuple(order)))
    edges = []
    for n, e in enumerate(_field(d, "edges", "$", list)):
        where = f"edges[{n}]"
        halves = [_id_in(h, where) for h in _field(e, "half_edges", where, list)]
        edges.append(Edge(_id_in(_field(e, "id", where), where), tuple(halves)))
    return BrauerGraph(tuple(vertices), tuple(edges))


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    return from_dict(data)


def load(path):
    with open(path, encoding="utf-8") as f:
        return loads(f.read())


def to_dict(x) -> dict:
    if isinstance(x, SBQuiver):
        return {
            "vertices": [_id_out(v) for v in x.vertices],
            "arrows": [
                {"id": _id_out(a.id), "tail": _id_out(a.tail), "head": _id_out(a.head)}
                for a in sorted(x.arrows, key=lambda a: sort_key(a.id))
            ],
            "cycles": [{"arrows": [_id_out(a) for a in c.arrows], "mult": c.mult} for c in x.cycles],
        }
    if isinstance(x, BrauerGraph):
        return {
            "vertices": [
                {"id": _id_out(v.id), "mult": v.mult, "order": [_id_out(h) for h in v.order]}
                for v in x.vertices
            ],
            "edges": [
                {"id": _id_out(e.id), "half_edges": [_id_out(h) for h in e.half_edges]}
                for e in sorted(x.edges, key=lambda e: sort_key(e.id))
            ],
        }
    raise TypeError(f"cannot encode {type(x).__name__}")


def dumps(obj) -> str:
    """Canonical JSON text (sorted keys, two-space indent, trailing newline)."""
    if isinstance(obj, (SBQuiver, BrauerGraph)):
        obj = to_dict(obj)
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# -- DOT -----------------------------------------------------------------------


def _q(x) -> str:
    return json.dumps(str(_id_out(x)) if not isinstance(x, str) else x)


def to_dot(x) -> str:
    lines = []
    if isinstance(x, SBQuiver):
        lines.append("digraph sb_quiver {")
        for v in x.vertices:
            lines.append(f"  {_q(v)};")
        for k, c in enumerate(x.cycles):
            for a in c.arrows:
                arrow = x.arrow(a)
                label = f"{arrow.id} [C{k}, m={c.mult}]"
                lines.append(f"  {_q(arrow.tail)} -> {_q(arrow.head)} [label={_q(label)}];")
    elif isinstance(x, BrauerGraph):
        lines.append("graph brauer_graph {")
        for v in x.vertices:
            order = " ".join(str(_id_out(h)) for h in v.order)
            lines.append(f"  // cyclic order at {v.id}: {order}")
            lines.append(f"  {_q(v.id)} [label={_q(f'{v.id} m={v.mult}')}];")
        for e in sorted(x.edges, key=lambda e: sort_key(e.id)):
            a, b = x.endpoints(e.id)
            lines.append(f"  {_q(a)} -- {_q(b)} [label={_q(e.id)}];")
    else:
        raise TypeError(f"cannot export {type(x).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"
