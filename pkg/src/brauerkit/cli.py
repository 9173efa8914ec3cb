"""``brauerkit`` command line.

Every subcommand reads JSON files (see :mod:`brauerkit.formats`), writes
canonical JSON to stdout and diagnostics to stderr.  Exit status: 0 on
success, 1 when an input is invalid or a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .algebra import cartan_matrix, path_basis
from .canonical import isomorphic
from .correspondence import brauer_graph_of, brauer_quiver
from .derived import arrow_matrix, euler_cartan, ext_table, fingerprint, flip_search
from .formats import FormatError, dumps, load, to_dict, to_dot
from .mutation import flip_case, flip_left, flip_right, mutate_left, mutate_right, mutation_case
from .reduction import ReductionError, to_double_star
from .structures import BrauerGraph, SBQuiver, StructureError, validate, validate_graph


class Fail(Exception):
    """A failed check: reported on stderr, exit status 1."""


def _problems(x) -> list[str]:
    return validate(x) if isinstance(x, SBQuiver) else validate_graph(x)


def _read(path, want=None):
    x = load(path)
    if want is SBQuiver and not isinstance(x, SBQuiver):
        raise Fail(f"{path}: expected an SB quiver")
    if want is BrauerGraph and not isinstance(x, BrauerGraph):
        raise Fail(f"{path}: expected a Brauer graph")
    problems = _problems(x)
    if problems:
        raise Fail(f"{path}: invalid: " + "; ".join(problems))
    return x


def _resolve(arg: str, ids, what: str):
    """Match a command-line id against the ids of a structure."""
    ids = list(ids)
    for cand in (arg, _int_or_none(arg)):
        if cand is not None and cand in ids:
            return cand
    raise Fail(f"unknown {what} {arg!r}")


def _int_or_none(s):
    try:
        return int(s)
    except ValueError:
        return None


def _as_sb(x) -> SBQuiver:
    if isinstance(x, SBQuiver):
        return x
    if x.is_trivial:
        return SBQuiver((x.edges[0].id,), (), ())
    return brauer_quiver(x)


def _matrix(m) -> list:
    return np.asarray(m).astype(int).tolist()


# -- subcommands ----------------------------------------------------------------


def cmd_validate(a):
    x = load(a.file)
    problems = _problems(x)
    kind = "sb_quiver" if isinstance(x, SBQuiver) else "brauer_graph"
    out = {"kind": kind, "valid": not problems, "problems": problems}
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return out, 1
    return out, 0


def cmd_to_sb(a):
    return to_dict(_as_sb(_read(a.file, BrauerGraph))), 0


def cmd_to_bg(a):
    return to_dict(brauer_graph_of(_read(a.file, SBQuiver))), 0


def cmd_mutate(a):
    q = _read(a.file, SBQuiver)
    i = _resolve(a.vertex, q.vertices, "vertex")
    if q.is_trivial:
        raise Fail("mutation needs at least one arrow")
    r = (mutate_left if a.left else mutate_right)(q, i)
    print(f"case: {mutation_case(q, i)}", file=sys.stderr)
    return to_dict(r), 0


def cmd_flip(a):
    g = _read(a.file, BrauerGraph)
    e = _resolve(a.edge, (x.id for x in g.edges), "edge")
    if g.is_trivial:
        raise Fail("flip needs a non-trivial Brauer graph")
    print(f"case: ({flip_case(g, e)})", file=sys.stderr)
    return to_dict((flip_left if a.left else flip_right)(g, e)), 0


def cmd_cartan(a):
    q = _as_sb(_read(a.file))
    return {"vertices": list(q.vertices), "cartan": _matrix(cartan_matrix(q))}, 0


def cmd_basis(a):
    q = _as_sb(_read(a.file))
    pb = path_basis(q)
    out = []
    for v in q.vertices:
        elems = [{"arrows": list(b.arrows), "end": b.end, "socle": b.socle} for b in pb.elements[v]]
        out.append({"vertex": v, "dim": len(elems), "elements": elems})
    return {"basis": out, "total_dim": pb.total_dim()}, 0


def cmd_reduce(a):
    q = _as_sb(_read(a.file))
    r = to_double_star(q)
    if r.used_search:
        print("note: finished by breadth-first search over right mutations", file=sys.stderr)
    return {
        "start": to_dict(r.start),
        "normal_form": to_dict(r.quiver),
        "brauer_graph": to_dict(brauer_graph_of(r.quiver)),
        "tracked_cycle": r.tracked,
        "log": [e.to_dict() for e in r.log],
    }, 0


def cmd_fingerprint(a):
    x = _read(a.file)
    if isinstance(x, SBQuiver) and x.is_trivial:
        x = brauer_graph_of(x)
    return fingerprint(x).to_dict(), 0


def cmd_check_compat(a):
    g = _read(a.file, BrauerGraph)
    e = _resolve(a.edge, (x.id for x in g.edges), "edge")
    if g.is_trivial:
        raise Fail("flip needs a non-trivial Brauer graph")
    ok = isomorphic(brauer_quiver(flip_right(g, e)), mutate_right(brauer_quiver(g), e))
    out = {"edge": e, "flip_case": flip_case(g, e), "compatible": ok}
    if not ok:
        print("FAIL: flip and mutation disagree", file=sys.stderr)
        return out, 1
    return out, 0


def cmd_verify(a):
    q = _read(a.file, SBQuiver)
    i = _resolve(a.vertex, q.vertices, "vertex")
    if q.is_trivial:
        raise Fail("mutation needs at least one arrow")
    target = mutate_right(q, i)
    predicted_c, predicted_e = euler_cartan(q, i), ext_table(q, i)
    actual_c, actual_e = cartan_matrix(target), arrow_matrix(target)
    ok_c = bool((predicted_c == actual_c).all())
    ok_e = bool((predicted_e == actual_e).all())
    out = {
        "vertex": i,
        "case": mutation_case(q, i),
        "cartan_ok": ok_c,
        "ext_ok": ok_e,
        "euler_cartan": _matrix(predicted_c),
        "ext_table": _matrix(predicted_e),
    }
    if ok_c and ok_e:
        print("OK: Cartan and Ext identities hold", file=sys.stderr)
        return out, 0
    print("FAIL: " + ", ".join(n for n, ok in (("Cartan", ok_c), ("Ext", ok_e)) if not ok)
          + " identity violated", file=sys.stderr)
    return out, 1


def cmd_search(a):
    g1, g2 = _read(a.first, BrauerGraph), _read(a.second, BrauerGraph)
    r = flip_search(g1, g2, a.depth)
    if r.reason:
        print(r.reason, file=sys.stderr)
    return {
        "found": r.found,
        "steps": [{"edge": e, "direction": d} for e, d in r.steps],
        "explored": r.explored,
    }, 0


def cmd_export_dot(a):
    return to_dot(_read(a.file)), 0


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brauerkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *files, **kw):
        s = sub.add_parser(name, **kw)
        for f in files:
            s.add_argument(f)
        s.set_defaults(fn=fn)
        return s

    add("validate", cmd_validate, "file", help="check an SB quiver or Brauer graph")
    add("to-sb", cmd_to_sb, "file", help="Brauer quiver of a Brauer graph")
    add("to-bg", cmd_to_bg, "file", help="Brauer graph of an SB quiver")
    s = add("mutate", cmd_mutate, "file", help="mutate an SB quiver at a vertex")
    s.add_argument("--vertex", required=True)
    s.add_argument("--left", action="store_true")
    s = add("flip", cmd_flip, "file", help="flip a Brauer graph at an edge")
    s.add_argument("--edge", required=True)
    s.add_argument("--left", action="store_true")
    add("cartan", cmd_cartan, "file", help="Cartan matrix")
    add("basis", cmd_basis, "file", help="path basis of each projective")
    add("reduce", cmd_reduce, "file", help="reduce to double-star normal form")
    add("fingerprint", cmd_fingerprint, "file", help="derived invariants")
    s = add("check-compat", cmd_check_compat, "file", help="flip versus mutation at an edge")
    s.add_argument("--edge", required=True)
    s = add("verify", cmd_verify, "file", help="Cartan and Ext predictions at a vertex")
    s.add_argument("--vertex", required=True)
    s = add("search", cmd_search, "first", "second", help="flip sequence between two graphs")
    s.add_argument("--depth", type=int, required=True)
    add("export-dot", cmd_export_dot, "file", help="Graphviz DOT")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, status = args.fn(args)
    except (Fail, FormatError, ReductionError, StructureError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(out if isinstance(out, str) else dumps(out))
    return status


if __name__ == "__main__":
    sys.exit(main())
