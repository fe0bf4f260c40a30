"""Command-line front end.

JSON goes to stdout (or ``--out``), diagnostics to stderr. Exit codes:

0  object produced / check passed
1  check failed (e.g. a certificate found where none was expected)
2  usage error, including bad vertices, edges or names in the input
3  search or cycle budget exceeded
4  input or output file problem (missing, unreadable, not valid JSON)

Budgets not given by flag fall back to ``LINKFORGE_BUDGET`` and then to the
library defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import spatial
from .certify import check_witness
from .constructions import (
    KINDS,
    NAMED,
    build_m,
    double_star,
    edge_identify,
    five_edge_join,
    k44_attach,
    named_graph,
    six_cycle_connect,
    star_identify,
    vertex_identify,
)
from .cycles import DEFAULT_CYCLE_BUDGET, Cycle, disjoint_cycle_tuples, enumerate_cycles
from .diagram import Diagram, validate_diagram
from .enm import check_enm_criterion, counting_lower_bound, generate_enm, min_enm
from .errors import BudgetExceeded, LinkforgeError, UnknownName, UnknownVertex
from .family import family_member, petersen_family
from .fm import fm_diagram
from .graph import Graph
from .minors import (
    DEFAULT_SEARCH_BUDGET,
    MinorModel,
    find_minor,
    is_intrinsically_linked,
    is_minor_minimal_il,
    verify_minor_model,
)
from .moves import MoveSite, apply_move

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_IO = 4


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


# -- DOT ----------------------------------------------------------------------


def _q(x) -> str:
    return '"' + str(x).replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(obj: Graph | Diagram) -> str:
    """Deterministic DOT text for a graph or a diagram.

    Nodes and edges follow the graph's canonical vertex order. For a diagram
    each edge is labelled with its crossings in order along the edge
    (``3o`` = passes over at crossing 3), and stored coordinates become
    pinned ``pos`` attributes.
    """
    diagram = obj if isinstance(obj, Diagram) else None
    g = diagram.graph if diagram else obj
    lines = [f"graph {_q(g.name or 'G')} {{"]
    for v in g.vertices:
        attrs = ""
        if diagram is not None and diagram.coords is not None:
            x, y = diagram.coords[v]
            attrs = f' [pos="{x:g},{y:g}!"]'
        lines.append(f"  {_q(v)}{attrs};")
    for e in g.edges:
        attrs = ""
        if diagram is not None:
            ps = diagram.passages.get(e, ())
            if ps:
                label = " ".join(f"{p.crossing}{p.role[0]}" for p in ps)
                attrs = f" [label={_q(label)}]"
        lines.append(f"  {_q(e[0])} -- {_q(e[1])}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _text(payload, indent: str = "") -> str:
    """Plain rendering of a JSON payload, one scalar per line."""
    out = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v:
                out.append(f"{indent}{k}:")
                out.append(_text(v, indent + "  "))
            else:
                out.append(f"{indent}{k}: {json.dumps(v)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, dict):
                out.append(f"{indent}-")
                out.append(_text(item, indent + "  "))
            else:
                out.append(f"{indent}- {json.dumps(item)}")
    else:
        out.append(f"{indent}{json.dumps(payload)}")
    return "\n".join(out)


# -- input helpers --------------------------------------------------------------


def _env_budget() -> int | None:
    env = os.environ.get("LINKFORGE_BUDGET")
    if not env:
        return None
    try:
        value = int(env)
    except ValueError:
        raise UsageError(f"LINKFORGE_BUDGET must be an integer, got {env!r}") from None
    if value <= 0:
        raise UsageError("LINKFORGE_BUDGET must be positive")
    return value


def _budgets(args) -> tuple[int, int]:
    env = _env_budget()
    search = args.budget or env or DEFAULT_SEARCH_BUDGET
    cycles = args.max_cycles or env or DEFAULT_CYCLE_BUDGET
    return search, cycles


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("budgets must be positive")
    return value


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _load_graph(args) -> Graph:
    """Graph from ``--in`` (graph or diagram JSON) or ``--graph NAME``."""
    if getattr(args, "graph", None):
        return _named(args.graph)
    if not getattr(args, "input", None):
        raise UsageError("give --in FILE or --graph NAME")
    data = _read_json(args.input)
    if isinstance(data, dict) and "graph" in data:
        data = data["graph"]
    try:
        return Graph.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"{args.input} is not graph JSON ({exc})") from None


def _load_diagram(args) -> Diagram:
    if getattr(args, "fm", False):
        return fm_diagram()
    if not getattr(args, "input", None):
        raise UsageError("give --in FILE or --fm")
    data = _read_json(args.input)
    try:
        d = Diagram.from_json(data)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"{args.input} is not diagram JSON ({exc})") from None
    return validate_diagram(d)


def _named(name: str) -> Graph:
    if name == "M":
        return build_m()
    try:
        return family_member(name)
    except UnknownName:
        return named_graph(name)


def _label(g: Graph, text: str):
    """Vertex of ``g`` whose string form is ``text``."""
    for v in g.vertices:
        if str(v) == text:
            return v
    raise UnknownVertex(f"no vertex {text!r} in {g.name or 'graph'}")


def _labels(g: Graph, text: str) -> list:
    return [_label(g, t.strip()) for t in text.split(",") if t.strip()]


def _pairs(text: str) -> list[tuple[str, str]]:
    """'a:b,c:d' -> [('a','b'), ('c','d')]."""
    out = []
    for item in text.split(","):
        a, sep, b = item.strip().partition(":")
        if not sep:
            raise UsageError(f"expected u:v pairs, got {item!r}")
        out.append((a, b))
    return out


def _cycle(g: Graph, text: str) -> Cycle:
    return Cycle.from_walk(g, _labels(g, text))


# -- commands -------------------------------------------------------------------
# Each returns (exit code, JSON payload, optional object for --format dot).


def cmd_family(args):
    fam = petersen_family()
    if args.name:
        g = family_member(args.name)
        return EXIT_OK, g.to_json(), g
    entries = [
        {"name": name, "vertices": g.n, "edges": g.m, "degrees": sorted(g.degrees())} for name, g in fam.items()
    ]
    return EXIT_OK, {"family": entries, "count": len(entries)}, None


def cmd_construct(args):
    kind = args.kind
    if kind == "build-m":
        g = build_m()
    elif kind == "named":
        if not args.name:
            raise UsageError(f"named needs --name (one of {', '.join(NAMED)})")
        g = named_graph(args.name)
    else:
        need = {"k44-attach": ("g1", "v1")}.get(kind, ("g1", "g2"))
        for flag in need:
            if getattr(args, flag) is None:
                raise UsageError(f"{kind} needs --{flag.replace('_', '-')}")
        g1, g2 = args.g1, args.g2
        if kind == "double-star":
            g = double_star(g1, args.v1, g2, args.v2, args.excl1, args.excl2)
        elif kind == "star-identify":
            g = star_identify(g1, args.v1, g2, args.v2, args.excl1, args.excl2)
        elif kind == "k44-attach":
            g = k44_attach(g1, args.v1, args.excl1)
        elif kind == "vertex-identify":
            g = vertex_identify(g1, args.v1, g2, args.v2, _pairs(args.edges) if args.edges else None)
        elif kind == "five-edge-join":
            g = five_edge_join(g1, g2, _pairs(args.matching) if args.matching else None)
        elif kind == "edge-identify":
            if not (args.e1 and args.e2):
                raise UsageError("edge-identify needs --e1 u,v and --e2 u,v")
            g = edge_identify(_named(g1), args.e1.split(","), _named(g2), args.e2.split(","))
        else:  # six-cycle-connect
            if not (args.triple1 and args.triple2):
                raise UsageError("six-cycle-connect needs --triple1 and --triple2")
            g = six_cycle_connect(g1, args.triple1.split(","), g2, args.triple2.split(","))
    return EXIT_OK, g.to_json(), g


def cmd_move(args):
    g = _load_graph(args)
    if bool(args.y_nabla) == bool(args.nabla_y):
        raise UsageError("give exactly one of --y-nabla V or --nabla-y A,B,C")
    if args.y_nabla:
        site = MoveSite.y_nabla(_label(g, args.y_nabla))
    else:
        tri = _labels(g, args.nabla_y)
        if len(tri) != 3:
            raise UsageError("--nabla-y needs three vertices")
        site = MoveSite.nabla_y(*tri)
    h = apply_move(g, site)
    out = h.to_json()
    if h.meta.get("simplified"):
        out["simplified"] = True
    return EXIT_OK, out, h


def cmd_check_il(args):
    search, _ = _budgets(args)
    g = _load_graph(args)
    v = is_intrinsically_linked(g, search)
    return EXIT_OK, v.to_json(), None


def cmd_check_minimal(args):
    search, _ = _budgets(args)
    report = is_minor_minimal_il(_load_graph(args), search)
    return EXIT_OK, report.to_json(), None


def cmd_minor(args):
    search, _ = _budgets(args)
    host = _load_graph(args)
    pattern = _named(args.pattern) if not os.path.exists(args.pattern) else Graph.from_json(_read_json(args.pattern))
    if args.verify:
        model = MinorModel.from_json(_read_json(args.verify))
        ok = verify_minor_model(host, pattern, model)
        return (EXIT_OK if ok else EXIT_FAILED), {"valid": ok}, None
    model = find_minor(host, pattern, search)
    if model is None:
        return EXIT_OK, {"found": False}, None
    return EXIT_OK, {"found": True, **model.to_json()}, None


def cmd_cycles(args):
    _, cap = _budgets(args)
    g = _load_graph(args)
    if args.disjoint:
        tuples = disjoint_cycle_tuples(g, args.disjoint, cap)
        body = {"k": args.disjoint, "count": len(tuples)}
        if not args.count:
            body["tuples"] = [[c.to_json() for c in t] for t in tuples]
        return EXIT_OK, body, None
    cycles = enumerate_cycles(g, cap)
    body = {"count": len(cycles)}
    if not args.count:
        body["cycles"] = [c.to_json() for c in cycles]
    return EXIT_OK, body, None


def cmd_lk(args):
    d = _load_diagram(args)
    a, b = _cycle(d.graph, args.a), _cycle(d.graph, args.b)
    return EXIT_OK, {"a": a.to_json(), "b": b.to_json(), "omega": spatial.mod2_linking(d, a, b)}, None


def cmd_pairs(args):
    _, cap = _budgets(args)
    d = _load_diagram(args)
    pairs = spatial.linked_pairs(d, cap)
    return EXIT_OK, {"count": len(pairs), "pairs": [[a.to_json(), b.to_json()] for a, b in pairs]}, None


def cmd_triples(args):
    _, cap = _budgets(args)
    d = _load_diagram(args)
    ts = spatial.pairwise_linked_triples(d, cap)
    return EXIT_OK, {"count": len(ts), "triples": [[c.to_json() for c in t] for t in ts]}, None


def cmd_witness(args):
    _, cap = _budgets(args)
    d = _load_diagram(args)
    lemmas = [args.lemma] if args.lemma else list(spatial.WITNESS_SEARCHES)
    found = None
    for lemma in lemmas:
        found = spatial.WITNESS_SEARCHES[lemma](d, cap)
        if found is not None:
            break
    if found is None:
        return EXIT_OK, {"found": False, "searched": lemmas}, None
    w = found.to_json()
    problems = check_witness(d.to_json(), w)
    body = {"found": True, "witness": w, "independent_check": problems or "ok"}
    code = EXIT_FAILED if problems or args.expect_none else EXIT_OK
    return code, body, None


def cmd_verify_fm(args):
    _, cap = _budgets(args)
    d = _load_diagram(args) if args.input else fm_diagram()
    if args.emit_diagram:
        return EXIT_OK, d.to_json(), d
    report = spatial.verify_no_3link_certificate(d, max_count=cap)
    return (EXIT_OK if report.passed else EXIT_FAILED), report.to_json(), d


def cmd_enm(args):
    n, m = args.n, args.m
    edges = min_enm(n, m) if args.min else generate_enm(n, m)
    body = {
        "n": n,
        "m": m,
        "method": "exhaustive-minimum" if args.min else "circulant",
        "edges": [list(e) for e in edges],
        "size": len(edges),
        "lower_bound": counting_lower_bound(n, m),
        "criterion": check_enm_criterion(edges, range(n), range(m)),
    }
    return EXIT_OK, body, None


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "text"), default="json")
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--budget", type=_positive, help="minor-search node cap")
    common.add_argument("--max-cycles", type=_positive, help="cycle enumeration cap")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--in", dest="input", help="graph JSON file ('-' for stdin)")
    graph_in.add_argument("--graph", help="catalog name instead of a file (K6, PG, M, K10*, ...)")

    diagram_in = argparse.ArgumentParser(add_help=False)
    diagram_in.add_argument("--in", dest="input", help="diagram JSON file ('-' for stdin)")
    diagram_in.add_argument("--fm", action="store_true", help="use the built-in f(M) diagram")

    p = argparse.ArgumentParser(prog="linkforge", description="Intrinsic linking toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("family", parents=[common], help="Petersen family catalog")
    s.add_argument("--list", action="store_true", help="list the members (default)")
    s.add_argument("--name", help="emit one member as a graph")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("construct", parents=[common], help="build a construction")
    s.add_argument("kind", choices=(*KINDS, "build-m", "named"))
    for flag in ("g1", "v1", "g2", "v2", "excl1", "excl2", "name"):
        s.add_argument(f"--{flag}")
    s.add_argument("--edges", help="vertex-identify edge set as a1:a2,...")
    s.add_argument("--matching", help="five-edge-join matching as u:w,...")
    s.add_argument("--e1", help="edge-identify edge of g1 as u,v")
    s.add_argument("--e2", help="edge-identify edge of g2 as u,v")
    s.add_argument("--triple1", help="six-cycle-connect vertices of g1 as a,b,c")
    s.add_argument("--triple2", help="six-cycle-connect vertices of g2 as a,b,c")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("move", parents=[common, graph_in], help="apply a Y-Delta or Delta-Y move")
    s.add_argument("--y-nabla", metavar="V")
    s.add_argument("--nabla-y", metavar="A,B,C")
    s.set_defaults(func=cmd_move)

    s = sub.add_parser("check-il", parents=[common, graph_in], help="intrinsic linking verdict")
    s.set_defaults(func=cmd_check_il)

    s = sub.add_parser("check-minimal", parents=[common, graph_in], help="minor-minimality report")
    s.set_defaults(func=cmd_check_minimal)

    s = sub.add_parser("minor", parents=[common, graph_in], help="find or verify a minor model")
    s.add_argument("--pattern", required=True, help="pattern name or graph JSON file")
    s.add_argument("--verify", metavar="MODEL", help="re-verify a model JSON instead of searching")
    s.set_defaults(func=cmd_minor)

    s = sub.add_parser("cycles", parents=[common, graph_in], help="enumerate cycles")
    s.add_argument("--disjoint", type=int, choices=(2, 3), help="pairs or triples of disjoint cycles")
    s.add_argument("--count", action="store_true", help="report counts only")
    s.set_defaults(func=cmd_cycles)

    s = sub.add_parser("lk", parents=[common, diagram_in], help="mod-2 linking number of two cycles")
    s.add_argument("--a", required=True, help="first cycle as v1,v2,...")
    s.add_argument("--b", required=True, help="second cycle as v1,v2,...")
    s.set_defaults(func=cmd_lk)

    s = sub.add_parser("pairs", parents=[common, diagram_in], help="linked cycle pairs")
    s.set_defaults(func=cmd_pairs)

    s = sub.add_parser("triples", parents=[common, diagram_in], help="pairwise linked triples")
    s.set_defaults(func=cmd_triples)

    s = sub.add_parser("witness", parents=[common, diagram_in], help="search for a 3-link witness")
    s.add_argument("--lemma", choices=tuple(spatial.WITNESS_SEARCHES))
    s.add_argument("--expect-none", action="store_true", help="exit 1 if a witness is found")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("verify-fm", parents=[common], help="no-3-link certificate report for f(M)")
    s.add_argument("--in", dest="input", help="check this diagram instead of f(M)")
    s.add_argument("--emit-diagram", action="store_true", help="output the diagram instead of the report")
    s.set_defaults(func=cmd_verify_fm)

    s = sub.add_parser("enm", parents=[common], help="admissible added-edge sets")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--min", action="store_true", help="exact minimum instead of the circulant rule")
    s.set_defaults(func=cmd_enm)
    return p


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc.strerror or exc}") from None


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        code, payload, obj = args.func(args)
        if args.format == "dot":
            if obj is None:
                raise UsageError(f"{args.command} has no graph output for --format dot")
            text = emit_dot(obj)
        elif args.format == "text":
            text = _text(payload) + "\n"
        else:
            text = json.dumps(payload, indent=2) + "\n"
        _emit(text, args.out)
        return code
    except BudgetExceeded as exc:
        print(f"linkforge: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InputError as exc:
        print(f"linkforge: io: {exc}", file=sys.stderr)
        return EXIT_IO
    except UsageError as exc:
        print(f"linkforge: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LinkforgeError as exc:
        print(f"linkforge: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
