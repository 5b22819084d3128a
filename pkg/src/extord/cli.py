"""Command-line front end.

Exit status: 0 true / found / built, 1 false / none / infeasible,
2 usage or input error, 3 internal disagreement between two routes.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import checkers, codes, hamiltonian, hfsets, reductions, solvers
from .bisimulation import is_hyper_extensional, max_bisimulation, quotient
from .errors import DefectError, ExtordError
from .generate import random_dag, random_digraph, random_graph, random_two_leaf_graph
from .graph_core import Digraph, Graph, parse, serialize

OK, NO, USAGE, DEFECT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str):
    try:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise UsageError(f"{path} is not 7-bit text") from None
    try:
        return parse(text)
    except ExtordError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _read_graph(path: str) -> Graph:
    g = _read(path)
    if not isinstance(g, Graph):
        raise UsageError(f"{path}: expected an undirected 'graph'")
    return g


def _read_digraph(path: str) -> Digraph:
    d = _read(path)
    if not isinstance(d, Digraph):
        raise UsageError(f"{path}: expected a 'digraph'")
    return d


def _read_vertex_set(path: str) -> list[str]:
    try:
        with open(path, encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return [ln.strip() for ln in lines if ln.strip() and not ln.startswith("#")]


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _emit_renaming(out, mapping):
    for old, new in sorted(mapping.items()):
        print(f"# renamed {old} {new}", file=out)


def cmd_check(args, out):
    d = _read_digraph(args.file)
    selected = [name for name in ("acyclic", "extensional", "slim", "hyperext", "reversal_robust", "reach_sink") if getattr(args, name)]
    if not selected:
        selected = ["acyclic", "extensional", "hyperext", "reach_sink"]
    verdicts = []
    for name in selected:
        if name == "acyclic":
            res = checkers.is_acyclic(d)
            ok = bool(res)
            extra = f" cycle={' '.join(res.cycle)}" if not ok else ""
        elif name == "extensional":
            res = checkers.is_extensional(d)
            ok = bool(res)
            extra = f" collision={' '.join(res.collision)}" if not ok else ""
        elif name == "slim":
            res = checkers.is_slim(d)
            ok = bool(res)
            extra = f" removable={' '.join(res.removable_arc)}" if not ok else ""
        elif name == "hyperext":
            ok, extra = is_hyper_extensional(d), ""
        elif name == "reversal_robust":
            ok, extra = checkers.is_reversal_robust(d), ""
        else:
            ok, extra = checkers.all_reach_sink(d), ""
        print(f"{name.replace('_', '-')}={_flag(ok)}{extra}", file=out)
        verdicts.append(ok)
    return OK if all(verdicts) else NO


def cmd_solve(args, out):
    g = _read_graph(args.file)
    variant = solvers.Variant.parse(args.variant)
    res = solvers.solve(g, variant)
    st = res.stats
    print(f"# nodes={st.nodes} cycle-prunes={st.cycle_prunes} collision-prunes={st.collision_prunes}", file=out)
    if res.digraph is None:
        print(f"no {variant.name} exists", file=out)
        return NO
    out.write(serialize(res.digraph))
    return OK


def cmd_enumerate(args, out):
    g = _read_graph(args.file)
    variant = solvers.Variant.parse(args.variant)
    n = 0
    for n, d in enumerate(solvers.enumerate_orientations(g, variant, jobs=args.jobs), start=1):
        print(f"# orientation {n}", file=out)
        out.write(serialize(d))
    print(f"count={n}", file=out)
    return OK if n else NO


def cmd_count(args, out):
    g = _read_graph(args.file)
    variant = solvers.Variant.parse(args.variant)
    total = solvers.count(g, variant, jobs=args.jobs)
    if args.oracle:
        oracle = solvers.brute_force_count(g, variant)
        print(f"count={total} oracle={oracle}", file=out)
        if oracle != total:
            print("solver and brute-force oracle disagree", file=sys.stderr)
            return DEFECT
    else:
        print(f"count={total}", file=out)
    return OK if total else NO


def cmd_hp(args, out):
    g = _read_graph(args.file)
    if args.action == "find":
        path = hamiltonian.find_hamiltonian_path(g)
        if path is None:
            print("no Hamiltonian path", file=out)
            return NO
        print("path=" + " ".join(path), file=out)
        return OK
    total = hamiltonian.count_hamiltonian_paths(g)
    print(f"count={total}", file=out)
    return OK if total else NO


def cmd_reduce(args, out):
    kind = args.construction
    if kind == "hpx":
        g = _read_graph(args.files[0])
        _emit_renaming(out, reductions.escape_map("hpx", g.vertices))
        result = reductions.hp_prime_extend(g)
    elif kind == "subdivide":
        g = _read_graph(args.files[0])
        _emit_renaming(out, reductions.escape_map("subdivide", g.vertices))
        result = reductions.subdivision(g)
    elif kind == "lemma2":
        if not args.path:
            raise UsageError("lemma2 needs --path")
        g = _read_graph(args.files[0])
        _emit_renaming(out, reductions.escape_map("lemma2", g.vertices))
        result = reductions.lemma2_orientation(g, args.path)
    elif kind == "compose":
        if len(args.files) != 4:
            raise UsageError("compose needs FILE1 V1 V2 FILE2")
        first, v1, v2, second = args.files
        d1, d2 = _read(first), _read(second)
        _emit_renaming(out, reductions.compose_renaming(d1, d2))
        result = reductions.compose(d1, v1, v2, d2)
    elif kind == "heo-instance":
        g = _read_graph(args.files[0])
        _emit_renaming(out, reductions.escape_map("heo-instance", g.vertices))
        result = reductions.heo_instance(g)
    else:
        g = _read_graph(args.files[0])
        a, b = _parts(args, g)
        _emit_renaming(out, reductions.escape_map("dc2oosc", g.vertices))
        result = reductions.dc_to_oosc(g, a, b)
    out.write(serialize(result))
    return OK


def _parts(args, g):
    if not args.part_a:
        raise UsageError("--part-a is required")
    a = _read_vertex_set(args.part_a)
    b = _read_vertex_set(args.part_b) if args.part_b else [v for v in g.vertices if v not in set(a)]
    return a, b


def cmd_code(args, out):
    if args.kind == "oosc":
        d = _read_digraph(args.file)
        if args.verify:
            ok = codes.is_oosc(d, _read_vertex_set(args.verify))
            print(f"valid={_flag(ok)}", file=out)
            return OK if ok else NO
        res = codes.min_oosc(d)
    else:
        g = _read_graph(args.file)
        a, b = _parts(args, g)
        if args.verify:
            ok = codes.is_discriminating_code(g, a, b, _read_vertex_set(args.verify))
            print(f"valid={_flag(ok)}", file=out)
            return OK if ok else NO
        res = codes.min_discriminating_code(g, a, b)
    if not res.feasible:
        print("infeasible", file=out)
        return NO
    print(f"size={res.size}", file=out)
    print("witness=" + " ".join(res.witness), file=out)
    return OK


def cmd_collapse(args, out):
    d = _read_digraph(args.file)
    sets = hfsets.mostowski_collapse(d)
    for v in d.sorted_vertices():
        s = sets[v]
        print(f"{v}\t{s.canonical}\t{hfsets.ackermann(s)}", file=out)
    return OK


def cmd_bisim(args, out):
    d = _read_digraph(args.file)
    p = max_bisimulation(d, engine=args.engine)
    if args.quotient:
        out.write(serialize(quotient(d, p)))
    else:
        out.write(p.serialize())
    return OK if p.is_identity() else NO


def cmd_gadget_verify(args, out):
    found = reductions.gadget_verify()
    print(f"valid-orientations={len(found)}", file=out)
    for d in sorted(found, key=lambda d: d.sorted_arcs()):
        out.write(serialize(d))
    return OK


def cmd_generate(args, out):
    rng = random.Random(args.seed)
    if args.kind == "graph":
        g = random_graph(rng, args.vertices, args.density)
    elif args.kind == "two-leaf":
        g = random_two_leaf_graph(rng, args.vertices)
    elif args.kind == "digraph":
        g = random_digraph(rng, args.vertices, args.density)
    else:
        g = random_dag(rng, args.vertices, args.density)
    out.write(serialize(g))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extord", description="Extensional orientations, reductions and codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test digraph properties")
    p.add_argument("file")
    for flag in ("acyclic", "extensional", "slim", "hyperext", "reversal-robust", "reach-sink"):
        p.add_argument(f"--{flag}", action="store_true")
    p.set_defaults(func=cmd_check)

    variants = [v.value for v in solvers.Variant]
    for name, func in (("solve", cmd_solve), ("enumerate", cmd_enumerate), ("count", cmd_count)):
        p = sub.add_parser(name, help=f"{name} orientations of a graph")
        p.add_argument("file")
        p.add_argument("--variant", choices=variants, default="eao")
        if name != "solve":
            p.add_argument("--jobs", type=int, default=1)
        if name == "count":
            p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
        p.set_defaults(func=func)

    p = sub.add_parser("hp", help="Hamiltonian paths")
    p.add_argument("action", choices=["find", "count"])
    p.add_argument("file")
    p.set_defaults(func=cmd_hp)

    p = sub.add_parser("reduce", help="build a reduction instance")
    p.add_argument("construction", choices=["hpx", "subdivide", "lemma2", "compose", "heo-instance", "dc2oosc"])
    p.add_argument("files", nargs="+", metavar="ARG")
    p.add_argument("--path", nargs="+")
    p.add_argument("--part-a")
    p.add_argument("--part-b")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("code", help="minimum separating / discriminating codes")
    p.add_argument("kind", choices=["oosc", "dc"])
    p.add_argument("file")
    p.add_argument("--part-a")
    p.add_argument("--part-b")
    p.add_argument("--verify", metavar="SET_FILE")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("collapse", help="Mostowski collapse of an acyclic digraph")
    p.add_argument("file")
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("bisim", help="maximum bisimulation partition")
    p.add_argument("file")
    p.add_argument("--engine", choices=["paige-tarjan", "naive"], default="paige-tarjan")
    p.add_argument("--quotient", action="store_true")
    p.set_defaults(func=cmd_bisim)

    p = sub.add_parser("gadget-verify", help="check the eight-vertex gadget")
    p.set_defaults(func=cmd_gadget_verify)

    p = sub.add_parser("generate", help="random instance")
    p.add_argument("kind", choices=["graph", "two-leaf", "digraph", "dag"])
    p.add_argument("--vertices", type=int, default=6)
    p.add_argument("--density", type=float, default=0.4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"extord: {exc}", file=sys.stderr)
        return USAGE
    except DefectError as exc:
        print(f"extord: defect: {exc}", file=sys.stderr)
        return DEFECT
    except ExtordError as exc:
        print(f"extord: {exc}", file=sys.stderr)
        return USAGE
    except ValueError as exc:
        print(f"extord: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
