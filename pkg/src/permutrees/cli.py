"""Command line: ``permutrees <verb> [options]``.

Exit status is 0 on success, 1 when a verification or internal invariant
fails, 2 on bad usage or input, and 3 when a size bound refuses the work.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .core import as_decoration, validate
from .correspond import p_symbol
from .enumeration import DEFAULT_MAX_N, count, enumerate_permutrees
from .errors import PermutreeError, SizeBound
from .words import parse_permutation

COUNT_METHODS = ("gap_recurrence", "brute", "root_sum", "topmost_sum", "block_product")


class InvariantFailure(Exception):
    """An internal consistency check failed; the message names it."""


def header(decoration: Optional[str]) -> str:
    return f"permutrees {__version__} decoration={decoration if decoration is not None else '-'}"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json(payload: dict, decoration: Optional[str]) -> str:
    return json.dumps({"header": header(decoration), **payload}, indent=2, sort_keys=False) + "\n"


def _csv(rows: list[list], decoration: Optional[str]) -> str:
    buffer = io.StringIO()
    buffer.write(f"# {header(decoration)}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _perm_text(perm) -> str:
    return "".join(map(str, perm)) if len(perm) < 10 else ",".join(map(str, perm))


def _checked_trees(word: str, max_n: int):
    trees = enumerate_permutrees(word, max_n=max_n)
    for t in trees:
        problems = validate(t)
        if problems:
            raise InvariantFailure(f"tree validation: {t}: {problems[0]}")
    return trees


# verbs -----------------------------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    from .lattice import class_max, class_min

    word = as_decoration(args.decoration).word
    trees = _checked_trees(word, args.max_n)
    if args.format == "csv":
        rows = [["index", "class_min", "class_max", "edges"]]
        for k, t in enumerate(trees):
            rows.append([k, _perm_text(class_min(t)), _perm_text(class_max(t)), " ".join(f"{a}>{b}" for a, b in t.edges)])
        _emit(_csv(rows, word), args.out)
    elif args.format == "json":
        _emit(_json({"decoration": word, "count": len(trees), "trees": [t.to_dict() for t in trees]}, word), args.out)
    else:
        raise PermutreeError(f"enumerate does not write {args.format}")
    return 0


def cmd_count(args) -> int:
    word = as_decoration(args.decoration).word
    value = count(word, args.method, max_n=args.max_n)
    _emit(f"{value}\n", args.out)
    return 0


def cmd_lattice(args) -> int:
    from .lattice import class_min, rotation_graph

    word = as_decoration(args.decoration).word
    if len(word) > args.max_n:
        raise SizeBound(f"n = {len(word)} exceeds the bound {args.max_n}")
    graph = rotation_graph(word)
    names = [_perm_text(class_min(t)) for t in graph.nodes]
    if len(graph.sources()) != 1 or len(graph.sinks()) != 1:
        raise InvariantFailure("rotation graph must have one source and one sink")
    if args.format == "json":
        payload = {
            "decoration": word,
            "nodes": [{"id": k, "class_min": names[k], "tree": t.to_dict()} for k, t in enumerate(graph.nodes)],
            "arcs": [{"source": a, "target": b, "edge": list(e)} for a, b, e in graph.arcs],
        }
        _emit(_json(payload, word), args.out)
    elif args.format == "dot":
        lines = [f"// {header(word)}", "digraph permutree_lattice {"]
        lines += [f'  n{k} [label="{t}", class_min="{names[k]}"];' for k, t in enumerate(graph.nodes)]
        lines += [f'  n{a} -> n{b} [label="({e[0]},{e[1]})"];' for a, b, e in graph.arcs]
        lines.append("}")
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "csv":
        rows = [["source", "target", "source_class_min", "target_class_min", "edge"]]
        rows += [[a, b, names[a], names[b], f"({e[0]},{e[1]})"] for a, b, e in graph.arcs]
        _emit(_csv(rows, word), args.out)
    else:
        raise PermutreeError(f"lattice does not write {args.format}")
    return 0


def cmd_polytope(args) -> int:
    from .geometry import polytope

    word = as_decoration(args.decoration).word
    poly = polytope(word, max_n=args.max_n)
    for t, point in poly.vertices.items():
        if not poly.satisfies(point):
            raise InvariantFailure(f"vertex of {t} violates a facet")
    order = sorted(poly.vertices)
    points = [poly.vertices[t] for t in order]
    facets = sorted(poly.facets.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    if args.format == "json":
        _emit(_json(poly.to_dict(), word), args.out)
    elif args.format == "off":
        # Facets list the indices of the vertices they contain, in increasing order.
        lines = ["OFF", f"# {header(word)}", f"{len(points)} {len(facets)} 0"]
        lines += [" ".join(map(str, p)) for p in points]
        for block, rhs in facets:
            members = [k for k, p in enumerate(points) if sum(p[i - 1] for i in block) == rhs]
            lines.append(" ".join(map(str, [len(members), *members])))
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "csv":
        rows = [["kind", "index", "data"]]
        rows += [["vertex", k, " ".join(map(str, p))] for k, p in enumerate(points)]
        rows += [["facet", k, f"{' '.join(map(str, sorted(b)))} >= {rhs}"] for k, (b, rhs) in enumerate(facets)]
        _emit(_csv(rows, word), args.out)
    else:
        raise PermutreeError(f"polytope does not write {args.format}")
    return 0


def _parse_tree(text: str):
    """``213@ouo`` names the permutree of that decorated permutation."""
    if "@" not in text:
        raise PermutreeError(f"expected PERMUTATION@DECORATION, got {text!r}")
    perm, word = text.split("@", 1)
    return p_symbol(parse_permutation(perm), word)


def cmd_hopf(args) -> int:
    from .hopf import P_in_F, fq_coproduct, ipt, p_coproduct_sum, p_multiply_all, tree_name

    trees = [_parse_tree(x) for x in args.tree]
    if not trees:
        raise PermutreeError("give at least one --tree")
    if sum(t.n for t in trees) > args.max_n:
        raise SizeBound(f"total size exceeds the bound {args.max_n}")
    words = "".join(t.decoration.word for t in trees)
    if args.op == "product":
        result = p_multiply_all(trees)
        name = tree_name
        if args.basis == "F":
            from .hopf import to_F

            result, name = to_F(result), str
    elif args.op == "coproduct":
        if len(trees) != 1:
            raise PermutreeError("coproduct takes one --tree")
        if args.basis == "F":
            result = fq_coproduct(P_in_F(trees[0]))
            name = lambda pair: f"{pair[0]} ⊗ {pair[1]}"  # noqa: E731
        else:
            result = p_coproduct_sum(trees[0])
            name = lambda pair: f"{tree_name(pair[0])} ⊗ {tree_name(pair[1])}"  # noqa: E731
    elif args.op == "ipt":
        if len(trees) != 1:
            raise PermutreeError("ipt takes one --tree")
        series = ipt(trees[0], args.degree)
        terms = sorted(series.coeffs.items())
        if args.format == "json":
            payload = {"tree": trees[0].to_dict(), "degree": args.degree, "terms": [[list(e), c] for e, c in terms]}
            _emit(_json(payload, words), args.out)
        else:
            body = " + ".join(("" if c == 1 else f"{c}·") + _monomial(e) for e, c in terms)
            _emit(f"# {header(words)}\n{body}\n", args.out)
        return 0
    else:
        raise PermutreeError(f"unknown operation {args.op!r}")
    if args.format == "json":
        payload = {"op": args.op, "basis": args.basis, "terms": sorted(([name(k), c] for k, c in result.items()))}
        _emit(_json(payload, words), args.out)
    else:
        _emit(f"# {header(words)}\n{result.format(name)}\n", args.out)
    return 0


def _monomial(exponent) -> str:
    parts = [f"x{i + 1}" + ("" if e == 1 else f"^{e}") for i, e in enumerate(exponent) if e]
    return "*".join(parts) if parts else "1"


def cmd_schroder(args) -> int:
    from . import schroder as sc
    from .enumeration import schroder_count

    word = as_decoration(args.decoration).word
    if args.op == "count":
        _emit(f"{schroder_count(word, max_n=args.max_n)}\n", args.out)
        return 0
    if len(word) > args.max_n:
        raise SizeBound(f"n = {len(word)} exceeds the bound {args.max_n}")
    if args.op == "insert":
        if not args.partition:
            raise PermutreeError("insert needs --partition")
        tree = sc.p_star(args.partition, word)
        problems = sc.validate_schroder(tree)
        if problems:
            raise InvariantFailure(f"Schröder tree validation: {problems[0]}")
        if args.format == "json":
            _emit(_json({"partition": args.partition, "tree": tree.to_dict()}, word), args.out)
        else:
            _emit(f"# {header(word)}\n{tree}\n", args.out)
        return 0
    trees = sc.schroder_permutrees(word)
    if args.op == "enumerate":
        if args.format == "json":
            _emit(_json({"decoration": word, "count": len(trees), "trees": [t.to_dict() for t in trees]}, word), args.out)
        else:
            rows = [["index", "blocks", "edges"]]
            for k, t in enumerate(trees):
                blocks = " ".join("".join(map(str, b)) for b in t.blocks)
                rows.append([k, blocks, len(t.edges)])
            _emit(_csv(rows, word), args.out)
        return 0
    if args.op == "lattice":
        poset = sc.schroder_lattice(word)
        names = ["|".join("".join(map(str, part)) for part in sc.canonical_partition(t)) for t in poset.elements]
        covers = poset.covers()
        if args.format == "dot":
            lines = [f"// {header(word)}", "digraph schroder_lattice {"]
            lines += [f'  n{k} [label="{name}"];' for k, name in enumerate(names)]
            lines += [f"  n{a} -> n{b};" for a, b in covers]
            lines.append("}")
            _emit("\n".join(lines) + "\n", args.out)
        elif args.format == "json":
            payload = {"nodes": [{"id": k, "partition": name} for k, name in enumerate(names)], "covers": [list(c) for c in covers]}
            _emit(_json(payload, word), args.out)
        else:
            rows = [["lower", "upper"]] + [[names[a], names[b]] for a, b in covers]
            _emit(_csv(rows, word), args.out)
        return 0
    raise PermutreeError(f"unknown operation {args.op!r}")


def cmd_verify(args) -> int:
    from .verify import SUITE_IDS, SUITES, run_suite

    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES and name not in SUITE_IDS:
            raise PermutreeError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)} or 1..{len(SUITES)}")
    failures = 0
    for name in names:
        result = run_suite(name, args.n)
        print(result.line(), flush=True)
        for note in result.notes:
            print(f"    {note}")
        failures += not result.passed
    print(f"{len(names) - failures}/{len(names)} passed")
    return 1 if failures else 0


# parser ----------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permutrees", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"permutrees {__version__}")
    verbs = parser.add_subparsers(dest="verb", required=True)

    def common(sub, formats=("json",), needs_decoration=True):
        if needs_decoration:
            sub.add_argument("--decoration", required=True, help="word over o, d, u, b")
        sub.add_argument("--format", choices=formats, default=formats[0])
        sub.add_argument("--out", help="write here instead of standard output")
        sub.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="refuse larger sizes (exit 3)")

    sub = verbs.add_parser("enumerate", help="list every permutree of a decoration")
    common(sub, ("json", "csv"))
    sub.set_defaults(run=cmd_enumerate)

    sub = verbs.add_parser("count", help="number of permutrees")
    common(sub)
    sub.add_argument("--method", choices=COUNT_METHODS, default="gap_recurrence")
    sub.set_defaults(run=cmd_count)

    sub = verbs.add_parser("lattice", help="the rotation lattice")
    common(sub, ("json", "dot", "csv"))
    sub.set_defaults(run=cmd_lattice)

    sub = verbs.add_parser("polytope", help="vertices and facets of the permutreehedron")
    common(sub, ("json", "off", "csv"))
    sub.set_defaults(run=cmd_polytope)

    sub = verbs.add_parser("hopf", help="products, coproducts and point transforms")
    common(sub, ("text", "json"), needs_decoration=False)
    sub.add_argument("--op", choices=("product", "coproduct", "ipt"), required=True)
    sub.add_argument("--tree", action="append", default=[], help="PERMUTATION@DECORATION, repeatable")
    sub.add_argument("--basis", choices=("P", "F"), default="P")
    sub.add_argument("--degree", type=int, default=6)
    sub.set_defaults(run=cmd_hopf)

    sub = verbs.add_parser("schroder", help="Schröder permutrees")
    common(sub, ("text", "json", "csv", "dot"))
    sub.add_argument("--op", choices=("count", "enumerate", "insert", "lattice"), default="count")
    sub.add_argument("--partition", help='ordered partition such as "125|37|46"')
    sub.set_defaults(run=cmd_schroder)

    sub = verbs.add_parser("verify", help="run the acceptance checks")
    sub.add_argument("--suite", default="all")
    sub.add_argument("--n", type=int, default=None, help="size bound for the chosen suites")
    sub.set_defaults(run=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except SizeBound as exc:
        print(f"permutrees: size bound: {exc}", file=sys.stderr)
        return 3
    except InvariantFailure as exc:
        print(f"permutrees: invariant failed: {exc}", file=sys.stderr)
        return 1
    except PermutreeError as exc:
        print(f"permutrees: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
