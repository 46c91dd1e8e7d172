"""Command-line front end.

Subcommands: explore, eval, verify, oracle-check, kostant.  Exit codes:
0 success / verification passed, 1 verification failure, 2 usage or I/O
error.  Output is UTF-8, integers are decimal, and an infinite valuation
prints as "inf".  Symbolic runs are deterministic: identical flags give
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import graph as graphmod
from . import oracle as oraclemod
from .datum import CartanData, datum_from_word
from .fock import vec_val
from .laurent import INF
from .maya import ChargedPartition, MayaDiagram, from_partition

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    n: int
    depth: int = 0
    max_boxes: int | None = None
    mode: str = oraclemod.SYMBOLIC
    seed: int | None = None
    output: str | None = None
    format: str = "json"
    threads: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("rank must be at least 2")
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        if self.mode not in (oraclemod.SYMBOLIC, oraclemod.RANDOM):
            raise ValueError("mode must be symbolic or random")
        if (self.seed is not None) != (self.mode == oraclemod.RANDOM):
            raise ValueError("seed is required exactly when mode is random")
        if self.format not in ("json", "dot"):
            raise ValueError("format must be json or dot")
        if self.threads < 1:
            raise ValueError("threads must be positive")


def _parse_word(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(piece) for piece in text.split(","))


def _load_diagram(path):
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if "parts" in data:
        return from_partition(
            ChargedPartition(tuple(int(p) for p in data["parts"]), int(data.get("charge", 0)))
        )
    return MayaDiagram.from_json(data)


def _write(cfg, blob):
    if cfg.output:
        with open(cfg.output, "wb") as handle:
            handle.write(blob)
    else:
        sys.stdout.buffer.write(blob)
        sys.stdout.flush()


def _fmt(value):
    return "inf" if value == INF else str(value)


def cmd_explore(cfg):
    graph = graphmod.explore(CartanData(cfg.n), cfg.depth, cfg.max_boxes)
    _write(cfg, graphmod.export(graph, cfg.format))
    return EXIT_OK


def cmd_eval(cfg, word, diagram_path):
    datum = datum_from_word(CartanData(cfg.n), word)
    gamma = _load_diagram(diagram_path)
    print(datum.eval(gamma))
    return EXIT_OK


def cmd_verify(cfg, graph_path=None):
    if graph_path is not None:
        with open(graph_path, "rb") as handle:
            graph = graphmod.load_json(handle.read())
        if graph.n != cfg.n:
            print("graph file has rank %d, expected %d" % (graph.n, cfg.n))
            return EXIT_FAIL
    else:
        graph = graphmod.explore(CartanData(cfg.n), cfg.depth, cfg.max_boxes)
    violations = graphmod.check_axioms(graph)
    census = graphmod.weight_census(graph)
    cartan = CartanData(cfg.n)
    print("weight census (beta: nodes expected):")
    failures = list(violations)
    for beta in graphmod.lattice_points(cfg.n, graph.depth):
        expected = graphmod.kostant(cartan, beta)
        got = census.get(beta, 0)
        mark = "ok" if got == expected else "MISMATCH"
        print("  %r: %d %d %s" % (beta, got, expected, mark))
        if got != expected:
            failures.append("census mismatch at %r: %d != %d" % (beta, got, expected))
    for line in violations:
        print("violation: %s" % line)
    if failures:
        print("verify: FAIL (%d problems)" % len(failures))
        return EXIT_FAIL
    print("verify: PASS (%d nodes)" % len(graph.nodes))
    return EXIT_OK


def cmd_oracle_check(cfg, word):
    from .datum import canonical_diagrams

    cartan = CartanData(cfg.n)
    datum = datum_from_word(cartan, word)
    max_boxes = cfg.max_boxes if cfg.max_boxes is not None else 6
    diagrams = [
        from_partition(ChargedPartition(parts, charge))
        for parts, charge in canonical_diagrams(cfg.n, max_boxes)
    ]
    if cfg.threads > 1:
        group = oraclemod.generic_element(datum)
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            valuations = list(
                pool.map(
                    lambda g: vec_val(oraclemod.d_gamma(group, g, cfg.mode, cfg.seed)),
                    diagrams,
                )
            )
        results = []
        ok = True
        for gamma, valuation in zip(diagrams, valuations):
            recursive = datum.eval(gamma)
            match = recursive == valuation
            ok = ok and match
            results.append({"recursive": recursive, "oracle": _fmt(valuation), "match": match})
        report = {
            "word": list(datum.word),
            "mode": cfg.mode,
            "seed": cfg.seed,
            "results": results,
            "pass": ok,
        }
    else:
        report = oraclemod.compare(datum, diagrams, cfg.mode, cfg.seed)
    _write(cfg, oraclemod.report_to_json(report).encode())
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_kostant(cfg, beta):
    print(graphmod.kostant(CartanData(cfg.n), beta))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser():
    parser = _Parser(prog="mayacrystal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, depth=False):
        p.add_argument("--rank", type=int, required=True, help="rank n (at least 2)")
        if depth:
            p.add_argument("--depth", type=int, default=0)
        p.add_argument("--max-boxes", type=int, default=None)
        p.add_argument("--mode", choices=["symbolic", "random"], default="symbolic")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--output", default=None)
        p.add_argument("--format", choices=["json", "dot"], default="json")
        p.add_argument("--threads", type=int, default=1)

    common(sub.add_parser("explore", help="explore and export the crystal graph"), depth=True)

    p_eval = sub.add_parser("eval", help="evaluate a word's datum at a diagram")
    common(p_eval)
    p_eval.add_argument("--word", default="", help="comma-separated residues, e.g. 0,1,0")
    p_eval.add_argument("--diagram-file", required=True)

    p_verify = sub.add_parser("verify", help="run the axiom and census suites")
    common(p_verify, depth=True)
    p_verify.add_argument("--graph-file", default=None, help="check a stored export instead")

    p_oracle = sub.add_parser("oracle-check", help="cross-check a word against the oracle")
    common(p_oracle)
    p_oracle.add_argument("--word", default="")

    p_kostant = sub.add_parser("kostant", help="Kostant partition count of beta")
    common(p_kostant)
    p_kostant.add_argument("--beta", required=True, help="comma-separated coordinates")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            n=args.rank,
            depth=getattr(args, "depth", 0),
            max_boxes=args.max_boxes,
            mode=args.mode,
            seed=args.seed,
            output=args.output,
            format=args.format,
            threads=args.threads,
        )
    except ValueError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "explore":
            return cmd_explore(cfg)
        if args.command == "eval":
            return cmd_eval(cfg, _parse_word(args.word), args.diagram_file)
        if args.command == "verify":
            return cmd_verify(cfg, args.graph_file)
        if args.command == "oracle-check":
            return cmd_oracle_check(cfg, _parse_word(args.word))
        if args.command == "kostant":
            return cmd_kostant(cfg, _parse_word(args.beta))
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
