"""Command-line interface: analyze, oracle, check, gen, bench.

Exit codes: 0 success (complete graphs included), 2 unreadable or malformed
input (and oversized oracle instances), 3 input outside the class (not
connected / not chordal / not strictly chordal, witness on stderr),
4 oracle disagreement found by ``check``.  stdout carries only the report;
diagnostics and debug dumps go to stderr.
"""

from __future__ import annotations

import argparse
import gc
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import generator, oracle
from .chordal import build_clique_tree, minimal_vertex_separators
from .errors import (
    CompleteGraphError,
    GraphError,
    NotChordalError,
    NotConnectedError,
    NotStrictlyChordalError,
    ParseError,
    TooLargeError,
)
from .graph import Graph, connected_components, parse_graph, serialize_graph
from .recognition import build_cb
from .vulnerability import CASE_COMPLETE, analyze

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_IN_CLASS = 3
EXIT_MISMATCH = 4


def _load_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def _ids(vertices, g: Graph) -> list[int]:
    """Vertex set in the numbering of the input file, sorted."""
    return sorted(v + g.id_base for v in vertices)


def _toughness_doc(tau: Fraction | None):
    if tau is None:
        return "infinite"
    return {
        "num": tau.numerator,
        "den": tau.denominator,
        "decimal": f"{float(tau):g}",
    }


def report_document(g: Graph, report) -> dict:
    """JSON-ready mirror of a VulnerabilityReport, ids in file numbering."""
    sc = report.scattering_number
    return {
        "n": g.n,
        "m": g.m,
        "duplicate_edges_collapsed": g.duplicate_edge_count,
        "chordal": True,
        "strictly_chordal": True,
        "case": report.case,
        "clique_count": report.clique_count,
        "separators": [
            {
                "vertices": _ids(info.vertices, g),
                "mu": info.multiplicity,
                "boundary_cliques": info.boundary_count,
            }
            for info in report.separators
        ],
        "toughness": _toughness_doc(report.toughness),
        "tough_set": _ids(report.tough_set, g),
        "scattering": {
            "number": "undefined" if sc is None else sc,
            "set": _ids(report.scattering_set, g),
        },
        "timings_ms": {k: round(v * 1000, 3) for k, v in report.timings.items()},
    }


def _print_human(doc: dict) -> None:
    print(f"n={doc['n']} m={doc['m']} cliques={doc['clique_count']}"
          f" (duplicate edges collapsed: {doc['duplicate_edges_collapsed']})")
    print(f"case: {doc['case']}")
    tau = doc["toughness"]
    if tau == "infinite":
        print("toughness: infinite (complete graph)")
    else:
        print(f"toughness: {tau['num']}/{tau['den']} (= {tau['decimal']})"
              f"  tough set: {doc['tough_set']}")
    sc = doc["scattering"]
    if sc["number"] == "undefined":
        print("scattering number: undefined (complete graph)")
    else:
        print(f"scattering number: {sc['number']}  scattering set: {sc['set']}")
    if doc["separators"]:
        print("separators (vertices | mu | boundary cliques):")
        for row in doc["separators"]:
            print(f"  {row['vertices']} | {row['mu']} | {row['boundary_cliques']}")
    stages = "  ".join(f"{k}={v}" for k, v in doc["timings_ms"].items())
    print(f"timings_ms: {stages}")


def _dump_structures(g: Graph, dump_ct: bool, dump_cb: bool) -> None:
    ct = build_clique_tree(g)
    base = g.id_base
    if dump_ct:
        for q in range(ct.n_cliques):
            members = " ".join(str(v + base) for v in sorted(ct.clique(q).tolist()))
            print(f"clique {q}: {members}", file=sys.stderr)
        for c, p, sep in ct.tree_edges:
            members = " ".join(str(v + base) for v in sorted(sep))
            print(f"edge {c} - {p} separator: {members}", file=sys.stderr)
    if dump_cb:
        seps = minimal_vertex_separators(ct)
        print(build_cb(ct, seps).dot(), file=sys.stderr)


def _print_class_error(exc, g: Graph) -> int:
    """Diagnose NotConnected/NotChordal/NotStrictlyChordal with witnesses in
    the input file's numbering."""
    base = g.id_base
    if isinstance(exc, NotConnectedError):
        print(f"not connected: {exc}", file=sys.stderr)
    elif isinstance(exc, NotChordalError):
        print(f"not chordal: {exc}", file=sys.stderr)
        if exc.cycle is not None:
            cycle = " ".join(str(v + base) for v in exc.cycle)
            print(f"chordless cycle ({len(exc.cycle)} vertices): {cycle}", file=sys.stderr)
    else:
        print(f"not strictly chordal: {exc}", file=sys.stderr)
        if exc.vertex is not None:
            print(f"witness vertex: {exc.vertex + base}", file=sys.stderr)
        if exc.separators is not None:
            a, b = exc.separators
            print(f"overlapping separators: {sorted(v + base for v in a)}"
                  f" and {sorted(v + base for v in b)}", file=sys.stderr)
    return EXIT_NOT_IN_CLASS


def cmd_analyze(args) -> int:
    g = _load_graph(args.path)
    try:
        report = analyze(g)
    except (NotConnectedError, NotChordalError, NotStrictlyChordalError) as exc:
        return _print_class_error(exc, g)
    if args.dump_cliquetree or args.dump_cb:
        _dump_structures(g, args.dump_cliquetree, args.dump_cb)
    doc = report_document(g, report)
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        _print_human(doc)
    return EXIT_OK


def _oracle_result_doc(result, g, kind):
    if kind == "toughness":
        value = {"num": result.value.numerator, "den": result.value.denominator,
                 "decimal": f"{float(result.value):g}"}
    else:
        value = result.value
    return {
        "value": value,
        "witness": _ids(result.witness, g),
        "subsets_examined": result.subsets_examined,
    }


def cmd_oracle(args) -> int:
    g = _load_graph(args.path)
    doc = {"n": g.n, "m": g.m, "mode": "separator_unions" if args.class_fast else "full"}
    try:
        if args.class_fast:
            ct = build_clique_tree(g)
            seps = [info.vertices for info in minimal_vertex_separators(ct)]
            sc = oracle.restricted_scattering(g, seps)
            tau = oracle.restricted_toughness(g, seps)
        else:
            sc = oracle.brute_force_scattering(g, cap=args.cap)
            tau = oracle.brute_force_toughness(g, cap=args.cap)
        doc["scattering"] = _oracle_result_doc(sc, g, "scattering")
        doc["toughness"] = _oracle_result_doc(tau, g, "toughness")
    except CompleteGraphError:
        doc["scattering"] = {"value": "undefined", "witness": []}
        doc["toughness"] = {"value": "infinite", "witness": []}
    except (NotConnectedError, NotChordalError, NotStrictlyChordalError) as exc:
        return _print_class_error(exc, g)
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def _random_capped_graph(seed: int, trial: int, max_n: int):
    """Deterministic small strictly chordal instance with n <= max_n."""
    attempt = 0
    while True:
        rng = random.Random((seed * 1_000_003 + trial) * 1_000_003 + attempt)
        params = generator.GenParams(
            seed=rng.getrandbits(62),
            block_count=rng.randint(1, 4),
            max_block_size=rng.randint(2, 5),
            max_twins=rng.randint(0, 3),
        )
        g = generator.random_strictly_chordal(params)
        if 2 <= g.n <= max_n:
            return g, params
        attempt += 1


def _check_one(g: Graph, max_n: int):
    """None if analyze() agrees with both oracles on g, else a message."""
    report = analyze(g)
    try:
        sc_ref = oracle.brute_force_scattering(g, cap=max_n)
    except CompleteGraphError:
        if report.case != CASE_COMPLETE:
            return f"oracle says complete, analyze says {report.case}"
        return None
    if report.case == CASE_COMPLETE:
        return "analyze says complete, oracle found a separator"
    tau_ref = oracle.brute_force_toughness(g, cap=max_n)
    if report.scattering_number != sc_ref.value:
        return f"scattering {report.scattering_number} != oracle {sc_ref.value}"
    if report.toughness != tau_ref.value:
        return f"toughness {report.toughness} != oracle {tau_ref.value}"
    count, _ = connected_components(g, report.scattering_set)
    if count - len(report.scattering_set) != report.scattering_number:
        return "scattering set does not witness the reported number"
    count, _ = connected_components(g, report.tough_set)
    if count < 2 or Fraction(len(report.tough_set), count) != report.toughness:
        return "tough set does not witness the reported toughness"
    return None


def cmd_check(args) -> int:
    cap = oracle.oracle_cap(None)
    if args.max_n > cap:
        raise TooLargeError(f"--max-n {args.max_n} exceeds the oracle cap {cap}")
    for trial in range(args.count):
        g, params = _random_capped_graph(args.seed, trial, args.max_n)
        message = _check_one(g, args.max_n)
        if message is not None:
            out = Path(args.dump_dir) / f"counterexample-trial{trial}.gr"
            out.write_text(serialize_graph(g))
            print(f"trial {trial} ({params}): {message}", file=sys.stderr)
            print(f"counterexample written to {out}", file=sys.stderr)
            return EXIT_MISMATCH
    print(f"{args.count}/{args.count} agree")
    return EXIT_OK


def cmd_gen(args) -> int:
    params = generator.GenParams(
        seed=args.seed,
        block_count=args.blocks,
        max_block_size=args.max_block,
        max_twins=args.max_twins,
        target_n=args.target_n,
    )
    g = generator.random_strictly_chordal(params)
    text = serialize_graph(g)
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote n={g.n} m={g.m} to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    if not sizes:
        raise ParseError("--sizes needs a comma-separated list of target sizes")
    # warm up interpreter and numpy before timing
    warm = generator.random_strictly_chordal(
        generator.GenParams(seed=args.seed, target_n=2000,
                            max_block_size=args.max_block, max_twins=args.max_twins))
    analyze(warm)
    print(f"{'target':>9} {'n':>9} {'m':>10} {'case':>11} {'time_s':>9} "
          f"{'us_per_nm':>10} {'ratio':>6}")
    prev = None
    for i, size in enumerate(sizes):
        params = generator.GenParams(seed=args.seed + i, target_n=size,
                                     max_block_size=args.max_block,
                                     max_twins=args.max_twins)
        g = generator.random_strictly_chordal(params)
        best = None
        for _ in range(max(1, args.repeat)):
            # timeit-style: collector suspended while the clock runs
            gc_was_enabled = gc.isenabled()
            gc.disable()
            try:
                tick = time.perf_counter()
                report = analyze(g)
                elapsed = time.perf_counter() - tick
            finally:
                if gc_was_enabled:
                    gc.enable()
            if best is None or elapsed < best:
                best = elapsed
        ratio = "" if prev is None else f"{best / prev:.2f}"
        prev = best
        print(f"{size:>9} {g.n:>9} {g.m:>10} {report.case:>11} {best:>9.3f} "
              f"{best / (g.n + g.m) * 1e6:>10.3f} {ratio:>6}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strictchordal",
        description="Toughness, scattering number and scattering sets of "
                    "strictly chordal graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a graph file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--dump-cliquetree", action="store_true",
                   help="dump cliques and tree edges to stderr")
    p.add_argument("--dump-cb", action="store_true",
                   help="dump the clique/separator tree to stderr")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("oracle", help="brute-force scattering number and toughness")
    p.add_argument("path")
    p.add_argument("--cap", type=int, default=None,
                   help=f"size cap (default {oracle.DEFAULT_CAP}, "
                        f"env {oracle.CAP_ENV_VAR} overrides)")
    p.add_argument("--class-fast", action="store_true",
                   help="restrict candidates to unions of minimal vertex separators")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="compare analyze against the oracles on random graphs")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--dump-dir", default=".", help="where to write counterexamples")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a random strictly chordal graph")
    p.add_argument("--blocks", type=int, default=8)
    p.add_argument("--max-block", type=int, default=4)
    p.add_argument("--max-twins", type=int, default=2)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--target-n", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time analyze() on generated graphs")
    p.add_argument("--sizes", required=True, help="comma-separated target sizes")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-block", type=int, default=6)
    p.add_argument("--max-twins", type=int, default=1)
    p.add_argument("--repeat", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, TooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotConnectedError as exc:
        print(f"not connected: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_CLASS
    except NotChordalError as exc:
        print(f"not chordal: {exc}", file=sys.stderr)
        if exc.cycle is not None:
            print(f"chordless cycle: {exc.cycle}", file=sys.stderr)
        return EXIT_NOT_IN_CLASS
    except NotStrictlyChordalError as exc:
        print(f"not strictly chordal: {exc}", file=sys.stderr)
        if exc.separators is not None:
            a, b = exc.separators
            print(f"overlapping separators: {sorted(a)} and {sorted(b)}", file=sys.stderr)
        return EXIT_NOT_IN_CLASS
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())
