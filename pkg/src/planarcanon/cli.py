"""Batch command-line front end.

Subcommands: canon, iso, check, regularize, gen, uxs.  All results go to
standard output, diagnostics to standard error.  Every run is deterministic
given its flags; seeds default to 0.  Exit status: 0 success, 2 input or
usage error; iso and check additionally use 1 for a negative result.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .canon import canon, contract
from .connectivity import is_3_connected
from .corpus import gen_triangulation
from .embedding import embed_planar, is_planar
from .errors import PlanarCanonError
from .exploration import (
    DEGREE_BOUND,
    ExplorationSequence,
    ensure_exploring,
    provide_sequence,
    verify_uxs,
    walk,
)
from .graphs import DirectedEdge, Embedding, Graph, euler_verify
from .iso import isomorphic
from .regularize import regularize
from .textio import format_graph, parse_graph


def _load(path: str) -> tuple[Graph, Embedding | None, dict | None]:
    return parse_graph(Path(path).read_text())


def _embedding_for(g: Graph, rho: Embedding | None) -> Embedding:
    """Honor an embedding stored in the input file; otherwise compute one."""
    if rho is None:
        return embed_planar(g)
    if not euler_verify(g, rho):
        raise PlanarCanonError("rotations block is not a sphere embedding")
    return rho


def _expanded_code(g: Graph, rho: Embedding | None, seed: int):
    if not is_3_connected(g):
        raise PlanarCanonError("input graph is not 3-connected")
    c = regularize(g, _embedding_for(g, rho))
    start = DirectedEdge(0, c.embedding.rotation[0][0])
    seq = ensure_exploring(c, start, seed)
    code = canon(c, c.embedding, start, seq)
    if code is None:
        raise AssertionError("ensure_exploring returned a non-covering sequence")
    return code


def _cmd_canon(args: argparse.Namespace) -> int:
    g, rho, _ = _load(args.graphfile)
    code = _expanded_code(g, rho, args.seed)
    if not args.colored:
        code = contract(code)
    print(code.serialize())
    return 0


def _cmd_iso(args: argparse.Namespace) -> int:
    g1, rho1, _ = _load(args.file1)
    g2, rho2, _ = _load(args.file2)
    result = isomorphic(g1, g2, args.seed, rho1=rho1, rho2=rho2)
    if result.is_isomorphic:
        print("isomorphic")
        if args.emit_mapping and result.mapping is not None:
            for u in sorted(result.mapping):
                print(f"{u} -> {result.mapping[u]}")
        return 0
    print("not isomorphic")
    return 1


def _cmd_check(args: argparse.Namespace) -> int:
    if not (args.planar or args.three_connected):
        print("error: nothing to check; pass --planar and/or --three-connected", file=sys.stderr)
        return 2
    g, _, _ = _load(args.graphfile)
    all_hold = True
    if args.planar:
        ok = is_planar(g)
        print("planar" if ok else "not planar")
        all_hold &= ok
    if args.three_connected:
        ok = is_3_connected(g)
        print("3-connected" if ok else "not 3-connected")
        all_hold &= ok
    return 0 if all_hold else 1


def _cmd_regularize(args: argparse.Namespace) -> int:
    g, rho, _ = _load(args.graphfile)
    c = regularize(g, _embedding_for(g, rho))
    sys.stdout.write(format_graph(c.graph, c.embedding, c.color))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    sys.stdout.write(format_graph(gen_triangulation(args.n, args.seed)))
    return 0


def _cmd_uxs_verify(args: argparse.Namespace) -> int:
    if args.length is not None:
        seq = ExplorationSequence.seeded(args.seed, args.length, args.n)
    else:
        seq = provide_sequence(args.n, args.seed)
    print("universal" if verify_uxs(args.n, seq) else "not universal")
    return 0


def _parse_start(text: str) -> DirectedEdge:
    parts = text.split(",")
    if len(parts) != 2:
        raise PlanarCanonError(f"--start expects 'u,v', got {text!r}")
    try:
        return DirectedEdge(int(parts[0]), int(parts[1]))
    except ValueError:
        raise PlanarCanonError(f"--start expects integers, got {text!r}") from None


def _cmd_uxs_walk(args: argparse.Namespace) -> int:
    g, rho, _ = _load(args.graphfile)
    digits = "".join(Path(args.seq_file).read_text().split())
    if not digits.isdigit():
        raise PlanarCanonError("sequence file must hold one ASCII digit per symbol")
    seq = ExplorationSequence.explicit(digits)
    transcript = walk((g, _embedding_for(g, rho)), _parse_start(args.start), seq)
    print(" ".join(map(str, transcript)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarcanon",
        description="Canonical codes and isomorphism tests for 3-connected planar graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="print the canonical code of a graph")
    p.add_argument("graphfile")
    p.add_argument("--colored", action="store_true", help="print the expanded colored code")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("iso", help="decide isomorphism of two graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit-mapping", action="store_true")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("check", help="validate planarity / 3-connectivity")
    p.add_argument("graphfile")
    p.add_argument("--planar", action="store_true")
    p.add_argument("--three-connected", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("regularize", help="print the expanded 3-regular colored graph")
    p.add_argument("graphfile")
    p.set_defaults(func=_cmd_regularize)

    p = sub.add_parser("gen", help="generate a seeded planar triangulation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("uxs", help="exploration sequence utilities")
    usub = p.add_subparsers(dest="uxs_command", required=True)
    pv = usub.add_parser("verify", help="exhaustively verify a sequence at small n")
    pv.add_argument("--n", type=int, required=True)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--length", type=int, default=None)
    pv.set_defaults(func=_cmd_uxs_verify)
    pw = usub.add_parser("walk", help="run a walk from a sequence file")
    pw.add_argument("graphfile")
    pw.add_argument("--start", required=True, help="directed start edge as 'u,v'")
    pw.add_argument("--seq-file", required=True)
    pw.set_defaults(func=_cmd_uxs_walk)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PlanarCanonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
