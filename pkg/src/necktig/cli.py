"""Command-line entry point: ``necktig <subcommand> ...``.

Statistics go to stdout as one JSON object; payloads go to files. Exit
codes: 0 success, 1 failed check, 2 usage error, 3 input/output error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from . import __version__
from .baseline import greedy_baseline_cover
from .debruijn import NodeGraph
from .encoding import MODES, Encoded, cost_report, decode_cover, encode_cover, read_encoded
from .errors import DecodeError, EmptySpectrumError, FastaParseError, InvalidParameterError, NecktigError
from .eulertigs import eulertigs
from .family import gen_family
from .kmers import check_k, extract_spectrum, read_fasta, write_fasta
from .necklace import necklace_cover
from .pc_cover import brute_min_paths, eulertigs_pc_cover, greedy_pc_cover, matching_pc_cover
from .verify import (
    BRUTE_NECKLACE_LIMIT,
    brute_min_necklace_cost,
    check_necklace_cover,
    check_spss,
    random_instance,
    seed_from_env,
)

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

PC_SOURCES = {
    "matching": matching_pc_cover,
    "greedy": greedy_pc_cover,
    "eulertigs": eulertigs_pc_cover,
}


class _UsageError(Exception):
    pass


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _open_out(path: str | None):
    if path is None or path == "-":
        return None
    return open(path, "w", encoding="ascii", newline="\n")


def _build_cover(spectrum, source: str):
    g = NodeGraph(spectrum)
    if source == "baseline":
        return g, greedy_baseline_cover(g)
    return g, necklace_cover(g, PC_SOURCES[source](g))


def _cmd_build(args, baseline: bool = False) -> int:
    check_k(args.k)
    t0 = time.perf_counter()
    spectrum = extract_spectrum(read_fasta(args.input), args.k)
    _, cover = _build_cover(spectrum, "baseline" if baseline else args.pc_source)
    enc = encode_cover(cover, spectrum, args.mode)
    wall = time.perf_counter() - t0
    fh = _open_out(args.output)
    if fh is not None:
        with fh:
            fh.write(enc.to_text())
    report = cost_report(cover, args.k).as_dict()
    report.update(mode=args.mode, symbols_written=enc.symbol_count)
    if not args.no_timing:
        report["wall_seconds"] = round(wall, 6)
    _emit(report)
    return EXIT_OK


def _cmd_eulertigs(args) -> int:
    check_k(args.k)
    spectrum = extract_spectrum(read_fasta(args.input), args.k)
    res = eulertigs(spectrum, circuits_as_cycles=args.cycles)
    fh = _open_out(args.output)
    if fh is not None:
        with fh:
            res.write_fasta(fh)
    _emit(res.stats())
    return EXIT_OK


def _cmd_decode(args) -> int:
    with open(args.input, encoding="ascii") as fh:
        enc = read_encoded(fh)
    spectrum = decode_cover(enc)
    fh = _open_out(args.output)
    if fh is not None:
        with fh:
            write_fasta(((f"k{i}", s) for i, s in enumerate(spectrum.strings())), fh)
    out = {"k": enc.k, "mode": enc.mode, "n_k": len(spectrum)}
    status = EXIT_OK
    if args.check_against:
        expected = extract_spectrum(read_fasta(args.check_against), enc.k)
        rep = check_spss(spectrum.strings(), enc.k, expected)
        out["check"] = rep.as_dict()
        if not rep.ok:
            status = EXIT_CHECK
    _emit(out)
    return status


def _verify_one(strings: list[str], k: int, source: str) -> list[str]:
    """Run every exactness check on one input; returns failure messages."""
    problems: list[str] = []
    spectrum = extract_spectrum(strings, k)
    g, cover = _build_cover(spectrum, source)
    problems += check_necklace_cover(cover, g).problems
    rep = cost_report(cover, k)
    for mode in MODES:
        enc = encode_cover(cover, spectrum, mode)
        if decode_cover(enc) != spectrum:
            problems.append(f"{mode}: decoded spectrum differs")
        expected = rep.cost_dollar if mode == "dollar" else rep.cost_separator
        if enc.symbol_count != expected:
            problems.append(f"{mode}: {enc.symbol_count} symbols, formula says {expected}")
    eul = eulertigs(spectrum)
    if not check_spss(eul.strings, k, spectrum).ok:
        problems.append("eulertigs output is not a no-repetition SPSS")
    if source == "matching":
        if g.n <= 12 and matching_pc_cover(g).n_paths != brute_min_paths(g):
            problems.append("matching cover does not have the fewest paths")
        if g.n <= BRUTE_NECKLACE_LIMIT and rep.cost_dollar != brute_min_necklace_cost(g, k):
            problems.append("necklace cover cost is not minimal")
        if k >= 3 and rep.cost_dollar > eul.weight + 1:
            problems.append("necklace cover costs more than eulertigs + 1")
    return problems


def _cmd_verify(args) -> int:
    if args.input:
        if args.k is None:
            raise _UsageError("verify -i requires -k")
        check_k(args.k)
        inputs = [(read_fasta(args.input).sequences, args.k)]
    else:
        seed = seed_from_env(0) if args.seed is None else args.seed
        rng = random.Random(seed)
        inputs = [random_instance(rng, max_nodes=args.max_nodes) for _ in range(args.random)]
    failures = []
    for i, (strings, k) in enumerate(inputs):
        for msg in _verify_one(strings, k, args.pc_source):
            failures.append(f"instance {i} (k={k}): {msg}")
    _emit({"instances": len(inputs), "failures": len(failures), "messages": failures[:20]})
    return EXIT_CHECK if failures else EXIT_OK


def _cmd_gen_family(args) -> int:
    seqs = gen_family(args.k, args.sequence)
    fh = _open_out(args.output)
    if fh is None:
        write_fasta(seqs.records, sys.stdout)
    else:
        with fh:
            write_fasta(seqs.records, fh)
    return EXIT_OK


def _cmd_stats(args) -> int:
    with open(args.input, encoding="ascii") as fh:
        text = fh.read()
    if text.startswith("#necktig"):
        enc = Encoded.from_text(text)
        letters = enc.sigma_paren_count - enc.paren_count
        _emit(
            {
                "k": enc.k,
                "mode": enc.mode,
                "closed": len(enc.closed),
                "open": len(enc.open),
                "letters": letters,
                "parentheses": enc.paren_count,
                "symbols": enc.sigma_paren_count,
                "symbols_with_markers": enc.symbol_count,
            }
        )
        return EXIT_OK
    seqs = read_fasta(args.input)
    out = {"records": len(seqs), "bases": seqs.total_bases}
    if args.k is not None:
        check_k(args.k)
        out["n_k"] = len(extract_spectrum(seqs, args.k))
    _emit(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="necktig", description="Necklace-cover compression of k-mer sets.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add_build_args(sp, pc_source: bool):
        sp.add_argument("-k", type=int, required=True)
        sp.add_argument("-i", "--input", required=True, help="FASTA input, '-' for stdin")
        sp.add_argument("-o", "--output", help="encoded output file")
        sp.add_argument("--mode", choices=MODES, default="dollar")
        sp.add_argument("--no-timing", action="store_true", help="omit wall_seconds from the report")
        if pc_source:
            sp.add_argument("--pc-source", choices=sorted(PC_SOURCES), default="matching")

    add_build_args(sub.add_parser("build", help="k-mer set to necklace encoding"), True)
    add_build_args(sub.add_parser("baseline", help="greedy DFS necklaces"), False)

    sp = sub.add_parser("eulertigs", help="Eulertigs SPSS")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-i", "--input", required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("--cycles", action="store_true", help="report balanced components as circular strings")

    sp = sub.add_parser("decode", help="decode an encoded file to its k-mers")
    sp.add_argument("-i", "--input", required=True)
    sp.add_argument("-o", "--output", help="write the k-mers as FASTA")
    sp.add_argument("--check-against", metavar="FASTA")

    sp = sub.add_parser("verify", help="run exactness checks and oracles")
    sp.add_argument("-k", type=int)
    sp.add_argument("-i", "--input", help="FASTA input; random instances when omitted")
    sp.add_argument("--random", type=int, default=50, help="number of random instances")
    sp.add_argument("--seed", type=int, help="overrides the NECKTIG_SEED environment variable")
    sp.add_argument("--max-nodes", type=int, default=BRUTE_NECKLACE_LIMIT)
    sp.add_argument("--pc-source", choices=sorted(PC_SOURCES) + ["baseline"], default="matching")

    sp = sub.add_parser("gen-family", help="write the pendant-cycle family as FASTA")
    sp.add_argument("--k", "-k", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("--sequence", help="de Bruijn sequence of order k-2 to use")

    sp = sub.add_parser("stats", help="symbol counts of an encoded file, or FASTA input stats")
    sp.add_argument("-i", "--input", required=True)
    sp.add_argument("-k", type=int)
    return p


_COMMANDS = {
    "build": _cmd_build,
    "baseline": lambda a: _cmd_build(a, baseline=True),
    "eulertigs": _cmd_eulertigs,
    "decode": _cmd_decode,
    "verify": _cmd_verify,
    "gen-family": _cmd_gen_family,
    "stats": _cmd_stats,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (_UsageError, InvalidParameterError) as exc:
        print(f"necktig: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, FastaParseError, DecodeError, EmptySpectrumError) as exc:
        print(f"necktig: {exc}", file=sys.stderr)
        return EXIT_IO
    except NecktigError as exc:
        print(f"necktig: {exc}", file=sys.stderr)
        return EXIT_CHECK
