#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-19 00:04:51 krylon>
#
# /data/code/python/circtotal/src/circtotal/main.py
# created on 11. 10. 2025
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.main

(c) 2025 Benjamin Walkenhorst

Command line interface. Results go to stdout, log messages to stderr.

Exit codes: 0 on success, 1 if the result is negative (invalid
certificate, unexpected feasibility outcome, a bracket instead of an exact
value, a failed claim), 2 on usage and input errors.
"""


import argparse
import logging
import pathlib
import sys
from typing import Final, Optional

from circtotal import common
from circtotal.colouring import (ColouringError, check, decimal_str,
                                 frac_str)
from circtotal.constructions import (ConstructionFault, ConstructionIncomplete,
                                     Method, construct)
from circtotal.fileio import (load_colouring, load_graph, save_colouring,
                              save_graph)
from circtotal.hegraph import (Family, HalfEdgeGraph, gen_classic, gen_gkn,
                               gen_hk, gen_hprime, total_conflict_graph)
from circtotal.repro import Runner, Suite, history, table
from circtotal.solver import (ChiStatus, Outcome, SearchConfig, chi_total,
                              feasible, verify_half_edge_uniform)

ExitOK: Final[int] = 0
ExitNegative: Final[int] = 1
ExitUsage: Final[int] = 2


class UsageError(common.CircTotalError):
    """UsageError indicates missing or inconsistent command line arguments."""


def _need(val: Optional[int], flag: str, what: str) -> int:
    if val is None:
        raise UsageError(f"{what} needs {flag}")
    return val


def _search_config(args: argparse.Namespace) -> SearchConfig:
    return SearchConfig.from_config(
        time_budget=getattr(args, "timeout", None),
        qmax=getattr(args, "qmax", None),
        symmetry_breaking=False if getattr(args, "no_symmetry", False) else None,
        use_cache=not args.no_cache,
    )


def cmd_gen(args: argparse.Namespace) -> int:
    """Generate a graph and write it to a file."""
    g: HalfEdgeGraph
    match args.family:
        case "hk":
            g = gen_hk(_need(args.k, "-k", "hk"))
        case "hprime":
            keep = tuple(args.keep) if args.keep is not None else None
            g = gen_hprime(_need(args.k, "-k", "hprime"), keep)  # type: ignore[arg-type]
        case "gkn":
            g = gen_gkn(_need(args.k, "-k", "gkn"), _need(args.n, "-n", "gkn"))
        case "cycle" | "prism":
            g = gen_classic(Family.from_str(args.family), _need(args.m, "-m", args.family))
        case "moebius":
            g = gen_classic(Family.Moebius, _need(args.n, "-n", "moebius"))
        case "kab":
            g = gen_classic(Family.CompleteBipartite,
                            _need(args.a, "-a", "kab"),
                            _need(args.kab_b, "-b", "kab"))
        case _:
            raise UsageError(f"Unknown family {args.family}")

    save_graph(g, args.output)
    print(f"{args.family}: {g.vertex_count} vertices, {g.edge_count} edges, "
          f"{g.half_edge_count} half-edges -> {args.output}")
    return ExitOK


def cmd_construct(args: argparse.Namespace) -> int:
    """Run a construction, check the colouring and write it to a file if it
    passes. A construction that fails or gives up is a negative result."""
    method: Final[Method] = Method.from_str(args.method)
    try:
        target, c = construct(method, args.k, args.n)
    except (ConstructionFault, ConstructionIncomplete) as err:
        print(f"failed: {err}")
        return ExitNegative

    if args.graph is not None:
        target = load_graph(args.graph)
    if args.graph_out is not None:
        save_graph(target, args.graph_out)

    try:
        violations = check(total_conflict_graph(target), c)
    except ColouringError as err:
        print(f"mismatch: {err}")
        return ExitNegative

    if len(violations) > 0:
        print(f"invalid ({c.p},{c.q}): {len(violations)} violations")
        return ExitNegative

    save_colouring(c, args.output)
    print(f"valid ({c.p},{c.q})")
    return ExitOK


def cmd_check(args: argparse.Namespace) -> int:
    """Check a certificate against a graph."""
    g: Final[HalfEdgeGraph] = load_graph(args.graph)
    c: Final = load_colouring(args.cert)

    try:
        violations = check(total_conflict_graph(g), c)
    except ColouringError as err:
        print(f"mismatch: {err}")
        return ExitNegative

    if len(violations) == 0:
        print(f"valid ({c.p},{c.q})")
        return ExitOK

    print(f"invalid ({c.p},{c.q}): {len(violations)} violations")
    for v in violations:
        print(f"  {v.describe(c.p, c.q)}")
    return ExitNegative


def cmd_feasible(args: argparse.Namespace) -> int:
    """Decide if a graph has a (p,q)-total colouring."""
    g: Final[HalfEdgeGraph] = load_graph(args.graph)
    res: Final = feasible(total_conflict_graph(g), args.p, args.q, _search_config(args))

    line: str = f"{res.status.name.lower()} ({args.p},{args.q}) nodes={res.nodes}"
    if res.reason != "":
        line += f" reason: {res.reason}"
    print(line)

    if res.certificate is not None and args.output is not None:
        save_colouring(res.certificate, args.output)

    if args.expect is not None:
        return ExitOK if res.status == Outcome.from_str(args.expect) else ExitNegative
    return ExitNegative if res.status == Outcome.Timeout else ExitOK


def cmd_chi(args: argparse.Namespace) -> int:
    """Compute the circular total chromatic number of a graph."""
    g: Final[HalfEdgeGraph] = load_graph(args.graph)
    res: Final = chi_total(g, _search_config(args))

    if res.status == ChiStatus.Exact:
        assert res.value is not None
        line = f"exact {frac_str(res.value)}"
        if args.decimal:
            line += f" {decimal_str(res.value)}"
    else:
        line = f"bounded ({frac_str(res.lower)}, {frac_str(res.upper)}]"
        if args.decimal:
            line += f" ({decimal_str(res.lower)}, {decimal_str(res.upper)}]"
    print(line)
    print(res.record())

    if args.output is not None:
        save_colouring(res.witness.with_meta(graph=args.graph), args.output)

    return ExitOK if res.status == ChiStatus.Exact else ExitNegative


def cmd_verify_lemma(args: argparse.Namespace) -> int:
    """Check by enumeration that every (k+1)-total colouring of H_k gives all
    half-edges the same colour."""
    rep: Final = verify_half_edge_uniform(args.k)
    print(f"{str(rep.uniform).lower()} ({rep.colourings} colourings)")
    if rep.counterexample is not None:
        ce = rep.counterexample
        for lbl in sorted(ce.assignment):
            print(f"  {lbl} {ce.assignment[lbl]}")
        return ExitNegative
    return ExitOK


def cmd_repro(args: argparse.Namespace) -> int:
    """Replay a suite of known results, or list past runs from the ledger."""
    if args.history is not None:
        if args.history < 1:
            raise UsageError(f"--history needs a positive number, got {args.history}")
        print(history(args.history), end="")
        return ExitOK

    runner: Final[Runner] = Runner(_search_config(args))
    results: Final = runner.run(Suite.from_str(args.suite))
    txt: Final[str] = table(results)
    print(txt, end="")
    if args.output is not None:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(txt)
        except OSError as err:
            raise common.CircTotalError(f"Cannot write {args.output}: {err.strerror}") from err
    return ExitOK if all(r.ok for r in results) else ExitNegative


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser."""
    argp: argparse.ArgumentParser = argparse.ArgumentParser(
        prog="circtotal",
        description="Circular total colourings of graphs with half-edges")
    argp.add_argument("-b", "--basedir",
                      type=pathlib.Path,
                      help="The directory to store application-specific files in "
                      f"(default: {common.path.base()})")
    argp.add_argument("-v", "--verbose",
                      action="store_true",
                      help="Log debug messages to the terminal")
    argp.add_argument("--no-cache",
                      action="store_true",
                      help="Do not use the cache of feasibility results")
    argp.add_argument("--version",
                      action="version",
                      version=f"%(prog)s {common.AppVersion}")

    sub = argp.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate a graph")
    gen.add_argument("--family",
                     required=True,
                     choices=["hk", "hprime", "gkn", "cycle", "moebius", "prism", "kab"])
    gen.add_argument("-k", type=int)
    gen.add_argument("-n", type=int)
    gen.add_argument("-m", type=int)
    gen.add_argument("-a", type=int)
    gen.add_argument("-b", dest="kab_b", type=int)
    gen.add_argument("--keep", type=int, nargs=2, metavar=("A", "B"),
                     help="The half-edges hprime keeps (default: 1 and k)")
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=cmd_gen)

    con = sub.add_parser("construct", help="Run a construction")
    con.add_argument("--method",
                     required=True,
                     choices=["all0", "tweak", "refine", "thm-lim", "thm-improve", "thm-k3"])
    con.add_argument("-k", type=int, default=3)
    con.add_argument("-n", type=int, default=1)
    con.add_argument("--graph", help="Check the colouring against this graph")
    con.add_argument("--graph-out", help="Write the target graph here")
    con.add_argument("-o", "--output", required=True)
    con.set_defaults(func=cmd_construct)

    chk = sub.add_parser("check", help="Check a certificate")
    chk.add_argument("graph")
    chk.add_argument("cert")
    chk.set_defaults(func=cmd_check)

    fea = sub.add_parser("feasible", help="Decide (p,q)-total colourability")
    fea.add_argument("graph")
    fea.add_argument("-p", type=int, required=True)
    fea.add_argument("-q", type=int, required=True)
    fea.add_argument("--timeout", type=float)
    fea.add_argument("--no-symmetry", action="store_true")
    fea.add_argument("--expect", choices=["feasible", "infeasible"])
    fea.add_argument("-o", "--output", help="Write the certificate here")
    fea.set_defaults(func=cmd_feasible)

    chi = sub.add_parser("chi", help="Compute the circular total chromatic number")
    chi.add_argument("graph")
    chi.add_argument("--qmax", type=int)
    chi.add_argument("--timeout", type=float)
    chi.add_argument("--decimal", action="store_true")
    chi.add_argument("-o", "--output", help="Write the witness here")
    chi.set_defaults(func=cmd_chi)

    ver = sub.add_parser("verify-lemma", help="Verify a claim by enumeration")
    ver.add_argument("lemma", choices=["all0"])
    ver.add_argument("-k", type=int, required=True)
    ver.set_defaults(func=cmd_verify_lemma)

    rep = sub.add_parser("repro", help="Replay the known results")
    rep.add_argument("--suite", choices=["fast", "full"], default="fast")
    rep.add_argument("-o", "--output")
    rep.add_argument("--history",
                     type=int,
                     metavar="N",
                     help="List the N most recent runs from the ledger instead")
    rep.set_defaults(func=cmd_repro)

    return argp


def run(argv: Optional[list[str]] = None) -> int:
    """Run the command line interface, return the exit code."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else ExitUsage

    if args.basedir is not None:
        common.set_basedir(args.basedir)
    if args.verbose:
        common.set_console_level(logging.DEBUG)

    log: Final[logging.Logger] = common.get_logger("cli")
    log.debug("Run %s", args.command)

    try:
        return args.func(args)
    except common.CircTotalError as err:
        cname: Final[str] = err.__class__.__name__
        log.debug("%s running %s: %s", cname, args.command, err)
        print(f"{cname}: {err}", file=sys.stderr)
        return ExitUsage


def main() -> None:
    """Run the circtotal application."""
    sys.exit(run())


if __name__ == '__main__':
    main()


# Local Variables: #
# python-indent: 4 #
# End: #
