"""Command-line interface.

Exit codes: 0 success / valid / member, 1 invalid / non-member / failed
check, 2 usage error, 3 malformed or unreadable input file.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import cube, groups, law, sampler
from .config import ConfigFormatError, extract, parse_config, parse_config3, realize, to_facelet_permutation
from .cube import MoveSyntaxError, StateFormatError
from .perm import contains

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_state(path: str) -> cube.CubeState:
    try:
        return cube.parse_state(_read(path))
    except (StateFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_config(path: str):
    try:
        return parse_config(_read(path))
    except ConfigFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _parse_moves(text: str) -> cube.MoveSequence:
    try:
        return cube.parse_sequence(text)
    except MoveSyntaxError as exc:
        raise InputError(f"--moves: {exc}") from None


def _b(v: bool) -> str:
    return "true" if v else "false"


def _print_verdict(v: law.Verdict, revenge: bool, out) -> None:
    other = "rho" if revenge else "tau"
    print(f"condition 1: {'pass' if v.condition1 else 'fail'} "
          f"(sgn sigma={v.sign_sigma:+d}, sgn {other}={v.sign_other:+d})", file=out)
    print(f"condition 2: {'pass' if v.condition2 else 'fail'} (sum x = {v.twist_sum} mod 3)", file=out)
    if revenge:
        detail = "violating: " + " ".join(v.edge_violations) if v.edge_violations else "all 24 sub-slots agree"
    else:
        detail = f"sum y = {v.flip_sum} mod 2"
    print(f"condition 3: {'pass' if v.condition3 else 'fail'} ({detail})", file=out)
    print(v.machine_line(), file=out)


# -- commands ----------------------------------------------------------------------

def cmd_scramble(args, out) -> int:
    rng = np.random.default_rng(args.seed)
    word = cube.random_sequence(rng, args.length)
    state = cube.apply(cube.solved_state(args.mode), word)
    print(f"moves: {word}", file=out)
    out.write(state.to_text())
    return EXIT_OK


def cmd_apply(args, out) -> int:
    state = _load_state(args.state)
    out.write(cube.apply(state, _parse_moves(args.moves)).to_text())
    return EXIT_OK


def cmd_extract(args, out) -> int:
    state = _load_state(args.state)
    if state.mode != "labeled":
        raise InputError(f"{args.state}: extract needs a labeled state")
    try:
        config = extract(state)
    except ValueError as exc:
        raise InputError(f"{args.state}: {exc}") from None
    out.write(config.to_text())
    return EXIT_OK


def cmd_realize(args, out) -> int:
    out.write(realize(_load_config(args.config)).to_text())
    return EXIT_OK


def cmd_check(args, out) -> int:
    v = law.check_revenge(_load_config(args.config))
    _print_verdict(v, True, out)
    return EXIT_OK if v.valid else EXIT_NO


def cmd_check3(args, out) -> int:
    try:
        c = parse_config3(_read(args.config))
    except ConfigFormatError as exc:
        raise InputError(f"{args.config}: {exc}") from None
    v = law.check_cube3(c)
    _print_verdict(v, False, out)
    return EXIT_OK if v.valid else EXIT_NO


def cmd_estimate(args, out) -> int:
    est = sampler.monte_carlo(args.mode, args.samples, args.seed, shards=args.shards)
    print(est.line(sampler.closed_form_probability(args.mode)), file=out)
    return EXIT_OK


def cmd_counts(args, out) -> int:
    print(f"config_space_size={law.config_space_size()}", file=out)
    print(f"orbit_count={law.orbit_count()}", file=out)
    print(f"group_order={law.group_order_closed_form()}", file=out)
    print(f"cube3_patterns={sampler.count_cube3_patterns()}", file=out)
    if args.bsgs:
        print(f"group_order_bsgs={groups.move_group().order}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    checks = groups.run_suite(args.suite)
    failed = [c for c in checks if not c.passed]
    for c in checks:
        print(c.line(), file=out)
    print(f"summary: {len(checks) - len(failed)}/{len(checks)} checks passed", file=out)
    return EXIT_OK if not failed else EXIT_NO


def cmd_member(args, out) -> int:
    if args.moves is not None:
        perm = cube.sequence_permutation(_parse_moves(args.moves))
    else:
        perm = to_facelet_permutation(_load_config(args.config))
    member = contains(groups.move_group(), perm)
    print(f"member={_b(member)}", file=out)
    return EXIT_OK if member else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="revenge", description="Rubik's Revenge group toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("scramble", help="random move word and the state it produces")
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--mode", choices=("labeled", "colored"), default="labeled")
    s.set_defaults(func=cmd_scramble)

    s = sub.add_parser("apply", help="apply a move word to a state file")
    s.add_argument("--state", required=True, help="state file, '-' for stdin")
    s.add_argument("--moves", required=True)
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("extract", help="labeled state -> configuration")
    s.add_argument("--state", required=True)
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("realize", help="configuration -> labeled state")
    s.add_argument("--config", required=True)
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("check", help="first-law verdict for a Revenge configuration")
    s.add_argument("--config", required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("check3", help="first-law verdict for a 3x3 configuration")
    s.add_argument("--config", required=True)
    s.set_defaults(func=cmd_check3)

    s = sub.add_parser("estimate", help="Monte Carlo solvability estimate")
    s.add_argument("--mode", choices=("theoretical", "market", "cube3"), required=True)
    s.add_argument("--samples", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--shards", type=int, default=1)
    s.set_defaults(func=cmd_estimate)

    s = sub.add_parser("counts", help="exact counting identities")
    s.add_argument("--bsgs", action="store_true", help="also compute |G| by Schreier-Sims")
    s.set_defaults(func=cmd_counts)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", choices=(*groups.SUITES, "all"), default="all")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("member", help="membership in the move group")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--moves")
    g.add_argument("--config")
    s.set_defaults(func=cmd_member)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "samples", 1) < 1 or getattr(args, "length", 0) < 0 or getattr(args, "shards", 1) < 1:
        print("revenge: error: counts must be positive", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "seed", 0) < 0:
        print("revenge: error: --seed must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"revenge: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
