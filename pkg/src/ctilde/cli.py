"""Command-line front end.

Subcommands: ``reduce``, ``multiply``, ``theta``, ``induce-matrix`` and
``verify``.  Output is JSON (one document per result line) unless --pretty
is given; identical inputs produce byte-identical output.  Exit codes:
0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import hecke, induce, svg, verify, weyl

_CONFIG_KEYS = ("rank", "box", "length_bound", "primes", "jobs")


def _emit(doc: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(doc, indent=2))
    else:
        print(json.dumps(doc, separators=(",", ":")))


def _fail_usage(message: str) -> "NoReturn":  # noqa: F821 - py3.10 spelling
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(2)


def _parse_element(rank: int, text: str) -> weyl.ExtAffineWeylElement:
    """Accept an element text form or a word as a JSON array of indices."""
    text = text.strip()
    try:
        if text.startswith("["):
            word = json.loads(text)
            if not isinstance(word, list) or not all(isinstance(i, int) for i in word):
                raise ValueError("word must be a JSON array of generator indices")
            return weyl.evaluate_word(rank, word)
        g = weyl.element_from_text(text)
        if g.rank != rank:
            raise ValueError(f"element has rank {g.rank}, expected {rank}")
        return g
    except (ValueError, json.JSONDecodeError) as exc:
        _fail_usage(str(exc))


def _parse_box(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        _fail_usage(f"cannot parse box {text!r}; expected LO..HI")
    if lo > hi:
        _fail_usage("box lower bound exceeds upper bound")
    return lo, hi


def _parse_primes(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        _fail_usage(f"cannot parse prime list {text!r}")


_CHARACTERS = {
    "sgn": (hecke.sgn, "hn"),
    "sgn'": (hecke.sgn_prime, "hn"),
    "sgnp": (hecke.sgn_prime, "hn"),
    "eps+": (lambda n: hecke.eps(n, +1), "h0"),
    "eps-": (lambda n: hecke.eps(n, -1), "h0"),
}


def _module_from_args(rank: int, module: str, character: str) -> induce.InducedModule:
    if character not in _CHARACTERS:
        _fail_usage(f"unknown character {character!r}; choose from {sorted(_CHARACTERS)}")
    chi_factory, default_label = _CHARACTERS[character]
    label = module or default_label
    if label not in ("h0", "hn"):
        _fail_usage("module must be h0 or hn")
    if label != default_label:
        _fail_usage(f"character {character!r} lives on {default_label}, not {label}")
    chi = chi_factory(rank)
    lbl = hecke.h0_label(rank) if label == "h0" else hecke.hn_label(rank)
    return induce.InducedModule(rank, lbl, chi)


def cmd_reduce(args) -> int:
    g = _parse_element(args.rank, args.element)
    word = weyl.reduced_word(g)
    doc = {
        "reduced_word": list(word),
        "length": len(word),
        "weighted_length": weyl.weighted_length(g),
        "in_affine_subgroup": weyl.in_affine_subgroup(g),
    }
    _emit(doc, args.pretty)
    return 0


def cmd_multiply(args) -> int:
    a = _parse_element(args.rank, args.a)
    b = _parse_element(args.rank, args.b)
    product = hecke.multiply(hecke.basis(a), hecke.basis(b))
    _emit({"product": product.to_json()}, args.pretty)
    return 0


def cmd_theta(args) -> int:
    try:
        lam = tuple(int(v) for v in args.lam.split(","))
    except ValueError:
        _fail_usage(f"cannot parse lattice vector {args.lam!r}")
    rank = args.rank if args.rank is not None else len(lam)
    if rank != len(lam):
        _fail_usage("lattice vector length does not match the rank")
    element = hecke.theta(rank, lam)
    _emit({"lambda": list(lam), "theta": element.to_json()}, args.pretty)
    return 0


def cmd_induce_matrix(args) -> int:
    m = _module_from_args(args.rank, args.module, args.character)
    if not 0 <= args.generator <= args.rank:
        _fail_usage(f"generator index {args.generator} out of range")
    window = induce.minimal_coset_reps(m, args.window_length)
    result = induce.action_matrix(m, args.generator, window)
    doc = {
        "module": m.describe(),
        "generator": args.generator,
        **result.to_json(),
    }
    _emit(doc, args.pretty)
    return 0


def cmd_verify(args) -> int:
    names = list(verify.SUITE_NAMES) if args.suite == "all" else [args.suite]
    lo, hi = _parse_box(args.box)
    primes = _parse_primes(args.primes)
    all_pass = True
    for name in names:
        result = verify.run_suite(
            name,
            rank=args.rank,
            lo=lo,
            hi=hi,
            length_bound=args.length_bound,
            primes=primes,
            jobs=args.jobs,
        )
        all_pass = all_pass and result.passed
        _emit(result.to_json(), args.pretty)
    if args.emit_alcove_svg:
        with open(args.emit_alcove_svg, "w") as fh:
            fh.write(svg.alcove_svg())
    return 0 if all_pass else 1


def _apply_config(args: argparse.Namespace, defaults: dict) -> argparse.Namespace:
    """Fill unset options from --config JSON, then hard defaults; flags win."""
    config = {}
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            _fail_usage(f"cannot read config file: {exc}")
        unknown = set(config) - set(_CONFIG_KEYS)
        if unknown:
            _fail_usage(f"unknown config keys: {sorted(unknown)}")
    for key, hard in defaults.items():
        if getattr(args, key, None) is None:
            setattr(args, key, config.get(key, hard))
    return args


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctilde",
        description="Exact workbench for the extended affine Weyl group of "
                    "type C-tilde and its unequal-parameter Hecke algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rank_default=2):
        p.add_argument("--rank", type=int, default=None,
                       help=f"rank n (default {rank_default})")
        p.add_argument("--config", help="JSON config file; flags win")
        p.add_argument("--pretty", action="store_true",
                       help="indented output instead of compact JSON")
        p.add_argument("--json", action="store_true",
                       help="compact JSON output (the default)")

    p = sub.add_parser("reduce", help="canonical reduced word and lengths")
    common(p)
    p.add_argument("element", help="element text perm=[..];trans=[..] or word [i,j,...]")
    p.set_defaults(func=cmd_reduce, defaults={"rank": 2})

    p = sub.add_parser("multiply", help="product of two basis elements")
    common(p)
    p.add_argument("a", help="element text or word")
    p.add_argument("b", help="element text or word")
    p.set_defaults(func=cmd_multiply, defaults={"rank": 2})

    p = sub.add_parser("theta", help="Bernstein element of a lattice vector")
    common(p)
    p.add_argument("lam", help="comma-separated integers, e.g. 1,-2")
    p.set_defaults(func=cmd_theta, defaults={"rank": None})

    p = sub.add_parser("induce-matrix", help="generator action matrix on a window")
    common(p)
    p.add_argument("--module", choices=("h0", "hn"), default=None)
    p.add_argument("--character", required=True,
                   help="sgn, sgn' (alias sgnp), eps+ or eps-")
    p.add_argument("--generator", type=int, required=True)
    p.add_argument("--window-length", type=int, default=3,
                   help="window of minimal coset reps up to this length")
    p.set_defaults(func=cmd_induce_matrix, defaults={"rank": 2})

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("suite", choices=verify.SUITE_NAMES + ("all",))
    p.add_argument("--box", default=None, help="lattice box LO..HI (default -2..2)")
    p.add_argument("--length-bound", dest="length_bound", type=int, default=None,
                   help="support length bound for freeness (default: from the box)")
    p.add_argument("--primes", default=None, help="primes for gauss (default 3,5,7,11,13)")
    p.add_argument("--jobs", type=int, default=None, help="concurrent cases (default 1)")
    p.add_argument("--emit-alcove-svg", dest="emit_alcove_svg", metavar="PATH",
                   help="write the rank-2 alcove picture to PATH")
    p.set_defaults(func=cmd_verify, defaults={
        "rank": 2, "box": "-2..2", "primes": "3,5,7,11,13", "jobs": 1,
    })

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args = _apply_config(args, args.defaults)
    if args.command == "theta" and args.rank is None:
        pass  # rank inferred from the vector
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
