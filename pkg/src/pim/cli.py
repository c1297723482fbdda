"""Command-line front end: ``pim <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .equation import parse_equation
from .errors import (
    BoundTooSmall,
    CapExceeded,
    DegenerateInput,
    EquationSyntaxError,
    InvalidTopology,
    NotFinite,
    TrivialEquation,
    Unsupported,
)
from .iso import isomorphic
from .kuratowski import CONVENTION, classify_orbit, mask_to_set, read_topology
from .monoid import FiniteMonoid, build, hilbert, order
from .oracle import Undetermined, congruence_monoid
from .reduce import Classified, Free, Monogenic, reduce_presentation
from .word import check_word

USAGE_ERRORS = (EquationSyntaxError, TrivialEquation, OSError)
DOMAIN_ERRORS = (DegenerateInput, NotFinite, Unsupported, CapExceeded, BoundTooSmall, InvalidTopology)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pim", description="Strict 2-PIMs: one involution D, one idempotent B.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("--json", action="store_true", help="structured output")
        return s

    cmd("classify", "reduce relations to a canonical presentation").add_argument("eqs", nargs="*")
    cmd("order", "order of the presented monoid").add_argument("eqs", nargs="*")
    s = cmd("hilbert", "Hilbert series coefficients")
    s.add_argument("eqs", nargs="*")
    s.add_argument("--max-degree", type=int, default=None)
    cmd("table", "serialized multiplication table").add_argument("eqs", nargs="*")
    s = cmd("iso", "isomorphism of two presentations separated by --")
    s.add_argument("eqs", nargs="*")
    s = cmd("oracle", "congruence-closure monoid of explicit relations")
    s.add_argument("eqs", nargs="*")
    s.add_argument("--bound", type=int, required=True)
    cmd("kuratowski", "closure/complement monoid of a finite topology").add_argument("file")
    return p


def _presentation(texts):
    return reduce_presentation(parse_equation(t) for t in texts)


def _descriptor(c) -> dict:
    if isinstance(c, Free):
        return {"kind": "Free"}
    if isinstance(c, Monogenic):
        return {"kind": "Monogenic", "cases": list(c.cases)}
    p = c.param
    d = {"kind": "Classified", "family": p.family_tag, "parity": p.parity.value, "k": p.k}
    if p.ell is not None:
        d["ell"] = p.ell
    return d


def _raw_relation(text: str) -> tuple[str, str]:
    parts = text.strip().split("=")
    if len(parts) != 2:
        raise EquationSyntaxError(f"expected exactly one '=' in {text!r}")
    try:
        return check_word(parts[0]), check_word(parts[1])
    except ValueError as exc:
        raise EquationSyntaxError(str(exc)) from None


def _monoid_dict(m: FiniteMonoid) -> dict:
    return {"n": len(m), "elements": list(m.elements), "table": [list(r) for r in m.table]}


def _dispatch(args, iso_rhs) -> tuple[list[str], dict]:
    if args.command == "classify":
        c = _presentation(args.eqs)
        lines = [str(c)]
        data = _descriptor(c)
        if isinstance(c, Classified):
            lines.append(f"order={order(c)}")
            data["order"] = order(c)
        return lines, data
    if args.command == "order":
        n = order(_presentation(args.eqs))
        return [f"order={n}"], {"order": n}
    if args.command == "hilbert":
        h = hilbert(_presentation(args.eqs), args.max_degree)
        return [f"hilbert={' '.join(map(str, h.coeffs))}", f"H(t)={h}"], {"coeffs": list(h.coeffs), "truncated": h.truncated}
    if args.command == "table":
        m = build(_presentation(args.eqs))
        return m.to_text().splitlines(), _monoid_dict(m)
    if args.command == "iso":
        same = isomorphic(_presentation(args.eqs), _presentation(iso_rhs))
        return [str(same).lower()], {"isomorphic": same}
    if args.command == "oracle":
        m = congruence_monoid([_raw_relation(t) for t in args.eqs], args.bound)
        if isinstance(m, Undetermined):
            return [f"Undetermined: {m.reason}"], {"undetermined": m.reason}
        return m.to_text().splitlines(), _monoid_dict(m)
    if args.command == "kuratowski":
        r = classify_orbit(read_topology(args.file))
        data = {
            "convention": CONVENTION,
            "order": r.order,
            "class": r.description,
            "max_orbit": r.orbit_size,
            "subset": mask_to_set(r.subset),
        }
        return r.to_text().splitlines(), data
    raise UsageError(f"unknown command {args.command}")


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(argv)
    iso_rhs: list[str] = []
    if argv and argv[0] == "iso":
        if "--" not in argv:
            print("pim: usage error: iso needs two presentations separated by --", file=err)
            return 1
        cut = argv.index("--")
        argv, iso_rhs = argv[:cut], argv[cut + 1 :]
    try:
        args = _parser().parse_args(argv)
        lines, data = _dispatch(args, iso_rhs)
    except UsageError as exc:
        print(f"pim: usage error: {exc}", file=err)
        return 1
    except USAGE_ERRORS as exc:
        print(f"pim: {type(exc).__name__}: {exc}", file=err)
        return 1
    except DOMAIN_ERRORS as exc:
        print(f"pim: {type(exc).__name__}: {exc}", file=err)
        return 2
    if args.json:
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
