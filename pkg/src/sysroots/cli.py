"""Command-line front end.

Exit codes: 0 success (all checks pass), 1 a mathematical violation was
found, 2 bad input or usage. Every report is written in a fixed order so
identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import linalg as la
from .axioms import verify_all
from .catalog import FAMILIES, CatalogError, build_family, canonical_family, expected_nilradical_dim
from .euclidean import MalformedSystem, UnsupportedType, build_classical, to_rootset
from .nilradical import (NilradicalError, build_nilradical, decompose_adjoint, rep_matrices,
                         root_subalgebra)
from .roots import (ChainError, RootSetError, compare_chain_sum, extremal_chain, killing_table,
                    load_rootset)

REPORT_DIR_ENV = "SYSROOTS_REPORT_DIR"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


class InputError(ValueError):
    """Usage or input problem; reported as a one-line diagnostic with exit code 2."""


# selectors ---------------------------------------------------------------

_INDEX = re.compile(r"\d+")


def parse_selector(text: str, candidates, what: str = "root") -> tuple:
    """Resolve an index into ``candidates`` or an exact coordinate literal.

    A bare non-negative integer is an index. Literals use commas and/or
    brackets, e.g. ``(3)``, ``[1/2,0]`` or ``1,-1``, and must be members.
    """
    candidates = list(candidates)
    text = text.strip()
    if _INDEX.fullmatch(text):
        i = int(text)
        if i >= len(candidates):
            raise InputError(f"{what} index {i} out of range (0..{len(candidates) - 1})")
        return candidates[i]
    body = text.strip("()[] ")
    if not body:
        raise InputError(f"empty {what} selector {text!r}")
    try:
        v = la.as_vector(x for x in body.split(","))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse {what} selector {text!r}") from None
    if v not in candidates:
        raise InputError(f"{what} {text} is not in the selectable set")
    return v


# sources -----------------------------------------------------------------

def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--family", help="catalog family (" + ", ".join(FAMILIES) + ")")
    g.add_argument("--file", help="RootSet JSON file")
    g.add_argument("--classical", help="classical root system, e.g. A2, B3, G2, F4")
    p.add_argument("--rank", type=int, help="rank l for Ctilde, or for a classical type letter")


def load_source(args):
    """Return (RootSet, CatalogEntry or None) for the selected source."""
    if args.family:
        entry = build_family(args.family, args.rank)
        return entry.restricted, entry
    if args.file:
        if args.rank is not None:
            raise InputError("--rank does not apply to --file")
        try:
            return load_rootset(args.file), None
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    return to_rootset(build_classical(args.classical, args.rank))[0], None


# output ------------------------------------------------------------------

def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


_vec = la.show_vector


def emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    base = os.environ.get(REPORT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _need_format(args, allowed) -> None:
    if args.format not in allowed:
        raise InputError(f"--format {args.format} is not available for {args.command}")


# commands ----------------------------------------------------------------

def cmd_verify(args) -> int:
    _need_format(args, ("json", "pretty"))
    rs, _ = load_source(args)
    rep = verify_all(rs)
    if args.format == "json":
        text = _dump_json(rep.to_json())
    else:
        lines = [f"{rep.label or '(unlabelled)'}: {'ok' if rep.ok else 'VIOLATION'}"]
        for k in sorted(rep.axioms):
            r = rep.axioms[k]
            lines.append(f"  axiom {k}: {r.status} ({r.checked} checked)")
        for k, r in sorted(rep.properties.items()):
            lines.append(f"  {k}: {r.status} ({r.checked} checked)")
        for c in rep.counterexamples:
            wit = " ".join(_vec(v) for v in c.witness)
            lines.append(f"  counterexample [{c.check}] {wit}: observed {c.observed}, expected {c.expected}")
        text = "\n".join(lines) + "\n"
    emit(text, args.out)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_chains(args) -> int:
    _need_format(args, ("json", "tsv", "pretty"))
    rs, _ = load_source(args)
    if not rs.roots:
        raise InputError("root set is empty; no direction to choose")
    universe = rs.with_zero()
    alpha = parse_selector(args.alpha, rs.roots, "alpha")
    if args.beta2 is not None:
        if args.beta is None:
            raise InputError("--beta2 needs --beta")
        _need_format(args, ("json",))
        b1 = parse_selector(args.beta, universe, "beta")
        b2 = parse_selector(args.beta2, universe, "beta2")
        emit(_dump_json(compare_chain_sum(rs, b1, b2, alpha).to_json()), args.out)
        return EXIT_OK
    betas = [parse_selector(args.beta, universe, "beta")] if args.beta is not None else universe
    chains = [extremal_chain(rs, b, alpha) for b in betas]
    if args.format == "json":
        text = _dump_json([c.to_json() for c in chains])
    else:
        sep = "\t" if args.format == "tsv" else "  "
        lines = [sep.join(("beta", "q", "p", "killing", "chain"))]
        for c in chains:
            lines.append(sep.join((_vec(c.beta), str(c.pair.q), str(c.pair.p), str(c.killing),
                                   " ".join(_vec(v) for v in c.elements))))
        text = "\n".join(lines) + "\n"
    emit(text, args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    rs, _ = load_source(args)
    table = killing_table(rs)
    if args.format == "json":
        text = _dump_json(table.to_json())
    elif args.format == "tsv":
        text = table.to_tsv()
    else:
        cells = [[c for c in line.split("\t")] for line in table.to_tsv().splitlines()]
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        text = "".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n" for row in cells)
    emit(text, args.out)
    return EXIT_OK


def cmd_catalog(args) -> int:
    _need_format(args, ("json", "pretty"))
    if args.action == "list":
        rows = []
        for f in FAMILIES:
            dim = "2l+1" if f == "Ctilde" else str(expected_nilradical_dim(f))
            rows.append({"family": f, "expected_nilradical_dim": dim})
        if args.format == "json":
            text = _dump_json(rows)
        else:
            text = "".join(f"{r['family']}\t{r['expected_nilradical_dim']}\n" for r in rows)
        emit(text, args.out)
        return EXIT_OK
    if args.family is None:
        raise InputError("catalog build needs a family")
    entry = build_family(args.family, args.rank, unpatched=args.unpatched)
    if args.format == "json":
        text = _dump_json(entry.to_json())
    else:
        lines = [f"{entry.restricted.label}: M = {entry.m}, nilradical dimension {entry.nilradical_dim}"]
        for v in entry.restricted.with_zero():
            lines.append(f"  {entry.labels[v]:>12}  {_vec(v)}")
        for e in entry.errata:
            lines.append(f"  erratum: {e}")
        text = "\n".join(lines) + "\n"
    emit(text, args.out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    _need_format(args, ("json",))
    entry = build_family(args.family, args.rank)
    alg = build_nilradical(entry)
    alpha = parse_selector(args.alpha, alg.pi_hat, "alpha")
    rep = decompose_adjoint(alg, root_subalgebra(alg, alpha))
    emit(_dump_json(rep.to_json()), args.out)
    return EXIT_OK


def cmd_repmat(args) -> int:
    _need_format(args, ("json", "pretty"))
    if args.n < 0:
        raise InputError("--n must be >= 0")
    rep = rep_matrices(args.n)
    if args.format == "json":
        text = _dump_json(rep.to_json())
    else:
        blocks = []
        for name, m in (("rho(X)", rep.rho_x), ("rho(Y)", rep.rho_y), ("rho(H)", rep.rho_h)):
            rows = [" ".join(f"{x:>3}" for x in la.format_vector(r)) for r in m.rows]
            blocks.append(name + "\n" + "\n".join(rows))
        text = "\n\n".join(blocks) + "\n"
    emit(text, args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    _need_format(args, ("json",))
    from .sweep import run_sweep
    report = run_sweep(include_timing=args.timing)
    emit(_dump_json(report), args.out)
    return EXIT_OK if report["ok"] else EXIT_VIOLATION


def cmd_export(args) -> int:
    _need_format(args, ("json",))
    rs, _ = load_source(args)
    data = rs.to_json()
    if args.classical and not data["label"]:
        data["label"] = args.classical
    emit(_dump_json(data), args.out)
    return EXIT_OK


# parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv", "pretty"), default="json")
    common.add_argument("--out", help=f"write here instead of stdout (relative to ${REPORT_DIR_ENV} if set)")

    parser = argparse.ArgumentParser(prog="sysroots", description="Exact checks for systems of roots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check axioms 1-5 and the property sweeps")
    _add_source(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chains", parents=[common], help="extremal chains in one direction")
    _add_source(p)
    p.add_argument("--alpha", required=True, help="direction: index into sorted roots or a literal")
    p.add_argument("--beta", help="start: index into sorted roots with zero, or a literal")
    p.add_argument("--beta2", help="second start; compares the chain sum with the extremal chain")
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("table", parents=[common], help="Killing integer table")
    _add_source(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("catalog", parents=[common], help="list or build catalog families")
    p.add_argument("action", choices=("list", "build"))
    p.add_argument("family", nargs="?")
    p.add_argument("--rank", type=int)
    p.add_argument("--unpatched", action="store_true", help="skip the table patches")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("decompose", parents=[common], help="adjoint decomposition in the nilradical")
    p.add_argument("family")
    p.add_argument("--rank", type=int)
    p.add_argument("--alpha", required=True, help="index into sorted simple positive roots, or a literal")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("repmat", parents=[common], help="representation matrices of h_3")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_repmat)

    p = sub.add_parser("sweep", parents=[common], help="run every acceptance check")
    p.add_argument("--timing", action="store_true", help="include wall-clock seconds (not deterministic)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", parents=[common], help="write a root set as RootSet JSON")
    _add_source(p)
    p.set_defaults(func=cmd_export)
    return parser


INPUT_ERRORS = (InputError, RootSetError, CatalogError, ChainError, UnsupportedType,
                MalformedSystem, NilradicalError)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "family", None):
        try:
            args.family = canonical_family(args.family)
        except CatalogError as exc:
            print(f"sysroots: error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"sysroots: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
