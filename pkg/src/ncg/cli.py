"""Command-line front end.

Subcommands: analyze one algebra, verify the theorem suite (single algebra
or census), compare two algebras' graphs, run a census.  Exit codes:
0 ok, 1 theorem failure, 2 input error, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .catalog import (
    BUILTINS,
    CatalogError,
    census,
    fingerprint,
    from_spec_json,
    make_builtin,
)
from .config import DEFAULT_GUARDS, Guards
from .field import FieldError, field_for
from .graph import analyze, build_graph, export_dot, export_graphml, is_isomorphic
from .lie import GuardExceeded, InvalidAlgebra, LieAlgebra
from .verify import FAIL, verify_algebra, verify_census, worst_status

EXIT_OK = 0
EXIT_THEOREM_FAIL = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

_GUARD_FLAGS = (
    "clique",
    "chromatic",
    "independence",
    "domination",
    "hamiltonian",
    "isomorphism",
    "elements",
    "cover",
)


def _add_guard_args(p: argparse.ArgumentParser) -> None:
    for name in _GUARD_FLAGS:
        p.add_argument(
            f"--guard-{name}",
            type=int,
            default=None,
            metavar="N",
            help=f"budget for the {name} computation",
        )


def _guards_from(args: argparse.Namespace) -> Guards:
    overrides = {}
    for name in _GUARD_FLAGS:
        val = getattr(args, f"guard_{name.replace('-', '_')}", None)
        if val is not None:
            if val <= 0:
                raise CatalogError(f"--guard-{name} must be positive")
            overrides[name] = val
    return replace(DEFAULT_GUARDS, **overrides) if overrides else DEFAULT_GUARDS


def _parse_modulus(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(c) for c in text.split(",")]
    except ValueError:
        raise CatalogError(f"--modulus must be a comma-separated int list, got {text!r}")


def _load_algebra(args: argparse.Namespace) -> tuple[LieAlgebra, str]:
    if getattr(args, "file", None):
        text = Path(args.file).read_text()
        return from_spec_json(text)
    name = getattr(args, "builtin", None)
    if not name:
        raise CatalogError("specify an algebra with --builtin or --file")
    field = None
    if args.q is not None:
        field = field_for(args.q, _parse_modulus(args.modulus))
    L = make_builtin(name, field)
    label = name if args.q is None else f"{name}@{args.q}"
    return L, label


def _parse_target(spec: str, modulus: str | None) -> tuple[LieAlgebra, str]:
    """Resolve 'name@q' (builtin) or a path to a spec file."""
    path = Path(spec)
    if path.exists() or spec.endswith(".json"):
        return from_spec_json(path.read_text())
    if "@" in spec:
        name, qtext = spec.rsplit("@", 1)
        try:
            q = int(qtext)
        except ValueError:
            raise CatalogError(f"bad target {spec!r}: q must be an integer")
        return make_builtin(name, field_for(q, _parse_modulus(modulus))), spec
    if spec in BUILTINS:
        return make_builtin(spec), spec
    raise CatalogError(
        f"target {spec!r} is neither a file nor a builtin reference (name@q)"
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- subcommands -----------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    guards = _guards_from(args)
    L, label = _load_algebra(args)
    g = build_graph(L)
    report = analyze(g.adj, guards)
    if args.dot:
        Path(args.dot).write_text(export_dot(g))
    if args.graphml:
        Path(args.graphml).write_text(export_graphml(g))
    if args.json:
        doc = {
            "algebra": label,
            "fingerprint": fingerprint(L),
            "q": g.q,
            "dim": L.dim,
            "center_dim": g.s,
            "quotient_dim": g.d,
            "nilpotency_class": L.nilpotency_class,
            "solvable": L.is_solvable,
            "graph": report.to_json(),
        }
        _emit(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n", args.out)
        return EXIT_OK
    j = report.to_json()
    lines = [
        f"algebra: {label} over F_{g.q} (dim {L.dim})",
        f"center dim: {g.s}   quotient dim: {g.d}",
        f"nilpotency class: {L.nilpotency_class}   solvable: {L.is_solvable}",
        f"vertices: {report.order}   edges: {report.size}",
        f"degrees: {list(report.degree_sequence)}   regular: {report.regular}",
        f"connected: {report.connected}   diameter: {report.diameter}   girth: {report.girth}",
        f"eulerian: {report.eulerian}   hamiltonian: {report.hamiltonian}",
        f"planar: {report.planar}   vertex connectivity: {report.kappa}",
        f"clique number: {_fmt_guarded(j['clique_number'])}",
        f"chromatic number: {_fmt_guarded(j['chromatic_number'])}",
        f"independence number: {_fmt_guarded(j['independence_number'])}",
        f"domination number: {_fmt_guarded(j['domination_number'])}",
        f"multipartite classes: {j['multipartite']}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _fmt_guarded(d: dict) -> str:
    return f"{d['value']}" + ("" if d["exact"] else " (bound, not exact)")


def cmd_verify(args: argparse.Namespace) -> int:
    guards = _guards_from(args)
    if args.census:
        if args.dim is None or args.q is None:
            raise CatalogError("census verification needs --dim and --q")
        field = field_for(args.q, _parse_modulus(args.modulus))
        cres = census(args.dim, field, guards, jobs=args.jobs)
        ver = verify_census(cres, guards, seed=args.seed, trials=args.trials)
        if args.json:
            _emit(ver.to_json_lines(), args.out)
        else:
            lines = []
            for ident, r in ver.results:
                if r.status != "pass" or args.verbose:
                    lines.append(f"{ident}  {r.check}: {r.status}  {r.detail}")
            lines.append(
                f"census dim={args.dim} q={args.q}: {ver.algebras} algebras, "
                f"{len(ver.results)} checks, {len(ver.failures)} failures"
            )
            _emit("\n".join(lines) + "\n", args.out)
        return EXIT_THEOREM_FAIL if ver.failures else EXIT_OK

    L, label = _load_algebra(args)
    results = verify_algebra(L, guards=guards, seed=args.seed, trials=args.trials)
    if args.json:
        lines = [
            json.dumps({"algebra": label, **r.to_json()}, sort_keys=True, separators=(",", ":"))
            for r in results
        ]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"{r.check}: {r.status}" + (f"  ({r.detail})" if r.detail else "") for r in results]
        failures = [r for r in results if r.status == FAIL]
        lines.append(f"{label}: {len(results)} checks, {len(failures)} failures")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_THEOREM_FAIL if worst_status(results) == FAIL else EXIT_OK


def cmd_iso(args: argparse.Namespace) -> int:
    guards = _guards_from(args)
    L1, label1 = _parse_target(args.first, args.modulus)
    L2, label2 = _parse_target(args.second, args.modulus)
    g1, g2 = build_graph(L1), build_graph(L2)
    iso = is_isomorphic(g1.adj, g2.adj, guards.isomorphism)
    def describe(L: LieAlgebra) -> str:
        return (
            f"dim {L.dim}, center dim {L.center.dim}, "
            f"nilpotency class {L.nilpotency_class}, solvable {L.is_solvable}"
        )
    lines = [
        f"graphs {'isomorphic' if iso else 'non-isomorphic'} "
        f"(orders {g1.order} and {g2.order})",
        f"{label1}: {describe(L1)}",
        f"{label2}: {describe(L2)}",
    ]
    if iso:
        structural = (
            L1.nilpotency_class != L2.nilpotency_class
            or L1.is_solvable != L2.is_solvable
            or L1.center.dim != L2.center.dim
        )
        if structural:
            lines.append(
                "graphs isomorphic; algebras differ structurally "
                "(the graph does not determine the algebra)"
            )
        else:
            lines.append("no structural discriminator found")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    guards = _guards_from(args)
    field = field_for(args.q, _parse_modulus(args.modulus))
    cres = census(args.dim, field, guards, jobs=args.jobs)
    record_lines = [
        json.dumps(e.record, sort_keys=True, separators=(",", ":"))
        for e in cres.entries
    ]
    if args.out:
        Path(args.out).write_text("\n".join(record_lines) + "\n")
    summary = [
        f"census dim={args.dim} q={args.q}: {cres.candidates} candidate tensors, "
        f"{cres.valid} valid, {cres.non_abelian} non-abelian",
        f"graph isomorphism classes: {len(cres.classes)}",
    ]
    for cl in cres.classes:
        structs = "; ".join(
            f"class {s['nilpotency_class']} solvable={s['solvable']} x{s['count']}"
            for s in cl["structures"]
        )
        summary.append(
            f"  class {cl['class']}: {cl['count']} tensors, order {cl['order']}, "
            f"size {cl['size']}  [{structs}]"
        )
    if not args.out:
        if args.json:
            _emit("\n".join(record_lines) + "\n", None)
        else:
            _emit("\n".join(summary) + "\n", None)
    else:
        _emit("\n".join(summary) + "\n", None)
    return EXIT_OK


# -- entry -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ncg",
        description="Non-commuting graphs of Lie algebras over finite fields.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp: argparse.ArgumentParser, with_algebra: bool = True) -> None:
        if with_algebra:
            sp.add_argument("--builtin", help=f"one of: {', '.join(sorted(BUILTINS))}")
            sp.add_argument("--file", help="path to an algebra spec JSON file")
            sp.add_argument("--q", type=int, default=None, help="field size (prime power)")
            sp.add_argument("--modulus", default=None,
                            help="comma-separated monic modulus coefficients, low degree first")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--out", default=None, help="write output to a file")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
        _add_guard_args(sp)

    sp = sub.add_parser("analyze", help="graph invariants of one algebra")
    add_common(sp)
    sp.add_argument("--dot", default=None, help="write a DOT export to this path")
    sp.add_argument("--graphml", default=None, help="write a GraphML export to this path")
    sp.set_defaults(fn=cmd_analyze)

    sp = sub.add_parser("verify", help="run the theorem suite")
    add_common(sp)
    sp.add_argument("--census", action="store_true", help="verify an exhaustive census")
    sp.add_argument("--dim", type=int, default=None, help="census dimension")
    sp.add_argument("--trials", type=int, default=64, help="random domination subsets per algebra")
    sp.add_argument("--jobs", type=int, default=1, help="parallel census workers")
    sp.add_argument("--verbose", action="store_true", help="print passing checks too")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("iso", help="compare the graphs of two algebras")
    sp.add_argument("first", help="builtin reference name@q or a spec file path")
    sp.add_argument("second", help="builtin reference name@q or a spec file path")
    sp.add_argument("--modulus", default=None,
                    help="comma-separated monic modulus coefficients for builtin targets")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out", default=None)
    sp.add_argument("--seed", type=int, default=0)
    _add_guard_args(sp)
    sp.set_defaults(fn=cmd_iso)

    sp = sub.add_parser("census", help="enumerate all small algebras over a field")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--modulus", default=None)
    sp.add_argument("--jobs", type=int, default=1, help="parallel census workers")
    sp.add_argument("--json", action="store_true", help="print records instead of the summary")
    sp.add_argument("--out", default=None, help="write JSON-lines records to a file")
    sp.add_argument("--seed", type=int, default=0)
    _add_guard_args(sp)
    sp.set_defaults(fn=cmd_census)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GuardExceeded as e:
        print(f"not computed: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (CatalogError, InvalidAlgebra, FieldError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
