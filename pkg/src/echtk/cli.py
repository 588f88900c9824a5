"""Command-line front end.

Every subcommand is a thin adapter over the library: it parses flags,
calls one library entry point, and renders rows as an aligned table, CSV,
or JSON.  JSON output carries a metadata block; table and CSV sections
contain data only, so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .complexes import (
    ComplexSpec,
    WindowError,
    differential,
    enumerate_currents,
    homology,
    knot_filtered_homology,
    required_degree,
)
from .currents import KnotParams, ReebCurrent, degree
from .exact import parse as parse_infrat, render, render_fraction
from .indices import cz_table, ech_index
from .nseq import nk_upto
from .spectra import (
    action_linking_bound,
    action_spectrum,
    calabi_mean_action_bound,
    cobordism_obstruction,
    weyl_scan,
)
from .toric import current_to_path, path_index, svg as path_svg, vertices


class UsageError(Exception):
    pass


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational value {text!r}: {exc}") from exc


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected P,Q pair, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise UsageError(f"bad pair {text!r}") from exc


def _knot_params(args) -> KnotParams:
    try:
        return KnotParams(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _threads() -> int:
    # reserved knob; computations are currently single-threaded
    raw = os.environ.get("ECH_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"ECH_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise UsageError("ECH_THREADS must be at least 1")
    return n


def _emit(args, header: list[str], rows: list[list[str]], meta: dict) -> None:
    fmt = getattr(args, "format", "table")
    out = sys.stdout
    if fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(row) + "\n")
    elif fmt == "json":
        doc = {"meta": meta, "columns": header, "rows": rows}
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        widths = [
            max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
            for i in range(len(header))
        ]
        out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for row in rows:
            out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _meta(kp: KnotParams, **extra) -> dict:
    meta = {"p": kp.p, "q": kp.q, "deltaMode": kp.delta_mode, "toolVersion": __version__}
    meta.update(extra)
    return meta


# -- subcommands --------------------------------------------------------


def _cmd_nseq(args) -> None:
    kp = _knot_params(args)
    values = nk_upto(kp.p, kp.q, args.k_max)
    rows = []
    run_start = 0
    for k, v in enumerate(values):
        if k and v != values[k - 1]:
            run_start = k
        rows.append([str(k), str(v), str(k - run_start + 1)])
    _emit(args, ["k", "N_k", "repeats"], rows, _meta(kp, kMax=args.k_max))


def _cmd_generators(args) -> None:
    kp = _knot_params(args)
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    spec = ComplexSpec(kp, args.max_degree)
    rows = [
        [str(degree(c, kp)), c.name(), str(ech_index(c, kp))]
        for c in enumerate_currents(spec)
    ]
    _emit(args, ["degree", "generator", "index"], rows, _meta(kp, maxDegree=args.max_degree))


def _cmd_cz_table(args) -> None:
    kp = _knot_params(args)
    table = cz_table(kp, _parse_fraction(args.max_action))
    rows = [[label, render_fraction(act), str(cz)] for label, act, cz in table]
    _emit(args, ["orbit", "action", "cz_orb"], rows, _meta(kp, maxAction=args.max_action))


def _cmd_homology(args) -> None:
    kp = _knot_params(args)
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = required_degree(kp, args.max_index)
    spec = ComplexSpec(kp, max_degree)
    meta = _meta(kp, maxIndex=args.max_index, maxDegree=max_degree,
                 validatedWindow=f"indices 0..{args.max_index}")
    if args.check_d_squared:
        meta["dSquaredZero"] = differential(spec).d_squared_is_zero()
    ranks = homology(spec, args.max_index)
    rows = [[str(i), str(ranks[i])] for i in range(args.max_index + 1)]
    _emit(args, ["index", "rank"], rows, meta)


def _cmd_knot_filtered(args) -> None:
    kp = _knot_params(args)
    try:
        level = parse_infrat(args.filtration)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = required_degree(kp, args.max_index)
    spec = ComplexSpec(kp, max_degree)
    ranks = knot_filtered_homology(spec, level, args.max_index)
    rows = [[str(i), str(ranks[i])] for i in range(args.max_index + 1)]
    _emit(
        args,
        ["index", "rank"],
        rows,
        _meta(kp, filtration=render(level), maxIndex=args.max_index, maxDegree=max_degree),
    )


def _cmd_spectrum(args) -> None:
    kp = _knot_params(args)
    entries = action_spectrum(kp, args.k_max)
    rows = [
        [str(e.k), render_fraction(e.ck), render(e.ck_link), e.weyl_error]
        for e in entries
    ]
    _emit(args, ["k", "c_k", "c_k_link", "e_k"], rows, _meta(kp, kMax=args.k_max))


def _cmd_weyl(args) -> None:
    kp = _knot_params(args)
    entries, sup = weyl_scan(kp, args.k_max)
    meta = _meta(kp, kMax=args.k_max, supAbsError=sup)
    if args.plot_data:
        rows = [[str(k), e] for k, e in entries]
    else:
        rows = [["sup|e_k|", sup]]
    header = ["k", "e_k"] if args.plot_data else ["quantity", "value"]
    _emit(args, header, rows, meta)


def _cmd_obstruct(args) -> None:
    frm = _parse_pair(getattr(args, "from"))
    to = _parse_pair(args.to)
    try:
        result = cobordism_obstruction(frm, to, args.k_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = [[result.describe()]]
    meta = {
        "from": list(frm),
        "to": list(to),
        "kMax": args.k_max,
        "toolVersion": __version__,
    }
    _emit(args, ["result"], rows, meta)


def _cmd_bounds(args) -> None:
    kp = _knot_params(args)
    if args.which == "action-linking":
        if args.Delta is None or args.V is None:
            raise UsageError("action-linking needs --Delta and --V")
        try:
            result = action_linking_bound(
                kp,
                _parse_fraction(args.Delta),
                _parse_fraction(args.V),
                _parse_fraction(args.action_of_b),
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        meta = _meta(kp, Delta=args.Delta, V=args.V)
    else:
        if args.d is None or args.calabi is None:
            raise UsageError("calabi needs --d and --calabi")
        if kp.p < 2 or kp.q < 2:
            raise UsageError("the mean-action bound needs p, q >= 2")
        try:
            result = calabi_mean_action_bound(
                kp, _parse_fraction(args.d), _parse_fraction(args.calabi)
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        meta = _meta(kp, d=args.d, calabi=args.calabi)
    rows = [
        ["hypothesis_met", str(result.hypothesis_met).lower()],
        ["bound", result.bound if result.bound is not None else "n/a"],
        [
            "bound_squared",
            render_fraction(result.bound_squared) if result.bound_squared is not None else "n/a",
        ],
    ]
    _emit(args, ["quantity", "value"], rows, meta)


def _cmd_toric(args) -> None:
    kp = _knot_params(args)
    try:
        current = ReebCurrent.from_name(args.current)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    path = current_to_path(current, kp)
    verts = vertices(path)
    rows = [[str(x), str(y)] for x, y in verts]
    meta = _meta(
        kp,
        current=current.name(),
        label=path.label,
        segmentSteps=path.m,
        index=path_index(path),
        filtrationValue=path.filtration_value,
    )
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(path_svg(path))
        meta["svg"] = args.svg
    _emit(args, ["x", "y"], rows, meta)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="echtk",
        description="exact ECH invariants of S^3 fibered along the torus knot T(p,q)",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, pq=True):
        if pq:
            sp.add_argument("--p", type=int, required=True)
            sp.add_argument("--q", type=int, required=True)
        sp.add_argument(
            "--format", choices=("table", "csv", "json"), default="table"
        )

    sp = sub.add_parser("nseq", help="the sequence N_k(p,q) with repeat counts")
    add_common(sp)
    sp.add_argument("--k-max", type=int, required=True)
    sp.set_defaults(func=_cmd_nseq)

    sp = sub.add_parser("generators", help="chain complex generators up to a degree")
    add_common(sp)
    sp.add_argument("--max-degree", type=int, required=True)
    sp.set_defaults(func=_cmd_generators)

    sp = sub.add_parser("cz-table", help="Conley-Zehnder indices by action")
    add_common(sp)
    sp.add_argument("--max-action", default="2")
    sp.set_defaults(func=_cmd_cz_table)

    sp = sub.add_parser("homology", help="homology ranks over a validated window")
    add_common(sp)
    sp.add_argument("--max-index", type=int, required=True)
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--check-d-squared", action="store_true")
    sp.set_defaults(func=_cmd_homology)

    sp = sub.add_parser("knot-filtered", help="homology of a knot filtration level")
    add_common(sp)
    sp.add_argument("--max-index", type=int, required=True)
    sp.add_argument("--filtration", required=True, help="level like 12, 7/2, or 12+1*d")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.set_defaults(func=_cmd_knot_filtered)

    sp = sub.add_parser("spectrum", help="action and linking spectra with Weyl errors")
    add_common(sp)
    sp.add_argument("--k-max", type=int, required=True)
    sp.set_defaults(func=_cmd_spectrum)

    sp = sub.add_parser("weyl", help="Weyl-law error scan")
    add_common(sp)
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--plot-data", action="store_true", help="emit per-k rows")
    sp.set_defaults(func=_cmd_weyl)

    sp = sub.add_parser("obstruct", help="symplectic cobordism obstruction scan")
    sp.add_argument("--from", required=True, metavar="P,Q")
    sp.add_argument("--to", required=True, metavar="P,Q")
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sp.set_defaults(func=_cmd_obstruct)

    sp = sub.add_parser("bounds", help="quantitative dynamics bounds")
    sp.add_argument("which", choices=("action-linking", "calabi"))
    add_common(sp)
    sp.add_argument("--Delta", default=None, help="rotation offset (rational)")
    sp.add_argument("--V", default=None, help="contact volume (rational)")
    sp.add_argument("--action-of-b", default="1")
    sp.add_argument("--d", default=None, help="boundary twist in (-1/pq, 0]")
    sp.add_argument("--calabi", default=None, help="Calabi invariant (rational)")
    sp.set_defaults(func=_cmd_bounds)

    sp = sub.add_parser("toric", help="lattice-path form of a generator")
    sp.add_argument("what", choices=("path",))
    add_common(sp)
    sp.add_argument("--current", required=True, help='generator like "h p q"')
    sp.add_argument("--svg", default=None, help="write a figure to this file")
    sp.set_defaults(func=_cmd_toric)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads()
        args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WindowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
