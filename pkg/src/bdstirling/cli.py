"""Batch command line front end.

Subcommands: tables (Stirling/Eulerian triangles), verify (identity
sweeps), bijection (block procedure round trips on user input), census
(lattice-point classification), oeis (b-file cross-checks).

Exit codes: 0 success, 1 verification or validation failure, 2 usage or
malformed input (size-cap violations included), 3 fetch failure.
Output in csv and json modes is byte-deterministic for a fixed invocation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import oeis as oeis_mod
from .bijections import (
    OrderedPartition,
    b_procedure,
    b_procedure_inverse,
    d_procedure,
    d_procedure_inverse,
)
from .config import DEFAULT_CAPS, EnumerationCaps
from .errors import SizeOverflow, UnreachableForm
from .geometry import census, torus_census
from .groups import SignedPermutation
from .identities import IDENTITIES, descent_histogram, flag_histogram, verify_identity
from .partitions import flag_stirling_row, stirling_row

TABLE_KINDS = ("A", "B", "D", "G", "Bstar")


def _compact_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _cell(value) -> str:
    if isinstance(value, (tuple, list)):
        return _compact_json(list(value))
    return str(value)


def _emit_table(fmt: str, header: list[str], rows: list[list[str]], json_obj, footer: list[str] = ()):
    if fmt == "json":
        print(_compact_json(json_obj))
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
        return
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            if i < len(widths):
                widths[i] = max(widths[i], len(cell))
    def line(cells):
        padded = [c.ljust(widths[i]) for i, c in enumerate(cells)]
        return "| " + " | ".join(padded) + " |"
    print(line(header))
    print(line(["-" * w for w in widths]))
    for row in rows:
        print(line(row + [""] * (len(header) - len(row))))
    for text in footer:
        print(text)


def _parse_int_list(text: str, what: str) -> list[int]:
    text = (text or "").replace("−", "-").strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise _Usage(f"cannot parse {what}: {text!r}") from None


class _Usage(Exception):
    """Malformed command input; maps to exit code 2."""


def _caps_from_args(args) -> EnumerationCaps:
    cap = getattr(args, "cap", None)
    if cap is None:
        return DEFAULT_CAPS
    floor = min(
        DEFAULT_CAPS.signed_group,
        DEFAULT_CAPS.colored_group,
        DEFAULT_CAPS.census_points,
    )
    if cap > floor and not getattr(args, "allow_large", False):
        raise _Usage(
            f"--cap {cap} raises the default limit; acknowledge with --allow-large"
        )
    return EnumerationCaps(signed_group=cap, colored_group=cap, census_points=cap)


# ---------------------------------------------------------------------------
# subcommands


def cmd_tables(args) -> int:
    caps = _caps_from_args(args)
    ns = [args.n] if args.n is not None else list(range(args.nmax + 1))
    rows_values = []
    for n in ns:
        if args.table == "stirling":
            if args.kind == "Bstar":
                row = flag_stirling_row(n)
            elif args.kind == "G":
                row = stirling_row("G", n, args.m)
            else:
                row = stirling_row(args.kind, n)
        else:
            if args.kind == "Bstar":
                row = flag_histogram(n, caps=caps)
            elif args.kind == "A":
                row = descent_histogram("A", n)[: max(n, 1)]
            else:
                row = descent_histogram(args.kind, n, args.m, caps=caps)
        rows_values.append((n, list(row)))
    width = max(len(r) for _, r in rows_values)
    header = ["n"] + [str(i) for i in range(width)]
    rows = [[str(n)] + [str(v) for v in r] for n, r in rows_values]
    json_obj = {
        "table": args.table,
        "kind": args.kind,
        "m": args.m if args.kind == "G" else None,
        "rows": [{"n": n, "values": r} for n, r in rows_values],
    }
    _emit_table(args.format, header, rows, json_obj)
    return 0


def cmd_verify(args) -> int:
    caps = _caps_from_args(args)
    report = verify_identity(args.identity, args.nmax, args.m, caps=caps)
    instances = report.instances
    if args.rmax is not None:
        instances = tuple(
            inst
            for inst in instances
            if all(
                key not in ("r", "k") or value <= args.rmax
                for key, value in inst.params
            )
        )
    header = ["params", "lhs", "rhs", "ok", "note"]
    rows = [
        [inst.params_text(), _cell(inst.lhs), _cell(inst.rhs),
         "yes" if inst.ok else "no", inst.note]
        for inst in instances
    ]
    failures = sum(1 for inst in instances if not inst.ok)
    passed = failures == 0
    summary = (
        f"{report.identity}: {'PASS' if passed else 'FAIL'}"
        f" ({len(instances)} instances, {failures} mismatches"
        + (f"; skipped {', '.join(report.skipped)}" if report.skipped else "")
        + ("; report only, not asserted" if not report.asserted else "")
        + ")"
    )
    json_obj = {
        "identity": report.identity,
        "asserted": report.asserted,
        "passed": passed,
        "skipped": list(report.skipped),
        "instances": [
            {
                "params": dict(inst.params),
                "lhs": list(inst.lhs) if isinstance(inst.lhs, tuple) else inst.lhs,
                "rhs": list(inst.rhs) if isinstance(inst.rhs, tuple) else inst.rhs,
                "ok": inst.ok,
                "note": inst.note,
            }
            for inst in instances
        ],
    }
    _emit_table(args.format, header, rows, json_obj, footer=[summary])
    if not report.asserted:
        return 0
    return 0 if passed else 1


def cmd_bijection(args) -> int:
    if args.direction == "forward":
        if args.perm is None:
            raise _Usage("forward needs --perm")
        window = _parse_int_list(args.perm, "--perm")
        spots = _parse_int_list(args.spots, "--spots")
        beta = SignedPermutation(tuple(window))
        proc = d_procedure if args.kind == "D" else b_procedure
        op = proc(beta, frozenset(spots))
        print(_compact_json(op.to_doc()))
        return 0
    text = args.doc if args.doc is not None else sys.stdin.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise _Usage(f"document is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise _Usage("document must be a JSON object")
    doc_kind = data.get("kind")
    if args.kind and doc_kind and args.kind != doc_kind:
        raise _Usage(
            f"--kind {args.kind} disagrees with document kind {doc_kind}"
        )
    if doc_kind is None:
        if not args.kind:
            raise _Usage("no kind in document and no --kind given")
        data = dict(data, kind=args.kind)
    try:
        op = OrderedPartition.from_doc(data)
    except TypeError as e:
        raise _Usage(f"malformed document: {e}") from None
    inverse = d_procedure_inverse if op.kind == "D" else b_procedure_inverse
    try:
        element, spots = inverse(op)
    except UnreachableForm as e:
        print(
            _compact_json(
                {
                    "kind": op.kind,
                    "n": op.n,
                    "unreachable": True,
                    "reason": str(e),
                    "witness": e.witness["blocks"],
                }
            )
        )
        return 0
    print(
        _compact_json(
            {
                "kind": op.kind,
                "n": op.n,
                "perm": element.to_text(),
                "spots": sorted(spots),
            }
        )
    )
    return 0


def cmd_census(args) -> int:
    caps = _caps_from_args(args)
    if args.kind in ("B", "D"):
        if args.m is None:
            raise _Usage("cube census needs --m (half-width)")
        result = census(args.kind, args.n, args.m, caps=caps)
    else:
        if args.m is None or args.t is None:
            raise _Usage("torus census needs --m (colors) and --t (magnitudes)")
        result = torus_census(args.n, args.m, args.t, caps=caps)
    items = sorted(result.counts.items(), key=lambda kv: (kv[0].r, kv[0].sort_key()))
    header = ["partition", "r", "count", "expected"]
    rows = [
        [p.text(), str(p.r), str(c), str(result.expected(p))]
        for p, c in items
    ]
    total = sum(result.counts.values()) + result.missing
    footer = [
        f"total {total} = {result.x}^{result.n}",
        f"free {result.free}",
        f"missing {result.missing}",
    ]
    json_obj = {
        "kind": result.kind,
        "n": result.n,
        "x": result.x,
        "m": result.m,
        "rows": [
            {"partition": p.text(), "r": p.r, "count": c, "expected": result.expected(p)}
            for p, c in items
        ],
        "total": total,
        "free": result.free,
        "missing": result.missing,
    }
    _emit_table(args.format, header, rows, json_obj, footer=footer)
    return 0


def cmd_oeis(args) -> int:
    if args.fetch and args.fixture:
        raise _Usage("--fetch and --fixture are mutually exclusive")
    if args.fetch:
        reference = oeis_mod.fetch_bfile(args.seq)
        source = "fetched b-file"
    else:
        try:
            reference = oeis_mod.load_fixture(args.seq, path=args.fixture)
        except OSError as e:
            raise _Usage(f"cannot read fixture: {e}") from None
        source = args.fixture or "packaged fixture"
    report = oeis_mod.compare(args.seq, reference, rows=args.nmax)
    if args.format == "json":
        print(
            _compact_json(
                {
                    "seq": report.seq,
                    "source": source,
                    "checked": report.checked,
                    "ok": report.ok,
                    "mismatch": (
                        None
                        if report.first_mismatch is None
                        else {
                            "index": report.first_mismatch[0],
                            "ours": report.first_mismatch[1],
                            "reference": report.first_mismatch[2],
                        }
                    ),
                }
            )
        )
    else:
        if report.ok:
            print(f"{report.seq}: {report.checked} terms checked against {source}: OK")
        elif report.first_mismatch is None:
            print(f"{report.seq}: no overlapping terms with {source}")
        else:
            idx, ours, theirs = report.first_mismatch
            print(
                f"{report.seq}: first mismatch at index {idx}:"
                f" computed {ours}, reference {theirs}"
            )
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bdstirling",
        description="Exact Stirling/Eulerian tables, identity verification, "
        "block-procedure bijections, lattice censuses, OEIS checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, cap=True):
        p.add_argument("--format", choices=("md", "csv", "json"), default="md")
        if cap:
            p.add_argument("--cap", type=int, default=None,
                           help="override enumeration caps")
            p.add_argument("--allow-large", action="store_true",
                           help="acknowledge caps above the defaults")
        p.add_argument("--seed", type=int, default=0,
                       help="reserved for randomized reports; fixed default")

    p = sub.add_parser("tables", help="emit Stirling or Eulerian triangles")
    p.add_argument("table", choices=("stirling", "eulerian"))
    p.add_argument("--kind", choices=TABLE_KINDS, required=True)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--n", type=int, default=None, help="single row instead of 0..nmax")
    p.add_argument("--m", type=int, default=2, help="colors for kind G")
    add_common(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run one identity over a parameter range")
    p.add_argument("--identity", choices=sorted(IDENTITIES), required=True)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--rmax", type=int, default=None)
    p.add_argument("--m", type=int, default=2)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", help="block procedure, forward or inverse")
    p.add_argument("direction", choices=("forward", "inverse"))
    p.add_argument("--kind", choices=("B", "D"), default=None)
    p.add_argument("--perm", default=None, help="window, e.g. -2,3,5,1,-4")
    p.add_argument("--spots", default="", help="artificial separator gaps, e.g. 0,3")
    p.add_argument("--doc", default=None,
                   help="ordered partition JSON (default: stdin) for inverse")
    add_common(p, cap=False)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("census", help="lattice point census")
    p.add_argument("--kind", choices=("B", "D", "G"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None,
                   help="cube half-width (B/D) or colors (G)")
    p.add_argument("--t", type=int, default=None, help="magnitudes per color (G)")
    add_common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("oeis", help="compare triangles against OEIS b-files")
    p.add_argument("--seq", choices=sorted(oeis_mod.SEQUENCES), required=True)
    p.add_argument("--fixture", default=None, help="path to a local b-file")
    p.add_argument("--fetch", action="store_true", help="fetch the live b-file")
    p.add_argument("--nmax", type=int, default=12,
                   help="triangle rows to generate for the comparison")
    add_common(p, cap=False)
    p.set_defaults(func=cmd_oeis)

    return parser


def _glue_negative_values(argv):
    """Join "--perm -2,3,..." into "--perm=-2,3,..." so argparse does not
    mistake a window starting with a negative entry for an option flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (tok in ("--perm", "--spots", "--doc") and nxt is not None
                and len(nxt) >= 2 and nxt[0] == "-" and nxt[1].isdigit()):
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_glue_negative_values(list(argv)))
    try:
        return args.func(args)
    except _Usage as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SizeOverflow as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except TypeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: fetch failed: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
