"""Command-line interface.

Codes travel between commands in a small text format: a header line
``L n=<length>`` or ``K n=<length>`` followed by one generator word per
line (alphabet 01wW for L, 0abc for K).  Commands read a code from a file
argument or stdin and write results to stdout, so they compose with pipes:

    lcodes named Upsilon3 | lcodes wenum --kind swe

Exit codes: 0 on success, 1 on domain errors (bad input, resource limits),
2 on usage errors.  Every command accepts --json for a machine-readable
variant carrying the schema tag "lcodes/1".
"""

from __future__ import annotations

import argparse
import json
import sys

from .klein import LcodeError, SYMBOL_CHARS, format_word
from .codes import LinearCode
from . import enumerators
from .catalog import named, named_catalog
from .maps import (
    beta,
    format_marking,
    marking_classes,
    parse_marking,
    phi,
    phi_inv,
    phi_inv_marked,
    psi,
    sigma,
)
from .symmetry import are_equivalent, aut_group, canonical_form, kleinian_aut_group
from .classify import (
    census_by_min_weight,
    classify_self_dual,
    extremal_bound,
    find_extremal,
    indecomposable_count,
    mass_check,
    parse_db_line,
    record_to_line,
)

SCHEMA = "lcodes/1"


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_code(path: str | None) -> LinearCode:
    return LinearCode.from_text(_read_text(path))


def _emit_json(payload: dict) -> None:
    payload = {"schema": SCHEMA, **payload}
    print(json.dumps(payload, sort_keys=True))


def _code_json(code: LinearCode) -> dict:
    return {
        "flavor": code.flavor,
        "n": code.n,
        "generators": [format_word(b, code.n, code.flavor) for b in code.basis],
    }


def _cycles(perm) -> str:
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen:
            continue
        cyc = [i]
        j = perm[i]
        while j != i:
            cyc.append(j)
            j = perm[j]
        seen.update(cyc)
        if len(cyc) > 1:
            out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def _local_label(table, flavor: str) -> str:
    if table == (0, 1, 2, 3):
        return "."
    chars = SYMBOL_CHARS[flavor]
    return "".join(chars[table[s]] for s in (1, 2, 3))


def _perm_text(g) -> str:
    locals_part = ",".join(
        f"{pos}:{_local_label(tab, g.flavor)}"
        for pos, tab in enumerate(g.local)
        if tab != (0, 1, 2, 3)
    )
    return f"{_cycles(g.perm)} [{locals_part or '-'}]"


def _perm_json(g) -> dict:
    return {
        "perm": list(g.perm),
        "local": [_local_label(tab, g.flavor) for tab in g.local],
    }


# -- commands -----------------------------------------------------------------


def cmd_named(args) -> int:
    if args.list:
        for name, desc in named_catalog().items():
            print(f"{name:14} {desc}")
        return 0
    if not args.name:
        raise LcodeError("missing code name (or use --list)")
    code = named(args.name)
    if args.json:
        _emit_json({"command": "named", "name": args.name, "code": _code_json(code)})
    else:
        sys.stdout.write(code.to_text())
    return 0


def cmd_info(args) -> int:
    code = _read_code(args.file)
    rank = code.rank
    fields = {
        "flavor": code.flavor,
        "n": code.n,
        "rank": rank,
        "dim": str(code.dim),
        "size": code.size,
        "self_orthogonal": code.is_self_orthogonal(),
        "self_dual": code.is_self_dual(),
        "even": code.is_even(),
        "hamming_even": code.is_hamming_even(),
        "min_ewt": code.min_ewt() if rank else None,
        "min_hwt": code.min_hwt() if rank else None,
    }
    if args.json:
        _emit_json({"command": "info", **fields})
    else:
        for key, value in fields.items():
            if isinstance(value, bool):
                value = "yes" if value else "no"
            if value is None:
                value = "-"
            print(f"{key} {value}")
    return 0


def cmd_dual(args) -> int:
    code = _read_code(args.file)
    out = code.dual()
    if args.json:
        _emit_json({"command": "dual", "code": _code_json(out)})
    else:
        sys.stdout.write(out.to_text())
    return 0


def cmd_wenum(args) -> int:
    code = _read_code(args.file)
    kinds = {
        "cwe": enumerators.cwe,
        "swe": enumerators.swe,
        "hamming": enumerators.hamming_we,
        "euclid": enumerators.euclid_we,
    }
    poly = kinds[args.kind](code)
    if args.json:
        _emit_json({"command": "wenum", "kind": args.kind, "polynomial": str(poly)})
    else:
        print(poly)
    return 0


def cmd_map(args) -> int:
    code = _read_code(args.file)
    which = args.which
    if which == "phi":
        out = phi(code)
    elif which == "phi-inv":
        if args.marking is not None:
            marks = parse_marking(args.marking, code.n)
            out = phi_inv_marked(code, marks)
        else:
            out = phi_inv(code)
    elif which == "sigma":
        out = sigma(code)
    elif which == "psi":
        out = psi(code)
    elif which == "beta":
        bcode = beta(code)
        if args.json:
            _emit_json(
                {
                    "command": "map",
                    "which": "beta",
                    "n": bcode.n,
                    "generators": [
                        format(b, f"0{bcode.n}b") for b in bcode.basis
                    ],
                }
            )
        else:
            sys.stdout.write(bcode.to_text())
        return 0
    else:  # pragma: no cover - argparse restricts choices
        raise LcodeError(f"unknown map {which!r}")
    if args.json:
        _emit_json({"command": "map", "which": which, "code": _code_json(out)})
    else:
        sys.stdout.write(out.to_text())
    return 0


def cmd_aut(args) -> int:
    code = _read_code(args.file)
    group = kleinian_aut_group(code) if args.kleinian else aut_group(code)
    if args.json:
        _emit_json(
            {
                "command": "aut",
                "order": group.order,
                "orbit_size": group.orbit_size,
                "generators": [_perm_json(g) for g in group.generators],
            }
        )
    else:
        print(f"order {group.order}")
        print(f"orbit {group.orbit_size}")
        for g in group.generators:
            print(f"gen {_perm_text(g)}")
    return 0


def cmd_canon(args) -> int:
    code = _read_code(args.file)
    result = canonical_form(code)
    if args.json:
        _emit_json(
            {
                "command": "canon",
                "code": _code_json(result.code),
                "transporter": _perm_json(result.transporter),
                "aut_order": result.aut_order,
                "orbit_size": result.orbit_size,
            }
        )
    else:
        sys.stdout.write(result.code.to_text())
        print(f"# transporter {_perm_text(result.transporter)}")
        print(f"# aut_order {result.aut_order}")
    return 0


def cmd_equiv(args) -> int:
    a = LinearCode.from_text(_read_text(args.file1))
    b = LinearCode.from_text(_read_text(args.file2))
    g = are_equivalent(a, b)
    if args.json:
        _emit_json(
            {
                "command": "equiv",
                "equivalent": g is not None,
                "transporter": _perm_json(g) if g is not None else None,
            }
        )
    else:
        if g is None:
            print("inequivalent")
        else:
            print(f"equivalent {_perm_text(g)}")
    return 0


def cmd_classify(args) -> int:
    records = classify_self_dual(args.length, args.even, threads=args.threads)
    lines = [record_to_line(rec) for rec in records]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
        print(f"wrote {len(lines)} classes to {args.out}", file=sys.stderr)
    else:
        for line in lines:
            print(line)
    return 0


def cmd_mass(args) -> int:
    records = classify_self_dual(args.length, args.even)
    report = mass_check(records, args.length, args.even)
    if args.json:
        _emit_json(
            {
                "command": "mass",
                "n": report.n,
                "even": report.even_only,
                "classes": report.class_count,
                "expected": report.expected,
                "total": report.total,
                "ok": report.ok,
            }
        )
    else:
        print(f"{report.expected} {'OK' if report.ok else 'FAIL'}")
    return 1 if not report.ok else 0


def cmd_census(args) -> int:
    text = _read_text(args.file)
    records = [parse_db_line(ln) for ln in text.splitlines() if ln.strip()]
    if not records:
        raise LcodeError("no database lines to census")
    counts = census_by_min_weight(records)
    indec = indecomposable_count(records)
    if args.json:
        _emit_json(
            {
                "command": "census",
                "classes": len(records),
                "by_min_ewt": {str(d): c for d, c in counts.items()},
                "indecomposable": indec,
            }
        )
    else:
        print(f"classes {len(records)}")
        for d, c in counts.items():
            print(f"d={d} {c}")
        print(f"indecomposable {indec}")
    return 0


def cmd_markings(args) -> int:
    code = _read_code(args.file)
    classes = marking_classes(code)
    if args.json:
        _emit_json(
            {
                "command": "markings",
                "classes": [
                    {
                        "marking": format_marking(c.representative),
                        "orbit_size": c.orbit_size,
                        "stabilizer_order": c.stabilizer_order,
                    }
                    for c in classes
                ],
            }
        )
    else:
        for c in classes:
            print(
                f"{format_marking(c.representative)} {c.orbit_size} "
                f"{c.stabilizer_order}"
            )
    return 0


def cmd_extremal(args) -> int:
    bound = extremal_bound(args.length, args.even)
    records = find_extremal(args.length, args.even)
    if args.json:
        _emit_json(
            {
                "command": "extremal",
                "n": args.length,
                "even": args.even,
                "bound": bound,
                "count": len(records),
                "classes": [record_to_line(rec) for rec in records],
            }
        )
    else:
        print(f"bound {bound}")
        print(f"count {len(records)}")
        for rec in records:
            print(record_to_line(rec))
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcodes",
        description="Additive codes over the Klein four group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    p = add("named", cmd_named, "print a code from the catalog")
    p.add_argument("name", nargs="?", help="catalog name, e.g. Upsilon3")
    p.add_argument("--list", action="store_true", help="list available names")

    p = add("info", cmd_info, "basic parameters and predicates of a code")
    p.add_argument("file", nargs="?", help="code file (default: stdin)")

    p = add("dual", cmd_dual, "dual code under the scalar product")
    p.add_argument("file", nargs="?")

    p = add("wenum", cmd_wenum, "weight enumerator of a code")
    p.add_argument("--kind", choices=("cwe", "swe", "hamming", "euclid"),
                   default="swe")
    p.add_argument("file", nargs="?")

    p = add("map", cmd_map, "apply a structure map to a code")
    p.add_argument("--which", required=True,
                   choices=("phi", "phi-inv", "sigma", "psi", "beta"))
    p.add_argument("--marking", help="marking word over abc for phi-inv")
    p.add_argument("file", nargs="?")

    p = add("aut", cmd_aut, "automorphism group of a code")
    p.add_argument("--kleinian", action="store_true",
                   help="use the larger K-flavor group")
    p.add_argument("file", nargs="?")

    p = add("canon", cmd_canon, "canonical form with a transporter")
    p.add_argument("file", nargs="?")

    p = add("equiv", cmd_equiv, "test equivalence of two codes")
    p.add_argument("file1")
    p.add_argument("file2")

    p = add("classify", cmd_classify, "classify self-dual codes of a length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--even", action="store_true")
    p.add_argument("--out", help="write database lines to a file")
    p.add_argument("--threads", type=int, default=1)

    p = add("mass", cmd_mass, "verify the classification mass formula")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--even", action="store_true")

    p = add("census", cmd_census, "summarize a classification database")
    p.add_argument("file", nargs="?")

    p = add("markings", cmd_markings, "marking classes of a K-flavor code")
    p.add_argument("file", nargs="?")

    p = add("extremal", cmd_extremal, "classes meeting the extremal bound")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--even", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LcodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:  # downstream closed the pipe; not our error
        return 0


if __name__ == "__main__":
    sys.exit(main())
