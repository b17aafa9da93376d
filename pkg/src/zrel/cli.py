"""Command-line surface: enumeration, construction, and verification.

Commands emit a single output document per invocation as text (default),
CSV, or JSON.  JSON documents carry a schema version, the command name, its
semantic parameters, and sorted rows; they are byte-identical regardless of
the --threads setting.  Exit codes: 0 success, 1 verification failure,
2 usage error, 3 enumeration-budget refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from itertools import combinations
from typing import Sequence

from .construct import ZPair, classify_pair, inherit, k4_pair
from .core import PitchClassSet, normalize_to_zero, set_from_composition, steps
from .enumeration import (
    BudgetExceededError,
    COMPOSITION_BUDGET,
    RealizationClass,
    check_budget,
    composition_count,
    summary,
    z_groups,
)
from .verify import SUITES, run_suite

SCHEMA_VERSION = "1"


# ── document construction ─────────────────────────────────────────────────


def _doc(command: str, parameters: dict, rows: list) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "rows": rows,
    }


def _pair_row(pair: ZPair) -> dict:
    return {
        "n": pair.n,
        "set1": list(pair.set1.elements),
        "set2": list(pair.set2.elements),
        "composition1": list(steps(normalize_to_zero(pair.set1)).parts),
        "composition2": list(steps(normalize_to_zero(pair.set2)).parts),
        "mu_counts": list(pair.mu.counts),
        "mu_multiset": list(pair.mu.as_multiset()),
        "classification": _classification_row(pair),
    }


def _classification_row(pair: ZPair) -> dict:
    if pair.is_primitive:
        return {"kind": "primitive"}
    return {"kind": "derived", "d": pair.scale, "base": _pair_row(pair.base)}


def _group_row(n: int, k: int, index: int, rc: RealizationClass) -> dict:
    sets = [set_from_composition(c) for c in rc.realizations]
    members = [
        {
            "composition": list(comp.parts),
            "set": list(pcs.elements),
            "step_gcd": math.gcd(*comp.parts),
        }
        for comp, pcs in zip(rc.realizations, sets)
    ]
    pairs = [
        {
            "members": [i, j],
            "classification": _classification_row(classify_pair(sets[i], sets[j])),
        }
        for i, j in combinations(range(len(sets)), 2)
    ]
    return {
        "index": index,
        "n": n,
        "k": k,
        "mu_counts": list(rc.mu.counts),
        "mu_multiset": list(rc.mu.as_multiset()),
        "members": members,
        "pairs": pairs,
    }


# ── commands ──────────────────────────────────────────────────────────────


def cmd_table(args) -> tuple[dict, int]:
    n = args.n
    kmin = 2 if args.kmin is None else args.kmin
    kmax = n // 2 if args.kmax is None else args.kmax
    if not 2 <= kmin <= kmax <= n:
        raise ValueError(f"need 2 <= kmin <= kmax <= {n}, got kmin={kmin}, kmax={kmax}")
    ks = range(kmin, kmax + 1)
    check_budget(n, ks)
    rows = [
        {
            "n": row.n,
            "k": row.k,
            "ti_classes": row.ti_classes,
            "multisets": row.multisets,
            "nonreconstructible": row.nonreconstructible,
        }
        for row in summary(n, ks, args.threads)
    ]
    return _doc("table", {"n": n, "kmin": kmin, "kmax": kmax}, rows), 0


def cmd_zpairs(args) -> tuple[dict, int]:
    n, k = args.n, args.k
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= {n}, got k={k}")
    check_budget(n, [k])
    rows = [
        _group_row(n, k, i, rc)
        for i, rc in enumerate(z_groups(n, k, args.threads), start=1)
    ]
    return _doc("zpairs", {"n": n, "k": k}, rows), 0


def cmd_kmin(args) -> tuple[dict, int]:
    n = args.n
    k_hi = n // 2 if args.kmax is None else args.kmax
    if k_hi > n:
        raise ValueError(f"kmax cannot exceed n={n}, got {k_hi}")
    spent = 0
    found = None
    witness = None
    searched_to = min(k_hi, 3)
    for k in range(4, min(k_hi, n) + 1):
        cost = composition_count(n, k)
        if spent + cost > COMPOSITION_BUDGET:
            searched = (
                f"searched k=4..{k - 1} of 4..{k_hi}"
                if k > 4
                else f"nothing searched, k range 4..{k_hi}"
            )
            raise BudgetExceededError(
                f"composition budget exhausted before k={k} ({searched}); "
                "lower --kmax"
            )
        spent += cost
        searched_to = k
        groups = z_groups(n, k, args.threads)
        if groups:
            found = k
            witness = _group_row(n, k, 1, groups[0])
            break
    rows = [
        {
            "n": n,
            "k_min": found,
            "k_max_searched": searched_to,
            "witness": witness,
        }
    ]
    return _doc("kmin", {"n": n, "kmax": k_hi}, rows), 0


def cmd_k4(args) -> tuple[dict, int]:
    pair = k4_pair(args.n, args.a)
    return _doc("k4", {"n": args.n, "a": args.a}, [_pair_row(pair)]), 0


def cmd_scale(args) -> tuple[dict, int]:
    if args.d < 1:
        raise ValueError(f"scale factor must be >= 1, got {args.d}")
    if not 2 <= args.k <= args.base_n:
        raise ValueError(f"need 2 <= k <= {args.base_n}, got k={args.k}")
    check_budget(args.base_n, [args.k])
    if args.d == 1:
        pairs = []
        for group in z_groups(args.base_n, args.k, args.threads):
            members = [set_from_composition(c) for c in group.realizations]
            pairs.extend(
                classify_pair(s1, s2) for s1, s2 in combinations(members, 2)
            )
    else:
        pairs = inherit(args.base_n * args.d, args.base_n, args.k, args.threads)
    rows = [_pair_row(p) for p in pairs]
    params = {"base_n": args.base_n, "d": args.d, "k": args.k}
    return _doc("scale", params, rows), 0


def cmd_classify(args) -> tuple[dict, int]:
    p1 = PitchClassSet(args.n, _parse_set(args.set1))
    p2 = PitchClassSet(args.n, _parse_set(args.set2))
    pair = classify_pair(p1, p2)
    params = {"n": args.n, "set1": list(p1.elements), "set2": list(p2.elements)}
    return _doc("classify", params, [_pair_row(pair)]), 0


def cmd_verify(args) -> tuple[dict, int]:
    results = run_suite(args.suite, args.threads)
    rows = [
        {"check": r.name, "status": "pass" if r.passed else "fail", "detail": r.detail}
        for r in results
    ]
    code = 0 if all(r.passed for r in results) else 1
    return _doc("verify", {"suite": args.suite}, rows), code


def _parse_set(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(
            f"sets are comma-separated residues without whitespace, got {text!r}"
        ) from None


# ── rendering ─────────────────────────────────────────────────────────────


def _fmt_set(elements) -> str:
    return "{" + ",".join(str(e) for e in elements) + "}"


def _fmt_comp(parts) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def _fmt_classification(row: dict) -> str:
    if row["kind"] == "primitive":
        return "primitive"
    base = row["base"]
    inner = _fmt_classification(base["classification"])
    return (
        f"derived d={row['d']} from Z{base['n']} "
        f"{_fmt_set(base['set1'])}/{_fmt_set(base['set2'])} [{inner}]"
    )


def _columns(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]


def _pair_lines(row: dict) -> list[str]:
    return [
        f"Z{row['n']} pair",
        f"  set1 {_fmt_set(row['set1'])}  composition {_fmt_comp(row['composition1'])}",
        f"  set2 {_fmt_set(row['set2'])}  composition {_fmt_comp(row['composition2'])}",
        f"  mu {_fmt_set(row['mu_multiset'])}",
        f"  classification: {_fmt_classification(row['classification'])}",
    ]


def _group_lines(row: dict) -> list[str]:
    lines = [f"group {row['index']}  mu={_fmt_set(row['mu_multiset'])}"]
    for member in row["members"]:
        lines.append(
            f"  {_fmt_comp(member['composition'])}  {_fmt_set(member['set'])}"
        )
    for pair in row["pairs"]:
        i, j = pair["members"]
        lines.append(
            f"  members {i}-{j}: {_fmt_classification(pair['classification'])}"
        )
    return lines


def _render_text(doc: dict) -> str:
    command = doc["command"]
    params = doc["parameters"]
    rows = doc["rows"]
    out: list[str] = []
    if command == "table":
        out.append(f"composition classes of Z_{params['n']} by cardinality")
        header = ["k", "ti_classes", "multisets", "nonreconstructible"]
        body = [
            [str(r["k"]), str(r["ti_classes"]), str(r["multisets"]),
             str(r["nonreconstructible"])]
            for r in rows
        ]
        out.extend(_columns([header] + body))
    elif command == "zpairs":
        out.append(
            f"n={params['n']} k={params['k']}: {len(rows)} Z-group(s)"
        )
        for row in rows:
            out.extend(_group_lines(row))
    elif command == "kmin":
        row = rows[0]
        if row["k_min"] is None:
            out.append(
                f"k_min({row['n']}): none up to k={row['k_max_searched']}"
            )
        else:
            out.append(f"k_min({row['n']}) = {row['k_min']}")
            out.append("witness:")
            out.extend(_group_lines(row["witness"]))
    elif command in ("k4", "scale", "classify"):
        if not rows:
            out.append("no Z-pairs found")
        for row in rows:
            out.extend(_pair_lines(row))
    elif command == "verify":
        for row in rows:
            mark = "PASS" if row["status"] == "pass" else "FAIL"
            suffix = f"  ({row['detail']})" if row["detail"] else ""
            out.append(f"{mark} {row['check']}{suffix}")
        passed = sum(1 for r in rows if r["status"] == "pass")
        out.append(f"{passed}/{len(rows)} checks passed")
    return "\n".join(out) + "\n"


def _render_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    command = doc["command"]
    rows = doc["rows"]
    if command == "table":
        writer.writerow(["n", "k", "ti_classes", "multisets", "nonreconstructible"])
        for r in rows:
            writer.writerow(
                [r["n"], r["k"], r["ti_classes"], r["multisets"],
                 r["nonreconstructible"]]
            )
    elif command == "zpairs":
        writer.writerow(
            ["n", "k", "group", "member", "composition", "set", "mu_multiset",
             "step_gcd"]
        )
        for r in rows:
            for m, member in enumerate(r["members"]):
                writer.writerow(
                    [
                        r["n"],
                        r["k"],
                        r["index"],
                        m,
                        _fmt_comp(member["composition"]),
                        ",".join(str(e) for e in member["set"]),
                        ",".join(str(ic) for ic in r["mu_multiset"]),
                        member["step_gcd"],
                    ]
                )
    elif command == "kmin":
        writer.writerow(["n", "k_min", "k_max_searched"])
        for r in rows:
            writer.writerow(
                [r["n"], "" if r["k_min"] is None else r["k_min"],
                 r["k_max_searched"]]
            )
    elif command in ("k4", "scale", "classify"):
        writer.writerow(
            ["n", "set1", "set2", "composition1", "composition2", "mu_multiset",
             "classification"]
        )
        for r in rows:
            writer.writerow(
                [
                    r["n"],
                    ",".join(str(e) for e in r["set1"]),
                    ",".join(str(e) for e in r["set2"]),
                    _fmt_comp(r["composition1"]),
                    _fmt_comp(r["composition2"]),
                    ",".join(str(ic) for ic in r["mu_multiset"]),
                    _fmt_classification(r["classification"]),
                ]
            )
    elif command == "verify":
        writer.writerow(["check", "status", "detail"])
        for r in rows:
            writer.writerow([r["check"], r["status"], r["detail"]])
    return buf.getvalue()


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(doc)
    return _render_text(doc)


# ── argument parsing and entry point ──────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zrel",
        description="Enumerate and construct Z-related pitch-class sets over Z_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("text", "csv", "json"),
            default="text",
            help="output format (default: text)",
        )
        p.add_argument(
            "--threads",
            type=int,
            default=os.cpu_count() or 1,
            metavar="N",
            help="worker count for enumeration; output is independent of it",
        )

    p = sub.add_parser("table", help="class/vector/Z counts per cardinality")
    p.add_argument("n", type=int)
    p.add_argument("--kmin", type=int, default=None, help="lowest cardinality (default 2)")
    p.add_argument("--kmax", type=int, default=None, help="highest cardinality (default n//2)")
    common(p)

    p = sub.add_parser("zpairs", help="all Z-groups at one (n, k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    common(p)

    p = sub.add_parser("kmin", help="smallest cardinality admitting a Z-pair")
    p.add_argument("n", type=int)
    p.add_argument(
        "--kmax",
        type=int,
        default=None,
        help="search bound (default n//2, assuming complement symmetry)",
    )
    common(p)

    p = sub.add_parser("k4", help="explicit 4-element Z-pair for n divisible by 4")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int, help="offset, 1 <= a < n/4")
    common(p)

    p = sub.add_parser("scale", help="scale the Z-pairs of Z_m up to Z_{d*m}")
    p.add_argument("base_n", type=int, help="base modulus m")
    p.add_argument("d", type=int, help="scale factor")
    p.add_argument("k", type=int, help="cardinality to enumerate at the base")
    common(p)

    p = sub.add_parser("classify", help="primitive/derived status of a Z-pair")
    p.add_argument("n", type=int)
    p.add_argument("set1", help="comma-separated residues, e.g. 0,1,3,7")
    p.add_argument("set2", help="comma-separated residues, e.g. 0,1,4,6")
    common(p)

    p = sub.add_parser("verify", help="run a built-in verification suite")
    p.add_argument("suite", choices=(*SUITES, "all"))
    common(p)

    return parser


COMMANDS = {
    "table": cmd_table,
    "zpairs": cmd_zpairs,
    "kmin": cmd_kmin,
    "k4": cmd_k4,
    "scale": cmd_scale,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    try:
        doc, code = COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(doc, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
