"""Command-line interface: tables, characters, verification sweeps, reports.

Subcommands::

    modmaj table    --shape 4,2,1 [--method enumerate|qhook|formula|all]
    modmaj char     --shape 4,2,1 (--ell 2 | --mu 3,3,1)
    modmaj verify   --n-max 12 [--suite classification|fdim-census|ramanujan|fiber-laws|bounds|all]
    modmaj classify --n-max 6
    modmaj bounds   --n-max 14 [--suite fl|equidistribution|dist|fl-log|phi-d|n-cubed|binom|all]

Common flags: --format json|csv|text, --jobs N (default from MODMAJ_JOBS),
--budget N (enumeration cap), --out FILE (report), --resume FILE
(checkpoint for long verify sweeps: one JSON line per completed n, read
back on restart so an interrupted run picks up where it left off).

Exit codes: 0 all checks pass, 1 a mathematical mismatch was found,
2 usage error, 3 internal assertion failure.

Reports are deterministic: keys sorted, shapes in lexicographic order of
their part lists, no timestamps.  Same config, same bytes.
"""

import argparse
import csv
import io
import json
import math
import os
import sys

from .characters import mn_character, rect_character, rect_character_magnitude, rect_character_sign
from .modular import (
    amod_by_character_formula,
    binomial_lower_bound_check,
    dist_check,
    equidistribution_check,
    fl_bound_check,
    fl_log_bound,
    n_cubed_criterion,
    parallel_map,
    phi_d_check,
    predicted_exceptions,
    verify_classification_at,
    zero_residues,
)
from .numtheory import divisors, ramanujan_matrix_square, ramanujan_sum, ramanujan_sum_oracle
from .partitions import (
    Partition,
    dimension,
    ell_core,
    hook_lengths,
    partitions_of,
    removable_ribbons,
)
from .qpoly import amod_by_qhook, maj_generating_polynomial
from .tableaux import EnumerationBudgetExceeded, amod_by_enumeration

VERIFY_SUITES = ("classification", "fdim-census", "ramanujan", "fiber-laws", "bounds", "all")
BOUND_SUITES = ("fl", "equidistribution", "dist", "fl-log", "phi-d", "n-cubed", "binom", "all")


def _default_jobs() -> int:
    value = os.environ.get("MODMAJ_JOBS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modmaj",
        description="Counts of standard Young tableaux by major index residue, "
        "characters at rectangular cycle types, and verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, shape=False, nmax=False):
        if shape:
            p.add_argument("--shape", required=True, help='partition, e.g. "4,2,1" or "2^3,1"')
        if nmax:
            p.add_argument("--n-max", type=int, required=True, dest="n_max")
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--jobs", type=int, default=_default_jobs())
        p.add_argument("--out", help="write the report to this file")

    p_table = sub.add_parser("table", help="residue counts for one shape")
    common(p_table, shape=True)
    p_table.add_argument(
        "--method", choices=("enumerate", "qhook", "formula", "all"), default="qhook"
    )
    p_table.add_argument("--budget", type=int, default=10**7, help="enumeration cap")

    p_char = sub.add_parser("char", help="character value for one shape")
    common(p_char, shape=True)
    group = p_char.add_mutually_exclusive_group(required=True)
    group.add_argument("--ell", type=int, help="cycle length of a rectangular type")
    group.add_argument("--mu", help="full cycle type as a partition")

    p_verify = sub.add_parser("verify", help="exhaustive verification sweeps")
    common(p_verify, nmax=True)
    p_verify.add_argument("--suite", choices=VERIFY_SUITES, default="classification")
    p_verify.add_argument("--resume", help="checkpoint file, one JSON line per finished n")

    p_classify = sub.add_parser("classify", help="predicted vanishing residues per n")
    common(p_classify, nmax=True)

    p_bounds = sub.add_parser("bounds", help="inequality suites per shape")
    common(p_bounds, nmax=True)
    p_bounds.add_argument("--suite", choices=BOUND_SUITES, default="all")

    return parser


def _parse_shape(text: str) -> Partition:
    lam = Partition.parse(text)
    if lam.n < 1:
        raise ValueError("shape must be nonempty")
    return lam


def _shape_list(lam: Partition) -> list[int]:
    return list(lam.parts)


# ---------------------------------------------------------------- reports


def _emit(report: dict, fmt: str, out: str | None, text_lines: list[str], csv_rows=None) -> None:
    if fmt == "json":
        payload = json.dumps(report, sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        payload = _to_csv(csv_rows or [])
    else:
        payload = "\n".join(text_lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------- table


def cmd_table(args) -> int:
    lam = _parse_shape(args.shape)
    n = lam.n
    methods = ["enumerate", "qhook", "formula"] if args.method == "all" else [args.method]
    vectors = {}
    for method in methods:
        if method == "enumerate":
            try:
                vectors[method] = amod_by_enumeration(lam, budget=args.budget)
            except EnumerationBudgetExceeded as exc:
                print(f"modmaj table: {exc}; use --method qhook or formula", file=sys.stderr)
                return 2
        elif method == "qhook":
            vectors[method] = amod_by_qhook(lam)
        else:
            vectors[method] = amod_by_character_formula(lam)
    agree = len({tuple(v) for v in vectors.values()}) == 1
    results = [
        {"method": m, "counts": list(v), "zero_residues": sorted(v.zero_residues())}
        for m, v in sorted(vectors.items())
    ]
    summary = {
        "n": n,
        "dimension": dimension(lam),
        "agreement": agree,
        "predicted_zero_residues": sorted(zero_residues(lam)),
    }
    if "qhook" in vectors:
        summary["maj_polynomial"] = maj_generating_polynomial(lam).to_text()
    report = {
        "config": {"command": "table", "shape": _shape_list(lam), "method": args.method},
        "results": results,
        "summary": summary,
    }
    csv_rows = [
        {"shape": str(lam), "n": n, "r": r, **{m: vectors[m][r] for m in sorted(vectors)}}
        for r in range(n)
    ]
    text = [f"shape {lam}  n={n}  dimension={dimension(lam)}"]
    for m, v in sorted(vectors.items()):
        text.append(f"  {m:<9} {list(v)}")
    if "maj_polynomial" in summary:
        text.append(f"  maj polynomial: {summary['maj_polynomial']}")
    if args.method == "all":
        text.append(f"  agreement: {'OK' if agree else 'MISMATCH'}")
    _emit(report, args.format, args.out, text, csv_rows)
    return 0 if agree else 1


# ---------------------------------------------------------------- char


def cmd_char(args) -> int:
    lam = _parse_shape(args.shape)
    n = lam.n
    if args.mu is not None:
        mu = _parse_shape(args.mu)
        if mu.n != n:
            print(f"modmaj char: cycle type {mu} does not have size {n}", file=sys.stderr)
            return 2
        value = mn_character(lam, mu)
        result = {"shape": _shape_list(lam), "cycle_type": _shape_list(mu), "value": value}
        text = [f"chi({lam}) at cycle type {mu} = {value}"]
    else:
        ell = args.ell
        if ell is None or ell < 1 or n % ell != 0:
            print(f"modmaj char: --ell must divide n={n}", file=sys.stderr)
            return 2
        core = ell_core(lam, ell)
        magnitude = rect_character_magnitude(lam, ell)
        sign = rect_character_sign(lam, ell) if magnitude and ell > 1 else 1
        value = rect_character(lam, ell)
        result = {
            "shape": _shape_list(lam),
            "ell": ell,
            "value": value,
            "sign": sign,
            "magnitude": magnitude,
            "core": _shape_list(core),
            "core_empty": not core,
        }
        text = [
            f"chi({lam}) at rectangular type ({ell}^{n // ell}) = {value}"
            f"  [sign {sign:+d}, magnitude {magnitude}]",
            f"  {ell}-core: {core if core else 'empty'}",
        ]
    config = {"command": "char", "shape": _shape_list(lam)}
    if args.mu is not None:
        config["mu"] = _shape_list(mu)
    else:
        config["ell"] = args.ell
    report = {
        "config": config,
        "results": [result],
        "summary": {"value": result["value"]},
    }
    csv_rows = [
        {k: (",".join(map(str, v)) if isinstance(v, list) else v) for k, v in result.items()}
    ]
    _emit(report, args.format, args.out, text, csv_rows)
    return 0


# ---------------------------------------------------------------- verify


def _checkpoint_read(path: str, suite: str) -> dict[int, dict]:
    done = {}
    if path and os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                entry = json.loads(line)
                if entry.get("suite") == suite:
                    done[entry["n"]] = entry
    return done


def _checkpoint_append(path: str | None, entry: dict) -> None:
    if path:
        with open(path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(entry, sort_keys=True) + "\n")


def _verify_classification(n: int, jobs: int) -> dict:
    report = verify_classification_at(n, jobs)
    return {
        "n": n,
        "suite": "classification",
        "shapes": report.shapes_checked,
        "small_dimension": report.small_dimension_count,
        "mismatches": [
            {
                "shape": _shape_list(m.shape),
                "computed": list(m.computed),
                "predicted": list(m.predicted),
            }
            for m in report.mismatches
        ],
    }


def _verify_census(n: int, jobs: int) -> dict:
    count = sum(1 for lam in partitions_of(n) if dimension(lam) < n**3)
    return {"n": n, "suite": "fdim-census", "small_dimension": count, "mismatches": []}


def _verify_ramanujan(n: int, jobs: int) -> dict:
    mismatches = []
    for s in range(-2 * n, 2 * n + 1):
        if ramanujan_sum(n, s) != ramanujan_sum_oracle(n, s):
            mismatches.append({"j": n, "s": s})
    square = ramanujan_matrix_square(n)
    for i, row in enumerate(square):
        for j, value in enumerate(row):
            if value != (n if i == j else 0):
                mismatches.append({"matrix_n": n, "row": i, "col": j, "value": value})
    return {"n": n, "suite": "ramanujan", "mismatches": mismatches}


def _verify_fiber_laws(n: int, jobs: int) -> dict:
    mismatches = []
    for lam in sorted(partitions_of(n)):
        hooks = hook_lengths(lam)
        for ell in divisors(n):
            if ell == 1 or ell_core(lam, ell):
                continue
            s = n // ell
            for a in range(ell):
                pair = len({a % ell, (-a) % ell})
                count = sum(1 for h in hooks if h % ell == a or h % ell == (-a) % ell)
                if count != s * pair:
                    mismatches.append({"shape": _shape_list(lam), "ell": ell, "a": a})
        for ell in range(1, n + 1):
            for step in removable_ribbons(lam, ell):
                small = hook_lengths(step.shape)
                for a in range(ell):
                    pair = len({a % ell, (-a) % ell})
                    big_count = sum(1 for h in hooks if h % ell in (a, (-a) % ell))
                    small_count = sum(1 for h in small if h % ell in (a, (-a) % ell))
                    if big_count - small_count != pair:
                        mismatches.append(
                            {"shape": _shape_list(lam), "ribbon_to": _shape_list(step.shape), "ell": ell, "a": a}
                        )
    return {"n": n, "suite": "fiber-laws", "mismatches": mismatches}


def _verify_bounds(n: int, jobs: int) -> dict:
    tasks = [(lam.parts, "all") for lam in sorted(partitions_of(n))]
    mismatches = []
    for row in parallel_map(_bounds_row, tasks, jobs):
        for name, flag in row["checks"].items():
            if flag is False:
                mismatches.append({"shape": list(row["shape"]), "check": name})
    return {"n": n, "suite": "bounds", "mismatches": mismatches}


_VERIFY_RUNNERS = {
    "classification": _verify_classification,
    "fdim-census": _verify_census,
    "ramanujan": _verify_ramanujan,
    "fiber-laws": _verify_fiber_laws,
    "bounds": _verify_bounds,
}


def cmd_verify(args) -> int:
    if args.n_max < 1:
        print("modmaj verify: --n-max must be >= 1", file=sys.stderr)
        return 2
    suites = [s for s in VERIFY_SUITES if s != "all"] if args.suite == "all" else [args.suite]
    results = []
    total_mismatches = 0
    for suite in suites:
        done = _checkpoint_read(args.resume, suite) if args.resume else {}
        runner = _VERIFY_RUNNERS[suite]
        for n in range(1, args.n_max + 1):
            if n in done:
                entry = done[n]
            else:
                entry = runner(n, args.jobs)
                _checkpoint_append(args.resume, entry)
            results.append(entry)
            total_mismatches += len(entry["mismatches"])
    summary = {"ok": total_mismatches == 0, "mismatches": total_mismatches}
    census_suite = next((s for s in ("classification", "fdim-census") if s in suites), None)
    if census_suite:
        summary["small_dimension_total"] = sum(
            e.get("small_dimension", 0) for e in results if e["suite"] == census_suite
        )
    report = {
        "config": {"command": "verify", "n_max": args.n_max, "suite": args.suite},
        "results": results,
        "summary": summary,
    }
    csv_rows = [
        {
            "suite": e["suite"],
            "n": e["n"],
            "mismatches": len(e["mismatches"]),
            "small_dimension": e.get("small_dimension", ""),
        }
        for e in results
    ]
    text = [f"verify up to n={args.n_max}, suite={args.suite}"]
    for e in results:
        extra = f"  shapes-with-small-dimension={e['small_dimension']}" if "small_dimension" in e else ""
        text.append(f"  n={e['n']:>3} {e['suite']:<15} mismatches={len(e['mismatches'])}{extra}")
    text.append(f"total mismatches: {total_mismatches}")
    if "small_dimension_total" in summary:
        text.append(f"shapes with dimension below n^3: {summary['small_dimension_total']}")
    _emit(report, args.format, args.out, text, csv_rows)
    return 0 if total_mismatches == 0 else 1


# ---------------------------------------------------------------- classify


def cmd_classify(args) -> int:
    if args.n_max < 1:
        print("modmaj classify: --n-max must be >= 1", file=sys.stderr)
        return 2
    results = []
    for n in range(1, args.n_max + 1):
        records = [
            {"shape": _shape_list(rec.shape), "residues": sorted(rec.residues)}
            for rec in predicted_exceptions(n)
        ]
        results.append({"n": n, "exceptions": records})
    report = {
        "config": {"command": "classify", "n_max": args.n_max},
        "results": results,
        "summary": {"total_exceptional_shapes": sum(len(e["exceptions"]) for e in results)},
    }
    csv_rows = [
        {"n": e["n"], "shape": ",".join(map(str, rec["shape"])), "residues": " ".join(map(str, rec["residues"]))}
        for e in results
        for rec in e["exceptions"]
    ]
    text = []
    for e in results:
        text.append(f"n={e['n']}:")
        if not e["exceptions"]:
            text.append("  (no vanishing residues predicted)")
        for rec in e["exceptions"]:
            shape = ",".join(map(str, rec["shape"]))
            text.append(f"  ({shape}): {{{', '.join(map(str, rec['residues']))}}}")
    _emit(report, args.format, args.out, text, csv_rows)
    return 0


# ---------------------------------------------------------------- bounds


def _bounds_row(task: tuple[tuple[int, ...], str]) -> dict:
    parts, suite = task
    lam = Partition(parts)
    n = lam.n
    f = dimension(lam)
    amod = amod_by_character_formula(lam)
    checks: dict[str, bool | None] = {}

    def want(name):
        return suite in ("all", name)

    if want("fl"):
        checks["fl"] = all(fl_bound_check(lam, ell) for ell in divisors(n))
    if want("equidistribution"):
        checks["equidistribution"] = equidistribution_check(lam, amod)
    if want("dist"):
        checks["dist"] = dist_check(lam, amod)
    if want("fl-log"):
        ok = True
        for ell in divisors(n):
            if ell == 1:
                continue
            chi = abs(rect_character(lam, ell))
            if chi:
                ok = ok and math.log(chi / f) <= fl_log_bound(n, ell, f) + 1e-9
        checks["fl-log"] = ok
    if want("phi-d"):
        checks["phi-d-1"] = phi_d_check(lam, 1, amod)
        checks["phi-d-2"] = phi_d_check(lam, 2, amod)
    if want("n-cubed"):
        checks["n-cubed"] = (not n_cubed_criterion(lam)) or not amod.zero_residues()
    if want("binom"):
        checks["binom"] = binomial_lower_bound_check(lam)
    return {"shape": parts, "n": n, "dimension": f, "checks": checks}


def cmd_bounds(args) -> int:
    if args.n_max < 1:
        print("modmaj bounds: --n-max must be >= 1", file=sys.stderr)
        return 2
    tasks = [
        (lam.parts, args.suite)
        for n in range(1, args.n_max + 1)
        for lam in sorted(partitions_of(n))
    ]
    rows = list(parallel_map(_bounds_row, tasks, args.jobs))
    violations = [
        {"shape": list(row["shape"]), "check": name}
        for row in rows
        for name, flag in row["checks"].items()
        if flag is False
    ]
    report = {
        "config": {"command": "bounds", "n_max": args.n_max, "suite": args.suite},
        "results": [
            {
                "shape": list(r["shape"]),
                "n": r["n"],
                "dimension": r["dimension"],
                "checks": dict(r["checks"]),
            }
            for r in rows
        ],
        "summary": {"ok": not violations, "violations": violations},
    }
    csv_rows = [
        {
            "shape": ",".join(map(str, r["shape"])),
            "n": r["n"],
            "dimension": r["dimension"],
            **{k: ("" if v is None else v) for k, v in r["checks"].items()},
        }
        for r in rows
    ]
    text = [f"bounds up to n={args.n_max}, suite={args.suite}"]
    by_n: dict[int, int] = {}
    for r in rows:
        by_n[r["n"]] = by_n.get(r["n"], 0) + sum(1 for v in r["checks"].values() if v is False)
    for n, bad in sorted(by_n.items()):
        text.append(f"  n={n:>3} violations={bad}")
    text.append("all bounds hold" if not violations else f"VIOLATIONS: {violations}")
    _emit(report, args.format, args.out, text, csv_rows)
    return 0 if not violations else 1


# ---------------------------------------------------------------- entry


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "table": cmd_table,
        "char": cmd_char,
        "verify": cmd_verify,
        "classify": cmd_classify,
        "bounds": cmd_bounds,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"modmaj: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"modmaj: internal consistency failure: {exc}", file=sys.stderr)
        return 3


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
