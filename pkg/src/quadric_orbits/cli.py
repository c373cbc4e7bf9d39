"""
Command-line front end.

    quadric-orbits count 3 --method all
    quadric-orbits table 5 --format csv
    quadric-orbits verify --range 1..6
    quadric-orbits conjecture 7
    quadric-orbits sequence borel_orbits 10

Exit status: 0 success, 1 a check or cross-method agreement failed, 2 usage
or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from pathlib import Path

from .audit import audit_published_table, enumerator_table, unimodality_scan
from .coxeter import PERM_CUTOFF
from .errors import CutoffExceeded, InvariantFailure
from .orbits import METHODS, b_equivariant, fibonacci, ordered_bell
from .tableaux import BOX_CUTOFF, involution_count
from .verify import Settings, run_verification

MIN_CUTOFF = 5

SEQUENCES = {
    # name: (first index, term function, provenance)
    "borel_orbits": (1, lambda n: METHODS["compositions"](n),
                     "b(X_n) = sum over compositions of multinomial(n; i) * prod I(i_j)"),
    "ordered_bell": (0, ordered_bell, "b_n = sum_{k=1}^{n} C(n,k) b_{n-k}, b_0 = 1"),
    "involutions": (0, involution_count, "I(n) = I(n-1) + (n-1) I(n-2), I(0) = I(1) = 1"),
    "fibonacci": (1, fibonacci, "F_n = F_{n-1} + F_{n-2}, F_1 = F_2 = 1"),
    "equivariant_orbits": (1, b_equivariant, "n! b_n, checked against sum_I (n!)^2 / n_I"),
    "special_subset_counts": (1, lambda n: fibonacci(n + 1),
                              "subsets of [n-1] without consecutive members: F_{n+1}"),
}


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


class Cache:
    """JSON file mapping "method:n" to a decimal string."""

    def __init__(self, path: str | None):
        self.path = Path(path) if path else None
        self.data: dict[str, str] = {}
        if self.path and self.path.exists():
            try:
                self.data = json.loads(self.path.read_text(encoding="utf-8"))
            except json.JSONDecodeError as exc:
                raise UsageError(f"cache file {self.path} is not valid JSON: {exc}") from None

    def get(self, method: str, n: int, compute) -> int:
        key = f"{method}:{n}"
        if key in self.data:
            return int(self.data[key])
        value = compute()
        if self.path:
            self.data[key] = str(value)
        return value

    def save(self) -> None:
        if self.path:
            self.path.write_text(dumps(dict(sorted(self.data.items()))) + "\n", encoding="utf-8")


def _write_csv(rows: list[list], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)


# commands ---------------------------------------------------------------

def cmd_count(args, out, err) -> int:
    lo, hi = parse_range(args.n)
    if lo < 1:
        raise UsageError("n must be >= 1")
    if args.method == "descents" and hi > args.cutoff_perm:
        raise UsageError(f"n={hi} exceeds the permutation scan cutoff {args.cutoff_perm}")
    cache = Cache(args.cache)
    status = 0
    records = []
    for n in range(lo, hi + 1):
        if args.method == "all":
            names = [m for m in METHODS if m != "descents" or n <= args.cutoff_perm]
        else:
            names = [args.method]
        values, timings = {}, {}
        for name in names:
            if name == "descents":
                fn = lambda n=n: METHODS["descents"](n, jobs=args.jobs, cutoff=args.cutoff_perm)
            else:
                fn = lambda n=n, name=name: METHODS[name](n)
            start = time.perf_counter()
            values[name] = cache.get(name, n, fn)
            timings[name] = time.perf_counter() - start
        agree = len(set(values.values())) == 1
        if not agree:
            status = 1
        records.append((n, values, timings, agree))
    cache.save()

    if args.format == "json":
        payload = [
            {
                "n": n,
                "value": str(next(iter(values.values()))) if agree else None,
                "agree": agree,
                "methods": {k: str(v) for k, v in values.items()},
            }
            for n, values, _, agree in records
        ]
        out.write(dumps(payload[0] if len(payload) == 1 else payload) + "\n")
    elif args.format == "csv":
        rows = [["n", "method", "value"]]
        rows += [[n, k, str(v)] for n, values, _, _ in records for k, v in values.items()]
        _write_csv(rows, out)
    else:
        for n, values, timings, agree in records:
            if len(values) == 1:
                out.write(f"b(X_{n}) = {next(iter(values.values()))}\n")
                continue
            head = next(iter(values.values())) if agree else "DISAGREEMENT"
            out.write(f"b(X_{n}) = {head}\n")
            for k, v in values.items():
                out.write(f"  {k:<13}{v:>30}  {timings[k] * 1e3:9.3f} ms\n")
    for n, values, _, agree in records:
        if not agree:
            err.write(f"methods disagree at n={n}: {values}\n")
    return status


def cmd_table(args, out, err) -> int:
    n = int(args.n)
    if n < 1:
        raise UsageError("n must be >= 1")
    if n > args.cutoff_perm:
        raise UsageError(f"n={n} exceeds the permutation scan cutoff {args.cutoff_perm}")
    rows = audit_published_table(jobs=args.jobs) if n == 5 else enumerator_table(n, jobs=args.jobs)
    audited = n == 5

    def fmt_J(J):
        return "{" + ",".join(map(str, J)) + "}"

    if args.format == "json":
        payload = {"n": n, "rows": []}
        for r in rows:
            item = {
                "J": list(r.J),
                "polynomial": r.text,
                "coefficients": [str(c) for c in r.computed.coeffs],
                "value_at_1": str(r.computed(1)),
                "expected_value_at_1": str(r.expected_at_one),
            }
            if audited:
                item.update(printed=r.printed, matches=r.matches)
            item["note"] = r.note
            payload["rows"].append(item)
        if audited:
            payload["matching_rows"] = sum(1 for r in rows if r.matches)
        out.write(dumps(payload) + "\n")
    elif args.format == "csv":
        header = ["J", "polynomial", "value_at_1", "expected_value_at_1"]
        if audited:
            header += ["printed", "matches"]
        header.append("note")
        body = []
        for r in rows:
            line = [fmt_J(r.J), r.text, str(r.computed(1)), str(r.expected_at_one)]
            if audited:
                line += [r.printed, "yes" if r.matches else "no"]
            body.append(line + [r.note])
        _write_csv([header] + body, out)
    else:
        width = max(len(fmt_J(r.J)) for r in rows)
        pw = max(len(r.text) for r in rows)
        out.write(f"B_{{{n},J}}(q)\n")
        for r in rows:
            line = f"{fmt_J(r.J):<{width}}  {r.text:<{pw}}"
            if audited:
                line += "  ok" if r.matches else f"  MISMATCH (printed {r.printed})"
            out.write(line.rstrip() + "\n")
            if r.note:
                out.write(f"{'':<{width}}  note: {r.note}\n")
        if audited:
            good = sum(1 for r in rows if r.matches)
            out.write(f"{good}/{len(rows)} rows match the published table\n")
    return 0


def cmd_verify(args, out, err) -> int:
    settings = Settings(
        n_range=parse_range(args.range) if args.range else None,
        cutoff_perm=args.cutoff_perm, cutoff_boxes=args.cutoff_boxes, jobs=args.jobs,
    )
    report = run_verification(settings)
    if args.format == "json":
        out.write(dumps(report.as_dict()) + "\n")
    elif args.format == "csv":
        rows = [["check", "range", "status", "seconds", "witness"]]
        for item in report.as_dict()["checks"]:
            rows.append([item["name"], item["range"], item["status"], item["seconds"], item["witness"]])
        _write_csv(rows, out)
    else:
        for r in report.results:
            status = "INFO" if r.informational else ("PASS" if r.passed else "FAIL")
            out.write(f"{status}  {r.name:<24} {r.span:>7}  {r.seconds:8.3f} s\n")
            if r.witness and not r.informational:
                out.write(f"      witness: {r.witness}\n")
            if r.detail:
                out.write(f"      {r.detail}\n")
        out.write(f"overall: {'PASS' if report.ok else 'FAIL'}\n")
    return 0 if report.ok else 1


def cmd_conjecture(args, out, err) -> int:
    lo, hi = parse_range(args.n)
    if lo < 1:
        raise UsageError("n must be >= 1")
    if hi > args.cutoff_perm:
        raise UsageError(f"n={hi} exceeds the permutation scan cutoff {args.cutoff_perm}")
    results = [r for n in range(lo, hi + 1) for r in unimodality_scan(n, jobs=args.jobs, cutoff=args.cutoff_perm)]
    bad = [r for r in results if not r.unimodal]
    if args.format == "json":
        out.write(dumps({
            "range": [lo, hi],
            "tested": len(results),
            "counterexamples": [
                {"n": r.n, "J": list(r.J), "coefficients": [str(c) for c in r.poly.coeffs]} for r in bad
            ],
        }) + "\n")
    elif args.format == "csv":
        rows = [["n", "J", "polynomial", "unimodal"]]
        rows += [[r.n, " ".join(map(str, r.J)), r.poly.format("q"), "yes" if r.unimodal else "no"] for r in results]
        _write_csv(rows, out)
    else:
        for r in results:
            out.write(f"n={r.n} J={list(r.J)}  {r.poly.format('q')}  {'unimodal' if r.unimodal else 'NOT unimodal'}\n")
        if bad:
            out.write(f"{len(bad)} counterexample(s) among {len(results)} polynomials\n")
        else:
            out.write(f"no counterexample: all {len(results)} polynomials unimodal for n in {lo}..{hi}\n")
    return 0


def cmd_sequence(args, out, err) -> int:
    if args.name not in SEQUENCES:
        raise UsageError(f"unknown sequence {args.name!r}; choose from {', '.join(SEQUENCES)}")
    if args.count < 0:
        raise UsageError("term count must be nonnegative")
    first, term, provenance = SEQUENCES[args.name]
    cache = Cache(args.cache)
    terms = [str(cache.get(args.name, k, lambda k=k: term(k))) for k in range(first, first + args.count)]
    cache.save()
    if args.format == "json":
        out.write(dumps({"sequence": args.name, "offset": first, "formula": provenance, "terms": terms}) + "\n")
    elif args.format == "csv":
        _write_csv([["index", "value"]] + [[first + i, t] for i, t in enumerate(terms)], out)
    else:
        out.write(dumps(terms) + "\n")
        err.write(f"# {args.name}, offset {first}: {provenance}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--cutoff-perm", type=int, default=PERM_CUTOFF,
                        help="largest n for exhaustive permutation scans (default %(default)s)")
    common.add_argument("--cutoff-boxes", type=int, default=BOX_CUTOFF,
                        help="largest box count for brute-force tableau counts (default %(default)s)")
    common.add_argument("--cache", help="JSON file of previously computed values")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for permutation scans")

    parser = argparse.ArgumentParser(
        prog="quadric-orbits",
        description="Exact Borel orbit counts on complete quadrics and related enumerators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="b(X_n) by one or all methods")
    p.add_argument("n", help="N or LO..HI")
    p.add_argument("--method", choices=["all", *METHODS], default="all")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[common], help="B_{n,J}(q) for every J; n=5 is audited")
    p.add_argument("n")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run the cross-checks")
    p.add_argument("--range", help="restrict every ranged check to LO..HI")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", parents=[common], help="unimodality scan of B_{n,J}(q)")
    p.add_argument("n", help="N or LO..HI")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("sequence", parents=[common], help="first terms of a sequence as JSON")
    p.add_argument("name", help=", ".join(SEQUENCES))
    p.add_argument("count", type=int)
    p.set_defaults(func=cmd_sequence)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.cutoff_perm < MIN_CUTOFF or args.cutoff_boxes < MIN_CUTOFF:
            raise UsageError(f"cutoffs must be at least {MIN_CUTOFF} so the documented examples run")
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        buf = io.StringIO()
        status = args.func(args, buf, err)
        out.write(buf.getvalue())
        return status
    except (UsageError, CutoffExceeded, ValueError) as exc:
        err.write(f"quadric-orbits {args.command}: error: {exc}\n")
        return 2
    except InvariantFailure as exc:
        err.write(f"quadric-orbits {args.command}: check failed: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
