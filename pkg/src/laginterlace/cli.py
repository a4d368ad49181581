"""Command-line front end.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 for usage errors and theorem-hypothesis violations.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import harness
from .interlace import (
    TARGETS,
    HypothesisError,
    check_chain,
    check_negative_claims,
    check_theorem_R,
    check_theorem_S,
    compare_zero_sets,
    target_zeros,
)
from .laguerre import CombinationSpec, DomainError
from .rootfind import combination_zeros, laguerre_zeros

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    pass


def _num(v: float) -> str:
    return repr(float(v))


def _json_num(v):
    return None if isinstance(v, float) and not math.isfinite(v) else v


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def cmd_zeros(args) -> int:
    z = laguerre_zeros(args.n, args.alpha)
    if args.format == "json":
        print(json.dumps(z.values.tolist()))
    elif args.format == "csv":
        sys.stdout.write(_csv([[f"z_{k}" for k in range(1, len(z) + 1)], [_num(v) for v in z]]))
    else:
        print(f"zeros of L_{args.n}^{{{args.alpha:g}}}")
        for k, v in enumerate(z, 1):
            print(f"{k:>4}  {v:.12g}")
    return EXIT_OK


def cmd_combo_zeros(args) -> int:
    spec = CombinationSpec.make(args.family, args.n, args.alpha, args.t, args.coeff)
    z = combination_zeros(spec)
    if args.format == "json":
        print(json.dumps({
            "family": spec.family.value, "n": args.n, "alpha": args.alpha, "t": args.t,
            "coeff": args.coeff, "degree": z.degree, "reduced_degree": spec.reduced_degree,
            "complete": z.complete, "tolerance": z.tolerance, "zeros": z.values.tolist(),
        }))
    elif args.format == "csv":
        header = ["degree", "complete"] + [f"z_{k}" for k in range(1, len(z) + 1)]
        row = [str(z.degree), str(z.complete).lower()] + [_num(v) for v in z]
        sys.stdout.write(_csv([header, row]))
    else:
        print(f"zeros of {spec.label}")
        if spec.reduced_degree:
            print(f"note: leading terms cancel, reduced degree {z.degree}")
        for k, v in enumerate(z, 1):
            print(f"{k:>4}  {v:.12g}")
        print(f"found {len(z)} of {z.degree} (complete={z.complete})")
    return EXIT_OK


def _report_line(label, rep) -> str:
    extra = f" violation={rep.violation} {rep.detail}" if rep.violation else ""
    return f"  vs {label:<20} {rep.verdict.value:<11} pattern={rep.pattern.value} min_gap={rep.min_gap:.6g}{extra}"


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"check --theorem {args.theorem} needs {', '.join(missing)}")


def cmd_check(args) -> int:
    th = args.theorem
    if th == "claims":
        results = check_negative_claims()
        for c in results:
            tag = "PASS" if c.confirmed else "FAIL"
            print(f"{tag}  {c.claim_id}: {c.statement} -> {c.report.verdict.value}"
                  + (f" {c.report.detail}" if c.report.detail else ""))
        return EXIT_OK if all(c.confirmed for c in results) else EXIT_FAIL

    if th == "chain":
        _need(args, "n", "alpha", "t")
        res = check_chain(args.n, args.alpha, args.t)
        print(f"{'PASS' if res.holds else 'FAIL'}  chain n={args.n} alpha={args.alpha:g} t={args.t:g}"
              + (f": {res.violation}" if res.violation else ""))
        return EXIT_OK if res.holds else EXIT_FAIL

    _need(args, "n", "alpha", "t", "coeff")
    if th == "pair":
        _need(args, "family", "target")
        spec = CombinationSpec.make(args.family, args.n, args.alpha, args.t, args.coeff)
        combo = combination_zeros(spec)
        rep = compare_zero_sets(combo, target_zeros(args.target, spec))
        print(f"{spec.label}: complete={combo.complete}")
        print(_report_line(args.target, rep))
        return EXIT_OK if rep.interlaces else EXIT_FAIL

    fn = check_theorem_R if th == "R" else check_theorem_S
    res = fn(args.n, args.alpha, args.t, args.coeff)
    print(f"{'PASS' if res.holds else 'FAIL'}  theorem {th} for {res.spec.label}")
    if res.reduced_degree:
        print(f"  reduced-degree mode: combination has degree {res.combo.degree}")
    for label, rep in zip(res.targets, res.reports):
        print(_report_line(label, rep))
    return EXIT_OK if res.holds else EXIT_FAIL


def cmd_repro_paper(args) -> int:
    fixtures = harness.reproduce_all()
    claims = check_negative_claims()
    ok = all(f.passed for f in fixtures) and all(c.confirmed for c in claims)
    if args.format == "json":
        print(json.dumps({
            "fixtures": [
                {"id": f.fixture_id, "computed": list(f.computed), "reference": list(f.reference),
                 "max_rel_dev": _json_num(f.max_rel_dev), "pass": f.passed}
                for f in fixtures
            ],
            "claims": [
                {"id": c.claim_id, "statement": c.statement, "expected": c.expected.value,
                 "verdict": c.report.verdict.value, "violation": c.report.violation,
                 "confirmed": c.confirmed}
                for c in claims
            ],
            "pass": ok,
        }, indent=2))
    else:
        print(f"zero-list fixtures (relative tolerance {harness.REPRO_RTOL:g})")
        for f in fixtures:
            tag = "PASS" if f.passed else "FAIL"
            print(f"  {tag}  {f.fixture_id:<18} max_rel_dev={f.max_rel_dev:.2e}  "
                  + " ".join(f"{v:.6g}" for v in f.computed))
        print("interlacing claims")
        for c in claims:
            tag = "PASS" if c.confirmed else "FAIL"
            viol = f" first violation {c.report.violation}" if c.report.violation else ""
            print(f"  {tag}  {c.claim_id:<22} expected {c.expected.value}, got {c.report.verdict.value}{viol}")
        print(f"{sum(f.passed for f in fixtures)}/{len(fixtures)} fixtures, "
              f"{sum(c.confirmed for c in claims)}/{len(claims)} claims")
    return EXIT_OK if ok else EXIT_FAIL


def render_records(records, fmt: str) -> str:
    rows = [r.as_row() for r in records]
    if fmt == "json":
        payload = [{k: _json_num(v) for k, v in row.items()} for row in rows]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        out = [list(harness.RECORD_FIELDS)]
        for row in rows:
            out.append([
                _num(v) if isinstance(v, float) else str(v).lower() if isinstance(v, bool) else str(v)
                for v in (row[k] for k in harness.RECORD_FIELDS)
            ])
        return _csv(out)
    lines = [f"{'family':<6} {'n':>3} {'alpha':>10} {'t':>10} {'coeff':>10} {'target':<18} {'verdict':<11} {'min_gap':>10} complete"]
    for r in records:
        lines.append(f"{r.family:<6} {r.n:>3} {r.alpha:>10.6g} {r.t:>10.6g} {r.coeff:>10.6g} "
                     f"{r.target:<18} {r.verdict:<11} {r.min_gap:>10.4g} {str(r.complete).lower()}")
    return "\n".join(lines) + "\n"


def cmd_sweep(args) -> int:
    try:
        cfg = harness.load_config(args.config, format=args.format, out=args.out, jobs=args.jobs,
                                  seed=args.seed, samples=args.samples)
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    except harness.ConfigError as exc:
        raise UsageError(f"invalid sweep config: {exc}") from None
    records = harness.run_sweep(cfg)
    text = render_records(records, cfg.format)
    if cfg.out and cfg.out != "-":
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    counts = harness.summarize(records)
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    if args.strict and counts["interlaces"] != len(records):
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="laginterlace",
        description="Zeros and interlacing of Laguerre polynomial combinations.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeros", help="zeros of L_n^alpha")
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--alpha", type=float, required=True)
    z.add_argument("--format", choices=FORMATS, default="table")
    z.set_defaults(func=cmd_zeros)

    c = sub.add_parser("combo-zeros", help="zeros of an R or S combination")
    c.add_argument("--family", choices=("R", "S"), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--alpha", type=float, required=True)
    c.add_argument("--t", type=float, required=True)
    c.add_argument("--coeff", type=float, required=True)
    c.add_argument("--format", choices=FORMATS, default="table")
    c.set_defaults(func=cmd_combo_zeros)

    k = sub.add_parser("check", help="check one interlacing theorem")
    k.add_argument("--theorem", choices=("R", "S", "chain", "claims", "pair"), required=True)
    k.add_argument("--n", type=int)
    k.add_argument("--alpha", type=float)
    k.add_argument("--t", type=float)
    k.add_argument("--coeff", type=float)
    k.add_argument("--family", choices=("R", "S"), help="for --theorem pair")
    k.add_argument("--target", choices=sorted(TARGETS), help="for --theorem pair")
    k.set_defaults(func=cmd_check)

    r = sub.add_parser("repro-paper", help="reproduce the published zero lists and claims")
    r.add_argument("--format", choices=("table", "json"), default="table")
    r.set_defaults(func=cmd_repro_paper)

    s = sub.add_parser("sweep", help="seeded parameter sweep")
    s.add_argument("--config", required=True, help="key=value config file")
    s.add_argument("--format", choices=FORMATS, default=None, help="overrides the config")
    s.add_argument("--out", default=None, help="output path, '-' for stdout")
    s.add_argument("--jobs", type=int, default=None)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--samples", type=int, default=None)
    s.add_argument("--strict", action="store_true", help="exit 1 unless every record interlaces")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypothesisError as exc:
        print(f"hypothesis error: {exc}", file=sys.stderr)
    except (DomainError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
