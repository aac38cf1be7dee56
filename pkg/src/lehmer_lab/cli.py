"""Command-line front end: ``lehmer-lab compute | verify | scan``.

Exit codes are the machine contract:
0 all verified, 1 counterexample found, 2 usage error,
3 output not writable, 4 corrupt checkpoint.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from . import central_factorial as cf
from . import congruence as cg
from . import higher_order as ho
from . import incomplete as inc
from . import lehmer_euler as le
from .suites import DEFAULTS, SUITE_NAMES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_OUTPUT, EXIT_CHECKPOINT = 0, 1, 2, 3, 4

TABLES = ("w", "w-le", "w-ge", "higher", "e", "t", "T", "delta")


class CheckpointError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lehmer-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_k=_positive):
        p.add_argument("--upto", type=_positive, help="number of indices (n < UPTO)")
        p.add_argument("--k", type=with_k)
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--jobs", type=_positive, help="worker processes (env LEHMER_LAB_JOBS)")

    p = sub.add_parser("compute", help="emit a table of numbers")
    p.add_argument("table", choices=TABLES)
    common(p, with_k=_nonnegative)
    p.add_argument("--m", type=_positive, help="bound for incomplete numbers")
    p.add_argument("--r", type=int, default=3, help="step for higher-order numbers (>= 2)")
    p.add_argument("--alpha", type=_positive, default=1, help="order for higher-order numbers")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("all",) + SUITE_NAMES)
    common(p)
    p.add_argument("--m", type=_positive)
    p.add_argument("--alpha", type=_positive)
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds per check")

    p = sub.add_parser("scan", help="scan the period conjecture for counterexamples")
    common(p)
    p.add_argument("--checkpoint", help="resume file (created or updated)")
    return parser


def _jobs(args) -> int:
    if args.jobs:
        return args.jobs
    env = os.environ.get("LEHMER_LAB_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


def compute_rows(args) -> tuple[list[str], list[list]]:
    """Header and rows (exact Python numbers or strings) for the requested table."""
    upto = args.upto or 10
    table = args.table
    if table == "w":
        return ["n", "W_3n"], [[n, v] for n, v in enumerate(le.w_recurrence(upto))]
    if table in ("w-le", "w-ge"):
        m = args.m or 1
        tab = inc.w_le_recurrence(upto, m) if table == "w-le" else inc.w_ge_recurrence(upto, m)
        name = "W_3n_le_m" if table == "w-le" else "W_3n_ge_m"
        return ["n", name], [[n, v] for n, v in enumerate(tab)]
    if table == "higher":
        if args.r < 2:
            raise ValueError("--r must be at least 2")
        tab = ho.w_higher_series(args.r, args.alpha, upto)
        return ["n", "W_r_n_alpha"], [[n, v] for n, v in enumerate(tab)]
    if table == "e":
        return ["n", "E_2n"], [[n, v] for n, v in enumerate(le.euler_numbers(upto))]
    if table in ("t", "T"):
        fn = cf.t_first if table == "t" else cf.T_second
        return ["n", "k", table], [[n, k, fn(n, k)] for n in range(upto) for k in range(n + 1)]
    # delta
    if args.k is not None:
        ks = [args.k]
    else:
        ks = list(range(args.upto or 4))
    return ["k", "delta"], [[k, str(cf.delta_poly(k))] for k in ks]


def _params(args) -> dict:
    keys = ["table", "suite", "upto", "k", "m", "alpha"]
    if getattr(args, "table", None) == "higher":
        keys.append("r")
    elif getattr(args, "table", None) is not None:
        keys.remove("alpha")
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def render_table(args, header, rows) -> str:
    if args.format == "json":
        # keys in sorted order by construction; rows keep column order for the loader
        doc = {
            "command": "compute",
            "params": dict(sorted(_params(args).items())),
            "rows": [dict(zip(header, (_fmt(v) for v in row))) for row in rows],
            "version": __version__,
        }
        return json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        buf.write(",".join(header) + "\n")
        for row in rows:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
        return buf.getvalue()
    lines = ["\t".join(header)] + ["\t".join(_fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def load_table_json(text: str) -> tuple[list[str], list[list]]:
    """Parse :func:`render_table` JSON back into exact values (ints or Fractions)."""
    doc = json.loads(text)
    rows = doc["rows"]
    if not rows:
        return [], []
    header = list(rows[0])
    parsed = []
    for row in rows:
        out = []
        for key in header:
            s = row[key]
            try:
                out.append(int(s))
            except ValueError:
                try:
                    out.append(Fraction(s))
                except ValueError:
                    out.append(s)
        parsed.append(out)
    return header, parsed


def _emit(text: str, out: str | None) -> int:
    if out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"lehmer-lab: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    return EXIT_OK


def cmd_compute(args) -> int:
    try:
        header, rows = compute_rows(args)
    except ValueError as exc:
        print(f"lehmer-lab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return _emit(render_table(args, header, rows), args.out)


def _suite_job(item):
    name, overrides = item
    return name, run_suite(name, overrides)


def run_verification(names, overrides: dict, jobs: int = 1):
    """Run suites, in worker processes when jobs > 1; results keep the order of ``names``."""
    items = [(name, overrides) for name in names]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
            return list(pool.map(_suite_job, items))
    return [_suite_job(item) for item in items]


def render_report(args, command: str, results, report_extra: dict | None = None) -> str:
    timings = getattr(args, "timings", False)
    checks = [(name, c) for name, outcomes in results for c in outcomes]
    overall = "pass" if all(c.ok for _, c in checks) else "fail"
    if args.format == "json":
        report = {
            "status": overall,
            "checks": [dict(suite=name, **c.as_dict(timings)) for name, c in checks],
        }
        report.update(report_extra or {})
        doc = {"command": command, "params": _params(args), "report": report, "version": __version__}
        return json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"
    if args.format == "csv":
        head = ["suite", "check", "ok"] + (["seconds"] if timings else [])
        lines = [",".join(head)]
        for name, c in checks:
            row = [name, c.name, "1" if c.ok else "0"] + ([f"{c.seconds:.3f}"] if timings else [])
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"
    lines = []
    for name, c in checks:
        mark = "PASS" if c.ok else "FAIL"
        tail = f" ({c.seconds:.2f}s)" if timings else ""
        lines.append(f"{mark} {c.name}{tail}")
        if c.detail:
            lines.append("     " + json.dumps(c.detail, sort_keys=True, default=str))
    lines.append(f"overall: {overall}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    overrides = {"upto": args.upto, "k": args.k, "m": args.m, "alpha": args.alpha}
    results = run_verification(names, overrides, _jobs(args))
    code = _emit(render_report(args, "verify", results), args.out)
    if code:
        return code
    ok = all(c.ok for _, outcomes in results for c in outcomes)
    return EXIT_OK if ok else EXIT_FAIL


def _config_hash(k: int) -> str:
    return hashlib.sha256(f"lehmer-lab scan k={k}".encode()).hexdigest()[:16]


def read_checkpoint(path: str, k: int) -> int:
    """Number of already verified indices, or 0 if absent or for another configuration."""
    if not os.path.exists(path):
        return 0
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}")
    parts = text.strip().split()
    if len(parts) != 3 or "\n" in text.strip():
        raise CheckpointError(f"checkpoint {path} is not of the form 'k N hash'")
    try:
        ck, verified = int(parts[0]), int(parts[1])
    except ValueError:
        raise CheckpointError(f"checkpoint {path} has non-integer fields")
    if verified < 0 or ck < 1:
        raise CheckpointError(f"checkpoint {path} has out-of-range fields")
    if ck != k or parts[2] != _config_hash(ck):
        return 0
    return verified


def write_checkpoint(path: str, k: int, verified: int) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(f"{k} {verified} {_config_hash(k)}\n")


def cmd_scan(args) -> int:
    if args.k is None:
        print("lehmer-lab scan: --k is required", file=sys.stderr)
        return EXIT_USAGE
    k = args.k
    upto = args.upto or DEFAULTS["conjecture"].get("upto", 3 * 2 * 3 ** (k - 1) + 1)
    start = 0
    if args.checkpoint:
        try:
            start = read_checkpoint(args.checkpoint, k)
        except CheckpointError as exc:
            print(f"lehmer-lab: {exc}", file=sys.stderr)
            return EXIT_CHECKPOINT
        if start:
            print(f"lehmer-lab: resuming after {start} verified indices", file=sys.stderr)
    report = cg.scan_conjecture(k, upto, start=min(start, upto))
    if args.checkpoint:
        verified = max(start, upto) if report.ok else int(report.witness["n"])
        try:
            write_checkpoint(args.checkpoint, k, verified)
        except OSError as exc:
            print(f"lehmer-lab: cannot write checkpoint: {exc}", file=sys.stderr)
            return EXIT_OUTPUT
    if args.format == "json":
        doc = {"command": "scan", "params": _params(args), "report": report.as_dict(), "version": __version__}
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = "k,upto,status\n" + f"{k},{upto},{report.status}\n"
    else:
        text = f"{report.status}: {report.notes}, n < {upto}\n"
        if not report.ok:
            text += json.dumps(report.as_dict()["witness"], sort_keys=True) + "\n"
    code = _emit(text, args.out)
    if code:
        return code
    return EXIT_OK if report.ok else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    if args.command == "compute":
        return cmd_compute(args)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_scan(args)


if __name__ == "__main__":
    sys.exit(main())
