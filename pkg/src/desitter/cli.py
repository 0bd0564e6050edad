"""``desitter`` command line: eval, table, verify."""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import kernels
from .errors import DesitterError, DomainError
from .harmonics import check_index, composite_z, hyperspherical_Z, hyperspherical_Z_hyp
from .suites import SUITES, run_suite

BACKENDS = ("triple_sum", "hypergeometric")
CSV_COLUMNS = ("sigma", "m", "n", "theta", "phi", "tau", "re", "im", "backend")


@dataclass(frozen=True)
class EvalRecord:
    sigma: int
    m: int
    n: int
    theta: float
    phi: float
    tau: float
    re: float
    im: float
    backend: str


def evaluate(sigma, m, n, theta, phi, tau, backend="triple_sum") -> EvalRecord:
    a = (theta, phi, tau)
    if backend == "triple_sum":
        value = hyperspherical_Z((sigma, m, n), a)
    else:
        value = hyperspherical_Z_hyp((sigma, m, n), composite_z(a))
    return EvalRecord(sigma, m, n, theta, phi, tau, value.real, value.imag, backend)


def _fmt(v) -> str:
    return format(v, ".17g") if isinstance(v, float) else str(v)


def format_records(records, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in records], indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([_fmt(getattr(r, c)) for c in CSV_COLUMNS])
    return buf.getvalue()


def parse_grid(text: str) -> np.ndarray:
    """``a:b:steps`` -> linspace(a, b, steps); a bare number is a 1-point grid."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return np.array([float(parts[0])])
        if len(parts) != 3:
            raise ValueError
        a, b, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like a:b:steps, got {text!r}") from None
    if steps < 1 or not (math.isfinite(a) and math.isfinite(b)):
        raise argparse.ArgumentTypeError(f"invalid grid {text!r}")
    return np.linspace(a, b, steps)


def thread_count() -> int:
    raw = os.environ.get("DESITTER_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


def _z_stack(sigma: int, angles: np.ndarray, threads: int) -> np.ndarray:
    if threads <= 1 or len(angles) < 2 * threads:
        return kernels.z_matrices(sigma, angles)
    chunks = np.array_split(angles, threads)
    with ThreadPoolExecutor(threads) as pool:
        parts = list(pool.map(lambda c: kernels.z_matrices(sigma, c), chunks))
    return np.concatenate(parts)


def table_records(sigma_max, thetas, phis, taus, backend="triple_sum", threads=1):
    angles = np.array(list(itertools.product(thetas, phis, taus)), dtype=float).reshape(-1, 3)
    records = []
    for sigma in range(sigma_max + 1):
        stack = _z_stack(sigma, angles, threads) if backend == "triple_sum" else None
        for m in range(-sigma, sigma + 1):
            for n in range(-sigma, sigma + 1):
                for r, (th, ph, ta) in enumerate(angles):
                    th, ph, ta = float(th), float(ph), float(ta)
                    if stack is None:
                        records.append(evaluate(sigma, m, n, th, ph, ta, backend))
                    else:
                        v = complex(stack[r, m + sigma, n + sigma])
                        records.append(EvalRecord(sigma, m, n, th, ph, ta, v.real, v.imag, backend))
    return records


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="desitter",
        description="Hyperspherical functions of class-1 representations of SO0(1,4).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate Z^sigma_mn at one point")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--tau", type=float, default=0.0)
    p.add_argument("--backend", choices=BACKENDS, default="triple_sum")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--degrees", action="store_true", help="theta and phi are in degrees")

    p = sub.add_parser("table", help="tabulate Z over an angle grid")
    p.add_argument("--sigma-max", type=int, required=True)
    p.add_argument("--theta-grid", type=parse_grid, required=True)
    p.add_argument("--phi-grid", type=parse_grid, default=np.array([0.0]))
    p.add_argument("--tau-grid", type=parse_grid, default=np.array([0.0]))
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--backend", choices=BACKENDS, default="triple_sum")
    p.add_argument("--degrees", action="store_true", help="theta and phi grids are in degrees")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p.add_argument("--sigma-max", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance-scale", type=float, default=1.0)
    p.add_argument("--perturb-eigenvalue", action="store_true",
                   help="shift the Casimir eigenvalue by one; the ode suite must then fail")
    return parser


def _cmd_eval(args, parser) -> int:
    try:
        check_index(args.sigma, args.m, args.n)
    except DomainError as exc:
        parser.error(str(exc))
    theta, phi = args.theta, args.phi
    if args.degrees:
        theta, phi = math.radians(theta), math.radians(phi)
    try:
        rec = evaluate(args.sigma, args.m, args.n, theta, phi, args.tau, args.backend)
    except DesitterError as exc:
        print(f"desitter: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(format_records([rec], args.format))
    return 0


def _cmd_table(args, parser) -> int:
    if args.sigma_max < 0:
        parser.error("--sigma-max must be non-negative")
    thetas, phis = args.theta_grid, args.phi_grid
    if args.degrees:
        thetas, phis = np.radians(thetas), np.radians(phis)
    try:
        records = table_records(args.sigma_max, thetas, phis, args.tau_grid, args.backend, thread_count())
    except DesitterError as exc:
        print(f"desitter: error: {exc}", file=sys.stderr)
        return 1
    text = format_records(records, args.format)
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"desitter: error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args, parser) -> int:
    if args.sigma_max < 0:
        parser.error("--sigma-max must be non-negative")
    if not args.tolerance_scale > 0:
        parser.error("--tolerance-scale must be positive")
    try:
        reports = run_suite(args.suite, args.sigma_max, args.seed, args.tolerance_scale,
                            args.perturb_eigenvalue)
    except DesitterError as exc:
        print(f"desitter: error: {exc}", file=sys.stderr)
        return 1
    for r in reports:
        print(r.line())
    ok = all(r.passed for r in reports)
    print(f"{'ALL PASSED' if ok else 'FAILED'} ({sum(r.passed for r in reports)}/{len(reports)})")
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"eval": _cmd_eval, "table": _cmd_table, "verify": _cmd_verify}[args.command]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
