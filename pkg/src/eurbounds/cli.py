"""Command-line front end: sweeps, reports, self-verification, crossovers.

Subcommands
-----------
sweep      evaluate every bound over a parameter grid, emit CSV/JSON/SVG
report     evaluate a single parameter point and print or save it
verify     run the brute-force oracle suites over random draws
crossover  locate the parameter where two state-independent rungs cross

All entropic outputs are in nats by default; ``--log-base bits`` rescales
them by 1/log(2) at emission time.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import BoundReport, full_report, s_sequence
from .generators import haar_random, qft_power, qubit_rotation, spin_rotation
from .oracle import derivation_chain_checks, random_case
from .stochastic import unistochastic

CSV_COLUMNS = ("param", "entropy", "L_best", "best_n", "L1", "LMU", "LdeV", "LMaj",
               "Coh_L", "Coh_L1", "Coh_LdeV", "Coh_LMaj")

FAMILIES = ("qubit", "qft", "spin", "haar")

#: stride separating per-dimension seed blocks in `verify`
DIM_SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class SweepConfig:
    """Validated parameters of one sweep invocation."""

    family: str
    dim: int
    param_range: tuple[float, float, int]
    entropy: float
    n_max: int
    k_star: int
    bounds: tuple[str, ...]
    log_base: str
    seed: int
    out: str
    formats: tuple[str, ...]

    def grid(self) -> np.ndarray:
        start, end, count = self.param_range
        return np.linspace(start, end, count)


def make_unitary(family: str, dim: int, param: float, seed: int = 0) -> np.ndarray:
    """Construct the unitary of a generator family at one parameter value."""
    if family == "qubit":
        return qubit_rotation(param)
    if family == "qft":
        return qft_power(dim, param)
    if family == "spin":
        return spin_rotation(dim, param)
    if family == "haar":
        return haar_random(dim, seed + int(round(param)))
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def run_sweep(config: SweepConfig) -> list[BoundReport]:
    """Evaluate a full report at every grid point, in grid order."""
    reports = []
    for param in config.grid():
        u = make_unitary(config.family, config.dim, float(param), config.seed)
        reports.append(full_report(
            u, config.entropy, n_max=config.n_max, k_star=config.k_star,
            family=config.family, param=float(param), seed=config.seed,
        ))
    return reports


def _scale(log_base: str) -> float:
    return 1.0 / math.log(2.0) if log_base == "bits" else 1.0


def _fmt(x: float) -> str:
    if math.isinf(x):
        return "inf"
    if x == 0.0:
        return "0"  # never emit -0
    return format(float(x), ".12g")


def _fmt_n(n: float) -> str:
    return "inf" if math.isinf(n) else str(int(n))


def csv_rows(reports: list[BoundReport], log_base: str = "nats") -> list[str]:
    """Render reports as CSV lines (header included), 12 significant digits."""
    k = _scale(log_base)
    lines = [",".join(CSV_COLUMNS)]
    for r in reports:
        fields = [
            _fmt(r.param),
            _fmt(r.entropy * k),
            _fmt(r.ladder.best_value * k),
            _fmt_n(r.ladder.best_n),
            _fmt(r.l_1 * k),
            _fmt(r.l_mu * k),
            _fmt(r.l_dev * k),
            _fmt(r.l_maj * k),
            _fmt(r.coherence.ladder * k),
            _fmt(r.coherence.l_1 * k),
            _fmt(r.coherence.l_dev * k),
            _fmt(r.coherence.l_maj * k),
        ]
        lines.append(",".join(fields))
    return lines


def write_csv(reports: list[BoundReport], path: Path, log_base: str = "nats") -> None:
    path.write_text("\n".join(csv_rows(reports, log_base)) + "\n", newline="\n")


def report_as_dict(r: BoundReport, log_base: str = "nats", n_max: int | None = None,
                   k_star: int | None = None) -> dict:
    """JSON-ready dict for one report, ladder internals included."""
    k = _scale(log_base)
    return {
        "param": r.param,
        "entropy": r.entropy * k,
        "l_best": r.ladder.best_value * k,
        # JSON has no infinity literal, so the asymptote flag becomes "inf"
        "best_n": int(r.ladder.best_n) if math.isfinite(r.ladder.best_n) else "inf",
        "l_1": r.l_1 * k,
        "l_mu": r.l_mu * k,
        "l_dev": r.l_dev * k,
        "l_maj": r.l_maj * k,
        "coherence": {
            "ladder": r.coherence.ladder * k,
            "l_1": r.coherence.l_1 * k,
            "l_dev": r.coherence.l_dev * k,
            "l_maj": r.coherence.l_maj * k,
        },
        "ladder": [
            {"n": e.n, "s_n": e.s_n, "u_n": e.u_n * k,
             "s_term": e.entropy_term * k, "l_n": e.l_n * k}
            for e in r.ladder.entries
        ],
        "asymptote": r.ladder.asymptote * k,
        "symmetric_path_used": r.ladder.symmetric_path_used,
        "metadata": {
            "family": r.family,
            "dim": r.dim,
            "seed": r.seed,
            "nmax": n_max if n_max is not None else len(r.ladder.entries),
            "kstar": k_star if k_star is not None else r.k_star,
            "log_base": log_base,
            "version": __version__,
        },
    }


def write_json(reports: list[BoundReport], path: Path, log_base: str = "nats",
               n_max: int | None = None, k_star: int | None = None) -> None:
    payload = [report_as_dict(r, log_base, n_max, k_star) for r in reports]
    path.write_text(json.dumps(payload, indent=2) + "\n", newline="\n")


# Legend styling: ladder blue dotted, majorization orange, L1 green dashed,
# de Vicente black dashed.
_CURVES = {
    "ladder": ("L (ladder best)", dict(color="tab:blue", linestyle=":")),
    "maj": ("L_Maj", dict(color="tab:orange", linestyle="-")),
    "l1": ("L_1", dict(color="tab:green", linestyle="--")),
    "dev": ("L_deV", dict(color="black", linestyle="--")),
    "mu": ("L_MU", dict(color="tab:gray", linestyle="-.")),
}


def write_svg(reports: list[BoundReport], path: Path, log_base: str = "nats",
              bounds: tuple[str, ...] = ("ladder", "maj", "l1", "dev")) -> None:
    """Static SVG figure: one curve per requested bound vs the sweep parameter."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    k = _scale(log_base)
    params = [r.param for r in reports]
    series = {
        "ladder": [r.ladder.best_value * k for r in reports],
        "maj": [r.l_maj * k for r in reports],
        "l1": [r.l_1 * k for r in reports],
        "dev": [r.l_dev * k for r in reports],
        "mu": [r.l_mu * k for r in reports],
    }
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for name in bounds:
        if name not in _CURVES:
            continue
        label, style = _CURVES[name]
        ax.plot(params, series[name], label=label, **style)
    first = reports[0]
    xlabel = "theta" if first.family in ("qubit", "spin") else "beta"
    ax.set_xlabel(xlabel)
    ax.set_ylabel(f"lower bound ({log_base})")
    ax.set_title(f"{first.family}, M={first.dim}, S={first.entropy:.4g}")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def find_crossover(family: str, dim: int, n_pair: tuple[int, int],
                   tol: float = 1e-6, scan: tuple[float, float] | None = None,
                   scan_points: int = 129, seed: int = 0) -> float:
    """Bisect for the parameter where rungs u_{n1} and u_{n2} coincide.

    A coarse scan brackets a strict sign change of u_{n1} - u_{n2}; raises
    ValueError when the gap never changes sign on the scan interval.
    """
    n1, n2 = n_pair
    if n1 < 1 or n2 < 1:
        raise ValueError(f"chain depths must be >= 1, got {n_pair}")
    if family == "haar":
        raise ValueError("the haar family has no scalar parameter to bisect on")
    if scan is None:
        scan = (1e-3, math.pi / 2 - 1e-3) if family in ("qubit", "spin") else (1e-3, 1.0)

    def gap(param: float) -> float:
        s = s_sequence(unistochastic(make_unitary(family, dim, param, seed)), max(n1, n2))
        u = [-math.log(s[n - 1]) / (n + 1) for n in (n1, n2)]
        return u[0] - u[1]

    grid = np.linspace(scan[0], scan[1], scan_points)
    values = [gap(p) for p in grid]
    bracket = None
    for a, b, ga, gb in zip(grid, grid[1:], values, values[1:]):
        if ga * gb < 0:
            bracket = (float(a), float(b), ga)
            break
    if bracket is None:
        raise ValueError(
            f"u_{n1} - u_{n2} does not change sign on [{scan[0]:.6g}, {scan[1]:.6g}]"
        )
    lo, hi, glo = bracket
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        gmid = gap(mid)
        if gmid == 0.0:
            return mid
        if (glo < 0) == (gmid < 0):
            lo, glo = mid, gmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _load_unitary(path: str) -> np.ndarray:
    """Load a unitary from an .npy file, validating shape and unitarity."""
    from .linalg import require_unitary

    arr = np.load(path)
    try:
        return require_unitary(arr)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _parse_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected START:END:COUNT, got {text!r}")
    try:
        start, end, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: {exc}") from exc
    return start, end, count


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.replace(",", ":").split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected N1:N2, got {text!r}")
    return int(parts[0]), int(parts[1])


def _out_path(base: str, fmt: str) -> Path:
    p = Path(base)
    if p.suffix.lower() in (".csv", ".json", ".svg"):
        p = p.with_suffix("")
    return p.with_name(p.name + f".{fmt}")


def _add_point_args(sub: argparse.ArgumentParser, family_required: bool = True) -> None:
    sub.add_argument("--family", choices=FAMILIES, required=family_required)
    sub.add_argument("--dim", type=int, default=None, help="Hilbert space dimension")
    sub.add_argument("--entropy", type=float, default=0.0,
                     help="von Neumann entropy of the state class, in nats (default 0)")
    sub.add_argument("--nmax", type=int, default=64, help="deepest ladder rung (default 64)")
    sub.add_argument("--kstar", type=int, default=2,
                     help="number of majorization coefficients (default 2)")
    sub.add_argument("--log-base", choices=("nats", "bits"), default="nats")
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eurbounds",
        description="Entropic uncertainty bounds from powers of unistochastic matrices.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    sweep = subs.add_parser("sweep", help="evaluate bounds over a parameter grid")
    _add_point_args(sweep)
    sweep.add_argument("--range", type=_parse_range, required=True, metavar="START:END:COUNT")
    sweep.add_argument("--bounds", default="ladder,maj,l1,dev",
                       help="comma list of curves for SVG output")
    sweep.add_argument("--out", required=True, help="output path (extension added per format)")
    sweep.add_argument("--format", action="append", choices=("csv", "json", "svg"),
                       dest="formats", help="repeatable; default csv")

    report = subs.add_parser("report", help="evaluate one parameter point")
    _add_point_args(report, family_required=False)
    report.add_argument("--param", type=float, default=0.0)
    report.add_argument("--unitary", default=None, metavar="FILE.npy",
                        help="use this matrix instead of the family generator")
    report.add_argument("--out", default=None)
    report.add_argument("--format", action="append", choices=("csv", "json"),
                        dest="formats")

    verify = subs.add_parser("verify", help="run the brute-force oracle suites")
    verify.add_argument("--dims", default="2,3,4,5",
                        help="comma list of dimensions (default 2,3,4,5)")
    verify.add_argument("--trials", type=int, default=1000)
    verify.add_argument("--nmax", type=int, default=16)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--unitary", default=None, metavar="FILE.npy",
                        help="verify this matrix instead of Haar draws")

    crossover = subs.add_parser("crossover", help="locate a rung crossover parameter")
    crossover.add_argument("--family", choices=FAMILIES, required=True)
    crossover.add_argument("--dim", type=int, default=None)
    crossover.add_argument("--pair", type=_parse_pair, default=(1, 2), metavar="N1:N2")
    crossover.add_argument("--tol", type=float, default=1e-6)
    crossover.add_argument("--range", type=_parse_range, default=None,
                           metavar="START:END:COUNT", help="scan interval override")
    crossover.add_argument("--seed", type=int, default=0)
    return parser


def _resolve_dim(parser: argparse.ArgumentParser, family: str, dim: int | None) -> int:
    if family == "qubit":
        if dim not in (None, 2):
            parser.error("family 'qubit' is two-dimensional")
        return 2
    if dim is None:
        parser.error("--dim is required for this family")
    if dim < 2:
        parser.error(f"--dim must be >= 2, got {dim}")
    return dim


def _check_entropy(parser: argparse.ArgumentParser, entropy: float, dim: int) -> None:
    if not 0.0 <= entropy <= math.log(dim) + 1e-12:
        parser.error(f"--entropy must lie in [0, log {dim}] = [0, {math.log(dim):.6g}]")


def _resolve_k_star(parser: argparse.ArgumentParser, k_star: int, dim: int) -> int:
    # cap at dim-1, where the restricted vector already is the full one
    if k_star < 1:
        parser.error(f"--kstar must be >= 1, got {k_star}")
    return min(k_star, dim - 1)


def cmd_sweep(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    dim = _resolve_dim(parser, args.family, args.dim)
    _check_entropy(parser, args.entropy, dim)
    start, end, count = args.range
    if count < 1:
        parser.error("--range COUNT must be >= 1")
    if start > end:
        parser.error("--range START must be <= END")
    config = SweepConfig(
        family=args.family, dim=dim, param_range=(start, end, count),
        entropy=args.entropy, n_max=args.nmax,
        k_star=_resolve_k_star(parser, args.kstar, dim),
        bounds=tuple(args.bounds.split(",")), log_base=args.log_base,
        seed=args.seed, out=args.out, formats=tuple(args.formats or ["csv"]),
    )
    reports = run_sweep(config)
    for fmt in config.formats:
        path = _out_path(config.out, fmt)
        if fmt == "csv":
            write_csv(reports, path, config.log_base)
        elif fmt == "json":
            write_json(reports, path, config.log_base, config.n_max, config.k_star)
        else:
            write_svg(reports, path, config.log_base, config.bounds)
        print(f"wrote {path}")
    return 0


def cmd_report(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.unitary is not None:
        u = _load_unitary(args.unitary)
        dim = u.shape[0]
        family = "file"
    else:
        if args.family is None:
            parser.error("--family is required unless --unitary is given")
        dim = _resolve_dim(parser, args.family, args.dim)
        u = make_unitary(args.family, dim, args.param, args.seed)
        family = args.family
    _check_entropy(parser, args.entropy, dim)
    r = full_report(u, args.entropy, n_max=args.nmax,
                    k_star=_resolve_k_star(parser, args.kstar, dim),
                    family=family, param=args.param, seed=args.seed)
    k = _scale(args.log_base)
    unit = args.log_base
    print(f"family={family} dim={dim} param={_fmt(r.param)} "
          f"entropy={_fmt(r.entropy * k)} {unit}")
    print(f"  L (best ladder) = {_fmt(r.ladder.best_value * k)} at n={_fmt_n(r.ladder.best_n)}")
    print(f"  L_1   = {_fmt(r.l_1 * k)}")
    print(f"  L_MU  = {_fmt(r.l_mu * k)}")
    print(f"  L_deV = {_fmt(r.l_dev * k)}")
    print(f"  L_Maj = {_fmt(r.l_maj * k)} (k*={r.k_star})")
    print(f"  coherence bounds: ladder={_fmt(r.coherence.ladder * k)} "
          f"L1={_fmt(r.coherence.l_1 * k)} LdeV={_fmt(r.coherence.l_dev * k)} "
          f"LMaj={_fmt(r.coherence.l_maj * k)}")
    if args.out:
        for fmt in args.formats or ["csv"]:
            path = _out_path(args.out, fmt)
            if fmt == "csv":
                write_csv([r], path, args.log_base)
            else:
                write_json([r], path, args.log_base, args.nmax, args.kstar)
            print(f"wrote {path}")
    return 0


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    if args.nmax < 1:
        parser.error("--nmax must be >= 1")
    try:
        dims = [int(d) for d in args.dims.split(",") if d]
    except ValueError:
        parser.error(f"bad --dims {args.dims!r}")
    if any(d < 2 for d in dims):
        parser.error("dimensions must be >= 2")

    fixed_u = None
    if args.unitary is not None:
        try:
            fixed_u = _load_unitary(args.unitary)
        except (ValueError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        dims = [fixed_u.shape[0]]

    failures = []
    for dim in dims:
        worst = math.inf
        for trial in range(args.trials):
            case_seed = args.seed + DIM_SEED_STRIDE * dim + trial
            u, spectrum, frame = random_case(dim, case_seed)
            if fixed_u is not None:
                u = fixed_u
            for check in derivation_chain_checks(u, spectrum, frame, n_max=args.nmax):
                worst = min(worst, check.relative_slack, check.cross_slack,
                            check.ladder_slack, check.bound_slack)
                if not check.all_hold:
                    failures.append((dim, trial, case_seed, check.n))
        print(f"dim={dim}: {args.trials} trials, n<={args.nmax}, worst slack = {worst:.3e}")
    if failures:
        print(f"FAIL: {len(failures)} inequality violations", file=sys.stderr)
        for dim, trial, case_seed, n in failures[:20]:
            print(f"  dim={dim} trial={trial} seed={case_seed} n={n}", file=sys.stderr)
        return 1
    print("all inequalities hold")
    return 0


def cmd_crossover(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    dim = _resolve_dim(parser, args.family, args.dim)
    scan = None
    if args.range is not None:
        scan = (args.range[0], args.range[1])
    try:
        param = find_crossover(args.family, dim, args.pair, tol=args.tol,
                               scan=scan, seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    n1, n2 = args.pair
    print(f"u_{n1} = u_{n2} at parameter {param:.10g}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            return cmd_sweep(parser, args)
        if args.command == "report":
            return cmd_report(parser, args)
        if args.command == "verify":
            return cmd_verify(parser, args)
        return cmd_crossover(parser, args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
