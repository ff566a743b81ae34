"""
Command-line runner: evolves walks and writes distributions and summary
statistics as CSV or JSON.

    qwalk single --walk hadamard --steps 100 --initial plus-i
    qwalk pair --steps 100 --initial psi-i --format csv --out pair.csv
    qwalk bec --steps 20 --view marginals
    qwalk classical --steps 50
    qwalk coincidence --steps 100
    qwalk variance-scan --walk hadamard --steps 100 --min-steps 10

Exit status: 0 on success, 2 on a configuration error, 3 on a runtime error.
"""

import argparse
import logging
import math
import sys
from typing import Optional, Sequence

from qwalk.analysis.distributions import (
    coincidence_probability,
    joint_distribution,
    loglog_slope,
    marginal,
)
from qwalk.analysis.recorders import CoincidenceRecorder, VarianceRecorder, measurable_distribution
from qwalk.analysis.sampling import make_rng, sample_joint, sample_positions, sampling_summary
from qwalk.io.result_writer import FORMATS, ResultTable, ResultWriter
from qwalk.models.config import BecStay, InitialSpec, SignVariant, WalkConfig, WalkKind, load_config
from qwalk.models.errors import ConfigError, QuantumWalkError
from qwalk.models.states import normalize
from qwalk.operators.entangled import run_pair
from qwalk.operators.single import run_single

logger = logging.getLogger("qwalk")

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_RUNTIME_ERROR = 3

SINGLE_WALKS = {"hadamard": WalkKind.HADAMARD, "coinless": WalkKind.COINLESS, "extended": WalkKind.EXTENDED}
SCAN_WALKS = dict(SINGLE_WALKS, classical=WalkKind.CLASSICAL)


def _parse_bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ("true", "1", "yes", "on"):
        return True
    if value in ("false", "0", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--steps", type=_non_negative_int, help="Number of walk steps N.")
    common.add_argument("--origin", type=int, help="Starting site x0 (default 0).")
    common.add_argument("--config", help="YAML or TOML walk configuration; command-line flags take precedence.")
    common.add_argument("--format", choices=FORMATS, default="csv", help="Output format (default csv).")
    common.add_argument("--out", default=None, help="Output path (default standard output).")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Log progress to stderr (-vv for every step).")

    quantum = argparse.ArgumentParser(add_help=False)
    quantum.add_argument("--sign", choices=[s.value for s in SignVariant], help="Sign variant of the reduced shift (default plus).")
    quantum.add_argument("--initial", choices=[s.value for s in InitialSpec], help="Initial coin state at the origin.")
    quantum.add_argument(
        "--normalize-each-step",
        type=_parse_bool,
        metavar="true|false",
        help="Renormalize after every non-isometric step (default true).",
    )

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=_non_negative_int, help="Sample this many measurement outcomes.")
    sampling.add_argument("--seed", type=_non_negative_int, help="Seed for sampling mode.")

    parser = argparse.ArgumentParser(prog="qwalk", description="Discrete-time quantum walks with a coin-retaining shift.")
    sub = parser.add_subparsers(dest="command", required=True)

    single = sub.add_parser("single", parents=[common, quantum, sampling], help="Single-particle walk distribution.")
    single.add_argument("--walk", choices=sorted(SINGLE_WALKS), default="hadamard")
    single.add_argument("--ancilla", choices=[s.value for s in InitialSpec if not s.is_pair], help="Ancilla state (extended walk).")

    pair = sub.add_parser("pair", parents=[common, quantum, sampling], help="Entangled pair walk.")
    pair.add_argument("--view", choices=("joint", "marginals"), default="joint", help="Joint records or per-site marginals.")
    pair.add_argument("--separation", type=int, help="Initial offset of particle 2 from x0.")

    bec = sub.add_parser("bec", parents=[common, quantum, sampling], help="Co-location constrained BEC pair walk.")
    bec.add_argument("--view", choices=("joint", "marginals"), default="joint", help="Joint records or per-site marginals.")
    bec.add_argument("--bec-stay", choices=[s.value for s in BecStay], help="Stay coefficient of the BEC operators.")

    sub.add_parser("classical", parents=[common, sampling], help="Classical random walk baseline.")

    coincidence = sub.add_parser("coincidence", parents=[common, quantum], help="p_same and p_diff of the pair walk for N = 1..steps.")
    coincidence.add_argument("--separation", type=int, help="Initial offset of particle 2 from x0.")

    scan = sub.add_parser("variance-scan", parents=[common, quantum], help="Variance per step count and log-log slope.")
    scan.add_argument("--walk", choices=sorted(SCAN_WALKS), default="hadamard")
    scan.add_argument("--ancilla", choices=[s.value for s in InitialSpec if not s.is_pair], help="Ancilla state (extended walk).")
    scan.add_argument("--min-steps", type=_non_negative_int, default=1, help="Smallest step count in the fit (default 1).")
    return parser


def _walk_kind(args: argparse.Namespace) -> WalkKind:
    if args.command == "single":
        return SINGLE_WALKS[args.walk]
    if args.command == "variance-scan":
        return SCAN_WALKS[args.walk]
    if args.command in ("pair", "coincidence"):
        return WalkKind.PAIR
    if args.command == "bec":
        return WalkKind.BEC
    return WalkKind.CLASSICAL


def config_from_args(args: argparse.Namespace) -> WalkConfig:
    """WalkConfig from an optional config file overridden by explicit flags."""
    kind = _walk_kind(args)
    initial = getattr(args, "initial", None)
    if kind is WalkKind.CLASSICAL and initial is not None:
        raise ConfigError("the classical walk starts from a point mass at x0; --initial does not apply")
    base = load_config(args.config) if args.config else WalkConfig()
    ancilla = getattr(args, "ancilla", None)
    return base.with_overrides(
        kind=kind,
        steps=args.steps,
        sign=getattr(args, "sign", None),
        initial=initial,
        normalize_each_step=getattr(args, "normalize_each_step", None),
        origin=args.origin,
        separation=getattr(args, "separation", None),
        bec_stay=getattr(args, "bec_stay", None),
        ancilla_amplitudes=InitialSpec(ancilla).coin_amplitudes() if ancilla else None,
    )


def _meta(args: argparse.Namespace, config: WalkConfig) -> dict:
    meta = {
        "subcommand": args.command,
        "kind": config.kind.value,
        "steps": config.steps,
        "sign": config.sign.value,
        "initial": config.initial.value,
        "normalize_each_step": config.normalize_each_step,
        "origin": config.origin,
    }
    if config.kind is WalkKind.EXTENDED:
        meta["ancilla_amplitudes"] = [[a.real, a.imag] for a in config.ancilla_amplitudes]
    if config.kind is WalkKind.BEC:
        meta["bec_stay"] = config.bec_stay.value
    if config.separation:
        meta["separation"] = config.separation
    return meta


def run_single_command(args: argparse.Namespace, config: WalkConfig) -> ResultTable:
    result = run_single(config)
    dist = measurable_distribution(result.state)
    table = ResultTable(header=("position", "probability"), meta=_meta(args, config))
    table.rows = [(int(x), float(p)) for x, p in zip(dist.positions, dist.p)]
    table.meta["prior_norms"] = list(result.diagnostics) if result.diagnostic_name == "prior_norm" else []
    if args.samples:
        outcomes = sample_positions(dist, args.samples, make_rng(args.seed))
        table.summary.update(sampling_summary(outcomes))
    return table


def run_pair_command(args: argparse.Namespace, config: WalkConfig) -> ResultTable:
    result = run_pair(config)
    state, _ = normalize(result.state)
    joint = joint_distribution(state)
    p_same, p_diff = coincidence_probability(joint)

    meta = _meta(args, config)
    meta["p_same"], meta["p_diff"] = p_same, p_diff
    if result.diagnostic_name == "survival":
        meta["survival"] = list(result.diagnostics)
    else:
        meta["prior_norms"] = list(result.diagnostics)

    if args.view == "marginals":
        m1, m2, diag = marginal(joint, 1), marginal(joint, 2), joint.diagonal()
        table = ResultTable(header=("position", "marginal_1", "marginal_2", "diagonal"), meta=meta)
        table.rows = [(int(x), float(a), float(b), float(c)) for x, a, b, c in zip(joint.positions, m1.p, m2.p, diag.p)]
    else:
        table = ResultTable(header=("x1", "x2", "probability"), meta=meta)
        positions = joint.positions
        table.rows = [
            (int(positions[i]), int(positions[k]), float(joint.p[i, k]))
            for i in range(len(positions))
            for k in range(len(positions))
            if joint.p[i, k] > 0.0
        ]
    if args.samples:
        outcomes = sample_joint(joint, args.samples, make_rng(args.seed))
        table.summary.update(sampling_summary(outcomes))
    return table


def run_coincidence_command(args: argparse.Namespace, config: WalkConfig) -> ResultTable:
    recorder = CoincidenceRecorder()
    run_pair(config, observers=[recorder])
    table = ResultTable(header=("steps", "p_same", "p_diff"), meta=_meta(args, config), rows=list(recorder.records))
    if recorder.records:
        table.summary["max_abs_deviation_from_half"] = max(abs(p_same - 0.5) for _, p_same, _ in recorder.records)
    return table


def run_variance_scan_command(args: argparse.Namespace, config: WalkConfig) -> ResultTable:
    recorder = VarianceRecorder(min_steps=args.min_steps)
    run_single(config, observers=[recorder])
    table = ResultTable(header=("steps", "variance"), meta=_meta(args, config), rows=list(recorder.records))
    try:
        slope = loglog_slope([n for n, _ in recorder.records], [v for _, v in recorder.records])
    except ValueError:
        logger.warning("not enough positive-variance points for a log-log fit")
        slope = math.nan
    table.summary["fitted_log_log_slope"] = slope
    return table


COMMANDS = {
    "single": run_single_command,
    "classical": run_single_command,
    "pair": run_pair_command,
    "bec": run_pair_command,
    "coincidence": run_coincidence_command,
    "variance-scan": run_variance_scan_command,
}


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("qwalk").setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    _configure_logging(args.verbose)

    try:
        config = config_from_args(args)
        table = COMMANDS[args.command](args, config)
    except ConfigError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except QuantumWalkError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_RUNTIME_ERROR

    if not ResultWriter(table).save(args.out, args.format):
        return EXIT_RUNTIME_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
