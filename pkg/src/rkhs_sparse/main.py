import argparse
import sys
from pathlib import Path

from rkhs_sparse.logging import LogLevel, LoggerRegistry, get_logger
from rkhs_sparse.configuration.config_manager import ConfigManager
from rkhs_sparse.configuration.run_config import RunConfig, parse_grid, parse_index_set
from rkhs_sparse.core.bootstrap import bootstrap_all
from rkhs_sparse.core.kernels import BandwidthConfig
from rkhs_sparse.core.losses import LossSpec
from rkhs_sparse.core.methods import MethodRegistry
from rkhs_sparse.core.scenarios import ScenarioRegistry
from rkhs_sparse.core.solvers import SolverConfig
from rkhs_sparse.datasets import load_csv
from rkhs_sparse.export.report import SelectionReport, StabilityCurve, write_text
from rkhs_sparse.export.tables import benchmark_csv, benchmark_json, plot_data_csv
from rkhs_sparse.tasks.estimation import fit
from rkhs_sparse.tasks.selection import gradient_scores, select
from rkhs_sparse.tasks.simulation import DGPConfig, run_benchmark
from rkhs_sparse.tasks.stability import SplitPlan, choose_parameters, cohen_kappa, stability_grid, tune
from rkhs_sparse.util.errors import NUMERICAL_EXIT_CODE, RkhsSparseError, UsageError

SUBCOMMANDS = ("fit", "select", "tune", "simulate", "kappa")


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="rkhs-sparse",
        description="Kernel gradient-based variable selection with stability tuning",
    )
    parser.add_argument(
        "--log-level",
        type=str,
        choices=[level.name for level in LogLevel],
        default="WARNING",
        help="Set the logging level (default: WARNING); logs go to stderr",
    )
    parser.add_argument("--config", type=Path, help="JSON config file (default: data/config/config.json)")
    subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=CliArgumentParser)

    def add_loss(sub):
        sub.add_argument("--loss", choices=["square", "check", "eps", "logistic", "hinge"], default=None,
                         help="Loss function (default: square)")
        sub.add_argument("--tau", type=float, help="Quantile level for the check loss (default 0.5)")
        sub.add_argument("--epsilon", type=float, help="Tube width for the eps loss (default 0.1)")

    def add_tuning(sub):
        sub.add_argument("--lambda", dest="lam", type=float, help="Single regularization value")
        sub.add_argument("--lambda-grid", help="lo:hi:step exponent range or comma list (default -3:3:0.1)")
        sub.add_argument("--v", type=float, help="Single threshold value")
        sub.add_argument("--v-grid", help="lo:hi:step exponent range or comma list (default -3:3:0.1)")
        sub.add_argument("--splits", type=int, help="Number of random half-splits B (default 20)")
        sub.add_argument("--stability-q", type=float, help="Stability fraction q in (0, 1] (default 0.9)")

    def add_common(sub):
        sub.add_argument("--seed", type=int, default=0, help="Master random seed (default 0)")
        sub.add_argument("--bandwidth", type=float, help="Fixed kernel bandwidth (default: median heuristic)")
        sub.add_argument("--out", type=Path, help="Output file (default: stdout)")
        sub.add_argument("--format", choices=["json", "csv"], default="json", help="Output format")

    def add_data(sub):
        sub.add_argument("input", type=Path, help="CSV dataset")
        sub.add_argument("--response", help="Response column: header name or 1-based index (default: last)")

    fit_parser = subparsers.add_parser("fit", help="Single fit with gradient scores")
    add_data(fit_parser)
    add_loss(fit_parser)
    fit_parser.add_argument("--lambda", dest="lam", type=float, required=True, help="Regularization value")
    fit_parser.add_argument("--v", type=float, help="Optional threshold; adds the selected set to the report")
    add_common(fit_parser)

    for name, text in (("select", "Stability-tuned variable selection"), ("tune", "Stability grid only")):
        sub = subparsers.add_parser(name, help=text)
        add_data(sub)
        add_loss(sub)
        add_tuning(sub)
        add_common(sub)

    sim_parser = subparsers.add_parser("simulate", help="Benchmark row on a simulation design")
    add_loss(sim_parser)
    add_tuning(sim_parser)
    add_common(sim_parser)
    sim_parser.add_argument("--method", help="Named method from methods.yaml (e.g. mf_sq)")
    sim_parser.add_argument("--scenario", help="Named scenario from scenarios.yaml")
    sim_parser.add_argument("--example", choices=["regression1", "classification2"])
    sim_parser.add_argument("--n", type=int)
    sim_parser.add_argument("--p", type=int)
    sim_parser.add_argument("--eta", type=float)
    sim_parser.add_argument("--reps", type=int, help="Replications (default 10)")
    sim_parser.add_argument("--full", action="store_true", help="Run the full 50 replications")
    sim_parser.add_argument("--plot-data", type=Path, help="Write per-replication CSV here")

    kappa_parser = subparsers.add_parser("kappa", help="Cohen's kappa of two index sets")
    kappa_parser.add_argument("--a", required=True, help="First set, 1-based comma list")
    kappa_parser.add_argument("--b", required=True, help="Second set, 1-based comma list")
    kappa_parser.add_argument("--p", type=int, required=True, help="Number of variables")

    return parser


def _loss_from_args(args, default: LossSpec | None = None) -> LossSpec:
    if args.loss is None:
        if args.tau is not None or args.epsilon is not None:
            raise UsageError("--tau and --epsilon need --loss check or --loss eps")
        return default or LossSpec.square()
    if args.tau is not None and args.loss != "check":
        raise UsageError("--tau only applies to --loss check")
    if args.epsilon is not None and args.loss != "eps":
        raise UsageError("--epsilon only applies to --loss eps")
    return LossSpec.from_name(args.loss, tau=args.tau, epsilon=args.epsilon)


def build_run_config(args, config_manager: ConfigManager) -> RunConfig:
    """Merge parsed flags over config-file defaults."""
    if args.subcommand == "kappa":
        return RunConfig(subcommand="kappa", kappa_a=parse_index_set(args.a), kappa_b=parse_index_set(args.b),
                         kappa_p=args.p)

    tuning = config_manager.get_section("tuning")
    solver = config_manager.get_section("solver")
    simulation = config_manager.get_section("simulation")

    solver_config = SolverConfig(max_iter=int(solver["max_iter"]), tol=float(solver["tol"]),
                                 tail_fraction=float(solver["tail_fraction"]))
    bandwidth = BandwidthConfig() if args.bandwidth is None else BandwidthConfig.fixed(args.bandwidth)
    common = dict(
        subcommand=args.subcommand,
        seed=args.seed,
        bandwidth=bandwidth,
        solver=solver_config,
        output_path=args.out,
        output_format=args.format,
    )

    if args.subcommand == "fit":
        return RunConfig(loss=_loss_from_args(args), input_path=args.input, response=args.response,
                         lam=args.lam, v=args.v, **common)

    if args.lam is not None and args.lambda_grid is not None:
        raise UsageError("Give either --lambda or --lambda-grid, not both")
    if args.v is not None and args.v_grid is not None:
        raise UsageError("Give either --v or --v-grid, not both")
    tuning_fields = dict(
        lam=args.lam,
        lambda_grid=None if args.lam is not None else parse_grid(args.lambda_grid or tuning["lambda_grid"]),
        v=args.v,
        v_grid=None if args.v is not None else parse_grid(args.v_grid or tuning["v_grid"]),
        splits=args.splits if args.splits is not None else int(tuning["splits"]),
        stability_q=args.stability_q if args.stability_q is not None else float(tuning["stability_q"]),
    )

    if args.subcommand in ("select", "tune"):
        return RunConfig(loss=_loss_from_args(args), input_path=args.input, response=args.response,
                         **tuning_fields, **common)

    # simulate
    method = MethodRegistry.get(args.method) if args.method else None
    if method is not None and args.loss is not None:
        raise UsageError("Give either --method or --loss, not both")
    loss = method.loss_spec() if method is not None else _loss_from_args(args)
    scenario = ScenarioRegistry.get(args.scenario) if args.scenario else None

    example = args.example or (scenario.example if scenario else None) or (method.example if method else None)
    if example is None:
        example = "classification2" if loss.label_convention == "signs" else "regression1"
    n = args.n if args.n is not None else (scenario.n if scenario else None)
    p = args.p if args.p is not None else (scenario.p if scenario else None)
    if n is None or p is None:
        raise UsageError("simulate needs --n and --p, or a --scenario")
    eta = args.eta if args.eta is not None else (scenario.eta if scenario else 0.0)

    if args.full:
        if args.reps is not None:
            raise UsageError("Give either --reps or --full, not both")
        reps = int(simulation["full_reps"])
    else:
        reps = args.reps if args.reps is not None else int(simulation["reps"])

    return RunConfig(loss=loss, method_label=method.display_name if method else None, example=example,
                     n=n, p=p, eta=eta, reps=reps, plot_data_path=args.plot_data, **tuning_fields, **common)


def _benchmark_label(config: RunConfig) -> str:
    if config.method_label:
        return config.method_label
    for method in MethodRegistry.list(config.example):
        if method.loss_spec() == config.loss:
            return method.display_name
    return config.loss.kind


def run_fit(config: RunConfig) -> str:
    X, y, names = load_csv(config.input_path, config.response)
    model = fit(X, y, config.loss, config.lam, config.bandwidth, config.solver)
    scores = gradient_scores(model)
    active = select(scores, config.v) if config.v is not None else None

    report = SelectionReport(command="fit", n=X.shape[0], p=X.shape[1], loss=config.loss.describe(),
                             seed=config.seed, chosen_lambda=config.lam, chosen_v=config.v, column_names=names)
    report.attach_fit(model, scores, active)
    return report.render(config.output_format)


def run_select(config: RunConfig) -> str:
    X, y, names = load_csv(config.input_path, config.response)
    result = tune(X, y, config.loss, config.lambdas, config.thresholds, B=config.splits,
                  q_fraction=config.stability_q, seed=config.seed, bandwidth=config.bandwidth,
                  solver_config=config.solver)

    report = SelectionReport(command="select", n=X.shape[0], p=X.shape[1], loss=config.loss.describe(),
                             seed=config.seed, chosen_lambda=result.chosen_lambda, chosen_v=result.chosen_v,
                             column_names=names)
    report.stability_curve = StabilityCurve(
        lambda_grid=list(result.lambda_grid),
        v_grid=list(result.v_grid),
        s_hat=[[float(s) for s in row] for row in result.s_hat],
        splits=config.splits,
        replications_used=result.replications_used,
        q_fraction=config.stability_q,
    )
    report.warnings.extend(_stability_warnings(result.failed_replications, result.nonconverged_fits))
    report.attach_fit(result.final_model, result.final_scores, result.final_active_set)
    return report.render(config.output_format)


def run_tune(config: RunConfig) -> str:
    if config.output_format == "csv":
        raise UsageError("tune reports have no per-variable table; use --format json")
    X, y, names = load_csv(config.input_path, config.response)
    grid = stability_grid(X, y, config.loss, config.lambdas, config.thresholds,
                          SplitPlan(seed=config.seed, B=config.splits), config.bandwidth, config.solver)
    i, j = choose_parameters(grid.lambda_grid, grid.v_grid, grid.s_hat, config.stability_q)

    report = SelectionReport(command="tune", n=X.shape[0], p=X.shape[1], loss=config.loss.describe(),
                             seed=config.seed, chosen_lambda=grid.lambda_grid[i], chosen_v=grid.v_grid[j],
                             column_names=names)
    report.stability_curve = StabilityCurve.from_grid(grid, config.splits, config.stability_q)
    report.warnings.extend(_stability_warnings(grid.failed_replications, grid.nonconverged_fits))
    return report.to_json()


def _stability_warnings(failed: tuple[int, ...], nonconverged: int) -> list[str]:
    warnings = []
    if failed:
        warnings.append(f"replications {', '.join(map(str, failed))} excluded: degenerate bandwidth on a half-split")
    if nonconverged:
        warnings.append(f"{nonconverged} stability fits stopped before converging")
    return warnings


def run_simulate(config: RunConfig) -> str:
    scenario = DGPConfig(example=config.example, n=config.n, p=config.p, eta=config.eta, seed=config.seed)
    result = run_benchmark(scenario, config.loss, config.reps, config.lambdas, config.thresholds,
                           B=config.splits, q_fraction=config.stability_q, bandwidth=config.bandwidth,
                           solver_config=config.solver, label=_benchmark_label(config))
    if config.plot_data_path is not None:
        write_text(plot_data_csv(result), config.plot_data_path, sys.stdout)
    if config.output_format == "csv":
        return benchmark_csv(result)
    return benchmark_json(result, config.seed)


def run_kappa(config: RunConfig) -> str:
    if config.kappa_p is None or config.kappa_p < 1:
        raise UsageError("--p must be a positive integer")
    value = cohen_kappa([a - 1 for a in config.kappa_a], [b - 1 for b in config.kappa_b], config.kappa_p)
    return f"{value:.12g}\n"


RUNNERS = {
    "fit": run_fit,
    "select": run_select,
    "tune": run_tune,
    "simulate": run_simulate,
    "kappa": run_kappa,
}


def run(config: RunConfig, stream=None) -> int:
    """Execute one subcommand; returns the process exit code."""
    stream = stream or sys.stdout
    try:
        output = RUNNERS[config.subcommand](config)
        write_text(output, config.output_path if config.subcommand != "kappa" else None, stream)
    except RkhsSparseError as e:
        get_logger().error(str(e), error=type(e).__name__)
        return e.exit_code
    except FloatingPointError as e:
        get_logger().error(str(e), error=type(e).__name__)
        return NUMERICAL_EXIT_CODE
    return 0


def main(argv=None, stream=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        LoggerRegistry.configure_console(LogLevel.parse(args.log_level))
        bootstrap_all()
        config = build_run_config(args, ConfigManager(args.config))
    except RkhsSparseError as e:
        get_logger().error(str(e), error=type(e).__name__)
        return e.exit_code
    except FileNotFoundError as e:
        get_logger().error(str(e))
        return UsageError.exit_code
    return run(config, stream)


if __name__ == "__main__":
    sys.exit(main())
