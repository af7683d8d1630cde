"""entgraph CLI - Click-based command-line interface.

Exit codes: 0 success, 1 verified negative (infeasible, not found, broken
chain), 2 usage or input error, 3 numerical validity failure.
"""

import logging
import os
import sys
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from typing import Any, NoReturn

import click
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from entgraph.core.exceptions import CapExceededError, EntGraphError, StateError
from entgraph.models.graph import EntangledGraph
from entgraph.models.outcome import CommandOutcome, ExitCode
from entgraph.models.verdict import Tolerances, VerdictReport

console = Console()
err_console = Console(stderr=True)

_CLASS_STYLES = {
    "entangled": "[bold magenta]entangled[/bold magenta]",
    "classical-only": "[cyan]classical-only[/cyan]",
    "uncorrelated": "[dim]uncorrelated[/dim]",
}

_STATUS_STYLES = {
    "feasible-constructive": "green",
    "feasible-catalog": "green",
    "feasible-numerical-claim": "yellow",
    "infeasible": "red",
    "unknown": "yellow",
}


def _abort(code: ExitCode, message: str) -> NoReturn:
    console.print(f"[bold red]Error:[/bold red] {message}")
    sys.exit(int(code))


@contextmanager
def _exit_on_error() -> Iterator[None]:
    """Translate library errors into the exit-code taxonomy."""
    try:
        yield
    except StateError as exc:
        _abort(ExitCode.NUMERICAL_ERROR, str(exc))
    except (EntGraphError, ValidationError) as exc:
        _abort(ExitCode.USAGE_ERROR, str(exc))


def _finish(outcome: CommandOutcome) -> NoReturn:
    for path in outcome.artifacts:
        console.print(f"[green]Wrote:[/green] {path}")
    if outcome.message:
        style = "green" if outcome.exit_code is ExitCode.SUCCESS else "yellow"
        console.print(f"[{style}]{outcome.message}[/{style}]")
    sys.exit(int(outcome.exit_code))


def _tolerance_options(func: Callable[..., Any]) -> Callable[..., Any]:
    positive = click.FloatRange(min=0.0, min_open=True)
    func = click.option(
        "--tol-fac", type=positive, default=None, help="Factorization distance threshold"
    )(func)
    return click.option(
        "--tol-ent", type=positive, default=None, help="Negativity threshold for entanglement"
    )(func)


def _tolerances(tol_ent: float | None, tol_fac: float | None) -> Tolerances:
    tol = Tolerances.from_settings()
    update = {k: v for k, v in (("ent", tol_ent), ("fac", tol_fac)) if v is not None}
    return Tolerances.model_validate({**tol.model_dump(), **update})


def _subject(g: EntangledGraph) -> str:
    """Canonical label of ``g``, or a plain size tag when canonicalization is capped."""
    from entgraph.graphs import canonical_form

    try:
        return canonical_form(g)
    except CapExceededError:
        return f"n{g.n}"


def _print_verdicts(report: VerdictReport, title: str = "Pair Verdicts") -> None:
    table = Table(title=title, show_header=True, header_style="bold cyan")
    table.add_column("Pair", style="dim", no_wrap=True)
    table.add_column("Class", justify="center")
    table.add_column("Concurrence", justify="right")
    table.add_column("Negativity", justify="right")
    table.add_column("Fac. distance", justify="right")
    for v in report.verdicts:
        pair = f"({v.i},{v.j})" + (" [yellow]*[/yellow]" if v.marginal else "")
        table.add_row(
            pair,
            _CLASS_STYLES[v.pair_class.value],
            f"{v.concurrence:.6g}",
            f"{v.negativity:.3e}",
            f"{v.fac_distance:.3e}",
        )
    console.print(table)
    if report.marginal_pairs:
        console.print("[yellow]* verdict within the marginal band of a threshold[/yellow]")


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Logging level (defaults to ENTGRAPH_LOG_LEVEL)",
)
def cli(log_level: str | None) -> None:
    """entgraph - Entangled graphs with classical correlations."""
    from entgraph.core.config import get_settings

    level = (log_level or get_settings().log_level).upper()
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


@cli.command("build-mixed")
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default="state.json", help="Excitation-block state JSON output")
@click.option("--dense", is_flag=True, help="Also write the dense density operator")
@_tolerance_options
def build_mixed_cmd(
    graph_file: str, out: str, dense: bool, tol_ent: float | None, tol_fac: float | None
) -> None:
    """Build the universal mixed state realizing a graph."""
    from entgraph.analysis import extract_graph
    from entgraph.exporters import load_graph, save_state
    from entgraph.graphs import require_valid
    from entgraph.linalg import validate_density
    from entgraph.synthesis import build_mixed, expand_dense, validate_excitation

    console.print(
        Panel("[bold blue]entgraph[/bold blue] - Mixed State", subtitle=f"Graph: {graph_file}")
    )
    tol = _tolerances(tol_ent, tol_fac)
    outcome = CommandOutcome()
    with _exit_on_error():
        g = require_valid(load_graph(graph_file))
        if g.n < 2:
            _abort(
                ExitCode.USAGE_ERROR,
                "a single vertex needs no mixed state; use 'entgraph feasibility' for n=1",
            )
        state = build_mixed(g)
        problems = validate_excitation(state, tol.tr)
        if problems:
            _abort(ExitCode.NUMERICAL_ERROR, "; ".join(problems))
        outcome.artifacts.append(save_state(state, out))

        if dense:
            operator = expand_dense(state)
            problems = validate_density(operator, tol)
            if problems:
                _abort(ExitCode.NUMERICAL_ERROR, "; ".join(problems))
            base, ext = os.path.splitext(out)
            outcome.artifacts.append(save_state(operator, f"{base}_dense{ext or '.json'}"))

        report = extract_graph(state, tol)

    table = Table(title="Validation", show_header=True, header_style="bold cyan")
    table.add_column("Check", style="dim")
    table.add_column("Value", justify="right")
    table.add_row("Qubits", str(state.n))
    table.add_row("Trace", f"{state.trace:.12f}")
    table.add_row("Trace / PSD", "[green]OK[/green]")
    table.add_row(
        "Graph reproduced",
        "[green]yes[/green]" if report.graph == g else "[bold red]no[/bold red]",
    )
    console.print(table)
    _print_verdicts(report)

    if report.graph != g:
        outcome.exit_code = ExitCode.NUMERICAL_ERROR
        outcome.message = "Extracted graph differs from the input graph."
    _finish(outcome)


@cli.command()
@click.argument("state_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default="graph.json", help="Extracted graph JSON output")
@click.option("--report", "report_path", default=None, help="Verdict report JSON output")
@click.option("--dot", "dot_path", default=None, help="Also write the graph as DOT")
@click.option("--jobs", type=click.IntRange(min=1), default=1, help="Pair-classification workers")
@_tolerance_options
def classify(
    state_file: str,
    out: str,
    report_path: str | None,
    dot_path: str | None,
    jobs: int,
    tol_ent: float | None,
    tol_fac: float | None,
) -> None:
    """Classify every qubit pair of a state and write its graph."""
    from entgraph.analysis import extract_graph
    from entgraph.exporters import export_graph_dot, load_state, save_graph, save_verdict_report

    console.print(
        Panel("[bold blue]entgraph[/bold blue] - Pair Classification", subtitle=state_file)
    )
    outcome = CommandOutcome()
    with _exit_on_error():
        state = load_state(state_file)
        report = extract_graph(state, _tolerances(tol_ent, tol_fac), jobs=jobs)
        outcome.artifacts.append(save_graph(report.graph, out))
        if report_path is None:
            base, _ = os.path.splitext(out)
            report_path = f"{base}_verdicts.json"
        outcome.artifacts.append(save_verdict_report(report, report_path))
        if dot_path:
            outcome.artifacts.append(export_graph_dot(report.graph, dot_path))

    _print_verdicts(report)
    g = report.graph
    outcome.message = (
        f"n={g.n}: {len(g.entangled)} entanglement edge(s), "
        f"{len(g.classical)} classical-only edge(s)"
    )
    _finish(outcome)


@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--search", "run_search", is_flag=True, help="Search for R7/R8 witnesses")
@click.option("--jobs", type=click.IntRange(min=1), default=1, help="Parallel search restarts")
@click.option("--seed", type=int, default=None, help="Search seed")
@click.option("--restarts", type=click.IntRange(min=1), default=None, help="Search restarts")
@click.option("--archive-dir", default=None, help="Witness archive directory")
@click.option("--out", default=None, help="Verdict JSON output")
@_tolerance_options
def feasibility(
    graph_file: str,
    run_search: bool,
    jobs: int,
    seed: int | None,
    restarts: int | None,
    archive_dir: str | None,
    out: str | None,
    tol_ent: float | None,
    tol_fac: float | None,
) -> None:
    """Decide whether a graph has a pure-state representative."""
    from entgraph.archive import WitnessLedger
    from entgraph.core.config import get_settings
    from entgraph.exporters import feasibility_to_dict, load_graph, write_json
    from entgraph.feasibility import FeasibilityAssessor
    from entgraph.models.archive_entry import ArchiveAction
    from entgraph.models.search import SearchConfig

    console.print(Panel("[bold blue]entgraph[/bold blue] - Feasibility", subtitle=graph_file))
    outcome = CommandOutcome()
    with _exit_on_error():
        g = load_graph(graph_file)
        search_config = None
        if run_search:
            overrides = {k: v for k, v in (("seed", seed), ("restarts", restarts)) if v is not None}
            search_config = SearchConfig.from_settings(**overrides)
        assessor = FeasibilityAssessor(
            tol=_tolerances(tol_ent, tol_fac), search_config=search_config, jobs=jobs
        )
        verdict = assessor.assess(g)

        witness_path = ""
        if verdict.witness is not None:
            ledger = WitnessLedger(archive_dir or get_settings().archive_dir)
            subject = _subject(g)
            witness_path = ledger.archive_state(
                verdict.witness,
                "feasibility_" + subject.replace(":", "_"),
                ArchiveAction.FEASIBILITY,
                subject,
                parameters={
                    "search": run_search,
                    "seed": search_config.seed if search_config else None,
                    "webs": verdict.web_parameters,
                },
                details={"status": verdict.status.value, "rules": verdict.rules},
            )
            outcome.artifacts.append(witness_path)
        if out:
            outcome.artifacts.append(write_json(feasibility_to_dict(verdict, witness_path), out))

    table = Table(title="Components", show_header=True, header_style="bold cyan", show_lines=True)
    table.add_column("Vertices", style="dim", no_wrap=True)
    table.add_column("Rule", justify="center")
    table.add_column("Status", justify="center")
    table.add_column("Reason", width=48)
    for c in verdict.component_verdicts:
        color = _STATUS_STYLES[c.status.value]
        reason = "; ".join([c.reason, *c.notes])
        table.add_row(
            ",".join(map(str, c.vertices)),
            c.rule.value,
            f"[{color}]{c.status.value}[/{color}]",
            reason,
        )
    console.print(table)

    color = _STATUS_STYLES[verdict.status.value]
    console.print(
        Panel(
            f"[bold {color}]{verdict.status.value}[/bold {color}]"
            f"  -  rules {'+'.join(verdict.rules)}",
            title="Overall Verdict",
            border_style=color,
        )
    )

    exhausted = any(c.search is not None and not c.search.found for c in verdict.component_verdicts)
    if not verdict.status.is_feasible or exhausted:
        outcome.exit_code = ExitCode.VERIFIED_NEGATIVE
        outcome.message = "No pure-state representative established."
    _finish(outcome)


@cli.command()
@click.argument("n", type=int)
@click.option("--out", default=None, help="Census CSV output (default census_n<N>.csv)")
@click.option("--search", "run_search", is_flag=True, help="Search for R7/R8 witnesses")
@click.option("--seed", type=int, default=None, help="Search seed")
@click.option("--jobs", type=click.IntRange(min=1), default=1, help="Classes assessed in parallel")
@click.option("--archive-dir", default=None, help="Archive witnesses in this directory")
@_tolerance_options
def census(
    n: int,
    out: str | None,
    run_search: bool,
    seed: int | None,
    jobs: int,
    archive_dir: str | None,
    tol_ent: float | None,
    tol_fac: float | None,
) -> None:
    """Assess every isomorphism class of graphs on N vertices."""
    from entgraph.archive import WitnessLedger
    from entgraph.exporters import export_census_csv
    from entgraph.feasibility import FeasibilityAssessor
    from entgraph.feasibility import census as run_census
    from entgraph.models.search import SearchConfig

    console.print(Panel("[bold blue]entgraph[/bold blue] - Census", subtitle=f"n = {n}"))
    outcome = CommandOutcome()
    with _exit_on_error():
        search_config = None
        if run_search:
            overrides = {"seed": seed} if seed is not None else {}
            search_config = SearchConfig.from_settings(**overrides)
        assessor = FeasibilityAssessor(
            tol=_tolerances(tol_ent, tol_fac), search_config=search_config
        )
        ledger = WitnessLedger(archive_dir) if archive_dir else None
        report = run_census(n, assessor=assessor, ledger=ledger, jobs=jobs)
        outcome.artifacts.append(export_census_csv(report, out or f"census_n{n}.csv"))

    table = Table(title="Census Summary", show_header=True, header_style="bold cyan")
    table.add_column("Metric", style="dim")
    table.add_column("Value", justify="right")
    table.add_row("Labelled graphs", f"{report.raw_count:,}")
    table.add_row("Isomorphism classes", str(report.class_count))
    for status, count in report.status_counts.items():
        color = _STATUS_STYLES[status]
        table.add_row(f"[{color}]{status}[/{color}]", str(count))
    console.print(table)

    conventions = Table(title="Ambiguous Classes", show_header=True, header_style="bold cyan")
    conventions.add_column("Convention", style="dim")
    conventions.add_column("Count", justify="right")
    conventions.add_column("Published", justify="right")
    published = "-" if report.published_ambiguous is None else str(report.published_ambiguous)
    for name, count in report.conventions.items():
        mark = " [green]=[/green]" if name in report.agreeing_conventions else ""
        conventions.add_row(name, f"{count}{mark}", published)
    console.print(conventions)
    _finish(outcome)


@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--alpha", type=float, default=None, help="Amplitude of |0...0>")
@click.option("--beta", type=float, default=None, help="Amplitude of |1...1>")
@click.option("--gamma", type=float, default=None, help="Total double-excitation amplitude")
@click.option("--grid", type=click.IntRange(min=3), default=None, help="Sweep grid resolution")
@click.option("--out", default="web_state.json", help="Web state JSON output")
@click.option("--archive-dir", default=None, help="Archive the verified state here")
@_tolerance_options
def web(
    graph_file: str,
    alpha: float | None,
    beta: float | None,
    gamma: float | None,
    grid: int | None,
    out: str,
    archive_dir: str | None,
    tol_ent: float | None,
    tol_fac: float | None,
) -> None:
    """Build a web state for a complete web, explicitly or by parameter sweep."""
    from entgraph.analysis import extract_graph
    from entgraph.archive import WitnessLedger
    from entgraph.exporters import load_graph, save_state
    from entgraph.models.archive_entry import ArchiveAction
    from entgraph.synthesis import build_web, realize_web

    console.print(Panel("[bold blue]entgraph[/bold blue] - Web State", subtitle=graph_file))
    explicit = [alpha, beta, gamma]
    if any(v is not None for v in explicit) and any(v is None for v in explicit):
        _abort(ExitCode.USAGE_ERROR, "give all of --alpha, --beta and --gamma, or none")

    outcome = CommandOutcome()
    tol = _tolerances(tol_ent, tol_fac)
    with _exit_on_error():
        g = load_graph(graph_file)
        if alpha is not None and beta is not None and gamma is not None:
            state = build_web(g, alpha, beta, gamma)
            report = extract_graph(state, tol)
            verified, attempts, swept = report.graph == g, 1, False
        else:
            realization = realize_web(g, grid=grid, tol=tol)
            verified, attempts = realization.verified, realization.attempts
            swept = realization.swept
            if realization.state is None or realization.parameters is None:
                outcome.exit_code = ExitCode.VERIFIED_NEGATIVE
                outcome.message = f"No parameters realize the graph ({attempts} tried)."
                _finish(outcome)
            state = realization.state
            alpha = realization.parameters.alpha
            beta = realization.parameters.beta
            gamma = realization.parameters.gamma
            report = extract_graph(state, tol)
        outcome.artifacts.append(save_state(state, out))
        if archive_dir and verified:
            subject = _subject(g)
            outcome.artifacts.append(
                WitnessLedger(archive_dir).archive_state(
                    state,
                    "web_" + subject.replace(":", "_"),
                    ArchiveAction.WEB,
                    subject,
                    parameters={
                        "alpha": alpha,
                        "beta": beta,
                        "gamma": gamma,
                        "attempts": attempts,
                        "swept": swept,
                    },
                )
            )

    console.print(
        f"[dim]alpha={alpha:.6f}  beta={beta:.6f}  gamma={gamma:.6f}  attempts={attempts}[/dim]"
    )
    _print_verdicts(report)
    if not verified:
        outcome.exit_code = ExitCode.VERIFIED_NEGATIVE
        outcome.message = "Web state does not realize the graph for these parameters."
    _finish(outcome)


@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--config",
    "config_file",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="SearchConfig JSON",
)
@click.option("--restarts", type=click.IntRange(min=1), default=None, help="Number of restarts")
@click.option(
    "--max-evals", type=click.IntRange(min=1), default=None, help="Evaluations per restart"
)
@click.option(
    "--method",
    type=click.Choice(["nelder-mead", "finite-difference-descent"]),
    default=None,
    help="Local optimizer",
)
@click.option("--seed", type=int, default=None, help="Base seed")
@click.option(
    "--retry-factor",
    type=click.IntRange(min=1),
    default=None,
    help="On a miss, continue with this many times the restarts",
)
@click.option("--jobs", type=click.IntRange(min=1), default=1, help="Parallel restarts")
@click.option("--archive-dir", default=None, help="Witness archive directory")
@click.option("--trace", "show_trace", is_flag=True, help="Print the per-restart trace")
def search(
    graph_file: str,
    config_file: str | None,
    restarts: int | None,
    max_evals: int | None,
    method: str | None,
    seed: int | None,
    retry_factor: int | None,
    jobs: int,
    archive_dir: str | None,
    show_trace: bool,
) -> None:
    """Search for a pure state realizing a connected graph."""
    from entgraph.analysis import extract_graph
    from entgraph.archive import WitnessLedger
    from entgraph.core.config import get_settings
    from entgraph.exporters import load_graph, read_json, save_state, save_verdict_report
    from entgraph.models.archive_entry import ArchiveAction
    from entgraph.models.search import SearchConfig
    from entgraph.search import PureStateSearch

    console.print(Panel("[bold blue]entgraph[/bold blue] - Pure-State Search", subtitle=graph_file))
    outcome = CommandOutcome()
    with _exit_on_error():
        g = load_graph(graph_file)
        overrides: dict[str, Any] = {}
        if config_file:
            data = read_json(config_file)
            if not isinstance(data, dict):
                _abort(ExitCode.USAGE_ERROR, f"{config_file}: search config must be an object")
            overrides.update(data)
        for key, value in (
            ("restarts", restarts),
            ("max_evals_per_restart", max_evals),
            ("method", method),
            ("seed", seed),
            ("retry_factor", retry_factor),
        ):
            if value is not None:
                overrides[key] = value
        cfg = SearchConfig.from_settings(**overrides)
        result = PureStateSearch(cfg, jobs=jobs).run(g)

        if result.found and result.witness is not None:
            ledger = WitnessLedger(archive_dir or get_settings().archive_dir)
            subject = _subject(g)
            name = f"search_{subject.replace(':', '_')}_seed{cfg.seed}"
            state_path = save_state(
                result.witness, os.path.join(ledger.archive_dir, f"{name}.json")
            )
            report = extract_graph(result.witness, cfg.accept_tol)
            report_path = save_verdict_report(
                report, os.path.join(ledger.archive_dir, f"{name}_verdicts.json")
            )
            ledger.log(
                ArchiveAction.SEARCH,
                subject,
                artifacts=[state_path, report_path],
                parameters=cfg.model_dump(mode="json"),
                details={"best_objective": result.best_objective, "evals": result.evals},
            )
            outcome.artifacts.extend([state_path, report_path])

    if show_trace:
        table = Table(title="Restart Trace", show_header=True, header_style="bold cyan")
        table.add_column("Restart", justify="right")
        table.add_column("Best objective", justify="right")
        table.add_column("Evaluations", justify="right")
        table.add_column("Verified", justify="center")
        for t in result.per_restart_trace:
            table.add_row(
                str(t.restart),
                f"{t.best_value:.3e}",
                str(t.evals),
                "[green]yes[/green]" if t.verified else "[dim]no[/dim]",
            )
        console.print(table)

    summary = f"best objective {result.best_objective:.3e} after {result.evals:,} evaluations"
    if result.retried:
        summary += f" (retried with {cfg.retry_factor}x the restarts)"
    if result.found:
        outcome.message = f"Verified witness found: {summary}"
    else:
        outcome.exit_code = ExitCode.VERIFIED_NEGATIVE
        outcome.message = f"No verified witness: {summary}"
    _finish(outcome)


@cli.command("verify-archive")
@click.option("--archive-dir", default=None, help="Witness archive directory")
def verify_archive(archive_dir: str | None) -> None:
    """Recompute the ledger digests and list archived results per action."""
    from collections import Counter

    from entgraph.archive import WitnessLedger
    from entgraph.archive.ledger import LEDGER_FILE
    from entgraph.core.config import get_settings

    archive_dir = archive_dir or get_settings().archive_dir
    if not os.path.exists(os.path.join(archive_dir, LEDGER_FILE)):
        console.print(f"[yellow]Nothing archived under {archive_dir}[/yellow]")
        return

    ledger = WitnessLedger(archive_dir)
    is_valid, errors = ledger.verify()
    actions = Counter(entry.action.value for entry in ledger.load_from_file())

    table = Table(title=ledger.ledger_file, show_header=True, header_style="bold cyan")
    table.add_column("Action")
    table.add_column("Entries", justify="right")
    for action, count in sorted(actions.items()):
        table.add_row(action, str(count))
    console.print(table)

    status = "[bold green]VALID[/bold green]" if is_valid else "[bold red]BROKEN[/bold red]"
    console.print(f"Chain over {sum(actions.values())} entries: {status}")
    for err in errors:
        console.print(f"  [red]{err}[/red]")
    if errors:
        sys.exit(int(ExitCode.VERIFIED_NEGATIVE))


if __name__ == "__main__":
    cli()
