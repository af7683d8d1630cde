"""Multi-restart search for a pure state realizing a target graph.

Each restart draws its start point from ``default_rng([seed, restart])``,
minimizes the penalty objective and, once the objective reaches
``objective_tol``, hands the incumbent to the pair classifier. Restarts are
visited in index order (in batches of ``jobs`` when parallel) and the first
one whose incumbent classifies to the target with no marginal pair wins, so
serial and parallel runs agree.
"""

import logging
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.optimize import minimize

from entgraph.analysis.classifier import extract_graph
from entgraph.core.config import get_settings
from entgraph.core.exceptions import CapExceededError, SearchConfigError
from entgraph.graphs import is_connected, require_valid
from entgraph.models.graph import EntangledGraph
from entgraph.models.search import RestartTrace, SearchConfig, SearchMethod, SearchResult
from entgraph.models.state import PureState
from entgraph.search.objective import PenaltyObjective

logger = logging.getLogger(__name__)


class _Stop(Exception):
    """Raised inside the objective to end a restart early."""


class _Tracker:
    """Wraps the objective: counts evaluations, keeps the incumbent, enforces the budget."""

    def __init__(self, objective: PenaltyObjective, budget: int, target: float):
        self.objective = objective
        self.budget = budget
        self.target = target
        self.evals = 0
        self.best_value = np.inf
        self.best_x: np.ndarray | None = None

    def __call__(self, x: np.ndarray) -> float:
        if self.evals >= self.budget:
            raise _Stop
        self.evals += 1
        value = self.objective(x)
        if value < self.best_value:
            self.best_value = value
            self.best_x = np.array(x, copy=True)
        if value <= self.target:
            raise _Stop
        return value

    @property
    def remaining(self) -> int:
        return max(0, self.budget - self.evals)

    @property
    def done(self) -> bool:
        return self.best_value <= self.target or self.remaining == 0


class RestartOutcome(BaseModel):
    """Result of one restart, shipped back from worker processes."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    trace: RestartTrace
    amplitudes: np.ndarray | None = None


def _minimize(tracker: _Tracker, x0: np.ndarray, method: SearchMethod, scale: float) -> None:
    try:
        if method is SearchMethod.FINITE_DIFFERENCE_DESCENT:
            minimize(tracker, x0, method="L-BFGS-B", options={"maxfun": tracker.remaining})
        else:
            simplex = np.vstack([x0, x0 + scale * np.eye(x0.shape[0])])
            minimize(
                tracker,
                x0,
                method="Nelder-Mead",
                options={
                    "maxfev": tracker.remaining,
                    "initial_simplex": simplex,
                    "adaptive": True,
                    "xatol": 1e-12,
                    "fatol": tracker.target * 1e-3,
                },
            )
    except _Stop:
        pass


def run_restart(g: EntangledGraph, cfg: SearchConfig, restart: int) -> RestartOutcome:
    """One restart: initial descent, polishing rounds, then classifier verification."""
    objective = PenaltyObjective(g, cfg)
    rng = np.random.default_rng([cfg.seed, restart])
    x0 = rng.standard_normal(objective.parameter_count)
    x0 /= np.linalg.norm(x0)
    tracker = _Tracker(objective, cfg.max_evals_per_restart, cfg.objective_tol)

    _minimize(tracker, x0, cfg.method, scale=0.25)
    scale = 0.05
    for _ in range(cfg.polish_rounds):
        if tracker.done or tracker.best_x is None:
            break
        start = objective.from_amplitudes(objective.to_amplitudes(tracker.best_x))
        _minimize(tracker, start, SearchMethod.NELDER_MEAD, scale=scale)
        scale *= 0.1

    amplitudes = None
    verified = False
    if tracker.best_x is not None and tracker.best_value <= cfg.objective_tol:
        amplitudes = objective.to_amplitudes(tracker.best_x)
        report = extract_graph(PureState.on_range(amplitudes), cfg.accept_tol)
        verified = report.graph == g and not report.marginal_pairs
        if not verified:
            logger.debug(
                "Restart %d reached the target but failed verification (marginal pairs: %s)",
                restart,
                report.marginal_pairs,
            )

    trace = RestartTrace(
        restart=restart,
        best_value=float(tracker.best_value),
        evals=tracker.evals,
        verified=verified,
    )
    logger.debug("Restart %d: best=%.3e evals=%d", restart, trace.best_value, trace.evals)
    return RestartOutcome(trace=trace, amplitudes=amplitudes if verified else None)


class PureStateSearch:
    """Search driver bound to a configuration and a worker count."""

    def __init__(self, cfg: SearchConfig | None = None, jobs: int | None = None):
        settings = get_settings()
        self.cfg = cfg or SearchConfig.from_settings(settings)
        self.jobs = jobs if jobs is not None else settings.jobs
        self.cap = settings.search_cap
        if self.jobs < 1:
            raise SearchConfigError(f"jobs must be at least 1, got {self.jobs}")

    def _check(self, g: EntangledGraph) -> None:
        require_valid(g)
        if g.n > self.cap:
            raise CapExceededError("search", g.n, self.cap)
        if g.n > 1 and not is_connected(g):
            raise SearchConfigError("search expects a connected graph; decompose it first")

    def _batch(self, g: EntangledGraph, restarts: list[int]) -> list[RestartOutcome]:
        if self.jobs == 1 or len(restarts) == 1:
            return [run_restart(g, self.cfg, r) for r in restarts]
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            count = len(restarts)
            return list(pool.map(run_restart, [g] * count, [self.cfg] * count, restarts))

    def _sweep(
        self, g: EntangledGraph, start: int, stop: int, traces: list[RestartTrace]
    ) -> PureState | None:
        for first in range(start, stop, self.jobs):
            batch = list(range(first, min(first + self.jobs, stop)))
            for outcome in self._batch(g, batch):
                traces.append(outcome.trace)
                if outcome.amplitudes is not None:
                    return PureState.on_range(outcome.amplitudes)
        return None

    def run(self, g: EntangledGraph) -> SearchResult:
        """Visit the restarts in order until one passes the classifier.

        Parameters
        ----------
        g : EntangledGraph
            Connected target graph within the search cap.

        Returns
        -------
        SearchResult
            The verified witness and the winning restart's objective when
            found, otherwise the best objective over every restart. A miss is
            retried with ``retry_factor`` times the restarts (indices continue
            after the first sweep) and ``retried`` is set.
        """
        self._check(g)
        traces: list[RestartTrace] = []
        witness = self._sweep(g, 0, self.cfg.restarts, traces)
        retried = False
        if witness is None and self.cfg.retry_factor > 1:
            retried = True
            logger.warning(
                "No witness for n=%d after %d restarts; retrying with %dx the budget",
                g.n,
                self.cfg.restarts,
                self.cfg.retry_factor,
            )
            witness = self._sweep(
                g, self.cfg.restarts, self.cfg.restarts * self.cfg.retry_factor, traces
            )

        evals = sum(t.evals for t in traces)
        if witness is not None:
            winner = traces[-1]
            logger.info(
                "Search found a verified witness for n=%d at restart %d (%d evaluations%s)",
                g.n,
                winner.restart,
                evals,
                ", after retry" if retried else "",
            )
            return SearchResult(
                found=True,
                witness=witness,
                best_objective=winner.best_value,
                evals=evals,
                per_restart_trace=traces,
                seed=self.cfg.seed,
                retried=retried,
            )

        best = min(traces, key=lambda t: (t.best_value, t.restart))
        logger.warning(
            "Search exhausted %d restarts for n=%d; best objective %.3e at restart %d",
            len(traces),
            g.n,
            best.best_value,
            best.restart,
        )
        return SearchResult(
            found=False,
            best_objective=best.best_value,
            evals=evals,
            per_restart_trace=traces,
            seed=self.cfg.seed,
            retried=retried,
        )


def search(
    g: EntangledGraph, cfg: SearchConfig | None = None, jobs: int | None = None
) -> SearchResult:
    """Search for a pure state whose extracted graph equals ``g``."""
    return PureStateSearch(cfg, jobs).run(g)
