"""Pure-state search configuration and result models."""

from enum import Enum

from pydantic import BaseModel, Field, model_validator

from entgraph.core.config import Settings, get_settings
from entgraph.models.state import PureState
from entgraph.models.verdict import Tolerances


class SearchMethod(str, Enum):
    NELDER_MEAD = "nelder-mead"
    FINITE_DIFFERENCE_DESCENT = "finite-difference-descent"


class SearchConfig(BaseModel):
    """Budget, margins and acceptance tolerances of a pure-state search.

    A restart stops early once the objective reaches ``objective_tol``; its
    incumbent is then classified under ``accept_tol`` and accepted only on an
    exact graph match with no marginal pair. ``retry_factor`` > 1 lets a search
    that misses continue with that many times the restarts.
    """

    restarts: int = Field(64, ge=1)
    max_evals_per_restart: int = Field(20000, ge=1)
    seed: int = 0
    target_concurrence_floor: float = Field(0.01, gt=0.0)
    correlation_floor: float = Field(0.01, gt=0.0)
    accept_tol: Tolerances = Field(default_factory=lambda: Tolerances(ent=1e-10, fac=1e-10))
    method: SearchMethod = SearchMethod.NELDER_MEAD
    objective_tol: float = Field(1e-12, gt=0.0)
    polish_rounds: int = Field(3, ge=0)
    retry_factor: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _margins(self) -> "SearchConfig":
        if self.target_concurrence_floor <= self.accept_tol.ent:
            raise ValueError("target_concurrence_floor must exceed accept_tol.ent")
        if self.correlation_floor <= self.accept_tol.fac:
            raise ValueError("correlation_floor must exceed accept_tol.fac")
        if self.objective_tol >= min(self.accept_tol.ent, self.accept_tol.fac):
            raise ValueError("objective_tol must be below the accept_tol thresholds")
        return self

    @classmethod
    def from_settings(cls, settings: Settings | None = None, **overrides: object) -> "SearchConfig":
        s = settings or get_settings()
        tol = Tolerances.from_settings(s).model_copy(
            update={"ent": s.search_tol_ent, "fac": s.search_tol_fac}
        )
        values: dict[str, object] = {
            "restarts": s.search_restarts,
            "max_evals_per_restart": s.search_max_evals,
            "seed": s.search_seed,
            "target_concurrence_floor": s.concurrence_floor,
            "correlation_floor": s.correlation_floor,
            "accept_tol": tol,
            "objective_tol": s.objective_tol,
            "polish_rounds": s.polish_rounds,
            "retry_factor": s.search_retry_factor,
        }
        values.update(overrides)
        return cls.model_validate(values)


class RestartTrace(BaseModel):
    """Outcome of one restart."""

    restart: int
    best_value: float
    evals: int
    verified: bool = False


class SearchResult(BaseModel):
    """Best state found by a search, verified by the pair classifier when ``found``."""

    found: bool
    witness: PureState | None = None
    best_objective: float
    evals: int
    per_restart_trace: list[RestartTrace] = Field(default_factory=list)
    seed: int = 0
    retried: bool = False
