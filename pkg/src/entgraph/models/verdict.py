"""Pair classification models: tolerances, per-pair verdicts, verdict reports."""

from pydantic import BaseModel, Field

from entgraph.core.config import Settings, get_settings
from entgraph.models.graph import EntangledGraph, PairClass


class Tolerances(BaseModel):
    """Classification and validity thresholds."""

    ent: float = Field(1e-9, gt=0.0, description="Negativity threshold for entanglement")
    fac: float = Field(1e-9, gt=0.0, description="Frobenius threshold for factorization")
    psd: float = Field(1e-10, gt=0.0)
    tr: float = Field(1e-10, gt=0.0)
    herm: float = Field(1e-10, gt=0.0)
    norm: float = Field(1e-10, gt=0.0)
    marginal_factor: float = Field(100.0, gt=1.0)

    @classmethod
    def from_settings(cls, settings: Settings | None = None) -> "Tolerances":
        s = settings or get_settings()
        return cls(
            ent=s.tol_ent,
            fac=s.tol_fac,
            psd=s.tol_psd,
            tr=s.tol_tr,
            herm=s.tol_herm,
            norm=s.tol_norm,
            marginal_factor=s.marginal_factor,
        )


class PairVerdict(BaseModel):
    """Classification of one qubit pair with the metrics that decided it."""

    i: int
    j: int
    pair_class: PairClass = Field(..., serialization_alias="class")
    concurrence: float
    negativity: float
    fac_distance: float
    marginal: bool = False


class VerdictReport(BaseModel):
    """Every pair verdict of a state, the graph they assemble and the tolerances used."""

    graph: EntangledGraph
    verdicts: list[PairVerdict] = Field(default_factory=list)
    tolerances: Tolerances

    @property
    def marginal_pairs(self) -> list[tuple[int, int]]:
        return [(v.i, v.j) for v in self.verdicts if v.marginal]
