"""Models produced by state synthesis."""

from pydantic import BaseModel, Field

from entgraph.models.state import PureState


class WebParameters(BaseModel):
    """Amplitudes of the all-zero, all-one and double-excitation terms of a web state."""

    alpha: float = Field(..., ge=0.0)
    beta: float = Field(..., ge=0.0)
    gamma: float = Field(..., ge=0.0)


class WebRealization(BaseModel):
    """Outcome of realizing a complete web: the parameters tried and the verified state."""

    parameters: WebParameters | None = None
    state: PureState | None = None
    verified: bool = False
    attempts: int = 0
    swept: bool = False
