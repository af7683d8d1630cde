"""CommandOutcome model: exit code taxonomy for the CLI."""

from enum import IntEnum

from pydantic import BaseModel, Field


class ExitCode(IntEnum):
    """Stable exit codes."""

    SUCCESS = 0
    VERIFIED_NEGATIVE = 1
    USAGE_ERROR = 2
    NUMERICAL_ERROR = 3


class CommandOutcome(BaseModel):
    """Exit code of a command and the files it wrote."""

    exit_code: ExitCode = ExitCode.SUCCESS
    artifacts: list[str] = Field(default_factory=list)
    message: str = ""
