import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .. import schemas
from ..algebra.nullfiliform import build_mu0
from ..algebra.tp_structures import build_tp_bracket, solve_bracket_space
from ..models import AlgebraPair, AlphaParams, SolveMode
from ..shared.config import Settings, settings
from ..utils.errors import ErrorHandler, ErrorMessages
from ..utils.serialization import entries_to_documents, pair_to_document, solution_to_response

logger = logging.getLogger(__name__)


# =============================================================================================================
# CONSTRUCTION COMMANDS
# =============================================================================================================

# ==================
# BUILD MU0
# ==================
@dataclass(frozen=True)
class BuildMu0Command:
    dim: int


class BuildMu0Handler:
    def __init__(self, config: Settings = settings):
        self.config = config

    def handle(self, command: BuildMu0Command) -> schemas.AlgebraDocument:
        ErrorHandler.validate_dimension(command.dim, self.config.max_dim, name="dim")
        dot = build_mu0(command.dim)
        return schemas.AlgebraDocument(
            dim=command.dim,
            dot=entries_to_documents(dot),
            meta={"name": f"mu0^{command.dim}"},
        )


# ==================
# BUILD TP
# ==================
@dataclass(frozen=True)
class BuildTPCommand:
    dim: int
    alpha: Tuple[Fraction, ...]


class BuildTPHandler:
    def __init__(self, config: Settings = settings):
        self.config = config

    def handle(self, command: BuildTPCommand) -> schemas.AlgebraDocument:
        ErrorHandler.validate_dimension(command.dim, self.config.max_dim, name="dim", minimum=2)
        if len(command.alpha) != command.dim - 1:
            raise ErrorHandler.validation_error(
                f"{ErrorMessages.ALPHA_LENGTH} Expected {command.dim - 1} values, got {len(command.alpha)}.",
                location="alpha",
            )
        params = AlphaParams(command.dim, tuple(command.alpha))
        pair = AlgebraPair(dot=build_mu0(command.dim), bracket=build_tp_bracket(params))
        label = ",".join(str(value) for value in params.alpha)
        return pair_to_document(pair, meta={"name": f"TP({label})"})


# =============================================================================================================
# SOLVER COMMANDS
# =============================================================================================================

@dataclass(frozen=True)
class SolveBracketSpaceCommand:
    dim: int
    mode: SolveMode


class SolveBracketSpaceHandler:
    def __init__(self, config: Settings = settings):
        self.config = config

    def handle(self, command: SolveBracketSpaceCommand) -> schemas.SolutionResponse:
        ErrorHandler.validate_dimension(
            command.dim, self.config.max_solve_dim, name="dim", minimum=self.config.min_solve_dim
        )
        space = solve_bracket_space(command.dim, command.mode)
        logger.info("solved n=%d (%s): dimension %d", command.dim, space.mode.value, space.dimension)
        return solution_to_response(space)
