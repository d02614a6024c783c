import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .. import schemas
from ..algebra import classifier
from ..algebra.identities import check_all, structure_flags
from ..algebra.nullfiliform import build_mu0
from ..algebra.tp_structures import extract_alphas, solve_bracket_space
from ..models import AlgebraPair, AlphaParams, CanonicalTag, Expectation, SolveMode
from ..shared.config import Settings, settings
from ..utils.errors import ErrorHandler, ErrorMessages, NotInFamilyError
from ..utils.serialization import (
    canonical_to_response, document_to_pair, family_to_response, report_to_checks, solution_to_response,
    summary_to_response, transcript_to_response, witness_strings,
)

logger = logging.getLogger(__name__)


def _alpha_params(dim: int, values: Tuple[Fraction, ...], location: str) -> AlphaParams:
    if len(values) != dim - 1:
        raise ErrorHandler.validation_error(
            f"{ErrorMessages.ALPHA_LENGTH} Expected {dim - 1} values, got {len(values)}.", location=location
        )
    return AlphaParams(dim, tuple(values))


# ==============================================================================================================
#                                           VERIFY QUERIES
# ==============================================================================================================

@dataclass(frozen=True)
class VerifyAlgebraQuery:
    document: schemas.AlgebraDocument
    expect: Optional[Expectation] = None


class VerifyAlgebraQueryHandler:
    def __init__(self, config: Settings = settings):
        self.config = config

    def _classify(
        self, pair: AlgebraPair
    ) -> Tuple[Optional[schemas.CanonicalFormResponse], Optional[schemas.TranscriptResponse]]:
        """Canonical form and reduction transcript when the bracket is some TP(alpha) on mu_0^n."""
        try:
            alpha = extract_alphas(pair.bracket)
        except NotInFamilyError as error:
            logger.debug("bracket is not a TP bracket: %s", error.message)
            return None, None
        form = classifier.canonical_form(alpha)
        if form.tag is CanonicalTag.TRIVIAL:
            return canonical_to_response(form), None
        _, reduction = classifier.shift_reduce(alpha)
        return canonical_to_response(form), transcript_to_response(reduction)

    def _solution(self, n: int, expect: Expectation) -> Optional[schemas.SolutionResponse]:
        # expect=both is checked against the Poisson system
        if not self.config.min_solve_dim <= n <= self.config.max_solve_dim:
            return None
        mode = SolveMode.TRANSPOSED if expect is Expectation.TRANSPOSED else SolveMode.POISSON
        return solution_to_response(solve_bracket_space(n, mode))

    def handle(self, query: VerifyAlgebraQuery) -> schemas.ReportDocument:
        ErrorHandler.validate_dimension(query.document.dim, self.config.max_dim, name="dim")
        pair = document_to_pair(query.document)
        report = check_all(pair)
        structures = schemas.StructuresResponse(**structure_flags(pair, report))
        expect = None if query.expect is None else Expectation(query.expect)
        passed = None
        if expect is not None:
            passed = {
                Expectation.POISSON: structures.poisson,
                Expectation.TRANSPOSED: structures.transposed_poisson,
                Expectation.BOTH: structures.poisson and structures.transposed_poisson,
            }[expect]
        canonical = transcript = solution = None
        if pair.dim >= 2 and pair.dot == build_mu0(pair.dim):
            canonical, transcript = self._classify(pair)
            if expect is not None:
                solution = self._solution(pair.dim, expect)
        return schemas.ReportDocument(
            checks=report_to_checks(report),
            structures=structures,
            canonical=canonical,
            transcript=transcript,
            solution=solution,
            expect=None if expect is None else expect.value,
            passed=passed,
        )


# ==============================================================================================================
#                                           CLASSIFICATION QUERIES
# ==============================================================================================================

# CLASSIFY
@dataclass(frozen=True)
class ClassifyQuery:
    dim: int
    alpha: Tuple[Fraction, ...]


class ClassifyQueryHandler:
    def __init__(self, config: Settings = settings):
        self.config = config

    def handle(self, query: ClassifyQuery) -> schemas.ClassifyResponse:
        ErrorHandler.validate_dimension(query.dim, self.config.max_dim, name="dim", minimum=2)
        alpha = _alpha_params(query.dim, query.alpha, "alpha")
        form = classifier.canonical_form(alpha)
        transcript = None
        if form.tag is not CanonicalTag.TRIVIAL:
            _, reduction = classifier.shift_reduce(alpha)
            transcript = transcript_to_response(reduction)
        return schemas.ClassifyResponse(
            canonical=canonical_to_response(form),
            transcript=transcript,
            structure=summary_to_response(classifier.structure_summary(alpha)),
        )


# ISOMORPHIC
@dataclass(frozen=True)
class IsomorphicQuery:
    dim: int
    alpha_a: Tuple[Fraction, ...]
    alpha_b: Tuple[Fraction, ...]


class IsomorphicQueryHandler:
    def __init__(self, config: Settings = settings):
        self.config = config

    def handle(self, query: IsomorphicQuery) -> schemas.IsomorphismResponse:
        ErrorHandler.validate_dimension(query.dim, self.config.max_dim, name="dim", minimum=2)
        a = _alpha_params(query.dim, query.alpha_a, "alpha_a")
        b = _alpha_params(query.dim, query.alpha_b, "alpha_b")
        isomorphic, witness = classifier.are_isomorphic(a, b)
        return schemas.IsomorphismResponse(
            isomorphic=isomorphic,
            witness=witness_strings(witness),
            canonical_a=canonical_to_response(classifier.canonical_form(a)),
            canonical_b=canonical_to_response(classifier.canonical_form(b)),
        )


# TABLE
@dataclass(frozen=True)
class ClassificationTableQuery:
    dim: int


class ClassificationTableQueryHandler:
    def __init__(self, config: Settings = settings):
        self.config = config

    def handle(self, query: ClassificationTableQuery) -> schemas.ClassificationTableResponse:
        ErrorHandler.validate_dimension(query.dim, self.config.max_dim, name="dim", minimum=2)
        families = classifier.classification_table(query.dim)
        return schemas.ClassificationTableResponse(
            n=query.dim, families=[family_to_response(family) for family in families]
        )
