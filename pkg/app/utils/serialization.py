"""
JSON plumbing between wire documents (app.schemas) and the algebra types.

Rationals always travel as lowest-terms strings and keys are emitted sorted,
so equal inputs give byte-identical output.
"""
import json
from typing import Iterable, List, Optional, Sequence

from pydantic import BaseModel, ValidationError

from ..models import (
    AlgebraPair, AlphaParams, AutomorphismParams, BilinearMap, CanonicalForm, ClassificationFamily,
    IdentityReport, ReductionTranscript, SolutionSpace, StructureSummary,
)
from .. import schemas
from ..algebra.core import make_bilinear_map
from ..shared.config import settings
from .errors import ErrorHandler
from .rationals import format_rational


def _location(loc: Sequence) -> str:
    """('dot', 3, 'c') -> 'dot[3].c'"""
    text = ""
    for part in loc:
        if isinstance(part, int):
            text += f"[{part}]"
        else:
            text += f".{part}" if text else str(part)
    return text or "document"


# ====================================================
# PARSE / EMIT
# ====================================================

def parse_algebra(text: str) -> schemas.AlgebraDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as error:
        raise ErrorHandler.validation_error(f"Malformed JSON: {error.msg}.", f"line {error.lineno} column {error.colno}")
    try:
        doc = schemas.AlgebraDocument.model_validate(raw)
    except ValidationError as error:
        first = error.errors()[0]
        raise ErrorHandler.validation_error(first["msg"], _location(first["loc"]))
    for name in ("dot", "bracket"):
        for position, entry in enumerate(getattr(doc, name) or []):
            for field in ("i", "j", "k"):
                ErrorHandler.validate_index(getattr(entry, field), doc.dim, f"{name}[{position}].{field}")
    return doc


def dump_json(data: dict) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=settings.json_indent)


def emit(doc: BaseModel) -> str:
    return dump_json(doc.model_dump(mode="json", exclude_none=True))


# ====================================================
# DOCUMENT <-> ALGEBRA
# ====================================================

def entries_to_documents(B: BilinearMap) -> List[schemas.EntryDocument]:
    return [schemas.EntryDocument(i=i, j=j, k=k, c=format_rational(c)) for i, j, k, c in B.entries()]


def _to_map(dim: int, entries: Iterable[schemas.EntryDocument]) -> BilinearMap:
    return make_bilinear_map(dim, [(e.i, e.j, e.k, e.c) for e in entries])


def document_to_pair(doc: schemas.AlgebraDocument) -> AlgebraPair:
    """A document without a bracket carries the zero bracket."""
    return AlgebraPair(dot=_to_map(doc.dim, doc.dot), bracket=_to_map(doc.dim, doc.bracket or []))


def pair_to_document(pair: AlgebraPair, meta: Optional[dict] = None) -> schemas.AlgebraDocument:
    return schemas.AlgebraDocument(
        dim=pair.dim,
        dot=entries_to_documents(pair.dot),
        bracket=entries_to_documents(pair.bracket),
        meta=meta,
    )


# ====================================================
# RESPONSES
# ====================================================

def rationals(values: Iterable) -> List[str]:
    return [format_rational(value) for value in values]


def alpha_strings(alpha: AlphaParams) -> List[str]:
    return rationals(alpha.alpha)


def report_to_checks(report: IdentityReport) -> schemas.ChecksResponse:
    return schemas.ChecksResponse(
        **report.flags(),
        witnesses=[
            schemas.WitnessResponse(
                identity=witness.identity.value, basis=list(witness.basis), residual=rationals(witness.residual)
            )
            for witness in report.witnesses
        ],
    )


def canonical_to_response(form: CanonicalForm) -> schemas.CanonicalFormResponse:
    return schemas.CanonicalFormResponse(
        n=form.n,
        tag=form.tag,
        s=form.s,
        modulus=None if form.modulus is None else format_rational(form.modulus),
    )


def transcript_to_response(transcript: ReductionTranscript) -> schemas.TranscriptResponse:
    return schemas.TranscriptResponse(
        start=alpha_strings(transcript.start),
        steps=[
            schemas.TranscriptStepResponse(A=rationals(step.automorphism.A), target=step.target, alpha=alpha_strings(step.result))
            for step in transcript.steps
        ],
        reduced=alpha_strings(transcript.final),
        note=transcript.note,
    )


def summary_to_response(summary: StructureSummary) -> schemas.StructureSummaryResponse:
    return schemas.StructureSummaryResponse(
        trivial=summary.trivial,
        nilpotent=summary.nilpotent,
        solvable=summary.solvable,
        derived_dims=list(summary.derived_dims),
        lower_central_dims=list(summary.lower_central_dims),
    )


def witness_strings(witness: Optional[AutomorphismParams]) -> Optional[List[str]]:
    return None if witness is None else rationals(witness.A)


def family_to_response(family: ClassificationFamily) -> schemas.FamilyResponse:
    return schemas.FamilyResponse(tag=family.tag, s=family.s, has_modulus=family.has_modulus, label=family.label)


def solution_to_response(space: SolutionSpace) -> schemas.SolutionResponse:
    return schemas.SolutionResponse(
        n=space.n,
        mode=space.mode,
        dimension=space.dimension,
        unknowns=space.unknowns,
        rank=space.rank,
        basis=[entries_to_documents(bracket) for bracket in space.basis],
        residual_constraints=[str(constraint) for constraint in space.residual_constraints],
    )
