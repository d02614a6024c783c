"""
Isomorphism classification of TP(alpha_2, ..., alpha_n).

An automorphism phi of mu_0^n with parameters A acts on the TP parameters
through the triangular relation, for 2 <= t <= n,

    sum_{i=2}^{t} C(i, t) alpha'_i
        = sum_{j=2}^{t} sum_{i=1}^{t-j+1} (t-2i-j+3) A_i C(2, t-i-j+3) alpha_j

where C(i, t) sums A_{k_1} ... A_{k_i} over compositions of t into i parts.
The alpha'_t coefficient on the left is A_1^t, so alpha' is solved for in
increasing t.

Shift reduction applies one-parameter automorphisms e_1 -> e_1 + a e_k, each
chosen by solving "coefficient after transform_params = 0" in a. The index
2s-3 cannot be cleared (its coefficient does not depend on a), which leaves
the modulus of the S(s) families.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from sympy import integer_nthroot

from ..models import (
    AlphaParams, AutomorphismParams, CanonicalForm, CanonicalTag, ClassificationFamily,
    ReductionStep, ReductionTranscript, SeriesKind, StructureSummary,
)
from ..shared.config import settings
from ..utils.errors import ErrorHandler, ErrorMessages
from .core import lower_central_series, series
from .nullfiliform import compose_automorphisms, invert_automorphism, power_table
from .tp_structures import build_tp_bracket

logger = logging.getLogger(__name__)

ROOT_SCALING_NOTE = (
    "Normalising alpha_s to 1 needs the scaling e_i -> alpha_s^(i/(s-3)) e_i, which is not "
    "rational in general; the canonical form keeps the invariant ratio beta_{2s-3}/beta_s^2 instead."
)


# ====================================================
# PARAMETER ACTION
# ====================================================

def transform_params(alpha: AlphaParams, params: AutomorphismParams) -> AlphaParams:
    """Parameters of TP(alpha) written in the basis phi(e_1), ..., phi(e_n)."""
    if not alpha.is_classified:
        raise ErrorHandler.validation_error(ErrorMessages.ALPHA1_PRESENT, location="alpha1")
    n = alpha.n
    if params.n != n:
        raise ErrorHandler.validation_error(
            f"Automorphism parameters have length {params.n} but the algebra has dimension {n}.",
            location="A",
        )
    C = power_table(params, n)
    transformed = {}
    for t in range(2, n + 1):
        rhs = Fraction(0)
        for j in range(2, t + 1):
            alpha_j = alpha.value(j)
            if not alpha_j:
                continue
            for i in range(1, t - j + 2):
                factor = t - 2 * i - j + 3
                if factor and params.value(i):
                    rhs += factor * params.value(i) * C[2][t - i - j + 3] * alpha_j
        known = sum((C[i][t] * transformed[i] for i in range(2, t)), Fraction(0))
        transformed[t] = (rhs - known) / C[t][t]
    return AlphaParams(n, tuple(transformed[t] for t in range(2, n + 1)))


def first_nonzero(alpha: AlphaParams) -> Optional[int]:
    return next((t for t in range(2, alpha.n + 1) if alpha.value(t)), None)


def scaling_automorphism(c: Fraction, n: int) -> AutomorphismParams:
    """A = (c, 0, ..., 0): multiplies alpha_t by c^(3-t)"""
    return AutomorphismParams((Fraction(c),) + (Fraction(0),) * (n - 1))


def shift_automorphism(n: int, k: int, a: Fraction) -> AutomorphismParams:
    """e_1 -> e_1 + a e_k"""
    values = [Fraction(0)] * n
    values[0] = Fraction(1)
    values[k - 1] += a
    return AutomorphismParams(tuple(values))


# ====================================================
# SHIFT REDUCTION
# ====================================================

def shift_reduce(alpha: AlphaParams) -> Tuple[AlphaParams, ReductionTranscript]:
    if not alpha.is_classified:
        raise ErrorHandler.validation_error(ErrorMessages.ALPHA1_PRESENT, location="alpha1")
    alpha = alpha.without_alpha1()
    s = first_nonzero(alpha)
    if s is None:
        raise ErrorHandler.validation_error(ErrorMessages.ALL_ZERO, location="alpha")
    n = alpha.n
    current = alpha
    steps: List[ReductionStep] = []
    for target in range(s + 1, n + 1):
        k = target - s + 1
        base = current.value(target)
        if not base:
            continue
        slope = transform_params(current, shift_automorphism(n, k, Fraction(1))).value(target) - base
        if not slope:
            logger.debug("target %d does not depend on A_%d; kept", target, k)
            continue
        a = -base / slope
        params = shift_automorphism(n, k, a)
        current = transform_params(current, params)
        if current.value(target):
            raise ErrorHandler.validation_error(f"Elimination of alpha_{target} left a nonzero residue.", "alpha")
        logger.debug("cleared alpha_%d with A_%d = %s", target, k, a)
        steps.append(ReductionStep(automorphism=params, target=target, result=current))
    note = ROOT_SCALING_NOTE if s >= 4 else None
    return current, ReductionTranscript(start=alpha, steps=tuple(steps), note=note)


def replay_transcript(transcript: ReductionTranscript) -> bool:
    current = transcript.start
    for step in transcript.steps:
        current = transform_params(current, step.automorphism)
        if current != step.result:
            return False
    return True


# ====================================================
# CANONICAL FORMS
# ====================================================

def canonical_form(alpha: AlphaParams) -> CanonicalForm:
    n = alpha.n
    if not alpha.is_classified:
        raise ErrorHandler.validation_error(ErrorMessages.ALPHA1_PRESENT, location="alpha1")
    ErrorHandler.validate_dimension(n, settings.max_dim, minimum=2)
    s = first_nonzero(alpha)
    if s is None:
        return CanonicalForm(n=n, tag=CanonicalTag.TRIVIAL)
    if s == 2:
        return CanonicalForm(n=n, tag=CanonicalTag.S2)
    reduced, _ = shift_reduce(alpha)
    if s == 3:
        return CanonicalForm(n=n, tag=CanonicalTag.S3, modulus=reduced.value(3))
    if 2 * s - 3 <= n:
        return CanonicalForm(n=n, tag=CanonicalTag.S, s=s, modulus=reduced.value(2 * s - 3) / reduced.value(s) ** 2)
    return CanonicalForm(n=n, tag=CanonicalTag.S, s=s)


def representative(form: CanonicalForm) -> AlphaParams:
    """TP parameters of the normalised representative of a canonical form."""
    values = [Fraction(0)] * (form.n - 1)
    if form.tag is CanonicalTag.S2:
        values[0] = Fraction(1)
    elif form.tag is CanonicalTag.S3:
        values[1] = form.modulus
    elif form.tag is CanonicalTag.S:
        values[form.s - 2] = Fraction(1)
        if form.modulus is not None:
            values[2 * form.s - 5] = form.modulus
    return AlphaParams(form.n, tuple(values))


def family_label(n: int, tag: CanonicalTag, s: Optional[int] = None, has_modulus: bool = False) -> str:
    slots = ["0"] * (n - 1)
    if tag is CanonicalTag.S2:
        slots[0] = "1"
    elif tag is CanonicalTag.S3:
        slots[1] = "α"
    elif tag is CanonicalTag.S:
        slots[s - 2] = "1"
        if has_modulus:
            slots[2 * s - 5] = "α"
    return f"TP({','.join(slots)})"


def classification_table(n: int) -> List[ClassificationFamily]:
    ErrorHandler.validate_dimension(n, settings.max_dim, minimum=2)
    families = [
        ClassificationFamily(CanonicalTag.TRIVIAL, None, False, family_label(n, CanonicalTag.TRIVIAL)),
        ClassificationFamily(CanonicalTag.S2, None, False, family_label(n, CanonicalTag.S2)),
    ]
    if n >= 3:
        families.append(ClassificationFamily(CanonicalTag.S3, None, True, family_label(n, CanonicalTag.S3)))
    for s in range(4, n + 1):
        has_modulus = 2 * s - 3 <= n
        families.append(ClassificationFamily(CanonicalTag.S, s, has_modulus, family_label(n, CanonicalTag.S, s, has_modulus)))
    return families


# ====================================================
# ISOMORPHISM
# ====================================================

def rational_root(value: Fraction, degree: int) -> Optional[Fraction]:
    """A rational c with c**degree == value, or None when there is none."""
    value = Fraction(value)
    if degree == 1 or value == 0:
        return value
    if value < 0 and degree % 2 == 0:
        return None
    sign = -1 if value < 0 else 1
    numerator, exact_numerator = integer_nthroot(abs(value.numerator), degree)
    denominator, exact_denominator = integer_nthroot(value.denominator, degree)
    if not (exact_numerator and exact_denominator):
        return None
    return sign * Fraction(numerator, denominator)


def _reduction_params(alpha: AlphaParams) -> Tuple[AlphaParams, AutomorphismParams]:
    reduced, transcript = shift_reduce(alpha)
    total = AutomorphismParams.identity(alpha.n)
    for step in transcript.steps:
        total = compose_automorphisms(total, step.automorphism)
    return reduced, total


def are_isomorphic(a: AlphaParams, b: AlphaParams) -> Tuple[bool, Optional[AutomorphismParams]]:
    """
    Compare canonical forms; when they agree, also try to build a rational
    witness W with transform_params(a, W) == b.
    """
    if a.n != b.n:
        raise ErrorHandler.validation_error(ErrorMessages.DIM_MISMATCH, location="alpha_b")
    n = a.n
    form = canonical_form(a)
    if form != canonical_form(b):
        return False, None
    if form.tag is CanonicalTag.TRIVIAL:
        return True, AutomorphismParams.identity(n)
    reduced_a, to_a = _reduction_params(a)
    reduced_b, to_b = _reduction_params(b)
    s = first_nonzero(reduced_a)
    # transform_params(reduced_a, scaling(c)) multiplies alpha_s by c^(3-s)
    if s == 3:
        scale = Fraction(1)
    else:
        scale = rational_root(reduced_a.value(s) / reduced_b.value(s), s - 3) if s > 3 else reduced_b.value(2) / reduced_a.value(2)
    if scale is None:
        logger.debug("isomorphic over C, but the connecting scaling is not rational")
        return True, None
    witness = compose_automorphisms(compose_automorphisms(to_a, scaling_automorphism(scale, n)), invert_automorphism(to_b))
    if transform_params(a, witness) != b:
        raise ErrorHandler.validation_error("Constructed isomorphism witness failed verification.", "witness")
    return True, witness


# ====================================================
# STRUCTURE
# ====================================================

def structure_summary(alpha: AlphaParams) -> StructureSummary:
    bracket = build_tp_bracket(alpha)
    derived = series(bracket, SeriesKind.DERIVED)
    lower = lower_central_series(bracket)
    return StructureSummary(
        trivial=bracket.is_zero,
        nilpotent=lower.reaches_zero,
        solvable=derived.reaches_zero,
        derived_dims=derived.dims,
        lower_central_dims=lower.dims,
    )
