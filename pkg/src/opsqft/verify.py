"""Seeded identity suites over random contexts, fields, and frames.

Every suite draws its own data from a ``numpy.random.Generator``,
evaluates one family of identities, and returns ``CheckResult`` rows
with the worst residual seen.  A result with ``gated=False`` is
informational: the phase-angle family's discrete round-trip defect is
reported this way because its collapsed spectra cannot determine a
general field (each part spectrum is constant along one axis, so one
axis worth of information per part is averaged away).

Tolerances follow the two-tier policy: 1e-12 for pointwise algebraic
identities, 1e-10 for summed transform identities, 1e-9 relative for
fast-against-direct agreement and energy balance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .fields import Domain, QuaternionField2D
from .quat import (
    ONE,
    QI,
    QJ,
    QK,
    PureUnitQuaternion,
    Quaternion,
    conj,
    conj_arr,
    exp_arr,
    exp_pure,
    inner,
    mul,
    mul_arr,
    norm,
    scalar_part,
)
from .split import (
    OpsContext,
    PlaneAssignment,
    determine_context,
    make_context,
    coefficients,
    reconstruct,
    split,
    split_arr,
)
from .transform import (
    Family,
    Spectrum,
    TransformVariant,
    forward_direct,
    forward_fast,
    inverse_direct,
    inverse_fast,
)
from .fftcore import TAU

DEFAULT_SIZES: Tuple[Tuple[int, int], ...] = ((1, 1), (2, 3), (4, 4), (8, 8), (16, 16))


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    gated: bool = True

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    def line(self) -> str:
        status = ("PASS" if self.passed else "FAIL") if self.gated else "REPORT"
        return f"{status:6s} {self.name:34s} residual {self.residual:.3e}  tol {self.tolerance:.1e}"


# ---------------------------------------------------------------------------
# Random draws.

def random_pure_unit(rng: np.random.Generator) -> PureUnitQuaternion:
    while True:
        v = rng.standard_normal(3)
        if np.linalg.norm(v) >= 1e-6:
            return PureUnitQuaternion(*v)


def random_orthogonal_pure_unit(rng: np.random.Generator,
                                f: Quaternion) -> PureUnitQuaternion:
    fv = np.array([f.x, f.y, f.z])
    while True:
        v = rng.standard_normal(3)
        v = v - np.dot(v, fv) * fv
        if np.linalg.norm(v) >= 1e-6:
            return PureUnitQuaternion(*v)


def random_quaternion(rng: np.random.Generator) -> Quaternion:
    return Quaternion(*rng.standard_normal(4))


def random_field(rng: np.random.Generator, n1: int, n2: int) -> QuaternionField2D:
    return QuaternionField2D(rng.standard_normal((n1, n2, 4)))


def sample_contexts(rng: np.random.Generator, count: int) -> List[OpsContext]:
    """At least ``count`` contexts: one g = f, one g = -f, one orthogonal
    pair, the rest generic random pairs."""
    f0 = random_pure_unit(rng)
    ctxs = [
        make_context(f0, f0),
        make_context(f0, PureUnitQuaternion(-f0.x, -f0.y, -f0.z)),
        make_context(f0, random_orthogonal_pure_unit(rng, f0)),
    ]
    while len(ctxs) < count:
        ctxs.append(make_context(random_pure_unit(rng), random_pure_unit(rng)))
    return ctxs


def random_frame(rng: np.random.Generator):
    """Orthonormal 4-frame (a, b, c, d) with a, c pure.

    a and c are an orthonormal pure pair; the complement of their span
    is spanned by 1 and the pure unit e orthogonal to both, so b and d
    are a random rotation of (1, e) with random signs.
    """
    a = random_pure_unit(rng)
    c = random_orthogonal_pure_unit(rng, a)
    av = np.array([a.x, a.y, a.z])
    cv = np.array([c.x, c.y, c.z])
    ev = np.cross(av, cv)
    e = Quaternion(0.0, *ev)
    t = rng.uniform(0.0, TAU)
    sb, sd = rng.choice([-1.0, 1.0], size=2)
    b = sb * (math.cos(t) * ONE + math.sin(t) * e)
    d = sd * (-math.sin(t) * ONE + math.cos(t) * e)
    return a, b, c, d


# ---------------------------------------------------------------------------
# Helpers.

def _max_abs(x) -> float:
    return float(np.max(np.abs(x)))


def _rms(data: np.ndarray) -> float:
    return float(np.sqrt(np.mean(np.sum(data * data, axis=-1))))


def _relative_residual(got: np.ndarray, want: np.ndarray) -> float:
    scale = max(_rms(want), 1e-300)
    return _max_abs(got - want) / scale


def _wrong_plane_residual(ctx: OpsContext, q: Quaternion, keep_plus: bool) -> float:
    parts = split(ctx, q)
    stray = parts.minus if keep_plus else parts.plus
    return norm(stray)


# ---------------------------------------------------------------------------
# Suites.

def check_roundtrips(rng, sizes=DEFAULT_SIZES, n_contexts=20, n_fields=5) -> List[CheckResult]:
    """Fast-path inverse(forward(h)) = h for the invertible families."""
    ctxs = sample_contexts(rng, n_contexts)
    results = []
    for family in (Family.TWO_SIDED, Family.CONJUGATE):
        worst = 0.0
        for ctx in ctxs:
            variant = TransformVariant(family, ctx)
            for n1, n2 in sizes:
                for _ in range(n_fields):
                    h = random_field(rng, n1, n2)
                    back = inverse_fast(variant, forward_fast(variant, h))
                    worst = max(worst, _max_abs(back.data - h.data))
        results.append(CheckResult(f"roundtrip/{family.value}", worst, 1e-10))
    return results


def check_oracle_equivalence(rng, sizes=DEFAULT_SIZES, n_contexts=20,
                             n_fields=5) -> List[CheckResult]:
    """Fast path against the direct reference, both directions, all families."""
    ctxs = sample_contexts(rng, n_contexts)
    results = []
    for family in Family:
        worst_f = 0.0
        worst_i = 0.0
        for ctx in ctxs:
            variant = TransformVariant(family, ctx)
            for n1, n2 in sizes:
                for _ in range(n_fields):
                    h = random_field(rng, n1, n2)
                    sd = forward_direct(variant, h)
                    sf = forward_fast(variant, h)
                    worst_f = max(worst_f, _relative_residual(sf.data, sd.data))
                    spectrum = Spectrum(random_field(rng, n1, n2), variant)
                    bd = inverse_direct(variant, spectrum)
                    bf = inverse_fast(variant, spectrum)
                    worst_i = max(worst_i, _relative_residual(bf.data, bd.data))
        results.append(CheckResult(f"oracle/{family.value}-forward", worst_f, 1e-9))
        results.append(CheckResult(f"oracle/{family.value}-inverse", worst_i, 1e-9))
    return results


def check_mixed_plane_products(rng, samples=1000) -> CheckResult:
    """Sc(p_plus conj(q_minus)) and the mirror vanish for all contexts."""
    worst = 0.0
    for _ in range(samples):
        ctx = make_context(random_pure_unit(rng), random_pure_unit(rng))
        p = split(ctx, random_quaternion(rng))
        q = split(ctx, random_quaternion(rng))
        worst = max(worst,
                    abs(scalar_part(mul(p.plus, conj(q.minus)))),
                    abs(scalar_part(mul(p.minus, conj(q.plus)))))
    return CheckResult("split/mixed-plane-products", worst, 1e-12)


def check_plane_determination(rng, frames=100) -> List[CheckResult]:
    """Prescribed planes are recovered; the worked unit frame is exact."""
    worst = 0.0
    for _ in range(frames):
        a, b, c, d = random_frame(rng)
        for assign in PlaneAssignment:
            ctx = determine_context(a, b, c, d, assign)
            ab_plus = assign is PlaneAssignment.AB_TO_PLUS
            for q in (a, b):
                worst = max(worst, _wrong_plane_residual(ctx, q, keep_plus=ab_plus))
            for q in (c, d):
                worst = max(worst, _wrong_plane_residual(ctx, q, keep_plus=not ab_plus))
    results = [CheckResult("planes/random-frames", worst, 1e-10)]

    ctx = determine_context(QI, QJ, QK, ONE, PlaneAssignment.AB_TO_MINUS)
    exact = (ctx.f.to_array().tolist() == [0.0, 0.0, 0.0, -1.0]
             and ctx.g.to_array().tolist() == [0.0, 0.0, 0.0, 1.0]
             and ctx.degenerate and ctx.degenerate_sign == -1)
    results.append(CheckResult("planes/worked-frame", 0.0 if exact else 1.0, 0.0))
    return results


def check_phase_factor_commutation(rng, samples=1000) -> CheckResult:
    """exp(a f) q_pm exp(b g) = q_pm exp((b -+ a) g) = exp((a -+ b) f) q_pm."""
    worst = 0.0
    for k in range(samples):
        if k % 5 == 4:
            f = random_pure_unit(rng)
            sign = 1.0 if k % 2 else -1.0
            ctx = make_context(f, PureUnitQuaternion(sign * f.x, sign * f.y, sign * f.z))
        else:
            ctx = make_context(random_pure_unit(rng), random_pure_unit(rng))
        alpha, beta = rng.uniform(-TAU, TAU, size=2)
        parts = split(ctx, random_quaternion(rng))
        for qp, s in ((parts.plus, -1.0), (parts.minus, 1.0)):
            lhs = mul(mul(exp_pure(ctx.f, alpha), qp), exp_pure(ctx.g, beta))
            mid = mul(qp, exp_pure(ctx.g, beta + s * alpha))
            rhs = mul(exp_pure(ctx.f, alpha + s * beta), qp)
            worst = max(worst,
                        norm(lhs - mid),
                        norm(lhs - rhs))
    return CheckResult("split/phase-commutation", worst, 1e-12)


def _direct_right_sum(part: np.ndarray, unit: Quaternion, phase_sign_axis1,
                      phase_sign_axis2) -> np.ndarray:
    """sum_m part[m] exp(unit * (s1 t1 + s2 t2)) with ti the full angles."""
    n1, n2 = part.shape[:2]
    out = np.empty((n1, n2, 4))
    m1 = np.arange(n1)[:, None]
    m2 = np.arange(n2)[None, :]
    for k1 in range(n1):
        for k2 in range(n2):
            phase = (phase_sign_axis1 * TAU * m1 * k1 / n1
                     + phase_sign_axis2 * TAU * m2 * k2 / n2)
            kern = exp_arr(unit, phase)
            out[k1, k2] = mul_arr(part, kern).sum(axis=(0, 1))
    return out


def _direct_left_sum(part: np.ndarray, unit: Quaternion, phase_sign_axis1,
                     phase_sign_axis2) -> np.ndarray:
    n1, n2 = part.shape[:2]
    out = np.empty((n1, n2, 4))
    m1 = np.arange(n1)[:, None]
    m2 = np.arange(n2)[None, :]
    for k1 in range(n1):
        for k2 in range(n2):
            phase = (phase_sign_axis1 * TAU * m1 * k1 / n1
                     + phase_sign_axis2 * TAU * m2 * k2 / n2)
            kern = exp_arr(unit, phase)
            out[k1, k2] = mul_arr(kern, part).sum(axis=(0, 1))
    return out


def check_split_part_forms(rng, sizes=((4, 4), (8, 8)), n_fields=2) -> List[CheckResult]:
    """Each part spectrum has equal one-sided left and right evaluations.

    Two-sided family: F_pm = sum h_pm exp(-g (t2 -+ t1))
                           = sum exp(-f (t1 -+ t2)) h_pm.
    Conjugation family: F_pm = sum conj(h_pm) exp(-f (t2 -+ t1))
                             = sum exp(-g (t1 -+ t2)) conj(h_pm),
    also exercised with g = f.  Both must sum to the full spectrum.
    """
    cases = [
        ("twosided", Family.TWO_SIDED,
         make_context(random_pure_unit(rng), random_pure_unit(rng))),
        ("conjc", Family.CONJUGATE,
         make_context(random_pure_unit(rng), random_pure_unit(rng))),
    ]
    f_eq = random_pure_unit(rng)
    cases.append(("conjc-equal-axes", Family.CONJUGATE, make_context(f_eq, f_eq)))

    results = []
    for label, family, ctx in cases:
        variant = TransformVariant(family, ctx)
        worst = 0.0
        for n1, n2 in sizes:
            for _ in range(n_fields):
                h = random_field(rng, n1, n2)
                plus, minus = split_arr(ctx, h.data)
                full = forward_direct(variant, h).data
                part_spectra = []
                for part, s in ((plus, +1), (minus, -1)):
                    if family is Family.TWO_SIDED:
                        right = _direct_right_sum(part, ctx.g, s * 1, -1)
                        left = _direct_left_sum(part, ctx.f, -1, s * 1)
                    else:
                        cpart = conj_arr(part)
                        right = _direct_right_sum(cpart, ctx.f, s * 1, -1)
                        left = _direct_left_sum(cpart, ctx.g, -1, s * 1)
                    via_transform = forward_direct(
                        variant, QuaternionField2D(part)).data
                    worst = max(worst,
                                _max_abs(right - left),
                                _max_abs(right - via_transform))
                    part_spectra.append(right)
                worst = max(worst, _max_abs(part_spectra[0] + part_spectra[1] - full))
        results.append(CheckResult(f"split-forms/{label}", worst, 1e-10))
    return results


def check_phase_angle_structure(rng, sizes=((4, 4), (8, 8)), n_fields=2) -> List[CheckResult]:
    """Part spectra of the phase-angle family and its round-trip defect.

    The plus part spectrum is constant along the first frequency axis
    and equals sum h_plus exp(+g t2) = sum exp(-f t2) h_plus; the minus
    part is constant along the second axis with kernel exp(-g t1).  The
    round-trip residual is reported, not gated: the collapsed spectra
    cannot determine a general field.
    """
    worst_const = 0.0
    worst_forms = 0.0
    worst_sum = 0.0
    worst_trip = 0.0
    for n1, n2 in sizes:
        ctx = make_context(random_pure_unit(rng), random_pure_unit(rng))
        variant = TransformVariant(Family.PHASE_ANGLE, ctx)
        for _ in range(n_fields):
            h = random_field(rng, n1, n2)
            plus, minus = split_arr(ctx, h.data)
            full = forward_direct(variant, h).data
            fplus = forward_direct(variant, QuaternionField2D(plus)).data
            fminus = forward_direct(variant, QuaternionField2D(minus)).data

            worst_const = max(worst_const,
                              _max_abs(fplus - fplus[:1, :, :]),
                              _max_abs(fminus - fminus[:, :1, :]))
            right_plus = _direct_right_sum(plus, ctx.g, 0, +1)
            left_plus = _direct_left_sum(plus, ctx.f, 0, -1)
            right_minus = _direct_right_sum(minus, ctx.g, -1, 0)
            left_minus = _direct_left_sum(minus, ctx.f, -1, 0)
            worst_forms = max(worst_forms,
                              _max_abs(right_plus - left_plus),
                              _max_abs(right_minus - left_minus),
                              _max_abs(right_plus - fplus),
                              _max_abs(right_minus - fminus))
            worst_sum = max(worst_sum, _max_abs(fplus + fminus - full))

            back = inverse_direct(variant, forward_direct(variant, h))
            worst_trip = max(worst_trip, _max_abs(back.data - h.data))
    return [
        CheckResult("phase-angle/axis-constancy", worst_const, 1e-10),
        CheckResult("phase-angle/part-forms", worst_forms, 1e-10),
        CheckResult("phase-angle/part-sum", worst_sum, 1e-10),
        CheckResult("phase-angle/roundtrip-defect", worst_trip, 1e-10, gated=False),
    ]


def check_coefficients(rng, samples=200) -> List[CheckResult]:
    """Worked i, j coordinates are exact; reconstruct inverts coefficients."""
    ctx_ij = make_context(QI, QJ)
    exact = True
    for _ in range(samples):
        q = random_quaternion(rng)
        q1, q2, q3, q4 = coefficients(ctx_ij, q)
        exact = exact and (q1 == 0.5 * (q.w + q.z) and q2 == 0.5 * (q.x - q.y)
                           and q3 == 0.5 * (q.w - q.z) and q4 == 0.5 * (q.x + q.y))
    results = [CheckResult("coefficients/worked-example",
                           0.0 if exact else 1.0, 0.0)]

    worst = 0.0
    for _ in range(samples):
        ctx = make_context(random_pure_unit(rng), random_pure_unit(rng))
        if ctx.degenerate:
            continue
        q = random_quaternion(rng)
        r = reconstruct(ctx, *coefficients(ctx, q))
        worst = max(worst, norm(r - q))
    results.append(CheckResult("coefficients/reconstruct", worst, 1e-12))
    return results


def check_simplex_perplex(rng, samples=200) -> CheckResult:
    """g = f = i reproduces the simplex/perplex split exactly."""
    ctx = make_context(QI, QI)
    exact = True
    for _ in range(samples):
        q = random_quaternion(rng)
        parts = split(ctx, q)
        exact = exact and parts.plus == Quaternion(0.0, 0.0, q.y, q.z)
        exact = exact and parts.minus == Quaternion(q.w, q.x, 0.0, 0.0)
    return CheckResult("split/simplex-perplex", 0.0 if exact else 1.0, 0.0)


def check_energy(rng, n1=16, n2=16, n_contexts=5, n_fields=3) -> CheckResult:
    """Two-sided spectral energy equals grid energy after 1/(N1 N2)."""
    worst = 0.0
    for _ in range(n_contexts):
        ctx = make_context(random_pure_unit(rng), random_pure_unit(rng))
        variant = TransformVariant(Family.TWO_SIDED, ctx)
        for _ in range(n_fields):
            h = random_field(rng, n1, n2)
            spectrum = forward_fast(variant, h)
            e_spatial = float(np.sum(h.data * h.data))
            e_spectral = float(np.sum(spectrum.data * spectrum.data)) / (n1 * n2)
            worst = max(worst, abs(e_spatial - e_spectral) / e_spatial)
    return CheckResult("energy/twosided", worst, 1e-9)


# ---------------------------------------------------------------------------
# Aggregate runner.

QUICK = dict(sizes=((1, 1), (2, 3), (4, 4), (8, 8)), n_contexts=8, n_fields=2,
             pointwise=300, frames=40)
FULL = dict(sizes=DEFAULT_SIZES, n_contexts=20, n_fields=5,
            pointwise=1000, frames=100)


def run_all(seed: int, profile: str = "quick") -> List[CheckResult]:
    cfg = QUICK if profile == "quick" else FULL
    rng = np.random.default_rng(seed)
    results: List[CheckResult] = []
    results += check_roundtrips(rng, cfg["sizes"], cfg["n_contexts"], cfg["n_fields"])
    results += check_oracle_equivalence(rng, cfg["sizes"], cfg["n_contexts"],
                                        cfg["n_fields"])
    results.append(check_mixed_plane_products(rng, cfg["pointwise"]))
    results += check_plane_determination(rng, cfg["frames"])
    results.append(check_phase_factor_commutation(rng, cfg["pointwise"]))
    results += check_split_part_forms(rng)
    results += check_phase_angle_structure(rng)
    results += check_coefficients(rng)
    results.append(check_simplex_perplex(rng))
    results.append(check_energy(rng))
    return results
