"""Orthogonal planes split of the quaternion algebra.

Two pure unit quaternions f, g decompose every quaternion as
q = q_plus + q_minus with q_pm = (q +- f q g) / 2.  The two parts live
in two mutually orthogonal 2D planes of R^4: the plus plane is spanned
by (1 + fg, f - g), the minus plane by (1 - fg, f + g).  The two-sided
map q -> f q g fixes the plus plane and negates the minus plane (a
half-turn of one plane about the other).

The pair g = +-f is accepted and flagged degenerate: for g = f the
minus plane is the complex subfield spanned by (1, f) and the plus
plane is its orthogonal complement; for g = -f the roles swap.

An ``OpsContext`` carries the pair plus the derived plane bases, unit
anchors, and the orientation data the complex embedding needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Tuple

import numpy as np

from .quat import (
    ONE,
    PureUnitQuaternion,
    Quaternion,
    conj,
    exp_pure,
    inner,
    inverse,
    mul,
    mul_arr,
    norm,
    scalar_part,
)

DEGENERACY_TOL = 1e-12
FRAME_TOL = 1e-9


class DegenerateContext(ValueError):
    """Operation undefined when g = +-f (a basis element vanishes)."""


class InvalidFrame(ValueError):
    """Plane-determination input frame fails orthonormality checks."""


class PlaneAssignment(Enum):
    AB_TO_MINUS = "minus"
    AB_TO_PLUS = "plus"


class SplitParts(NamedTuple):
    plus: Quaternion
    minus: Quaternion


@dataclass(frozen=True)
class OpsContext:
    """The pair (f, g) with its derived split geometry.

    degenerate_sign is 0 for a generic pair, +1 when g = f, -1 when
    g = -f.  imaginary_unit is the pure unit whose right action rotates
    within each plane (g, or f in the degenerate cases); orientation is
    +1 when that action equals right multiplication by g and -1 when it
    equals right multiplication by -g (the g = -f case).
    """

    f: Quaternion
    g: Quaternion
    degenerate: bool
    degenerate_sign: int
    basis_plus: Tuple[Quaternion, Quaternion]
    basis_minus: Tuple[Quaternion, Quaternion]
    anchor_plus: Quaternion
    anchor_minus: Quaternion
    imaginary_unit: Quaternion
    orientation: int


def _as_pure_unit(q: Quaternion, name: str) -> Quaternion:
    if isinstance(q, PureUnitQuaternion):
        return q
    try:
        return PureUnitQuaternion.from_quaternion(q)
    except ValueError as e:
        raise ValueError(f"{name}: {e}") from None


def _orthogonal_axis(f: Quaternion) -> Quaternion:
    """Deterministic pure unit orthogonal to f.

    Takes the first of i, j, k whose projection orthogonal to f keeps
    magnitude >= 0.5, then normalizes.  At most one axis can fail the
    test, so the scan always succeeds.
    """
    fv = np.array([f.x, f.y, f.z])
    for basis in np.eye(3):
        proj = basis - np.dot(basis, fv) * fv
        m = math.sqrt(float(np.dot(proj, proj)))
        if m >= 0.5:
            return PureUnitQuaternion(proj[0], proj[1], proj[2])
    raise AssertionError("unreachable: two coordinate axes always qualify")


def _unit(q: Quaternion) -> Quaternion:
    return q * (1.0 / norm(q))


def make_context(f: Quaternion, g: Quaternion) -> OpsContext:
    """Build the split context for pure unit quaternions f and g."""
    f = _as_pure_unit(f, "f")
    g = _as_pure_unit(g, "g")

    same = max(abs(g.x - f.x), abs(g.y - f.y), abs(g.z - f.z)) <= DEGENERACY_TOL
    opposite = max(abs(g.x + f.x), abs(g.y + f.y), abs(g.z + f.z)) <= DEGENERACY_TOL

    if same or opposite:
        p = _orthogonal_axis(f)
        fp = mul(f, p)
        if same:
            basis_minus = (ONE, f)
            basis_plus = (p, fp)
            anchor_minus, anchor_plus = ONE, p
            sign = 1
        else:
            basis_plus = (ONE, f)
            basis_minus = (p, fp)
            anchor_plus, anchor_minus = ONE, p
            sign = -1
        return OpsContext(
            f=f, g=g, degenerate=True, degenerate_sign=sign,
            basis_plus=basis_plus, basis_minus=basis_minus,
            anchor_plus=anchor_plus, anchor_minus=anchor_minus,
            imaginary_unit=f, orientation=sign,
        )

    fg = mul(f, g)
    basis_plus = (ONE + fg, f - g)
    basis_minus = (ONE - fg, f + g)
    return OpsContext(
        f=f, g=g, degenerate=False, degenerate_sign=0,
        basis_plus=basis_plus, basis_minus=basis_minus,
        anchor_plus=_unit(basis_plus[0]), anchor_minus=_unit(basis_minus[0]),
        imaginary_unit=g, orientation=1,
    )


def swapped_context(ctx: OpsContext) -> OpsContext:
    """The context of the reversed pair (g, f).

    Conjugation maps each plane of the (f, g) split onto the same-signed
    plane of the (g, f) split, which is what the conjugation transform
    family operates in.
    """
    return make_context(ctx.g, ctx.f)


def split(ctx: OpsContext, q: Quaternion) -> SplitParts:
    """q_pm = (q +- f q g) / 2; plus + minus restores q."""
    h = mul(mul(ctx.f, q), ctx.g)
    return SplitParts(0.5 * (q + h), 0.5 * (q - h))


def split_arr(ctx: OpsContext, data: np.ndarray):
    """Vectorized split of a (..., 4) array; returns (plus, minus)."""
    f4 = ctx.f.to_array()
    g4 = ctx.g.to_array()
    h = mul_arr(mul_arr(f4, data), g4)
    return 0.5 * (data + h), 0.5 * (data - h)


def half_turn(ctx: OpsContext, q: Quaternion) -> Quaternion:
    """f q g: fixes the plus plane, negates the minus plane; an involution."""
    return mul(mul(ctx.f, q), ctx.g)


def coefficients(ctx: OpsContext, q: Quaternion):
    """Coordinates (q1, q2, q3, q4) of q in the split basis.

    q = q1 (1+fg) + q2 (f-g) + q3 (1-fg) + q4 (f+g), each coordinate
    obtained as the scalar part of q times the inverse basis element.
    Undefined for degenerate contexts, where 1+fg or 1-fg vanishes.
    """
    if ctx.degenerate:
        raise DegenerateContext("coefficients need g != +-f")
    q1 = scalar_part(mul(q, inverse(ctx.basis_plus[0])))
    q2 = scalar_part(mul(q, inverse(ctx.basis_plus[1])))
    q3 = scalar_part(mul(q, inverse(ctx.basis_minus[0])))
    q4 = scalar_part(mul(q, inverse(ctx.basis_minus[1])))
    return q1, q2, q3, q4


def reconstruct(ctx: OpsContext, q1: float, q2: float, q3: float, q4: float) -> Quaternion:
    """Inverse of ``coefficients``: assemble q from its four coordinates."""
    if ctx.degenerate:
        raise DegenerateContext("reconstruct needs g != +-f")
    return (q1 * ctx.basis_plus[0] + q2 * ctx.basis_plus[1]
            + q3 * ctx.basis_minus[0] + q4 * ctx.basis_minus[1])


def rotate_split(ctx: OpsContext, q: Quaternion, alpha: float, beta: float) -> Quaternion:
    """Two-sided phase action exp(alpha f) * q * exp(beta g).

    On the split parts it reduces to single-sided rotations:
    exp(alpha f) q_pm exp(beta g) = q_pm exp((beta -+ alpha) g)
    = exp((alpha -+ beta) f) q_pm.
    """
    return mul(mul(exp_pure(ctx.f, alpha), q), exp_pure(ctx.g, beta))


def _check_frame(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> None:
    named = [("a", a), ("b", b), ("c", c), ("d", d)]
    for name, q in named:
        if abs(norm(q) - 1.0) > FRAME_TOL:
            raise InvalidFrame(f"{name} is not unit: |{name}| = {norm(q)!r}")
    for i in range(4):
        for k in range(i + 1, 4):
            ni, qi = named[i]
            nk, qk = named[k]
            ip = inner(qi, qk)
            if abs(ip) > FRAME_TOL:
                raise InvalidFrame(f"{ni} and {nk} not orthogonal: inner = {ip!r}")
    for name, q in (("a", a), ("c", c)):
        if abs(scalar_part(q)) > FRAME_TOL:
            raise InvalidFrame(f"{name} is not pure: scalar part {q.w!r}")


def determine_context(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion,
                      assignment: PlaneAssignment) -> OpsContext:
    """Solve for (f, g) so that prescribed planes become the split planes.

    The span of {a, b} becomes the minus plane (AB_TO_MINUS) or the plus
    plane (AB_TO_PLUS); {c, d} spans the complementary plane.  Inputs
    must form an orthonormal 4-frame with a and c pure; the result may
    legitimately be degenerate (g = +-f) and is flagged, not rejected.

    f is the product b*a; g is the signed projection of f onto the
    span of a and c.  Residual scalar parts inside the frame tolerance
    are dropped before normalization.
    """
    if not isinstance(assignment, PlaneAssignment):
        raise ValueError(f"bad plane assignment: {assignment!r}")
    _check_frame(a, b, c, d)
    f_raw = mul(b, a)
    f = PureUnitQuaternion(f_raw.x, f_raw.y, f_raw.z)
    sa = scalar_part(mul(f, conj(a)))
    sc = scalar_part(mul(f, conj(c)))
    g_raw = sa * a - sc * c
    if assignment is PlaneAssignment.AB_TO_PLUS:
        g_raw = -g_raw
    g = PureUnitQuaternion(g_raw.x, g_raw.y, g_raw.z)
    return make_context(f, g)
