"""The two-axis plane split of quaternion space.

Any pair of pure unit axes (f, g) decomposes a quaternion q into
q = q_plus + q_minus, where the map q -> f q g fixes q_plus and
flips q_minus.  The two pieces live in orthogonal 2D planes.

Run:  python3 demos/02_planes_and_halfturn.py
"""

import numpy as np

from opsqft import (
    ONE,
    QI,
    QJ,
    QK,
    PlaneAssignment,
    PureUnitQuaternion,
    Quaternion,
    coefficients,
    conj,
    determine_context,
    half_turn,
    inner,
    make_context,
    mul,
    norm,
    reconstruct,
    scalar_part,
    split,
)

rng = np.random.default_rng(23)

f = PureUnitQuaternion(*rng.standard_normal(3))
g = PureUnitQuaternion(*rng.standard_normal(3))
ctx = make_context(f, g)
q = Quaternion(*rng.standard_normal(4))
parts = split(ctx, q)

print("axes f =", ctx.f)
print("     g =", ctx.g)
print("q       =", q)
print("q_plus  =", parts.plus)
print("q_minus =", parts.minus)
print("sum residual:", norm(parts.plus + parts.minus - q))

print("\nhalf-turn f q g fixes one part and negates the other:")
print("  f q+ g - q+ :", norm(half_turn(ctx, parts.plus) - parts.plus))
print("  f q- g + q- :", norm(half_turn(ctx, parts.minus) + parts.minus))

r = split(ctx, Quaternion(*rng.standard_normal(4)))
print("\nthe planes are orthogonal (mixed scalar products vanish):")
print("  Sc(q+ conj(r-)) =", scalar_part(mul(parts.plus, conj(r.minus))))
print("  <q-, r+>        =", inner(parts.minus, r.plus))

print("\neach plane has a 2-vector basis:")
print("  plus :", ctx.basis_plus)
print("  minus:", ctx.basis_minus)
q1, q2, q3, q4 = coefficients(ctx, q)
print("coordinates of q in that 4-basis:", (q1, q2, q3, q4))
print("reconstruction residual:", norm(reconstruct(ctx, q1, q2, q3, q4) - q))

# the f = g special case splits off a genuine complex subfield
print("\n== equal axes ==")
ctx_ii = make_context(QI, QI)
qq = Quaternion(1.0, 2.0, 3.0, 4.0)
pp = split(ctx_ii, qq)
print("f = g = i on", qq)
print("  minus part (w, x plane, a copy of the complex numbers):", pp.minus)
print("  plus part  (y, z plane):", pp.plus)

# axes can also be derived from a frame you want plane-aligned
print("\n== deriving axes from an orthonormal frame ==")
ctx_h = determine_context(QI, QJ, QK, ONE, PlaneAssignment.AB_TO_MINUS)
print("frame (i, j, k, 1), i and j assigned to the minus plane:")
print("  f =", ctx_h.f)
print("  g =", ctx_h.g)
print("  degenerate:", ctx_h.degenerate, " sign:", ctx_h.degenerate_sign)
print("  i lands in minus:", norm(split(ctx_h, QI).plus) == 0.0)
print("  k lands in plus :", norm(split(ctx_h, QK).minus) == 0.0)
