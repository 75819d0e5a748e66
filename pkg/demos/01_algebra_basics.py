"""Quaternion arithmetic as used by the rest of the package.

Run:  python3 demos/01_algebra_basics.py
"""

import numpy as np

from opsqft import (
    ONE,
    QI,
    QJ,
    QK,
    PureUnitQuaternion,
    Quaternion,
    conj,
    exp_pure,
    inner,
    inverse,
    mul,
    norm,
    scalar_part,
)

rng = np.random.default_rng(11)

print("== products of the unit axes ==")
print("i*j =", mul(QI, QJ))
print("j*i =", mul(QJ, QI))
print("i*i =", mul(QI, QI))

p = Quaternion(*rng.standard_normal(4))
q = Quaternion(*rng.standard_normal(4))
print("\n== two random quaternions ==")
print("p =", p)
print("q =", q)
print("p*q =", mul(p, q))
print("q*p =", mul(q, p))
print("products differ, their scalar parts do not:",
      scalar_part(mul(p, q)) == scalar_part(mul(q, p)))

print("\n== conjugate, norm, inverse ==")
print("conj(p*q) - conj(q)*conj(p) has norm",
      norm(conj(mul(p, q)) - mul(conj(q), conj(p))))
print("norm(p*q) - norm(p)*norm(q) =", norm(mul(p, q)) - norm(p) * norm(q))
print("p * inverse(p) =", mul(p, inverse(p)))

print("\n== the 4D inner product ==")
print("<p, q> =", inner(p, q))
print("Sc(p conj(q)) =", scalar_part(mul(p, conj(q))))

# any pure unit squares to -1, so exp of its multiples is a circle
f = PureUnitQuaternion(*rng.standard_normal(3))
print("\n== exponentials of a pure unit axis ==")
print("f =", f)
print("f*f =", mul(f, f))
a, b = 0.7, 1.1
print("exp(0.7 f) =", exp_pure(f, a))
print("exp(0.7 f) exp(1.1 f) - exp(1.8 f) has norm",
      norm(mul(exp_pure(f, a), exp_pure(f, b)) - exp_pure(f, a + b)))
print("exp(pi f) =", exp_pure(f, np.pi), " (a half turn: -1 up to rounding)")

# exponentials with DIFFERENT axes do not commute; that is why the
# transforms later keep one exponential on each side of the sample
g = PureUnitQuaternion(*rng.standard_normal(3))
lhs = mul(exp_pure(f, a), exp_pure(g, b))
rhs = mul(exp_pure(g, b), exp_pure(f, a))
print("\n== different axes do not commute ==")
print("norm of exp(a f) exp(b g) - exp(b g) exp(a f) =", norm(lhs - rhs))
