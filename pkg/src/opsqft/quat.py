"""Quaternion algebra over double-precision reals.

Scalar values are ``Quaternion`` instances (components w, x, y, z for the
scalar part and the i, j, k parts).  Bulk data lives in numpy arrays of
shape (..., 4) with the same component order; the ``*_arr`` functions
operate on those.

>>> mul(Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0))
Quaternion(w=0.0, x=0.0, y=0.0, z=1.0)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class ZeroQuaternion(ZeroDivisionError):
    """Inverse of the zero quaternion was requested."""


@dataclass(frozen=True)
class Quaternion:
    """One element of the quaternion algebra, w + x*i + y*j + z*k."""

    w: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"non-finite component {name}={v!r}")
            object.__setattr__(self, name, v)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        return Quaternion(self.w * other, self.x * other,
                          self.y * other, self.z * other)

    def __rmul__(self, other) -> "Quaternion":
        return Quaternion(other * self.w, other * self.x,
                          other * self.y, other * self.z)

    def to_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=np.float64)

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        w, x, y, z = (float(c) for c in a)
        return cls(w, x, y, z)


class PureUnitQuaternion(Quaternion):
    """A quaternion with zero scalar part and unit length, e.g. an axis.

    Construction takes the three vector components, normalizes them, and
    pins the scalar part to exactly zero.  Directions shorter than 1e-9
    are rejected as undefined.

    >>> PureUnitQuaternion(0.0, 0.0, 2.0)
    PureUnitQuaternion(w=0.0, x=0.0, y=0.0, z=1.0)
    """

    def __init__(self, x: float, y: float, z: float):
        x, y, z = float(x), float(y), float(z)
        m = math.sqrt(x * x + y * y + z * z)
        if not math.isfinite(m) or m < 1e-9:
            raise ValueError(f"axis direction undefined: ({x}, {y}, {z})")
        object.__setattr__(self, "w", 0.0)
        object.__setattr__(self, "x", x / m)
        object.__setattr__(self, "y", y / m)
        object.__setattr__(self, "z", z / m)

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> "PureUnitQuaternion":
        """Reinterpret ``q`` as an axis; scalar parts above 1e-12 are rejected."""
        if abs(q.w) > 1e-12:
            raise ValueError(f"not a pure quaternion: scalar part {q.w!r}")
        return cls(q.x, q.y, q.z)


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
QI = Quaternion(0.0, 1.0, 0.0, 0.0)
QJ = Quaternion(0.0, 0.0, 1.0, 0.0)
QK = Quaternion(0.0, 0.0, 0.0, 1.0)
ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product, via ij = k, jk = i, ki = j and anticommutation.

    >>> mul(QJ, QI)
    Quaternion(w=0.0, x=0.0, y=0.0, z=-1.0)
    """
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def conj(q: Quaternion) -> Quaternion:
    """Quaternion conjugate: negates the i, j, k parts.

    Anti-automorphism: conj(p*q) == conj(q)*conj(p).
    """
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def norm(q: Quaternion) -> float:
    """Euclidean length sqrt(w^2+x^2+y^2+z^2); multiplicative over mul."""
    return math.sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z)


def scalar_part(q: Quaternion) -> float:
    """The w component.  Sc(pq) == Sc(qp) for all p, q."""
    return q.w


def inner(p: Quaternion, q: Quaternion) -> float:
    """R^4 inner product Sc(p*conj(q)) = componentwise dot product.

    >>> inner(Quaternion(1, 2, 0, 0), Quaternion(3, 4, 0, 0))
    11.0
    """
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z


def inverse(q: Quaternion) -> Quaternion:
    """conj(q) / norm(q)^2.  Raises ZeroQuaternion on zero input."""
    n2 = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z
    if n2 == 0.0:
        raise ZeroQuaternion("zero quaternion has no inverse")
    return Quaternion(q.w / n2, -q.x / n2, -q.y / n2, -q.z / n2)


def exp_pure(f: Quaternion, angle: float) -> Quaternion:
    """cos(angle) + sin(angle)*f for a pure unit axis f; a unit quaternion.

    >>> exp_pure(QI, 0.0)
    Quaternion(w=1.0, x=0.0, y=0.0, z=0.0)
    """
    c, s = math.cos(angle), math.sin(angle)
    return Quaternion(c, s * f.x, s * f.y, s * f.z)


# ---------------------------------------------------------------------------
# Vectorized forms on (..., 4) float arrays, component order (w, x, y, z).

def mul_arr(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product of two (..., 4) arrays."""
    pw, px, py, pz = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    qw, qx, qy, qz = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack([
        pw * qw - px * qx - py * qy - pz * qz,
        pw * qx + px * qw + py * qz - pz * qy,
        pw * qy - px * qz + py * qw + pz * qx,
        pw * qz + px * qy - py * qx + pz * qw,
    ], axis=-1)


_CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])


def conj_arr(q: np.ndarray) -> np.ndarray:
    return q * _CONJ_SIGNS


def norm_arr(q: np.ndarray) -> np.ndarray:
    """Per-sample Euclidean length; shape (...,)."""
    return np.sqrt(np.sum(q * q, axis=-1))


def dot_arr(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Per-sample R^4 inner product; shape (...,)."""
    return np.sum(p * q, axis=-1)


def exp_arr(f: Quaternion, angles: np.ndarray) -> np.ndarray:
    """exp_pure over an array of angles; output shape angles.shape + (4,)."""
    angles = np.asarray(angles, dtype=np.float64)
    c = np.cos(angles)
    s = np.sin(angles)
    return np.stack([c, s * f.x, s * f.y, s * f.z], axis=-1)
