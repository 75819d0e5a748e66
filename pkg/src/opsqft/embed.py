"""Identification of one split plane with the complex numbers.

Each plane of a split context is closed under right multiplication by
the context's imaginary unit e (g in the generic case, f when the pair
is degenerate).  Choosing a unit anchor u in the plane, every plane
element decomposes uniquely as v = u (x + y e); the map v -> x + iy is
a linear isometry onto C under which right multiplication by exp(e t)
becomes multiplication by exp(it).  That intertwining is what lets the
quaternion transforms run on standard complex FFTs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .quat import Quaternion, mul
from .split import OpsContext


class NotInPlane(ValueError):
    """A sample's residual off the target plane exceeded the gate."""


RESIDUAL_GATE = 1e-8


class Plane(Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class PlaneEmbedding:
    """Anchor and imaginary unit realizing one plane as C."""

    plane: Plane
    anchor: Quaternion
    imaginary_unit: Quaternion


def plane_embedding(ctx: OpsContext, plane: Plane) -> PlaneEmbedding:
    anchor = ctx.anchor_plus if plane is Plane.PLUS else ctx.anchor_minus
    return PlaneEmbedding(plane, anchor, ctx.imaginary_unit)


def _frame_vectors(ctx: OpsContext, plane: Plane):
    """The orthonormal pair (u, u*e) of the plane, as length-4 arrays."""
    emb = plane_embedding(ctx, plane)
    u = emb.anchor.to_array()
    ue = mul(emb.anchor, emb.imaginary_unit).to_array()
    return u, ue


def embed(ctx: OpsContext, data, plane: Plane) -> np.ndarray:
    """Map in-plane quaternion samples to complex numbers x + iy.

    ``data`` is a (..., 4) array (or anything with a ``data`` attribute
    holding one).  Coordinates are x = <v, u>, y = <v, u e>.  Samples
    are expected in the plane already; a residual above 1e-8 raises
    NotInPlane since that signals a caller error, not roundoff.
    """
    arr = np.asarray(getattr(data, "data", data), dtype=np.float64)
    u, ue = _frame_vectors(ctx, plane)
    x = arr @ u
    y = arr @ ue
    recon = np.multiply.outer(x, u) + np.multiply.outer(y, ue)
    resid = float(np.max(np.abs(arr - recon))) if arr.size else 0.0
    if resid > RESIDUAL_GATE:
        raise NotInPlane(f"sample lies off the {plane.value} plane by {resid:.3e}")
    return x + 1j * y


def unembed(ctx: OpsContext, cdata: np.ndarray, plane: Plane) -> np.ndarray:
    """Inverse of ``embed``: x + iy -> u (x + y e), as a (..., 4) array."""
    cdata = np.asarray(cdata)
    u, ue = _frame_vectors(ctx, plane)
    return np.multiply.outer(cdata.real, u) + np.multiply.outer(cdata.imag, ue)
