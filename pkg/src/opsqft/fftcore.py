"""Complex 2D DFT with an independently chosen exponent sign per axis.

The transforms here use the convention
F[k] = sum_m x[m] * exp(i * (s1 * 2 pi m1 k1 / N1 + s2 * 2 pi m2 k2 / N2))
so s1 = s2 = -1 reproduces the usual forward DFT.  Mixed signs are
needed because the split transform kernels rotate the two planes in
opposite directions.

``fft2`` runs an iterative radix-2 decimation-in-time pass per axis for
power-of-two lengths and falls back to a dense kernel-matrix product
otherwise.  ``dft2_direct`` is the quadratic-cost reference evaluator.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

TAU = 2.0 * np.pi


class AxisSigns(NamedTuple):
    s1: int
    s2: int


def _check_sign(s: int) -> int:
    if s not in (-1, 1):
        raise ValueError(f"axis sign must be +1 or -1, got {s!r}")
    return s


def bit_reverse_indices(n: int) -> np.ndarray:
    """Permutation sending index k to its bit-reversed value; n a power of 2."""
    bits = n.bit_length() - 1
    idx = np.zeros(n, dtype=np.intp)
    for k in range(n):
        r = 0
        v = k
        for _ in range(bits):
            r = (r << 1) | (v & 1)
            v >>= 1
        idx[k] = r
    return idx


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def _fft_pow2_last(x: np.ndarray, sign: int) -> np.ndarray:
    """Radix-2 DIT along the last axis; length must be a power of two."""
    n = x.shape[-1]
    if n == 1:
        return x.copy()
    x = x[..., bit_reverse_indices(n)]
    span = 2
    while span <= n:
        half = span // 2
        # stage twiddles from the angle, recomputed per stage
        w = np.exp(sign * 1j * TAU * np.arange(half) / span)
        blocks = x.reshape(x.shape[:-1] + (n // span, span))
        top = blocks[..., :half]
        bot = blocks[..., half:] * w
        upper = top + bot
        lower = top - bot
        blocks[..., :half] = upper
        blocks[..., half:] = lower
        span *= 2
    return x


def _dft_dense_last(x: np.ndarray, sign: int) -> np.ndarray:
    """Dense kernel-matrix transform along the last axis, any length."""
    n = x.shape[-1]
    m = np.arange(n)
    kernel = np.exp(sign * 1j * TAU * np.outer(m, m) / n)
    return x @ kernel


def fft1(x: np.ndarray, sign: int, axis: int = -1) -> np.ndarray:
    """Signed 1D transform of a complex array along ``axis``."""
    _check_sign(sign)
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[axis]
    moved = np.moveaxis(x, axis, -1)
    if _is_pow2(n):
        out = _fft_pow2_last(np.ascontiguousarray(moved), sign)
    else:
        out = _dft_dense_last(moved, sign)
    return np.moveaxis(out, -1, axis)


def fft2(field: np.ndarray, signs: AxisSigns) -> np.ndarray:
    """Signed 2D transform: axis 0 with signs.s1, then axis 1 with signs.s2."""
    out = fft1(field, signs.s1, axis=0)
    return fft1(out, signs.s2, axis=1)


def dft2_direct(field: np.ndarray, signs: AxisSigns) -> np.ndarray:
    """Literal double-sum reference for ``fft2``; cost (N1 N2)^2."""
    _check_sign(signs.s1)
    _check_sign(signs.s2)
    field = np.asarray(field, dtype=np.complex128)
    n1, n2 = field.shape
    m1 = np.arange(n1)[:, None]
    m2 = np.arange(n2)[None, :]
    out = np.empty((n1, n2), dtype=np.complex128)
    for k1 in range(n1):
        for k2 in range(n2):
            phase = signs.s1 * TAU * m1 * k1 / n1 + signs.s2 * TAU * m2 * k2 / n2
            out[k1, k2] = np.sum(field * np.exp(1j * phase))
    return out
