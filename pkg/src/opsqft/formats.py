"""File formats: QF2D quaternion grids, PPM ingestion, PGM export.

QF2D layout (little-endian):

    bytes 0..3    magic "QF2D"
    bytes 4..7    version, unsigned 32-bit, currently 1
    bytes 8..15   n1 then n2, unsigned 32-bit each
    bytes 16..    n1*n2 records of four float64 (w, x, y, z), row-major

Color images come in as portable pixmaps (P3 or P6, maxval 255); each
pixel becomes the pure quaternion (r/255) i + (g/255) j + (b/255) k,
image row y on the first grid index and column x on the second.
Spectra go out as P5 graymaps of per-sample magnitude scaled by the
peak value.
"""

from __future__ import annotations

import struct

import numpy as np

from .fields import Domain, QuaternionField2D
from .quat import norm_arr

MAGIC = b"QF2D"
VERSION = 1
HEADER = struct.Struct("<4sIII")


class FileFormatError(Exception):
    """Base for structural file errors; carries the path and byte offset."""

    def __init__(self, path, offset, message):
        super().__init__(f"{path}: byte {offset}: {message}")
        self.path = str(path)
        self.offset = offset


class BadMagic(FileFormatError):
    pass


class BadVersion(FileFormatError):
    pass


class TruncatedPayload(FileFormatError):
    pass


class MalformedHeader(FileFormatError):
    pass


class UnsupportedFormat(FileFormatError):
    pass


class IoFailure(FileFormatError):
    def __init__(self, path, cause):
        super().__init__(path, 0, f"I/O failure: {cause}")
        self.cause = cause


def write_field(field: QuaternionField2D, path) -> None:
    payload = np.ascontiguousarray(field.data, dtype="<f8").tobytes()
    try:
        with open(path, "wb") as fh:
            fh.write(HEADER.pack(MAGIC, VERSION, field.n1, field.n2))
            fh.write(payload)
    except OSError as e:
        raise IoFailure(path, e) from e


def read_field(path, domain: Domain = Domain.SPATIAL) -> QuaternionField2D:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise IoFailure(path, e) from e
    if len(raw) < HEADER.size:
        raise TruncatedPayload(path, len(raw),
                               f"header needs {HEADER.size} bytes, file has {len(raw)}")
    magic, version, n1, n2 = HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise BadMagic(path, 0, f"magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise BadVersion(path, 4, f"version {version}, expected {VERSION}")
    if n1 < 1 or n2 < 1:
        raise MalformedHeader(path, 8, f"grid {n1}x{n2} is not positive")
    expected = 32 * n1 * n2
    payload = raw[HEADER.size:HEADER.size + expected]
    if len(payload) < expected:
        raise TruncatedPayload(path, HEADER.size + len(payload),
                               f"payload needs {expected} bytes, got {len(payload)}")
    data = np.frombuffer(payload, dtype="<f8").reshape(n1, n2, 4)
    return QuaternionField2D(data.astype(np.float64), domain)


# ---------------------------------------------------------------------------
# Portable pixmaps.

def _tokens(raw: bytes):
    """Yield (offset, token) over whitespace-separated words, '#' to EOL skipped."""
    i = 0
    n = len(raw)
    while i < n:
        c = raw[i:i + 1]
        if c in b" \t\r\n":
            i += 1
        elif c == b"#":
            while i < n and raw[i:i + 1] != b"\n":
                i += 1
        else:
            start = i
            while i < n and raw[i:i + 1] not in b" \t\r\n":
                i += 1
            yield start, raw[start:i]


def read_image_ppm(path) -> QuaternionField2D:
    """Load a P3/P6 pixmap (maxval 255) as a grid of pure quaternions."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise IoFailure(path, e) from e

    toks = _tokens(raw)

    def next_token(what):
        try:
            return next(toks)
        except StopIteration:
            raise MalformedHeader(path, len(raw), f"missing {what}") from None

    off, magic = next_token("magic")
    if magic not in (b"P3", b"P6"):
        raise UnsupportedFormat(path, off, f"magic {magic!r}, expected P3 or P6")
    dims = []
    tok = b""
    for what in ("width", "height", "maxval"):
        off, tok = next_token(what)
        try:
            dims.append(int(tok))
        except ValueError:
            raise MalformedHeader(path, off, f"{what} is not an integer: {tok!r}") from None
    width, height, maxval = dims
    maxval_end = off + len(tok)
    if width < 1 or height < 1:
        raise MalformedHeader(path, 0, f"image {width}x{height} is not positive")
    if maxval != 255:
        raise UnsupportedFormat(path, off, f"maxval {maxval}, only 255 is supported")

    count = width * height * 3
    if magic == b"P6":
        # exactly one whitespace byte separates the header from the pixels
        pix_off = maxval_end + 1
        pixels = raw[pix_off:pix_off + count]
        if len(pixels) < count:
            raise MalformedHeader(path, pix_off + len(pixels),
                                  f"pixel data needs {count} bytes, got {len(pixels)}")
        rgb = np.frombuffer(pixels, dtype=np.uint8).astype(np.float64)
    else:
        values = np.empty(count, dtype=np.float64)
        for idx in range(count):
            off, tok = next_token("pixel value")
            try:
                v = int(tok)
            except ValueError:
                raise MalformedHeader(path, off, f"pixel value is not an integer: {tok!r}") from None
            if not 0 <= v <= maxval:
                raise MalformedHeader(path, off, f"pixel value {v} out of range 0..{maxval}")
            values[idx] = v
        rgb = values

    rgb = rgb.reshape(height, width, 3) / 255.0
    data = np.zeros((height, width, 4))
    data[:, :, 1:] = rgb
    return QuaternionField2D(data, Domain.SPATIAL)


def export_magnitude_pgm(spectrum_or_field, path, centered: bool = False) -> None:
    """Write per-sample quaternion magnitude as a P5 graymap.

    Magnitudes are scaled so the peak maps to 255 (an all-zero grid maps
    to an all-zero image).  ``centered`` rolls sample (0, 0) to the grid
    midpoint (floor(n1/2), floor(n2/2)) for display.
    """
    field = getattr(spectrum_or_field, "field", spectrum_or_field)
    mags = norm_arr(field.data)
    if centered:
        mags = np.roll(mags, (field.n1 // 2, field.n2 // 2), axis=(0, 1))
    peak = float(mags.max())
    if peak > 0.0:
        img = np.rint(mags * (255.0 / peak))
    else:
        img = np.zeros_like(mags)
    img = np.clip(img, 0, 255).astype(np.uint8)
    try:
        with open(path, "wb") as fh:
            fh.write(f"P5\n{field.n2} {field.n1}\n255\n".encode("ascii"))
            fh.write(img.tobytes())
    except OSError as e:
        raise IoFailure(path, e) from e
