"""Reading and writing grayscale PGM images (P2 ASCII and P5 binary)."""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParseError
from .fuzzysets import FuzzySet
from .lattice import GridSpec

__all__ = ["ImageDocument", "parse_pgm", "read_pgm", "format_pgm", "write_pgm", "image_to_fuzzy", "fuzzy_to_pixels"]

_WHITESPACE = b" \t\n\r\v\f"


@dataclass(frozen=True, eq=False)
class ImageDocument:
    width: int
    height: int
    maxval: int
    pixels: np.ndarray  # shape (height, width)

    def __post_init__(self):
        if self.pixels.shape != (self.height, self.width):
            raise DomainError(f"pixel array shape {self.pixels.shape} != ({self.height}, {self.width})")
        if not 0 < self.maxval <= 65535:
            raise DomainError(f"maxval must be in 1..65535, got {self.maxval}")
        if self.pixels.size and (self.pixels.min() < 0 or self.pixels.max() > self.maxval):
            raise DomainError("pixel value exceeds maxval")

    def __eq__(self, other):
        if not isinstance(other, ImageDocument):
            return NotImplemented
        return (self.width, self.height, self.maxval) == (other.width, other.height, other.maxval) and \
            np.array_equal(self.pixels, other.pixels)


class _Tokens:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def skip(self):
        data = self.data
        while self.pos < len(data):
            c = data[self.pos:self.pos + 1]
            if c == b"#":
                end = data.find(b"\n", self.pos)
                self.pos = len(data) if end < 0 else end + 1
            elif c in _WHITESPACE:
                self.pos += 1
            else:
                break

    def next(self, what: str) -> tuple[bytes, int]:
        self.skip()
        start = self.pos
        data = self.data
        while self.pos < len(data) and data[self.pos:self.pos + 1] not in _WHITESPACE \
                and data[self.pos:self.pos + 1] != b"#":
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"unexpected end of file while reading {what}", start)
        return data[start:self.pos], start

    def integer(self, what: str) -> tuple[int, int]:
        """Next token as a non-negative integer, with its byte offset."""
        tok, at = self.next(what)
        if not tok.isdigit():
            raise ParseError(f"expected {what}, got {tok[:16]!r}", at)
        return int(tok), at


def parse_pgm(data: bytes) -> ImageDocument:
    tokens = _Tokens(data)
    magic, at = tokens.next("magic number")
    if magic not in (b"P2", b"P5"):
        raise ParseError(f"unsupported format {magic[:8]!r}; only grayscale P2/P5 is read", at)
    width, _ = tokens.integer("width")
    height, height_at = tokens.integer("height")
    maxval, maxval_at = tokens.integer("maxval")
    if width == 0 or height == 0:
        raise ParseError("image has zero width or height", height_at)
    if not 0 < maxval <= 65535:
        raise ParseError(f"maxval must be in 1..65535, got {maxval}", maxval_at)
    count = width * height

    if magic == b"P2":
        values = []
        for _ in range(count):
            v, at = tokens.integer("pixel value")
            if v > maxval:
                raise ParseError(f"pixel value {v} exceeds maxval {maxval}", at)
            values.append(v)
        pixels = np.array(values, dtype=np.int64)
    else:
        # exactly one whitespace byte separates the header from the raster
        if tokens.pos >= len(data) or data[tokens.pos:tokens.pos + 1] not in _WHITESPACE:
            raise ParseError("missing whitespace after maxval", tokens.pos)
        start = tokens.pos + 1
        dtype = np.dtype(">u1") if maxval < 256 else np.dtype(">u2")
        need = count * dtype.itemsize
        if len(data) - start < need:
            raise ParseError(f"truncated raster: need {need} bytes, have {len(data) - start}", len(data))
        pixels = np.frombuffer(data, dtype=dtype, count=count, offset=start).astype(np.int64)
        if pixels.max() > maxval:
            bad = int(np.argmax(pixels > maxval))
            raise ParseError(f"pixel value exceeds maxval {maxval}", start + bad * dtype.itemsize)
    return ImageDocument(width, height, maxval, pixels.reshape(height, width))


def read_pgm(path: str | os.PathLike) -> ImageDocument:
    with open(path, "rb") as f:
        return parse_pgm(f.read())


def format_pgm(pixels: np.ndarray, maxval: int = 255) -> str:
    """P2 text, one image row per line."""
    pixels = np.asarray(pixels)
    h, w = pixels.shape
    lines = ["P2", f"{w} {h}", str(maxval)]
    lines += [" ".join(str(int(v)) for v in row) for row in pixels]
    return "\n".join(lines) + "\n"


def write_pgm(path: str | os.PathLike, pixels: np.ndarray, maxval: int = 255) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(format_pgm(pixels, maxval))


def image_to_fuzzy(img: ImageDocument, invert: bool = False, size: int | None = None) -> FuzzySet:
    """Adequacy ``pixel / maxval`` (or ``1 - pixel / maxval`` with ``invert``).

    Non-square images are refused unless ``size`` is given, in which case the
    adequacy array is zero-padded at the bottom and right to ``size x size``.
    """
    values = img.pixels / img.maxval
    if invert:
        values = 1.0 - values
    if size is None:
        if img.width != img.height:
            raise DomainError(f"image is {img.width}x{img.height}, not square (use padding)")
        size = img.width
    if size < max(img.width, img.height):
        raise DomainError(f"cannot pad a {img.width}x{img.height} image to {size}x{size}")
    padded = np.zeros((size, size))
    padded[:img.height, :img.width] = values
    return FuzzySet(padded, GridSpec(size))


def fuzzy_to_pixels(a: FuzzySet, maxval: int = 255) -> np.ndarray:
    return np.rint(a.as_grid() * maxval).astype(np.int64)
