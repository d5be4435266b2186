"""Binary PPM (P6, maxval 255) images and disc/square image remapping."""
from __future__ import annotations

from dataclasses import dataclass
from typing import IO

import numpy as np

from .map2d import Direction, Mapping2D, disc_to_square, square_to_disc


class PixmapFormatError(ValueError):
    pass


@dataclass
class Pixmap:
    width: int
    height: int
    pixels: np.ndarray  # (height, width, 3) uint8, row-major

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise PixmapFormatError("image dimensions must be positive")
        self.pixels = np.asarray(self.pixels, dtype=np.uint8)
        if self.pixels.shape != (self.height, self.width, 3):
            raise PixmapFormatError(
                f"pixel buffer has shape {self.pixels.shape}, expected {(self.height, self.width, 3)}")


def _header_tokens(data: bytes):
    """Yield (token, end offset) pairs from a PNM header, skipping comments."""
    i, n = 0, len(data)
    while i < n:
        ch = data[i:i + 1]
        if ch == b"#":
            while i < n and data[i:i + 1] not in (b"\n", b"\r"):
                i += 1
        elif ch.isspace():
            i += 1
        else:
            j = i
            while j < n and not data[j:j + 1].isspace() and data[j:j + 1] != b"#":
                j += 1
            yield data[i:j], j
            i = j


def read_ppm(stream: IO[bytes]) -> Pixmap:
    data = stream.read()
    tokens = _header_tokens(data)
    try:
        magic, _ = next(tokens)
        if magic != b"P6":
            raise PixmapFormatError(f"unsupported magic {magic!r}, expected b'P6'")
        width = int(next(tokens)[0])
        height = int(next(tokens)[0])
        maxval_tok, end = next(tokens)
        maxval = int(maxval_tok)
    except StopIteration:
        raise PixmapFormatError("truncated header") from None
    except ValueError as exc:
        if isinstance(exc, PixmapFormatError):
            raise
        raise PixmapFormatError(f"malformed header: {exc}") from None
    if maxval != 255:
        raise PixmapFormatError(f"only maxval 255 is supported, got {maxval}")
    if width < 1 or height < 1:
        raise PixmapFormatError("image dimensions must be positive")
    start = end + 1  # exactly one whitespace byte separates header and raster
    size = 3 * width * height
    raster = data[start:start + size]
    if len(raster) != size:
        raise PixmapFormatError(f"truncated raster: {len(raster)} of {size} bytes")
    pixels = np.frombuffer(raster, dtype=np.uint8).reshape(height, width, 3)
    return Pixmap(width, height, pixels.copy())


def write_ppm(pix: Pixmap, stream: IO[bytes]) -> None:
    stream.write(b"P6\n%d %d\n255\n" % (pix.width, pix.height))
    stream.write(np.ascontiguousarray(pix.pixels, dtype=np.uint8).tobytes())


def _pixel_centres(width: int, height: int):
    cols = (2.0 * np.arange(width) + 1.0) / width - 1.0
    rows = 1.0 - (2.0 * np.arange(height) + 1.0) / height
    return np.meshgrid(cols, rows)


def _sample(pix: Pixmap, x: np.ndarray, y: np.ndarray, filt: str) -> np.ndarray:
    """Sample ``pix`` at canvas coordinates in [-1, 1]^2 (y up)."""
    fc = (x + 1.0) * pix.width / 2.0 - 0.5
    fr = (1.0 - y) * pix.height / 2.0 - 0.5
    src = pix.pixels
    if filt == "nearest":
        c = np.clip(np.floor(fc + 0.5).astype(np.int64), 0, pix.width - 1)
        r = np.clip(np.floor(fr + 0.5).astype(np.int64), 0, pix.height - 1)
        return src[r, c]
    if filt != "bilinear":
        raise ValueError(f"unknown filter {filt!r}")
    fc = np.clip(fc, 0.0, pix.width - 1.0)
    fr = np.clip(fr, 0.0, pix.height - 1.0)
    c0 = np.floor(fc).astype(np.int64)
    r0 = np.floor(fr).astype(np.int64)
    c1 = np.minimum(c0 + 1, pix.width - 1)
    r1 = np.minimum(r0 + 1, pix.height - 1)
    wc = (fc - c0)[..., None]
    wr = (fr - r0)[..., None]
    img = src.astype(float)
    top = img[r0, c0] * (1.0 - wc) + img[r0, c1] * wc
    bot = img[r1, c0] * (1.0 - wc) + img[r1, c1] * wc
    return np.clip(np.rint(top * (1.0 - wr) + bot * wr), 0, 255).astype(np.uint8)


def remap_image(pix: Pixmap, direction: Direction, mapping: Mapping2D,
                filt: str = "bilinear") -> Pixmap:
    """Resample ``pix`` onto the target domain by pulling through the inverse map.

    square2disc: the output disc is inscribed in the canvas and pixels outside
    it are black.  disc2square: the input disc is the one inscribed in its
    canvas and the output fills the whole square.
    """
    direction = Direction(direction)
    mapping = Mapping2D(mapping)
    if direction is Direction.SQUARE_TO_DISC and pix.width != pix.height:
        raise PixmapFormatError(
            f"square-domain source must be square, got {pix.width}x{pix.height}")
    X, Y = _pixel_centres(pix.width, pix.height)
    xs, ys = X.ravel(), Y.ravel()
    out = np.zeros((xs.size, 3), dtype=np.uint8)
    if direction is Direction.SQUARE_TO_DISC:
        keep = xs * xs + ys * ys <= 1.0
        src = [disc_to_square(mapping, u, v) for u, v in zip(xs[keep], ys[keep])]
    else:
        keep = np.ones(xs.size, dtype=bool)
        src = [square_to_disc(mapping, x, y) for x, y in zip(xs, ys)]
    if src:
        sx, sy = np.array(src).T
        out[keep] = _sample(pix, sx, sy, filt)
    return Pixmap(pix.width, pix.height, out.reshape(pix.height, pix.width, 3))
