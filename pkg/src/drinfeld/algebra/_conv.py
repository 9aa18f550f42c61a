"""Exact integer convolution of small nonnegative integer arrays.

Large products go through Kronecker substitution: both operands are packed
into one big integer each (fixed-width slots, every axis but the first padded
to the output extent so that no carries cross slots), multiplied with GMP,
and unpacked with numpy.
"""

from __future__ import annotations

import gmpy2
import numpy as np

_DIRECT_1D = 48  # below this length np.convolve is faster
_HEADER = b"\x01\x01"  # gmpy2 binary header for a positive mpz


def _slot_bytes(maxval: int) -> int:
    for nb in (1, 2, 4, 8):
        if maxval < (1 << (8 * nb - 1)):
            return nb
    raise OverflowError("convolution slot would overflow 63 bits")


def _pack(a: np.ndarray, nb: int):
    return gmpy2.from_binary(_HEADER + a.astype(f"<u{nb}").tobytes())


def iconv(x: np.ndarray, y: np.ndarray, prodbound: int) -> np.ndarray:
    """Full convolution ``x * y`` of same-rank nonnegative int64 arrays.

    ``prodbound`` bounds ``x[i] * y[j]`` for all entries.
    """
    if x.ndim != y.ndim:
        raise ValueError("rank mismatch")
    if x.size == 0 or y.size == 0:
        shape = tuple(max(a + b - 1, 0) for a, b in zip(x.shape, y.shape))
        return np.zeros(shape, dtype=np.int64)
    if x.ndim == 1 and min(x.size, y.size) <= _DIRECT_1D:
        return np.convolve(x, y)
    if x.size == 1:
        return (y * int(x.flat[0])).reshape(tuple(a + b - 1 for a, b in zip(x.shape, y.shape)))
    if y.size == 1:
        return (x * int(y.flat[0])).reshape(tuple(a + b - 1 for a, b in zip(x.shape, y.shape)))
    out_shape = tuple(a + b - 1 for a, b in zip(x.shape, y.shape))
    terms = 1
    for a, b in zip(x.shape, y.shape):
        terms *= min(a, b)
    nb = _slot_bytes(max(prodbound, 1) * terms)
    inner = out_shape[1:]
    if inner:
        xp = np.zeros((x.shape[0],) + inner, dtype=np.int64)
        xp[tuple(slice(0, s) for s in x.shape)] = x
        yp = np.zeros((y.shape[0],) + inner, dtype=np.int64)
        yp[tuple(slice(0, s) for s in y.shape)] = y
    else:
        xp, yp = x, y
    z = _pack(xp.ravel(), nb) * _pack(yp.ravel(), nb)
    total = 1
    for s in out_shape:
        total *= s
    raw = gmpy2.to_binary(z)[2:] if z else b""
    need = total * nb
    if len(raw) < need:
        raw = raw + bytes(need - len(raw))
    out = np.frombuffer(raw, dtype=f"<u{nb}", count=total).astype(np.int64)
    return out.reshape(out_shape)
