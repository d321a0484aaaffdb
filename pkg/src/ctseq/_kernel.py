"""Kernel selection and exponent packing for sparse multiplication.

The compiled extension (`ctseq._ctcore`) is used when importable and the
exponent ranges fit a packed int64 key; otherwise the pure-Python kernel
runs.  Set CTSEQ_PURE_KERNEL=1 to force the fallback.
"""

from __future__ import annotations

import os

from . import _pycore

try:
    from . import _ctcore
except ImportError:  # extension not built
    _ctcore = None

if os.environ.get("CTSEQ_PURE_KERNEL"):
    _ctcore = None

if _ctcore is not None:
    import numpy as np

# below this many coefficient products the packing overhead dominates
_SMALL_PRODUCT = 256

# keep packed keys comfortably inside int64
_MAX_PACKED = 1 << 62


def kernel_name() -> str:
    return "compiled" if _ctcore is not None else "pure"


def mul_terms(t1: dict, t2: dict, nvars: int, modulus: int | None = None) -> dict:
    """Product of two term maps; dispatches to the best available kernel."""
    if not t1 or not t2:
        return {}
    if (_ctcore is None or len(t1) * len(t2) < _SMALL_PRODUCT
            or (modulus is not None and modulus >= 1 << 31)):
        return _mul_pure(t1, t2, modulus)
    packing = _plan_packing(t1, t2, nvars)
    if packing is None:
        return _mul_pure(t1, t2, modulus)
    strides, off1, off2 = packing
    k1 = _pack(t1, strides, off1)
    k2 = _pack(t2, strides, off2)
    off_out = [a + b for a, b in zip(off1, off2)]
    if modulus is not None:
        c1 = np.fromiter((c for c in t1.values()), dtype=np.uint64, count=len(t1))
        c2 = np.fromiter((c for c in t2.values()), dtype=np.uint64, count=len(t2))
        keys, coeffs = _ctcore.mul_packed_mod(k1, c1, k2, c2, modulus)
        return {
            _unpack(int(k), strides, off_out): int(c)
            for k, c in zip(keys.tolist(), coeffs.tolist())
        }
    packed = _ctcore.mul_packed_obj(k1, list(t1.values()), k2, list(t2.values()))
    return {_unpack(k, strides, off_out): c for k, c in packed.items()}


def _mul_pure(t1, t2, modulus):
    if modulus is None:
        return _pycore.mul_terms_exact(t1, t2)
    return _pycore.mul_terms_mod(t1, t2, modulus)


def _plan_packing(t1, t2, nvars):
    """Mixed-radix strides wide enough for every product exponent."""
    lo1, hi1 = _bounds(t1, nvars)
    lo2, hi2 = _bounds(t2, nvars)
    radices = [(hi1[i] - lo1[i]) + (hi2[i] - lo2[i]) + 1 for i in range(nvars)]
    strides = [1] * nvars
    total = 1
    for i in range(nvars):
        strides[i] = total
        total *= radices[i]
        if total > _MAX_PACKED:
            return None
    return strides, lo1, lo2


def _bounds(terms, nvars):
    lo = [0] * nvars
    hi = [0] * nvars
    first = True
    for e in terms:
        if first:
            lo = list(e)
            hi = list(e)
            first = False
            continue
        for i, v in enumerate(e):
            if v < lo[i]:
                lo[i] = v
            elif v > hi[i]:
                hi[i] = v
    return lo, hi


def _pack(terms, strides, offsets):
    out = np.empty(len(terms), dtype=np.int64)
    for n, e in enumerate(terms):
        k = 0
        for i, v in enumerate(e):
            k += (v - offsets[i]) * strides[i]
        out[n] = k
    return out


def _unpack(key, strides, offsets):
    e = [0] * len(strides)
    for i in range(len(strides) - 1, -1, -1):
        q, key = divmod(key, strides[i])
        e[i] = q + offsets[i]
    return tuple(e)
