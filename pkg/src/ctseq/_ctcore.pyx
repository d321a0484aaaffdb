# distutils: language = c++
"""Compiled multiplication kernels on packed exponent keys.

Exponent vectors are packed into a single int64 by the caller (mixed
radix with a shared offset), so a product of monomials is a plain int64
addition.  Two coefficient paths: machine integers mod m (m < 2^31) and
arbitrary Python numbers for the exact path.
"""

from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map

import numpy as np


def mul_packed_mod(int64_t[::1] keys1, uint64_t[::1] coeffs1,
                   int64_t[::1] keys2, uint64_t[::1] coeffs2,
                   uint64_t modulus):
    """Multiply packed polynomials with coefficients reduced mod `modulus`.

    Returns (keys, coeffs) int64/uint64 arrays of the nonzero product
    terms, unordered.  Requires modulus < 2^31 (no intermediate overflow).
    """
    cdef Py_ssize_t n1 = keys1.shape[0], n2 = keys2.shape[0]
    cdef unordered_map[int64_t, uint64_t] acc
    acc.reserve(<size_t> (2 * (n1 + n2) + 16))
    cdef Py_ssize_t i, j
    cdef int64_t ki
    cdef uint64_t ci
    for i in range(n1):
        ki = keys1[i]
        ci = coeffs1[i]
        for j in range(n2):
            acc[ki + keys2[j]] = (acc[ki + keys2[j]] + ci * coeffs2[j]) % modulus
    out_keys = np.empty(acc.size(), dtype=np.int64)
    out_coeffs = np.empty(acc.size(), dtype=np.uint64)
    cdef int64_t[::1] ok = out_keys
    cdef uint64_t[::1] oc = out_coeffs
    cdef Py_ssize_t n = 0
    for kv in acc:
        if kv.second != 0:
            ok[n] = kv.first
            oc[n] = kv.second
            n += 1
    return out_keys[:n], out_coeffs[:n]


def mul_packed_obj(int64_t[::1] keys1, list coeffs1,
                   int64_t[::1] keys2, list coeffs2):
    """Multiply packed polynomials with Python-number coefficients.

    Returns a dict {packed key: coefficient} with zero terms dropped.
    """
    cdef Py_ssize_t n1 = keys1.shape[0], n2 = keys2.shape[0]
    cdef dict acc = {}
    cdef Py_ssize_t i, j
    cdef int64_t ki
    cdef object ci, prod, cur, key
    for i in range(n1):
        ki = keys1[i]
        ci = coeffs1[i]
        for j in range(n2):
            key = ki + keys2[j]
            prod = ci * coeffs2[j]
            cur = acc.get(key)
            if cur is None:
                acc[key] = prod
            else:
                acc[key] = cur + prod
    return {k: v for k, v in acc.items() if v != 0}
