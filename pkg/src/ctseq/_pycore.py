"""Pure-Python multiplication kernels (fallback for the compiled core)."""

from __future__ import annotations


def mul_terms_exact(t1: dict, t2: dict) -> dict:
    """Product of two sparse term maps {exponent tuple: coefficient}."""
    acc: dict = {}
    get = acc.get
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    items2 = list(t2.items())
    for e1, c1 in t1.items():
        for e2, c2 in items2:
            k = tuple(a + b for a, b in zip(e1, e2))
            v = get(k)
            acc[k] = c1 * c2 if v is None else v + c1 * c2
    return {k: v for k, v in acc.items() if v != 0}


def mul_terms_mod(t1: dict, t2: dict, modulus: int) -> dict:
    acc: dict = {}
    get = acc.get
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    items2 = list(t2.items())
    for e1, c1 in t1.items():
        for e2, c2 in items2:
            k = tuple(a + b for a, b in zip(e1, e2))
            v = get(k)
            acc[k] = (c1 * c2 if v is None else v + c1 * c2) % modulus
    return {k: v for k, v in acc.items() if v != 0}
