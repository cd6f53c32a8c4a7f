"""Polynomials over a :class:`~bsymbol.field.FieldCtx`.

A polynomial is a tuple of element indices, little-endian, with no trailing
zeros; the zero polynomial is ``()``.
"""
from __future__ import annotations

from typing import Sequence

from .field import FieldCtx


def trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def degree(coeffs: Sequence[int]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(trim(coeffs)) - 1


def mul(ctx: FieldCtx, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    a, b = trim(a), trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
    return trim(out)


def mod_xn_minus_1(ctx: FieldCtx, a: Sequence[int], n: int) -> tuple[int, ...]:
    """Reduce modulo ``X^n - 1`` by folding exponents mod ``n``."""
    out = [0] * n
    for i, c in enumerate(a):
        if c:
            out[i % n] = ctx.add(out[i % n], c)
    return trim(out)


def divmod_poly(ctx: FieldCtx, a: Sequence[int], b: Sequence[int]):
    """Long division; returns ``(quotient, remainder)``."""
    a, b = list(trim(a)), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lead_inv = ctx.inv(b[-1])
    quot = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            t = ctx.mul(c, lead_inv)
            quot[k - db] = t
            for j in range(db + 1):
                a[k - db + j] = ctx.sub(a[k - db + j], ctx.mul(t, b[j]))
    return trim(quot), trim(a)


def evaluate(ctx: FieldCtx, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc
