"""Tabulated finite fields GF(p^m) and subfield towers.

Elements are plain ints.  An element's index is the little-endian base-``p``
reading of its polynomial-basis coordinates, so index 0 is zero, index 1 is
one, and for ``m >= 2`` the generator ``X`` has index ``p``.

Multiplication goes through log/antilog tables keyed to a fixed primitive
element ``gamma``; addition goes through a Zech table
(``1 + gamma^k = gamma^zech[k]``), so every scalar operation is O(1).

A subfield GF(q) of GF(Q) is not built as a separate extension.  It is located
inside GF(Q) as the image of ``gamma^((Q-1)/(q-1))`` and given its own
:class:`FieldCtx` through the minimal polynomial of that element, which makes
the embedding ``gamma_q^k <-> gamma^(k(Q-1)/(q-1))`` an isomorphism.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    NonPrimeModulus,
    NotASubfieldTower,
    NotCoprime,
    ZeroElement,
)

MAX_FIELD_ORDER = 1 << 22
CAP_ENV_VAR = "BSYMBOL_FIELD_CAP"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def integer_log(base: int, value: int) -> int | None:
    """Return ``k`` with ``base**k == value`` or None."""
    if base < 2 or value < 1:
        return None
    k, acc = 0, 1
    while acc < value:
        acc *= base
        k += 1
    return k if acc == value else None


def ord_mod(q: int, n: int) -> int:
    """Smallest ``s >= 1`` with ``q**s == 1 (mod n)``."""
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    s, acc = 1, q % n
    while acc != 1:
        acc = acc * q % n
        s += 1
    return s


def field_cap() -> int:
    """Effective table-size cap; the environment may lower it, never raise it."""
    raw = os.environ.get(CAP_ENV_VAR)
    if not raw:
        return MAX_FIELD_ORDER
    return min(int(raw), MAX_FIELD_ORDER)


# -- polynomials over GF(p) with int coefficients, used for the modulus search

def _digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _mulmod(a: list[int], b: list[int], mod: Sequence[int], p: int) -> list[int]:
    m = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # mod is monic
    for k in range(len(prod) - 1, m - 1, -1):
        t = prod[k]
        if t:
            for j in range(m + 1):
                prod[k - m + j] = (prod[k - m + j] - t * mod[j]) % p
    return prod[:m] + [0] * (m - len(prod[:m]))


def _x_pow_mod(exp: int, mod: Sequence[int], p: int) -> list[int]:
    m = len(mod) - 1
    result = [1] + [0] * (m - 1)
    base = _mulmod([0, 1], [1], mod, p)
    while exp:
        if exp & 1:
            result = _mulmod(result, base, mod, p)
        base = _mulmod(base, base, mod, p)
        exp >>= 1
    return result


def _is_primitive(mod: Sequence[int], p: int) -> bool:
    m = len(mod) - 1
    if mod[0] == 0:
        return False
    order = p**m - 1
    one = [1] + [0] * (m - 1)
    if _x_pow_mod(order, mod, p) != one:
        return False
    # X of full order forces the quotient ring to be a field
    return all(_x_pow_mod(order // r, mod, p) != one for r in prime_factors(order))


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def find_primitive_poly(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree ``m``.

    Candidates are ranked by the base-``p`` integer of their low-degree
    coefficients, read little-endian.  For ``m == 1`` the polynomial is
    ``X - g`` with ``g`` the smallest primitive root, so the prime field's
    generator is the familiar one.
    """
    if m == 1:
        g = smallest_primitive_root(p)
        return ((-g) % p, 1)
    for low in range(1, p**m):
        if low % p == 0:
            continue
        cand = tuple(_digits(low, p, m)) + (1,)
        if _is_primitive(cand, p):
            return cand
    raise AssertionError("unreachable: primitive polynomials exist in every degree")


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """A fully tabulated GF(p^m).  Build with :func:`build_field`."""

    p: int
    m: int
    modulus_poly: tuple[int, ...]
    antilog_table: tuple[int, ...]
    log_table: tuple[int, ...]
    zech_table: tuple[int, ...] = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def gamma(self) -> int:
        return self.antilog_table[1 % len(self.antilog_table)]

    @property
    def key(self) -> tuple:
        return (self.p, self.m, self.modulus_poly)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.m}), modulus={poly_to_str(self.modulus_poly)})"

    # -- elements

    def elements(self) -> range:
        return range(self.order)

    def check(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise ValueError(f"{x} is not an element of GF({self.order})")
        return x

    def coords(self, x: int) -> list[int]:
        return _digits(x, self.p, self.m)

    def from_coords(self, coords: Sequence[int]) -> int:
        return _undigits([c % self.p for c in coords], self.p)

    def exp(self, k: int) -> int:
        """``gamma ** k`` for any integer ``k``."""
        return self.antilog_table[k % (self.order - 1)]

    def log(self, x: int) -> int:
        if x == 0:
            raise ZeroElement("log of zero")
        return self.log_table[x]

    # -- arithmetic

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        n1 = self.order - 1
        la = self.log_table[a]
        z = self.zech_table[(self.log_table[b] - la) % n1]
        if z < 0:
            return 0
        return self.antilog_table[(la + z) % n1]

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        n1 = self.order - 1
        return self.antilog_table[(self.log_table[a] + n1 // 2) % n1]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        n1 = self.order - 1
        return self.antilog_table[(self.log_table[a] + self.log_table[b]) % n1]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        n1 = self.order - 1
        return self.antilog_table[-self.log_table[a] % n1]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero(f"{a} / 0")
        if a == 0:
            return 0
        n1 = self.order - 1
        return self.antilog_table[(self.log_table[a] - self.log_table[b]) % n1]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if k == 0 else 0
        n1 = self.order - 1
        return self.antilog_table[self.log_table[a] * k % n1]

    def scale(self, lam: int, xs: Sequence[int]) -> list[int]:
        return [self.mul(lam, x) for x in xs]

    def multiplicative_order(self, x: int) -> int:
        if x == 0:
            raise ZeroElement("zero has no multiplicative order")
        n1 = self.order - 1
        return n1 // math.gcd(self.log_table[x], n1)

    # -- subfields

    def subfield(self, q: int) -> Subfield:
        """The unique subfield of order ``q``, with its own context."""
        key = ("subfield", q)
        if key not in self._cache:
            self._cache[key] = _make_subfield(self, q)
        return self._cache[key]

    def op_tables(self):
        """Dense ``(add, mul)`` tables as ``order x order`` numpy arrays."""
        if "tables" not in self._cache:
            els = range(self.order)
            add = np.array([[self.add(a, b) for b in els] for a in els], dtype=np.int64)
            mul = np.array([[self.mul(a, b) for b in els] for a in els], dtype=np.int64)
            self._cache["tables"] = (add, mul)
        return self._cache["tables"]

    def trace(self, x: int, q: int) -> int:
        return self.subfield(q).trace(x)

    def minimal_polynomial(self, x: int, q: int) -> tuple[int, ...]:
        return self.subfield(q).minimal_polynomial(x)


def field_arith(ctx: FieldCtx, op: str, a: int, b: int | None = None) -> int:
    """Dispatch one of add/sub/mul/div/pow/inv/neg; ``b`` is the exponent for pow."""
    if op in ("inv", "neg"):
        return getattr(ctx, op)(a)
    if op not in ("add", "sub", "mul", "div", "pow"):
        raise ValueError(f"unknown field operation {op!r}")
    return getattr(ctx, op)(a, b)


def _build_tables(p: int, m: int, modulus: tuple[int, ...]) -> FieldCtx:
    order = p**m
    n1 = order - 1
    antilog = [0] * n1
    log = [-1] * order
    low = [(-c) % p for c in modulus[:m]]  # X^m = sum low[j] X^j
    coords = [1] + [0] * (m - 1)
    for k in range(n1):
        idx = _undigits(coords, p)
        if log[idx] != -1:
            raise AssertionError(f"modulus {modulus} is not primitive")
        antilog[k] = idx
        log[idx] = k
        top = coords[-1]
        coords = [0] + coords[:-1]
        if top:
            coords = [(c + top * l) % p for c, l in zip(coords, low)]
    if _undigits(coords, p) != 1:
        raise AssertionError(f"modulus {modulus} is not primitive")

    # 1 + gamma^k: only the constant digit changes
    zech = [-1] * n1
    for k in range(n1):
        x = antilog[k]
        y = x - x % p + (x % p + 1) % p
        zech[k] = log[y] if y else -1
    return FieldCtx(p, m, tuple(modulus), tuple(antilog), tuple(log), tuple(zech))


def build_field(p: int, m: int, modulus: Sequence[int] | None = None,
                cap: int | None = None) -> FieldCtx:
    """Build GF(p^m).

    With no ``modulus`` the lexicographically smallest primitive polynomial is
    used, so two builds of the same ``(p, m)`` give identical tables.  A
    caller-supplied ``modulus`` (monic, little-endian) must be primitive.
    """
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    limit = field_cap() if cap is None else min(cap, MAX_FIELD_ORDER)
    if p**m > limit:
        raise FieldTooLarge(f"GF({p}^{m}) has {p**m} elements, cap is {limit}")
    if modulus is None:
        modulus = find_primitive_poly(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
    return _build_tables(p, m, tuple(modulus))


@dataclass(frozen=True, eq=False)
class Subfield:
    """GF(q) sitting inside ``big`` = GF(Q), with ``Q = q**s``.

    ``small`` is a standalone context for GF(q); ``to_small``/``to_big``
    translate indices between the two.  Words over GF(q) carry small indices.
    """

    big: FieldCtx
    q: int
    f: int
    s: int
    small: FieldCtx
    to_small: dict = field(repr=False)
    to_big: tuple[int, ...] = field(repr=False)

    def contains(self, x: int) -> bool:
        return x in self.to_small

    def frobenius_orbit(self, x: int) -> list[int]:
        orbit = [x]
        y = self.big.pow(x, self.q)
        while y != x:
            orbit.append(y)
            y = self.big.pow(y, self.q)
        return orbit

    def trace_big(self, x: int) -> int:
        """``sum_{i<s} x^(q^i)`` as an element of the big field."""
        big = self.big
        acc, y = 0, x
        for _ in range(self.s):
            acc = big.add(acc, y)
            y = big.pow(y, self.q)
        return acc

    def trace(self, x: int) -> int:
        """Trace from GF(Q) down to GF(q), returned as a small-field index."""
        return self.to_small[self.trace_big(x)]

    def minimal_polynomial(self, x: int) -> tuple[int, ...]:
        """Monic minimal polynomial of ``x`` over GF(q), small-field coefficients."""
        big = self.big
        poly = [1]
        for r in self.frobenius_orbit(x):
            # poly * (X - r)
            nr = big.neg(r)
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] = big.add(nxt[i + 1], c)
                nxt[i] = big.add(nxt[i], big.mul(c, nr))
            poly = nxt
        return tuple(self.to_small[c] for c in poly)


def _make_subfield(big: FieldCtx, q: int) -> Subfield:
    f = integer_log(big.p, q)
    if f is None or f < 1 or big.m % f:
        raise NotASubfieldTower(f"GF({q}) is not a subfield of GF({big.order})")
    s = big.m // f
    Q = big.order
    step = (Q - 1) // (q - 1)
    g = big.exp(step)

    # minimal polynomial of g over the prime field; its coefficients are
    # constants, whose indices are their values
    poly = [1]
    orbit = [g]
    y = big.pow(g, big.p)
    while y != g:
        orbit.append(y)
        y = big.pow(y, big.p)
    for r in orbit:
        nr = big.neg(r)
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = big.add(nxt[i + 1], c)
            nxt[i] = big.add(nxt[i], big.mul(c, nr))
        poly = nxt
    if any(c >= big.p for c in poly) or len(poly) != f + 1:
        raise AssertionError("subfield generator has a malformed minimal polynomial")
    small = _build_tables(big.p, f, tuple(poly))

    to_big = [0] * q
    to_small = {0: 0}
    for k in range(q - 1):
        b = big.exp(k * step)
        sm = small.exp(k)
        to_big[sm] = b
        to_small[b] = sm
    return Subfield(big, q, f, s, small, to_small, tuple(to_big))


# -- polynomial serialization (comma-separated little-endian indices)

def poly_to_str(coeffs: Sequence[int]) -> str:
    return ",".join(str(int(c)) for c in coeffs)


def poly_from_str(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(",") if tok.strip())
