"""Irreducible cyclic trace codes and their constacyclic shortenings.

For ``Q = q^s``, ``e | Q - 1`` and ``alpha = gamma^e`` of order ``n = (Q-1)/e``,
the full code is ``{(Tr(beta), Tr(beta*alpha), ..., Tr(beta*alpha^(n-1)))}``
over all ``beta`` in GF(Q), with ``Tr`` the trace down to GF(q).  When
``e | q - 1`` the first ``n~ = (Q-1)/(q-1)`` coordinates form the shortened
code, which is constacyclic with constant ``delta = alpha^n~`` in GF(q)*.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from typing import Iterator

import numpy as np

from . import poly
from .errors import (
    DegenerateConstruction,
    EDoesNotDivide,
    ENotDividingQMinus1,
    FieldMismatch,
    FieldTooLarge,
    NonPrimeModulus,
)
from .field import FieldCtx, Subfield, build_field, field_cap, is_prime, ord_mod
from .metric import Word

FULL = "full"
SHORTENED = "shortened"
VARIANTS = (FULL, SHORTENED)


@lru_cache(maxsize=32)
def _cached_field(p: int, m: int) -> FieldCtx:
    return build_field(p, m, cap=None)


@dataclass(frozen=True)
class CodeParams:
    p: int
    f: int
    q: int
    s: int
    Q: int
    e: int
    n: int
    k: int
    K: int
    e_prime: int
    l: int | None  # (q-1)/e when e | q-1
    n_tilde: int
    alpha: int  # index in GF(Q)
    delta: int | None  # alpha^n_tilde as a GF(q) index, when e | q-1
    theorem1_applicable: bool
    predicted_db: dict[int, int]
    predicted_db_shortened: dict[int, int]
    field: FieldCtx = dc_field(repr=False, compare=False)
    tower: Subfield = dc_field(repr=False, compare=False)

    @property
    def small(self) -> FieldCtx:
        return self.tower.small

    @cached_property
    def trace_table(self) -> np.ndarray:
        """``trace_table[k] = Tr(gamma^k)`` as GF(q) indices."""
        tr = self.tower.trace
        exp = self.field.exp
        return np.array([tr(exp(k)) for k in range(self.Q - 1)], dtype=np.int64)

    def as_dict(self) -> dict:
        return {
            "p": self.p, "f": self.f, "q": self.q, "s": self.s, "Q": self.Q,
            "e": self.e, "n": self.n, "k": self.k, "K": self.K,
            "e_prime": self.e_prime, "l": self.l, "n_tilde": self.n_tilde,
            "alpha": self.alpha, "delta": self.delta,
            "theorem1_applicable": self.theorem1_applicable,
            "modulus_poly": ",".join(str(c) for c in self.field.modulus_poly),
        }


def predicted_distance(Q: int, q: int, e: int, b: int) -> int:
    """``Q (q^b - 1) / (e q^b)``; exact division is checked."""
    num, den = Q * (q**b - 1), e * q**b
    if num % den:
        raise ArithmeticError(f"predicted distance {num}/{den} is not an integer")
    return num // den


def derive_params(p: int, f: int, s: int, e: int, cap: int | None = None) -> CodeParams:
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    if f < 1 or s < 1 or e < 1:
        raise ValueError("f, s and e must be positive")
    q = p**f
    Q = q**s
    limit = field_cap() if cap is None else min(cap, field_cap())
    if Q > limit:
        raise FieldTooLarge(f"Q = {Q} exceeds cap {limit}")
    if s < 2:
        raise DegenerateConstruction("s = 1 puts alpha in GF(q)")
    if (Q - 1) % e:
        raise EDoesNotDivide(f"e = {e} does not divide Q - 1 = {Q - 1}")
    n = (Q - 1) // e
    if n < 2:
        raise DegenerateConstruction(f"length n = {n} < 2")
    if ord_mod(q, n) != s:
        raise DegenerateConstruction(
            f"ord_{n}({q}) = {ord_mod(q, n)} != s = {s}; alpha generates a proper subfield")

    F = _cached_field(p, f * s)
    tower = F.subfield(q)
    alpha = F.exp(e)
    n_tilde = (Q - 1) // (q - 1)
    e_prime = math.gcd(e, n_tilde)
    l = (q - 1) // e if (q - 1) % e == 0 else None
    delta = tower.to_small[F.pow(alpha, n_tilde)] if l is not None else None
    applicable = e_prime == 1
    predicted, predicted_short = {}, {}
    if applicable:
        for b in range(2, s):
            predicted[b] = predicted_distance(Q, q, e, b)
            predicted_short[b] = predicted_distance(Q, q, q - 1, b)
    return CodeParams(
        p=p, f=f, q=q, s=s, Q=Q, e=e, n=n, k=s, K=Q, e_prime=e_prime, l=l,
        n_tilde=n_tilde, alpha=alpha, delta=delta, theorem1_applicable=applicable,
        predicted_db=predicted, predicted_db_shortened=predicted_short,
        field=F, tower=tower,
    )


def _check_beta(params: CodeParams, beta: int):
    if not 0 <= beta < params.Q:
        raise FieldMismatch(f"beta = {beta} is not an element of GF({params.Q})")


def codeword(params: CodeParams, beta: int) -> Word:
    """``c_beta`` computed directly as ``Tr(beta * alpha^i)``."""
    _check_beta(params, beta)
    F, tr = params.field, params.tower.trace
    out, x = [], beta
    for _ in range(params.n):
        out.append(tr(x))
        x = F.mul(x, params.alpha)
    return Word(params.small, tuple(out))


def shortened_codeword(params: CodeParams, beta: int) -> Word:
    """First ``n~`` coordinates of :func:`codeword`."""
    if params.l is None:
        raise ENotDividingQMinus1(f"e = {params.e} does not divide q - 1 = {params.q - 1}")
    full = codeword(params, beta)
    return Word(params.small, full.symbols[: params.n_tilde])


def parity_check_poly(params: CodeParams) -> tuple[int, ...]:
    """Minimal polynomial of ``alpha^-1`` over GF(q), GF(q) coefficients."""
    return params.tower.minimal_polynomial(params.field.inv(params.alpha))


def beta_order(params: CodeParams) -> list[int]:
    """Enumeration order: 0, then gamma^0, gamma^1, ..., gamma^(Q-2)."""
    return [0] + list(params.field.antilog_table)


@dataclass(frozen=True)
class Code:
    params: CodeParams
    variant: str = FULL

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == SHORTENED and self.params.l is None:
            raise ENotDividingQMinus1(
                f"e = {self.params.e} does not divide q - 1 = {self.params.q - 1}")

    @property
    def length(self) -> int:
        return self.params.n if self.variant == FULL else self.params.n_tilde

    @property
    def size(self) -> int:
        return self.params.K

    @property
    def field(self) -> FieldCtx:
        return self.params.small

    def codeword(self, beta: int) -> Word:
        if self.variant == FULL:
            return codeword(self.params, beta)
        return shortened_codeword(self.params, beta)

    @cached_property
    def matrix(self) -> np.ndarray:
        """All codewords as rows (GF(q) indices), in enumeration order.

        Built from the table of ``Tr(gamma^k)``: the word for
        ``beta = gamma^j`` reads ``Tr(gamma^(j + e i))`` at position ``i``.
        """
        P = self.params
        N = P.Q - 1
        idx = (np.arange(N)[:, None] + P.e * np.arange(self.length)[None, :]) % N
        rows = P.trace_table[idx]
        out = np.zeros((P.Q, self.length), dtype=np.int64)
        out[1:] = rows
        out.setflags(write=False)
        return out

    def betas(self) -> list[int]:
        return beta_order(self.params)

    def enumerate(self) -> Iterator[tuple[int, Word]]:
        F = self.field
        for beta, row in zip(self.betas(), self.matrix.tolist()):
            yield beta, Word(F, tuple(row))

    @cached_property
    def word_set(self) -> frozenset:
        return frozenset(map(tuple, self.matrix.tolist()))

    def contains(self, symbols) -> bool:
        return tuple(symbols) in self.word_set

    def dump_lines(self) -> list[str]:
        P = self.params
        lines = [f"# {P.p} {P.f} {P.s} {P.e} {self.variant} {self.length}"]
        lines.extend(" ".join(map(str, row)) for row in self.matrix.tolist())
        return lines


def load_dump(lines) -> tuple[Code, list[Word]]:
    """Inverse of :meth:`Code.dump_lines`."""
    lines = [ln for ln in (x.strip() for x in lines) if ln]
    head = lines[0].lstrip("#").split()
    p, f, s, e = (int(t) for t in head[:4])
    code = Code(derive_params(p, f, s, e), head[4])
    if int(head[5]) != code.length:
        raise ValueError("dump header length does not match the construction")
    return code, [Word.from_line(code.field, ln) for ln in lines[1:]]


# -- structural checks, each returning the first offending beta or None

DENSE_TABLE_LIMIT = 256  # largest GF(q) checked with dense q x q tables


def _first_bad_row(code: Code, bad: np.ndarray) -> int | None:
    rows = np.flatnonzero(bad)
    return code.betas()[int(rows[0])] if rows.size else None


def _row_of(params: CodeParams, beta: int) -> int:
    return 0 if beta == 0 else 1 + params.field.log_table[beta]


def first_non_cyclic(code: Code) -> int | None:
    """Rotation closure (full codes), or rotation-with-delta closure (shortened)."""
    scale0 = code.params.delta if code.variant == SHORTENED else 1
    mul = code.field.mul
    for beta, row in zip(code.betas(), code.matrix.tolist()):
        shifted = tuple(row[1:]) + (mul(scale0, row[0]),)
        if shifted not in code.word_set:
            return beta
    return None


def first_nonlinear(code: Code) -> int | None:
    """Checks ``c(beta + u) = c(beta) + c(u)`` for ``u`` in a GF(p)-basis of GF(Q)
    and ``c(g beta) = g c(beta)`` for the generator ``g`` of GF(q)*.

    Additivity on a basis plus GF(q)-homogeneity makes ``beta -> c(beta)``
    GF(q)-linear, hence the code a GF(q)-subspace.
    """
    P, F, small = code.params, code.params.field, code.field
    mat, betas = code.matrix, code.betas()
    g = small.gamma
    g_big = P.tower.to_big[g]
    basis = [P.p**i for i in range(F.m)]
    if small.order <= DENSE_TABLE_LIMIT:
        add, mul = small.op_tables()
        bad = np.zeros(len(betas), dtype=bool)
        for u in basis:
            perm = [_row_of(P, F.add(beta, u)) for beta in betas]
            bad |= (mat[perm] != add[mat, mat[_row_of(P, u)]]).any(axis=1)
        perm = [_row_of(P, F.mul(g_big, beta)) for beta in betas]
        bad |= (mat[perm] != mul[g, mat]).any(axis=1)
        return _first_bad_row(code, bad)
    rows = mat.tolist()
    for beta, row in zip(betas, rows):
        for u in basis:
            want = [small.add(a, b) for a, b in zip(row, rows[_row_of(P, u)])]
            if rows[_row_of(P, F.add(beta, u))] != want:
                return beta
        if rows[_row_of(P, F.mul(g_big, beta))] != small.scale(g, row):
            return beta
    return None


def first_parity_violation(code: Code) -> int | None:
    """First codeword with ``c(x) h(x) != 0 mod x^n - 1`` (full codes)."""
    h = parity_check_poly(code.params)
    small, n = code.field, code.length
    if small.order <= DENSE_TABLE_LIMIT:
        add, mul = small.op_tables()
        mat = code.matrix
        acc = np.zeros_like(mat)
        # coefficient k of c(x)h(x) mod x^n - 1 is sum_j h_j c_{k-j}
        for j, hj in enumerate(h):
            if hj:
                acc = add[acc, mul[hj, np.roll(mat, j, axis=1)]]
        return _first_bad_row(code, acc.any(axis=1))
    for beta, row in zip(code.betas(), code.matrix.tolist()):
        if poly.mod_xn_minus_1(small, poly.mul(small, row, h), n):
            return beta
    return None
