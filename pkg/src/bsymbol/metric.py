"""The b-symbol read map and the b-weight / b-distance it induces.

A word of length ``n`` is read through ``n`` cyclic windows of width ``b``;
window ``i`` is ``(x_i, ..., x_{i+b-1})`` with indices taken mod ``n``.
The b-weight counts windows that are not all zero.  ``b = 1`` is accepted and
gives the Hamming weight.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import FieldMismatch, LengthMismatch, WindowOutOfRange
from .field import FieldCtx


@dataclass(frozen=True)
class Word:
    """A vector over one field; ``symbols`` are element indices of ``field``."""

    field: FieldCtx
    symbols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(x) for x in self.symbols))
        if len(self.symbols) < 2:
            raise ValueError("words need length >= 2")
        q = self.field.order
        for x in self.symbols:
            if not 0 <= x < q:
                raise FieldMismatch(f"symbol {x} not in GF({q})")

    @classmethod
    def zero(cls, field: FieldCtx, n: int) -> Word:
        return cls(field, (0,) * n)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def _check(self, other: Word):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if len(self) != len(other):
            raise LengthMismatch(f"lengths {len(self)} and {len(other)}")

    def __add__(self, other: Word) -> Word:
        self._check(other)
        add = self.field.add
        return Word(self.field, tuple(add(a, b) for a, b in zip(self, other)))

    def __sub__(self, other: Word) -> Word:
        self._check(other)
        sub = self.field.sub
        return Word(self.field, tuple(sub(a, b) for a, b in zip(self, other)))

    def __neg__(self) -> Word:
        return Word(self.field, tuple(self.field.neg(a) for a in self))

    def scale(self, lam: int) -> Word:
        return Word(self.field, tuple(self.field.scale(lam, self.symbols)))

    def rotate(self, k: int = 1) -> Word:
        """Cyclic left shift: position ``i`` takes symbol ``i + k``."""
        k %= len(self)
        return Word(self.field, self.symbols[k:] + self.symbols[:k])

    def hamming_weight(self) -> int:
        return sum(1 for x in self.symbols if x)

    def to_line(self) -> str:
        return " ".join(str(x) for x in self.symbols)

    @classmethod
    def from_line(cls, field: FieldCtx, line: str) -> Word:
        return cls(field, tuple(int(tok) for tok in line.split()))


@dataclass(frozen=True)
class BProfile:
    """The image of a word under the b-symbol read map."""

    b: int
    tuples: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.tuples)

    def hamming_weight(self) -> int:
        return sum(1 for t in self.tuples if any(t))


def _check_window(n: int, b: int):
    if not 1 <= b <= n - 1:
        raise WindowOutOfRange(f"b={b} outside [1, {n - 1}] for length {n}")


def windows(symbols: Sequence[int], b: int) -> Iterator[tuple[int, ...]]:
    n = len(symbols)
    _check_window(n, b)
    ext = tuple(symbols) + tuple(symbols[: b - 1])
    for i in range(n):
        yield ext[i:i + b]


def pi_b(x: Word | Sequence[int], b: int) -> BProfile:
    symbols = x.symbols if isinstance(x, Word) else tuple(x)
    return BProfile(b, tuple(windows(symbols, b)))


def b_weight_of(symbols: Sequence[int], b: int) -> int:
    """Streaming b-weight of a raw symbol sequence (no profile allocated)."""
    n = len(symbols)
    _check_window(n, b)
    # live = nonzero symbols inside the current window
    live = sum(1 for i in range(b) if symbols[i])
    weight = 0
    for i in range(n):
        if live:
            weight += 1
        if symbols[i]:
            live -= 1
        if symbols[(i + b) % n]:
            live += 1
    return weight


def b_weight(x: Word | Sequence[int], b: int) -> int:
    symbols = x.symbols if isinstance(x, Word) else x
    return b_weight_of(symbols, b)


def b_distance(x: Word, y: Word, b: int) -> int:
    """``w_b(x - y)``; also the Hamming distance between the two profiles."""
    return b_weight_of((x - y).symbols, b)
