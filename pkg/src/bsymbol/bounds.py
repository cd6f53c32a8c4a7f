"""Exact Plotkin-like bound arithmetic and exhaustive verification of codes.

Every comparison against the bound is done in :class:`fractions.Fraction`;
the differences involved (``d - n*theta``) are small fractions such as 6/25,
so a float comparison is not acceptable anywhere in this module.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .codes import (
    FULL,
    SHORTENED,
    Code,
    CodeParams,
    first_non_cyclic,
    first_nonlinear,
    first_parity_violation,
)
from .errors import EmptyCode, VerificationFailure, WindowOutOfRange
from .metric import b_distance

log = logging.getLogger(__name__)

SCHEMA_ID = "bsymbol.verification-report"
SCHEMA_VERSION = 1


def theta_b(q: int, b: int) -> Fraction:
    return Fraction(q**b - 1, q**b)


def plotkin_rhs(n: int, d_b: int, q: int, b: int) -> Fraction | None:
    """``d / (d - n*theta_b)``, or None when ``d <= n*theta_b`` (bound not applicable)."""
    excess = d_b - n * theta_b(q, b)
    if excess <= 0:
        return None
    return Fraction(d_b) / excess


def equidistant_value(K: int, n: int, q: int, b: int) -> Fraction:
    """The common distance ``K n theta_b / (K - 1)`` forced by equality in the bound."""
    return Fraction(K) * n * theta_b(q, b) / (K - 1)


def _weights(code: Code, b: int, backend=None) -> np.ndarray:
    if not 1 <= b <= code.length - 1:
        raise WindowOutOfRange(f"b={b} outside [1, {code.length - 1}]")
    return kernels.b_weights(code.matrix, b, backend=backend)


def min_b_distance(code: Code, b: int, backend=None) -> int:
    """Minimum b-weight over nonzero codewords (the code is linear)."""
    w = _weights(code, b, backend)[1:]
    if w.size == 0:
        raise EmptyCode("code has no nonzero codeword")
    return int(w.min())


def min_b_distance_pairwise(code: Code, b: int) -> int:
    """Minimum over all pairs of distinct codewords; quadratic, for small codes."""
    words = [w for _, w in code.enumerate()]
    if len(words) < 2:
        raise EmptyCode("need at least two codewords")
    return min(b_distance(x, y, b)
               for i, x in enumerate(words) for y in words[i + 1:])


def b_weight_distribution(code: Code, b: int, backend=None) -> dict[int, int]:
    counts = Counter(_weights(code, b, backend).tolist())
    return dict(sorted(counts.items()))


@dataclass(frozen=True)
class EquiResult:
    equidistant: bool
    weight: int | None  # common nonzero weight when equidistant
    witness: tuple[int, int] | None  # two betas whose codewords differ in b-weight


def _equi_from_weights(betas, w) -> EquiResult:
    nz = w[1:]
    if nz.size == 0:
        return EquiResult(True, None, None)
    first = int(nz[0])
    bad = np.flatnonzero(nz != first)
    if bad.size == 0:
        return EquiResult(True, first, None)
    return EquiResult(False, None, (betas[1], betas[1 + int(bad[0])]))


def check_equi_b_distance(code: Code, b: int, backend=None) -> EquiResult:
    """All nonzero codewords share one b-weight.

    By translation invariance this is the same as all pairwise b-distances
    being equal.  When the bound also holds with equality the common weight
    must be ``K n theta / (K - 1)``; a mismatch raises.
    """
    w = _weights(code, b, backend)
    res = _equi_from_weights(code.betas(), w)
    if res.equidistant and res.weight is not None:
        rhs = plotkin_rhs(code.length, res.weight, code.params.q, b)
        if rhs == code.size:
            expected = equidistant_value(code.size, code.length, code.params.q, b)
            if expected != res.weight:
                raise VerificationFailure(
                    f"bound met but common weight {res.weight} != {expected}")
    return res


# -- reports

def _frac(x: Fraction | None):
    return None if x is None else {"num": x.numerator, "den": x.denominator}


@dataclass
class BRecord:
    b: int
    measured_db: int
    ntheta: Fraction
    weight_distribution: dict[int, int]
    equi_b_distance: bool
    predicted_db: int | None = None
    bound_rhs: Fraction | None = None
    meets_bound_with_equality: bool | None = None
    n_beta_closed_form_ok: bool | None = None
    remark1_ok: bool | None = None
    witness: int | None = None

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "measured_db": self.measured_db,
            "predicted_db": self.predicted_db,
            "ntheta": _frac(self.ntheta),
            "bound_rhs": _frac(self.bound_rhs),
            "meets_bound_with_equality": self.meets_bound_with_equality,
            "equi_b_distance": self.equi_b_distance,
            "n_beta_closed_form_ok": self.n_beta_closed_form_ok,
            "remark1_ok": self.remark1_ok,
            "weight_distribution": [[w, c] for w, c in self.weight_distribution.items()],
            "witness": self.witness,
        }


@dataclass
class Failure:
    claim: str
    b: int | None
    witness: int | None
    message: str

    def to_dict(self) -> dict:
        return {"claim": self.claim, "b": self.b, "witness": self.witness,
                "message": self.message}


@dataclass
class VerificationReport:
    params: CodeParams
    variant: str
    length: int
    records: list[BRecord] = field(default_factory=list)
    checks: dict[str, bool | None] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def witness(self) -> int | None:
        return self.failures[0].witness if self.failures else None

    def record(self, b: int) -> BRecord:
        for r in self.records:
            if r.b == b:
                return r
        raise KeyError(b)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_ID,
            "version": SCHEMA_VERSION,
            "status": "passed" if self.passed else "failed",
            "params": self.params.as_dict(),
            "variant": self.variant,
            "length": self.length,
            "K": self.params.K,
            "checks": dict(self.checks),
            "records": [r.to_dict() for r in self.records],
            "failures": [f.to_dict() for f in self.failures],
            "witness": self.witness,
            "stats": dict(self.stats),
        }


def theorem_b_range(params: CodeParams, length: int) -> list[int]:
    return [b for b in range(2, params.s) if b <= length - 1]


def all_b_range(length: int) -> list[int]:
    return list(range(2, length))


def verify_construction(params: CodeParams, variant: str = FULL,
                        b_range=None, raise_on_failure: bool = True,
                        backend=None) -> VerificationReport:
    """Exhaustively check one construction and return a report.

    Construction invariants (size, linearity, cyclic or constacyclic closure,
    parity check, and for shortened codes the ``l``-scaling against the full
    code) are always checked.  Distance claims are made only when
    ``gcd(e, (Q-1)/(q-1)) == 1``; otherwise records carry measurements only.
    Failures name the smallest-discrete-log ``beta`` violating the claim.
    """
    code = Code(params, variant)
    L, K, q, s = code.length, params.K, params.q, params.s
    b_range = theorem_b_range(params, L) if b_range is None else sorted(set(b_range))
    for b in b_range:
        if not 2 <= b <= L - 1:
            raise WindowOutOfRange(f"b={b} outside [2, {L - 1}]")
    betas = code.betas()
    report = VerificationReport(params, variant, L)

    def fail(claim, b, idx, message):
        beta = None if idx is None else betas[idx]
        report.failures.append(Failure(claim, b, beta, message))
        log.debug("claim %s failed at b=%s beta=%s: %s", claim, b, beta, message)

    checks = report.checks
    checks["size_ok"] = len(code.word_set) == K
    if not checks["size_ok"]:
        fail("size", None, None, f"{len(code.word_set)} distinct codewords, expected {K}")
    bad = first_nonlinear(code)
    checks["linear_ok"] = bad is None
    if bad is not None:
        fail("linearity", None, betas.index(bad), "codeword map is not linear")
    bad = first_non_cyclic(code)
    if variant == FULL:
        checks["cyclic_ok"] = bad is None
        checks["constacyclic_ok"] = None
        if bad is not None:
            fail("cyclic", None, betas.index(bad), "rotation leaves the code")
        bad = first_parity_violation(code)
        checks["parity_check_ok"] = bad is None
        if bad is not None:
            fail("parity_check", None, betas.index(bad), "c(x)h(x) != 0 mod x^n - 1")
        checks["l_scaling_ok"] = None
    else:
        checks["cyclic_ok"] = None
        checks["constacyclic_ok"] = bad is None
        if bad is not None:
            fail("constacyclic", None, betas.index(bad), "delta-rotation leaves the code")
        checks["parity_check_ok"] = None
        full = Code(params, FULL)
        scaling_ok = True
        for b in b_range:
            wf = kernels.b_weights(full.matrix, b, backend=backend)
            ws = kernels.b_weights(code.matrix, b, backend=backend)
            idx = np.flatnonzero(wf != params.l * ws)
            if idx.size:
                scaling_ok = False
                fail("l_scaling", b, int(idx[0]), f"w_b(c) != {params.l} * w_b(c~)")
        checks["l_scaling_ok"] = scaling_ok if b_range else None

    applicable = params.theorem1_applicable
    predicted = params.predicted_db if variant == FULL else params.predicted_db_shortened
    divisor = params.e if variant == FULL else q - 1

    for b in b_range:
        w = kernels.b_weights(code.matrix, b, backend=backend)
        nz = w[1:]
        measured = int(nz.min())
        equi = _equi_from_weights(betas, w)
        rec = BRecord(
            b=b,
            measured_db=measured,
            ntheta=L * theta_b(q, b),
            weight_distribution=dict(sorted(Counter(w.tolist()).items())),
            equi_b_distance=equi.equidistant,
        )
        report.records.append(rec)
        if not applicable:
            continue

        rhs = plotkin_rhs(L, measured, q, b)
        rec.bound_rhs = rhs
        rec.meets_bound_with_equality = rhs is not None and rhs == K
        if rhs is not None and K > rhs:
            fail("plotkin_bound", b, None, f"K = {K} exceeds {rhs}")
        if rec.meets_bound_with_equality:
            if not equi.equidistant:
                fail("equality_implies_equidistance", b, betas.index(equi.witness[1]),
                     "bound met but codewords have different b-weights")
            elif equidistant_value(K, L, q, b) != measured:
                fail("equidistant_value", b, None,
                     f"common weight {measured} != {equidistant_value(K, L, q, b)}")

        if b <= s - 1:
            rec.predicted_db = predicted[b]
            off = np.flatnonzero(nz != rec.predicted_db)
            if off.size:
                rec.witness = betas[1 + int(off[0])]
                fail("predicted_distance", b, 1 + int(off[0]),
                     f"w_b = {int(nz[off[0]])}, predicted {rec.predicted_db}")
            if not rec.meets_bound_with_equality:
                fail("bound_equality", b, None, f"bound rhs {rhs} != K = {K}")
            if not equi.equidistant:
                fail("equidistance", b, betas.index(equi.witness[1]), "spectrum not constant")
            # zero windows per nonzero codeword
            closed = Fraction(params.Q - q**b, divisor * q**b)
            off = np.flatnonzero((L - nz) != closed)
            rec.n_beta_closed_form_ok = not off.size
            if off.size:
                rec.witness = rec.witness or betas[1 + int(off[0])]
                fail("zero_window_count", b, 1 + int(off[0]),
                     f"{L - int(nz[off[0]])} all-zero windows, closed form {closed}")
        else:
            off = np.flatnonzero(nz != L)
            rec.remark1_ok = not off.size
            if off.size:
                rec.witness = betas[1 + int(off[0])]
                fail("full_length_distance", b, 1 + int(off[0]),
                     f"w_b = {int(nz[off[0]])} < length {L} for b >= s")

    report.stats = {"codewords": K, "windows_scanned": K * L * len(b_range)}
    if raise_on_failure and report.failures:
        first = report.failures[0]
        raise VerificationFailure(
            f"{first.claim} (b={first.b}, beta={first.witness}): {first.message}", report)
    return report
