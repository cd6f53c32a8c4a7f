"""Parameter-grid sweeps and deterministic JSON/CSV report emission."""
from __future__ import annotations

import csv
import io
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .bounds import SCHEMA_ID, SCHEMA_VERSION, VerificationReport, all_b_range, \
    theorem_b_range, verify_construction
from .codes import FULL, VARIANTS, Code, derive_params
from .errors import BSymbolError

CSV_COLUMNS = [
    "p", "f", "q", "s", "Q", "e", "e_prime", "variant", "n", "K", "b",
    "measured_db", "predicted_db", "ntheta_num", "ntheta_den",
    "bound_rhs_num", "bound_rhs_den", "meets_equality", "equidistant",
    "remark1_ok", "constacyclic_ok",
]


@dataclass(frozen=True, order=True)
class Point:
    p: int
    f: int
    s: int
    e: int
    variant: str = FULL

    def as_dict(self) -> dict:
        return {"p": self.p, "f": self.f, "s": self.s, "e": self.e, "variant": self.variant}


@dataclass
class SearchGrid:
    """Cartesian grid over (p, f, s, e, variant), or an explicit point list.

    ``b`` is ``"theorem"`` (2..s-1), ``"all"`` (2..length-1) or a list of ints.
    """

    p: list[int] = field(default_factory=list)
    f: list[int] = field(default_factory=lambda: [1])
    s: list[int] = field(default_factory=list)
    e: list[int] = field(default_factory=lambda: [1])
    variants: list[str] = field(default_factory=lambda: [FULL])
    b: str | list[int] = "theorem"
    cap: int | None = None
    points: list[Point] | None = None

    def expand(self) -> list[Point]:
        if self.points is not None:
            pts = list(self.points)
        else:
            pts = [Point(*t) for t in itertools.product(self.p, self.f, self.s, self.e,
                                                        self.variants)]
        for pt in pts:
            if pt.variant not in VARIANTS:
                raise ValueError(f"unknown variant {pt.variant!r}")
        return sorted(set(pts), key=lambda pt: (pt.p, pt.f, pt.s, pt.e,
                                                VARIANTS.index(pt.variant)))

    @classmethod
    def from_dict(cls, doc: dict) -> SearchGrid:
        b = doc.get("b", "theorem")
        cap = doc.get("cap")
        if "points" in doc:
            pts = [Point(int(d["p"]), int(d.get("f", 1)), int(d["s"]), int(d.get("e", 1)),
                         d.get("variant", FULL)) for d in doc["points"]]
            return cls(b=b, cap=cap, points=pts)

        def ints(key, default):
            v = doc.get(key, default)
            return [int(x) for x in (v if isinstance(v, list) else [v])]

        variants = doc.get("variant", [FULL])
        if isinstance(variants, str):
            variants = [variants]
        return cls(p=ints("p", []), f=ints("f", 1), s=ints("s", []), e=ints("e", 1),
                   variants=list(variants), b=b, cap=cap)


@dataclass
class Skipped:
    point: Point
    reason: str

    passed = True

    def to_dict(self) -> dict:
        return {"schema": SCHEMA_ID, "version": SCHEMA_VERSION, "status": "skipped",
                "point": self.point.as_dict(), "reason": self.reason}


def resolve_b_range(policy, params, length: int) -> list[int]:
    if policy == "theorem":
        return theorem_b_range(params, length)
    if policy == "all":
        return all_b_range(length)
    bs = sorted({int(b) for b in policy})
    out = [b for b in bs if 2 <= b <= length - 1]
    if len(out) != len(bs):
        raise BSymbolError(f"b values {sorted(set(bs) - set(out))} outside [2, {length - 1}]")
    return out


def run_point(point: Point, b_policy="theorem", cap=None):
    """Verify one grid point; construction problems become a :class:`Skipped`."""
    try:
        params = derive_params(point.p, point.f, point.s, point.e, cap=cap)
        length = Code(params, point.variant).length
        b_range = resolve_b_range(b_policy, params, length)
    except BSymbolError as exc:
        return Skipped(point, f"{type(exc).__name__}: {exc}")
    return verify_construction(params, point.variant, b_range, raise_on_failure=False)


def _run_packed(args):
    return run_point(*args)


def run_search(grid: SearchGrid, jobs: int = 1) -> list:
    """One result per grid point, in grid order, whatever ``jobs`` is."""
    tasks = [(pt, grid.b, grid.cap) for pt in grid.expand()]
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_packed(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_packed, tasks))


def all_passed(results) -> bool:
    return all(r.passed for r in results)


# -- emission

def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def csv_rows(results):
    for r in results:
        if not isinstance(r, VerificationReport):
            continue
        P = r.params
        for rec in r.records:
            rhs = rec.bound_rhs
            yield [
                P.p, P.f, P.q, P.s, P.Q, P.e, P.e_prime, r.variant, r.length, P.K, rec.b,
                rec.measured_db, rec.predicted_db,
                rec.ntheta.numerator, rec.ntheta.denominator,
                None if rhs is None else rhs.numerator,
                None if rhs is None else rhs.denominator,
                rec.meets_bound_with_equality, rec.equi_b_distance,
                rec.remark1_ok, r.checks.get("constacyclic_ok"),
            ]


def render(results, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in results], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in csv_rows(results):
            w.writerow([_cell(v) for v in row])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def emit_report(results, fmt: str = "json", destination=None) -> None:
    """Write ``results`` to a path, a text stream, or stdout (``None``/``"-"``)."""
    text = render(results, fmt)
    if destination is None or destination == "-":
        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8")


def load_schema() -> dict:
    """JSON Schema for the document written by ``render(results, "json")``."""
    return json.loads((Path(__file__).parent / "report_schema.json").read_text(encoding="utf-8"))
