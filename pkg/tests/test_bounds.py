import dataclasses
import itertools
from fractions import Fraction

import jsonschema
import numpy as np
import pytest

from bsymbol.bounds import (
    b_weight_distribution,
    check_equi_b_distance,
    equidistant_value,
    min_b_distance,
    min_b_distance_pairwise,
    plotkin_rhs,
    theta_b,
    verify_construction,
)
from bsymbol.codes import Code, codeword, derive_params
from bsymbol.errors import VerificationFailure, WindowOutOfRange
from bsymbol.field import build_field
from bsymbol.metric import Word, pi_b
from bsymbol.search import load_schema, render


def oracle_min_distance(params, b, variant="full"):
    """Pairwise minimum over codewords computed by direct traces and
    materialized profiles; shares nothing with the kernel path."""
    L = params.n if variant == "full" else params.n_tilde
    profiles = [pi_b(codeword(params, beta).symbols[:L], b).tuples for beta in range(params.Q)]
    best = None
    for x, y in itertools.combinations(profiles, 2):
        d = sum(1 for u, v in zip(x, y) if u != v)
        best = d if best is None else min(best, d)
    return best


def test_theta():
    assert theta_b(2, 2) == Fraction(3, 4)
    assert theta_b(3, 2) == Fraction(8, 9)
    for q, b in itertools.product(range(2, 8), range(1, 6)):
        assert theta_b(q, b) < 1


def test_plotkin_rhs_examples():
    assert plotkin_rhs(15, 12, 2, 2) == 16  # 12 / (12 - 45/4)
    assert plotkin_rhs(13, 12, 3, 2) == 27  # 12 / (4/9)
    assert plotkin_rhs(15, 11, 2, 2) is None  # 44/4 < 45/4
    assert plotkin_rhs(4, 3, 2, 2) is None  # d == n theta exactly
    assert plotkin_rhs(31, 30, 5, 2) == 125  # 30 / (6/25)
    assert isinstance(plotkin_rhs(15, 12, 2, 2), Fraction)


def test_equidistant_value():
    assert equidistant_value(16, 15, 2, 2) == 12
    assert equidistant_value(125, 31, 5, 2) == 30


@pytest.mark.parametrize("args,b,expected", [((2, 1, 4, 1), 2, 12), ((3, 1, 3, 2), 2, 12),
                                             ((2, 1, 4, 1), 4, 15), ((2, 1, 4, 1), 3, 14)])
def test_min_b_distance(args, b, expected, backend):
    P = derive_params(*args)
    assert oracle_min_distance(P, b) == expected
    assert min_b_distance(Code(P), b, backend=backend) == expected


@pytest.mark.parametrize("args,variant", [((2, 1, 4, 1), "full"), ((3, 1, 2, 2), "full"),
                                          ((2, 2, 3, 3), "shortened"), ((2, 1, 5, 1), "full"),
                                          ((2, 1, 6, 3), "full")])
def test_linear_shortcut_matches_pairwise(args, variant):
    code = Code(derive_params(*args), variant)
    assert code.size <= 64
    for b in range(1, min(code.length, 6)):
        assert min_b_distance(code, b) == min_b_distance_pairwise(code, b)


def test_weight_distribution(code_2_4_1, code_3_3_2):
    assert b_weight_distribution(code_2_4_1, 2) == {0: 1, 12: 15}
    assert b_weight_distribution(code_3_3_2, 2) == {0: 1, 12: 26}
    for code in (code_2_4_1, code_3_3_2):
        for b in range(1, code.length):
            dist = b_weight_distribution(code, b)
            assert sum(dist.values()) == code.size
            assert dist[0] == 1
            assert min(w for w in dist if w) == min_b_distance(code, b)


def test_equidistance(code_2_4_1, code_5_3_2_short):
    res = check_equi_b_distance(code_2_4_1, 2)
    assert res.equidistant and res.weight == 12 and res.witness is None
    assert Fraction(12) == Fraction(16) * Fraction(45, 4) / 15
    res = check_equi_b_distance(code_5_3_2_short, 2)
    assert res.equidistant and res.weight == 30
    assert Fraction(30) == Fraction(125) * Fraction(744, 25) / 124


def test_equidistance_witness():
    code = Code(derive_params(2, 2, 3, 3), "shortened")  # gcd(e, n~) = 3
    res = check_equi_b_distance(code, 2)
    assert not res.equidistant
    a, b = res.witness
    wa = pi_b(code.codeword(a), 2).hamming_weight()
    wb = pi_b(code.codeword(b), 2).hamming_weight()
    assert wa != wb


def test_verify_gf16():
    P = derive_params(2, 1, 4, 1)
    rep = verify_construction(P, "full", [2, 3, 4])
    assert rep.passed
    assert {r.b: r.measured_db for r in rep.records} == {2: 12, 3: 14, 4: 15}
    for b in (2, 3):
        r = rep.record(b)
        assert r.predicted_db == r.measured_db
        assert r.bound_rhs == 16 and r.meets_bound_with_equality
        assert r.equi_b_distance and r.n_beta_closed_form_ok
    assert rep.record(4).remark1_ok
    assert all(v for v in rep.checks.values() if v is not None)


def test_verify_shortened():
    P = derive_params(5, 1, 3, 2)
    rep = verify_construction(P, "shortened", [2])
    r = rep.record(2)
    assert r.measured_db == 30
    assert r.bound_rhs == Fraction(30) / Fraction(6, 25) == 125
    assert rep.checks["constacyclic_ok"] and rep.checks["l_scaling_ok"]


def test_verify_open_case_is_measurement_only():
    P = derive_params(3, 1, 2, 2)
    rep = verify_construction(P, "full")  # theorem range is empty for s = 2
    assert rep.records == [] and rep.passed
    rep = verify_construction(P, "full", [2, 3])
    for r in rep.records:
        assert r.predicted_db is None and r.bound_rhs is None
        assert r.meets_bound_with_equality is None and r.remark1_ok is None
    assert rep.checks["linear_ok"] and rep.checks["cyclic_ok"] and rep.checks["size_ok"]


def test_verify_reports_first_witness():
    P = derive_params(2, 1, 4, 1)
    bad = dataclasses.replace(P, predicted_db={2: 13, 3: 14})
    with pytest.raises(VerificationFailure) as info:
        verify_construction(bad, "full", [2])
    rep = info.value.report
    assert not rep.passed
    first = rep.failures[0]
    assert first.claim == "predicted_distance" and first.b == 2
    assert first.witness == 1  # gamma^0, the smallest discrete log
    rep = verify_construction(bad, "full", [2, 3], raise_on_failure=False)
    assert not rep.passed and rep.record(3).predicted_db == 14


def test_verify_rejects_bad_b():
    with pytest.raises(WindowOutOfRange):
        verify_construction(derive_params(2, 1, 4, 1), "full", [15])


def test_report_json_validates():
    schema = load_schema()
    reps = [verify_construction(derive_params(2, 1, 4, 1), "full", range(2, 15)),
            verify_construction(derive_params(3, 1, 2, 2), "full", [2, 3])]
    bad = dataclasses.replace(derive_params(2, 1, 4, 1), predicted_db={2: 11, 3: 14})
    reps.append(verify_construction(bad, "full", [2], raise_on_failure=False))
    import json
    doc = json.loads(render(reps, "json"))
    jsonschema.validate(doc, schema)
    assert doc[2]["status"] == "failed" and doc[2]["witness"] == 1


# -- the bound itself on codes that were not built by the construction

def _random_codes(rng, count):
    for _ in range(count):
        q = int(rng.choice([2, 3]))
        F = build_field(q, 1)
        n = int(rng.integers(4, 9))
        K = int(rng.integers(2, 9))
        words = {tuple(int(v) for v in rng.integers(0, q, n)) for _ in range(K)}
        if len(words) >= 2:
            yield F, [Word(F, w) for w in words]


def test_bound_holds_on_random_codes():
    rng = np.random.default_rng(2024)
    applicable = 0
    for F, words in _random_codes(rng, 400):
        n, K = len(words[0]), len(words)
        for b in range(2, n):
            dists = [sum(1 for u, v in zip(pi_b(x, b).tuples, pi_b(y, b).tuples) if u != v)
                     for x, y in itertools.combinations(words, 2)]
            d = min(dists)
            rhs = plotkin_rhs(n, d, F.order, b)
            if rhs is None:
                continue
            applicable += 1
            assert K <= rhs
            if K == rhs:
                assert len(set(dists)) == 1
                assert d == equidistant_value(K, n, F.order, b)
    assert applicable > 50


def test_reports_identical_across_backends():
    from bsymbol import kernels
    P = derive_params(5, 1, 3, 2)
    docs = [render([verify_construction(P, "shortened", range(2, 31), backend=m)], "json")
            for m in kernels.available_backends()]
    assert all(d == docs[0] for d in docs)
