from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, strategies as st

from kirbybook.braid import PlatInput, parse_word
from kirbybook.kirby import initial_diagram
from kirbybook.openbook import extract
from kirbybook.pipeline import run
from kirbybook.verify import (audit, check_certificate, det, h1, round_trip,
                              smith_normal_form)

from oracles import determinantal_factors, snf_reference_examples


@pytest.mark.parametrize("m, factors", [([[-4]], (4,)), ([[0]], (0,))] + snf_reference_examples())
def test_snf_examples(m, factors):
    res = smith_normal_form(m)
    assert res.factors == factors
    assert check_certificate(m, res)


def test_snf_rectangular_and_empty():
    m = [[2, 4, 4], [-6, 6, 12]]
    res = smith_normal_form(m)
    assert res.factors == determinantal_factors([m])[0] == (2, 6)
    assert check_certificate(m, res)
    assert smith_normal_form(np.zeros((0, 0), dtype=int)).factors == ()


def test_snf_big_entries_stay_exact():
    big = 10**30
    m = [[big, 0], [0, 3 * big]]
    assert smith_normal_form(m).factors == (big, 3 * big)


matrices = st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


@given(matrices)
def test_snf_matches_determinantal_divisors(m):
    res = smith_normal_form(m)
    assert check_certificate(m, res)
    assert res.factors == determinantal_factors([m])[0]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
def test_det_matches_numpy(m):
    assert det(m) == round(np.linalg.det(np.array(m, dtype=float)))


def test_certificate_catches_bad_transform():
    m = [[2, 0], [0, 3]]
    res = smith_normal_form(m)
    assert res.factors == (1, 6)
    assert not check_certificate(m, replace(res, factors=(1, 5)))
    assert not check_certificate(m, replace(res, left=((2, 0), (0, 1))))


def test_h1_initial():
    assert h1(initial_diagram(PlatInput(parse_word("n=2"), 4))) == [4]
    assert h1(initial_diagram(PlatInput(parse_word("n=2"), 0))) == [0]
    assert h1(initial_diagram(PlatInput(parse_word("n=2"), 1))) == []


@pytest.mark.parametrize("text, p", [("n=2 a(1,2) a(2,3)^-2", 3), ("n=3 a(1,6)^-1", 7),
                                     ("n=1 a(1,2)^3", 2)])
def test_h1_endpoint_matches_input(text, p):
    d, _ = run(PlatInput(parse_word(text), p))
    assert h1(d) == [p]


def test_round_trip_empty():
    d = initial_diagram(PlatInput(parse_word("n=1"), 0))
    assert round_trip(d, ())


def test_round_trip_theorem2():
    inp = PlatInput(parse_word("n=2 a(1,3) a(2,4)^-1"), 4)
    d0 = initial_diagram(inp)
    d, trace = run(inp)
    report = round_trip(d0, trace, d)
    assert report.ok and report.divergence is None
    assert round_trip(d0, trace)


def _flip(move):
    return replace(move, eps=-move.eps)


def test_round_trip_detects_every_single_flip():
    inp = PlatInput(parse_word("n=2 a(1,3) a(2,4)^-1"), 5)
    d0 = initial_diagram(inp)
    d, trace = run(inp)
    for k in range(len(trace)):
        bad = trace[:k] + (_flip(trace[k]),) + trace[k + 1:]
        report = round_trip(d0, bad, d)
        assert not report.ok
        assert report.divergence == k
        if bad[k].cancels:
            # a flipped cancellation no longer fits even without the endpoint
            assert round_trip(d0, bad).divergence == k


def test_audit_passes_and_catches_deleted_twist():
    d, trace = run(PlatInput(parse_word("n=2 a(1,2)"), 4))
    ob = extract(d, trace)
    assert audit(ob, d).ok
    broken = replace(ob, monodromy=ob.monodromy[1:])
    report = audit(broken, d)
    assert not report.ok
    assert any("one twist per -1 unknot" in line and line.startswith("FAIL")
               for line in report.lines())
    negative = replace(ob, monodromy=(replace(ob.monodromy[0], sign=-1),) + ob.monodromy[1:])
    assert not audit(negative, d).ok
