"""Exit criteria.  Each test records one PASS/FAIL line in the terminal summary."""
import time
from dataclasses import replace

import numpy as np
import pytest

from kirbybook.braid import PlatInput, PureBraidWord
from kirbybook.corpus import corpus
from kirbybook.errors import HypothesisViolated
from kirbybook.kirby import initial_diagram, linking_matrix
from kirbybook.openbook import extract
from kirbybook.pipeline import run, stage_framings, theorem2
from kirbybook.verify import audit, check_certificate, h1, round_trip, smith_normal_form

from oracles import determinantal_factors

CORPUS_SIZE = 1000
SNF_SAMPLES = 10_000


def empty(n, p):
    return PlatInput(PureBraidWord(n), p)


@pytest.fixture(scope="module")
def fuzzed():
    start = time.perf_counter()
    cases = []
    for inp in corpus(CORPUS_SIZE, seed=20240611):
        d0 = initial_diagram(inp)
        d, trace = run(inp)
        cases.append((inp, d0, d, trace, extract(d, trace)))
    return cases, time.perf_counter() - start


def test_1_framing_ladder(criterion):
    criterion("1 framing ladder: -p+(2n-2) after unclasping, -1 at the end, < 1 ms/case")
    worst = 0.0
    for n in range(1, 5):
        for p in range(2 * n - 1, 13):
            inp = empty(n, p)
            times = []
            for _ in range(5):
                t0 = time.perf_counter()
                d, trace = theorem2(inp)
                times.append(time.perf_counter() - t0)
            worst = max(worst, min(times))
            stages = stage_framings(initial_diagram(inp), trace)
            assert stages.get("unclasp", -p) == -p + (2 * n - 2)
            assert sum(1 for m in trace if m.step == "frame-u") == p - 2 * n + 1
            assert d.u.framing == -1
    assert worst < 1e-3, f"slowest case {worst * 1e3:.3f} ms"


def test_2_hypothesis_guard(criterion):
    criterion("2 hypothesis guard: p <= 2n-2 raises HypothesisViolated")
    for n in range(1, 6):
        for p in range(1, 2 * n - 1):
            with pytest.raises(HypothesisViolated):
                theorem2(empty(n, p))
            with pytest.raises(HypothesisViolated):
                run(PlatInput(PureBraidWord(n, ()), p))


def test_3_positivity_and_planarity(fuzzed, criterion):
    criterion(f"3 positivity/planarity over {CORPUS_SIZE} fuzzed inputs in < 60 s")
    cases, elapsed = fuzzed
    assert len(cases) >= 1000
    assert {inp.p == 0 for inp, *_ in cases} == {True, False}
    for inp, _, d, _, ob in cases:
        assert ob.page.genus == 0
        assert all(t.sign == 1 for t in ob.monodromy)
        report = audit(ob, d)
        assert report.ok, report.lines()
    assert elapsed < 60, f"{elapsed:.1f} s"


def test_4_h1_oracle(fuzzed, criterion):
    criterion(f"4 H1 = Z/p (Z for p=0) on corpus; SNF = determinantal divisors on {SNF_SAMPLES} samples")
    cases, _ = fuzzed
    for inp, _, d, _, _ in cases:
        m = linking_matrix(d).matrix
        res = smith_normal_form(m)
        assert check_certificate(m, res)
        # Z/1 is trivial, so compare non-unit factors on both sides
        assert [f for f in res.factors if f != 1] == [f for f in [inp.p] if f != 1]
        assert h1(d) == ([] if inp.p == 1 else [inp.p])

    rng = np.random.default_rng(7)
    shapes = [(r, c) for r in range(1, 7) for c in range(1, 7)]
    picks = rng.integers(0, len(shapes), size=SNF_SAMPLES)
    checked = 0
    for idx in range(len(shapes)):
        r, c = shapes[idx]
        count = int((picks == idx).sum())
        batch = rng.integers(-3, 4, size=(count, r, c))
        expected = determinantal_factors(batch)
        for m, want in zip(batch, expected):
            res = smith_normal_form(m)
            assert check_certificate(m, res), m
            assert res.factors == want, m
            checked += 1
    assert checked == SNF_SAMPLES


def test_5_round_trip(fuzzed, criterion):
    criterion("5 round trip restores the initial diagram; every injected flip is caught")
    cases, _ = fuzzed
    rng = np.random.default_rng(99)
    faults = 0
    for inp, d0, d, trace, _ in cases:
        report = round_trip(d0, trace, d)
        assert report.ok, report.lines()
        if trace:
            k = int(rng.integers(0, len(trace)))
            bad = trace[:k] + (replace(trace[k], eps=-trace[k].eps),) + trace[k + 1:]
            report = round_trip(d0, bad, d)
            assert not report.ok and report.divergence == k
            faults += 1
    assert faults > 0


# Braid words of the two reference examples have not been transcribed;
# they stay None until they are.
EXAMPLE_WORDS = {
    "L(4,1), 4-plat": (2, 4, None, 7),
    "S1xS2, 6-plat": (3, 0, None, 9),
}


@pytest.mark.parametrize("name", list(EXAMPLE_WORDS))
def test_6_worked_examples(name, criterion):
    criterion(f"6 worked example {name}: page puncture count")
    n, p, word, punctures = EXAMPLE_WORDS[name]
    if word is None:
        pytest.fail(f"{name}: braid word not available as text; cannot check the "
                    f"{punctures}-puncture page")
    d, trace = run(PlatInput(PureBraidWord(n, word), p))
    ob = extract(d, trace)
    assert len(ob.page.punctures) == punctures
    assert ob.page.euler_characteristic == 1 - punctures
    assert all(t.sign == 1 for t in ob.monodromy)
