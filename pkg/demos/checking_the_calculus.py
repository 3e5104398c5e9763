"""
Checking the move calculus
==========================

The oracles that can falsify a pipeline run: Smith normal form with a
certificate, blow-down round trips, and detection of a corrupted trace.
"""

from dataclasses import replace

import numpy as np

from kirbybook import initial_diagram, parse_input, round_trip, run, smith_normal_form
from kirbybook.corpus import corpus
from kirbybook.errors import HypothesisViolated
from kirbybook.verify import check_certificate, h1

# Smith normal form keeps its unimodular transforms
m = np.array([[12, 6, 4], [3, 9, 6], [2, 16, 14]])
res = smith_normal_form(m)
print("factors", res.factors, "certificate ok:", check_certificate(m, res))

# blowing everything down again returns the starting diagram
inp = parse_input("n=2 p=4 a(1,3) a(2,4)^-1")
d0 = initial_diagram(inp)
d, trace = run(inp)
print("round trip:", round_trip(d0, trace, d).lines())

# flip the sign of one recorded blow-up: the round trip pinpoints it
bad = list(trace)
bad[3] = replace(bad[3], eps=-bad[3].eps)
report = round_trip(d0, tuple(bad), d)
print("corrupted trace ok?", report.ok, "first bad move:", report.divergence)

# p <= 2n-2 would need +1-framed leftovers, i.e. negative twists
try:
    run(parse_input("n=3 p=4"))
except HypothesisViolated as exc:
    print("refused:", exc)

# a small fuzz run: H1 of every endpoint matches the input manifold
hits = sum(h1(run(x)[0]) == ([] if x.p == 1 else [x.p]) for x in corpus(200, seed=1))
print(f"H1 preserved in {hits}/200 random cases")
