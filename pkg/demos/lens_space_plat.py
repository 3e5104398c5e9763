"""
A knot in L(5,1) given as a 4-plat
==================================

Walk through the L(p,1) program one stage at a time and read off the
planar open book at the end.
"""

from collections import Counter

from kirbybook import extract, h1, initial_diagram, linking_matrix, parse_input, run
from kirbybook.kirby import u_arc_linking
from kirbybook.pipeline import stage_framings

inp = parse_input("n=2 p=5 a(1,2) a(2,3)^-1 a(1,4)^-2 a(3,4)")
print(inp.manifold, "strands:", 2 * inp.n, "unit syllables:", len(inp.word.units()))

# U starts framed -p and passes around all n plat arcs
d0 = initial_diagram(inp)
print("U framing", d0.u.framing, "arcs around U", u_arc_linking(d0))

d, trace = run(inp)

# U's framing after the last move of each stage: -p + (2n-2), then -1
for step, framing in stage_framings(d0, trace).items():
    print(f"  after {step:<18} U framed {framing}")
print("moves per stage:", dict(Counter(m.step for m in trace)))

# blow-ups never change the manifold, so H1 stays Z/5
print("H1 before", h1(d0), "after", h1(d))
print(linking_matrix(d).matrix)

ob = extract(d, trace)
print("punctures:", len(ob.page.punctures), "euler characteristic:", ob.page.euler_characteristic)
for t in ob.monodromy:
    print(f"  +Dehn twist from {t.circle:>3} around {list(t.curve)}")
print("knot curve encloses", list(ob.knot))
