"""
A knot in S^1 x S^2 given as a 6-plat
=====================================

With p = 0 the unknot U ends up 0-framed, so it becomes a binding
component and every binding punctures the disk bounded by U_K.
"""

from pathlib import Path

from kirbybook import extract, parse_input, render_svg, run
from kirbybook.kirby import dump_trace

inp = parse_input("n=3 p=0 a(1,2)^-1 a(3,5) a(4,6)^-1 a(2,6)^-1 a(1,3)")
d, trace = run(inp)

print(dump_trace(trace))

ob = extract(d, trace)
print("page: disk with", len(ob.page.punctures), "punctures")
print("twists:", len(ob.monodromy), "all positive:", all(t.sign == 1 for t in ob.monodromy))
print("U is a binding:", "U" in ob.page.punctures)
print("knot encloses every puncture:", set(ob.knot) == set(ob.page.punctures))

out = Path(__file__).with_suffix(".svg")
out.write_text(render_svg(ob, trace))
print("wrote", out)
