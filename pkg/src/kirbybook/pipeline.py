"""
Move programs that normalize a plat diagram.

Both programs end in a diagram whose added circles are framed 0 or -1, K
has no pending twists left (it is the unknot U_K), and U is framed 0
(S^1 x S^2) or -1 (L(p,1)).  Steps are tagged in the trace:

``unclasp``
    +1 circles freeing U from the inner strands 2..2n-1, after which U
    only runs around the closure arc and links K once.
``neutralize``
    -1 meridians taking each +1 circle to framing 0.
``restore-u``
    (S^1 x S^2 only) -1 circles around U bringing its framing back to 0.
``frame-u`` / ``neutralize-u``
    (L(p,1) only) p-2n+1 further +1 circles around U, framing it -1, and
    their meridians.
``unknot`` / ``unknot-neutralize``
    cancellation of K's unit syllables and of the +1 circles that leaves.
"""
from __future__ import annotations

from .errors import HypothesisViolated, PipelineInvariantViolated
from .kirby import U, Tracer, apply_move, initial_diagram, u_arc_linking


def _unknot(tracer):
    positives = []
    while tracer.diagram.pending:
        move = tracer.cancel_syllable(step="unknot")
        if move.eps == 1:
            positives.append(move.circle)
    for c in positives:
        tracer.meridian_zero(c, step="unknot-neutralize")
    return tracer.diagram


def unknot_k(d):
    """Cancel every pending syllable of K, then neutralize the +1 circles."""
    return _unknot(Tracer(d))


def _unclasp_inner(tracer):
    n = tracer.diagram.n
    added = [tracer.unclasp(k).circle for k in range(2, 2 * n)]
    for c in added:
        tracer.meridian_zero(c)
    return added


def _check_endpoint(d, u_framing):
    if d.pending:
        raise PipelineInvariantViolated(f"{len(d.pending)} syllables of K left")
    if d.u.framing != u_framing:
        raise PipelineInvariantViolated(f"U framed {d.u.framing}, expected {u_framing}")
    bad = [c.id for c in d.circles if c.framing not in (0, -1)]
    if bad:
        raise PipelineInvariantViolated(f"circles not framed 0 or -1: {bad}")
    if u_arc_linking(d) != 1:
        raise PipelineInvariantViolated("U does not link U_K exactly once")


def theorem1(inp):
    """Normalize a knot in S^1 x S^2 (p = 0); returns (diagram, trace)."""
    if inp.p != 0:
        raise HypothesisViolated(f"the S^1 x S^2 program needs p = 0, got p = {inp.p}")
    tracer = Tracer(initial_diagram(inp))
    _unclasp_inner(tracer)
    for _ in range(tracer.diagram.u.framing):
        tracer.blow_up([U], -1, step="restore-u")
    _unknot(tracer)
    d = tracer.diagram
    _check_endpoint(d, 0)
    for c in d.circles:
        if c.framing == 0 and not c.strands:
            raise PipelineInvariantViolated(f"binding {c.id} does not puncture the disk of U_K")
    return d, tracer.trace


def theorem2(inp):
    """Normalize a knot in L(p,1) when p > 2n - 2; returns (diagram, trace)."""
    n, p = inp.n, inp.p
    if p <= 2 * n - 2:
        raise HypothesisViolated(
            f"L({p},1) with a {2 * n}-plat needs p > 2n-2 = {2 * n - 2}; framing U "
            f"to -1 would leave +1 circles, i.e. negative Dehn twists in the monodromy")
    tracer = Tracer(initial_diagram(inp))
    _unclasp_inner(tracer)
    if tracer.diagram.u.framing != -p + 2 * n - 2:
        raise PipelineInvariantViolated("unclasp ladder framing drift", "unclasp")
    added = [tracer.blow_up([U], 1, step="frame-u").circle for _ in range(p - 2 * n + 1)]
    for c in added:
        tracer.meridian_zero(c, step="neutralize-u")
    _unknot(tracer)
    d = tracer.diagram
    _check_endpoint(d, -1)
    return d, tracer.trace


def run(inp):
    if inp.p == 0:
        return theorem1(inp)
    return theorem2(inp)


def stage_framings(d0, trace):
    """Framing of U after the last move of each step tag, in step order."""
    out = {}
    d = d0
    for move in trace:
        d = apply_move(d, move)
        out[getattr(move, "step", "blow-down")] = d.u.framing
    return out
