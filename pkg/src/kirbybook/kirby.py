"""
Mixed surgery diagrams and the blow-up / blow-down calculus.

Diagrams are combinatorial: every surgery component is an unknot recorded
by its integer framing and the list of things it encircles once (strands
of K, U, or other circles).  Nothing is stored about planar position.

Conventions used throughout:

* strands point up and circles run counterclockwise, so encircling a
  target once means algebraic linking +1 unless the target is listed
  with sign -1;
* blowing up with an eps-framed circle inserts an eps full twist on what
  it encircles and adds eps * l**2 to the framing of every framed target
  (l = linking with the new circle), plus eps * l_a * l_b to the linking of
  each pair of framed targets; blowing down undoes exactly that.

Identifiers: ``"U"`` for the surgery unknot, ``"c<k>"`` for added circles,
``"s<k>"`` for strand k of K.
"""
from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass

import numpy as np

from .braid import PlatInput, Syllable, plat_caps, plat_components, u_decomposition
from .errors import (
    NoPendingSyllable,
    NonUnitExponent,
    NotUnitFramed,
    OrphanedNesting,
    TraceMismatch,
    UnknownTarget,
    WrongFraming,
)

U = "U"


class Kind(enum.Enum):
    KNOT = "knot"
    SURGERY_U = "surgery-u"
    BLOWUP = "blow-up"


def strand(k):
    return f"s{k}"


@functools.lru_cache(maxsize=4096)
def strand_index(ref):
    """Strand number of ``"s<k>"``, else None."""
    if ref.startswith("s") and ref[1:].isdigit():
        return int(ref[1:])
    return None


def _normalize_targets(targets):
    out = []
    for t in targets:
        ref, sign = (t, 1) if not isinstance(t, tuple) else t
        if isinstance(ref, int):
            ref = strand(ref)
        if sign not in (1, -1):
            raise UnknownTarget(f"target sign must be +1 or -1, got {sign}")
        out.append((ref, sign))
    return tuple(out)


@dataclass(frozen=True)
class Circle:
    """A framed unknot: U itself or a blow-up circle.

    ``cancels`` / ``unclasps`` remember which pending syllable of K, or which
    clasp of U around a strand, the circle's inserted twist absorbed, so
    that blowing it down can put the twist back.
    """

    id: str
    framing: int
    targets: tuple[tuple[str, int], ...] = ()
    cancels: Syllable | None = None
    unclasps: int | None = None

    @property
    def kind(self):
        return Kind.SURGERY_U if self.id == U else Kind.BLOWUP

    @property
    def strands(self):
        return tuple(strand_index(r) for r, _ in self.targets if strand_index(r))

    @property
    def framed_targets(self):
        return tuple((r, s) for r, s in self.targets if strand_index(r) is None)


@dataclass(frozen=True)
class MixedDiagram:
    """K (as plat strands), U, the added circles and K's pending braid word.

    ``u.targets`` lists the strands U still clasps.  ``twists`` holds full
    twists inserted on strands by blow-ups that did not cancel anything;
    ``induced`` holds linking numbers between framed components created by
    blow-ups that encircled more than one of them.
    """

    n: int
    p: int
    u: Circle
    circles: tuple[Circle, ...] = ()
    pending: tuple[Syllable, ...] = ()
    twists: tuple[tuple[str, tuple[int, ...], int], ...] = ()
    induced: tuple[tuple[str, str, int], ...] = ()

    @property
    def knot(self):
        return plat_components(self.n)

    def ids(self):
        return (U,) + tuple(c.id for c in self.circles)

    def component(self, ref):
        if ref == U:
            return self.u
        for c in self.circles:
            if c.id == ref:
                return c
        raise UnknownTarget(f"no component {ref!r} in diagram")

    def framing(self, ref):
        return self.component(ref).framing

    def has(self, ref):
        k = strand_index(ref)
        if k is not None:
            return 1 <= k <= 2 * self.n
        return ref == U or any(c.id == ref for c in self.circles)

    def framings(self):
        return {ref: self.framing(ref) for ref in self.ids()}


def initial_diagram(inp: PlatInput) -> MixedDiagram:
    u = Circle(U, -inp.p, tuple((strand(k), s) for k, s in u_decomposition(inp.n)))
    return MixedDiagram(inp.n, inp.p, u, pending=inp.word.units())


def u_arc_linking(d):
    """Number of plat arcs (bottom caps) that U still passes around.

    Starts at n with U around every strand; once U only clasps strands 1
    and 2n it runs around the single closure arc and links K once.
    """
    clasped = set(d.u.strands)
    _, bottom = plat_caps(d.n)
    return sum(1 for a, b in bottom if a in clasped or b in clasped)


# -- moves -----------------------------------------------------------------

@dataclass(frozen=True)
class BlowUp:
    circle: str
    eps: int
    targets: tuple[tuple[str, int], ...]
    step: str = "manual"
    cancels: str | None = None  # "K" or "U"


@dataclass(frozen=True)
class BlowDown:
    circle: str


def next_circle_id(d):
    used = {c.id for c in d.circles}
    k = 1
    while f"c{k}" in used:
        k += 1
    return f"c{k}"


def _reframe(c, deltas):
    delta = deltas.get(c.id)
    if not delta:
        return c
    return Circle(c.id, c.framing + delta, c.targets, c.cancels, c.unclasps)


def _induced_add(induced, pairs):
    table = {(a, b): v for a, b, v in induced}
    for a, b, v in pairs:
        key = (a, b) if a < b else (b, a)
        table[key] = table.get(key, 0) + v
    return tuple(sorted((a, b, v) for (a, b), v in table.items() if v))


def _framed_pairs(framed, eps, sign=1):
    out = []
    for x in range(len(framed)):
        for y in range(x + 1, len(framed)):
            (a, la), (b, lb) = framed[x], framed[y]
            out.append((a, b, sign * eps * la * lb))
    return out


def _apply_blow_up(d, m):
    if m.eps not in (1, -1):
        raise NotUnitFramed(f"blow-up framing must be +1 or -1, got {m.eps}", m.step)
    expected = next_circle_id(d)
    if m.circle != expected:
        raise TraceMismatch(f"expected new circle {expected}, move says {m.circle}", m.step)
    refs = [r for r, _ in m.targets]
    if len(set(refs)) != len(refs):
        raise UnknownTarget(f"repeated target in {refs}", m.step)
    for r in refs:
        if not d.has(r):
            raise UnknownTarget(f"no target {r!r} in diagram", m.step)
    probe = Circle(m.circle, m.eps, m.targets)
    strands = probe.strands
    cancels = unclasps = None
    u_targets, pending, twists = d.u.targets, d.pending, d.twists

    if m.cancels == "K":
        if not pending:
            raise NoPendingSyllable("no pending syllable left to cancel", m.step)
        cancels = pending[0]
        if abs(cancels.exp) != 1:
            raise NonUnitExponent(f"{cancels} is not a unit syllable", m.step)
        want = sorted([(strand(cancels.i), 1), (strand(cancels.j), 1)])
        if sorted(m.targets) != want or m.eps != -cancels.sign:
            raise TraceMismatch(f"move does not cancel pending {cancels}", m.step)
        pending = pending[1:]
    elif m.cancels == "U":
        if len(strands) != 1 or (U, 1) not in m.targets or len(m.targets) != 2:
            raise TraceMismatch("an unclasp must encircle U and one strand", m.step)
        if m.eps != 1:
            raise TraceMismatch("unclasp circles are +1-framed", m.step)
        unclasps = strands[0]
        if unclasps not in d.u.strands:
            raise TraceMismatch(f"U does not clasp strand {unclasps}", m.step)
        u_targets = tuple(t for t in u_targets if t[0] != strand(unclasps))
    elif m.cancels is not None:
        raise TraceMismatch(f"unknown cancel kind {m.cancels!r}", m.step)
    elif strands:
        twists = twists + ((m.circle, strands, m.eps),)

    framed = probe.framed_targets
    deltas = {ref: m.eps * sign * sign for ref, sign in framed}
    u = _reframe(d.u, deltas)
    if u_targets is not d.u.targets:
        u = Circle(U, u.framing, u_targets)
    circles = d.circles
    if deltas.keys() - {U}:
        circles = tuple(_reframe(c, deltas) for c in circles)
    circles += (Circle(m.circle, m.eps, m.targets, cancels, unclasps),)
    induced = _induced_add(d.induced, _framed_pairs(framed, m.eps)) if len(framed) > 1 else d.induced
    return MixedDiagram(d.n, d.p, u, circles, pending, twists, induced)


def _apply_blow_down(d, m):
    c = d.component(m.circle)
    if c.kind is Kind.SURGERY_U:
        raise NotUnitFramed("U is not a blow-up circle")
    eps = c.framing
    if eps not in (1, -1):
        raise NotUnitFramed(f"{c.id} has framing {eps}, not +1 or -1")
    for other in (d.u,) + d.circles:
        if any(r == c.id for r, _ in other.targets):
            raise OrphanedNesting(f"{other.id} still encircles {c.id}")
    if any(c.id in (a, b) for a, b, _ in d.induced):
        raise OrphanedNesting(f"{c.id} carries induced linking")

    framed = c.framed_targets
    deltas = {ref: -eps * sign * sign for ref, sign in framed}
    u = _reframe(d.u, deltas)
    if c.unclasps is not None:
        targets = u.targets + ((strand(c.unclasps), 1),)
        u = Circle(U, u.framing, tuple(sorted(targets, key=lambda t: strand_index(t[0]))))
    circles = tuple(_reframe(x, deltas) for x in d.circles if x.id != c.id)
    pending = d.pending if c.cancels is None else (c.cancels,) + d.pending
    twists = tuple(t for t in d.twists if t[0] != c.id)
    induced = _induced_add(d.induced, _framed_pairs(framed, eps, -1))
    return MixedDiagram(d.n, d.p, u, circles, pending, twists, induced)


def apply_move(d, move):
    if isinstance(move, BlowUp):
        return _apply_blow_up(d, move)
    if isinstance(move, BlowDown):
        return _apply_blow_down(d, move)
    raise TypeError(f"not a move: {move!r}")


def replay(d0, trace):
    d = d0
    for move in trace:
        d = apply_move(d, move)
    return d


# -- the named operations --------------------------------------------------

def blow_up_move(d, targets, eps, step="manual"):
    return BlowUp(next_circle_id(d), eps, _normalize_targets(targets), step)


def cancel_move(d, s=None, step="unknot"):
    if not d.pending:
        raise NoPendingSyllable("no pending syllable left to cancel", step)
    head = d.pending[0]
    if s is not None:
        if abs(s.exp) != 1:
            raise NonUnitExponent(f"{s} is not a unit syllable", step)
        if s != head:
            raise TraceMismatch(f"{s} is not the next pending syllable {head}", step)
    targets = ((strand(head.i), 1), (strand(head.j), 1))
    return BlowUp(next_circle_id(d), -head.sign, targets, step, cancels="K")


def unclasp_move(d, k, step="unclasp"):
    return BlowUp(next_circle_id(d), 1, ((U, 1), (strand(k), 1)), step, cancels="U")


def meridian_move(d, c, step="neutralize"):
    if d.framing(c) != 1:
        raise WrongFraming(f"{c} has framing {d.framing(c)}, expected +1", step)
    return BlowUp(next_circle_id(d), -1, ((c, 1),), step)


def blow_up(d, targets, eps, step="manual"):
    """Add an eps-framed unknot encircling each of ``targets`` once."""
    return apply_move(d, blow_up_move(d, targets, eps, step))


def blow_down(d, c):
    return apply_move(d, BlowDown(c))


def cancel_syllable(d, s=None, step="unknot"):
    """Cancel the next pending unit syllable of K with a circle framed -sign."""
    return apply_move(d, cancel_move(d, s, step))


def unclasp(d, k, step="unclasp"):
    """Undo U's clasp around strand k with a +1 circle around U and the strand."""
    return apply_move(d, unclasp_move(d, k, step))


def meridian_zero(d, c, step="neutralize"):
    """Drive a +1 circle to framing 0 by a -1 meridian around it."""
    return apply_move(d, meridian_move(d, c, step))


class Tracer:
    """Applies moves while keeping the trace that produced the diagram."""

    def __init__(self, d):
        self.initial = d
        self.diagram = d
        self.moves = []

    @property
    def trace(self):
        return tuple(self.moves)

    def apply(self, move):
        self.diagram = apply_move(self.diagram, move)
        self.moves.append(move)
        return move

    def blow_up(self, targets, eps, step="manual"):
        return self.apply(blow_up_move(self.diagram, targets, eps, step))

    def blow_down(self, c):
        return self.apply(BlowDown(c))

    def cancel_syllable(self, step="unknot"):
        return self.apply(cancel_move(self.diagram, None, step))

    def unclasp(self, k, step="unclasp"):
        return self.apply(unclasp_move(self.diagram, k, step))

    def meridian_zero(self, c, step="neutralize"):
        return self.apply(meridian_move(self.diagram, c, step))


# -- linking matrix --------------------------------------------------------

@dataclass(frozen=True)
class LinkingMatrix:
    labels: tuple[str, ...]
    matrix: np.ndarray

    def __eq__(self, other):
        return (isinstance(other, LinkingMatrix) and self.labels == other.labels
                and np.array_equal(self.matrix, other.matrix))

    def tolist(self):
        return self.matrix.tolist()


def linking_matrix(d):
    """Framings on the diagonal, algebraic linking numbers off it; K excluded."""
    labels = d.ids()
    index = {ref: k for k, ref in enumerate(labels)}
    m = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for ref in labels:
        c = d.component(ref)
        m[index[ref], index[ref]] = c.framing
        for t, sign in c.framed_targets:
            m[index[ref], index[t]] += sign
            m[index[t], index[ref]] += sign
    for a, b, v in d.induced:
        m[index[a], index[b]] += v
        m[index[b], index[a]] += v
    return LinkingMatrix(labels, m)


# -- trace serialization ---------------------------------------------------

_BU = re.compile(r"^BU (\S+) e=([+-]1) targets=\[([^\]]*)\] step=(\S+)(?: cancels=([KU]))?$")
_BD = re.compile(r"^BD (\S+)$")


def _target_str(ref, sign):
    return ref if sign == 1 else f"-{ref}"


def format_move(m):
    if isinstance(m, BlowDown):
        return f"BD {m.circle}"
    targets = ",".join(_target_str(r, s) for r, s in m.targets)
    line = f"BU {m.circle} e={m.eps:+d} targets=[{targets}] step={m.step}"
    if m.cancels:
        line += f" cancels={m.cancels}"
    return line


def parse_move(line):
    line = line.strip()
    if (mm := _BD.match(line)) is not None:
        return BlowDown(mm.group(1))
    mm = _BU.match(line)
    if mm is None:
        raise TraceMismatch(f"cannot parse trace line {line!r}")
    targets = []
    for tok in filter(None, (t.strip() for t in mm.group(3).split(","))):
        targets.append((tok[1:], -1) if tok.startswith("-") else (tok, 1))
    return BlowUp(mm.group(1), int(mm.group(2)), tuple(targets), mm.group(4), mm.group(5))


def dump_trace(trace):
    return "".join(format_move(m) + "\n" for m in trace)


def load_trace(text):
    return tuple(parse_move(line) for line in text.splitlines() if line.strip())
