"""
Planar open books read off a normalized diagram.

Every 0-framed unknot (U included when it is 0-framed) punctures the page
once and becomes a binding component; every -1-framed unknot (U included
when it is -1-framed) lies on the page and contributes one right-handed
Dehn twist.  The page is the disk bounded by U_K, or for L(p,1) the
boundary connected sum of that disk with the disk bounded by U.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import NotNormalized, UnplaceableCircle
from .kirby import U, BlowUp


@dataclass(frozen=True)
class Page:
    punctures: tuple[str, ...]
    connected_sum: bool = False

    genus = 0

    @property
    def euler_characteristic(self):
        return 1 - len(self.punctures)


@dataclass(frozen=True)
class Twist:
    """Right-handed Dehn twist about the curve enclosing ``curve``."""

    circle: str
    curve: tuple[str, ...]
    sign: int = 1


@dataclass(frozen=True)
class OpenBook:
    page: Page
    monodromy: tuple[Twist, ...]
    knot: tuple[str, ...]
    p: int

    def to_dict(self):
        return {
            "page": {"genus": self.page.genus, "punctures": list(self.page.punctures)},
            "monodromy": [{"curve": list(t.curve), "sign": t.sign} for t in self.monodromy],
            "knot": {"encloses": list(self.knot)},
            "manifold": {"p": self.p},
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _creation_order(d, trace):
    order = {U: -1}
    for k, move in enumerate(trace or ()):
        if isinstance(move, BlowUp):
            order[move.circle] = k
    fallback = {c.id: len(order) + k for k, c in enumerate(d.circles)}
    return lambda ref: order.get(ref, fallback.get(ref, 0))


def extract(d, trace=None):
    """Build the open book of a normalized endpoint diagram.

    Punctures are listed in the order their circles were created in
    ``trace`` (U first).
    """
    comps = (d.u,) + d.circles
    if d.pending:
        raise NotNormalized(f"K still has {len(d.pending)} pending syllables")
    bad = [c.id for c in comps if c.framing not in (0, -1)]
    if bad:
        raise NotNormalized(f"framings outside {{0, -1}}: {bad}")

    rank = _creation_order(d, trace)
    bindings = sorted((c.id for c in comps if c.framing == 0), key=rank)
    binding_set = set(bindings)
    by_id = {c.id: c for c in comps}

    twists = []
    for c in sorted((c for c in comps if c.framing == -1), key=lambda c: rank(c.id)):
        support = set()
        for ref, _ in c.framed_targets:
            if ref not in binding_set:
                raise UnplaceableCircle(f"{c.id} encircles {ref}, which is not a binding")
            support.add(ref)
        support.update(b for b in bindings if any(r == c.id for r, _ in by_id[b].targets))
        if c.id != U and c.strands:
            mine = set(c.strands)
            support.update(b for b in bindings
                           if b != U and by_id[b].strands and set(by_id[b].strands) <= mine)
        twists.append(Twist(c.id, tuple(sorted(support, key=rank))))

    knot = tuple(b for b in bindings if b == U or by_id[b].strands)
    page = Page(tuple(bindings), connected_sum=d.u.framing == -1)
    return OpenBook(page, tuple(twists), knot, d.p)


def euler_characteristic(b):
    return b.page.euler_characteristic


def _fmt(x):
    return f"{x:.1f}"


def render_svg(b, stages=()):
    """Schematic drawing: page disk, punctures, one ellipse per twist curve.

    ``stages`` is the move trace; a per-step move count is written as a
    caption.  Output is a pure function of the arguments.
    """
    gap = 40.0
    k = len(b.page.punctures)
    width = max(240.0, gap * (k + 2))
    height = 240.0 + 14.0 * len(b.monodromy)
    cx, cy = width / 2, 120.0
    xs = {ref: cx + gap * (i - (k - 1) / 2) for i, ref in enumerate(b.page.punctures)}

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<ellipse class="page" cx="{_fmt(cx)}" cy="{_fmt(cy)}" rx="{_fmt(width / 2 - 6)}" '
        f'ry="100.0" fill="#f4f4f4" stroke="black"/>',
    ]
    for ref, x in xs.items():
        out.append(f'<circle class="puncture" cx="{_fmt(x)}" cy="{_fmt(cy)}" r="6.0" '
                   f'fill="white" stroke="black"/>')
        out.append(f'<text x="{_fmt(x)}" y="{_fmt(cy + 22)}" font-size="10" '
                   f'text-anchor="middle">{escape(ref)}</text>')
    for i, t in enumerate(b.monodromy):
        ry = 14.0 + 4.0 * (i % 8)
        if t.curve:
            lo = min(xs[r] for r in t.curve)
            hi = max(xs[r] for r in t.curve)
            ex, rx = (lo + hi) / 2, (hi - lo) / 2 + 12.0 + 2.0 * (i % 8)
            ey = cy
        else:
            ex, rx, ey, ry = cx, 8.0, cy + 60.0 + 3.0 * (i % 6), 5.0
        out.append(f'<ellipse class="twist" data-circle="{escape(t.circle)}" cx="{_fmt(ex)}" '
                   f'cy="{_fmt(ey)}" rx="{_fmt(rx)}" ry="{_fmt(ry)}" fill="none" stroke="blue"/>')
    if b.knot:
        lo = min(xs[r] for r in b.knot)
        hi = max(xs[r] for r in b.knot)
        rx, ry = (hi - lo) / 2 + 30.0, 70.0
        kx = (lo + hi) / 2
    else:
        kx, rx, ry = cx, width / 2 - 20, 86.0
    out.append(f'<ellipse class="knot" cx="{_fmt(kx)}" cy="{_fmt(cy)}" rx="{_fmt(rx)}" '
               f'ry="{_fmt(ry)}" fill="none" stroke="red" stroke-dasharray="4 2"/>')

    counts = {}
    for move in stages:
        step = getattr(move, "step", "blow-down")
        counts[step] = counts.get(step, 0) + 1
    caption = "; ".join(f"{s}: {c}" for s, c in counts.items()) or "no moves"
    out.append(f'<text x="8.0" y="{_fmt(height - 10)}" font-size="10">'
               f'p={b.p}, punctures={k}, twists={len(b.monodromy)} ({escape(caption)})</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
