"""
Pure braided plat inputs.

A knot in L(p,1) (or S^1 x S^2 when p = 0) is given as a pure braid on
2n strands, written in the pure-braid generators A_ij (the full twist of
strands i and j), closed up as a shifted 2n-plat, together with the
surgery unknot U framed -p.

Concrete syntax, one token per whitespace-separated field::

    n=2 p=4 a(1,2) a(3,4)^-1 a(2,3)^2

Strands are numbered 1..2n from the left.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import MalformedSyllable, StrandOutOfRange, ZeroExponent

_SYLLABLE = re.compile(r"^a\((\d+),(\d+)\)(?:\^([+-]?\d+))?$")
_HEADER = re.compile(r"^([np])=(-?\d+)$")


@dataclass(frozen=True, order=True)
class Syllable:
    """The pure-braid generator A_ij raised to ``exp``."""

    i: int
    j: int
    exp: int = 1

    def __str__(self):
        if self.exp == 1:
            return f"a({self.i},{self.j})"
        return f"a({self.i},{self.j})^{self.exp}"

    @property
    def sign(self):
        return 1 if self.exp > 0 else -1

    def check(self, n):
        if self.exp == 0:
            raise ZeroExponent(f"{self.i},{self.j}: exponent must be nonzero")
        if not 1 <= self.i < self.j <= 2 * n:
            raise StrandOutOfRange(
                f"a({self.i},{self.j}) needs 1 <= i < j <= {2 * n}")


@dataclass(frozen=True)
class PureBraidWord:
    n: int
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise StrandOutOfRange(f"n must be positive, got {self.n}")
        object.__setattr__(self, "syllables", tuple(self.syllables))
        for s in self.syllables:
            s.check(self.n)

    @property
    def strands(self):
        return 2 * self.n

    def __len__(self):
        return len(self.syllables)

    def units(self):
        """Expand every syllable into |exp| unit syllables, order kept."""
        out = []
        for s in self.syllables:
            out.extend([Syllable(s.i, s.j, s.sign)] * abs(s.exp))
        return tuple(out)


def plat_caps(n):
    """Top and bottom caps of the shifted 2n-plat.

    Top caps join (1,2),(3,4),...,(2n-1,2n).  Bottom caps join
    (2,3),...,(2n-2,2n-1) and the closure arc (2n,1); for n = 1 the
    closure arc is the only bottom cap.
    """
    top = [(2 * k - 1, 2 * k) for k in range(1, n + 1)]
    bottom = [(2 * k, 2 * k + 1) for k in range(1, n)] + [(2 * n, 1)]
    return top, bottom


def plat_components(n):
    """Partition of strands 1..2n into closed-up components.

    The braid is pure, so each strand returns to its own position and the
    components only depend on the caps.
    """
    parent = list(range(2 * n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    top, bottom = plat_caps(n)
    for a, b in top + bottom:
        parent[find(a)] = find(b)
    groups = {}
    for s in range(1, 2 * n + 1):
        groups.setdefault(find(s), []).append(s)
    return tuple(sorted(tuple(g) for g in groups.values()))


@dataclass(frozen=True)
class PlatInput:
    word: PureBraidWord
    p: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError(f"p must be non-negative, got {self.p}")

    @property
    def n(self):
        return self.word.n

    @property
    def components(self):
        return plat_components(self.word.n)

    @property
    def manifold(self):
        return "S1xS2" if self.p == 0 else f"L({self.p},1)"


def _parse_syllable(token):
    m = _SYLLABLE.match(token)
    if m is None:
        raise MalformedSyllable(f"cannot parse syllable {token!r}")
    i, j = int(m.group(1)), int(m.group(2))
    exp = int(m.group(3)) if m.group(3) is not None else 1
    return Syllable(i, j, exp)


def _parse(text, want_p):
    tokens = text.split()
    header = {}
    while tokens and _HEADER.match(tokens[0]):
        key, value = _HEADER.match(tokens.pop(0)).groups()
        if key in header:
            raise MalformedSyllable(f"duplicate header {key}=")
        header[key] = int(value)
    if "n" not in header:
        raise MalformedSyllable("missing header n=<int>")
    if want_p and "p" not in header:
        raise MalformedSyllable("missing header p=<int>")
    if not want_p and "p" in header:
        raise MalformedSyllable("unexpected header p= in a bare braid word")
    word = PureBraidWord(header["n"], tuple(_parse_syllable(t) for t in tokens))
    return word, header.get("p")


def parse_word(text):
    """Parse ``n=<int>`` followed by syllables ``a(i,j)^k``.

    >>> parse_word("n=2 a(1,2) a(3,4)^-1").syllables
    (Syllable(i=1, j=2, exp=1), Syllable(i=3, j=4, exp=-1))
    """
    return _parse(text, want_p=False)[0]


def render_word(word):
    return " ".join([f"n={word.n}"] + [str(s) for s in word.syllables])


def parse_input(text):
    """Parse the input file format: ``n=<int> p=<int>`` then syllables."""
    word, p = _parse(text, want_p=True)
    return PlatInput(word, p)


def render_input(inp):
    head = f"n={inp.n} p={inp.p}"
    body = " ".join(str(s) for s in inp.word.syllables)
    return f"{head} {body}".rstrip() + "\n"


def u_decomposition(n):
    """Position of the surgery unknot relative to the plat strands.

    U runs once around all 2n strands (the braid-axis picture).  Read as an
    extra strand 0, that circle is the product A_01 A_02 ... A_0,2n of pair
    generators, so each entry of the result is a strand encircled once with
    algebraic linking +1.
    """
    if n < 1:
        raise StrandOutOfRange(f"n must be positive, got {n}")
    return tuple((k, 1) for k in range(1, 2 * n + 1))


def initial_diagram(inp):
    """The mixed diagram of K and U before any move."""
    from .kirby import initial_diagram as _initial

    return _initial(inp)
