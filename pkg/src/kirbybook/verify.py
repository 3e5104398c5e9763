"""
Independent checks on pipeline output.

Everything here runs on exact Python integers.  The Smith normal form
returns its unimodular transforms so each result can be certified by
multiplying back.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import KirbyError
from .kirby import BlowDown, BlowUp, apply_move, linking_matrix


@dataclass(frozen=True)
class SnfResult:
    """``left @ original @ right == diag(factors)`` padded to the original shape."""

    factors: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    shape: tuple[int, int]

    def diagonal(self):
        rows, cols = self.shape
        return [[self.factors[i] if i == j and i < len(self.factors) else 0
                 for j in range(cols)] for i in range(rows)]


def _as_rows(m):
    if hasattr(m, "tolist"):
        m = m.tolist()
    return [[int(x) for x in row] for row in m]


def _identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def det(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in _as_rows(m)]
    k = len(a)
    if k == 0:
        return 1
    sign, prev = 1, 1
    for i in range(k - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[-1][-1]


def smith_normal_form(m):
    """Smith normal form of an integer matrix with its certificate.

    Invariant factors are non-negative, each divides the next, and zeros
    come last.
    """
    a = _as_rows(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    left, right = _identity(rows), _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]

    factors = tuple(a[i][i] for i in range(min(rows, cols)))
    return SnfResult(factors, tuple(map(tuple, left)), tuple(map(tuple, right)), (rows, cols))


def check_certificate(m, res):
    """True iff the transforms are unimodular and reproduce the diagonal."""
    a = _as_rows(m)
    if res.shape[0] and abs(det(res.left)) != 1:
        return False
    if res.shape[1] and abs(det(res.right)) != 1:
        return False
    if matmul(matmul([list(r) for r in res.left], a), [list(r) for r in res.right]) != res.diagonal():
        return False
    f = [x for x in res.factors]
    if any(x < 0 for x in f):
        return False
    for x, y in zip(f, f[1:]):
        if x == 0 and y != 0:
            return False
        if x and y % x:
            return False
    return True


def invariant_factors(m):
    return smith_normal_form(m).factors


def h1(d):
    """First homology of the surgered manifold as cyclic orders (0 = Z).

    Factors equal to 1 are dropped, so S^3 gives ``[]``.
    """
    lm = linking_matrix(d)
    res = smith_normal_form(lm.matrix)
    factors = list(res.factors) + [0] * (len(lm.labels) - len(res.factors))
    return [f for f in factors if f != 1]


# -- reports ---------------------------------------------------------------

@dataclass
class Report:
    checks: list = field(default_factory=list)
    divergence: int | None = None

    @property
    def ok(self):
        return all(passed for _, passed, _ in self.checks)

    def add(self, name, passed, detail=""):
        self.checks.append((name, bool(passed), detail))
        return passed

    def __bool__(self):
        return self.ok

    def lines(self):
        return [f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else "")
                for name, ok, detail in self.checks]


def round_trip(d0, trace, endpoint=None):
    """Blow down every added circle in reverse trace order and compare with d0.

    Without ``endpoint`` the trace is replayed forward from ``d0`` first.
    Each reverse step checks that the circle about to be blown down still
    has the framing and targets the trace recorded for it; the index of the
    first move that does not fit is stored in ``divergence``.
    """
    report = Report()
    if endpoint is None:
        endpoint = d0
        for k, move in enumerate(trace):
            try:
                endpoint = apply_move(endpoint, move)
            except KirbyError as exc:
                report.add("forward replay", False, f"move {k}: {exc}")
                report.divergence = k
                return report
    d = endpoint
    for k in range(len(trace) - 1, -1, -1):
        move = trace[k]
        if isinstance(move, BlowDown):
            report.add("round trip", False, f"move {k}: blow-downs cannot be reversed")
            report.divergence = k
            return report
        try:
            c = d.component(move.circle)
            if c.framing != move.eps or c.targets != move.targets:
                raise KirbyError(f"{move.circle} is framed {c.framing} around "
                                 f"{c.targets}, trace says {move.eps} around {move.targets}")
            d = apply_move(d, BlowDown(move.circle))
        except KirbyError as exc:
            report.add("round trip", False, f"move {k}: {exc}")
            report.divergence = k
            return report
    same = d == d0
    if not same:
        report.divergence = 0
    report.add("round trip", same, "" if same else "diagram after blow-downs differs from start")
    return report


def audit(ob, d):
    """Positivity and planarity checks of ``ob`` against its diagram."""
    report = Report()
    report.add("twists positive", all(t.sign == 1 for t in ob.monodromy))
    report.add("page planar", ob.page.genus == 0)
    zero = sum(1 for c in (d.u,) + d.circles if c.framing == 0)
    report.add("bindings = 0-framed unknots", len(ob.page.punctures) == zero,
               f"{len(ob.page.punctures)} punctures, {zero} 0-framed")
    minus = sorted(c.id for c in (d.u,) + d.circles if c.framing == -1)
    used = sorted(t.circle for t in ob.monodromy)
    report.add("one twist per -1 unknot", used == minus,
               "" if used == minus else f"twists {used} vs -1 unknots {minus}")
    report.add("euler characteristic", ob.page.euler_characteristic == 1 - len(ob.page.punctures))
    return report


def framing_audit(d0, trace):
    """Recompute U's final framing from the trace alone: -p + sum of eps * l_U**2."""
    total = d0.u.framing
    for move in trace:
        if isinstance(move, BlowUp):
            total += sum(move.eps * s * s for r, s in move.targets if r == d0.u.id)
    return total

