"""Mixed satisfaction over compact timed words.

Evaluation points are lexicographic pairs (t, j): at a block timestamp, j
ranges over the ordered simultaneous actions; anywhere else the word reads as
the one-element no-action sequence, so only j = 0 exists there.  A
satisfaction set is therefore a finite point set over the (block, offset)
grid plus an interval set over the open gaps between block timestamps.

The Until quantifier walks the lex line.  For a grid base the walk is a scan:
later positions of the same block are adjacent (nothing lies strictly in
between), whole gaps and whole blocks must then be crossed inside the left
operand's set, and a witness inside a gap additionally needs the gap's
f-prefix up to the witness.  For gap bases the same walk is done symbolically,
producing base intervals through back_shift.  The position-zero atom holds at
every gap time and at offset 0 of every block.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import OutOfDomainError
from .formulas import (
    And,
    Atom,
    Beta,
    Formula,
    Not,
    Until,
    is_bounded,
)
from .intervals import (
    INF,
    Bound,
    Interval,
    IntervalSet,
    back_shift,
    interval,
    punctual,
    rational,
)
from .structures import CompactTimedWord, Lasso, compact_duration, unroll
from .encodings import compact
from .interval_based import EXACT, OPTIMISTIC, PESSIMISTIC, _FLIP, Verdict3, lasso_cut

NO_ACTION = "⊢"  # the internal no-action sentinel filling gap times


def compact_at(cw: CompactTimedWord, t) -> tuple:
    """The action sequence read at time t: a block's actions or the no-action mark."""
    t = t if isinstance(t, Fraction) else rational(t)
    if t < 0 or t > compact_duration(cw):
        raise OutOfDomainError(f"time {t} outside [0, {compact_duration(cw)}]")
    for acts, ts in cw.blocks:
        if ts == t:
            return acts
    return (NO_ACTION,)


class MixedSet:
    """Satisfaction set for the mixed semantics: grid points plus gap intervals."""

    __slots__ = ("points", "gap")

    def __init__(self, points: frozenset, gap: IntervalSet):
        self.points = points
        self.gap = gap

    def __eq__(self, other):
        return (isinstance(other, MixedSet)
                and self.points == other.points and self.gap == other.gap)

    def __hash__(self):
        return hash((self.points, self.gap))

    def __repr__(self):
        pts = sorted(self.points)
        return f"MixedSet(points={pts}, gap={self.gap})"


class _Word:
    """Per-word geometry shared by all subformula evaluations."""

    def __init__(self, cw: CompactTimedWord):
        self.cw = cw
        self.times = cw.times
        self.sizes = tuple(len(acts) for acts, _ in cw.blocks)
        self.n = len(cw.blocks)
        self.cut = self.times[-1]
        self.grid = frozenset((k, j) for k in range(self.n) for j in range(self.sizes[k]))
        self.gaps = tuple(
            interval(self.times[k], self.times[k + 1], False, False)
            for k in range(self.n - 1))
        self.all_gaps = IntervalSet.from_intervals(self.gaps)

    def gap_slices(self, s: IntervalSet):
        return tuple(s.intersect(IntervalSet.of(g)) for g in self.gaps)


def _shifted_window(t: Fraction, w: Interval) -> Interval:
    hi = INF if w.hi.value == INF else t + w.hi.value
    return Interval(Bound(t + w.lo.value, w.lo.closed), Bound(hi, w.hi.closed))


def _anchored_prefix(parts: IntervalSet, start: Fraction) -> Interval | None:
    """The part starting at the gap's left end, as a witness window (start, sup]."""
    for p in parts.parts:
        if p.lo.value == start:
            return Interval(Bound(start, False), Bound(p.hi.value, True))
    return None


def _anchored_suffix(parts: IntervalSet, end: Fraction) -> Fraction | None:
    """Greatest-lower value l such that (l, end) lies inside one part, or None."""
    for p in parts.parts:
        if p.hi.value == end:
            return p.lo.value
    return None


def _until_grid_base(wd: _Word, k: int, j: int, f, g, f_gap, g_gap, w, mode) -> bool:
    """Decide f U_w g at grid point (k, j) by walking the lex line."""
    t = wd.times[k]
    ok = True
    zero_ok = w.contains(Fraction(0))
    for j2 in range(j + 1, wd.sizes[k]):
        if ok and zero_ok and (k, j2) in g.points:
            return True
        ok = ok and (k, j2) in f.points
        if not ok:
            return False
    for m in range(k, wd.n - 1):
        window = _anchored_prefix(f_gap[m], wd.times[m])
        if ok and window is not None:
            cands = g_gap[m].intersect(IntervalSet.of(window))
            if not cands.intersect(IntervalSet.of(_shifted_window(t, w))).is_empty:
                return True
        ok = ok and f_gap[m].covers(wd.gaps[m])
        if not ok:
            return False
        d = wd.times[m + 1] - t
        in_window = w.contains(d)
        inner = True
        for j2 in range(wd.sizes[m + 1]):
            if inner and in_window and (m + 1, j2) in g.points:
                return True
            inner = inner and (m + 1, j2) in f.points
            if not inner:
                break
        ok = ok and inner
        if not ok:
            return False
    if mode == OPTIMISTIC:
        return w.hi.value == INF or t + w.hi.value > wd.cut
    return False


def _until_gap_bases(wd: _Word, m0: int, f, g, f_gap, g_gap, w, mode) -> list:
    """Base intervals inside gap m0 satisfying f U_w g, walking forward symbolically."""
    out = []
    beta_ = wd.times[m0 + 1]
    # witnesses inside the same gap: the plain dense decomposition
    for part in f_gap[m0].parts:
        l, u = part.lo.value, part.hi.value
        if l == u:
            continue
        zone = Interval(Bound(l, False), Bound(u, True))
        for region in g_gap[m0].intersect(IntervalSet.of(zone)).parts:
            base = back_shift(region, w)
            if base is None:
                continue
            base = base.intersect(interval(l, INF, True, False))
            if base is not None:
                base = base.intersect(wd.gaps[m0])
            if base is not None:
                out.append(base)
    # witnesses past the gap need its f-suffix
    suffix_lo = _anchored_suffix(f_gap[m0], beta_)
    if suffix_lo is None:
        return out
    zone = Interval(Bound(suffix_lo, True), Bound(beta_, False)).intersect(wd.gaps[m0])
    if zone is None:
        return out
    base_zone = IntervalSet.of(zone)

    def collect(region_or_point):
        base = back_shift(region_or_point, w)
        if base is None:
            return
        for piece in base_zone.intersect(IntervalSet.of(base)).parts:
            out.append(piece)

    ok = True
    for m in range(m0 + 1, wd.n):
        inner = True
        for j2 in range(wd.sizes[m]):
            if inner and (m, j2) in g.points:
                collect(punctual(wd.times[m]))
            inner = inner and (m, j2) in f.points
            if not inner:
                break
        ok = ok and inner
        if not ok:
            return out
        if m < wd.n - 1:
            window = _anchored_prefix(f_gap[m], wd.times[m])
            if window is not None:
                for region in g_gap[m].intersect(IntervalSet.of(window)).parts:
                    collect(region)
            ok = ok and f_gap[m].covers(wd.gaps[m])
            if not ok:
                return out
    if mode == OPTIMISTIC:
        # bases whose window reaches strictly past the cut
        reach = back_shift(Interval(Bound(wd.cut, False), Bound(INF, False)), w)
        if reach is not None:
            out.extend(base_zone.intersect(IntervalSet.of(reach)).parts)
    return out


def _until_mixed(wd: _Word, f: MixedSet, g: MixedSet, w: Interval, mode) -> MixedSet:
    f_gap = wd.gap_slices(f.gap)
    g_gap = wd.gap_slices(g.gap)
    points = frozenset(
        (k, j) for (k, j) in wd.grid
        if _until_grid_base(wd, k, j, f, g, f_gap, g_gap, w, mode))
    pieces = []
    for m0 in range(wd.n - 1):
        pieces.extend(_until_gap_bases(wd, m0, f, g, f_gap, g_gap, w, mode))
    return MixedSet(points, IntervalSet.from_intervals(pieces))


def sat_set_mx(cw: CompactTimedWord, f: Formula, mode: str = EXACT) -> MixedSet:
    """Exactly the in-domain pairs (t, j) where the compact word satisfies f."""
    wd = _Word(cw)
    memo: dict = {}
    full_points = wd.grid
    beta_points = frozenset((k, 0) for k in range(wd.n))

    def sat(node, m) -> MixedSet:
        key = (node, m)
        got = memo.get(key)
        if got is not None:
            return got
        match node:
            case Atom(name):
                out = MixedSet(
                    frozenset((k, j) for (k, j) in wd.grid
                              if cw.blocks[k][0][j] == name),
                    IntervalSet.empty())
            case Beta():
                out = MixedSet(beta_points, wd.all_gaps)
            case Not(arg):
                child = sat(arg, _FLIP[m])
                out = MixedSet(full_points - child.points,
                               wd.all_gaps.difference(child.gap))
            case And(l, r):
                lv, rv = sat(l, m), sat(r, m)
                out = MixedSet(lv.points & rv.points, lv.gap.intersect(rv.gap))
            case Until(l, w, r):
                out = _until_mixed(wd, sat(l, m), sat(r, m), w, m)
            case _:
                raise TypeError(f"not a formula: {node!r}")
        memo[key] = out
        return out

    return sat(f, mode)


def eval_mx(cw: CompactTimedWord, t, j: int, f: Formula) -> bool:
    t = t if isinstance(t, Fraction) else rational(t)
    seq = compact_at(cw, t)  # domain-checks t
    if not (0 <= j < len(seq)):
        raise IndexError(f"position {j} out of range at time {t}")
    got = sat_set_mx(cw, f)
    for k, (_, ts) in enumerate(cw.blocks):
        if ts == t:
            return (k, j) in got.points
    return got.gap.member(t)


def eval_mx_lasso(l: Lasso, f: Formula, cut=None) -> Verdict3:
    """Three-valued verdict at (0, 0); exact whenever f is bounded."""
    cw = compact(unroll(l, cut if cut is not None else lasso_cut(l, f)))
    if is_bounded(f):
        return Verdict3.of((0, 0) in sat_set_mx(cw, f).points)
    if (0, 0) in sat_set_mx(cw, f, PESSIMISTIC).points:
        return Verdict3.TRUE
    if (0, 0) not in sat_set_mx(cw, f, OPTIMISTIC).points:
        return Verdict3.FALSE
    return Verdict3.UNKNOWN
