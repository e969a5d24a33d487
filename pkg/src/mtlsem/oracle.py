"""Independent brute-force evaluators and fuzz generators.

The dense oracles know nothing of the engines' interval algebra.  They slice
the time axis into pieces at critical points (timestamps, or state-sequence
endpoints, shifted by signed sums of window bounds up to the temporal nesting
depth), on which every subformula is piecewise constant, and then decide each
quantifier by scanning pieces: a piece is a critical point or the open interval
between two neighbours, represented by the point itself or the midpoint.  The
only arithmetic is intersecting a candidate piece with the base's shifted
window; witnesses are never sampled, so window endpoints that fall strictly
inside a piece are still found.

Piecewise constancy itself is checked empirically by double sampling in the
test suite, not assumed silently.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import OutOfDomainError
from .formulas import (
    And,
    Atom,
    Beta,
    Formula,
    Not,
    Until,
    alphabet,
    f_true,
    finite_window_bounds,
    temporal_depth,
)
from .intervals import INF, Interval, interval, punctual
from .structures import (
    CompactTimedWord,
    Lasso,
    TimedStateSequence,
    TimedWord,
    duration,
    lasso,
    tss_duration,
    tss_start,
    validate_tss,
    word,
)


# ---------------------------------------------------------------------------
# critical points

def _base_values(structure):
    if isinstance(structure, TimedWord):
        return sorted(set(structure.times)), Fraction(0), duration(structure)
    if isinstance(structure, CompactTimedWord):
        return sorted(set(structure.times)), Fraction(0), structure.times[-1]
    if isinstance(structure, TimedStateSequence):
        vals = set()
        for _, iv in structure.steps:
            vals.add(iv.lo.value)
            if iv.hi.value != INF:
                vals.add(iv.hi.value)
        return sorted(vals), tss_start(structure), tss_duration(structure)
    raise TypeError(f"no critical points for {structure!r}")


def critical_values(structure, f: Formula):
    """The depth-closed critical values (no midpoints), domain endpoints included."""
    vals, lo, hi = _base_values(structure)
    current = set(vals) | {lo, hi}
    bounds = finite_window_bounds(f)
    for _ in range(temporal_depth(f)):
        nxt = set(current)
        for t in current:
            for b in bounds:
                for cand in (t + b, t - b):
                    if lo <= cand <= hi:
                        nxt.add(cand)
        if nxt == current:
            break
        current = nxt
    return sorted(current)


def critical_points(structure, f: Formula):
    """Critical values plus the midpoint of every neighbouring pair, sorted."""
    vals = critical_values(structure, f)
    out = list(vals)
    for a, b in zip(vals, vals[1:]):
        out.append((a + b) / 2)
    return sorted(out)


# ---------------------------------------------------------------------------
# pieces: points and open intervals between consecutive critical values

class _Piece:
    __slots__ = ("lo", "hi", "is_point", "rep")

    def __init__(self, lo, hi, is_point):
        self.lo = lo
        self.hi = hi
        self.is_point = is_point
        self.rep = lo if is_point else (lo + hi) / 2

    def window_hits(self, base: Fraction, w: Interval) -> bool:
        """Does this piece contain a time t' with t' - base in w (and t' > base)?"""
        w_lo = base + w.lo.value
        w_hi = INF if w.hi.value == INF else base + w.hi.value
        if self.is_point:
            t = self.lo
            if t <= base:
                return False
            ok_lo = t > w_lo or (t == w_lo and w.lo.closed)
            ok_hi = t < w_hi or (t == w_hi and w.hi.closed)
            return ok_lo and ok_hi
        # open piece intersected with the window and with (base, inf)
        lo_k = max((self.lo, 1), (base, 1), (w_lo, 0 if w.lo.closed else 1))
        hi_k = min((self.hi, -1), (w_hi, 0 if w.hi.closed else -1))
        return lo_k <= hi_k


def _pieces(values) -> list:
    out = []
    for i, v in enumerate(values):
        out.append(_Piece(v, v, True))
        if i + 1 < len(values):
            out.append(_Piece(v, values[i + 1], False))
    return out


def _piece_truth(pieces, atom_truth, f: Formula):
    """Bottom-up truth arrays over pieces; Until scans pieces with exact windows."""
    memo: dict = {}
    n = len(pieces)

    def sat(node):
        got = memo.get(node)
        if got is not None:
            return got
        match node:
            case Atom(name):
                out = [atom_truth(name, p) for p in pieces]
            case Not(arg):
                out = [not v for v in sat(arg)]
            case And(l, r):
                lv, rv = sat(l), sat(r)
                out = [a and b for a, b in zip(lv, rv)]
            case Until(l, w, r):
                lv, rv = sat(l), sat(r)
                out = [_until_at(i, w, lv, rv) for i in range(n)]
            case _:
                raise TypeError(f"not a formula: {node!r}")
        memo[node] = out
        return out

    def _until_at(i, w, lv, rv):
        base = pieces[i].rep
        ok = True
        if not pieces[i].is_point:
            if lv[i] and rv[i] and pieces[i].window_hits(base, w):
                return True
            ok = lv[i]  # the rest of the base piece must be crossed
        for ip in range(i + 1, n):
            pc = pieces[ip]
            if not ok:
                return False
            if rv[ip] and (pc.is_point or lv[ip]) and pc.window_hits(base, w):
                return True
            ok = ok and lv[ip]
            if w.hi.value != INF and pc.lo > base + w.hi.value:
                return False
        return False

    return sat(f)


# ---------------------------------------------------------------------------
# dense oracles

def oracle_eval_itw(rho: TimedWord, t, f: Formula) -> bool:
    t = t if isinstance(t, Fraction) else Fraction(t)
    if t < 0 or t > duration(rho):
        raise OutOfDomainError(f"time {t} outside [0, {duration(rho)}]")
    values = critical_values(rho, f)
    pieces = _pieces(values)
    stamp_acts = {}
    for a, ts in rho.events:
        stamp_acts.setdefault(ts, set()).add(a)

    def atom_truth(name, p):
        return p.is_point and name in stamp_acts.get(p.lo, ())

    truth = _piece_truth(pieces, atom_truth, f)
    return truth[_piece_index(pieces, t)]


def oracle_eval_its(kappa: TimedStateSequence, t, f: Formula) -> bool:
    t = t if isinstance(t, Fraction) else Fraction(t)
    if t < tss_start(kappa) or t > tss_duration(kappa):
        raise OutOfDomainError("time outside the covered span")
    values = critical_values(kappa, f)
    pieces = _pieces(values)

    def atom_truth(name, p):
        for props, iv in kappa.steps:
            if iv.contains(p.rep):
                return name in props
        return False

    truth = _piece_truth(pieces, atom_truth, f)
    return truth[_piece_index(pieces, t)]


def _piece_index(pieces, t) -> int:
    for i, p in enumerate(pieces):
        if p.is_point and p.lo == t:
            return i
        if not p.is_point and p.lo < t < p.hi:
            return i
    raise OutOfDomainError(f"time {t} is not on the piece grid")


def oracle_eval_pw(rho: TimedWord, i: int, f: Formula) -> bool:
    """Literal recursive quantifier evaluation over positions."""
    if not (0 <= i < len(rho)):
        raise IndexError(f"position {i} out of range")
    times, acts = rho.times, rho.actions
    memo: dict = {}

    def ev(node, k) -> bool:
        key = (id(node), k)
        if key in memo:
            return memo[key]
        match node:
            case Atom(name):
                out = acts[k] == name
            case Not(arg):
                out = not ev(arg, k)
            case And(l, r):
                out = ev(l, k) and ev(r, k)
            case Until(l, w, r):
                out = any(
                    w.contains(times[j] - times[k])
                    and ev(r, j)
                    and all(ev(l, m) for m in range(k + 1, j))
                    for j in range(k + 1, len(times)))
            case _:
                raise TypeError(f"not a formula: {node!r}")
        memo[key] = out
        return out

    return ev(f, i)


# ---------------------------------------------------------------------------
# mixed oracle: lex pieces over a compact word

class _LexPiece:
    __slots__ = ("kind", "k", "j", "lo", "hi", "rep")

    def __init__(self, kind, k, j, lo, hi):
        self.kind = kind  # "block" | "gappt" | "gapiv"
        self.k = k
        self.j = j
        self.lo = lo
        self.hi = hi
        self.rep = lo if kind != "gapiv" else (lo + hi) / 2

    def window_hits(self, base: Fraction, w: Interval) -> bool:
        dense = _Piece(self.lo, self.hi, self.kind != "gapiv")
        return dense.window_hits(base, w)

    def same_time_after(self, other) -> bool:
        return self.kind == "block" and other.kind == "block" and self.k == other.k


def _lex_pieces(cw: CompactTimedWord, f: Formula):
    crit = critical_values(cw, f)
    times = cw.times
    out = []
    for k, (acts, t) in enumerate(cw.blocks):
        for j in range(len(acts)):
            out.append(_LexPiece("block", k, j, t, t))
        if k + 1 < len(cw.blocks):
            inside = [c for c in crit if t < c < times[k + 1]]
            edges = [t] + inside + [times[k + 1]]
            for a, b in zip(edges, edges[1:]):
                out.append(_LexPiece("gapiv", k, 0, a, b))
                if b != times[k + 1]:
                    out.append(_LexPiece("gappt", k, 0, b, b))
    return out


def _lex_truth(cw: CompactTimedWord, pieces, f: Formula):
    memo: dict = {}
    n = len(pieces)

    def sat(node):
        got = memo.get(node)
        if got is not None:
            return got
        match node:
            case Atom(name):
                out = [p.kind == "block" and cw.blocks[p.k][0][p.j] == name
                       for p in pieces]
            case Beta():
                out = [p.kind != "block" or p.j == 0 for p in pieces]
            case Not(arg):
                out = [not v for v in sat(arg)]
            case And(l, r):
                lv, rv = sat(l), sat(r)
                out = [a and b for a, b in zip(lv, rv)]
            case Until(l, w, r):
                lv, rv = sat(l), sat(r)
                out = [_until_at(i, w, lv, rv) for i in range(n)]
            case _:
                raise TypeError(f"not a formula: {node!r}")
        memo[node] = out
        return out

    def _until_at(i, w, lv, rv):
        base = pieces[i].rep
        ok = True
        if pieces[i].kind == "gapiv":
            if lv[i] and rv[i] and pieces[i].window_hits(base, w):
                return True
            ok = lv[i]
        for ip in range(i + 1, n):
            pc = pieces[ip]
            if not ok:
                return False
            if pc.kind == "block" and pc.same_time_after(pieces[i]):
                hit = w.contains(Fraction(0))
            else:
                hit = pc.window_hits(base, w)
            if rv[ip] and (pc.kind != "gapiv" or lv[ip]) and hit:
                return True
            ok = ok and lv[ip]
            if w.hi.value != INF and pc.lo > base + w.hi.value:
                return False
        return False

    return sat(f)


def oracle_eval_mx(cw: CompactTimedWord, t, j: int, f: Formula) -> bool:
    t = t if isinstance(t, Fraction) else Fraction(t)
    pieces = _lex_pieces(cw, f)
    truth = _lex_truth(cw, pieces, f)
    for i, p in enumerate(pieces):
        if p.kind == "block" and p.lo == t and p.j == j:
            return truth[i]
        if p.kind == "gappt" and p.lo == t and j == 0:
            return truth[i]
        if p.kind == "gapiv" and p.lo < t < p.hi and j == 0:
            return truth[i]
    raise OutOfDomainError(f"({t}, {j}) is not on the lex piece grid")


# ---------------------------------------------------------------------------
# deterministic fuzz generators

_STEP_POOL = [Fraction(0), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(1),
              Fraction(3, 2), Fraction(2)]


def gen_word(seed: int, max_len: int = 8, alphabet_=("a", "b", "c"),
             stutter_free: bool = False) -> TimedWord:
    rng = random.Random(seed)
    n = rng.randint(1, max_len)
    events = []
    t = Fraction(0)
    for _ in range(n):
        step = rng.choice(_STEP_POOL)
        if events:
            t = t + step
        if stutter_free:
            used = {a for a, ts in events if ts == t}
            free = [a for a in alphabet_ if a not in used]
            if not free:
                t = t + rng.choice([s for s in _STEP_POOL if s > 0])
                free = list(alphabet_)
            events.append((rng.choice(free), t))
        else:
            events.append((rng.choice(alphabet_), t))
    return word(events)


_LO_POOL = [Fraction(0), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]
_SPAN_POOL = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), INF]


def _gen_window(rng) -> Interval:
    lo = rng.choice(_LO_POOL)
    span = rng.choice(_SPAN_POOL)
    if span == INF:
        return interval(lo, INF, rng.random() < 0.5, False)
    hi = lo + span
    if lo == hi:
        return interval(lo, hi, True, True)
    return interval(lo, hi, rng.random() < 0.5, rng.random() < 0.5)


def gen_formula(seed: int, sigma, max_depth: int = 4,
                bounded_only: bool = False, allow_beta: bool = False) -> Formula:
    sigma = alphabet(sigma)
    rng = random.Random(seed)

    def build(depth) -> Formula:
        if depth >= max_depth or rng.random() < 0.3:
            if allow_beta and rng.random() < 0.15:
                return Beta()
            return Atom(rng.choice(sigma.symbols))
        roll = rng.random()
        if roll < 0.25:
            return Not(build(depth + 1))
        if roll < 0.5:
            return And(build(depth + 1), build(depth + 1))
        w = _gen_window(rng)
        while bounded_only and w.hi.value == INF:
            w = _gen_window(rng)
        left = build(depth + 1)
        if rng.random() < 0.5:
            left = f_true(sigma)  # plain eventually, the common shape
        return Until(left, w, build(depth + 1))

    return build(0)


def gen_ka(seed: int, alphabet_=("a", "b", "c", "d"), max_blocks: int = 5) -> TimedStateSequence:
    """A random action-based timed state sequence (alternating punctual/open steps)."""
    rng = random.Random(seed)
    t = Fraction(0)
    steps = []
    for i in range(rng.randint(1, max_blocks)):
        if i > 0:
            nxt = t + rng.choice([Fraction(1, 2), Fraction(1), Fraction(2)])
            steps.append((frozenset(), interval(t, nxt, False, False)))
            t = nxt
        props = frozenset(rng.sample(alphabet_, rng.randint(1, min(3, len(alphabet_)))))
        steps.append((props, punctual(t)))
    return validate_tss(steps)


def gen_lasso(seed: int, max_prefix: int = 5, alphabet_=("a", "b", "c")) -> Lasso:
    rng = random.Random(seed)
    prefix = gen_word(seed * 31 + 7, max_len=max_prefix, alphabet_=alphabet_)
    dur = rng.choice([Fraction(1), Fraction(3, 2), Fraction(2)])
    n = rng.randint(1, 3)
    offsets = sorted(
        rng.choice([o for o in (Fraction(0), Fraction(1, 2), Fraction(1), dur)
                    if o <= dur])
        for _ in range(n))
    acts = [rng.choice(alphabet_) for _ in range(n)]
    return lasso(prefix, acts, offsets, dur)
