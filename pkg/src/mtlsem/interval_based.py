"""Interval-based satisfaction over timed words and timed state sequences.

Each subformula gets an exact satisfaction set: a normalized union of
rational-endpoint intervals over the covered time domain.  Negation is
complement in the domain, conjunction is intersection, and the strict dense
Until decomposes by the maximal convex parts of the left operand's set:

    a base point t satisfies (f U_I g) exactly when some maximal part <l,u>
    of Sat(f) has l <= t and a witness t' in Sat(g) with t < t' <= u and
    t' - t in I; the open interval (t, t') is then inside that single part,
    since distinct maximal parts are separated by at least a missing point.

The witness window per part is (l, u] regardless of the part's own endpoint
flags; back_shift turns each witness interval into the exact base region.

Lassos get three-valued verdicts: evaluation runs twice on a truncated unroll,
once pessimistically (no witnesses beyond the cut) and once optimistically
(anything beyond the cut granted), and disagreement reports Unknown.  Bounded
formulas are decided exactly on a horizon-deep unroll instead.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .errors import OutOfDomainError
from .formulas import (
    And,
    Atom,
    Formula,
    Not,
    Until,
    finite_window_bounds,
    horizon,
    is_bounded,
    require_beta_free,
)
from .intervals import (
    INF,
    Bound,
    Interval,
    IntervalSet,
    back_shift,
    interval,
    punctual,
)
from .structures import (
    Lasso,
    TimedStateSequence,
    TimedWord,
    duration,
    tss_duration,
    tss_start,
    unroll,
)


class Verdict3(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @staticmethod
    def of(b: bool) -> "Verdict3":
        return Verdict3.TRUE if b else Verdict3.FALSE


EXACT, OPTIMISTIC, PESSIMISTIC = "exact", "opt", "pess"

_FLIP = {EXACT: EXACT, OPTIMISTIC: PESSIMISTIC, PESSIMISTIC: OPTIMISTIC}


def _until_set(f_set: IntervalSet, g_set: IntervalSet, w: Interval,
               domain: Interval, mode: str) -> IntervalSet:
    out = []
    cut = domain.hi.value
    for part in f_set.parts:
        l, u = part.lo.value, part.hi.value
        if l != u:
            witness_zone = Interval(Bound(l, False), Bound(u, True))
            for region in g_set.intersect(IntervalSet.of(witness_zone)).parts:
                base = back_shift(region, w)
                if base is None:
                    continue
                base = base.intersect(interval(l, INF, True, False))
                if base is None:
                    continue
                base = base.intersect(domain)
                if base is not None:
                    out.append(base)
        if mode == OPTIMISTIC and u == cut and part.hi.closed:
            # the left operand holds through the cut: grant a witness beyond it
            ext = _beyond_cut_bases(l, cut, w)
            if ext is not None:
                out.append(ext)
    if mode == OPTIMISTIC and not (w.lo.value == 0 and w.hi.value == 0):
        # at the cut itself nothing needs to hold in between
        out.append(punctual(cut))
    return IntervalSet.from_intervals(out)


def _beyond_cut_bases(l: Fraction, cut: Fraction, w: Interval) -> Interval | None:
    """Bases t in [l, cut] whose window t + w reaches strictly past the cut."""
    if w.hi.value != INF and cut - w.hi.value >= cut:  # window never leaves the cut
        return None
    lo = Bound(l, True)
    if w.hi.value != INF and cut - w.hi.value >= l:
        lo = Bound(cut - w.hi.value, False)
    return Interval(lo, Bound(cut, True))


def _sat_dense(atom_set, domain: Interval, f: Formula, mode: str) -> IntervalSet:
    memo: dict = {}
    full = IntervalSet.of(domain)

    def sat(node, m) -> IntervalSet:
        key = (node, m)
        got = memo.get(key)
        if got is not None:
            return got
        match node:
            case Atom(name):
                out = atom_set(name)
            case Not(arg):
                out = full.difference(sat(arg, _FLIP[m]))
            case And(l, r):
                out = sat(l, m).intersect(sat(r, m))
            case Until(l, w, r):
                out = _until_set(sat(l, m), sat(r, m), w, domain, m)
            case _:
                raise TypeError(f"not a formula: {node!r}")
        memo[key] = out
        return out

    return sat(f, mode)


# ---------------------------------------------------------------------------
# timed words

def _word_atom_sets(rho: TimedWord):
    def atom_set(name: str) -> IntervalSet:
        return IntervalSet.from_intervals(
            punctual(t) for a, t in rho.events if a == name)

    return atom_set


def sat_set_itw(rho: TimedWord, f: Formula, mode: str = EXACT) -> IntervalSet:
    """Exactly the times t in [0, duration] where rho, t satisfies f."""
    require_beta_free(f, "interval-based")
    domain = interval(0, duration(rho))
    return _sat_dense(_word_atom_sets(rho), domain, f, mode)


def eval_itw(rho: TimedWord, t, f: Formula) -> bool:
    t = t if isinstance(t, Fraction) else Fraction(t)
    if t < 0 or t > duration(rho):
        raise OutOfDomainError(f"time {t} outside [0, {duration(rho)}]")
    return sat_set_itw(rho, f).member(t)


# ---------------------------------------------------------------------------
# timed state sequences

def _tss_atom_sets(kappa: TimedStateSequence):
    def atom_set(name: str) -> IntervalSet:
        return IntervalSet.from_intervals(
            iv for props, iv in kappa.steps if name in props)

    return atom_set


def sat_set_its(kappa: TimedStateSequence, f: Formula, mode: str = EXACT) -> IntervalSet:
    require_beta_free(f, "interval-based")
    domain = interval(tss_start(kappa), tss_duration(kappa))
    return _sat_dense(_tss_atom_sets(kappa), domain, f, mode)


def eval_its(kappa: TimedStateSequence, t, f: Formula) -> bool:
    t = t if isinstance(t, Fraction) else Fraction(t)
    if t < tss_start(kappa) or t > tss_duration(kappa):
        raise OutOfDomainError(f"time {t} outside the covered span")
    return sat_set_its(kappa, f).member(t)


# ---------------------------------------------------------------------------
# lassos

def lasso_cut(l: Lasso, f: Formula) -> Fraction:
    """Unroll horizon: past every finite window bound, with period slack."""
    bounds = finite_window_bounds(f)
    reach = max(bounds, default=Fraction(0)) + Fraction(1)
    if is_bounded(f):
        reach = max(reach, horizon(f))
    return duration(l.prefix) + 2 * l.period_duration + reach


def eval_itw_lasso(l: Lasso, f: Formula, cut=None) -> Verdict3:
    """Three-valued verdict at time 0; exact whenever f is bounded."""
    require_beta_free(f, "interval-based")
    w = unroll(l, cut if cut is not None else lasso_cut(l, f))
    if is_bounded(f):
        return Verdict3.of(sat_set_itw(w, f).member(Fraction(0)))
    opt = sat_set_itw(w, f, OPTIMISTIC).member(Fraction(0))
    pess = sat_set_itw(w, f, PESSIMISTIC).member(Fraction(0))
    if pess:
        return Verdict3.TRUE
    if not opt:
        return Verdict3.FALSE
    return Verdict3.UNKNOWN
