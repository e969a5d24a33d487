"""Pointwise satisfaction: formulas evaluated at event positions only.

Finite words get a bottom-up dynamic program over positions.  Lassos are
evaluated exactly: beyond the prefix the suffix languages at positions p and
p + |period| coincide up to a uniform time shift, so verdicts are computed on
a finite quotient holding two copies of the period (the copies must agree,
which is asserted) with Until solved by a bounded scan for the timed part and
a least fixpoint for the untimed tail.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvariantError
from .formulas import And, Atom, Formula, Not, Until, require_beta_free, windows
from .intervals import INF
from .structures import Lasso, TimedWord, duration


def sat_positions(rho: TimedWord, f: Formula) -> frozenset:
    """All positions i with rho, i satisfying f."""
    require_beta_free(f, "pointwise")
    n = len(rho)
    times, acts = rho.times, rho.actions
    memo: dict[Formula, tuple] = {}

    def sat(node) -> tuple:
        got = memo.get(node)
        if got is not None:
            return got
        match node:
            case Atom(name):
                out = tuple(acts[i] == name for i in range(n))
            case Not(arg):
                child = sat(arg)
                out = tuple(not v for v in child)
            case And(l, r):
                lv, rv = sat(l), sat(r)
                out = tuple(a and b for a, b in zip(lv, rv))
            case Until(l, w, r):
                lv, rv = sat(l), sat(r)
                res = []
                for i in range(n):
                    ok = True
                    hit = False
                    for j in range(i + 1, n):
                        if w.hi.value != INF and times[j] - times[i] > w.hi.value:
                            break
                        if rv[j] and ok and w.contains(times[j] - times[i]):
                            hit = True
                            break
                        ok = ok and lv[j]
                        if not ok:
                            break
                    res.append(hit)
                out = tuple(res)
            case _:
                raise TypeError(f"not a formula: {node!r}")
        memo[node] = out
        return out

    return frozenset(i for i, v in enumerate(sat(f)) if v)


def eval_pw(rho: TimedWord, i: int, f: Formula) -> bool:
    if not (0 <= i < len(rho)):
        raise IndexError(f"position {i} out of range")
    return i in sat_positions(rho, f)


# ---------------------------------------------------------------------------
# exact lasso evaluation

def _materialize(l: Lasso, count: int):
    """Actions and times of the first `count` events of the unrolled word."""
    acts = list(l.prefix.actions)
    times = list(l.prefix.times)
    base = duration(l.prefix)
    k = 0
    while len(acts) < count:
        copy, idx = divmod(k, len(l.period_actions))
        acts.append(l.period_actions[idx])
        times.append(base + copy * l.period_duration + l.period_offsets[idx])
        k += 1
    return acts, times


def eval_pw_lasso(l: Lasso, f: Formula, max_copies: int | None = None) -> bool:
    """Exact verdict of the unrolled infinite word at position 0."""
    require_beta_free(f, "pointwise")
    p0 = len(l.prefix)
    per = len(l.period_actions)
    dur = l.period_duration
    quot = p0 + 2 * per  # two period copies; they must agree, see below
    ws = windows(f)
    bounds = [w.lo.value for w in ws] + [w.hi.value for w in ws if w.hi.value != INF]
    max_bound = max(bounds, default=Fraction(0))
    # enough events that any scan of at most max_bound + 2 durations completes
    extra_copies = int((max_bound + 2 * dur) / dur) + 2
    if max_copies is not None:
        extra_copies = max(extra_copies, max_copies)
    count = quot + extra_copies * per
    acts, times = _materialize(l, count)

    def fold(j: int) -> int:
        if j < quot:
            return j
        return p0 + per + ((j - p0 - per) % per)

    memo: dict[Formula, list] = {}

    def sat(node) -> list:
        got = memo.get(node)
        if got is not None:
            return got
        match node:
            case Atom(name):
                out = [acts[i] == name for i in range(quot)]
            case Not(arg):
                out = [not v for v in sat(arg)]
            case And(lf, rf):
                lv, rv = sat(lf), sat(rf)
                out = [a and b for a, b in zip(lv, rv)]
            case Until(lf, w, rf):
                lv, rv = sat(lf), sat(rf)
                if w.hi.value != INF:
                    out = [_scan_bounded(i, w, lv, rv) for i in range(quot)]
                else:
                    tail = _untimed_tail(lv, rv)
                    out = [_scan_unbounded(i, w, lv, rv, tail) for i in range(quot)]
            case _:
                raise TypeError(f"not a formula: {node!r}")
        for r in range(per):
            if out[p0 + r] != out[p0 + per + r]:
                raise InvariantError(
                    "periodic positions disagree; the quotient identification is wrong")
        memo[node] = out
        return out

    def _scan_bounded(i, w, lv, rv):
        ok = True
        j = i + 1
        while j < count:
            d = times[j] - times[i]
            if d > w.hi.value:
                return False
            if rv[fold(j)] and ok and w.contains(d):
                return True
            ok = ok and lv[fold(j)]
            if not ok:
                return False
            j += 1
        raise InvariantError("bounded scan ran out of materialized events")

    def _scan_unbounded(i, w, lv, rv, tail):
        lo = w.lo.value
        ok = True
        j = i + 1
        while True:
            if j >= count:
                raise InvariantError("lower-bound scan ran out of materialized events")
            d = times[j] - times[i]
            if d > lo:
                break  # every later event satisfies the window
            if rv[fold(j)] and ok and w.contains(d):
                return True
            ok = ok and lv[fold(j)]
            if not ok:
                return False
            j += 1
        return ok and tail[fold(j)]

    def _untimed_tail(lv, rv):
        """Least fixpoint of T(m) = r(m) or (l(m) and T(m+1)) over the quotient."""
        tail = [False] * quot
        changed = True
        while changed:
            changed = False
            for m in reversed(range(quot)):
                new = rv[m] or (lv[m] and tail[fold(m + 1)])
                if new != tail[m]:
                    tail[m] = new
                    changed = True
        return tail

    return sat(f)[0]
