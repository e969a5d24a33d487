"""The three timed models and their validity predicates.

Timed words carry (action, timestamp) events with non-decreasing timestamps;
compact timed words group simultaneous events into ordered blocks at strictly
increasing timestamps; timed state sequences alternate proposition sets over
adjacent intervals.  Infinite words are represented by lassos (finite prefix
plus a repeating timed period) and are non-Zeno by construction since the
period duration must be positive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AdjacencyError,
    EmptyWordError,
    FirstTimestampError,
    MtlsemError,
    NonMonotoneError,
    OutOfDomainError,
)
from .intervals import Interval, parse_interval, rat_str, rational


@dataclass(frozen=True)
class TimedWord:
    events: tuple  # of (action, Fraction)

    @property
    def actions(self):
        return tuple(a for a, _ in self.events)

    @property
    def times(self):
        return tuple(t for _, t in self.events)

    def __len__(self):
        return len(self.events)

    def __str__(self):
        return "".join(f"({a},{rat_str(t)})" for a, t in self.events)


def validate_word(events, allow_nonzero_start: bool = False) -> TimedWord:
    """Check monotonicity and the zero start, returning the word.

    `allow_nonzero_start` admits raw words whose first timestamp is positive.
    """
    events = tuple((a, t if isinstance(t, Fraction) else rational(t)) for a, t in events)
    if not events:
        raise EmptyWordError("empty timed word")
    for pos in range(1, len(events)):
        if events[pos][1] < events[pos - 1][1]:
            raise NonMonotoneError(pos)
    if events[0][1] != 0 and not allow_nonzero_start:
        raise FirstTimestampError(f"first timestamp is {rat_str(events[0][1])}, expected 0")
    return TimedWord(events)


def word(text_pairs) -> TimedWord:
    """Shorthand: word([("a", "0"), ("b", "1"), ...])."""
    return validate_word(text_pairs)


def duration(rho: TimedWord) -> Fraction:
    return rho.events[-1][1]


def is_stutter_free(rho: TimedWord) -> bool:
    """No action occurs twice at the same timestamp."""
    seen = set()
    for a, t in rho.events:
        if (a, t) in seen:
            return False
        seen.add((a, t))
    return True


def is_strictly_monotone(rho: TimedWord) -> bool:
    times = rho.times
    return all(times[i - 1] < times[i] for i in range(1, len(times)))


@dataclass(frozen=True)
class MfsIndex:
    """Last indices of the maximal flat subsequences of a time sequence."""

    boundaries: tuple

    def runs(self):
        """(start, end) index pairs, inclusive, one per maximal flat run."""
        out = []
        start = 0
        for end in self.boundaries:
            out.append((start, end))
            start = end + 1
        return out


def mfs_decompose(times) -> MfsIndex:
    times = tuple(times)
    if not times:
        raise EmptyWordError("empty time sequence")
    bounds = []
    for i in range(len(times)):
        if i + 1 == len(times) or times[i + 1] != times[i]:
            bounds.append(i)
    return MfsIndex(tuple(bounds))


# ---------------------------------------------------------------------------
# compact timed words

@dataclass(frozen=True)
class CompactTimedWord:
    blocks: tuple  # of (actions tuple, Fraction timestamp)

    @property
    def times(self):
        return tuple(t for _, t in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return "".join(
            "((" + ",".join(acts) + f"),{rat_str(t)})" for acts, t in self.blocks
        )


def validate_compact(blocks, allow_nonzero_start: bool = False) -> CompactTimedWord:
    blocks = tuple((tuple(acts), t if isinstance(t, Fraction) else rational(t)) for acts, t in blocks)
    if not blocks:
        raise EmptyWordError("empty compact timed word")
    for acts, _ in blocks:
        if not acts:
            raise EmptyWordError("empty action block")
    for pos in range(1, len(blocks)):
        if blocks[pos][1] <= blocks[pos - 1][1]:
            raise NonMonotoneError(pos)
    if blocks[0][1] != 0 and not allow_nonzero_start:
        raise FirstTimestampError("first block timestamp must be 0")
    return CompactTimedWord(blocks)


def compact_duration(cw: CompactTimedWord) -> Fraction:
    return cw.blocks[-1][1]


# ---------------------------------------------------------------------------
# timed state sequences

@dataclass(frozen=True)
class TimedStateSequence:
    steps: tuple  # of (frozenset of symbols, Interval)

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return "".join(
            "({" + ",".join(sorted(props)) + "}," + str(iv) + ")" for props, iv in self.steps
        )


def _adjacent(a: Interval, b: Interval) -> bool:
    """Disjoint, union is one interval, and a lies entirely before b."""
    if a.intersect(b) is not None:
        return False
    if a.hi.value > b.lo.value:
        return False
    if a.hi.value == b.lo.value:
        return a.hi.closed != b.lo.closed
    return False


def validate_tss(steps, allow_nonzero_start: bool = False) -> TimedStateSequence:
    steps = tuple(
        (frozenset(props), iv if isinstance(iv, Interval) else parse_interval(iv))
        for props, iv in steps
    )
    if not steps:
        raise EmptyWordError("empty timed state sequence")
    for pos in range(1, len(steps)):
        if not _adjacent(steps[pos - 1][1], steps[pos][1]):
            raise AdjacencyError(pos)
    first = steps[0][1]
    if not allow_nonzero_start and not (first.lo.value == 0 and first.lo.closed):
        raise FirstTimestampError("first interval must be left-closed at 0")
    last = steps[-1][1]
    if not last.hi.closed:
        raise MtlsemError("a finite timed state sequence must end with a right-closed interval")
    return TimedStateSequence(steps)


def tss_duration(kappa: TimedStateSequence) -> Fraction:
    return kappa.steps[-1][1].hi.value


def tss_start(kappa: TimedStateSequence) -> Fraction:
    return kappa.steps[0][1].lo.value


def tss_at(kappa: TimedStateSequence, t) -> frozenset:
    """The unique step's propositions at time t (uniqueness by adjacency)."""
    t = t if isinstance(t, Fraction) else rational(t)
    for props, iv in kappa.steps:
        if iv.contains(t):
            return props
    raise OutOfDomainError(f"time {rat_str(t)} outside the covered span")


def is_action_based(kappa: TimedStateSequence) -> bool:
    """Alternating punctual action steps and non-punctual empty steps from [0,0].

    Any finite sequence passing all clauses has odd length; that consistency
    is asserted rather than tested.
    """
    steps = kappa.steps
    first = steps[0][1]
    if not (first.lo.value == 0 and first.lo.closed and first.is_punctual):
        return False
    if not steps[-1][1].is_punctual:
        return False
    for i, (props, iv) in enumerate(steps):
        if i % 2 == 0:
            if not props or not iv.is_punctual:
                return False
        else:
            if props or iv.is_punctual:
                return False
    assert len(steps) % 2 == 1, "alternation admitted an even-length sequence"
    return True


# ---------------------------------------------------------------------------
# lassos

@dataclass(frozen=True)
class Lasso:
    """Finite prefix plus a repeating period; unrolls to a non-Zeno infinite word.

    Period offsets are relative to the period start; the k-th copy of offset
    o happens at duration(prefix) + k * period_duration + o.
    """

    prefix: TimedWord
    period_actions: tuple
    period_offsets: tuple
    period_duration: Fraction

    def __post_init__(self):
        if not self.period_actions:
            raise EmptyWordError("empty lasso period")
        if len(self.period_actions) != len(self.period_offsets):
            raise MtlsemError("period actions and offsets must have equal length")
        if self.period_duration <= 0:
            raise MtlsemError("period duration must be positive")
        offs = self.period_offsets
        for i in range(1, len(offs)):
            if offs[i] < offs[i - 1]:
                raise NonMonotoneError(i)
        if any(o < 0 or o > self.period_duration for o in offs):
            raise MtlsemError("period offsets must lie in [0, duration]")


def lasso(prefix: TimedWord, actions, offsets, duration_) -> Lasso:
    return Lasso(
        prefix,
        tuple(actions),
        tuple(o if isinstance(o, Fraction) else rational(o) for o in offsets),
        duration_ if isinstance(duration_, Fraction) else rational(duration_),
    )


def unroll(l: Lasso, horizon) -> TimedWord:
    """Finite prefix of the unrolled word containing exactly the events <= horizon."""
    horizon = horizon if isinstance(horizon, Fraction) else rational(horizon)
    base = duration(l.prefix)
    if horizon < base:
        raise MtlsemError("horizon must cover the lasso prefix")
    events = list(l.prefix.events)
    copy = 0
    while True:
        start = base + copy * l.period_duration
        if start + l.period_offsets[0] > horizon:
            break
        for a, o in zip(l.period_actions, l.period_offsets):
            t = start + o
            if t <= horizon:
                events.append((a, t))
        copy += 1
    return TimedWord(tuple(events))


# ---------------------------------------------------------------------------
# JSON wire formats

def word_to_json(rho: TimedWord) -> dict:
    return {"events": [[a, rat_str(t)] for a, t in rho.events]}


def lasso_to_json(l: Lasso) -> dict:
    out = word_to_json(l.prefix)
    out["period"] = {
        "actions": list(l.period_actions),
        "offsets": [rat_str(o) for o in l.period_offsets],
        "duration": rat_str(l.period_duration),
    }
    return out


def word_or_lasso_from_json(obj, allow_nonzero_start: bool = False):
    events = [(a, rational(t)) for a, t in obj["events"]]
    w = validate_word(events, allow_nonzero_start=allow_nonzero_start)
    if "period" not in obj:
        return w
    p = obj["period"]
    return lasso(w, p["actions"], p["offsets"], p["duration"])


def tss_to_json(kappa: TimedStateSequence) -> dict:
    return {"steps": [[sorted(props), str(iv)] for props, iv in kappa.steps]}


def tss_from_json(obj, allow_nonzero_start: bool = False) -> TimedStateSequence:
    return validate_tss(obj["steps"], allow_nonzero_start=allow_nonzero_start)


def load_input(path: str, allow_nonzero_start: bool = False):
    """Load a word, lasso or state sequence from a JSON file, by shape."""
    with open(path) as fh:
        obj = json.load(fh)
    if "steps" in obj:
        return tss_from_json(obj, allow_nonzero_start=allow_nonzero_start)
    return word_or_lasso_from_json(obj, allow_nonzero_start=allow_nonzero_start)
