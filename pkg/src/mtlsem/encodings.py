"""Structural encodings between the three timed models.

`compact` groups each maximal flat run of a timed word into one ordered action
block; `to_tss` fills the holes between block timestamps with non-punctual
empty steps, yielding an action-based timed state sequence.  The index helpers
relate block coordinates (k, j) to word positions and timestamps to block
indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import MtlsemError, OutOfDomainError, SeamStutterError
from .intervals import interval, punctual, rational
from .structures import (
    CompactTimedWord,
    Lasso,
    TimedStateSequence,
    TimedWord,
    compact_duration,
    mfs_decompose,
)


def compact(rho: TimedWord) -> CompactTimedWord:
    """Collapse each maximal flat run into a block keeping the action order."""
    acts, times = rho.actions, rho.times
    blocks = []
    for start, end in mfs_decompose(times).runs():
        blocks.append((acts[start:end + 1], times[start]))
    return CompactTimedWord(tuple(blocks))


def uncompact(cw: CompactTimedWord) -> TimedWord:
    events = []
    for acts, t in cw.blocks:
        events.extend((a, t) for a in acts)
    return TimedWord(tuple(events))


def to_tss(cw: CompactTimedWord) -> TimedStateSequence:
    """Alternate punctual action steps with non-punctual empty fillers."""
    steps = []
    for k, (acts, t) in enumerate(cw.blocks):
        if k > 0:
            prev_t = cw.blocks[k - 1][1]
            steps.append((frozenset(), interval(prev_t, t, False, False)))
        steps.append((frozenset(acts), punctual(t)))
    return TimedStateSequence(tuple(steps))


def word_to_tss(rho: TimedWord) -> TimedStateSequence:
    return to_tss(compact(rho))


# ---------------------------------------------------------------------------
# index helpers

def _block_ends(cw: CompactTimedWord):
    """Cumulative last word-positions per block (the flat-run boundary sequence)."""
    ends = []
    total = -1
    for acts, _ in cw.blocks:
        total += len(acts)
        ends.append(total)
    return ends


def word_position(cw: CompactTimedWord, k: int, j: int) -> int:
    """Word position of the j-th action of block k."""
    if not (0 <= k < len(cw.blocks)):
        raise IndexError(f"block index {k} out of range")
    if not (0 <= j < len(cw.blocks[k][0])):
        raise IndexError(f"position {j} out of range in block {k}")
    if k == 0:
        return j
    return _block_ends(cw)[k - 1] + j + 1


def block_position(cw: CompactTimedWord, i: int) -> tuple:
    """Inverse of word_position: (block, offset) holding word position i."""
    ends = _block_ends(cw)
    if not (0 <= i <= ends[-1]):
        raise IndexError(f"word position {i} out of range")
    if i <= ends[0]:
        return (0, i)
    k = max(kk for kk in range(1, len(ends)) if ends[kk - 1] < i)
    return (k, i - ends[k - 1] - 1)


def block_index_at(cw: CompactTimedWord, t) -> int | None:
    """Block index whose timestamp is exactly t, None for hole times."""
    t = t if isinstance(t, Fraction) else rational(t)
    if t < 0 or t > compact_duration(cw):
        raise OutOfDomainError("time outside the word duration")
    for k, (_, ts) in enumerate(cw.blocks):
        if ts == t:
            return k
    return None


# ---------------------------------------------------------------------------
# lassos, blockwise

@dataclass(frozen=True)
class CompactLasso:
    prefix: CompactTimedWord
    period_blocks: tuple  # of (actions tuple, offset Fraction)
    period_duration: Fraction


def compact_lasso(l: Lasso) -> CompactLasso:
    """Compact prefix and period blockwise; a flat run may not span the seam."""
    if l.period_offsets[0] == 0:
        raise SeamStutterError("first period event coincides with the prefix end")
    pref = compact(l.prefix)
    acts = l.period_actions
    blocks = []
    for start, end in mfs_decompose(l.period_offsets).runs():
        blocks.append((acts[start:end + 1], l.period_offsets[start]))
    return CompactLasso(pref, tuple(blocks), l.period_duration)


def lasso_to_tss_steps(l: Lasso, copies: int = 1) -> TimedStateSequence:
    """State-sequence image of the prefix plus `copies` unrolled periods."""
    cl = compact_lasso(l)
    base = compact_duration(cl.prefix)
    blocks = list(cl.prefix.blocks)
    for c in range(copies):
        for acts, off in cl.period_blocks:
            blocks.append((acts, base + c * l.period_duration + off))
    return to_tss(CompactTimedWord(tuple(blocks)))


# ---------------------------------------------------------------------------
# bounded preimage search (incomparability harness only)

def stutter_free_preimages(kappa: TimedStateSequence, limit: int = 64):
    """Stutter-free timed words whose state-sequence image is `kappa`.

    Only action-based sequences have preimages; each punctual step contributes
    the orderings of its action set.
    """
    from .structures import is_action_based

    if not is_action_based(kappa):
        raise MtlsemError("only action-based state sequences have word preimages")
    punctuals = [(sorted(props), iv.lo.value) for props, iv in kappa.steps if props]
    out = []
    for orderings in itertools.product(*(itertools.permutations(p) for p, _ in punctuals)):
        events = []
        for (_, t), acts in zip(punctuals, orderings):
            events.extend((a, t) for a in acts)
        out.append(TimedWord(tuple(events)))
        if len(out) >= limit:
            break
    return out
