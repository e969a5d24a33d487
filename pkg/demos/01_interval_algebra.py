"""Exact rational intervals: the substrate every dense-time verdict rests on.

Run with: python3 demos/01_interval_algebra.py
"""

from mtlsem import IntervalSet, back_shift, parse_interval, punctual, rational

print("Rationals parse exactly: '3.3' ->", rational("3.3"))

# intervals carry open/closed flags on both ends
a = parse_interval("[0,1)")
b = parse_interval("(1,2]")
print(f"\n{a} and {b} do not merge (the point 1 is missing):")
print("  union =", IntervalSet.of(a).union(IntervalSet.of(b)))

c = parse_interval("[0,1]")
print(f"{c} and {b} are adjacent, so they merge:")
print("  union =", IntervalSet.of(c).union(IntervalSet.of(b)))

# complement of two isolated points in a domain: open slots around them
pts = IntervalSet.of(punctual(1), punctual("33/10"))
print("\nremoving the points 1 and 33/10 from [0,33/10]:")
print("  complement =", pts.complement(parse_interval("[0,33/10]")))

# back_shift answers the Until quantifier in one step: from which base times t
# does some witness t' in Q satisfy t' - t in I with t' strictly later?
q = punctual("33/10")
i = parse_interval("[0,7/2]")
print(f"\nbase times that reach a witness at {q} through the window {i}:")
print("  back_shift =", back_shift(q, i))
print("(the witness itself is excluded: a strict-future quantifier never")
print(" reaches distance 0, so the result is right-open at 33/10)")

print("\nwindow [0,0] can never be crossed strictly into the future:")
print("  back_shift([5,5], [0,0]) =", back_shift(punctual(5), parse_interval("[0,0]")))
