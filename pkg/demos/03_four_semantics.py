"""One word, one pair of formulas, four satisfaction relations.

The order-sensitive formula ("eventually b immediately followed by a at the
same instant") holds pointwise but is invisible to the dense readings; the
windowed formula ("from some time strictly inside (0,1), c within 3.5") needs
an off-event start and so fails pointwise.  The mixed semantics sees both.

Run with: python3 demos/03_four_semantics.py
"""

from mtlsem import (
    alphabet,
    compact,
    eval_its,
    eval_itw,
    eval_mx,
    eval_pw,
    parse,
    sat_set_itw,
    sat_set_mx,
    word,
    word_to_tss,
)

ABC = alphabet("a,b,c")
rho = word([("a", "0"), ("b", "1"), ("a", "1"), ("c", "3.3")])
b_then_a = parse("F(b & X[0,0] a)", ABC)
windowed_c = parse("F(0,1) F[0,3.5] c", ABC)

cw = compact(rho)
kappa = word_to_tss(rho)

print("word:", rho)
rows = [
    ("pointwise   ", eval_pw(rho, 0, b_then_a), eval_pw(rho, 0, windowed_c)),
    ("interval/word", eval_itw(rho, 0, b_then_a), eval_itw(rho, 0, windowed_c)),
    ("interval/state", eval_its(kappa, 0, b_then_a), eval_its(kappa, 0, windowed_c)),
    ("mixed        ", eval_mx(cw, 0, 0, b_then_a), eval_mx(cw, 0, 0, windowed_c)),
]
print(f"\n{'semantics':<15} {'b-then-a':<10} windowed-c")
for name, v1, v2 in rows:
    print(f"{name:<15} {str(v1):<10} {v2}")

print("\ndense satisfaction set of the windowed formula over [0, 3.3]:")
print("  ", sat_set_itw(rho, windowed_c))

print("\nmixed satisfaction set of the order-sensitive formula:")
got = sat_set_mx(cw, b_then_a)
print("   grid points:", sorted(got.points))
print("   gap times:  ", got.gap)
print("(the pair (1,0) is the b that is immediately followed by a;")
print(" every earlier point can still reach that witness)")
