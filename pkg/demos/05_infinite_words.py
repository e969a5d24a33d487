"""Infinite words as lassos: exact pointwise verdicts, three-valued dense ones.

A lasso is a finite prefix plus a repeating timed period.  Pointwise verdicts
are exact even for unbounded formulas (suffix languages repeat one period
apart, so Until solves as a fixpoint on a finite quotient).  The dense and
mixed readings refute unbounded formulas only up to a cut, reporting Unknown
when an optimistic and a pessimistic completion disagree.

Run with: python3 demos/05_infinite_words.py
"""

from mtlsem import (
    alphabet,
    eval_itw_lasso,
    eval_mx_lasso,
    eval_pw_lasso,
    lasso,
    parse,
    unroll,
    word,
)

ABC = alphabet("a,b,c")
b_then_a = parse("F(b & X[0,0] a)", ABC)

swap_ba = word([("a", "0"), ("b", "1"), ("a", "1"), ("c", "3.3")])
swap_ab = word([("a", "0"), ("a", "1"), ("b", "1"), ("c", "3.3")])
inf_ba = lasso(swap_ba, ["c"], ["1"], "1")
inf_ab = lasso(swap_ab, ["c"], ["1"], "1")

print("the two lassos extend the swap pair by a c every time unit:")
print("  ", unroll(inf_ba, 6))
print("  ", unroll(inf_ab, 6))

print("\npointwise verdicts are exact, even for this unbounded formula:")
print("  b-then-a on the ba-lasso:", eval_pw_lasso(inf_ba, b_then_a))
print("  b-then-a on the ab-lasso:", eval_pw_lasso(inf_ab, b_then_a))

print("\nthe dense reading cannot refute an unbounded formula from a finite cut:")
print("  itw verdict on the ab-lasso:", eval_itw_lasso(inf_ab, b_then_a).value)

gamma2 = parse("F[0,1](F[0,1) b & F[1,1] c)", ABC)
gamma3 = parse("F(0,1](F[0,1) b & F[1,1] c)", ABC)
probe = lasso(word([("a", 0), ("c", 0), ("b", 0), ("c", 1), ("c", 3)]),
              ["c"], ["1"], "1")
print("\nbounded formulas get definite lasso verdicts; here the closed-start")
print("variant counts positions inside the block at time 0, the open-start")
print("variant does not:")
print("  closed start:", eval_mx_lasso(probe, gamma2).value)
print("  open start:  ", eval_mx_lasso(probe, gamma3).value)

mix_only = parse(
    "F(0,1](F[0,1) b & F[1,1] c) | (F(b & X[0,0] a) & G(0,2] noact)", ABC)
witness = lasso(word([("c", 0), ("b", 0), ("a", 0), ("c", 5)]), ["c"], ["1"], "1")
print("\na disjunction whose unbounded part has its witness in the prefix is")
print("still definite:", eval_mx_lasso(witness, mix_only).value)
