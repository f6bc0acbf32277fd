"""Where the conventional Young operators stop being orthogonal.

The conventional operator Y_T (row symmetrizer times signed column
antisymmetrizer, normalized by the hook product) is idempotent for every
standard tableau, and for up to four boxes the whole family is
transversal: Y_T Y_U = 0 whenever T != U.  At five boxes this breaks.

Run:  python3 demos/02_transversality_breakdown.py
"""
from youngops import AlgebraElement, YoungTableau, enumerate_syt, young_operator

# Every conventional operator is idempotent.
for n in (2, 3, 4, 5):
    for t in enumerate_syt(n):
        y = young_operator(t)
        assert y * y == y
print("idempotency: Y_T Y_T = Y_T for every standard tableau with <= 5 boxes")

# Up to n = 4 all ordered pairs multiply to zero.
for n in (2, 3, 4):
    ops = [young_operator(t) for t in enumerate_syt(n)]
    for i, yi in enumerate(ops):
        for j, yj in enumerate(ops):
            if i != j:
                assert (yi * yj).is_zero()
print("transversality: Y_T Y_U = 0 for all T != U with up to 4 boxes")
print()

# The classical five-box counterexample.
a = young_operator(YoungTableau.from_string("135/24"))
b = young_operator(YoungTableau.from_string("123/45"))
print("the five-box pair 135/24 and 123/45 (same shape, different fillings):")
print(f"  Y_135/24 * Y_123/45 = 0?   {(a * b).is_zero()}")
prod = b * a
print(f"  Y_123/45 * Y_135/24 = 0?   {prod.is_zero()}  "
      f"({len(prod)} surviving terms)")
print()

# Scan all 26 x 26 ordered pairs at n = 5 and list every failure.
ops = {t.to_string(): young_operator(t) for t in enumerate_syt(5)}
failing = []
for si, yi in ops.items():
    for sj, yj in ops.items():
        want = yi if si == sj else AlgebraElement.zero(5)
        if yi * yj != want:
            failing.append((si, sj))
print(f"full scan of {len(ops)**2} ordered pairs at n=5: "
      f"{len(failing)} failures")
for si, sj in failing:
    print(f"  Y_{si} * Y_{sj} != 0")
print("(the second failing pair is the column-row mirror of the first)")
