"""Partitions as module decompositions, and closed-form product identities.

Reading the partition as dimensions of indecomposable summands turns tensor
products into sums. For b a power of p, the products V_{b+1} (x) V_r follow a
three-term pattern, and one more identity describes V_r (x) V_{p^m + b + 1}.
"""

from normanform import check_green_identities, decompose


def fmt(dec):
    return " + ".join(f"{m}V_{d}" if m > 1 else f"V_{d}" for d, m in dec.summands)


print("tensor decompositions over GF(3):\n")
for (r, s) in [(2, 3), (3, 4), (4, 6), (6, 13), (5, 12)]:
    dec = decompose(r, s, 3)
    print(f"  V_{r} (x) V_{s} = {fmt(dec)}    (total {dec.total})")

print("\nthe same product over different primes:\n")
for p in (2, 3, 5, 7):
    print(f"  p={p}: V_4 (x) V_6 = {fmt(decompose(4, 6, p))}")

print("\nclosed-form identity sweeps (any mismatch raises):\n")
for p in (2, 3, 5):
    report = check_green_identities(p, e_max=2)
    names = sorted({name for name, _, _ in report.instances})
    print(f"  p={p}: {report.checked} instances of {', '.join(names)}")

print("""
Example instance over GF(3) with b = 3, r = 6, p^m = 9:
  V_6 (x) V_13 = V_18 + 2V_15 + V_12 + 2V_9
""")
print("  computed:", fmt(decompose(6, 13, 3)))
