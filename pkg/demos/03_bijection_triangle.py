"""Subsets, deviation vectors, and reversal products are the same data.

Independent of any prime: subsets T of {1,..,r-1} correspond bijectively to
weakly decreasing integer vectors satisfying two inequalities, and to
involutions built from reversals of consecutive intervals. All 2^(r-1)
objects of each kind appear, and the three translations close a triangle.
"""

from itertools import combinations

from normanform import (SubsetProfile, eps_to_perm, eps_to_subset, perm_to_eps,
                        subset_to_eps, subset_to_perm)

R = 4
print(f"all {2 ** (R - 1)} subsets of [1, {R - 1}] and their alter egos:\n")
print(f"{'T':<12} {'epsilon':<18} pi")
for k in range(R):
    for members in combinations(range(1, R), k):
        T = SubsetProfile(R, members)
        eps = subset_to_eps(T)
        pi = subset_to_perm(T)
        print(f"{str(set(members) or '{}'):<12} {str(eps.entries):<18} {pi}")

print("\nround-trips close the triangle:")
T = SubsetProfile(5, (2, 3))
eps = subset_to_eps(T)
pi = subset_to_perm(T)
print(f"  T = {set(T.members)}")
print(f"  T -> eps            = {eps.entries}")
print(f"  eps -> pi           = {eps_to_perm(eps)}   (same as T -> pi = {pi})")
print(f"  pi -> eps           = {perm_to_eps(pi).entries}")
print(f"  eps -> descent set  = {set(eps_to_subset(eps).members)}")

print("""
The identity permutation corresponds to the full subset and to the staircase
vector (r-1, r-3, ..., 1-r); the empty subset gives the full reversal.
""")
