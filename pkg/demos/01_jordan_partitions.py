"""How the Jordan partition of J_r (x) J_s depends on the characteristic.

The tensor product of two unipotent Jordan blocks is again unipotent, so its
Jordan canonical form is a partition of r*s with exactly r parts. Over a large
characteristic the answer is the staircase r+s+1-2n; small primes bend it.
"""

from normanform import deviation, lambda_of, pi_of

R, S = 4, 6

print(f"J_{R} (x) J_{S}: partitions of {R * S} with {R} parts\n")
print(f"{'p':>3}  {'lambda':<18} {'pi':<12} epsilon")
for p in (2, 3, 5, 7, 11, 13):
    lam = lambda_of(R, S, p)
    pi = pi_of(R, S, p)
    eps = deviation(R, S, p)
    print(f"{p:>3}  {str(lam.parts):<18} {str(pi):<12} {eps.entries}")

print("""
For p >= r+s-1 = 9 the staircase (9, 7, 5, 3) appears and the permutation is
trivial; that is the 'standard' case. For smaller primes the partition clumps
into repeated parts, and the permutation records exactly how the staircase was
shuffled: n and m = pi(n) swap precisely when lambda_n deviates from the
staircase by m - n.
""")

print("The permutation and the partition determine each other:")
p = 3
lam = lambda_of(R, S, p)
pi = pi_of(R, S, p)
for n in range(1, R + 1):
    lhs = pi(n)
    rhs = (R + 1 - n) + S - lam.parts[n - 1]
    print(f"  n={n}: pi(n) = {lhs} = (r+1-n) + s - lambda_n = {rhs}")
