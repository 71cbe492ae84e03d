"""Exact arithmetic primitives: primality, least residues, Kummer valuations, p-parts."""

from __future__ import annotations

from math import gcd
from typing import NamedTuple


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def ensure_prime(p: int) -> int:
    """Return p if prime, else raise ValueError."""
    if not is_prime(p):
        raise ValueError(f"p must be a prime >= 2, got {p!r}")
    return p


def mod_interval(n: int, ell: int) -> int:
    """The unique representative of n modulo ell lying in [0, ell-1].

    Correct for negative n: mod_interval(-1, 4) == 3.
    """
    if ell < 1:
        raise ValueError(f"modulus must be a positive integer, got {ell!r}")
    return n % ell


def p_adic_valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n (n != 0)."""
    ensure_prime(p)
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def binom_valuation(n: int, k: int, p: int) -> int:
    """p-adic valuation of C(n, k), as the number of carries adding k and n-k in base p."""
    ensure_prime(p)
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    a, b = k, n - k
    carries = 0
    carry = 0
    while a > 0 or b > 0 or carry:
        t = a % p + b % p + carry
        carry = 1 if t >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


class PPartDecomposition(NamedTuple):
    """r = a * b with gcd(a, p) = 1 and b = p**e."""

    r: int
    a: int
    b: int
    e: int


def p_parts(r: int, p: int) -> PPartDecomposition:
    """Split r into its p'-part a and p-part b = p**e."""
    ensure_prime(p)
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")
    a, e = r, 0
    while a % p == 0:
        a //= p
        e += 1
    d = PPartDecomposition(r, a, r // a, e)
    assert d.a * d.b == r and gcd(d.a, p) == 1
    return d


def p_power_at_least(r: int, p: int) -> tuple[int, int]:
    """Minimal (m, p**m) with r <= p**m; m = ceil(log_p r), so (0, 1) for r = 1."""
    ensure_prime(p)
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")
    m, q = 0, 1
    while q < r:
        q *= p
        m += 1
    return m, q
