"""Tensor decompositions V_r (x) V_s as multisets of indecomposable dimensions,
and the closed-form decomposition identities used by the group-structure proofs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .jordan import lambda_of
from .parith import ensure_prime, p_parts, p_power_at_least


class GreenIdentityViolation(RuntimeError):
    """A closed-form decomposition identity failed (an implementation bug)."""


@dataclass(frozen=True)
class GreenDecomposition:
    """Summands as (dimension, multiplicity) pairs, dimensions descending."""

    summands: tuple[tuple[int, int], ...]

    @property
    def total(self) -> int:
        return sum(d * m for d, m in self.summands)

    def as_dict(self) -> dict[int, int]:
        return dict(self.summands)


@dataclass(frozen=True)
class GreenIdentityReport:
    """One record per identity instance checked: (name, parameters, expected summands)."""

    p: int
    e_max: int
    instances: tuple[tuple[str, tuple[int, ...], tuple[tuple[int, int], ...]], ...]

    @property
    def checked(self) -> int:
        return len(self.instances)


def decompose(r: int, s: int, p: int) -> GreenDecomposition:
    """Multiset of parts of the Jordan partition, multiplicities collected."""
    lam = lambda_of(r, s, p)
    dec = GreenDecomposition(lam.multiplicities())
    assert dec.total == r * s
    return dec


def _expected(pairs: list[tuple[int, int]]) -> GreenDecomposition:
    """Normalise an expected right-hand side: drop zero multiplicities, sort descending."""
    kept = sorted(((d, m) for d, m in pairs if m > 0), reverse=True)
    return GreenDecomposition(tuple(kept))


def check_green_identities(p: int, e_max: int, a_max: int = 10,
                           r_cap: int = 96) -> GreenIdentityReport:
    """Verify the closed-form decompositions for every b = p^e, e <= e_max.

    Checks V_1 (x) V_b = V_b; V_b (x) V_{b+1} = V_{2b} + (b-1) V_b for b > 1;
    V_{b+1} (x) V_r = V_{r+b} + (b-1) V_r + V_{r-b} for r with p-part b > 1;
    and V_r (x) V_{p^m+b+1} = V_{p^m+r+b} + (b-1) V_{p^m+r} + V_{p^m+r-b}
    + (r-b-1) V_{p^m} for b < r <= p^m. Any mismatch raises
    GreenIdentityViolation naming the instance.
    """
    ensure_prime(p)
    if e_max < 1:
        raise ValueError(f"e_max must be >= 1, got {e_max!r}")
    instances = []

    def check(name: str, params: tuple[int, ...], got: GreenDecomposition,
              expected: GreenDecomposition) -> None:
        if got.summands != expected.summands:
            raise GreenIdentityViolation(
                f"{name} at {params}: computed {got.summands}, expected {expected.summands}")
        instances.append((name, params, expected.summands))

    for e in range(0, e_max + 1):
        b = p**e
        check("unit", (b,), decompose(1, b, p), _expected([(b, 1)]))
        if b == 1:
            continue
        check("adjacent", (b,), decompose(b, b + 1, p),
              _expected([(2 * b, 1), (b, b - 1)]))
        for a in range(2, a_max + 1):
            if a % p == 0:
                continue
            r = a * b
            if r > r_cap:
                break
            check("p-part-step", (b, r), decompose(b + 1, r, p),
                  _expected([(r + b, 1), (r, b - 1), (r - b, 1)]))
            m, pm = p_power_at_least(r, p)
            assert p_parts(r, p).b == b
            check("above-period", (b, r, pm), decompose(r, pm + b + 1, p),
                  _expected([(pm + r + b, 1), (pm + r, b - 1),
                             (pm + r - b, 1), (pm, r - b - 1)]))
    return GreenIdentityReport(p, e_max, tuple(instances))
