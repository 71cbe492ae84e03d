import pytest

from normanform.delta import delta_profile, dn_exact, dn_valuation
from normanform.parith import p_adic_valuation


def test_dn_valuation_examples():
    assert dn_valuation(2, 2, 2, 1) == 1   # D_1(2,2) = C(2,1) = 2
    assert dn_valuation(2, 3, 3, 1) == 1   # D_1(2,3) = C(3,2) = 3
    assert dn_valuation(4, 4, 3, 2) == 0   # D_2(4,4) = 20, coprime to 3


def test_dn_valuation_range_errors():
    with pytest.raises(ValueError):
        dn_valuation(3, 2, 2, 1)  # r > s
    with pytest.raises(ValueError):
        dn_valuation(3, 4, 2, 0)
    with pytest.raises(ValueError):
        dn_valuation(3, 4, 2, 4)


def test_dn_exact_values():
    assert dn_exact(2, 2, 1) == 2
    assert dn_exact(4, 4, 2) == 20
    assert dn_exact(3, 5, 2) == 10
    assert dn_exact(5, 5, 0) == 1
    assert dn_exact(5, 5, 5) == 1


def test_delta_profile_examples():
    prof = delta_profile(2, 2, 2)
    assert prof.delta == (1, 0, 1)
    assert prof.L == (1, 2)
    assert prof.R == (1, 0)

    prof = delta_profile(2, 2, 5)
    assert prof.delta == (1, 1, 1)
    assert prof.L == (1, 1)
    assert prof.R == (0, 0)

    for s in (1, 4, 9):
        prof = delta_profile(1, s, 3)
        assert prof.delta == (1, 1)
        assert prof.L == (1,)
        assert prof.R == (0,)


def test_delta_endpoints_and_gap_bounds():
    for p in (2, 3, 5):
        for r in range(1, 16):
            for s in range(r, 16):
                prof = delta_profile(r, s, p)
                assert prof.delta[0] == 1 and prof.delta[r] == 1
                assert prof.L[0] == 1  # L(1) = 1 always
                for n in range(1, r + 1):
                    assert 1 <= prof.L[n - 1] <= n
                    assert 0 <= prof.R[n - 1] <= r - n


def test_valuation_agrees_with_exact_determinant():
    for r in range(1, 31):
        for s in range(r, 31):
            for n in range(1, r + 1):
                exact = dn_exact(r, s, n)  # p-independent big integer
                for p in (2, 3, 5, 7):
                    assert (dn_valuation(r, s, p, n) == 0) == (exact % p != 0), (r, s, p, n)


def test_valuation_equals_exact_valuation_small():
    for p in (2, 3, 5):
        for r in range(1, 13):
            for s in range(r, 13):
                for n in range(1, r + 1):
                    assert dn_valuation(r, s, p, n) == p_adic_valuation(dn_exact(r, s, n), p)


def test_descent_set_reconstructs_gaps():
    for p in (2, 3, 5):
        for r in range(1, 21):
            for s in range(r, 21):
                prof = delta_profile(r, s, p)
                cuts = (0,) + prof.descent_set() + (r,)
                for lo, hi in zip(cuts, cuts[1:]):
                    for n in range(lo + 1, hi + 1):
                        assert prof.L[n - 1] == n - lo
                        assert prof.R[n - 1] == hi - n
