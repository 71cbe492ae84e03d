import random
from math import factorial

import pytest

from normanform.groupengine import (DegreeCapExceeded, PermGroup, closure,
                                    diagonal_embed, dihedral_elements,
                                    expected_wreath_order, generator_census,
                                    group_generators, group_order, membership,
                                    phi_image, preserves_blocks, residue_blocks,
                                    verify_wreath)
from normanform.jordan import pi_of
from normanform.parith import p_power_at_least
from normanform.perm import (Permutation, compose, format_cycles, identity, rev,
                             transposition)


def random_perm(rng, r):
    imgs = list(range(1, r + 1))
    rng.shuffle(imgs)
    return Permutation(tuple(imgs))


def test_group_order_examples():
    assert group_order(PermGroup([transposition(1, 2, 2)], 2)) == 2
    for r in range(2, 9):
        cyc = Permutation(tuple(range(2, r + 1)) + (1,))
        assert group_order(PermGroup([transposition(1, 2, r), cyc], r)) == factorial(r)


def test_chain_order_equals_closure_order():
    rng = random.Random(99)
    for _ in range(150):
        deg = rng.randint(2, 7)
        gens = [random_perm(rng, deg) for _ in range(rng.randint(1, 3))]
        G = PermGroup(gens, deg)
        assert G.order() == len(closure(gens, deg, limit=5100))


def test_membership_examples():
    G3 = PermGroup([Permutation((2, 3, 1))], 3)
    assert membership(G3, identity(3))
    assert not membership(G3, transposition(1, 2, 3))
    G = PermGroup(group_generators(6, 3), 6)
    assert membership(G, diagonal_embed(transposition(1, 2, 2), 2, 3))


def test_membership_degree_mismatch():
    G = PermGroup([transposition(1, 2, 3)], 3)
    with pytest.raises(ValueError):
        membership(G, identity(4))


def test_degree_cap():
    with pytest.raises(DegreeCapExceeded):
        PermGroup([identity(70)], 70)
    PermGroup([identity(70)], 70, cap=70)


def test_group_generators_examples():
    assert group_generators(2, 2) == [transposition(1, 2, 2)]
    gens3 = {format_cycles(g) for g in group_generators(3, 2)}
    assert gens3 == {"(1,2)", "(1,3)", "(2,3)"}
    gens4 = {format_cycles(g) for g in group_generators(4, 2)}
    assert "(1,4)(2,3)" in gens4 and "(2,4)" in gens4


def test_generator_census_examples():
    assert generator_census(2, 2) == 2
    assert generator_census(3, 2) == 4
    for (r, p) in [(4, 2), (5, 2), (4, 3), (6, 3), (5, 5)]:
        pm = p_power_at_least(r, p)[1]
        assert generator_census(r, p) <= min(2 * r + 8, pm)


def test_residue_blocks():
    assert residue_blocks(6, 3) == [(1, 4), (2, 5), (3, 6)]
    assert residue_blocks(6, 1) == [(1, 2, 3, 4, 5, 6)]
    with pytest.raises(ValueError):
        residue_blocks(6, 4)


def test_phi_image_examples():
    assert format_cycles(phi_image(pi_of(6, 9, 3), 3)) == "(1,3)"
    assert phi_image(identity(6), 3) == identity(3)
    # full reversal: blocks are reflected
    g = rev(1, 6, 6)
    got = phi_image(g, 3)
    want = Permutation(tuple((6 - n) % 3 + 1 for n in (1, 2, 3)))
    assert got == want


def test_phi_image_rejects_block_breakers():
    with pytest.raises(ValueError):
        phi_image(transposition(1, 2, 6), 3)
    assert not preserves_blocks(transposition(1, 2, 6), 3)


def test_phi_image_formula_for_generators():
    # induced block action of pi(r,s,p) is n -> (s - n) mod b + 1
    for (r, p, b) in [(6, 3, 3), (12, 2, 4), (10, 5, 5), (8, 2, 8)]:
        pm = p_power_at_least(r, p)[1]
        for s in range(r, r + pm):
            g = pi_of(r, s, p)
            want = Permutation(tuple((s - n) % b + 1 for n in range(1, b + 1)))
            assert phi_image(g, b) == want, (r, p, s)


def test_phi_is_homomorphism_on_products():
    rng = random.Random(3)
    gens = group_generators(12, 2)
    b = 4
    for _ in range(50):
        g = rng.choice(gens)
        h = rng.choice(gens)
        assert phi_image(compose(g, h), b) == compose(phi_image(g, b), phi_image(h, b))


def test_diagonal_embed_examples():
    assert format_cycles(diagonal_embed(transposition(1, 2, 2), 2, 3)) == "(1,4)(2,5)(3,6)"
    assert diagonal_embed(identity(3), 3, 2) == identity(6)
    cyc = Permutation((2, 3, 1))
    assert diagonal_embed(cyc, 3, 1) == cyc


def test_dihedral_elements():
    assert len(dihedral_elements(1)) == 1
    assert len(dihedral_elements(2)) == 2
    for b in (3, 4, 5, 8):
        assert len(dihedral_elements(b)) == 2 * b


def test_expected_wreath_order():
    assert expected_wreath_order(1, 4) == 8
    assert expected_wreath_order(3, 2) == 72
    assert expected_wreath_order(2, 3) == 48
    assert expected_wreath_order(5, 1) == 120
    assert expected_wreath_order(3, 4) == 10368


def test_verify_wreath_examples():
    for (r, p, order) in [(4, 2, 8), (6, 3, 48), (5, 3, 120), (6, 2, 72)]:
        rep = verify_wreath(r, p)
        assert rep.order == order == rep.expected_order
        assert rep.verdict, rep


def test_verify_wreath_r_one_convention():
    rep = verify_wreath(1, 3)
    assert rep.verdict and rep.order == 1


def test_l9_product_is_transposition():
    # pi_1 pi_0 pi_b pi_{b+1} = (1, b+1) whenever a > 1 and b > 1
    for (r, p) in [(6, 3), (12, 2), (10, 5), (12, 3)]:
        b = verify_wreath(r, p).b
        pm = p_power_at_least(r, p)[1]
        pi = {k: pi_of(r, pm + k, p) for k in (0, 1, b, b + 1)}
        product = compose(compose(compose(pi[1], pi[0]), pi[b]), pi[b + 1])
        assert product == transposition(1, b + 1, r)


def test_generators_are_involutions():
    for (r, p) in [(5, 2), (9, 3), (8, 2), (7, 5)]:
        for g in group_generators(r, p):
            assert g.is_involution() and not g.is_identity()
