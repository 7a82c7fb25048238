"""Class normal forms, roots, conjugate powers, reducing pairs."""

import math
import random

import pytest

from helpers import random_nontrivial
from surfgroup.conjugacy import (
    ConjPowerResult,
    RootResult,
    are_conjugate,
    class_nf,
    conj_power,
    reducing_pair,
    root,
)
from surfgroup.group_core import (
    DomainError,
    cyclic_rotations,
    invert_word,
    word_sort_key,
)
from surfgroup.powers import ci, nf_power
from surfgroup.rewrite import nf


def conjugates(ctx, z, y):
    return nf(ctx, z + nf(ctx, y) + invert_word(z))


def test_rotation_is_not_the_whole_story(ctx2):
    """c3 c4 c1^-1 and c4 c3 c1^-1 are conjugate but not cyclic rotations."""
    x = (3, 4, -1)
    y = (4, 3, -1)
    assert y not in cyclic_rotations(x)
    cx = class_nf(ctx2, x)
    cy = class_nf(ctx2, y)
    assert cx.class_nf == cy.class_nf == (4, 3, -1)
    assert cx.exceptional and cy.exceptional
    z = are_conjugate(ctx2, x, y)
    assert z is not None
    assert conjugates(ctx2, z, y) == nf(ctx2, x)


def test_class_nf_of_trivial_raises(ctx2):
    with pytest.raises(DomainError):
        class_nf(ctx2, ())
    with pytest.raises(DomainError):
        class_nf(ctx2, ctx2.relator)


def test_class_nf_certificates_and_invariance(ctx2, ctx3):
    rng = random.Random(101)
    for ctx in (ctx2, ctx3):
        for _ in range(80):
            x = random_nontrivial(ctx, 10, rng)
            w = random_nontrivial(ctx, 6, rng)
            cert = class_nf(ctx, x)
            assert conjugates(ctx, cert.conjugator, x) == cert.class_nf
            moved = nf(ctx, w + x + invert_word(w))
            again = class_nf(ctx, moved)
            assert again.class_nf == cert.class_nf
            assert conjugates(ctx, again.conjugator, moved) == cert.class_nf


def test_class_nf_minimal_over_core_rotations(ctx2):
    rng = random.Random(103)
    for _ in range(60):
        x = random_nontrivial(ctx2, 10, rng)
        cert = class_nf(ctx2, x)
        rotations = cyclic_rotations(ci(ctx2, x))
        candidates = set(rotations)
        if cert.exceptional:
            candidates |= {tuple(reversed(r)) for r in rotations}
        assert cert.class_nf in candidates
        best = min(candidates, key=lambda w: word_sort_key(ctx2, w))
        if cert.exceptional:
            assert cert.class_nf == best
        else:
            assert cert.class_nf == min(
                rotations, key=lambda w: word_sort_key(ctx2, w)
            )


def test_exceptional_blocks_conjugate_to_their_reversals(ctx2):
    g2 = ctx2.n_gens
    blk = g2 - 1
    for eidx in (0, 5, 9):
        E = ctx2.relator_table[eidx]
        for i in range(1, blk + 1):
            for t in (1, 2):
                w = (E[i:blk] + E[:i]) * t
                cert = class_nf(ctx2, w)
                assert cert.exceptional
                rev = tuple(reversed(w))
                z = are_conjugate(ctx2, w, rev)
                assert z is not None
                assert conjugates(ctx2, z, rev) == nf(ctx2, w)


def test_conjugate_fragments_are_equal_or_reversed(ctx2):
    """Half-relator fragments b_1..b_k meet in a class only by identity
    or reversal; checked as a biconditional over every pair of entries."""
    g2 = ctx2.n_gens
    for k in range(1, g2 + 1):
        fragments = {E[:k] for E in ctx2.relator_table}
        for u in fragments:
            for v in fragments:
                expected = u == v or u == tuple(reversed(v))
                assert (are_conjugate(ctx2, u, v) is not None) == expected


def test_are_conjugate_edges(ctx2):
    assert are_conjugate(ctx2, (), ctx2.relator) == ()
    assert are_conjugate(ctx2, (), (1,)) is None
    assert are_conjugate(ctx2, (1,), ()) is None
    assert are_conjugate(ctx2, (1,), (2,)) is None
    assert are_conjugate(ctx2, (1,), (-1,)) is None


def test_are_conjugate_random_positives(ctx2, ctx3):
    rng = random.Random(107)
    for ctx in (ctx2, ctx3):
        for _ in range(50):
            x = random_nontrivial(ctx, 10, rng)
            w = random_nontrivial(ctx, 6, rng)
            y = nf(ctx, w + x + invert_word(w))
            z = are_conjugate(ctx, x, y)
            assert z is not None
            assert conjugates(ctx, z, y) == nf(ctx, x)


def test_root_examples(ctx2):
    assert root(ctx2, (1,)) == RootResult((1,), 1)
    res = root(ctx2, (1, 2) * 3)
    assert res.root == (1, 2)
    assert res.exponent == 3
    with pytest.raises(DomainError):
        root(ctx2, ())
    with pytest.raises(DomainError):
        root(ctx2, ctx2.relator)


def test_root_reassembles_and_is_primitive(ctx2, ctx3):
    rng = random.Random(109)
    for ctx in (ctx2, ctx3):
        for _ in range(40):
            y = ci(ctx, random_nontrivial(ctx, 8, rng))
            r = rng.randrange(1, 5)
            x = nf(ctx, y * r)
            res = root(ctx, x)
            assert nf(ctx, res.root * res.exponent) == x
            assert root(ctx, res.root).exponent == 1
            assert res.exponent % r == 0 or r % res.exponent == 0
            assert res.exponent == r * root(ctx, y).exponent


def test_root_exponent_matches_divisor_scan(ctx2):
    rng = random.Random(113)
    for _ in range(40):
        x = random_nontrivial(ctx2, 10, rng)
        w = ci(ctx2, x)
        best = max(
            r for r in range(1, len(w) + 1)
            if len(w) % r == 0 and w == w[:len(w) // r] * r
        )
        assert root(ctx2, x).exponent == best


def test_conj_power_constructed_positives(ctx2):
    rng = random.Random(127)
    for _ in range(40):
        a = root(ctx2, ci(ctx2, random_nontrivial(ctx2, 6, rng))).root
        p = rng.randrange(1, 5)
        q = rng.randrange(1, 5)
        w = random_nontrivial(ctx2, 5, rng)
        x = nf_power(ctx2, a, p)
        y = nf(ctx2, w + nf_power(ctx2, a, q) + invert_word(w))
        res = conj_power(ctx2, x, y)
        d = math.gcd(p, q)
        assert res.found
        assert (res.m, abs(res.n)) == (q // d, p // d)
        lhs = nf_power(ctx2, x, res.m)
        rhs_core = nf_power(ctx2, y if res.n > 0 else invert_word(y), abs(res.n))
        assert lhs == nf(ctx2, res.conjugator + rhs_core + invert_word(res.conjugator))


def test_conj_power_inverse_orientation(ctx2):
    res = conj_power(ctx2, (1, 1), (-1, -1, -1))
    assert res.found
    assert (res.m, res.n) == (3, -2)


def test_conj_power_negative_and_domain(ctx2):
    assert conj_power(ctx2, (1,), (2,)) == ConjPowerResult(False, 0, 0, ())
    with pytest.raises(DomainError):
        conj_power(ctx2, (), (1,))
    with pytest.raises(DomainError):
        conj_power(ctx2, (1,), ctx2.relator)


def test_reducing_pair_examples(ctx2):
    assert reducing_pair(ctx2, (1,), (2,)) == ((), ())
    assert reducing_pair(ctx2, (1, 2, 3), (4,)) == ((1, 2, 3), (4,))
    assert reducing_pair(ctx2, (4, 3), (2, 1)) == ((), ())


def test_reducing_pair_domain(ctx2):
    with pytest.raises(DomainError):
        reducing_pair(ctx2, (1, -1), (2,))  # left factor reducible
    with pytest.raises(DomainError):
        reducing_pair(ctx2, (1,), (-1,))  # junction cancels


def test_reducing_pair_frames_the_product(ctx2):
    """nf(w1 w2) keeps w1's prefix before C1 and w2's suffix after C2."""
    rng = random.Random(131)
    for _ in range(60):
        w1 = nf(ctx2, random_nontrivial(ctx2, 8, rng))
        w2 = nf(ctx2, random_nontrivial(ctx2, 8, rng))
        if not w1 or not w2 or w1[-1] == -w2[0]:
            continue
        c1, c2 = reducing_pair(ctx2, w1, w2)
        f = nf(ctx2, w1 + w2)
        a = len(w1) - len(c1)
        b = len(w2) - len(c2)
        assert w1[:a] == f[:a]
        assert b == 0 or w2[-b:] == f[len(f) - b:]
        assert len(f) >= a + b
