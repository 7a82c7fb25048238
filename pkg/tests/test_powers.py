"""Splice decomposition of powers, cores, translation numbers, special shapes."""

import random

import pytest

from helpers import expected_core_of_fragment, random_nontrivial, special_instances
from surfgroup.group_core import DomainError, cyclic_rotations, invert_word
from surfgroup.powers import (
    build_type_a,
    check_length_formula,
    ci,
    classify_special,
    nf_power,
    power_decompose,
    translation_number,
)
from surfgroup.rewrite import is_cyclically_irreducible, is_irreducible, nf


def test_translation_number_basics(ctx2):
    assert translation_number(ctx2, ()) == 0
    assert translation_number(ctx2, ctx2.relator) == 0
    assert translation_number(ctx2, (1,)) == 1
    assert translation_number(ctx2, (1, 2)) == 2


def test_power_decompose_requires_nontrivial(ctx2):
    with pytest.raises(DomainError):
        power_decompose(ctx2, ())
    with pytest.raises(DomainError):
        power_decompose(ctx2, ctx2.relator)
    with pytest.raises(DomainError):
        nf_power(ctx2, (1,), 0)


def test_nf_power_matches_concatenation(ctx2, ctx3):
    rng = random.Random(3)
    for ctx in (ctx2, ctx3):
        for _ in range(60):
            x = random_nontrivial(ctx, 12, rng)
            for k in range(1, 7):
                assert nf_power(ctx, x, k) == nf(ctx, x * k)
    assert nf_power(ctx2, (1, -1), 5) == ()


def test_decomposition_identities(ctx2, ctx3):
    """prefix W^(k-2) suffix assembles nf(x^k); both seams conjugate W to x."""
    rng = random.Random(5)
    for ctx in (ctx2, ctx3):
        for _ in range(60):
            x = nf(ctx, random_nontrivial(ctx, 12, rng))
            pd = power_decompose(ctx, x)
            assert is_cyclically_irreducible(ctx, pd.core)
            assert len(pd.core) == translation_number(ctx, x)
            assert pd.assemble(2) == nf(ctx, x + x)
            for k in (3, 4, 5):
                assert pd.assemble(k) == nf(ctx, x * k)
            assert nf(ctx, pd.prefix + pd.core + invert_word(pd.prefix)) == x
            assert nf(ctx, invert_word(pd.suffix) + pd.core + pd.suffix) == x


def test_growth_and_core_length(ctx2, ctx3):
    rng = random.Random(9)
    for ctx in (ctx2, ctx3):
        for _ in range(80):
            x = nf(ctx, random_nontrivial(ctx, 14, rng))
            tau = translation_number(ctx, x)
            assert tau == len(nf(ctx, x + x)) - len(x)
            assert tau == len(ci(ctx, x))
            assert tau >= 1
            assert check_length_formula(ctx, x, 6)


def test_core_is_fixed_point(ctx2):
    rng = random.Random(13)
    for _ in range(60):
        w = ci(ctx2, random_nontrivial(ctx2, 12, rng))
        assert ci(ctx2, w) == w
        assert nf_power(ctx2, w, 3) == w * 3


def test_core_of_powers(ctx2):
    rng = random.Random(17)
    for _ in range(40):
        x = random_nontrivial(ctx2, 8, rng)
        base = ci(ctx2, x)
        for r in (2, 3, 4):
            core_r = ci(ctx2, x * r)
            assert len(core_r) == r * len(base)
            assert core_r in cyclic_rotations(base * r)


def test_tau_is_conjugation_invariant(ctx2):
    rng = random.Random(19)
    for _ in range(60):
        x = random_nontrivial(ctx2, 10, rng)
        w = random_nontrivial(ctx2, 6, rng)
        conj = nf(ctx2, w + x + invert_word(w))
        assert translation_number(ctx2, conj) == translation_number(ctx2, x)


def test_core_table_for_relator_fragments(ctx2, ctx3):
    """Cores of every proper prefix of every relator-table entry."""
    for ctx in (ctx2, ctx3):
        n4 = ctx.alphabet_size
        for eidx in range(len(ctx.relator_table)):
            E = ctx.relator_table[eidx]
            for k in range(1, n4):
                assert ci(ctx, E[:k]) == expected_core_of_fragment(ctx, eidx, k)


def test_special_builders_round_trip(ctx2):
    instances = special_instances(ctx2)
    seen = {tag.tag for tag, _ in instances}
    assert seen == {"TypeA", "TypeB", "TypeC"}
    from surfgroup.powers import build_special

    for tag, x in instances:
        assert is_irreducible(ctx2, x)
        assert x[0] != -x[-1]
        assert not is_cyclically_irreducible(ctx2, x)
        got = classify_special(ctx2, x)
        assert got.tag == tag.tag
        assert build_special(ctx2, got) == x


def test_special_words_have_no_settled_rotation(ctx2):
    """No rotation of a special word normalizes to a cyclically irreducible
    word; that failure is exactly why they are singled out."""
    for _tag, x in special_instances(ctx2, t_values=(1,), t_sums=(0, 1)):
        for r in cyclic_rotations(x):
            assert not is_cyclically_irreducible(ctx2, nf(ctx2, r))


def test_plain_words_with_reducible_square_have_one(ctx2):
    rng = random.Random(29)
    found = 0
    while found < 60:
        w = nf(ctx2, random_nontrivial(ctx2, 14, rng))
        if not w or w[0] == -w[-1] or is_cyclically_irreducible(ctx2, w):
            continue
        if classify_special(ctx2, w).tag is not None:
            continue
        found += 1
        assert any(
            is_cyclically_irreducible(ctx2, nf(ctx2, r))
            for r in cyclic_rotations(w)
        )


def test_classifier_domain_and_negatives(ctx2):
    E = ctx2.relator_table[0]
    with pytest.raises(DomainError):
        classify_special(ctx2, E[:ctx2.n_gens + 1])  # reducible
    with pytest.raises(DomainError):
        classify_special(ctx2, (1, 2, -1))  # not cyclically freely reduced
    rng = random.Random(31)
    for _ in range(40):
        w = ci(ctx2, random_nontrivial(ctx2, 10, rng))
        assert classify_special(ctx2, w).tag is None


def test_build_type_a_validation(ctx2):
    g2 = ctx2.n_gens
    eidx = next(
        i for i, E in enumerate(ctx2.relator_table)
        if ctx2.greater(E[0], E[g2 - 1])
    )
    with pytest.raises(ValueError):
        build_type_a(ctx2, eidx, 0, 0, 0)
    with pytest.raises(ValueError):
        build_type_a(ctx2, eidx, g2, 0, 0)
    bad = next(
        i for i, E in enumerate(ctx2.relator_table)
        if not ctx2.greater(E[0], E[g2 - 1])
    )
    with pytest.raises(ValueError):
        build_type_a(ctx2, bad, 1, 0, 0)


def test_special_instances_exist_at_higher_genus(ctx3):
    instances = special_instances(ctx3, t_values=(1,), t_sums=(0,))
    assert {tag.tag for tag, _ in instances} == {"TypeA", "TypeB", "TypeC"}
    for tag, x in instances[:40]:
        got = classify_special(ctx3, x)
        assert got.tag == tag.tag
