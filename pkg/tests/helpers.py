"""Shared word generators for the test suite."""

import itertools

from surfgroup.group_core import free_reduce
from surfgroup.powers import SpecialTypeTag, build_special, build_type_a
from surfgroup.rewrite import is_irreducible, nf


def random_freely_reduced(ctx, length, rng):
    """A freely reduced word of exactly `length` letters."""
    w = []
    for _ in range(length):
        x = rng.choice(ctx.letters)
        while w and x == -w[-1]:
            x = rng.choice(ctx.letters)
        w.append(x)
    return tuple(w)


def random_nontrivial(ctx, max_length, rng):
    """A random freely reduced word with nonempty normal form."""
    while True:
        w = random_freely_reduced(ctx, rng.randrange(1, max_length + 1), rng)
        if nf(ctx, w):
            return w


def all_words(ctx, max_len):
    """Every word over the alphabet with length <= max_len, empty included."""
    for n in range(max_len + 1):
        yield from itertools.product(ctx.letters, repeat=n)


def all_freely_reduced(ctx, max_len):
    for w in all_words(ctx, max_len):
        if free_reduce(w) == w:
            yield w


def expected_core_of_fragment(ctx, entry, k):
    """Core of the length-k prefix of a relator-table entry, per the table.

    Below half a relator the prefix is its own core; at exactly half it
    either stays or reverses depending on the order of b_1 and b_2g; above
    half the core is a reversed inner fragment.
    """
    E = ctx.relator_table[entry]
    g2 = ctx.n_gens
    if k < g2:
        return E[:k]
    if k == g2:
        if ctx.greater(E[0], E[g2 - 1]):
            return tuple(reversed(E[:g2]))
        return E[:g2]
    return tuple(reversed(E[k - g2:g2]))


def special_instances(ctx, t_values=(1, 2), t_sums=(0, 1)):
    """All valid special words as (tag, word) pairs.

    Enumerates every type A instance with t1, t2 drawn from t_sums, then
    wraps each as the middle of type B and C instances for every outer
    entry and t in t_values.  Combinations whose built word fails the
    standing premises (irreducible, cyclically freely reduced) never occur
    as cores and are dropped.
    """
    g2, n4 = ctx.n_gens, ctx.alphabet_size
    out = []
    inners = []
    for eidx, E in enumerate(ctx.relator_table):
        if not ctx.greater(E[0], E[g2 - 1]):
            continue
        for r in range(1, g2):
            for t1 in t_sums:
                for t2 in t_sums:
                    tag = SpecialTypeTag("TypeA", entry=eidx, r=r, t1=t1, t2=t2)
                    word = build_type_a(ctx, eidx, r, t1, t2)
                    inners.append((tag, word))
                    out.append((tag, word))
    for eidx, E in enumerate(ctx.relator_table):
        for inner_tag, inner_word in inners:
            for t in t_values:
                if not ctx.greater(E[0], E[g2 - 1]) and inner_word[0] == E[0]:
                    mid = inner_word[1:]
                    if mid and mid[0] != E[n4 - 1] and mid[-1] != E[1]:
                        tag = SpecialTypeTag("TypeB", entry=eidx, t=t, inner=inner_tag)
                        out.append((tag, build_special(ctx, tag)))
                if ctx.greater(E[0], E[g2]) and inner_word[-1] == E[0]:
                    mid = inner_word[:-1]
                    if mid and mid[0] != E[n4 - 1] and mid[-1] != E[1]:
                        tag = SpecialTypeTag("TypeC", entry=eidx, t=t, inner=inner_tag)
                        out.append((tag, build_special(ctx, tag)))
    return [
        (tag, w) for tag, w in out
        if w[0] != -w[-1] and is_irreducible(ctx, w)
    ]
