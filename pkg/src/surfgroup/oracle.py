"""Independent correctness oracles.

Dehn's algorithm solves the word and conjugacy problems by replacing
any relator fragment longer than half a relator (length 2g+1 out of
4g) with the inverse of the complementary fragment, shortening the
word.  The classical theorems are stated for the canonical
presentation; the same replacement rule is valid for the symmetric
presentation because its pieces (common fragments of two distinct
relator rotations) all have length 1, a small-cancellation condition
far stronger than the C'(1/6) needed for Greendlinger's lemma.  The
oracle shares only the relator table with the rewriting engine, so
agreement between the two is meaningful evidence.

enumerate_ball generates every normal form up to a given length by
breadth-first letter extension, for exhaustive small-radius checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group_core import (
    DomainError,
    GroupContext,
    Word,
    abelianize,
    cyclic_rotations,
    free_reduce,
    invert_word,
)
from .rewrite import _append_step


@dataclass(frozen=True)
class DehnForm:
    """A freely reduced word with no fragment longer than half a relator.

    cyclically_reduced additionally asserts the property for every
    rotation of the word.
    """

    word: Word
    cyclically_reduced: bool


def _find_long_run(ctx: GroupContext, w: Word, start: int, stop: int, cap: int):
    """Leftmost position in [start, stop) where a relator run of length
    > half the relator begins, with its capped length and ambient."""
    threshold = ctx.n_gens + 1
    for p in range(start, stop):
        length, amb = ctx.chain_forward(w, p, cap)
        if length >= threshold:
            return p, length, amb
    return None


def dehn_reduce(ctx: GroupContext, w: Word) -> DehnForm:
    """Shorten w by Dehn replacements until none applies.

    The result is empty exactly when w represents the identity.
    """
    ctx.check_word(w)
    cur = free_reduce(w)
    cap = ctx.alphabet_size
    while True:
        hit = _find_long_run(ctx, cur, 0, len(cur), cap)
        if hit is None:
            break
        p, length, amb = hit
        entry = ctx.entry_at(cur[p], amb)
        cur = free_reduce(cur[:p] + invert_word(entry[length:]) + cur[p + length:])
    return DehnForm(cur, _cyclically_dehn_reduced(ctx, cur))


def _cyclically_dehn_reduced(ctx: GroupContext, w: Word) -> bool:
    """w is assumed Dehn-reduced; check every rotation is as well."""
    n = len(w)
    if n == 0:
        return True
    if w[0] == -w[-1]:
        return False
    if n <= ctx.n_gens:
        return True
    doubled = w + w
    return _find_long_run(ctx, doubled, 0, n, min(ctx.alphabet_size, n)) is None


def dehn_reduce_cyclic(ctx: GroupContext, w: Word) -> Word:
    """Some cyclically Dehn-reduced word conjugate to w.

    Alternates linear reduction, stripping inverse end pairs, and
    rotating a wrap-around relator run to the front where the linear
    pass can see it.  Every round shortens the word, so this stops.
    """
    cur = dehn_reduce(ctx, w).word
    while True:
        if len(cur) >= 2 and cur[0] == -cur[-1]:
            while len(cur) >= 2 and cur[0] == -cur[-1]:
                cur = cur[1:-1]
            cur = dehn_reduce(ctx, cur).word
            continue
        n = len(cur)
        if n > ctx.n_gens:
            hit = _find_long_run(ctx, cur + cur, 0, n, min(ctx.alphabet_size, n))
            if hit is not None:
                cur = dehn_reduce(ctx, cur[hit[0]:] + cur[:hit[0]]).word
                continue
        return cur


def dehn_equal(ctx: GroupContext, u: Word, v: Word) -> bool:
    return dehn_reduce(ctx, u + invert_word(v)).word == ()


def dehn_conjugate(ctx: GroupContext, u: Word, v: Word) -> bool:
    """Conjugacy test on cyclically Dehn-reduced forms.

    Two such forms are conjugate exactly when some rotation U_i equals
    some rotation V_j, or does so after conjugation by one letter.
    An abelianization mismatch short-circuits to False.
    """
    cu = dehn_reduce_cyclic(ctx, u)
    cv = dehn_reduce_cyclic(ctx, v)
    if not cu or not cv:
        return not cu and not cv
    if abelianize(ctx, cu) != abelianize(ctx, cv):
        return False
    rots_u = list(dict.fromkeys(cyclic_rotations(cu)))
    rots_v = list(dict.fromkeys(cyclic_rotations(cv)))
    for ui in rots_u:
        for vj in rots_v:
            if dehn_equal(ctx, ui, vj):
                return True
            for a in ctx.letters:
                if dehn_equal(ctx, (a,) + ui + (-a,), vj):
                    return True
    return False


def enumerate_ball(ctx: GroupContext, radius: int, cap: int = 10**6) -> list:
    """All normal forms of length <= radius, breadth-first.

    Each normal form of length L+1 extends exactly one of length L by
    one letter (the plain-push case of the append operation), so the
    frontier extension is duplicate-free.  Raises DomainError once the
    element count would exceed cap.
    """
    if radius < 0:
        raise DomainError("ball radius must be nonnegative")
    out = [()]
    frontier = [()]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            acc = list(w)
            for a in ctx.letters:
                case, _rule, _pop, _tail = _append_step(ctx, acc, a)
                if case == 5:
                    if len(out) + len(nxt) >= cap:
                        raise DomainError("ball enumeration exceeded the element cap")
                    nxt.append(w + (a,))
        out.extend(nxt)
        frontier = nxt
    return out
