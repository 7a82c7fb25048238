"""Conjugacy decisions with conjugator certificates.

The class normal form of x is the least word among all words conjugate
to x.  It is computed from the cyclically irreducible core W of x: the
candidates are the rotations of W and, when W has the exceptional shape
(b_{i+1}..b_{2g-1}b_1..b_i)^t for a relator-table entry, also the
reversed rotations.  Every certificate returned from this module has
been re-verified by normalization (normalize(z.x.z^-1) equals the class
word), so an index or orientation slip cannot escape.

Roots are found by the divisor scan on W, and the conjugate-power
decision reduces to conjugacy of primitive roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .group_core import (
    DomainError,
    GroupContext,
    Word,
    abelianize,
    common_prefix_len,
    common_suffix_len,
    compare_words,
    cyclic_rotations,
    invert_word,
    word_sort_key,
)
from .powers import nf_power, power_decompose
from .rewrite import is_irreducible, nf


@dataclass(frozen=True)
class ConjugacyCertificate:
    """class_nf = normalize(conjugator . x . conjugator^-1).

    exceptional records that the core matched the reversed-family shape,
    so the minimum was also taken over the reversed rotations.
    """

    class_nf: Word
    conjugator: Word
    exceptional: bool


@dataclass(frozen=True)
class RootResult:
    root: Word
    exponent: int


@dataclass(frozen=True)
class ConjPowerResult:
    found: bool
    m: int
    n: int
    conjugator: Word


def _verify_conjugation(ctx, z: Word, x: Word, target: Word) -> bool:
    return nf(ctx, z + x + invert_word(z)) == target


def _exceptional_matches(ctx: GroupContext, w: Word) -> list:
    """All (entry, i, t) with w = (b_{i+1}..b_{2g-1}b_1..b_i)^t, 1 <= i <= 2g-1."""
    blk = ctx.n_gens - 1
    n = len(w)
    if n == 0 or n % blk:
        return []
    t = n // blk
    head = w[:blk]
    if w != head * t:
        return []
    out = []
    for eidx, entry in enumerate(ctx.relator_table):
        for i in range(1, blk + 1):
            if head == entry[i:blk] + entry[:i]:
                out.append((eidx, i, t))
    return out


def class_nf(ctx: GroupContext, x: Word) -> ConjugacyCertificate:
    """Least conjugate word of x with a verified conjugator.

    Uses the splice decomposition: with core W and nf(x^2) tail S, every
    rotation W[k:]+W[:k] equals (W[k:] S) x (W[k:] S)^-1.  When W has
    the exceptional shape the reversed rotations are conjugate as well,
    via the relator identity b_2g^-1 (b_1..b_{2g-1})^t b_2g =
    (b_{2g-1}..b_1)^t, and the minimum is taken over both families.
    """
    n1 = nf(ctx, x)
    if not n1:
        raise DomainError("class normal form of the trivial element")
    pd = power_decompose(ctx, n1)
    w = pd.core
    suffix = pd.suffix
    n = len(w)
    rotations = cyclic_rotations(w)
    k0 = min(range(n), key=lambda k: word_sort_key(ctx, rotations[k]))
    best = rotations[k0]
    conj = nf(ctx, w[k0:] + suffix)
    matches = _exceptional_matches(ctx, w)
    exceptional = bool(matches)
    if matches:
        reversed_family = [tuple(reversed(r)) for r in rotations]
        alt = min(reversed_family, key=lambda v: word_sort_key(ctx, v))
        if compare_words(ctx, alt, best) < 0:
            for cand in _reversed_conjugators(ctx, w, alt, suffix, matches):
                candidate = nf(ctx, cand)
                if _verify_conjugation(ctx, candidate, n1, alt):
                    best, conj = alt, candidate
                    break
            else:
                raise AssertionError("no conjugator verified for the reversed family")
    if not _verify_conjugation(ctx, conj, n1, best):
        raise AssertionError("class certificate failed verification")
    return ConjugacyCertificate(best, conj, exceptional)


def _reversed_conjugators(ctx: GroupContext, w, alt, suffix, matches):
    """Candidate conjugators carrying x onto the reversed-family minimum.

    Tries the direct table formula first, then a chained construction
    rotation to block form, relator identity, rotation to the target;
    class_nf keeps whichever verifies.
    """
    g2 = ctx.n_gens
    n4 = ctx.alphabet_size
    n = len(w)
    positions = [
        j for j in range(n)
        if tuple(reversed(w[j:] + w[:j])) == alt
    ]
    for eidx, i, t in matches:
        entry = ctx.relator_table[eidx]
        for j in positions:
            yield (tuple(reversed(w[:j]))
                   + tuple(reversed(entry[:i]))
                   + tuple(reversed(entry[g2 + i:n4]))
                   + suffix)
    for eidx, i, t in matches:
        entry = ctx.relator_table[eidx]
        base = entry[:g2 - 1] * t
        u1 = w[(n - i) % n:]
        rev_base = tuple(reversed(base))
        for a in range(n):
            if rev_base[a:] + rev_base[:a] == alt:
                yield rev_base[a:] + (-entry[g2 - 1],) + u1 + suffix


def are_conjugate(ctx: GroupContext, x: Word, y: Word):
    """A verified z with x = z.y.z^-1, or None.

    Both trivial gives the empty conjugator; exactly one trivial gives
    None.
    """
    nx = nf(ctx, x)
    ny = nf(ctx, y)
    if not nx and not ny:
        return ()
    if not nx or not ny:
        return None
    if abelianize(ctx, nx) != abelianize(ctx, ny):
        return None
    cx = class_nf(ctx, nx)
    cy = class_nf(ctx, ny)
    if cx.class_nf != cy.class_nf:
        return None
    z = nf(ctx, invert_word(cx.conjugator) + cy.conjugator)
    if not _verify_conjugation(ctx, z, ny, nx):
        raise AssertionError("conjugator failed verification")
    return z


def root(ctx: GroupContext, x: Word) -> RootResult:
    """Primitive root Y and exponent r with Y^r = x.

    The core W is scanned for its least period d; the root is the
    conjugate of that period block back through the splice prefix.
    """
    n1 = nf(ctx, x)
    if not n1:
        raise DomainError("root of the trivial element")
    pd = power_decompose(ctx, n1)
    w = pd.core
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w == w[:d] * (n // d):
            break
    r = n // d
    y = nf(ctx, pd.prefix + w[:d] + invert_word(pd.prefix))
    if nf_power(ctx, y, r) != n1:
        raise AssertionError("root reassembly failed verification")
    return RootResult(y, r)


def _signed_power(ctx: GroupContext, x: Word, k: int) -> Word:
    if k == 0:
        return ()
    if k < 0:
        return nf_power(ctx, invert_word(x), -k)
    return nf_power(ctx, x, k)


def conj_power(ctx: GroupContext, x: Word, y: Word) -> ConjPowerResult:
    """Least (m, n) and verified z with x^m = z.y^n.z^-1, if any exist.

    x = x1^r1 and y = y1^r2 with primitive roots; a relation between
    powers forces y1 conjugate to x1 or to x1^-1, and then m = r2/d,
    n = +-r1/d with d = gcd(r1, r2).
    """
    nx = nf(ctx, x)
    ny = nf(ctx, y)
    if not nx or not ny:
        raise DomainError("conjugate-power decision needs nontrivial elements")
    rx = root(ctx, nx)
    ry = root(ctx, ny)
    d = math.gcd(rx.exponent, ry.exponent)
    m = ry.exponent // d
    n = rx.exponent // d
    z = are_conjugate(ctx, ry.root, rx.root)
    if z is None:
        z = are_conjugate(ctx, ry.root, invert_word(rx.root))
        if z is None:
            return ConjPowerResult(False, 0, 0, ())
        n = -n
    conj = nf(ctx, invert_word(z))
    lhs = _signed_power(ctx, nx, m)
    rhs = nf(ctx, conj + _signed_power(ctx, ny, n) + invert_word(conj))
    if lhs != rhs:
        raise AssertionError("conjugate-power certificate failed verification")
    return ConjPowerResult(True, m, n, conj)


def reducing_pair(ctx: GroupContext, w1: Word, w2: Word):
    """The excised pair (C1, C2): w1 = A.C1, w2 = C2.B, nf(w1 w2) = A.C'.B.

    A is the longest prefix of w1 surviving in nf(w1 w2), then B the
    longest surviving suffix of w2.
    """
    ctx.check_word(w1)
    ctx.check_word(w2)
    if not is_irreducible(ctx, w1) or not is_irreducible(ctx, w2):
        raise DomainError("reducing_pair requires irreducible words")
    if w1 and w2 and w1[-1] == -w2[0]:
        raise DomainError("product must be freely reduced at the junction")
    product_nf = nf(ctx, w1 + w2)
    a = common_prefix_len(w1, product_nf)
    b = min(common_suffix_len(w2, product_nf), len(product_nf) - a)
    return w1[a:], w2[:len(w2) - b]
