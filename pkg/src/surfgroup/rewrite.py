"""Length-lexicographic rewriting to normal form.

Two independent complete rewriting systems are implemented.

The S system works with four rule families attached to every entry
b_1...b_4g of the relator table:

  S1        b_1 b_1^-1                      ->  (empty)
  S2(k)     b_1...b_k                       ->  b_4g^-1...b_k+1^-1     2g+1 <= k <= 4g
  S3(t)     b_1 (b_2...b_2g)^t b_2g+1       ->  (b_2g...b_2)^t         t >= 2
  S4(t)     b_1 (b_2...b_2g)^t              ->  (b_2g...b_2)^t b_1     b_1 > b_2g, t >= 1
            (b_1...b_2g-1)^t b_2g           ->  b_2g (b_2g-1...b_1)^t  b_1 > b_2g, t >= 1

A word is irreducible iff it contains no subword of type S1, S2(2g+1),
S3(t) or S4(1); matches are always taken maximal (largest k, largest t)
and, in `find_reducible`, leftmost.

The D system is the explicit basis of eight rule families D1..D8 over
the generators; it is a proper subset of the S system and is kept as a
deliberately separate code path so the two engines can cross-check each
other.

`normalize` reduces incrementally: it appends one letter at a time to an
irreducible accumulator, and a single table lookup decides which of five
cases applies (at most one rule fires per appended letter).  The steps
recorded in the trace are genuine S-rule applications on the evolving
word, so replaying them by splicing reproduces the normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group_core import (
    GroupContext,
    Word,
    invert_word,
)


@dataclass(frozen=True)
class RuleId:
    """Identifies one rewriting rule instance.

    family: S1, S2, S3, S4a, S4b or D1..D8.  param is k for S2, t for
    S3/S4 and the family index i/j for D rules (0 when meaningless).
    entry indexes the relator-table entry the rule is read from, when
    there is one.
    """

    family: str
    param: int = 0
    entry: int | None = None

    def __str__(self):
        if self.family == "S2":
            return f"S2(k={self.param})"
        if self.family in ("S3", "S4a", "S4b"):
            return f"{self.family}(t={self.param})"
        return self.family


@dataclass(frozen=True)
class ReductionStep:
    rule: RuleId
    start: int  # 0-based offset of the matched subword
    matched: Word
    replacement: Word


@dataclass(frozen=True)
class ReductionTrace:
    initial: Word
    steps: tuple
    final: Word

    def replay(self) -> Word:
        """Re-apply every step by splicing; must reproduce `final`."""
        w = self.initial
        for s in self.steps:
            w = apply_step(w, s)
        return w


def apply_step(w: Word, step: ReductionStep) -> Word:
    a, b = step.start, step.start + len(step.matched)
    if w[a:b] != step.matched:
        raise ValueError(f"step does not match word at {step.start}")
    return w[:a] + step.replacement + w[b:]


def _rev(block: Word) -> Word:
    return tuple(reversed(block))


def find_reducible(ctx: GroupContext, w: Word):
    """Leftmost maximal reducing operation, or None when w is irreducible.

    At each start position the rule families are tried in the precedence
    order S1 > S2 > S3 > S4, and S2/S3/S4 matches are extended as far as
    the word allows.
    """
    ctx.check_word(w)
    n = len(w)
    g2 = ctx.n_gens
    n4 = ctx.alphabet_size
    for p in range(n - 1):
        a, b = w[p], w[p + 1]
        if a == -b:
            return ReductionStep(RuleId("S1"), p, (a, b), ())
        amb = ctx.pair_ambient(a, b)
        if amb is None:
            continue
        cl, _ = ctx.chain_forward(w, p, n4)
        E = ctx.entry_at(a, amb)
        eidx = ctx.entry_index(a, amb)
        if cl >= g2 + 1:
            return ReductionStep(
                RuleId("S2", cl, eidx), p, w[p:p + cl], invert_word(E[cl:])
            )
        # S3 / S4 shape 1: b_1 followed by repeats of b_2..b_2g
        blk = E[1:g2]
        t1 = 0
        q = p + 1
        while w[q:q + g2 - 1] == blk:
            t1 += 1
            q += g2 - 1
        if t1 >= 2 and q < n and w[q] == E[g2]:
            return ReductionStep(
                RuleId("S3", t1, eidx), p, w[p:q + 1], _rev(blk) * t1
            )
        s4 = None
        if t1 >= 1 and ctx.greater(E[0], E[g2 - 1]):
            s4 = ReductionStep(
                RuleId("S4a", t1, eidx), p, w[p:q], _rev(blk) * t1 + (E[0],)
            )
        # S4 shape 2: repeats of b_1..b_2g-1 closed by b_2g
        blk2 = E[:g2 - 1]
        t2 = 0
        q2 = p
        while w[q2:q2 + g2 - 1] == blk2:
            t2 += 1
            q2 += g2 - 1
        if t2 >= 1 and q2 < n and w[q2] == E[g2 - 1] and ctx.greater(E[0], E[g2 - 1]):
            cand = ReductionStep(
                RuleId("S4b", t2, eidx), p, w[p:q2 + 1], (E[g2 - 1],) + _rev(blk2) * t2
            )
            if s4 is None or len(cand.matched) > len(s4.matched):
                s4 = cand
        if s4 is not None:
            return s4
    return None


def find_all_steps(ctx: GroupContext, w: Word) -> list:
    """Maximal reducing operation at every position where one fires.

    Used by the confluence tests to drive randomized reduction orders.
    """
    steps = []
    pos = 0
    rest = w
    # reuse find_reducible on suffixes; positions shift accordingly
    while True:
        s = find_reducible(ctx, rest)
        if s is None:
            return steps
        steps.append(
            ReductionStep(s.rule, s.start + pos, s.matched, s.replacement)
        )
        pos += s.start + 1
        rest = rest[s.start + 1:]


def is_irreducible(ctx: GroupContext, w: Word) -> bool:
    return find_reducible(ctx, w) is None


def is_cyclically_irreducible(ctx: GroupContext, w: Word) -> bool:
    """True when the square of w is irreducible (every rotation is then too)."""
    if not w:
        return True
    return is_irreducible(ctx, w + w)


def _append_step(ctx: GroupContext, acc: list, letter: int):
    """Classify appending `letter` to the irreducible word `acc`.

    Returns (case, rule, n_pop, tail): pop n_pop letters off acc, then
    extend it with tail (tail excludes the plain letter in case 5).
    Cases follow the one-letter extension table: 1 free cancellation,
    2 fractional-relator overflow, 3 repeated-block overflow, 4 block
    transport, 5 no rule fires.
    """
    g2 = ctx.n_gens
    if acc and acc[-1] == -letter:
        return 1, RuleId("S1"), 1, ()
    if not acc:
        return 5, None, 0, (letter,)
    amb = ctx.pair_ambient(acc[-1], letter)
    if amb is None:
        return 5, None, 0, (letter,)
    # longest successor chain ending at the appended letter; acc is
    # irreducible so the chain never exceeds 2g+1
    pred = ctx._pred[amb]
    cl = 2
    i = len(acc) - 1
    while cl <= g2 and i >= 1 and pred[acc[i]] == acc[i - 1]:
        i -= 1
        cl += 1
    if cl == g2 + 1:
        F = ctx.entry_at(acc[i], amb)
        eidx = ctx.entry_index(acc[i], amb)
        return 2, RuleId("S2", g2 + 1, eidx), g2, invert_word(F[g2 + 1:])
    if cl == g2:
        E = ctx.entry_at(acc[i], amb)
        blk = list(E[:g2 - 1])
        L = g2 - 1
        t = 0
        end = len(acc)
        while end >= L and acc[end - L:end] == blk:
            t += 1
            end -= L
        m = t * L
        prev = acc[-m - 1] if len(acc) > m else None
        if prev == E[-1]:
            # rule read from the entry at prev, where the match starts;
            # t == 1 here would have been the 2g+1 chain above
            eidx = ctx.entry_index(prev, amb)
            return 3, RuleId("S3", t, eidx), m + 1, _rev(E[:g2 - 1]) * t
        if ctx.greater(E[0], E[g2 - 1]):
            eidx = ctx.entry_index(acc[i], amb)
            return 4, RuleId("S4b", t, eidx), m, (letter,) + _rev(E[:g2 - 1]) * t
    return 5, None, 0, (letter,)


def append_letter_nf(ctx: GroupContext, x: Word, letter: int):
    """Normal form of x*letter for irreducible x, with the case tag 1..5."""
    ctx.check_word(x)
    ctx.check_word((letter,))
    if not is_irreducible(ctx, x):
        raise ValueError("append_letter_nf requires an irreducible word")
    acc = list(x)
    case, _rule, n_pop, tail = _append_step(ctx, acc, letter)
    if n_pop:
        del acc[len(acc) - n_pop:]
    acc.extend(tail)
    return tuple(acc), case


def prepend_letter_nf(ctx: GroupContext, letter: int, x: Word):
    """Normal form of letter*x for irreducible x, with the case tag 1..5."""
    ctx.check_word(x)
    ctx.check_word((letter,))
    if not is_irreducible(ctx, x):
        raise ValueError("prepend_letter_nf requires an irreducible word")
    g2 = ctx.n_gens
    if x and x[0] == -letter:
        return x[1:], 1
    if not x:
        return (letter,), 5
    amb = ctx.pair_ambient(letter, x[0])
    if amb is None:
        return (letter,) + x, 5
    succ = ctx._succ[amb]
    cl = 2
    q = 0
    while cl <= g2 and q + 1 < len(x) and succ[x[q]] == x[q + 1]:
        q += 1
        cl += 1
    E = ctx.entry_at(letter, amb)
    if cl == g2 + 1:
        return invert_word(E[g2 + 1:]) + x[g2:], 2
    if cl == g2:
        blk = E[1:g2]
        L = g2 - 1
        t = 0
        pos = 0
        while x[pos:pos + L] == blk:
            t += 1
            pos += L
        nxt = x[pos] if pos < len(x) else None
        if nxt == E[g2]:
            # t == 1 here would have been the 2g+1 chain above
            return _rev(blk) * t + x[pos + 1:], 3
        if ctx.greater(E[0], E[g2 - 1]):
            return _rev(blk) * t + (letter,) + x[pos:], 4
    return (letter,) + x, 5


def normalize(ctx: GroupContext, w: Word):
    """Normal form of w together with the trace of rule applications.

    The word is consumed left to right; by the one-letter extension
    property each appended letter triggers at most one S rule, recorded
    against its position in the evolving word.
    """
    ctx.check_word(w)
    acc: list = []
    steps = []
    for idx, letter in enumerate(w):
        case, rule, n_pop, tail = _append_step(ctx, acc, letter)
        if case != 5:
            matched = tuple(acc[len(acc) - n_pop:]) + (letter,)
            steps.append(
                ReductionStep(rule, len(acc) - n_pop, matched, tail)
            )
        if n_pop:
            del acc[len(acc) - n_pop:]
        acc.extend(tail)
    final = tuple(acc)
    return final, ReductionTrace(w, tuple(steps), final)


def nf(ctx: GroupContext, w: Word) -> Word:
    """Normal form of w (trace discarded)."""
    return normalize(ctx, w)[0]


def normalize_leftmost(ctx: GroupContext, w: Word):
    """Reduce by repeatedly applying the leftmost maximal operation.

    Slower than `normalize` but follows the scan-and-replace strategy
    directly; the two must agree on every input.
    """
    steps = []
    cur = w
    while True:
        s = find_reducible(ctx, cur)
        if s is None:
            return cur, ReductionTrace(w, tuple(steps), cur)
        steps.append(s)
        cur = apply_step(cur, s)


def normalize_random(ctx: GroupContext, w: Word, rng) -> Word:
    """Reduce by applying admissible operations in a random order."""
    cur = w
    while True:
        steps = find_all_steps(ctx, cur)
        if not steps:
            return cur
        cur = apply_step(cur, rng.choice(steps))


# --- the explicit D basis -------------------------------------------------

def _d_rules(ctx: GroupContext):
    """Rule tables for the D engine, cached on the context."""
    if "d_rules" in ctx._cache:
        return ctx._cache["d_rules"]
    g2 = ctx.n_gens
    fixed = []  # (lead, replacement, family)
    fixed.append((tuple(-i for i in range(g2, 0, -1)),
                  tuple(-i for i in range(1, g2 + 1)), "D3"))
    fixed.append((tuple(range(1, g2 + 1)),
                  tuple(range(g2, 0, -1)), "D4"))
    for i in range(2, g2 + 1):
        lead = tuple(-j for j in range(i, g2 + 1)) + tuple(range(1, i))
        rep = tuple(range(i - 1, 0, -1)) + tuple(-j for j in range(g2, i - 1, -1))
        fixed.append((lead, rep, "D5"))
    for i in range(2, g2 + 1):
        lead = tuple(-j for j in range(i - 1, 0, -1)) + tuple(range(g2, i - 1, -1))
        rep = tuple(range(i, g2 + 1)) + tuple(-j for j in range(1, i))
        fixed.append((lead, rep, "D6"))
    by_first = {}
    for lead, rep, fam in fixed:
        by_first.setdefault(lead[0], []).append((lead, rep, fam))
    conj = {}  # j -> list of (block, rep_block, family)
    for j in range(2, g2 + 1):
        bl1 = tuple(range(j - 1, 0, -1)) + tuple(-i for i in range(g2, j, -1))
        rb1 = tuple(-i for i in range(j + 1, g2 + 1)) + tuple(range(1, j))
        bl2 = tuple(range(j + 1, g2 + 1)) + tuple(-i for i in range(1, j))
        rb2 = tuple(-i for i in range(j - 1, 0, -1)) + tuple(range(g2, j, -1))
        conj[j] = [(bl1, rb1, "D1"), (bl2, rb2, "D2")]
    rules = (by_first, conj)
    ctx._cache["d_rules"] = rules
    return rules


def _d_match(ctx: GroupContext, w: Word, p: int):
    """First D-rule match at position p, or None."""
    by_first, conj = _d_rules(ctx)
    n = len(w)
    a = w[p]
    # D7 / D8: inverse pairs
    if p + 1 < n and w[p + 1] == -a:
        fam = "D7" if a < 0 else "D8"
        return ReductionStep(RuleId(fam, abs(a)), p, (a, w[p + 1]), ())
    for lead, rep, fam in by_first.get(a, ()):
        if w[p:p + len(lead)] == lead:
            return ReductionStep(RuleId(fam), p, lead, rep)
    if a >= 2:  # D1/D2 conjugation rules start with a positive letter c_j, j >= 2
        for block, rep_block, fam in conj[a]:
            L = len(block)
            t = 0
            q = p + 1
            while w[q:q + L] == block:
                t += 1
                q += L
            if t >= 1 and q < n and w[q] == -a:
                return ReductionStep(
                    RuleId(fam, t), p, w[p:q + 1], rep_block * t
                )
    return None


def d_basis_normalize(ctx: GroupContext, w: Word) -> Word:
    """Normal form computed with the explicit D basis only.

    Kept independent of the S engine on purpose; used as a cross-check.
    """
    ctx.check_word(w)
    cur = w
    while True:
        step = None
        for p in range(len(cur)):
            step = _d_match(ctx, cur, p)
            if step is not None:
                break
        if step is None:
            return cur
        cur = apply_step(cur, step)
