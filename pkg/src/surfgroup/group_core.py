"""Alphabet, words, ordering and relator bookkeeping for surface groups.

The group of interest is the fundamental group of a closed orientable
surface of genus g >= 2, presented symmetrically as

    < c_1, ..., c_2g | c_1 c_2 ... c_2g c_1^-1 c_2^-1 ... c_2g^-1 >.

Letters are encoded as signed integers: +i stands for c_i and -i for
c_i^-1, with 1 <= i <= 2g.  A word is a tuple of letters.  Words are
compared length first, then letter by letter in the generator order

    c_2g < c_2g-1 < ... < c_1 < c_1^-1 < c_2^-1 < ... < c_2g^-1,

so the inverse letters sit above all positive ones and c_2g is the
least letter overall.

The single defining relator d = c_1...c_2g c_1^-1...c_2g^-1 gives rise
to two cyclic words, d and d^-1, and the closure of {d} under cyclic
rotation and inversion is exactly the set of 8g rotations of those two.
Every letter occurs exactly once in each cyclic word, so a subword of
length >= 2 of either cyclic word ("fractional relator") determines its
ambient cyclic word and position uniquely.  GroupContext precomputes the
successor/predecessor maps that make those lookups O(1).
"""

from __future__ import annotations

import re

Word = tuple  # tuple of signed ints

#: hard ceiling on the genus accepted by GroupContext; the tables are
#: O(g^2) so this is a safety valve, not a tight bound
MAX_GENUS = 64


class WordParseError(ValueError):
    """Raised when word text does not match the grammar."""

    def __init__(self, message, token=None, position=None):
        super().__init__(message)
        self.token = token
        self.position = position


class DomainError(ValueError):
    """Raised when an operation is asked about an element outside its domain,
    e.g. the conjugacy class of the trivial element."""


def inverse(letter: int) -> int:
    """Inverse of a single letter."""
    return -letter


def invert_word(w: Word) -> Word:
    """Group inverse of a word: reverse it and invert every letter."""
    return tuple(-x for x in reversed(w))


def reverse_word(w: Word) -> Word:
    """The word read backwards (no letter inversion)."""
    return tuple(reversed(w))


def free_reduce(w: Word) -> Word:
    """Delete inverse pairs x x^-1 until none remain."""
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_rotations(w: Word) -> tuple:
    """All rotations of w; the empty word has the single rotation ()."""
    if not w:
        return (w,)
    return tuple(w[i:] + w[:i] for i in range(len(w)))


def common_prefix_len(u: Word, v: Word) -> int:
    n = min(len(u), len(v))
    i = 0
    while i < n and u[i] == v[i]:
        i += 1
    return i


def common_suffix_len(u: Word, v: Word) -> int:
    n = min(len(u), len(v))
    i = 0
    while i < n and u[-1 - i] == v[-1 - i]:
        i += 1
    return i


class GroupContext:
    """Precomputed tables for one genus.

    Instances are immutable by convention; all functions in this package
    treat them as read-only, so a context can be shared freely across
    threads.
    """

    def __init__(self, genus: int, *, max_genus: int = MAX_GENUS):
        if not isinstance(genus, int) or not 2 <= genus <= max_genus:
            raise ValueError(f"genus must be an integer in [2, {max_genus}], got {genus!r}")
        self.genus = genus
        g2 = 2 * genus
        self.n_gens = g2
        self.alphabet_size = 4 * genus
        # fixed iteration order for deterministic enumeration
        self.letters = tuple(range(1, g2 + 1)) + tuple(-i for i in range(1, g2 + 1))
        self.relator = tuple(range(1, g2 + 1)) + tuple(-i for i in range(1, g2 + 1))
        self.relator_inverse = invert_word(self.relator)
        n4 = self.alphabet_size
        table = [self.relator[i:] + self.relator[:i] for i in range(n4)]
        table += [self.relator_inverse[i:] + self.relator_inverse[:i] for i in range(n4)]
        self.relator_table = tuple(table)
        # ascending rank: c_2g -> 0 ... c_1 -> 2g-1, c_1^-1 -> 2g ... c_2g^-1 -> 4g-1
        rank = {}
        for i in range(1, g2 + 1):
            rank[i] = g2 - i
            rank[-i] = g2 - 1 + i
        self.lex_rank = rank
        # navigation in the two ambient cyclic words (0 = relator, 1 = its inverse)
        self._cycles = (self.relator, self.relator_inverse)
        self._doubled = (self.relator * 2, self.relator_inverse * 2)
        self._pos = tuple({x: i for i, x in enumerate(c)} for c in self._cycles)
        self._succ = tuple(
            {x: c[(i + 1) % n4] for i, x in enumerate(c)} for c in self._cycles
        )
        self._pred = tuple(
            {x: c[(i - 1) % n4] for i, x in enumerate(c)} for c in self._cycles
        )
        self._cache = {}

    def __repr__(self):
        return f"GroupContext(genus={self.genus})"

    def check_word(self, w) -> None:
        """Raise ValueError unless every letter lies in the alphabet."""
        g2 = self.n_gens
        for i, x in enumerate(w):
            if not isinstance(x, int) or x == 0 or abs(x) > g2:
                raise ValueError(
                    f"letter {x!r} at position {i + 1} is outside the alphabet for genus {self.genus}"
                )

    def greater(self, a: int, b: int) -> bool:
        """True when letter a is above letter b in the generator order."""
        return self.lex_rank[a] > self.lex_rank[b]

    def pair_ambient(self, a: int, b: int):
        """Return 0 or 1 when b follows a in that cyclic word, else None.

        At most one ambient matches: each letter occurs once per cyclic
        word and the two successors of a letter always differ.
        """
        if self._succ[0][a] == b:
            return 0
        if self._succ[1][a] == b:
            return 1
        return None

    def entry_at(self, letter: int, ambient: int) -> Word:
        """The relator-table entry (rotation) starting at `letter` in `ambient`."""
        i = self._pos[ambient][letter]
        return self._doubled[ambient][i:i + self.alphabet_size]

    def entry_index(self, letter: int, ambient: int) -> int:
        """Index of entry_at(letter, ambient) inside relator_table."""
        return ambient * self.alphabet_size + self._pos[ambient][letter]

    def chain_forward(self, w, p: int, cap: int) -> tuple:
        """(length, ambient) of the longest successor chain in w starting at p.

        A chain of length 1 (pair not fractional) reports ambient None.
        Length is capped at `cap`.
        """
        n = len(w)
        if p + 1 >= n:
            return 1, None
        amb = self.pair_ambient(w[p], w[p + 1])
        if amb is None:
            return 1, None
        succ = self._succ[amb]
        length = 2
        q = p + 1
        while length < cap and q + 1 < n and succ[w[q]] == w[q + 1]:
            q += 1
            length += 1
        return length, amb

    def chain_backward(self, w, p: int, cap: int) -> tuple:
        """(length, ambient) of the longest successor chain in w ending at p."""
        if p <= 0:
            return 1, None
        amb = self.pair_ambient(w[p - 1], w[p])
        if amb is None:
            return 1, None
        pred = self._pred[amb]
        length = 2
        q = p - 1
        while length < cap and q - 1 >= 0 and pred[w[q]] == w[q - 1]:
            q -= 1
            length += 1
        return length, amb


def compare_words(ctx: GroupContext, u: Word, v: Word) -> int:
    """-1, 0 or 1 as u is below, equal to, or above v (length, then letters)."""
    ctx.check_word(u)
    ctx.check_word(v)
    if len(u) != len(v):
        return -1 if len(u) < len(v) else 1
    rank = ctx.lex_rank
    for a, b in zip(u, v):
        if a != b:
            return -1 if rank[a] < rank[b] else 1
    return 0


def word_sort_key(ctx: GroupContext, w: Word) -> tuple:
    """Sort key realising the word order: min() of keys is the least word."""
    rank = ctx.lex_rank
    return (len(w), tuple(rank[x] for x in w))


def abelianize(ctx: GroupContext, w: Word) -> tuple:
    """Exponent-sum vector of w, one entry per generator."""
    ctx.check_word(w)
    v = [0] * ctx.n_gens
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


def is_fractional_relator(ctx: GroupContext, w: Word) -> bool:
    """True when w is a subword of a relator-table entry (length 2..4g)."""
    ctx.check_word(w)
    if not 2 <= len(w) <= ctx.alphabet_size:
        raise ValueError(f"fractional relators have length 2..{ctx.alphabet_size}, got {len(w)}")
    amb = ctx.pair_ambient(w[0], w[1])
    if amb is None:
        return False
    succ = ctx._succ[amb]
    return all(succ[w[i]] == w[i + 1] for i in range(1, len(w) - 1))


def llfr_at(ctx: GroupContext, w: Word, j: int):
    """Locally longest fractional relator through the junction (w[j], w[j+1]).

    Returns (start, length) with 0-based start, or None when the pair at
    the junction is not fractional.  The window is capped at 4g letters;
    when the successor chain through j is longer than 4g the window is
    pushed as far left as possible first.
    """
    ctx.check_word(w)
    if not 0 <= j < len(w) - 1:
        raise ValueError(f"junction {j} out of range for a word of length {len(w)}")
    amb = ctx.pair_ambient(w[j], w[j + 1])
    if amb is None:
        return None
    succ = ctx._succ[amb]
    cap = ctx.alphabet_size
    left = j
    size = 2
    while left > 0 and size < cap and succ[w[left - 1]] == w[left]:
        left -= 1
        size += 1
    right = j + 1
    while right + 1 < len(w) and size < cap and succ[w[right]] == w[right + 1]:
        right += 1
        size += 1
    return (left, right - left + 1)


_TOKEN_RE = re.compile(r"^([a-zA-Z])(\d+)(\^-1)?$")


def parse_word(text: str, genus: int, base: str = "c") -> Word:
    """Parse word text into a Word.

    Tokens are separated by whitespace or '*'.  A token is `c<i>` for a
    generator, `c<i>^-1` or `C<i>` for its inverse, and the single token
    `e` denotes the empty word.  `base` selects the expected letter name
    ('c' for the symmetric presentation, 'a' for words handed to a
    presentation translator).
    """
    tokens = [t for t in re.split(r"[\s*]+", text.strip()) if t]
    out = []
    lo, hi = base.lower(), base.upper()
    for i, tok in enumerate(tokens):
        if tok == "e":
            continue
        m = _TOKEN_RE.match(tok)
        if m is None:
            raise WordParseError(f"bad token {tok!r} at position {i + 1}", token=tok, position=i + 1)
        name, idx_s, caret = m.groups()
        if name not in (lo, hi):
            raise WordParseError(
                f"bad token {tok!r} at position {i + 1}: expected letter {lo!r}",
                token=tok, position=i + 1,
            )
        if name == hi and caret:
            raise WordParseError(
                f"bad token {tok!r} at position {i + 1}: uppercase already means inverse",
                token=tok, position=i + 1,
            )
        idx = int(idx_s)
        if not 1 <= idx <= 2 * genus:
            raise WordParseError(
                f"bad token {tok!r} at position {i + 1}: index out of range for genus {genus}",
                token=tok, position=i + 1,
            )
        out.append(-idx if (name == hi or caret) else idx)
    return tuple(out)


def format_word(w: Word, base: str = "c") -> str:
    """Inverse of parse_word; the empty word prints as 'e'."""
    if not w:
        return "e"
    return " ".join(f"{base}{x}" if x > 0 else f"{base}{-x}^-1" for x in w)
