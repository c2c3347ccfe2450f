"""Word arithmetic in the twin group T_n.

A word is a tuple of generator indices; ``(1, 2, 1)`` stands for s1 s2 s1 and
the empty tuple is the identity.  Generators are involutions, s_i and s_j
commute when |i - j| >= 2, and adjacent generators satisfy no relation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

Word = Tuple[int, ...]

IDENTITY: Word = ()


class TwinGroupError(ValueError):
    """Domain error raised by the kernel (bad input, failed precondition)."""


class WordSyntaxError(TwinGroupError):
    pass


@dataclass(frozen=True)
class GroupContext:
    """The ambient group T_n; generators are s_1 ... s_{n-1}."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise TwinGroupError(f"n must be an integer >= 2, got {self.n!r}")

    @property
    def rank(self) -> int:
        return self.n - 1

    @property
    def generators(self) -> range:
        return range(1, self.n)

    def neighbors(self, i: int) -> frozenset:
        """Indices of generators that do not commute with s_i."""
        return frozenset(j for j in (i - 1, i + 1) if 1 <= j <= self.n - 1)

    def check(self, w: Iterable[int]) -> Word:
        w = tuple(w)
        for k in w:
            if not 1 <= k <= self.n - 1:
                raise TwinGroupError(f"generator s{k} out of range for T_{self.n}")
        return w


def commute(i: int, j: int) -> bool:
    return abs(i - j) != 1


_TOKEN = re.compile(r"s?(\d+)")


def parse_word(text: str, ctx: GroupContext) -> Word:
    """Parse ``"1 2 1"``, ``"s1.s3"`` or ``"e"`` into a literal (unreduced) word."""
    tokens = [t for t in re.split(r"[\s.]+", text.strip()) if t]
    if tokens == ["e"]:
        return IDENTITY
    letters = []
    for tok in tokens:
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise WordSyntaxError(f"bad token {tok!r} in word {text!r}")
        letters.append(int(m.group(1)))
    return ctx.check(letters)


def format_word(w: Word) -> str:
    if not w:
        return "e"
    return " ".join(f"s{k}" for k in w)


def eta(w: Word, i: int) -> int:
    return w.count(i)


def length(w: Word) -> int:
    return len(w)


def invert(w: Word) -> Word:
    return tuple(reversed(w))


def multiply(*words: Word) -> Word:
    out: list = []
    for w in words:
        out.extend(w)
    return tuple(out)


def power(w: Word, k: int) -> Word:
    if k < 0:
        return invert(w) * (-k)
    return tuple(w) * k


def reduce(w: Word, ctx: GroupContext | None = None) -> Word:
    """Return a reduced word equivalent to ``w``.

    Letters are pushed onto an output stack.  A new letter cancels the most
    recent equal letter unless a non-commuting letter sits in between.  The
    stack stays reduced throughout: removing a letter can only unblock a pair
    straddling it, and such a pair would have blocked the backward scan.
    """
    out: list = []
    for a in w:
        for k in range(len(out) - 1, -1, -1):
            b = out[k]
            if b == a:
                del out[k]
                break
            if abs(a - b) == 1:
                out.append(a)
                break
        else:
            out.append(a)
    return tuple(out)


def is_reduced(w: Word) -> bool:
    """Direct check: every two equal letters are separated by a neighbor."""
    for p, a in enumerate(w):
        for b in w[p + 1:]:
            if b == a:
                return False
            if abs(a - b) == 1:
                break
    return True


def frontable(w: Word, pos: int) -> bool:
    """True if the letter at ``pos`` can be flipped to the front of ``w``."""
    a = w[pos]
    return all(commute(a, b) and a != b for b in w[:pos])


def backable(w: Word, pos: int) -> bool:
    a = w[pos]
    return all(commute(a, b) and a != b for b in w[pos + 1:])


def lex_normal_form(w: Word) -> Word:
    """Left-greedy lexicographic normal form of a word under flips only.

    No cancellation is performed; callers wanting the group normal form use
    :func:`normal_form`.
    """
    rest = list(w)
    out = []
    while rest:
        best = -1
        seen_block: set = set()
        for p, a in enumerate(rest):
            # a is frontable iff no earlier letter equals it or neighbors it
            if a not in seen_block and (best < 0 or a < rest[best]):
                best = p
            seen_block.update((a, a - 1, a + 1))
        out.append(rest.pop(best))
    return tuple(out)


def normal_form(w: Word, ctx: GroupContext | None = None) -> Word:
    """Canonical representative: two words are equal in T_n iff their normal forms match."""
    return lex_normal_form(reduce(w))


def equal(w1: Word, w2: Word, ctx: GroupContext | None = None) -> bool:
    return normal_form(w1) == normal_form(w2)


def is_identity(w: Word) -> bool:
    return not reduce(w)


def support(w: Word) -> frozenset:
    return frozenset(w)
