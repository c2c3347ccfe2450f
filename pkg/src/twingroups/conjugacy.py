"""Cyclic reduction and the conjugacy problem in T_n."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .words import (
    GroupContext,
    TwinGroupError,
    Word,
    backable,
    frontable,
    is_reduced,
    lex_normal_form,
    reduce,
)


@dataclass(frozen=True)
class CyclicReduction:
    """``core == conjugator^-1 * w * conjugator`` with ``core`` cyclically reduced."""

    core: Word
    conjugator: Word


def _exposed_pair(w: Word):
    """Positions (first, last) of a letter that flips to both ends, or None."""
    seen = set()
    for p, a in enumerate(w):
        if a in seen:
            continue
        seen.add(a)
        if not frontable(w, p):
            continue
        q = len(w) - 1 - w[::-1].index(a)
        if q != p and backable(w, q):
            return p, q
    return None


def is_cyclically_reduced(w: Word, ctx: GroupContext | None = None) -> bool:
    w = tuple(w)
    if not is_reduced(w):
        raise TwinGroupError("is_cyclically_reduced expects a reduced word")
    return _exposed_pair(w) is None


def cyclically_reduce(w: Word, ctx: GroupContext | None = None) -> CyclicReduction:
    core = list(reduce(w))
    conj = []
    while True:
        pair = _exposed_pair(tuple(core))
        if pair is None:
            break
        p, q = pair
        conj.append(core[p])
        del core[q]
        del core[p]
    return CyclicReduction(tuple(core), tuple(conj))


def components(w: Word) -> list:
    """Split ``w`` into the projections onto connected pieces of its support.

    Indices in different pieces differ by at least 2, so the projections
    commute and ``w`` is flip-equivalent to their product.
    """
    idx = sorted(set(w))
    groups = []
    for i in idx:
        if groups and i == groups[-1][-1] + 1:
            groups[-1].append(i)
        else:
            groups.append([i])
    return [tuple(a for a in w if a in g) for g in map(set, groups)]


@lru_cache(maxsize=65536)
def transposition_class(w: Word) -> frozenset:
    """All flip-classes reachable from ``w`` by moving a frontable letter to the back.

    Moving the front letter of some flip-representative to the end is one
    cyclic permutation step; closing under these steps gives every cyclic
    permutation modulo flips.  States are stored in lexicographic flip form.
    """
    start = lex_normal_form(w)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        blocked = set()
        for p, a in enumerate(u):
            if a not in blocked:
                v = lex_normal_form(u[:p] + u[p + 1:] + (a,))
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
            blocked.update((a, a - 1, a + 1))
    return frozenset(seen)


def conjugacy_key(w: Word, ctx: GroupContext | None = None) -> tuple:
    """Canonical invariant of the conjugacy class of ``w``.

    Two words are conjugate iff their keys are equal.
    """
    core = cyclically_reduce(w).core
    return tuple(sorted(min(transposition_class(c)) for c in components(core)))


def are_conjugate(w1: Word, w2: Word, ctx: GroupContext | None = None) -> bool:
    c1 = cyclically_reduce(w1).core
    c2 = cyclically_reduce(w2).core
    if len(c1) != len(c2) or Counter(c1) != Counter(c2):
        return False
    p1 = components(c1)
    p2 = components(c2)
    if [set(p) for p in p1] != [set(p) for p in p2]:
        return False
    return all(lex_normal_form(b) in transposition_class(a) for a, b in zip(p1, p2))


def conjugacy_minimal_length(w: Word, ctx: GroupContext | None = None) -> int:
    return len(cyclically_reduce(w).core)
