"""Involutions in T_n: detection, canonical class representatives, rho_n, centralizers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple

from .conjugacy import cyclically_reduce
from .words import GroupContext, TwinGroupError, Word, commute, normal_form

ENUMERATION_CAP = 28


@dataclass(frozen=True, order=True)
class InvolutionClass:
    """Increasing generator indices with gaps >= 2; the word s_{i_1} ... s_{i_k}."""

    indices: Tuple[int, ...]

    def __post_init__(self):
        idx = tuple(self.indices)
        if not idx:
            raise TwinGroupError("an involution class needs at least one index")
        if idx[0] < 1 or any(b - a < 2 for a, b in zip(idx, idx[1:])):
            raise TwinGroupError(f"indices {idx} are not increasing with gaps >= 2")
        object.__setattr__(self, "indices", idx)

    @property
    def word(self) -> Word:
        return self.indices

    def check(self, ctx: GroupContext) -> "InvolutionClass":
        if self.indices[-1] > ctx.n - 1:
            raise TwinGroupError(f"class {self.indices} out of range for T_{ctx.n}")
        return self

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.indices)) + ")"


@dataclass(frozen=True)
class CentralizerGens:
    gens: frozenset
    rank: int


def is_involution(w: Word, ctx: GroupContext | None = None) -> bool:
    """Order exactly 2; the identity is not an involution."""
    return bool(normal_form(w)) and not normal_form(tuple(w) + tuple(w))


def _core_is_commuting(core: Word) -> bool:
    return len(set(core)) == len(core) and all(
        commute(a, b) for p, a in enumerate(core) for b in core[p + 1:]
    )


def involution_class_rep(w: Word, ctx: GroupContext | None = None) -> InvolutionClass:
    if not is_involution(w):
        raise TwinGroupError("word is not an involution")
    core = cyclically_reduce(w).core
    # a cyclically reduced involution has pairwise commuting distinct letters
    assert _core_is_commuting(core), core
    return InvolutionClass(tuple(sorted(core)))


def iter_involution_classes(ctx: GroupContext) -> Iterator[InvolutionClass]:
    """Elements of A_n in lexicographic order of their index sequences."""
    top = ctx.n - 1

    def extend(prefix):
        start = prefix[-1] + 2 if prefix else 1
        for i in range(start, top + 1):
            seq = prefix + (i,)
            yield seq
            yield from extend(seq)

    for seq in extend(()):
        yield InvolutionClass(seq)


def enumerate_involution_classes(ctx: GroupContext, cap: int = ENUMERATION_CAP) -> list:
    if ctx.n > cap:
        raise TwinGroupError(f"refusing to enumerate A_{ctx.n}: n exceeds the cap {cap}")
    return list(iter_involution_classes(ctx))


def rho(n: int) -> int:
    """Number of conjugacy classes of involutions in T_n."""
    if n < 2:
        raise TwinGroupError("rho is defined for n >= 2")
    a, b = 1, 2  # rho_2, rho_3
    if n == 2:
        return a
    for _ in range(n - 3):
        a, b = b, 1 + a + b
    return b


def centralizer_mask(indices, n: int) -> int:
    """Bitmask (bit i for s_i) of generators commuting with s_{i_1} ... s_{i_k}."""
    full = ((1 << n) - 1) & ~1
    blocked = 0
    for i in indices:
        blocked |= (1 << (i - 1)) | (1 << (i + 1))
    return full & ~blocked


def centralizer_of_involution(c: InvolutionClass, ctx: GroupContext) -> CentralizerGens:
    c.check(ctx)
    gens = set(ctx.generators)
    for i in c.indices:
        gens -= ctx.neighbors(i)
    return CentralizerGens(frozenset(gens), len(gens))
