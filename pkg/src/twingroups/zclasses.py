"""z-classes of involutions: lambda_n by enumeration and by recursion, and alpha_i."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Tuple

from .conjugacy import are_conjugate
from .involutions import (
    ENUMERATION_CAP,
    centralizer_mask,
    centralizer_of_involution,
    involution_class_rep,
    is_involution,
    iter_involution_classes,
)
from .words import GroupContext, TwinGroupError, Word

# direct counts for n = 2..6; the recursion takes over from n = 7
_LAMBDA_BASE = {2: 1, 3: 2, 4: 2, 5: 5, 6: 8}


@dataclass(frozen=True)
class ZClassTable:
    n: int
    lambda_direct: int
    lambda_recursive: int
    alpha: Tuple[int, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "lambda_direct": self.lambda_direct,
            "lambda_recursive": self.lambda_recursive,
            "alpha": list(self.alpha),
        }


def _check_n(n: int):
    if not isinstance(n, int) or n < 2:
        raise TwinGroupError("n must be an integer >= 2")


def lambda_direct(n: int, cap: int = ENUMERATION_CAP) -> int:
    """Number of distinct involution centralizers in T_n, by sweeping A_n."""
    _check_n(n)
    if n > cap:
        raise TwinGroupError(f"refusing direct enumeration for n={n} above the cap {cap}")
    ctx = GroupContext(n)
    return len({centralizer_mask(c.indices, n) for c in iter_involution_classes(ctx)})


@lru_cache(maxsize=None)
def lambda_recursive(n: int) -> int:
    _check_n(n)
    if n in _LAMBDA_BASE:
        return _LAMBDA_BASE[n]
    return sum(lambda_recursive(i) for i in range(3, n - 1)) - lambda_recursive(n - 4) + n - 2


def alpha(i: int, ctx: GroupContext | None = None) -> int:
    """Distinct centralizers of involutions whose largest index is i, counted in T_{i+1}."""
    if i < 1 or (ctx is not None and i > ctx.n - 1):
        raise TwinGroupError(f"alpha index {i} out of range")
    return alpha_in(i, i + 1)


def alpha_in(i: int, n: int) -> int:
    """The same count taken inside T_n for any n >= i + 1."""
    if not 1 <= i <= n - 1:
        raise TwinGroupError(f"alpha index {i} out of range for T_{n}")
    ctx = GroupContext(n)
    return len({
        centralizer_mask(c.indices, n)
        for c in iter_involution_classes(ctx)
        if c.indices[-1] == i
    })


def zclass_table(n: int, cap: int = ENUMERATION_CAP) -> ZClassTable:
    ctx = GroupContext(n)
    return ZClassTable(
        n=n,
        lambda_direct=lambda_direct(n, cap),
        lambda_recursive=lambda_recursive(n),
        alpha=tuple(alpha(i, ctx) for i in ctx.generators),
    )


def same_z_class(w1: Word, w2: Word, ctx: GroupContext) -> bool:
    """For involutions, z-equivalence is equality of centralizer generator sets."""
    for w in (w1, w2):
        if not is_involution(w):
            raise TwinGroupError("same_z_class expects involutions")
    g1 = centralizer_of_involution(involution_class_rep(w1), ctx).gens
    g2 = centralizer_of_involution(involution_class_rep(w2), ctx).gens
    return g1 == g2


def x_family(count: int) -> list:
    """X_1 = s1 s2, X_2 = s1 s2 s3, then alternately append s2 and s3."""
    xs = [(1, 2), (1, 2, 3)]
    while len(xs) < count:
        xs.append(xs[-1] + ((2,) if len(xs) % 2 == 0 else (3,)))
    return xs[:count]


def zclass_spotcheck_X_family(n: int, count: int) -> bool:
    """Pairwise non-conjugacy of X_1 ... X_count in T_n."""
    if n < 4 or count < 2:
        raise TwinGroupError("needs n >= 4 and count >= 2")
    ctx = GroupContext(n)
    xs = x_family(count)
    return not any(
        are_conjugate(xs[a], xs[b], ctx)
        for a in range(count)
        for b in range(a + 1, count)
    )
