"""Free group words, endomorphisms of F_n, and the representation mu_n: T_n -> Aut(F_n).

Free words are tuples of nonzero ints: ``k`` is x_k and ``-k`` its inverse.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .words import GroupContext, TwinGroupError, Word, invert, power

FreeWord = Tuple[int, ...]


def free_reduce(w) -> FreeWord:
    out: list = []
    for a in w:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def free_inverse(w: FreeWord) -> FreeWord:
    return tuple(-a for a in reversed(w))


def free_power(w: FreeWord, k: int) -> FreeWord:
    if k < 0:
        return free_reduce(free_inverse(w) * -k)
    return free_reduce(tuple(w) * k)


def format_free_word(w: FreeWord) -> str:
    if not w:
        return "1"
    parts = []
    p = 0
    while p < len(w):
        a = w[p]
        q = p
        while q < len(w) and w[q] == a:
            q += 1
        k = q - p
        exp = k if a > 0 else -k
        parts.append(f"x{abs(a)}" if exp == 1 else f"x{abs(a)}^{exp}")
        p = q
    return " ".join(parts)


@dataclass(frozen=True)
class FreeEndo:
    """Endomorphism of F_n; ``images[k - 1]`` is the image of x_k."""

    n: int
    images: Tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.n:
            raise TwinGroupError(f"expected {self.n} images, got {len(self.images)}")
        for w in self.images:
            for a in w:
                if a == 0 or abs(a) > self.n:
                    raise TwinGroupError(f"letter {a} out of range for F_{self.n}")
        object.__setattr__(self, "images", tuple(free_reduce(w) for w in self.images))

    @classmethod
    def identity(cls, n: int) -> "FreeEndo":
        return cls(n, tuple((k,) for k in range(1, n + 1)))

    def __call__(self, w: FreeWord) -> FreeWord:
        return endo_apply(self, w)

    def image(self, k: int) -> FreeWord:
        return self.images[k - 1]

    def is_identity(self) -> bool:
        return all(w == (k,) for k, w in enumerate(self.images, 1))


def endo_apply(e: FreeEndo, w: FreeWord) -> FreeWord:
    out: list = []
    for a in w:
        if a == 0 or abs(a) > e.n:
            raise TwinGroupError(f"letter {a} out of range for F_{e.n}")
        out.extend(e.images[a - 1] if a > 0 else free_inverse(e.images[-a - 1]))
    return free_reduce(out)


def endo_compose(e1: FreeEndo, e2: FreeEndo) -> FreeEndo:
    """The product e1 o e2 (e2 is applied first): x_k -> e1(e2(x_k)).

    With this order ``mu(w1 + w2) == endo_compose(mu(w1), mu(w2))``.
    """
    if e1.n != e2.n:
        raise TwinGroupError("rank mismatch")
    return FreeEndo(e1.n, tuple(endo_apply(e1, w) for w in e2.images))


def mu_generator(i: int, n: int) -> FreeEndo:
    """mu_n(s_i): x_i -> x_i x_{i+1}, x_{i+1} -> x_{i+1}^-1, other x_j fixed."""
    if not 1 <= i <= n - 1:
        raise TwinGroupError(f"s{i} out of range for T_{n}")
    images = [(k,) for k in range(1, n + 1)]
    images[i - 1] = (i, i + 1)
    images[i] = (-(i + 1),)
    return FreeEndo(n, tuple(images))


def mu(w: Word, ctx: GroupContext) -> FreeEndo:
    w = ctx.check(w)
    e = FreeEndo.identity(ctx.n)
    gens = {i: mu_generator(i, ctx.n) for i in set(w)}
    for i in w:
        e = endo_compose(e, gens[i])
    return e


def kernel_witness(ctx: GroupContext) -> Word:
    """x = (s2 s3)^-2 s1 (s2 s3)^2 s1 (s2 s3)^2 s1 (s2 s3)^-2 s1, a nontrivial kernel element."""
    if ctx.n < 4:
        raise TwinGroupError("the kernel witness needs n >= 4")
    sq = power((2, 3), 2)
    sq_inv = invert(sq)
    return sq_inv + (1,) + sq + (1,) + sq + (1,) + sq_inv + (1,)


def mu3_closed_forms(k: int) -> dict:
    """The closed forms for mu_3 on (s1 s2)^(2k), (s1 s2)^(2k) s1 and s2 (s1 s2)^(2k-1)."""
    x1, x2, x3 = (1,), (2,), (3,)
    x3k = free_power(x3, k)
    x3mk = free_power(x3, -k)
    return {
        "(s1s2)^2k": (x1 + x3k, x3mk + x2 + x3mk, x3),
        "(s1s2)^2k s1": (x1 + x2 + x3mk, x3k + (-2,) + x3k, x3),
        "s2 (s1s2)^(2k-1)": (x1 + x2 + x3k, x3mk + (-2,) + x3mk, x3),
    }


def mu3_words(k: int) -> dict:
    return {
        "(s1s2)^2k": power((1, 2), 2 * k),
        "(s1s2)^2k s1": power((1, 2), 2 * k) + (1,),
        "s2 (s1s2)^(2k-1)": (2,) + power((1, 2), 2 * k - 1),
    }


def mu3_power_formulas_check(k_max: int) -> bool:
    ctx = GroupContext(3)
    for k in range(1, k_max + 1):
        forms = mu3_closed_forms(k)
        for name, w in mu3_words(k).items():
            expected = tuple(free_reduce(x) for x in forms[name])
            if mu(w, ctx).images != expected:
                return False
    return True
