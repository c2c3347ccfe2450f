"""Automorphisms of T_n given by the images of the generators.

Composition convention: ``compose(a, b)`` applies ``a`` first and then ``b``,
i.e. it is the map ``x -> b(a(x))``.  Product literals such as
``"psi*kappa"`` use the usual functional notation, so ``psi*kappa`` is
``psi o kappa == compose(kappa, psi)``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from .conjugacy import are_conjugate
from .symmetric import is_pure
from .words import (
    GroupContext,
    TwinGroupError,
    Word,
    invert,
    normal_form,
    parse_word,
    power,
)
from .involutions import is_involution

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwinAut:
    ctx: GroupContext
    images: Tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.ctx.n - 1:
            raise TwinGroupError(
                f"expected {self.ctx.n - 1} generator images, got {len(self.images)}"
            )
        object.__setattr__(
            self, "images", tuple(normal_form(self.ctx.check(w)) for w in self.images)
        )

    def __call__(self, w: Word) -> Word:
        return apply_aut(self, w)

    def image(self, i: int) -> Word:
        return self.images[i - 1]


def aut_identity(ctx: GroupContext) -> TwinAut:
    return TwinAut(ctx, tuple((i,) for i in ctx.generators))


def aut_inner(g: Word, ctx: GroupContext) -> TwinAut:
    """x -> g^-1 x g."""
    g = ctx.check(g)
    gi = invert(g)
    return TwinAut(ctx, tuple(gi + (i,) + g for i in ctx.generators))


def aut_psi(ctx: GroupContext) -> TwinAut:
    if ctx.n < 3:
        raise TwinGroupError("psi needs n >= 3")
    return TwinAut(ctx, tuple((ctx.n - i,) for i in ctx.generators))


def aut_tau(ctx: GroupContext = GroupContext(4)) -> TwinAut:
    if ctx.n != 4:
        raise TwinGroupError("tau is only defined on T_4")
    return TwinAut(ctx, ((1, 3), (2,), (1,)))


def aut_kappa(ctx: GroupContext) -> TwinAut:
    n = ctx.n
    if n < 5:
        raise TwinGroupError("kappa needs n >= 5")
    return TwinAut(ctx, tuple((n - 3, n - 1) if i == 3 else (n - i,) for i in ctx.generators))


def apply_aut(a: TwinAut, w: Word) -> Word:
    out: list = []
    for i in w:
        out.extend(a.images[i - 1])
    return normal_form(tuple(out))


def compose(a: TwinAut, b: TwinAut) -> TwinAut:
    """``a`` then ``b``: s_i -> b(a(s_i))."""
    if a.ctx != b.ctx:
        raise TwinGroupError("cannot compose automorphisms of different groups")
    return TwinAut(a.ctx, tuple(apply_aut(b, w) for w in a.images))


def aut_power(a: TwinAut, k: int) -> TwinAut:
    if k < 0:
        raise TwinGroupError("negative powers need an inverse; use aut_inverse")
    out = aut_identity(a.ctx)
    for _ in range(k):
        out = compose(out, a)
    return out


def is_identity_aut(a: TwinAut) -> bool:
    return a.images == aut_identity(a.ctx).images


def aut_order(a: TwinAut, limit: int = 24) -> Optional[int]:
    """Order of ``a`` if it is at most ``limit``, else None."""
    cur = a
    for k in range(1, limit + 1):
        if is_identity_aut(cur):
            return k
        cur = compose(cur, a)
    return None


def aut_inverse(a: TwinAut, limit: int = 24) -> TwinAut:
    """Inverse of a finite-order automorphism, as ``a^(order - 1)``."""
    k = aut_order(a, limit)
    if k is None:
        raise TwinGroupError(f"no finite order <= {limit}; inverse not available")
    return aut_power(a, k - 1)


def validate_aut(a: TwinAut) -> bool:
    """Check that the images satisfy the defining relations of T_n.

    This is a necessary condition for an endomorphism only; bijectivity is
    not decided.  The constructors above only produce automorphisms.
    """
    for w in a.images:
        if not is_involution(w):
            return False
    gens = list(a.ctx.generators)
    for i in gens:
        for j in gens:
            if j - i >= 2:
                u, v = a.image(i), a.image(j)
                if normal_form(u + v) != normal_form(v + u):
                    return False
    return True


def is_inner(a: TwinAut) -> bool:
    """Inner iff every generator is sent into its own conjugacy class."""
    if not validate_aut(a):
        raise TwinGroupError("map does not respect the relations of T_n")
    return all(are_conjugate(a.image(i), (i,)) for i in a.ctx.generators)


def inner_witness(a: TwinAut, max_depth: int = 12) -> Optional[Word]:
    """Search for g with ``aut_inner(g) == a``, peeling one letter at a time.

    Each step conjugates every image by some s_j and keeps only steps that
    shorten the total image length.  Returns None when nothing is found within
    ``max_depth`` letters; that is not a proof that ``a`` is outer.
    """
    ctx = a.ctx
    target = aut_identity(ctx).images
    frontier = {a.images: ()}
    for _ in range(max_depth + 1):
        nxt = {}
        for images, peeled in frontier.items():
            if images == target:
                # a = inner(peeled reversed): conjugating back rebuilds a
                return invert(peeled)
            total = sum(map(len, images))
            for j in ctx.generators:
                cand = tuple(normal_form((j,) + w + (j,)) for w in images)
                if sum(map(len, cand)) < total and cand not in nxt:
                    nxt[cand] = peeled + (j,)
        frontier = nxt
        if not frontier:
            break
    return None


def transversal(ctx: GroupContext) -> list:
    """Coset representatives of Inn(T_n) in Aut(T_n), with their exponents.

    Returns (exponents, automorphism) pairs; exponents are (m1, m2) for
    psi^m1 o tau^m2 (n = 4) or psi^m1 o kappa^m2 (n >= 5), and (m1,) for n = 3.
    """
    n = ctx.n
    if n < 3:
        raise TwinGroupError("the outer transversal is tabulated for n >= 3")
    psi = aut_psi(ctx)
    if n == 3:
        return [((0,), aut_identity(ctx)), ((1,), psi)]
    other, order = (aut_tau(ctx), 3) if n == 4 else (aut_kappa(ctx), 4)
    out = []
    for m1 in range(2):
        for m2 in range(order):
            # psi^m1 o other^m2 applies other^m2 first
            r = compose(aut_power(other, m2), aut_power(psi, m1))
            out.append(((m1, m2), r))
    return out


def outer_class(a: TwinAut) -> tuple:
    """Exponents of the unique transversal element r with r o a inner.

    Returns ``(exponents, True)``; raises if no representative or more than
    one representative is found.
    """
    if not validate_aut(a):
        raise TwinGroupError("map does not respect the relations of T_n")
    hits = [exps for exps, r in transversal(a.ctx) if is_inner(compose(a, r))]
    if not hits:
        raise TwinGroupError("no outer representative found; input is not an automorphism")
    if len(hits) > 1:
        raise TwinGroupError(f"outer representative not unique: {hits}")
    return hits[0], True


def parse_aut(text: str, ctx: GroupContext) -> TwinAut:
    """Parse ``psi``, ``tau``, ``kappa``, ``id``, ``inner:<word>`` and ``*``-products.

    ``x*y`` denotes x o y, so y is applied first.
    """
    factors = [f.strip() for f in text.split("*")]
    if not factors or any(not f for f in factors):
        raise TwinGroupError(f"bad automorphism literal {text!r}")
    result = aut_identity(ctx)
    for f in factors:
        if f == "psi":
            a = aut_psi(ctx)
        elif f == "tau":
            a = aut_tau(ctx)
        elif f == "kappa":
            a = aut_kappa(ctx)
        elif f in ("id", "1"):
            a = aut_identity(ctx)
        elif f.startswith("inner:"):
            a = aut_inner(parse_word(f[len("inner:"):], ctx), ctx)
        else:
            raise TwinGroupError(f"unknown automorphism factor {f!r}")
        result = compose(a, result)
    return result


def characteristic_witnesses(ctx: GroupContext) -> dict:
    """Pure elements sent outside PT_n by a non-inner automorphism.

    Each entry maps a case name to a dict holding the source word, its
    image, and whether the image is pure (it should not be).
    """
    n = ctx.n
    if n < 4:
        raise TwinGroupError("witnesses exist for n >= 4")
    report = {}
    if n == 4:
        src = power((1, 2), 3)
        img = aut_tau(ctx)(src)
        report["tau((s1 s2)^3)"] = _witness(src, img, ctx, power((1, 3, 2), 3))
    else:
        src = power((2, 3), 3)
        kappa = aut_kappa(ctx)
        img = kappa(src)
        report["kappa((s2 s3)^3)"] = _witness(
            src, img, ctx, power((n - 2, n - 3, n - 1), 3)
        )
        expected2 = {5: (2, 4, 3, 1), 6: (2, 3, 5, 1)}.get(n, (2, 3, 1))
        img2 = kappa(img)
        report["kappa^2((s2 s3)^3)"] = _witness(src, img2, ctx, power(expected2, 3))
    return report


def _witness(src: Word, img: Word, ctx: GroupContext, expected: Word) -> dict:
    return {
        "source": src,
        "source_pure": is_pure(src, ctx),
        "image": img,
        "image_matches_formula": img == normal_form(expected),
        "image_pure": is_pure(img, ctx),
    }
