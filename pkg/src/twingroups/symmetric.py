"""The projection pi: T_n -> S_n and membership in the pure twin group PT_n."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .words import GroupContext, TwinGroupError, Word


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}; ``images[k - 1]`` is the image of k.

    Products read left to right: ``(p * q)(k) == q(p(k))``, so that
    ``permutation_image(w1 + w2) == permutation_image(w1) * permutation_image(w2)``.
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise TwinGroupError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        im = list(range(1, n + 1))
        im[i - 1], im[j - 1] = j, i
        return cls(tuple(im))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise TwinGroupError("degree mismatch")
        return Permutation(tuple(other(self(k)) for k in range(1, self.degree + 1)))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, 1))

    def cycles(self) -> list:
        seen = set()
        out = []
        for k in range(1, self.degree + 1):
            if k in seen or self(k) == k:
                continue
            cyc = [k]
            seen.add(k)
            j = self(k)
            while j != k:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def one_line(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def permutation_image(w: Word, ctx: GroupContext) -> Permutation:
    # apply the adjacent transpositions left to right, tracking where each point goes
    pos = list(range(1, ctx.n + 1))
    for i in w:
        pos = [i + 1 if p == i else i if p == i + 1 else p for p in pos]
    return Permutation(tuple(pos))


def is_pure(w: Word, ctx: GroupContext) -> bool:
    return permutation_image(w, ctx).is_identity()
