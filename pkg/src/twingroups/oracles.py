"""Brute-force reference computations used to cross-check the kernel.

Nothing here calls the reduction or canonicalization code it is meant to
check: the word oracle works only with raw elementary transformations, the
geometric representation is linear algebra, and the Fibonacci numbers are
computed from scratch.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable


def _moves(w: tuple):
    """Words one flip or one deletion away from ``w``."""
    for p in range(len(w) - 1):
        a, b = w[p], w[p + 1]
        if a == b:
            yield w[:p] + w[p + 2:]
        elif abs(a - b) >= 2:
            yield w[:p] + (b, a) + w[p + 2:]


def word_oracle_key(w: Iterable[int]) -> tuple:
    """Least minimal-length word reachable from ``w`` by flips and deletions.

    Two words represent the same element iff their keys agree.
    """
    start = tuple(w)
    seen = {start}
    queue = deque([start])
    best_len = len(start)
    best = start
    while queue:
        u = queue.popleft()
        if len(u) < best_len or (len(u) == best_len and u < best):
            best_len, best = len(u), u
        for v in _moves(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return best


def conjugation_orbit(w: tuple, n: int, normal_form, slack: int = 4) -> set:
    """Normal forms reachable from ``w`` by conjugating with single generators.

    Only elements of length at most ``len(w) + slack`` are explored.
    """
    start = normal_form(w)
    bound = len(start) + slack
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for i in range(1, n):
            v = normal_form((i,) + u + (i,))
            if len(v) <= bound and v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def geometric_matrix(w: Iterable[int], n: int) -> tuple:
    """Image of ``w`` under the (faithful) geometric representation of T_n.

    Basis e_1 .. e_{n-1}; the bilinear form has B(e_i, e_i) = 1,
    B(e_i, e_{i+1}) = -1 (infinite order) and 0 otherwise.  s_i acts by
    v -> v - 2 B(e_i, v) e_i.  Entries are exact Python ints.
    """
    r = n - 1
    m = [[int(a == b) for b in range(r)] for a in range(r)]
    for i in w:
        k = i - 1
        # right-multiply by the reflection matrix of s_i (row k is -1 on the
        # diagonal and 2 at the neighbors)
        for row in m:
            rk = row[k]
            row[k] = -rk
            if k > 0:
                row[k - 1] += 2 * rk
            if k < r - 1:
                row[k + 1] += 2 * rk
    return tuple(tuple(row) for row in m)


def fibonacci(k: int) -> int:
    """F_k with F_1 = F_2 = 1."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def gap_subsets(n: int) -> list:
    """All nonempty subsets of {1..n-1} with pairwise gaps >= 2, by brute force."""
    top = n - 1
    out = []
    for mask in range(1, 1 << top):
        idx = [i + 1 for i in range(top) if mask >> i & 1]
        if all(b - a >= 2 for a, b in zip(idx, idx[1:])):
            out.append(tuple(idx))
    return sorted(out)
