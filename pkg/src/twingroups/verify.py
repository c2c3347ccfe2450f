"""The acceptance suite: each criterion checked at its stated size and time limit."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import oracles
from .automorphisms import (
    aut_identity,
    aut_inner,
    aut_inverse,
    aut_kappa,
    aut_power,
    aut_psi,
    aut_tau,
    characteristic_witnesses,
    compose,
    is_identity_aut,
    is_inner,
    outer_class,
    parse_aut,
    transversal,
)
from .conjugacy import are_conjugate, is_cyclically_reduced
from .free_rep import (
    FreeEndo,
    endo_compose,
    kernel_witness,
    mu,
    mu3_power_formulas_check,
    mu_generator,
)
from .involutions import (
    centralizer_of_involution,
    enumerate_involution_classes,
    rho,
)
from .symmetric import is_pure, permutation_image
from .words import GroupContext, equal, is_reduced, normal_form
from .zclasses import alpha, lambda_direct, lambda_recursive

SEED = 20201


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    elapsed: float
    limit: float
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.passed and self.elapsed < self.limit

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        timing = f"{self.elapsed:.2f}s/{self.limit:g}s"
        extra = "" if self.passed else " (check failed)"
        if self.passed and not self.ok:
            extra = " (time limit exceeded)"
        return f"[{status}] {self.number:2d}. {self.name} [{timing}] {self.detail}{extra}"


def _cap(hi: int, max_n: Optional[int]) -> int:
    return hi if max_n is None else min(hi, max_n)


def check_rho_table(max_n=None):
    hi = _cap(20, max_n)
    bad = [n for n in range(2, hi + 1) if rho(n) != oracles.fibonacci(n + 1) - 1]
    ok = rho(2) == 1 and rho(3) == 2 and not bad
    return ok, f"n=2..{hi}, mismatches={bad}"


def check_rho_enumeration(max_n=None):
    hi = _cap(20, max_n)
    bad = [
        n for n in range(2, hi + 1)
        if len(enumerate_involution_classes(GroupContext(n))) != rho(n)
    ]
    return not bad, f"n=2..{hi}, mismatches={bad}"


def check_lambda_table(max_n=None):
    hi = _cap(16, max_n)
    base = [lambda_direct(n) for n in range(2, 7)]
    bad = [n for n in range(7, hi + 1) if lambda_direct(n) != lambda_recursive(n)]
    ok = base == [1, 2, 2, 5, 8] and not bad
    return ok, f"lambda_2..6={base}, recursion checked n=7..{hi}, mismatches={bad}"


def check_alpha_identity(max_n=None):
    hi = _cap(14, max_n)
    bad = [i for i in range(3, hi + 1) if alpha(i + 1) != 1 + lambda_direct(i)]
    return not bad, f"i=3..{hi}, mismatches={bad}"


def _random_related(w, n, rng, max_len=8):
    """Apply random elementary transformations, keeping the length <= max_len."""
    w = list(w)
    for _ in range(rng.randint(1, 12)):
        kind = rng.random()
        if kind < 0.35 and len(w) + 2 <= max_len:
            p = rng.randint(0, len(w))
            i = rng.randint(1, n - 1)
            w[p:p] = [i, i]
        elif kind < 0.7 and len(w) >= 2:
            p = rng.randint(0, len(w) - 2)
            if abs(w[p] - w[p + 1]) >= 2:
                w[p], w[p + 1] = w[p + 1], w[p]
        else:
            pairs = [p for p in range(len(w) - 1) if w[p] == w[p + 1]]
            if pairs:
                p = rng.choice(pairs)
                del w[p:p + 2]
    return tuple(w)


def check_word_oracle(max_n=None):
    rng = random.Random(SEED)
    hi = _cap(5, max_n)
    disagreements = 0
    pool_size = 0
    for n in range(2, hi + 1):
        pool = [
            w for k in range(7) for w in itertools.product(range(1, n), repeat=k)
        ]
        pool_size += len(pool)
        # all-pairs agreement == the two partitions of the pool coincide
        nf_to_key: dict = {}
        key_to_nf: dict = {}
        for w in pool:
            a, b = normal_form(w), oracles.word_oracle_key(w)
            if nf_to_key.setdefault(a, b) != b or key_to_nf.setdefault(b, a) != a:
                disagreements += 1
    pairs = 10_000
    positives = 0
    for t in range(pairs):
        n = rng.randint(2, hi)
        w1 = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 8)))
        if t % 2:
            w2 = _random_related(w1, n, rng)
        else:
            w2 = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 8)))
        mine = equal(w1, w2)
        ref = oracles.word_oracle_key(w1) == oracles.word_oracle_key(w2)
        positives += ref
        disagreements += mine != ref
    detail = (f"pool={pool_size} words (n=2..{hi}, length<=6), {pairs} random pairs "
              f"({positives} equal), disagreements={disagreements}")
    return disagreements == 0, detail


def _cyclically_reduced_pool(n, max_len):
    seen = {}
    for k in range(max_len + 1):
        for w in itertools.product(range(1, n), repeat=k):
            if is_reduced(w) and is_cyclically_reduced(w):
                seen.setdefault(normal_form(w), w)
    return list(seen.values())


def check_conjugacy_oracle(max_n=None):
    rng = random.Random(SEED + 1)
    hi = _cap(4, max_n)
    pools = {n: _cyclically_reduced_pool(n, 6) for n in range(2, hi + 1)}
    orbits: dict = {}

    def orbit(w, n):
        key = (n, normal_form(w))
        if key not in orbits:
            orbits[key] = oracles.conjugation_orbit(w, n, normal_form, slack=4)
        return orbits[key]

    target = 1500
    pairs = []
    for n, pool in pools.items():
        by_len: dict = {}
        for w in pool:
            by_len.setdefault(len(w), []).append(w)
        share = target // len(pools) + 1
        for _ in range(share):
            if rng.random() < 0.3:
                pairs.append((n, rng.choice(pool), rng.choice(pool)))
            else:
                bucket = by_len[rng.choice(list(by_len))]
                w1 = rng.choice(bucket)
                # bias toward letter-multiset matches, the only pairs that can be conjugate
                same = [w for w in bucket if sorted(w) == sorted(w1)]
                pairs.append((n, w1, rng.choice(same)))
    disagreements = 0
    positives = 0
    for n, w1, w2 in pairs:
        ref = normal_form(w2) in orbit(w1, n)
        positives += ref
        disagreements += are_conjugate(w1, w2) != ref
    detail = (f"{len(pairs)} pairs from pools of sizes "
              f"{ {n: len(p) for n, p in pools.items()} } ({positives} conjugate), "
              f"disagreements={disagreements}")
    return disagreements == 0 and len(pairs) >= 1000, detail


def check_centralizer_soundness(max_n=None):
    hi = _cap(12, max_n)
    failures = 0
    checked = 0
    for n in range(2, hi + 1):
        ctx = GroupContext(n)
        for c in enumerate_involution_classes(ctx):
            w = c.word
            gens = centralizer_of_involution(c, ctx).gens
            for g in ctx.generators:
                commutes = equal((g,) + w + (g,), w)
                checked += 1
                failures += commutes != (g in gens)
    return failures == 0, f"n=2..{hi}, {checked} generator checks, failures={failures}"


def _random_word(rng, n, max_len):
    return tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, max_len)))


def check_automorphism_relations(max_n=None):
    rng = random.Random(SEED + 2)
    hi = _cap(8, max_n)
    problems = []
    for n in range(3, hi + 1):
        ctx = GroupContext(n)
        psi = aut_psi(ctx)
        if not is_identity_aut(compose(psi, psi)):
            problems.append(f"psi^2 n={n}")
        if is_inner(psi):
            problems.append(f"psi inner n={n}")
        if n == 4:
            tau = aut_tau(ctx)
            if not is_identity_aut(aut_power(tau, 3)):
                problems.append("tau^3")
            if parse_aut("psi*tau*psi", ctx).images != aut_power(tau, 2).images:
                problems.append("psi tau psi")
            if is_inner(tau):
                problems.append("tau inner")
        if n >= 5:
            kappa = aut_kappa(ctx)
            if not is_identity_aut(aut_power(kappa, 4)):
                problems.append(f"kappa^4 n={n}")
            if not is_identity_aut(parse_aut("psi*kappa*psi*kappa", ctx)):
                problems.append(f"psi kappa psi kappa n={n}")
            if is_inner(kappa):
                problems.append(f"kappa inner n={n}")
        for _ in range(200):
            g = _random_word(rng, n, 10)
            if not is_inner(aut_inner(g, ctx)):
                problems.append(f"inner({g}) n={n}")
    return not problems, f"n=3..{hi}, 200 random inner per n, problems={problems[:5]}"


def _out_model_mul(x, y, q):
    (a, b), (c, d) = x, y
    return ((a + c) % 2, ((-b if c else b) + d) % q)


def _out_model_inv(x, q):
    a, b = x
    return (a, (b if a else -b) % q)


def check_out_structure(max_n=None):
    rng = random.Random(SEED + 3)
    expected = {3: 2, 4: 6, 5: 8, 6: 8}
    sizes = {}
    problems = []
    for n in range(3, _cap(6, max_n) + 1):
        ctx = GroupContext(n)
        reps = transversal(ctx)
        distinct = 0
        for i, (_, r1) in enumerate(reps):
            r1_inv = aut_inverse(r1)
            same = [j for j, (_, r2) in enumerate(reps) if is_inner(compose(r1_inv, r2))]
            distinct += same == [i]
        sizes[n] = distinct if distinct == len(reps) else -1
        if sizes[n] != expected[n]:
            problems.append(f"|Out(T_{n})|")
        q = {3: 1, 4: 3}.get(n, 4)
        other = {3: None, 4: "tau"}.get(n, "kappa")
        for _ in range(100):
            factors = []
            model = (0, 0)
            for _ in range(rng.randint(1, 5)):
                choice = rng.choice(["psi", "other", "inner"] if other else ["psi", "inner"])
                if choice == "psi":
                    factors.append("psi")
                    elt = (1, 0)
                elif choice == "other":
                    factors.append(other)
                    elt = (0, 1)
                else:
                    g = _random_word(rng, n, 6)
                    factors.append("inner:" + (" ".join(map(str, g)) or "e"))
                    elt = (0, 0)
                model = _out_model_mul(model, elt, q)
            a = parse_aut("*".join(factors), ctx)
            exps, residual_inner = outer_class(a)
            want = _out_model_inv(model, q)
            want = want[:1] if n == 3 else want
            if tuple(exps) != want or not residual_inner:
                problems.append(f"outer_class {factors} n={n}: {exps} != {want}")
    return not problems, f"|Out| by n: {sizes}, problems={problems[:3]}"


def check_witnesses(max_n=None):
    problems = []
    cases = 0
    for n in range(4, _cap(8, max_n) + 1):
        report = characteristic_witnesses(GroupContext(n))
        for name, rec in report.items():
            if name.startswith("kappa^2") and n > 7:
                continue
            cases += 1
            if not rec["source_pure"] or rec["image_pure"] or not rec["image_matches_formula"]:
                problems.append(f"{name} n={n}")
    return not problems, f"{cases} cases, problems={problems}"


def check_representation(max_n=None):
    problems = []
    hi = _cap(8, max_n)
    for n in range(2, hi + 1):
        ident = FreeEndo.identity(n)
        gens = [mu_generator(i, n) for i in range(1, n)]
        for i, gi in enumerate(gens, 1):
            if endo_compose(gi, gi) != ident:
                problems.append(f"mu(s{i})^2 n={n}")
            for j, gj in enumerate(gens, 1):
                if j - i >= 2 and endo_compose(gi, gj) != endo_compose(gj, gi):
                    problems.append(f"mu(s{i}), mu(s{j}) n={n}")
    if not mu3_power_formulas_check(10):
        problems.append("mu3 closed forms")
    for n in range(4, hi + 1):
        ctx = GroupContext(n)
        x = kernel_witness(ctx)
        if not mu(x, ctx).is_identity() or permutation_image(x, ctx).is_identity():
            problems.append(f"kernel witness n={n}")
    ctx3 = GroupContext(3)
    t3 = 0
    for k in range(1, 13):
        for first in (1, 2):
            w = tuple(first if p % 2 == 0 else 3 - first for p in range(k))
            t3 += 1
            if mu(w, ctx3).is_identity():
                problems.append(f"T_3 kernel element {w}")
    return not problems, f"n<={hi}, {t3} nontrivial T_3 elements, problems={problems}"


CRITERIA: list = [
    (1, "rho table equals F_(n+1) - 1", 1.0, check_rho_table),
    (2, "rho equals |A_n| enumeration", 5.0, check_rho_enumeration),
    (3, "lambda table and recursion", 10.0, check_lambda_table),
    (4, "alpha_(i+1) = 1 + lambda_i", 10.0, check_alpha_identity),
    (5, "word problem vs flip/deletion BFS", 60.0, check_word_oracle),
    (6, "conjugacy vs conjugation-orbit BFS", 60.0, check_conjugacy_oracle),
    (7, "involution centralizer soundness", 30.0, check_centralizer_soundness),
    (8, "automorphism relations and inner test", 30.0, check_automorphism_relations),
    (9, "Out(T_n) transversal and outer_class", 60.0, check_out_structure),
    (10, "PT_n non-characteristic witnesses", 5.0, check_witnesses),
    (11, "free group representation mu_n", 30.0, check_representation),
]


def run_criterion(number: int, max_n=None) -> CriterionResult:
    for num, name, limit, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            passed, detail = fn(max_n)
            return CriterionResult(num, name, bool(passed), time.perf_counter() - start, limit, detail)
    raise KeyError(number)


def run_all(max_n=None, report: Optional[Callable[[str], None]] = None) -> list:
    results = []
    for num, *_ in CRITERIA:
        res = run_criterion(num, max_n)
        if report is not None:
            report(res.line())
        results.append(res)
    return results
