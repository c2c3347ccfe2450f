"""Command-line front end: ``twingroups <subcommand> ...``.

Every subcommand accepts ``--json``; JSON output has the fixed field order
``op, n, input, result``.  Exit status is 0 on success, 1 on a domain error
and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import automorphisms as auts
from .conjugacy import are_conjugate, cyclically_reduce
from .free_rep import format_free_word, kernel_witness, mu
from .involutions import (
    ENUMERATION_CAP,
    InvolutionClass,
    centralizer_of_involution,
    enumerate_involution_classes,
    involution_class_rep,
    is_involution,
    rho,
)
from .symmetric import is_pure, permutation_image
from .words import (
    GroupContext,
    TwinGroupError,
    equal,
    format_word,
    normal_form,
    parse_word,
    reduce,
)
from .zclasses import (
    alpha,
    lambda_direct,
    lambda_recursive,
    same_z_class,
    zclass_spotcheck_X_family,
)


class _Output:
    def __init__(self, args, n, inputs):
        self.args = args
        self.n = n
        self.inputs = inputs

    def emit(self, result, text: str):
        if self.args.json:
            payload = {"op": self.args.cmd, "n": self.n, "input": self.inputs, "result": result}
            print(json.dumps(payload))
        else:
            print(text)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _context(args, *texts) -> GroupContext:
    if args.n is not None:
        return GroupContext(args.n)
    # infer the smallest group containing every letter mentioned
    top = 1
    for t in texts:
        try:
            letters = parse_word(t, GroupContext(10**9))
        except TwinGroupError:
            raise TwinGroupError(f"bad word {t!r}: generators are s1, s2, ...") from None
        for letter in letters:
            top = max(top, letter)
    return GroupContext(top + 1)


def _parse_class(text: str) -> InvolutionClass:
    body = text.strip().strip("()")
    parts = [p for p in body.replace(",", " ").replace("s", " ").split() if p]
    try:
        return InvolutionClass(tuple(int(p) for p in parts))
    except ValueError as exc:
        raise TwinGroupError(f"bad class literal {text!r}: {exc}") from None


def _aut_images(a) -> tuple:
    lines = [f"s{i} -> {format_word(w)}" for i, w in enumerate(a.images, 1)]
    return [format_word(w) for w in a.images], "\n".join(lines)


def cmd_word_unary(args):
    ctx = _context(args, args.word)
    w = parse_word(args.word, ctx)
    out = _Output(args, ctx.n, [args.word])
    if args.cmd == "reduce":
        r = format_word(reduce(w))
        out.emit(r, r)
    elif args.cmd == "nf":
        r = format_word(normal_form(w))
        out.emit(r, r)
    elif args.cmd == "cyc":
        cr = cyclically_reduce(w)
        res = {"core": format_word(cr.core), "conjugator": format_word(cr.conjugator)}
        out.emit(res, f"core: {res['core']}\nconjugator: {res['conjugator']}")
    elif args.cmd == "inv":
        if is_involution(w):
            c = involution_class_rep(w)
            out.emit({"involution": True, "class": list(c.indices)}, f"true {c}")
        else:
            out.emit({"involution": False, "class": None}, "false")
    elif args.cmd == "pi":
        p = permutation_image(w, ctx)
        res = {"one_line": list(p.images), "cycles": [list(c) for c in p.cycles()]}
        out.emit(res, f"{p.one_line()} {p.cycle_notation()}")
    elif args.cmd == "pure":
        r = is_pure(w, ctx)
        out.emit(r, _bool(r))


def cmd_word_binary(args):
    ctx = _context(args, args.word1, args.word2)
    w1 = parse_word(args.word1, ctx)
    w2 = parse_word(args.word2, ctx)
    out = _Output(args, ctx.n, [args.word1, args.word2])
    if args.cmd == "eq":
        r = equal(w1, w2, ctx)
    elif args.cmd == "conj":
        r = are_conjugate(w1, w2, ctx)
    else:
        r = same_z_class(w1, w2, ctx)
    out.emit(r, _bool(r))


def cmd_zclass(args):
    if args.family is not None:
        n = args.n if args.n is not None else 4
        r = zclass_spotcheck_X_family(n, args.family)
        _Output(args, n, [f"X_1..X_{args.family}"]).emit(r, _bool(r))
        return
    if args.word1 is None or args.word2 is None:
        raise TwinGroupError("zclass needs two words or --family COUNT")
    cmd_word_binary(args)


def cmd_rho(args):
    r = rho(args.N)
    _Output(args, args.N, [args.N]).emit(r, str(r))


def cmd_classes(args):
    cls = enumerate_involution_classes(GroupContext(args.N), cap=args.cap)
    _Output(args, args.N, [args.N]).emit(
        [list(c.indices) for c in cls], "\n".join(str(c) for c in cls)
    )


def cmd_centralizer(args):
    ctx = GroupContext(args.N)
    c = _parse_class(args.cls)
    cg = centralizer_of_involution(c, ctx)
    gens = sorted(cg.gens)
    _Output(args, args.N, [args.N, str(c)]).emit(
        {"gens": gens, "rank": cg.rank},
        "gens: " + " ".join(f"s{g}" for g in gens) + f"\nrank: {cg.rank}",
    )


def cmd_lambda(args):
    mode = args.mode or "both"
    out = _Output(args, args.N, [args.N, mode])
    if mode == "direct":
        r = lambda_direct(args.N, cap=args.cap)
        out.emit(r, str(r))
    elif mode == "recursive":
        r = lambda_recursive(args.N)
        out.emit(r, str(r))
    else:
        d = lambda_direct(args.N, cap=args.cap)
        rec = lambda_recursive(args.N)
        ctx = GroupContext(args.N)
        table = {
            "n": args.N,
            "lambda_direct": d,
            "lambda_recursive": rec,
            "alpha": [alpha(i, ctx) for i in ctx.generators],
        }
        out.emit(table, f"direct={d} recursive={rec}")


def cmd_alpha(args):
    ctx = GroupContext(args.N)
    values = [alpha(i, ctx) for i in ctx.generators]
    _Output(args, args.N, [args.N]).emit(values, " ".join(map(str, values)))


def cmd_aut(args):
    if args.n is None:
        raise TwinGroupError("aut needs --n")
    ctx = GroupContext(args.n)
    a = auts.parse_aut(args.aut, ctx)
    if args.action == "apply":
        if args.operand is None:
            raise TwinGroupError("aut apply needs a word")
        w = parse_word(args.operand, ctx)
        r = format_word(auts.apply_aut(a, w))
        _Output(args, ctx.n, [args.aut, args.operand]).emit(r, r)
    elif args.action == "compose":
        if args.operand is None:
            raise TwinGroupError("aut compose needs a second automorphism")
        b = auts.parse_aut(args.operand, ctx)
        images, text = _aut_images(auts.compose(a, b))
        _Output(args, ctx.n, [args.aut, args.operand]).emit(images, text)
    elif args.action == "inner-test":
        r = auts.is_inner(a)
        _Output(args, ctx.n, [args.aut]).emit(r, _bool(r))
    else:
        exps, residual = auts.outer_class(a)
        names = ["psi"] + (["tau"] if ctx.n == 4 else ["kappa"] if ctx.n >= 5 else [])
        text = " ".join(f"{nm}^{e}" for nm, e in zip(names, exps))
        _Output(args, ctx.n, [args.aut]).emit(
            {"exponents": list(exps), "generators": names, "residual_inner": residual},
            f"{text} residual_inner={_bool(residual)}",
        )


def cmd_mu(args):
    if args.kernel_witness is not None:
        ctx = GroupContext(args.kernel_witness)
        x = kernel_witness(ctx)
        in_kernel = mu(x, ctx).is_identity()
        pi_trivial = permutation_image(x, ctx).is_identity()
        res = {"word": format_word(x), "mu_identity": in_kernel, "pi_identity": pi_trivial}
        _Output(args, ctx.n, ["kernel-witness"]).emit(
            res,
            f"x = {res['word']}\nmu(x) identity: {_bool(in_kernel)}\n"
            f"pi(x) identity: {_bool(pi_trivial)}",
        )
        return
    if args.word is None:
        raise TwinGroupError("mu needs a word or --kernel-witness N")
    ctx = _context(args, args.word)
    e = mu(parse_word(args.word, ctx), ctx)
    images = [format_free_word(w) for w in e.images]
    _Output(args, ctx.n, [args.word]).emit(
        images, "\n".join(f"x{k} -> {w}" for k, w in enumerate(images, 1))
    )


def cmd_verify_all(args):
    from .verify import run_all

    lines = []
    report = None if args.json else print
    results = run_all(max_n=args.max_n, report=report)
    ok = all(r.ok for r in results)
    if args.json:
        payload = {
            "op": args.cmd,
            "n": args.max_n,
            "input": [],
            "result": [
                {"criterion": r.number, "name": r.name, "passed": r.ok, "detail": r.detail}
                for r in results
            ],
        }
        print(json.dumps(payload))
    else:
        lines.append(f"{sum(r.ok for r in results)}/{len(results)} criteria passed")
        print("\n".join(lines))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twingroups", description="Exact computations in twin groups T_n.")
    sub = parser.add_subparsers(dest="cmd", required=True, metavar="subcommand")

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    def with_n(p):
        p.add_argument("--n", type=int, default=None, help="number of strands (default: inferred)")
        return p

    for name, help_ in [
        ("reduce", "reduce a word"),
        ("nf", "canonical normal form"),
        ("cyc", "cyclic reduction with conjugator"),
        ("inv", "involution test and class representative"),
        ("pi", "image in the symmetric group"),
        ("pure", "membership in the pure twin group"),
    ]:
        with_n(add(name, cmd_word_unary, help_)).add_argument("word")
    for name, help_ in [("eq", "word equality"), ("conj", "conjugacy test")]:
        p = with_n(add(name, cmd_word_binary, help_))
        p.add_argument("word1")
        p.add_argument("word2")

    p = with_n(add("zclass", cmd_zclass, "z-class equality of involutions"))
    p.add_argument("word1", nargs="?")
    p.add_argument("word2", nargs="?")
    p.add_argument("--family", type=int, default=None, metavar="COUNT",
                   help="check pairwise non-conjugacy of X_1..X_COUNT instead")

    add("rho", cmd_rho, "number of involution conjugacy classes").add_argument("N", type=int)
    p = add("classes", cmd_classes, "canonical involution class representatives")
    p.add_argument("N", type=int)
    p.add_argument("--cap", type=int, default=ENUMERATION_CAP)
    p = add("centralizer", cmd_centralizer, "centralizer generators of an involution class")
    p.add_argument("N", type=int)
    p.add_argument("cls", metavar="CLASS", help='e.g. "1,3"')
    p = add("lambda", cmd_lambda, "number of z-classes of involutions")
    p.add_argument("N", type=int)
    p.add_argument("--cap", type=int, default=ENUMERATION_CAP)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--direct", dest="mode", action="store_const", const="direct")
    g.add_argument("--recursive", dest="mode", action="store_const", const="recursive")
    g.add_argument("--both", dest="mode", action="store_const", const="both")
    add("alpha", cmd_alpha, "alpha_1 .. alpha_(N-1)").add_argument("N", type=int)

    p = add("aut", cmd_aut, "automorphisms: apply, compose, inner-test, outer-class")
    p.add_argument("action", choices=["apply", "compose", "inner-test", "outer-class"])
    p.add_argument("aut", help='e.g. "psi", "kappa*inner:1 2"')
    p.add_argument("operand", nargs="?", help="word (apply) or second automorphism (compose)")
    p.add_argument("--n", type=int, default=None)

    p = with_n(add("mu", cmd_mu, "image in Aut(F_n)"))
    p.add_argument("word", nargs="?")
    p.add_argument("--kernel-witness", type=int, default=None, metavar="N")

    p = add("verify-all", cmd_verify_all, "run the acceptance suite")
    p.add_argument("--max-n", type=int, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rc = args.func(args)
    except TwinGroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
