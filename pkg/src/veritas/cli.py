"""Command-line front end.

Exit codes: 0 when everything checks, 1 when a check or probe finds a
violation, 2 on malformed input.  Every subcommand takes ``--json`` for a
machine-readable record on stdout.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import calculus as C
from . import interpret as I
from . import ordinals as O
from . import semantics as M
from . import syntax as S

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


class _Out:
    def __init__(self, args):
        self.json = args.json
        self.level = -1 if args.quiet else args.verbose

    def say(self, text: str = "", level: int = 0):
        if not self.json and self.level >= level:
            print(text)

    def record(self, rec: dict):
        if self.json:
            print(json.dumps(rec, ensure_ascii=False, sort_keys=True, indent=1))


def _universe(args) -> M.Universe:
    if getattr(args, "universe", None):
        return M.read_universe(args.universe)
    return M.standard_universe()


def _ord(text: str) -> O.Ord:
    return O.parse_ord(text)


# ------------------------------------------------------------------- ord

_ORD_OPS = {
    "show": (1, lambda a: a[0]),
    "add": (2, lambda a: O.add(a[0], a[1])),
    "nsum": (2, lambda a: O.natural_sum(a[0], a[1])),
    "phi": (2, lambda a: O.veblen(a[0], a[1])),
    "exp": (1, lambda a: O.omega_exp(a[0])),
    "eps": (1, lambda a: O.epsilon(a[0])),
    "hat": (1, lambda a: O.hat(a[0])),
    "succ": (1, lambda a: O.succ(a[0])),
}


def cmd_ord(args, out: _Out) -> int:
    op, raw = args.op, args.args
    if op == "cmp":
        if len(raw) != 2:
            raise ValueError("cmp takes two ordinals")
        a, b = _ord(raw[0]), _ord(raw[1])
        c = O.compare(a, b)
        sym = {O.LT: "<", O.EQ: "=", O.GT: ">"}[c]
        out.say(f"{O.render(a)} {sym} {O.render(b)}")
        out.record({"op": op, "args": raw, "result": {O.LT: "LT", O.EQ: "EQ", O.GT: "GT"}[c]})
        return OK
    if op in ("tower", "beta"):
        n = int(raw[0])
        res = O.omega_tower(n, _ord(raw[1])) if op == "tower" else O.beta_sequence(n)
    elif op in _ORD_OPS:
        arity, fn = _ORD_OPS[op]
        if len(raw) != arity:
            raise ValueError(f"{op} takes {arity} ordinal(s)")
        res = fn([_ord(x) for x in raw])
    else:
        raise ValueError(f"unknown ordinal operation {op!r}")
    out.say(O.render(res))
    out.record({"op": op, "args": raw, "result": O.to_text(res), "rendered": O.render(res)})
    return OK


# ------------------------------------------------------------- semantics

def _names(U: M.Universe, X) -> list[str]:
    return [U.name(c) for c in U.codes if c in X]


def cmd_jump(args, out: _Out) -> int:
    U = _universe(args)
    X = M.read_extension(args.ext, U) if args.ext else frozenset()
    J = M.jump(args.scheme, U, X)
    for n in _names(U, J):
        out.say(n)
    out.record({"scheme": args.scheme, "input": _names(U, X), "jump": _names(U, J)})
    return OK


def _figure(res: M.LfpResult, scheme: str, path: str):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    sizes = [len(s) for s in res.stages] or [0]
    deltas = [len(d) for d in res.deltas] or [0]
    xs = list(range(1, len(sizes) + 1))
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.bar(xs, deltas, color="#c9d6e8", label="new codes")
    ax.plot(xs, sizes, marker="o", color="#2b4c7e", label="stage size")
    ax.set_xlabel("iteration")
    ax.set_ylabel("codes")
    ax.set_title(f"least fixed point, scheme {scheme}")
    ax.set_xticks(xs)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def cmd_lfp(args, out: _Out) -> int:
    U = _universe(args)
    res = M.lfp_trace(args.scheme, U)
    X = res.fixed_point
    for i, d in enumerate(res.deltas, 1):
        out.say(f"stage {i}: +{len(d)}", 1)
        for n in sorted(U.name(c) for c in d):
            out.say(f"  {n}", 2)
    undetermined = [U.name(a) for a, b in U.pairs if a not in X and b not in X]
    out.say(f"stabilized after {len(res.stages)} stage(s); {len(X)} of {len(U)} codes true")
    for n in undetermined:
        out.say(f"undetermined: {n}")
    if args.figure:
        _figure(res, args.scheme, args.figure)
        out.say(f"figure written to {args.figure}")
    out.record({"scheme": args.scheme, "stages": [_names(U, s) for s in res.stages],
                "fixed_point": _names(U, X), "undetermined": undetermined})
    return OK


def cmd_axioms(args, out: _Out) -> int:
    U = _universe(args)
    scheme = args.scheme or M.SCHEME_FOR[args.theory]
    r = M.check_axioms(args.theory, U, M.lfp(scheme, U))
    for name in M.axiom_names(args.theory):
        out.say(f"{name}: {r.checked.get(name, 0)} checked, {r.skipped.get(name, 0)} out of scope", 1)
    for name, inst in r.failures:
        out.say(f"FAIL {name} at {inst}")
    if r.unchecked_rules:
        out.say(f"rules not model-checked: {', '.join(r.unchecked_rules)}", 1)
    out.say(f"{args.theory} in lfp({scheme}): {len(r.failures)} failure(s) "
            f"in {sum(r.checked.values())} instances")
    rec = r.to_record()
    rec["scheme"] = scheme
    out.record(rec)
    return OK if r.ok else VIOLATION


def cmd_skjump(args, out: _Out) -> int:
    U = _universe(args)
    if args.iterate:
        res = I.sk_lfp(U)
        for i, d in enumerate(res.deltas, 1):
            out.say(f"stage {i}: " + ", ".join(sorted(U.name(c) for c in d)), 1)
        X = res.fixed_point
        stages = [_names(U, s) for s in res.stages]
    else:
        X = I.sk_jump(frozenset(), U)
        stages = [_names(U, X)]
    for n in _names(U, X):
        out.say(n)
    out.record({"iterate": args.iterate, "stages": stages, "result": _names(U, X)})
    return OK


def cmd_xistar(args, out: _Out) -> int:
    if args.universe:
        U = _universe(args)
        X = M.lfp("mc", U)
        reports = {"xi_star": I.check_xi_star_properties(U, X)}
    else:
        R = I.standard_ramified_pool()
        levels = [O.ZERO, O.ONE]
        U = I.ramified_universe(R, levels)
        X = M.lfp("mc", U)
        reports = {"xi_star": I.check_xi_star_properties(U, X)}
        for b in levels:
            reports[f"rt_level_{O.to_text(b)}"] = I.check_rt_translation(U, X, b, R)
    ok = True
    for name, r in reports.items():
        ok &= r.ok
        out.say(f"{name}: {len(r.failures)} failure(s) in {sum(r.checked.values())} instances")
        for item, inst in r.failures[:20]:
            out.say(f"  FAIL {item}: {inst}")
    out.record({k: r.to_record() for k, r in reports.items()})
    return OK if ok else VIOLATION


def cmd_translate(args, out: _Out) -> int:
    if args.k:
        x = S.encode(S.parse(args.k))
        y = I.k_translate(x)
        rec = {"op": "k", "input": args.k, "code": y, "formula": S.show(S.decode(y))}
    elif args.h:
        x = S.encode(S.parse(args.h))
        y = I.h(x, _ord(args.beta))
        rec = {"op": "h", "input": args.h, "beta": args.beta, "code": y,
               "formula": S.show(S.decode(y))}
    elif args.sigma:
        f = I.sigma(_ord(args.alpha), S.parse(args.sigma))
        rec = {"op": "sigma", "input": args.sigma, "alpha": args.alpha, "formula": S.show(f)}
    else:
        raise ValueError("give one of --k, --h or --sigma")
    out.say(rec["formula"])
    if "code" in rec:
        out.say(f"code {rec['code']}", 1)
    out.record(rec)
    return OK


# ------------------------------------------------------------- calculus

def _system(name: str | None, header: str | None, X: str | None = None) -> C.System:
    name = name or header
    if not name:
        raise ValueError("no system given and none recorded in the file")
    if name == "Istar":
        return C.Istar(int(x) for x in (X or "").replace(",", " ").split())
    return C.as_system(name)


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        return C.loads(fh.read())


def _report(res: C.CheckResult, out: _Out) -> int:
    for v in res.violations:
        out.say(f"node {'.'.join(map(str, v.path)) or 'root'} ({v.rule}): {v.condition}; "
                f"actual: {v.actual}")
    out.say(f"{res.system}: {res.nodes} node(s), {len(res.violations)} violation(s)")
    out.record(res.to_record())
    return OK if res.ok else VIOLATION


def cmd_check(args, out: _Out) -> int:
    d, header = _load(args.file)
    sys_ = _system(args.system, header, args.X)
    res = C.check(d, sys_)
    if out.level >= 2:
        for x in d.nodes():
            out.say(f"{x.rule} ⊢ {', '.join(sorted(S.show(f) for f in x.conclusion))} "
                    f"[{O.render(x.label)}]", 2)
    return _report(res, out)


def _write(path: str, d: C.Derivation, system: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(C.dumps(d, system))
        fh.write("\n")


def cmd_cutelim(args, out: _Out) -> int:
    d, header = _load(args.file)
    sys_ = _system(args.system, header)
    pre = C.check(d, sys_)
    if not pre.ok:
        out.say("input does not check")
        return _report(pre, out)
    e = C.cut_eliminate(d, sys_)
    bound = O.omega_tower(d.max_rank(), d.label)
    post = C.check(e, sys_)
    within = O.compare(e.label, bound) != O.GT
    out.say(f"rank {d.max_rank()} -> {e.max_rank()}; label {O.render(d.label)} -> "
            f"{O.render(e.label)} (bound {O.render(bound)}); {d.size()} -> {e.size()} nodes")
    if args.output:
        _write(args.output, e, str(sys_))
        out.say(f"written to {args.output}", 1)
    out.record({"input_rank": d.max_rank(), "output_rank": e.max_rank(),
                "input_label": O.to_text(d.label), "output_label": O.to_text(e.label),
                "bound": O.to_text(bound), "within_bound": within, "check": post.to_record()})
    return OK if post.ok and within and e.max_rank() == 0 else VIOLATION


def _embed_arg(text: str):
    t = text.strip()
    if t.isdigit():
        return int(t)
    if t in ("liar", "lambda", "λ"):
        return S.encode(S.liar())
    if t.isidentifier():
        return t
    try:
        return S.eval_term(S.parse_term(t))
    except ValueError:
        return S.encode(S.parse(t))


def cmd_embed(args, out: _Out) -> int:
    vals = [_embed_arg(a) for a in args.arg]
    d = C.embed_axiom(args.theory, args.axiom, *vals, B=args.B)
    sys_ = C.THEORY_SYSTEM[args.theory]
    res = C.check(d, sys_)
    out.say(f"{args.axiom} for {args.theory} in {sys_}: {d.size()} nodes, label {O.render(d.label)}, "
            f"rules {', '.join(sorted(d.rules_used()))}")
    if args.output:
        _write(args.output, d, sys_)
        out.say(f"written to {args.output}", 1)
    return _report(res, out)


def cmd_probe(args, out: _Out) -> int:
    sys_ = _system(args.system, None, args.X)
    r = C.consistency_probe(sys_, depth=args.depth, beta_bound=_ord(args.beta),
                            planted=args.planted)
    out.say(f"{sys_}: {r.sequents_explored} sequents explored at depth ≤ {args.depth}; "
            f"targets {', '.join(S.show(t) for t in r.targets)}")
    for t, d in r.found:
        out.say(f"derivation found for {S.show(t)} ({d.size()} nodes)")
    if r.clean:
        out.say("no false equation derivable within the bounds")
    out.record(r.to_record())
    return OK if r.clean else VIOLATION


def cmd_selftest(args, out: _Out) -> int:
    from . import acceptance
    outcomes = [acceptance.run(n) for n in args.only] if args.only else acceptance.run_all()
    for o in outcomes:
        out.say(o.line)
    out.record({"criteria": [o.to_record() for o in outcomes],
                "passed": sum(o.ok for o in outcomes), "total": len(outcomes)})
    return OK if all(o.ok for o in outcomes) else VIOLATION


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    def flags(default):
        # the subcommand copies must not reset flags given before the subcommand
        g = argparse.ArgumentParser(add_help=False)
        g.add_argument("--json", action="store_true", default=default(False),
                       help="machine-readable record on stdout")
        g.add_argument("-q", "--quiet", action="store_true", default=default(False))
        g.add_argument("-v", "--verbose", action="count", default=default(0))
        return g

    common = flags(lambda _: argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="veritas", parents=[flags(lambda v: v)],
                                description="Supervaluational truth theories at desk scale.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        q = sub.add_parser(name, parents=[common], help=help_)
        q.set_defaults(fn=fn)
        return q

    q = add("ord", cmd_ord, "ordinal arithmetic below Γ₀")
    q.add_argument("op", help="show, cmp, add, nsum, phi, exp, eps, hat, succ, tower, beta")
    q.add_argument("args", nargs="*")

    for name, fn, h in (("jump", cmd_jump, "one Kripke jump"),
                        ("lfp", cmd_lfp, "least fixed point with stage trace")):
        q = add(name, fn, h)
        q.add_argument("--scheme", choices=M.SCHEMES, default="mc")
        q.add_argument("--universe", help="pool file (default: the standard pool)")
        if name == "jump":
            q.add_argument("--ext", help="file listing the extension X")
        else:
            q.add_argument("--figure", metavar="PNG", help="plot stage growth to an image")

    q = add("axioms", cmd_axioms, "model-check a theory's axioms in a fixed point")
    q.add_argument("--theory", choices=M.THEORIES, required=True)
    q.add_argument("--scheme", choices=M.SCHEMES)
    q.add_argument("--universe")

    q = add("check", cmd_check, "check a derivation file")
    q.add_argument("file")
    q.add_argument("--system", choices=sorted(C.RULES))
    q.add_argument("--X", help="P-extension codes for Istar")

    q = add("cutelim", cmd_cutelim, "eliminate cuts from a derivation file")
    q.add_argument("file")
    q.add_argument("-o", "--output")
    q.add_argument("--system", choices=C.INF_FAMILY)

    q = add("embed", cmd_embed, "derive an axiom instance in the infinitary system")
    q.add_argument("--theory", choices=sorted(C.THEORY_SYSTEM), required=True)
    q.add_argument("--axiom", required=True)
    q.add_argument("--arg", action="append", default=[],
                   help="code, closed term, formula, 'liar' or a variable name")
    q.add_argument("-B", type=int, default=2, help="ω-rule instance bound")
    q.add_argument("-o", "--output")

    q = add("probe", cmd_probe, "bounded search for a derivation of a false equation")
    q.add_argument("--system", choices=C.I_FAMILY, default="I")
    q.add_argument("--depth", type=int, default=3)
    q.add_argument("--beta", default="w", help="height bound (ordinal)")
    q.add_argument("--X", help="P-extension codes for Istar")
    q.add_argument("--planted", action="store_true", help="add an unsound axiom (detector check)")

    q = add("translate", cmd_translate, "the h, k and σ translations")
    q.add_argument("--k", metavar="FORMULA")
    q.add_argument("--h", metavar="FORMULA")
    q.add_argument("--beta", default="1")
    q.add_argument("--sigma", metavar="FORMULA")
    q.add_argument("--alpha", default="2")

    q = add("skjump", cmd_skjump, "strong Kleene jump")
    q.add_argument("--universe")
    q.add_argument("--iterate", action="store_true", help="iterate to the least fixed point")

    q = add("xistar-check", cmd_xistar, "ξ* properties and the RT translation")
    q.add_argument("--universe", help="pool file (default: the ramified test pool)")

    q = add("selftest", cmd_selftest, "run the acceptance suite")
    q.add_argument("--only", type=int, action="append", choices=range(1, 11))
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return INPUT_ERROR if e.code else OK
    out = _Out(args)
    try:
        return args.fn(args, out)
    except (ValueError, OSError, KeyError, IndexError) as e:
        print(f"veritas: error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
