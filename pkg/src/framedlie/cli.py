"""Command-line front end: ``framedlie apply|verify|identity|oracle``.

Exit status is 0 on success, 1 when a check fails and 2 on usage or parse
errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .exprio import ElaborationError, ParseError, elaborate, format_element, parse_pair, read_element
from .identities import commutation_identity, render
from .maps import K_inverse, K_map, e_map, kappa_apply, pbw_normal_form, r_apply, rho_apply, t_map
from .oracle import builtin_tables, load_table
from .tensor import as_g, left_multiply, make_lambda
from .verify import LEMMA_CHECKS, check_k_inverse, format_table, oracle_cases, theorem_sweep

J_MAPS = ("t", "r", "e", "rho", "kappa")


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="framedlie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ap = sub.add_parser("apply", help="apply one of the canonical maps")
    ap.add_argument("--map", required=True, choices=["K", "Kinv", "p", *J_MAPS])
    ap.add_argument("--input", required=True, help="element of T(g); the prefix u for maps on J")
    ap.add_argument("--omega", help='antisymmetrized pair "a,b" (required for t, r, e, rho, kappa)')
    ap.add_argument("--v", default="1", help="argument for r, rho and kappa (default 1)")
    ap.add_argument("--names", default="x,y,z,w", help="generator names in order (default x,y,z,w)")

    vp = sub.add_parser("verify", help="run the theorem and identity checks exhaustively")
    vp.add_argument("--gens", type=int, default=3)
    vp.add_argument("--max-u", type=int, default=2)
    vp.add_argument("--max-v", type=int, default=2)
    vp.add_argument("--lemmas", action="store_true", help="also run the recursion and lemma suite")
    vp.add_argument("--max-degree", type=int, default=5, help="total degree bound for --lemmas")
    vp.add_argument("--letter-degree", type=int, default=1,
                    help="largest letter degree in the --lemmas inputs (default 1: generators only)")

    ip = sub.add_parser("identity", help="print a covariant-derivative commutation relation")
    ip.add_argument("--n", type=int, required=True)
    ip.add_argument("--pos", type=int, required=True)
    ip.add_argument("--format", default="index", choices=["index", "latex", "sexp"])

    op = sub.add_parser("oracle", help="cross-check against a concrete framed Lie algebra")
    op.add_argument("--algebra", default="sl2", help="builtin name or path to a JSON structure table")
    op.add_argument("--seed", type=int, default=0, help="first seed")
    op.add_argument("--trials", type=int, default=10, help="number of seeds")
    op.add_argument("--max-len", type=int, default=2)
    op.add_argument("--gens", type=int, default=3)
    op.add_argument("--keep-diamond", action="store_true",
                    help="use the table's own diamond instead of a seeded random one")
    return parser


def _cmd_apply(args) -> int:
    names = [s.strip() for s in args.names.split(",") if s.strip()]
    u = read_element(args.input, names)
    if args.map in J_MAPS:
        if not args.omega:
            raise UsageError(f"--omega is required for --map {args.map}")
        a, b = (as_g(elaborate(e, names)) for e in parse_pair(args.omega))
        q = left_multiply(u, make_lambda(a, b))
        v = read_element(args.v, names)
        result = {
            "t": lambda: t_map(q),
            "r": lambda: r_apply(q, v),
            "e": lambda: e_map(q),
            "rho": lambda: rho_apply(q, v),
            "kappa": lambda: kappa_apply(q, v),
        }[args.map]()
    else:
        result = {"K": K_map, "Kinv": K_inverse, "p": lambda s: pbw_normal_form(s).value}[args.map](u)
    print(format_element(result, names))
    return 0


def _cmd_verify(args) -> int:
    if args.gens < 2:
        raise UsageError("--gens must be at least 2")
    results = theorem_sweep(args.gens, args.max_u, args.max_v, kappa=True)
    if args.lemmas:
        results += [check(args.gens, args.max_degree, args.letter_degree) for check in LEMMA_CHECKS.values()]
        results.append(check_k_inverse(args.gens, min(args.max_degree, 4)))
    print(format_table(results))
    return 0 if all(r.passed for r in results) else 1


def _cmd_identity(args) -> int:
    try:
        doc = commutation_identity(args.n, args.pos)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(render(doc, args.format))
    return 0


def _load_algebra(spec: str):
    tables = builtin_tables()
    if spec in tables:
        return tables[spec]
    path = Path(spec)
    if path.exists():
        return load_table(path)
    raise UsageError(f"unknown algebra {spec!r} (builtin: {', '.join(sorted(tables))})")


def _cmd_oracle(args) -> int:
    base = _load_algebra(args.algebra)
    if args.gens < 2:
        raise UsageError("--gens must be at least 2")
    failed = 0
    total = 0
    for seed in range(args.seed, args.seed + args.trials):
        for case in oracle_cases(base, seed, args.gens, args.max_len,
                                 randomize_diamond=not args.keep_diamond):
            total += 1
            status = "pass" if case.passed else "FAIL"
            failed += not case.passed
            word = lambda w: "".join(map(str, w)) or "1"
            print(f"seed={case.seed} asg={case.assignment} u={word(case.u)} "
                  f"pair={case.pair[0]},{case.pair[1]} v={word(case.v)} "
                  f"theorem={'ok' if case.theorem else 'nonzero'} "
                  f"symbolic={'match' if case.matches_symbolic else 'differ'} {status}")
    print(f"{total - failed}/{total} cases passed")
    return 0 if not failed else 1


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    handlers = {"apply": _cmd_apply, "verify": _cmd_verify, "identity": _cmd_identity, "oracle": _cmd_oracle}
    try:
        return handlers[args.command](args)
    except (ParseError, ElaborationError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
