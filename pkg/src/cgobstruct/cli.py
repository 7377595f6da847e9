"""Command line entry point: verify, search, signature and cg subcommands.

Exit codes: 0 when the requested certification (or query) succeeded, 1
when a verification ran but did not certify, 2 on usage or input errors.
Machine formats (json, csv) print exact fractions; decimals are advisory.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .casson_gordon import Character, eta_knot, sigma_knot
from .knots import GAKnot, build_family, fox_milnor_check, parse_knot
from .obstruction import genus_lower_bound
from .primes import odd_primes_in
from .search import SearchConfig, parse_config_file, search
from .signatures import (
    RootOfUnity,
    lt_nullity,
    lt_signature,
    signature_at_minus_one,
    signature_function_samples,
)

DIAG_RESOLUTION = 1024


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cgobstruct",
        description="Casson-Gordon signature obstructions for cabled torus knot sums",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="certify a four-genus lower bound for a knot")
    _add_knot_args(pv)
    pv.add_argument("--genus", type=int, default=1, help="genus hypothesis to refute (default 1)")
    pv.add_argument("--format", choices=("human", "json", "csv"), default="human")
    pv.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    pv.add_argument("--witnesses", type=int, default=3, help="sample witnesses recorded per prime")
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("search", help="sweep prime tuples for verified family knots")
    ps.add_argument("--config", help="key=value config file (see README)")
    ps.add_argument("--p-min", type=int)
    ps.add_argument("--p-max", type=int)
    ps.add_argument("--q-min", type=int)
    ps.add_argument("--q-max", type=int)
    ps.add_argument("--p-set", help="explicit comma list of p primes")
    ps.add_argument("--q-set", help="explicit comma list of q primes")
    ps.add_argument("--genus", type=int, default=None)
    ps.add_argument("--ranking", choices=("product", "lex", "maxprime"), default=None)
    ps.add_argument("--limit", type=int, default=None)
    ps.add_argument("--threads", type=int, default=None)
    ps.add_argument("--checkpoint", help="JSON-lines progress file, resumable")
    ps.add_argument(
        "--no-require-algebraic",
        action="store_true",
        help="also sweep candidates whose cable pieces fail p > 4q",
    )
    ps.add_argument("--format", choices=("human", "json", "csv"), default="json")
    ps.set_defaults(func=cmd_search)

    pg = sub.add_parser("signature", help="table of T(2,q) signatures at order-m roots")
    pg.add_argument("--q", type=int, required=True)
    pg.add_argument("--m", type=int, required=True)
    pg.add_argument("--format", choices=("human", "json", "csv"), default="csv")
    pg.set_defaults(func=cmd_signature)

    pc = sub.add_parser("cg", help="sigma and eta of a knot at one character")
    _add_knot_args(pc)
    pc.add_argument("--character", required=True, help="comma list, one residue per piece")
    pc.add_argument("--format", choices=("human", "json", "csv"), default="human")
    pc.set_defaults(func=cmd_cg)
    return parser


def _add_knot_args(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--family", help="p1,p2,q1,q2,q3 for the built-in 8-piece family")
    grp.add_argument("--knot", help="knot string, e.g. 'T(2,5;2,7) # -T(2,5;2,7)'")


def _knot_from_args(args) -> GAKnot:
    if args.family:
        params = [int(x) for x in args.family.split(",") if x.strip()]
        if len(params) != 5:
            raise ValueError(f"--family takes 5 primes, got {len(params)}")
        return build_family(*params)
    return parse_knot(args.knot)


def cmd_verify(args) -> int:
    K = _knot_from_args(args)
    report = genus_lower_bound(
        K, g_max=max(args.genus, 1), threads=args.threads, max_witnesses=args.witnesses
    )
    fm = fox_milnor_check(K)
    samples = signature_function_samples(K, DIAG_RESOLUTION)
    diagnostics = {
        "sigma_minus_one": signature_at_minus_one(K),
        "signature_function_zero": all(v == 0 for _, v in samples),
        "signature_resolution": DIAG_RESOLUTION,
        "fox_milnor_ok": fm.ok,
        "fox_milnor_pairs": [list(p) for p in fm.pairs],
        "fox_milnor_unpaired": [list(u) for u in fm.unpaired],
    }
    certified = report.genus.lower_bound >= args.genus + 1
    if args.format == "json":
        d = report.to_dict()
        d["diagnostics"] = diagnostics
        print(json.dumps(d, indent=2, ensure_ascii=False))
    elif args.format == "csv":
        print(report.csv())
    else:
        print(report.human())
        print(f"sigma(-1) = {diagnostics['sigma_minus_one']}, "
              f"signature function zero at resolution {DIAG_RESOLUTION}: "
              f"{diagnostics['signature_function_zero']}, "
              f"factor pairing: {'complete' if fm.ok else 'incomplete'}")
    return 0 if certified else 1


def cmd_search(args) -> int:
    kwargs: dict = {}
    if args.config:
        kwargs.update(parse_config_file(args.config))
    if args.p_set:
        kwargs["p_primes"] = tuple(int(x) for x in args.p_set.split(",") if x.strip())
    elif args.p_min is not None or args.p_max is not None:
        if args.p_min is None or args.p_max is None:
            raise ValueError("--p-min and --p-max must be given together")
        kwargs["p_primes"] = tuple(odd_primes_in(args.p_min, args.p_max))
    if args.q_set:
        kwargs["q_primes"] = tuple(int(x) for x in args.q_set.split(",") if x.strip())
    elif args.q_min is not None or args.q_max is not None:
        if args.q_min is None or args.q_max is None:
            raise ValueError("--q-min and --q-max must be given together")
        kwargs["q_primes"] = tuple(odd_primes_in(args.q_min, args.q_max))
    for key, val in (
        ("genus", args.genus),
        ("ranking", args.ranking),
        ("limit", args.limit),
        ("threads", args.threads),
    ):
        if val is not None:
            kwargs[key] = val
    if args.no_require_algebraic:
        kwargs["require_algebraic"] = False
    if "p_primes" not in kwargs or "q_primes" not in kwargs:
        raise ValueError("search needs p and q pools (flags or config file)")
    cfg = SearchConfig(**kwargs)
    kept = search(cfg, checkpoint=args.checkpoint)
    if args.format == "json":
        for rec in kept:
            print(json.dumps(rec, ensure_ascii=False))
    elif args.format == "csv":
        print("p1,p2,q1,q2,q3,lower_bound")
        for rec in kept:
            t = rec["tuple"]
            lb = rec["report"]["genus"]["lower_bound"]
            print(f"{t[0]},{t[1]},{t[2]},{t[3]},{t[4]},{lb}")
    else:
        print(f"ranking: {cfg.ranking}; candidates kept: {len(kept)}")
        for rec in kept:
            t = rec["tuple"]
            lb = rec["report"]["genus"]["lower_bound"]
            print(f"  ({t[0]},{t[1]},{t[2]},{t[3]},{t[4]}): lower bound {lb}")
    return 0


def cmd_signature(args) -> int:
    q, m = args.q, args.m
    if q < 1 or q % 2 == 0:
        raise ValueError(f"--q must be odd and >= 1, got {q}")
    if m < 1:
        raise ValueError(f"--m must be >= 1, got {m}")
    rows = []
    for a in range(m):
        w = RootOfUnity(a, m)
        rows.append((a, lt_signature(q, w), lt_nullity(q, w)))
    if args.format == "json":
        print(json.dumps([{"a": a, "sigma": s, "eta": e} for a, s, e in rows]))
    elif args.format == "human":
        print(f"T(2,{q}) at order-{m} roots:")
        for a, s, e in rows:
            print(f"  a={a:>4}  sigma={s:>5}  eta={e}")
    else:
        print("a,sigma,eta")
        for a, s, e in rows:
            print(f"{a},{s},{e}")
    return 0


def cmd_cg(args) -> int:
    K = _knot_from_args(args)
    residues = [int(x) for x in args.character.split(",") if x.strip()]
    chi = Character.for_knot(K, residues)
    sigma = sigma_knot(K, chi)
    eta = eta_knot(K, chi)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "knot": str(K),
                    "character": list(chi.residues),
                    "sigma": f"{sigma.numerator}/{sigma.denominator}",
                    "sigma_decimal": float(sigma),
                    "eta": eta,
                }
            )
        )
    elif args.format == "csv":
        print("sigma,eta")
        print(f"{sigma.numerator}/{sigma.denominator},{eta}")
    else:
        print(f"knot: {K}")
        print(f"character: {','.join(str(r) for r in chi.residues)}")
        print(f"sigma = {sigma.numerator}/{sigma.denominator} ({float(sigma):.6f})")
        print(f"eta = {eta}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
