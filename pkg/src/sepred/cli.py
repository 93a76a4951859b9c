"""Command-line front end.

Subcommands: factor-uni, factor-bi, decompose, classify, families
{emit,verify}, group {basics,wreath,verify-index,nilpclass,enum8,
two-action}, scan, stability, mn-check.

Exit codes: 0 success/irreducible, 1 reducible/nonempty-residual,
2 inconsistency, 3 input error.  All JSON reports carry schema_version 1.
"""

import argparse
import json
import sys

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_REDUCIBLE = 1
EXIT_INCONSISTENT = 2
EXIT_INPUT = 3


def _field_from_arg(minpoly_text, gen="a"):
    if not minpoly_text:
        return None
    from .numberfield import nf_new
    from .parsing import parse_unipoly
    return nf_new(parse_unipoly(minpoly_text, var="x"), label=gen)


def _emit(args, payload):
    payload["schema_version"] = SCHEMA_VERSION
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(json.dumps(payload, default=str))


def _cmd_factor_uni(args):
    from .factor_uni import factor_nf
    from .parsing import parse_unipoly
    field = _field_from_arg(args.field, args.gen)
    f = parse_unipoly(args.poly, var=args.var, field=field, gen=args.gen)
    fl = factor_nf(f)
    _emit(args, {"command": "factor-uni", "result": fl.to_json()})
    return EXIT_OK if fl.is_irreducible() else EXIT_REDUCIBLE


def _cmd_factor_bi(args):
    from .factor_bi import factor_bi
    from .parsing import parse_bipoly
    field = _field_from_arg(args.field, args.gen)
    F = parse_bipoly(args.poly, field=field, gen=args.gen)
    fl = factor_bi(F)
    _emit(args, {"command": "factor-bi", "result": fl.to_json()})
    return EXIT_OK if fl.is_irreducible() else EXIT_REDUCIBLE


def _cmd_decompose(args):
    from .decompose import complete_decompositions, is_right_unique, \
        recognize_dickson, recognize_power, NotAFactor
    from .parsing import parse_unipoly, format_poly
    field = _field_from_arg(args.field, args.gen)
    f = parse_unipoly(args.poly, var=args.var, field=field, gen=args.gen)
    chains = complete_decompositions(f)
    tail = chains[0].factors[-1]
    try:
        unique = is_right_unique(f, tail)
    except NotAFactor:
        unique = False
    power = recognize_power(f)
    dickson = recognize_dickson(f)
    payload = {
        "command": "decompose",
        "chains": [[format_poly(p, gen=args.gen) for p in dec.factors] for dec in chains],
        "right_unique_tail": unique,
        "recognitions": {
            "power": None if power is None else
            {"mu": power[0].to_json(), "n": power[1], "nu": power[2].to_json()},
            "dickson": None if dickson is None else
            {"mu": dickson[0].to_json(), "n": dickson[1],
             "alpha": str(dickson[2]), "nu": dickson[3].to_json()},
        },
    }
    _emit(args, payload)
    return EXIT_OK


def _cmd_classify(args):
    from .classifier import classify
    from .parsing import parse_unipoly
    field = _field_from_arg(args.field, args.gen)
    f = parse_unipoly(args.f, var=args.var, field=field, gen=args.gen)
    g = parse_unipoly(args.g, var=args.var, field=field, gen=args.gen)
    verdict = classify(f, g, extensions=args.extensions)
    ok = verdict.verify(f, g)
    payload = {"command": "classify", "verdict": verdict.to_json(), "witness_verified": ok}
    _emit(args, payload)
    if verdict.case == "Inconsistent" or (verdict.reducible and not ok):
        return EXIT_INCONSISTENT
    return EXIT_REDUCIBLE if verdict.reducible else EXIT_OK


def _cmd_families(args):
    from . import families
    from .parsing import format_poly, format_bipoly
    if args.action == "emit":
        tag = args.tag
        if tag in families.EXCEPTIONAL_TAGS:
            pair = families.exceptional_pair(tag)
            payload = {
                "tag": tag,
                "field_minpoly": [str(c) for c in pair.field.minpoly],
                "h1": format_poly(pair.h1, gen="a"),
                "h2": format_poly(pair.h2, gen="a"),
                "gamma": str(pair.gamma),
            }
        elif tag == "Dickson4":
            pair = families.dickson_pair(1)
            payload = {"tag": tag, "h1": format_poly(pair.h1), "h2": format_poly(pair.h2)}
        elif tag.startswith("H"):
            H, K = families.chebyshev_H(int(tag[1:]))
            payload = {"tag": tag, "H": format_bipoly(H, gen="c"),
                       "field_minpoly": None if K is None else [str(c) for c in K.minpoly]}
        elif tag.startswith("P"):
            p = families.genus0_P(int(tag[1]), args.a, args.b)
            payload = {"tag": tag, "poly": format_poly(p, gen="a")}
        elif tag.startswith("T"):
            payload = {"tag": tag, "poly": format_poly(families.chebyshev(int(tag[1:])))}
        else:
            print("unknown tag %r" % tag, file=sys.stderr)
            return EXIT_INPUT
        _emit(args, {"command": "families-emit", "result": payload})
        return EXIT_OK
    report = families.verify_family(args.tag)
    _emit(args, {"command": "families-verify", "report": report})
    return EXIT_OK if report.get("ok") else EXIT_INCONSISTENT


def _parse_group(gen_texts, degree):
    from .groups import PermGroup
    from .perms import parse_perm, pad
    perms = [parse_perm(t) for t in gen_texts]
    n = max([degree] + [len(p) for p in perms])
    return PermGroup(n, [pad(p, n) for p in perms])


def _cmd_group(args):
    from .perms import parse_perm, pad, cycle_type
    if args.action == "basics":
        G = _parse_group(args.gens, args.degree)
        payload = {
            "degree": G.degree, "order": G.order(),
            "transitive": G.is_transitive(), "primitive": G.is_primitive(),
            "solvable": G.is_solvable(),
            "orbits": G.orbits(),
            "minimal_block_systems": [[list(b) for b in s] for s in G.minimal_block_systems()],
        }
        _emit(args, {"command": "group-basics", "report": payload})
        return EXIT_OK
    if args.action == "wreath":
        from .grouplab import wreath
        A = _parse_group(args.gens, args.degree)
        B = _parse_group(args.top_gens, args.top_degree)
        W = wreath(A, B, args.wreath_action)
        _emit(args, {"command": "group-wreath",
                     "report": {"degree": W.degree, "order": W.order(),
                                "generators": [str(g) for g in W.gens]}})
        return EXIT_OK
    if args.action == "verify-index":
        from .grouplab import verify_index_lemma
        G = _parse_group(args.gens, args.degree)
        N = _parse_group(args.normal_gens, G.degree)
        sigma = pad(parse_perm(args.sigma), G.degree)
        rep = verify_index_lemma(G, N, sigma, args.q)
        _emit(args, {"command": "group-verify-index", "report": rep})
        return EXIT_OK if rep["ok"] else EXIT_INCONSISTENT
    if args.action == "nilpclass":
        from .grouplab import nilpotency_class
        G = _parse_group(args.gens, args.degree)
        _emit(args, {"command": "group-nilpclass", "report": {"class": nilpotency_class(G)}})
        return EXIT_OK
    if args.action == "enum8":
        from .grouplab import enumerate_deg8_full_cycle, prop54_two_action_scan
        groups, labeled = enumerate_deg8_full_cycle()
        payload = {"n_subgroups": len(groups), "n_classes": len(labeled),
                   "classes": [lbl for _, lbl in labeled]}
        if args.scan:
            reports = prop54_two_action_scan(groups)
            payload["two_action_configurations"] = len(reports)
            payload["survivors"] = [r for r in reports if not r["refinement_found"]]
        _emit(args, {"command": "group-enum8", "report": payload})
        if args.scan and payload["survivors"]:
            return EXIT_INCONSISTENT
        return EXIT_OK
    if args.action == "two-action":
        from .grouplab import two_action_reducibility
        G = _parse_group(args.gens, args.degree)
        H1 = _parse_group(args.h1, G.degree)
        H2 = _parse_group(args.h2, G.degree)
        red = two_action_reducibility(G, H1, H2)
        _emit(args, {"command": "group-two-action", "report": {"reducible": red}})
        return EXIT_REDUCIBLE if red else EXIT_OK
    print("unknown group action", file=sys.stderr)
    return EXIT_INPUT


def _cmd_scan(args):
    from .parsing import parse_unipoly
    from .scan import residual_analysis
    f = parse_unipoly(args.poly, var=args.var)
    report, flags = residual_analysis(f, args.N, seed=args.seed)
    payload = report.to_json()
    payload["flags"] = flags
    _emit(args, {"command": "scan", "report": payload})
    return EXIT_REDUCIBLE if report.residual else EXIT_OK


def _cmd_stability(args):
    from .parsing import parse_unipoly
    from .scan import stability_scan
    f = parse_unipoly(args.poly, var=args.var)
    rep = stability_scan(f, args.n, args.N)
    _emit(args, {"command": "stability", "report": rep})
    return EXIT_REDUCIBLE if rep["difference"] else EXIT_OK


def _cmd_mn_check(args):
    from .classifier import mn_problem_check, PreconditionViolated
    from .parsing import parse_unipoly
    P = parse_unipoly(args.P, var=args.var)
    Q = parse_unipoly(args.Q, var=args.var)
    f = parse_unipoly(args.f, var=args.var)
    g = parse_unipoly(args.g, var=args.var)
    try:
        ok = mn_problem_check(P, Q, f, g)
    except PreconditionViolated as e:
        _emit(args, {"command": "mn-check", "error": str(e)})
        return EXIT_INPUT
    _emit(args, {"command": "mn-check", "report": {"irreducible": ok}})
    return EXIT_OK if ok else EXIT_INCONSISTENT


def _add_common(p):
    p.add_argument("--field", default=None, help="minimal polynomial in x of the coefficient field")
    p.add_argument("--gen", default="a", help="field generator symbol")
    p.add_argument("--var", default="x", help="polynomial variable symbol")
    p.add_argument("--json", action="store_true", help="pretty JSON output")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)


def build_parser():
    ap = argparse.ArgumentParser(prog="sepred",
                                 description="exact separated-polynomial reducibility toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor-uni", help="factor a univariate polynomial")
    p.add_argument("poly")
    _add_common(p)
    p.set_defaults(func=_cmd_factor_uni)

    p = sub.add_parser("factor-bi", help="factor a bivariate polynomial in X, Y")
    p.add_argument("poly")
    _add_common(p)
    p.set_defaults(func=_cmd_factor_bi)

    p = sub.add_parser("decompose", help="complete decompositions and recognitions")
    p.add_argument("poly")
    _add_common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("classify", help="classify reducibility of f(X)-g(Y)")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--extensions", choices=["auto", "none"], default="none")
    _add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("families", help="emit or verify the named families")
    p.add_argument("action", choices=["emit", "verify"])
    p.add_argument("tag")
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("group", help="permutation group reports")
    p.add_argument("action", choices=["basics", "wreath", "verify-index",
                                      "nilpclass", "enum8", "two-action"])
    p.add_argument("gens", nargs="*", help="generators in cycle notation")
    p.add_argument("--degree", type=int, default=0)
    p.add_argument("--top-gens", nargs="*", default=[])
    p.add_argument("--top-degree", type=int, default=0)
    p.add_argument("--wreath-action", choices=["imprimitive", "product"], default="imprimitive")
    p.add_argument("--normal-gens", nargs="*", default=[])
    p.add_argument("--sigma", default="()")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--h1", nargs="*", default=[])
    p.add_argument("--h2", nargs="*", default=[])
    p.add_argument("--scan", action="store_true", help="run the two-action scan after enum8")
    _add_common(p)
    p.set_defaults(func=_cmd_group)

    p = sub.add_parser("scan", help="reducible-fiber scan with prediction and residual")
    p.add_argument("poly")
    p.add_argument("N", type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("stability", help="newly reducible fibers of an iterate")
    p.add_argument("poly")
    p.add_argument("n", type=int)
    p.add_argument("N", type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_stability)

    p = sub.add_parser("mn-check", help="the (m,n)-problem irreducibility check")
    p.add_argument("P")
    p.add_argument("Q")
    p.add_argument("f")
    p.add_argument("g")
    _add_common(p)
    p.set_defaults(func=_cmd_mn_check)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, NotImplementedError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
