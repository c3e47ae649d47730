"""Command-line surface: JSON instance files in, computations out.

Verbs:
    coeffs     Hilbert (and optionally fiber / normal-filtration) coefficients
    check      run one named bound checker with ideal bindings
    sweep      generate a seeded instance family and run the full battery
    minreduce  sample minimal reductions and report the best one found

Exit codes: 0 success (check: verified/unresolved), 1 a bound was violated,
2 input or binding error, 3 non-stabilizing / non-polynomial computation.
"""

import argparse
import json
import sys

from . import __version__, bounds, groebner, instances, invariants, monomial, semigroup


class InputError(Exception):
    pass


def _emit(payload, path=None):
    text = json.dumps(payload, sort_keys=True, indent=2, default=str) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_file(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read instance file {path}: {exc}")


def _build_ring(spec):
    kind = spec.get("kind")
    if kind == "poly":
        return invariants.poly_context(int(spec["vars"]),
                                       int(spec.get("char", groebner.DEFAULT_PRIME)))
    if kind == "semigroup":
        return invariants.semigroup_context(semigroup.semigroup(spec["gens"]))
    raise InputError(f"unknown ring kind {kind!r}")


def _build_ideal(data, rings, ideals, spec):
    ring_name = spec.get("ring")
    if ring_name not in rings:
        raise InputError(f"ideal references unknown ring {ring_name!r}")
    ctx = rings[ring_name]
    form = spec.get("form", "monomial")
    if form == "monomial":
        return ctx, monomial.minimalize(ctx.dim, [tuple(v) for v in spec["data"]])
    if form == "exponents":
        return ctx, semigroup.ideal(ctx.numerical, [int(v) for v in spec["data"]])
    if form == "polynomials":
        ring = groebner.PolyRing(ctx.dim, ctx.char_p)
        gens = [{tuple(t["exp"]): int(t["coef"]) for t in poly}
                for poly in spec["data"]]
        return ctx, groebner.GroebnerIdeal(ring, gens)
    if form == "extend":
        base_name = spec["data"]["base"]
        bctx, base = _resolve_ideal(data, rings, ideals, base_name)
        extra = spec["data"]["extra"]
        if isinstance(base, monomial.MonomialIdeal):
            return bctx, monomial.sum_ideals(
                base, monomial.minimalize(bctx.dim, [tuple(v) for v in extra]))
        return bctx, semigroup.sum_ideals(
            base, semigroup.ideal(bctx.numerical, [int(v) for v in extra]))
    raise InputError(f"unknown ideal form {form!r}")


def _resolve_ideal(data, rings, ideals, name):
    if name in ideals:
        return ideals[name]
    specs = data.get("ideals", {})
    if name not in specs:
        raise InputError(f"unknown ideal {name!r}")
    ideals[name] = _build_ideal(data, rings, ideals, specs[name])
    return ideals[name]


def _load_instances(path):
    data = _load_file(path)
    rings = {}
    for name, spec in data.get("rings", {}).items():
        rings[name] = _build_ring(spec)
    return data, rings, {}


def _sequence_payload(obj):
    return {"start_n": obj.sequence.start_n, "values": list(obj.sequence.values)}


def cmd_coeffs(args):
    data, rings, ideals = _load_instances(args.file)
    ctx, I = _resolve_ideal(data, rings, ideals, args.ideal)
    if args.ring and args.ring not in rings:
        raise InputError(f"unknown ring {args.ring!r}")
    try:
        hil = invariants.hilbert_coeffs(ctx, I)
        payload = {"e": list(hil.e), "postulation": hil.postulation,
                   "sequence": _sequence_payload(hil)}
        if args.fiber:
            fib = invariants.fiber_coeffs(ctx, I)
            payload["f"] = list(fib.f)
        if args.normal:
            nh, nf = invariants.normal_coeffs(ctx, I)
            payload["normal"] = {"e": list(nh.e), "f": list(nf.f)}
    except (invariants.HorizonExceeded, groebner.NonStabilizing,
            monomial.NotMPrimary) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _emit(payload, args.json)
    return 0


CHECKERS = {
    "thm_2_2": (bounds.check_thm_2_2, ("J", "I")),
    "thm_2_3": (bounds.check_thm_2_3, ("J", "h")),
    "cor_e1para": (bounds.check_cor_e1para, ("Q", "I")),
    "thm_e1hs": (bounds.check_thm_e1hs, ("J", "extra")),
    "prop_f0": (bounds.check_prop_f0, ("J", "extra")),
    "cor_sally": (bounds.check_cor_sally, ("Q", "I")),
    "thm_3_1": (bounds.check_thm_3_1, ("I",)),
    "lemma_3_2": (bounds.check_lemma_3_2, ("x", "I")),
    "thm_3_3": (bounds.check_thm_3_3, ("I",)),
    "cor_after_3_3": (bounds.check_cor_after_3_3, ()),
    "rossi": (bounds.check_rossi, ("Q", "I")),
    "normalization": (bounds.check_normalization, ("I",)),
    "intro": (bounds.check_intro_bounds, ("I",)),
}


def _parse_bindings(text):
    out = {}
    if not text:
        return out
    for part in text.split(","):
        if "=" not in part:
            raise InputError(f"binding {part!r} is not k=v")
        k, v = part.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def cmd_check(args):
    data, rings, ideals = _load_instances(args.file)
    if args.theorem not in CHECKERS:
        raise InputError(f"unknown theorem id {args.theorem!r}; "
                         f"known: {sorted(CHECKERS)}")
    fn, params = CHECKERS[args.theorem]
    binds = _parse_bindings(args.bind)
    call = []
    ctx = None
    for p in params:
        if p not in binds:
            raise InputError(f"theorem {args.theorem} needs binding {p}=...")
        v = binds[p]
        if p == "x":
            call.append(int(v))
        elif p == "h":
            if ":" in v:
                call.append(tuple(int(t) for t in v.split(":")))
            else:
                call.append(int(v))
        elif p == "extra":
            c, E = _resolve_ideal(data, rings, ideals, v)
            ctx = ctx or c
            call.append(list(E.gens))
        else:
            c, ideal_obj = _resolve_ideal(data, rings, ideals, v)
            ctx = ctx or c
            call.append(ideal_obj)
    if ctx is None:
        ring_name = binds.get("ring") or next(iter(rings), None)
        if ring_name is None:
            raise InputError("no ring available for the check")
        ctx = rings[ring_name]
    kwargs = {}
    if args.theorem in ("thm_3_1", "thm_3_3", "cor_after_3_3"):
        kwargs["seed"] = args.seed
    result = fn(ctx, *call, **kwargs)
    reports = result if isinstance(result, list) else [result]
    payload = {"tool_version": __version__, "seed": args.seed,
               "reports": [r.as_dict() for r in reports]}
    _emit(payload, args.json)
    return 1 if any(r.status == "violated" for r in reports) else 0


def cmd_sweep(args):
    if args.family not in instances.FAMILIES:
        raise InputError(f"unknown family {args.family!r}; "
                         f"known: {list(instances.FAMILIES)}")
    result = instances.sweep(args.family, count=args.count, seed=args.seed,
                             jobs=args.jobs)
    _emit(result, args.json)
    violated = sum(slot["violated"] for slot in result["aggregate"].values())
    return 1 if violated else 0


def cmd_minreduce(args):
    data, rings, ideals = _load_instances(args.file)
    ctx, I = _resolve_ideal(data, rings, ideals, args.ideal)
    rep = invariants.minimal_reduction(ctx, I, samples=args.samples,
                                       seed=args.seed)
    payload = {
        "q_descriptor": [list(map(list, g)) if isinstance(g, tuple) else g
                         for g in rep.q_descriptor],
        "reduction_number": rep.reduction_number,
        "is_minimal": rep.is_minimal,
        "samples_tried": rep.samples_tried,
        "certified": rep.certified,
    }
    _emit(payload, args.json)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="idealkit",
        description="Hilbert coefficients, reduction numbers and bound sweeps")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("coeffs", help="Hilbert/fiber coefficients of an ideal")
    p.add_argument("--file", required=True)
    p.add_argument("--ring")
    p.add_argument("--ideal", required=True)
    p.add_argument("--fiber", action="store_true")
    p.add_argument("--normal", action="store_true")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--json")
    p.set_defaults(run=cmd_coeffs)

    p = sub.add_parser("check", help="run one named bound checker")
    p.add_argument("--file", required=True)
    p.add_argument("--theorem", required=True)
    p.add_argument("--bind", default="")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("sweep", help="run a checker battery over a family")
    p.add_argument("--family", required=True)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json")
    p.set_defaults(run=cmd_sweep)

    p = sub.add_parser("minreduce", help="sample minimal reductions")
    p.add_argument("--file", required=True)
    p.add_argument("--ring")
    p.add_argument("--ideal", required=True)
    p.add_argument("--samples", type=int, default=invariants.SAMPLE_COUNT)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json")
    p.set_defaults(run=cmd_minreduce)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, ValueError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
