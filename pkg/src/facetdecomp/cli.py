"""Command-line front end.

Exit codes: 0 the property holds, 1 it fails, 2 usage or parse error,
3 undecided within the node budget.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import bounds, classify, complex as cxm, decomp, homology
from .complex import Complex, ComplexError
from .fileformat import FacetFileError, format_text, load, read_file, read_sets, to_json

HOLDS, FAILS, USAGE, UNDECIDED = 0, 1, 2, 3

PROPERTIES = ("vd", "cm", "shellable", "completable", "matroid", "shifted", "extremal", "pure")


class UsageError(Exception):
    pass


def _budget(args) -> int:
    return args.budget if args.budget is not None else bounds.default_budget()


def _load(args) -> Complex:
    cx = load(args.file, compact=args.no_cover_check)
    return cx


def _verdict(value) -> str:
    if value is None:
        return "undecided (budget exhausted)"
    return "yes" if value else "no"


# -- analyze --------------------------------------------------------------------

def _analysis(cx: Complex, args) -> dict:
    d = cxm.dimension(cx)
    out: dict = {"n": cx.n, "dimension": d}
    if d is None:
        out["void"] = True
        return out
    c = cxm.codimension(cx)
    pure = cxm.is_pure(cx)
    top = [f for f in cx.facets if f.bit_count() == d + 1]
    out.update({
        "codimension": c,
        "pure": pure,
        "facets": len(cx.facets),
        "top_facets": len(top),
        "antifacets": math.comb(cx.n, c) - len(top),
        "f_vector": list(cxm.f_vector(cx)),
    })
    if cx.n >= 1 and 0 <= c <= cx.n - 1:
        vd_t = bounds.vd_threshold(cx.n, c)
        pur_t = bounds.purity_threshold(cx.n, c)
        out["vd_threshold"] = {"value": vd_t, "met": bounds.meets_main_theorem(cx)}
        out["purity_threshold"] = {"value": pur_t, "met": len(top) >= pur_t}
    if args.deep:
        budget = _budget(args)
        vd = decomp.is_vertex_decomposable(cx, budget=budget)
        deep: dict = {"vd": vd.holds, "cm": homology.is_cohen_macaulay(cx, args.char),
                      "field": f"F_{args.char}"}
        if vd.holds:
            deep["vd_certificate"] = vd.witness.to_json()
        uniform = cxm.is_uniform(cx)
        if uniform:
            sh = decomp.is_shellable(cx, budget=budget)
            deep["shellable"] = sh.holds
            if sh.holds:
                deep["shelling"] = sh.witness.to_json()
            deep["matroid"] = classify.is_matroid(cx)
            deep["extremal"] = classify.is_extremal(cx)
        else:
            deep["shellable"] = deep["matroid"] = deep["extremal"] = False
        deep["shifted"] = classify.is_shifted(cx)
        out["deep"] = deep
    return out


def _print_analysis(info: dict) -> None:
    print(f"n: {info['n']}")
    if info.get("void"):
        print("dimension: undefined (void complex)")
        return
    print(f"dimension: {info['dimension']}")
    print(f"codimension: {info['codimension']}")
    print(f"pure: {_verdict(info['pure'])}")
    print(f"facets (e): {info['facets']}")
    if info["pure"]:
        print(f"antifacets (e-bar): {info['antifacets']}")
    else:
        print(f"top-dimensional facets: {info['top_facets']}")
        print(f"missing top-dimensional sets: {info['antifacets']}")
    print("f-vector: (" + ", ".join(map(str, info["f_vector"])) + ")")
    if "vd_threshold" in info:
        t = info["vd_threshold"]
        e = info["facets"]
        if t["met"]:
            print(f"meets VD threshold ({e} >= {t['value']})")
        elif info["pure"]:
            print(f"below VD threshold ({e} < {t['value']})")
        else:
            print(f"VD threshold ({t['value']}) not applicable: complex is not pure")
        p = info["purity_threshold"]
        rel = ">=" if p["met"] else "<"
        word = "meets" if p["met"] else "below"
        print(f"{word} purity threshold ({info['top_facets']} {rel} {p['value']})")
    if "deep" in info:
        deep = info["deep"]
        print(f"VD: {_verdict(deep['vd'])}")
        print(f"CM over {deep['field']}: {_verdict(deep['cm'])}")
        print(f"shellable: {_verdict(deep['shellable'])}")
        print(f"matroid: {_verdict(deep['matroid'])}")
        print(f"shifted: {_verdict(deep['shifted'])}")
        print(f"extremal: {_verdict(deep['extremal'])}")


def cmd_analyze(args) -> int:
    cx = _load(args)
    info = _analysis(cx, args)
    if args.json:
        print(json.dumps(info, sort_keys=True))
    else:
        _print_analysis(info)
    return HOLDS


# -- check ----------------------------------------------------------------------

def _decide(prop: str, cx: Complex, args):
    """Return (holds, witness_json, note)."""
    budget = _budget(args)
    if prop == "pure":
        return cxm.is_pure(cx), None, None
    if prop == "cm":
        return homology.is_cohen_macaulay(cx, args.char), None, f"over F_{args.char}"
    if prop == "vd":
        d = decomp.is_vertex_decomposable(cx, budget=budget)
        return d.holds, d.witness.to_json() if d.holds else None, None
    if prop == "shifted":
        lab = classify.shifted_labeling(cx)
        return lab is not None, lab, None
    if cx.is_void or not cxm.is_uniform(cx):
        return False, None, "not pure"
    if prop == "shellable":
        d = decomp.is_shellable(cx, budget=budget)
        return d.holds, d.witness.to_json() if d.holds else None, None
    if prop == "completable":
        d = decomp.is_shelling_completable(cx, budget=budget)
        return d.holds, d.witness.to_json() if d.holds else None, None
    if prop == "matroid":
        return classify.is_matroid(cx), None, None
    if prop == "extremal":
        return classify.is_extremal(cx), None, None
    raise UsageError(f"unknown property {prop!r}")


def cmd_check(args) -> int:
    if args.property not in PROPERTIES:
        raise UsageError(f"unknown property {args.property!r}; choose from {', '.join(PROPERTIES)}")
    cx = _load(args)
    holds, witness, note = _decide(args.property, cx, args)
    suffix = f" ({note})" if note else ""
    print(f"{args.property}: {_verdict(holds)}{suffix}")
    if args.certificate and witness is not None:
        Path(args.certificate).write_text(json.dumps(witness) + "\n", encoding="utf-8")
    if holds is None:
        return UNDECIDED
    return HOLDS if holds else FAILS


# -- gen / dual / export ---------------------------------------------------------

def _emit(cx: Complex, args) -> None:
    text = json.dumps(to_json(cx)) + "\n" if args.json else format_text(cx)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    p = args.params
    try:
        if args.kind == "tight":
            if len(p) != 2:
                raise UsageError("gen tight N C")
            cx = bounds.generate_tight_example(p[0], p[1])
        elif args.kind == "skeleton":
            if len(p) != 2:
                raise UsageError("gen skeleton N K")
            cx = cxm.skeleton(cxm.simplex(p[0]), p[1])
        else:
            if len(p) not in (2, 3):
                raise UsageError("gen colex R T [N]")
            cx = classify.colex_initial(p[0], p[1], p[2] if len(p) == 3 else None)
    except ComplexError as exc:
        raise UsageError(str(exc)) from None
    _emit(cx, args)
    return HOLDS


def cmd_dual(args) -> int:
    _emit(cxm.alexander_dual(_load(args)), args)
    return HOLDS


def cmd_export(args) -> int:
    if args.ideal:
        n, sets = read_sets(read_file(args.file))
        if n is None:
            n = max((v for s in sets for v in s), default=0)
        obj = bounds.MonomialIdeal.from_supports(n, sets)
    else:
        obj = _load(args)
    text = bounds.sr_export(obj)
    if text:
        print(text)
    return HOLDS


# -- verify / certify ------------------------------------------------------------

def _parse_range(spec: str) -> range:
    try:
        if ".." in spec:
            lo, hi = spec.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(spec), int(spec) + 1)
    except ValueError:
        raise UsageError(f"bad n range {spec!r}; use e.g. 4..6") from None


def cmd_verify(args) -> int:
    ns = _parse_range(args.n_range)
    if not ns or ns[0] < 1:
        raise UsageError(f"empty or invalid n range {args.n_range!r}")
    if args.theorem not in bounds.CLAIMS and args.theorem not in bounds.ALIASES:
        raise UsageError(f"unknown claim {args.theorem!r}; choose from {', '.join(sorted(bounds.CLAIMS))}")
    report = bounds.verify_range(args.theorem, ns, budget=_budget(args), jobs=args.jobs,
                                 timing=not args.no_timing)
    payload = json.dumps(report.to_json(), sort_keys=True, indent=1) + "\n"
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    if args.json:
        sys.stdout.write(payload)
    else:
        for run in report.params["runs"]:
            prm = run["params"]
            status = "skipped" if "skipped" in prm else ("complete" if run["complete"] else "incomplete")
            print(f"{prm['theorem']} n={prm['n']} c={prm['c']}: enumerated={run['enumerated']} "
                  f"failures={run['failures']} {status}")
        print(f"total: enumerated={report.enumerated} passes={report.passes} "
              f"failures={report.failures} complete={'yes' if report.complete else 'no'}")
    if report.failures:
        return FAILS
    return HOLDS if report.complete else UNDECIDED


def cmd_certify(args) -> int:
    cx = _load(args)
    try:
        obj = json.loads(Path(args.certificate).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FacetFileError(f"certificate: {exc.msg}", exc.lineno, exc.colno) from None
    if isinstance(obj, dict) and ("leaf" in obj or "vertex" in obj):
        kind = "vertex decomposition"
        ok = decomp.verify_certificate(cx, decomp.certificate_from_json(obj))
    else:
        order = decomp.shelling_order_from_json(obj)
        kind = "shelling completion" if order.extension else "shelling"
        ok = decomp.verify_shelling(cx, order)
    print(f"{kind} certificate: {'valid' if ok else 'invalid'}")
    return HOLDS if ok else FAILS


# -- wiring ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="facetdecomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, file=True):
        if file:
            p.add_argument("file", help="facet file (text or JSON)")
            p.add_argument("--no-cover-check", action="store_true",
                           help="drop uncovered labels and renumber instead of treating them as vertices")
        p.add_argument("--char", type=int, default=2, help="field characteristic for homology (default 2)")
        p.add_argument("--budget", type=int, default=None, help="node budget for searches")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("analyze", help="report invariants and thresholds")
    common(p)
    p.add_argument("--deep", action="store_true", help="also run every decision procedure")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="decide one property")
    p.add_argument("property", help=", ".join(PROPERTIES))
    common(p)
    p.add_argument("--certificate", help="write the witness here as JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate tight / skeleton / colex complexes")
    p.add_argument("kind", choices=("tight", "skeleton", "colex"))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("-o", "--output")
    common(p, file=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dual", help="Alexander dual")
    common(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("export", help="Stanley-Reisner generators as monomials")
    common(p)
    p.add_argument("--ideal", action="store_true", help="read the facets as generator supports")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="exhaustively check a claim over a range of n")
    p.add_argument("theorem", help="claim id: " + ", ".join(sorted(bounds.CLAIMS))
                   + " (short ids " + ", ".join(bounds.ALIASES) + " also work)")
    p.add_argument("n_range", help="e.g. 4..6")
    common(p, file=False)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output", help="write the JSON report here")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms so reruns are byte-identical")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="check a certificate against a complex")
    common(p)
    p.add_argument("certificate")
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return USAGE
    if args.char < 2 or any(args.char % q == 0 for q in range(2, int(args.char ** 0.5) + 1)):
        print(f"error: --char {args.char} is not prime", file=sys.stderr)
        return USAGE
    try:
        return args.func(args)
    except FacetFileError as exc:
        print(f"error: {getattr(args, 'file', '')}: {exc}", file=sys.stderr)
        return USAGE
    except (UsageError, ComplexError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
