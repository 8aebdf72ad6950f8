"""Command-line front end.

    chernsub verify thm3 --manifold "CP(2)"
    chernsub genus todd --manifold "CP(3)"
    chernsub dual --partition "[1]" --bundle tau --manifold "CP(2)"
    chernsub selftest --max-dim 4

Exit codes: 0 all relations hold, 1 a relation failed, 2 bad input,
3 internal error.
"""

import argparse
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
import json
import sys
import traceback

from . import theorems
from .cobord import CobordClass, GradedClass, format_class
from .expr import (DEFAULT_MAX_DIM, ParseError, parse_bundle, parse_manifold,
                   parse_partition, resolve_bundle)
from .geommodel import ProjProduct, cobordism_chern_poly, dual_class
from .pseries import Poly
from .symfunc import BigradedElement, SymFn, partitions_of
from .theorems import VerificationReport

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3

RELATIONS = ("thm3", "thm4.1", "thm4.2", "thm5.1", "cor-as", "euler-even", "bv")


# -- JSON ------------------------------------------------------------------------------

def _rational(c):
    c = Fraction(c)
    return {"numerator": c.numerator, "denominator": c.denominator}


def encode_value(value):
    if isinstance(value, BigradedElement):
        terms = [{"y_partition": list(ly), "z_partition": list(lz), **_rational(c)}
                 for (ly, lz), c in value.coeffs.items()]
        return sorted(terms, key=lambda t: (sum(t["y_partition"]) + sum(t["z_partition"]),
                                            t["y_partition"], t["z_partition"]))
    if isinstance(value, Poly):
        return {"var": value.var, "coefficients": [
            {"power": k, **_rational(c)} for k, c in enumerate(value.coeffs) if c]}
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return _rational(value)
    if isinstance(value, (CobordClass, GradedClass)):
        return {"class": format_class(value)}
    return value


def decode_value(data):
    if isinstance(data, list) and all(isinstance(t, dict) and "y_partition" in t for t in data):
        return BigradedElement({(tuple(t["y_partition"]), tuple(t["z_partition"])):
                                Fraction(t["numerator"], t["denominator"]) for t in data})
    if isinstance(data, dict) and "coefficients" in data:
        size = max((t["power"] for t in data["coefficients"]), default=-1) + 1
        coeffs = [Fraction(0)] * size
        for t in data["coefficients"]:
            coeffs[t["power"]] = Fraction(t["numerator"], t["denominator"])
        return Poly(coeffs, data["var"])
    if isinstance(data, dict) and set(data) == {"numerator", "denominator"}:
        return Fraction(data["numerator"], data["denominator"])
    return data


def report_to_json(report):
    return {
        "relation": report.relation,
        "manifold": report.manifold,
        "bundle": report.bundle,
        "lhs": encode_value(report.lhs),
        "rhs": encode_value(report.rhs),
        "equal": report.equal,
        "degrees": list(report.degrees),
        "millis": report.millis,
        "details": report.details,
    }


def report_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    return VerificationReport(
        relation=data["relation"],
        manifold=data["manifold"],
        bundle=data["bundle"],
        lhs=decode_value(data["lhs"]),
        rhs=decode_value(data["rhs"]),
        equal=data["equal"],
        degrees=list(data["degrees"]),
        millis=data["millis"],
        details=data.get("details", {}),
    )


def emit_json(report):
    return json.dumps(report_to_json(report), sort_keys=True)


# -- tables --------------------------------------------------------------------------

def _show(value):
    if isinstance(value, (CobordClass, GradedClass)):
        return format_class(value)
    return str(value)


def format_table(reports):
    header = ("relation", "manifold", "bundle", "equal", "lhs", "rhs", "ms")
    rows = [(r.relation, r.manifold, r.bundle or "-", "yes" if r.equal else "NO",
             _show(r.lhs), _show(r.rhs), f"{r.millis:.1f}") for r in reports]
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    # lhs/rhs can be long; cap them in the table
    widths[4] = min(widths[4], 48)
    widths[5] = min(widths[5], 48)

    def line(cells):
        return "  ".join(c[:w].ljust(w) for c, w in zip(cells, widths)).rstrip()

    out = [line(header), line(["-" * w for w in widths])]
    out.extend(line(row) for row in rows)
    passed = sum(1 for r in reports if r.equal)
    out.append(f"{passed}/{len(reports)} cases hold")
    return "\n".join(out)


# -- cases ---------------------------------------------------------------------------

def run_relation(relation, manifold_text, bundle_text=None, line_index=None):
    """Build and verify one case from expression strings."""
    model = parse_manifold(manifold_text, max_dim=10 ** 6).model()
    if relation == "thm3":
        return theorems.thm3(model)
    if relation == "thm4.1":
        return theorems.thm4_1(model)
    if relation == "thm4.2":
        return theorems.thm4_2(model)
    if relation == "bv":
        return theorems.bv_congruence(model)
    if relation == "euler-even":
        return theorems.euler_even(model, line_index)
    if relation in ("thm5.1", "cor-as"):
        if bundle_text is None:
            raise ParseError(f"{relation} needs --bundle")
        expr = parse_bundle(bundle_text)
        bundle = resolve_bundle(expr, model, cobordism=relation == "thm5.1")
        if relation == "thm5.1":
            return theorems.thm5_1(model, bundle, str(expr))
        return theorems.cor_as(model, bundle, str(expr))
    raise ParseError(f"unknown relation {relation!r}")


def _models(max_dim, max_factors=3):
    out = []
    for n in range(1, max_dim + 1):
        for lam in reversed(partitions_of(n)):
            if len(lam) <= max_factors:
                out.append(ProjProduct(tuple(lam)))
    return out


def _unit(rank, i, a=1):
    vec = [0] * rank
    vec[i] = a
    return "O(" + ",".join(map(str, vec)) + ")"


def _bundles(model, representable):
    r = model.rank
    out = ["tau", "nu", "conj(tau)", _unit(r, 0), _unit(r, 0, -1),
           f"{_unit(r, 0)} + {_unit(r, 0)}", f"{_unit(r, 0)} + {_unit(r, r - 1, -1)}"]
    if r > 1:
        out.append(_unit(r, r - 1))
    if not representable:
        out += [_unit(r, 0, 0), _unit(r, 0, 2), _unit(r, 0, 3),
                "O(" + ",".join(["1"] * r) + ")", "O(" + ",".join(["-1"] * r) + ") + tau"]
    return list(dict.fromkeys(out))


def build_matrix(max_dim):
    """Ordered list of (case_id, callable) covering the acceptance matrix."""
    cases = []

    def add(case_id, fn):
        cases.append((case_id, fn))

    for N in range(1, 7):
        add(f"cauchy:{N}", partial(theorems.cauchy_report, N))
    add("oracle-iota:5", partial(theorems.fgl_involution, 5))
    models = _models(max_dim)
    for model in [ProjProduct(())] + models:
        text = str(model)
        add(f"thm3:{text}", partial(run_relation, "thm3", text))
        add(f"thm4.1:{text}", partial(run_relation, "thm4.1", text))
    for model in models:
        text = str(model)
        add(f"oracle-euler:{text}", partial(theorems.euler_point_count, model))
        add(f"oracle-antipode:{text}", partial(theorems.antipode_routes, model))
        if model.n % 2 == 0:
            add(f"thm4.2:{text}", partial(run_relation, "thm4.2", text))
            add(f"bv:{text}", partial(run_relation, "bv", text))
        if model.n <= 3:
            for b in _bundles(model, True):
                add(f"thm5.1:{text}:{b}", partial(run_relation, "thm5.1", text, b))
            for b in _bundles(model, False):
                add(f"cor-as:{text}:{b}", partial(run_relation, "cor-as", text, b))
        for i in theorems.line_factors(model):
            add(f"euler-even:{text}:{i}", partial(run_relation, "euler-even", text, None, i))
    for n in range(1, max_dim + 1):
        add(f"genus-todd:CP({n})", partial(theorems.genus_report, "todd", ProjProduct((n,)), 1))
        add(f"genus-euler:CP({n})",
            partial(theorems.genus_report, "euler", ProjProduct((n,)), n + 1))
    if max_dim >= 2:
        cp2 = ProjProduct((2,))
        add("genus-sign:CP(2)", partial(theorems.genus_report, "sign", cp2, 1))
        add("genus-chiy:CP(2)", partial(theorems.genus_report, "chiy", cp2, Poly([1, -1, 1])))
        add("genus-ahat:CP(2)", partial(theorems.genus_report, "ahat", cp2, Fraction(-1, 8)))
    return cases


def _call(fn):
    return fn()


def run_cases(cases, jobs=1):
    """Evaluate cases, possibly in worker processes; results keep the case order."""
    fns = [fn for _, fn in cases]
    if jobs > 1 and len(fns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_call, fns))
    return [fn() for fn in fns]


# -- subcommands -------------------------------------------------------------------------

def _check_degree(model, args):
    if args.max_degree is not None and model.n > args.max_degree:
        raise ParseError(f"{model} needs truncation order {model.n}, "
                         f"above --max-degree {args.max_degree}")


def _bound(args):
    return args.max_degree if args.max_degree is not None else DEFAULT_MAX_DIM


def cmd_verify(args):
    mexpr = parse_manifold(args.manifold, _bound(args))
    model = mexpr.model()
    _check_degree(model, args)
    report = run_relation(args.relation, str(mexpr), args.bundle, args.line_index)
    return [report]


def cmd_selftest(args):
    return run_cases(build_matrix(args.max_dim), args.jobs)


def cmd_genus(args, out):
    mexpr = parse_manifold(args.manifold, _bound(args))
    model = mexpr.model()
    _check_degree(model, args)
    value = theorems.genus_value(args.name, model)
    if args.format == "json":
        print(json.dumps({"genus": args.name, "manifold": str(mexpr),
                          "value": encode_value(value)}, sort_keys=True), file=out)
    else:
        print(value, file=out)
    return EXIT_OK


def dual_of(model, pexpr, bundle):
    """Cobordism class of the virtual submanifold dual to f(bundle)."""
    f = SymFn(pexpr.basis, {pexpr.partition: 1}).to("m")
    total = GradedClass()
    for lam, c in f.coeffs.items():
        total = total + c * dual_class(model, cobordism_chern_poly(model, bundle, SymFn("m", {lam: 1})))
    return total


def cmd_dual(args, out):
    mexpr = parse_manifold(args.manifold, _bound(args))
    model = mexpr.model()
    _check_degree(model, args)
    pexpr = parse_partition(args.partition)
    bexpr = parse_bundle(args.bundle)
    bundle = resolve_bundle(bexpr, model, cobordism=True)
    cls = dual_of(model, pexpr, bundle)
    if args.format == "json":
        comps = {str(d): {"numbers": {str(list(k)): _rational(v)
                                      for k, v in cls.component(d).normal_m.items()}}
                 for d in cls.dims}
        print(json.dumps({"manifold": str(mexpr), "partition": str(pexpr), "bundle": str(bexpr),
                          "class": format_class(cls), "components": comps}, sort_keys=True),
              file=out)
    else:
        print(format_class(cls), file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="chernsub",
                                     description="Exact checks of Chern-number relations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--report", metavar="FILE", help="also write the report to FILE")
    common.add_argument("--max-degree", type=int, default=None,
                        help="cap on truncation orders (default: manifold dimension)")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="verify one relation on one case")
    v.add_argument("relation", choices=RELATIONS)
    v.add_argument("--manifold", required=True)
    v.add_argument("--bundle")
    v.add_argument("--line-index", type=int, default=None,
                   help="CP(1) factor carrying the line subbundle (euler-even)")

    g = sub.add_parser("genus", parents=[common], help="evaluate a genus")
    g.add_argument("name", choices=sorted(theorems.GENERA))
    g.add_argument("--manifold", required=True)

    d = sub.add_parser("dual", parents=[common], help="class of a virtual Chern submanifold")
    d.add_argument("--partition", required=True)
    d.add_argument("--bundle", required=True)
    d.add_argument("--manifold", required=True)

    s = sub.add_parser("selftest", parents=[common], help="run the whole verification matrix")
    s.add_argument("--max-dim", type=int, default=4)
    s.add_argument("--jobs", type=int, default=1)
    return parser


def _write_reports(reports, args, out):
    if args.format == "json":
        text = "\n".join(emit_json(r) for r in reports)
    else:
        text = format_table(reports)
    print(text, file=out)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_PARSE
    try:
        if args.command == "genus":
            return cmd_genus(args, out)
        if args.command == "dual":
            return cmd_dual(args, out)
        reports = cmd_verify(args) if args.command == "verify" else cmd_selftest(args)
        _write_reports(reports, args, out)
        return EXIT_OK if all(r.equal for r in reports) else EXIT_FAIL
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except ValueError as exc:
        # domain errors such as an odd dimension for thm4.2
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except Exception:
        traceback.print_exc(file=err)
        return EXIT_INTERNAL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
