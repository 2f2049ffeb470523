"""Command line entry point ``magmahopf``.

Every subcommand prints one JSON document (newline terminated).  Monomials
are S-expressions, coefficients ``"p/q"`` strings, terms in monomial order.
Exit codes: 0 success, 1 usage error, 2 computation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Poly
from .magma import format_monomial, variable_name
from .parsing import ParseError, format_coeff, parse, variable_index


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _terms(f: Poly) -> list[dict]:
    return [{"monomial": format_monomial(m), "coeff": format_coeff(c)} for m, c in f.items()]


def _poly_doc(f: Poly, **extra) -> dict:
    doc = {"degree": f.degree(), "terms": _terms(f)}
    doc.update(extra)
    return doc


def _tensor_terms(F) -> list[dict]:
    return [
        {"left": format_monomial(a), "right": format_monomial(b), "coeff": format_coeff(c)}
        for (a, b), c in F.items()
    ]


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _expr(text: str) -> Poly:
    try:
        return parse(text)
    except ParseError as e:
        raise UsageError(f"cannot parse expression: {e}") from None


def _var(name: str) -> int:
    try:
        return variable_index(name.strip())
    except KeyError:
        raise UsageError(f"unknown variable {name!r}") from None


# commands -----------------------------------------------------------------

def cmd_hausdorff(args) -> dict:
    from .hausdorff import hausdorff_component
    from .hopf import is_primitive

    comps = []
    for n in range(1, args.degree + 1):
        h = hausdorff_component(n)
        comps.append({"degree": n, "terms": _terms(h), "primitive": is_primitive(h)})
    return {"degree": args.degree, "components": comps}


def cmd_exp(args) -> dict:
    from .hausdorff import exp_coeffs

    return _poly_doc(Poly(exp_coeffs(args.degree)))


def cmd_log(args) -> dict:
    from .hausdorff import log_coeffs

    return _poly_doc(Poly(log_coeffs(args.degree)))


def cmd_taylor(args) -> dict:
    from .calculus import taylor1, taylor_total

    f = _expr(args.expr)
    if args.total:
        order = [_var(v) for v in args.vars.split(",")] if args.vars else None
        te = taylor_total(f, order)
        coeffs = [
            {"index": list(idx), "degree": a.degree(), "terms": _terms(a)}
            for idx, a in sorted(te.coeffs.items(), reverse=True)
        ]
        names = [variable_name(v) for v in te.order]
        return {"degree": f.degree(), "variables": names, "coefficients": coeffs}
    te = taylor1(f, _var(args.var))
    coeffs = [
        {"index": j, "degree": a.degree(), "terms": _terms(a)}
        for j, a in sorted(te.coeffs.items(), reverse=True)
    ]
    return {"degree": f.degree(), "variable": args.var, "coefficients": coeffs}


def cmd_constants_basis(args) -> dict:
    from .constants import (constants_basis, constants_basis_two_var, gamma_n,
                            gamma_two_var)

    if args.vars == 1:
        pairs = zip(gamma_n(args.degree), constants_basis(args.degree))
    else:
        pairs = zip(gamma_two_var(args.degree), constants_basis_two_var(args.degree))
    basis = [{"leading": format_monomial(s), "degree": args.degree, "terms": _terms(p)} for s, p in pairs]
    return {"degree": args.degree, "variables": args.vars, "dimension": len(basis), "basis": basis}


def cmd_generators(args) -> dict:
    from .constants import format_expr, free_generators, primitive_generators

    if args.max_degree < 3:
        raise UsageError("--max-degree must be at least 3")
    table = primitive_generators(args.max_degree) if args.primitivize else free_generators(args.max_degree)
    gens = []
    for g in table:
        gens.append({
            "name": g.name,
            "degree": g.degree,
            "leading": format_monomial(g.leading),
            "primitive": g.primitive,
            "correction": [
                {"product": format_expr(e, table), "coeff": format_coeff(c)}
                for e, c in g.correction.items()
            ],
            "terms": _terms(g.value),
        })
    return {"degree": args.max_degree, "primitivized": args.primitivize, "generators": gens}


def cmd_primitive_check(args) -> dict:
    from .hopf import deviation, is_primitive

    f = _expr(args.expr)
    ok = is_primitive(f)
    doc = _poly_doc(f, primitive=ok)
    if not ok:
        doc["deviation"] = _tensor_terms(deviation(f))
    return doc


def cmd_antipode(args) -> dict:
    from .hopf import antipode

    return _poly_doc(antipode(_expr(args.expr)))


def cmd_delta(args) -> dict:
    from .hopf import delta

    f = _expr(args.expr)
    return {"degree": f.degree(), "terms": _tensor_terms(delta(f))}


def cmd_bch_crosscheck(args) -> dict:
    from .assoc import assoc_bch, word_str
    from .hausdorff import foliage_sums

    classical = assoc_bch(args.degree)
    rows, ok = [], True
    for n in range(1, args.degree + 1):
        sums = foliage_sums(n)
        words = sorted(set(sums) | set(classical.component(n)))
        for w in words:
            a, b = sums.get(w, 0), classical[w]
            ok &= a == b
            rows.append({"word": word_str(w), "foliage_sum": format_coeff(a),
                         "classical": format_coeff(b), "match": a == b})
    return {"degree": args.degree, "all_match": ok, "words": rows}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="magmahopf", description="Free magma algebra: Hopf structure, Taylor calculus, Hausdorff series.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("hausdorff", help="components H_1..H_N with primitivity flags")
    s.add_argument("--degree", type=_positive, required=True)
    s.set_defaults(fn=cmd_hausdorff)

    for name, fn in (("exp", cmd_exp), ("log", cmd_log)):
        s = sub.add_parser(name, help=f"coefficients of {name} up to a degree")
        s.add_argument("--degree", type=_positive, required=True)
        s.set_defaults(fn=fn)

    s = sub.add_parser("taylor", help="Taylor coefficients a_j of an expression")
    s.add_argument("expr")
    s.add_argument("--var", default="x")
    s.add_argument("--total", action="store_true", help="expand in several variables")
    s.add_argument("--vars", help="comma separated variable order for --total")
    s.set_defaults(fn=cmd_taylor)

    s = sub.add_parser("constants-basis", help="basis of the degree-N constants")
    s.add_argument("--degree", type=_positive, required=True)
    s.add_argument("--vars", type=int, choices=(1, 2), default=1)
    s.set_defaults(fn=cmd_constants_basis)

    s = sub.add_parser("generators", help="free generators y_{n,i} of the constants")
    s.add_argument("--max-degree", type=_positive, required=True)
    s.add_argument("--primitivize", action="store_true")
    s.set_defaults(fn=cmd_generators)

    s = sub.add_parser("primitive-check", help="is the expression primitive")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_primitive_check)

    s = sub.add_parser("antipode", help="antipode sigma of an expression")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_antipode)

    s = sub.add_parser("delta", help="co-addition of an expression")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_delta)

    s = sub.add_parser("bch-crosscheck", help="foliage sums of c(tau) against classical BCH")
    s.add_argument("--degree", type=_positive, required=True)
    s.set_defaults(fn=cmd_bch_crosscheck)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "taylor" and args.vars and not args.total:
            raise UsageError("magmahopf taylor: --vars requires --total")
        doc = args.fn(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return 1
    except (ValueError, RuntimeError, ArithmeticError) as e:
        print(f"magmahopf: error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
