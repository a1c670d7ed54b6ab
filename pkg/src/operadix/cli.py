"""``operadix`` command line.

Every subcommand can emit a JSON document (``--json``); the default is a
short human-readable rendering of the same data.  Exit status is 0 when all
checks the command performs pass, 1 when a check fails, 2 on usage errors
and 3 if a partial-associativity certificate ever comes out nonzero.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .algebra import NAryAlgebra, check_total_associativity
from .cochain import (ContextMonomial, DecomposableCochain, common_value, defect_multiplier,
                      dual_ta, pa_defect_numeric, random_map, random_vector,
                      theorem_check_symbolic)
from .components import component_basis, dims, reduce
from .fields import field_from_tag
from .freeops import Element, GeneratorSpec, pair
from .quadratic import QuadraticPresentation, koszul_dual, pa_presentation, presentation
from .trees import catalan, enumerate_trees, from_sexpr, two_node

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_FALSIFIED = 3


@dataclass
class CommandResult:
    command: str
    field: str
    payload: dict
    status: int = EXIT_OK
    text: str = ""

    def document(self) -> dict:
        return {"command": self.command, "field": self.field, **self.payload}


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _presentation(args) -> QuadraticPresentation:
    fld = field_from_tag(args.field)
    if getattr(args, "presentation", None):
        p = QuadraticPresentation.from_json(_load_json(args.presentation))
        if p.field != fld:
            p = QuadraticPresentation.from_json({**_load_json(args.presentation), "field": fld.tag})
        return p
    if args.n is None or args.family is None:
        raise SystemExit("need --family and --n (or --presentation FILE)")
    return presentation(args.family, args.n, args.d, fld)


def cmd_catalan(args) -> CommandResult:
    value = catalan(args.n, args.w)
    return CommandResult("catalan", "-", {"n": args.n, "w": args.w, "catalan": value},
                         text=str(value))


def cmd_trees(args) -> CommandResult:
    trees = [t.sexpr() for t in enumerate_trees(args.n, args.w)]
    return CommandResult("trees", "-", {"n": args.n, "w": args.w, "count": len(trees),
                                         "trees": trees}, text="\n".join(trees))


def _rows_text(p: QuadraticPresentation) -> str:
    rows = ["[" + ", ".join(p.field.fmt(x) for x in row) + "]" for row in p.relations]
    return (f"generator {p.gen.symbol}: arity {p.gen.arity}, degree {p.gen.degree}\n"
            f"relations ({len(rows)}):\n  " + "\n  ".join(rows or ["(none)"]))


def cmd_dual(args) -> CommandResult:
    p = _presentation(args)
    d = koszul_dual(p)
    return CommandResult("dual", p.field.tag, d.to_json(), text=_rows_text(d))


def cmd_dims(args) -> CommandResult:
    p = _presentation(args)
    ds = dims(p, args.wmax)
    expected = [catalan(p.n - 1, w) for w in range(args.wmax + 1)] if p.n > 2 else None
    check = expected is not None and ds == expected
    applies = p.n % 2 == 0 and p.relations == pa_presentation(p.n, 0, p.field).relations
    status = EXIT_CHECK_FAILED if applies and not check else EXIT_OK
    payload = {"presentation": p.to_json(), "dims": ds, "catalan_check": check}
    return CommandResult("dims", p.field.tag, payload, status,
                         text=f"dims: {ds}\n(n-1)-ary Catalan match: {check}")


def cmd_normal_form(args) -> CommandResult:
    p = _presentation(args)
    if args.element:
        e = Element.from_json(_load_json(args.element))
        if e.gen != p.gen:
            raise SystemExit(f"element generator {e.gen} does not match presentation {p.gen}")
        e = Element(p.gen, e.terms, p.field) if e.field == p.field else e
    elif args.tree:
        e = Element.monomial(p.gen, from_sexpr(args.tree, p.n), 1, p.field)
    else:
        raise SystemExit("need --tree or --element")
    cb = component_basis(p, e.weight if not e.is_zero() else 0)
    row = reduce(cb, e)
    payload = {"weight": cb.weight, "standard": [t.sexpr() for t in cb.standard],
               "row": [p.field.fmt(x) for x in row]}
    text = " + ".join(f"{p.field.fmt(c)}*{t}" for c, t in zip(row, cb.standard) if c) or "0"
    return CommandResult("normal-form", p.field.tag, payload, text=text)


def cmd_pair(args) -> CommandResult:
    fld = field_from_tag(args.field)
    if args.dual and args.primal:
        x = Element.from_json(_load_json(args.dual))
        y = Element.from_json(_load_json(args.primal))
    else:
        if None in (args.n, args.i, args.j):
            raise SystemExit("need --n --i --j (or --dual FILE --primal FILE)")
        x = Element.monomial(GeneratorSpec("mu*", args.n, args.n - 2), two_node(args.n, args.i),
                             1, fld)
        y = Element.monomial(GeneratorSpec("mu", args.n, 0), two_node(args.n, args.j), 1, fld)
    value = pair(x, y)
    return CommandResult("pair", x.field.tag, {"value": x.field.fmt(value)},
                         text=x.field.fmt(value))


def cmd_check_algebra(args) -> CommandResult:
    A = NAryAlgebra.load(args.file)
    verdict = check_total_associativity(A)
    status = EXIT_OK if verdict.ok else EXIT_CHECK_FAILED
    if verdict.ok:
        text = f"totally associative ({A.n}-ary, dim {A.dim})"
    else:
        text = (f"counterexample: basis tuple {verdict.inputs}, association types "
                f"{verdict.types} differ")
    return CommandResult("check-algebra", A.field.tag, {"n": A.n, "dim": A.dim,
                                                         **verdict.to_json()}, status, text)


def _parse_degrees(text, n):
    if text is None:
        return (0,) * (2 * n - 1)
    degrees = tuple(int(x) for x in text.split(","))
    if len(degrees) != 2 * n - 1:
        raise SystemExit(f"--degrees needs {2 * n - 1} entries for n = {n}")
    return degrees


def cmd_verify(args) -> CommandResult:
    fld = field_from_tag(args.field)
    degrees = _parse_degrees(args.degrees, args.n)
    cert = theorem_check_symbolic(args.n, degrees, args.wcap, fld)
    status = EXIT_OK if cert.ok else EXIT_FALSIFIED
    bad = sum(1 for e in cert.entries if not e["ok"])
    text = (f"n={args.n} degrees={list(degrees)} weight={cert.weight}: "
            f"{len(cert.entries)} basis monomials, {bad} nonzero")
    return CommandResult("verify", fld.tag, cert.to_json(), status, text)


def cmd_defect(args) -> CommandResult:
    fld = field_from_tag(args.field)
    data = _load_json(args.algebra)
    data["field"] = fld.tag
    A = NAryAlgebra.from_json(data)
    if A.n != args.n:
        raise SystemExit(f"algebra has arity {A.n}, not {args.n}")
    verdict = check_total_associativity(A)
    if not verdict.ok:
        return CommandResult("defect", fld.tag, {"algebra_ok": False, **verdict.to_json()},
                             EXIT_CHECK_FAILED, "algebra is not totally associative")
    degrees = _parse_degrees(args.degrees, args.n)
    weight = sum(degrees) + 2 * (args.n - 2)
    standard = component_basis(dual_ta(args.n, fld), weight).standard
    rng = random.Random(args.seed)
    mult = defect_multiplier(args.n)
    zero = matches = 0
    for _ in range(args.trials):
        cochains = [DecomposableCochain.of(A, [random_map(A, rng) for _ in range(1 + d * (A.n - 1))])
                    for d in degrees]
        beta = ContextMonomial.from_tree(rng.choice(standard))
        xs = [random_vector(A, rng) for _ in range(beta.tree.leaves)]
        defect = pa_defect_numeric(args.n, cochains, beta, xs)
        common = common_value(cochains, beta, xs)
        zero += not any(defect)
        matches += defect == tuple(mult * x for x in common)
    payload = {"n": args.n, "degrees": list(degrees), "trials": args.trials,
               "seed": args.seed, "multiplier": mult, "zero": zero,
               "matches_multiple": matches, "ok": matches == args.trials}
    status = EXIT_OK if matches == args.trials else EXIT_CHECK_FAILED
    text = (f"{args.trials} probes: residual zero in {zero}, equal to {mult} x common value "
            f"in {matches}")
    return CommandResult("defect", fld.tag, payload, status, text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="operadix",
                                     description="Exact computations with n-ary associative operads")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, field=True):
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        if field:
            p.add_argument("--field", default="q", help="q or fp:<prime> (default q)")

    def pres(p):
        p.add_argument("--family", choices=["ta", "pa"])
        p.add_argument("--n", type=int)
        p.add_argument("--d", type=int, default=0)
        p.add_argument("--presentation", help="presentation JSON instead of --family")

    p = sub.add_parser("catalan", help="n-ary Catalan number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    common(p, field=False)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("trees", help="list trees of a weight in path-glex order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    common(p, field=False)
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("dual", help="Koszul dual presentation")
    pres(p)
    common(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("dims", help="dimensions of the quotient operad")
    pres(p)
    p.add_argument("--wmax", type=int, default=4)
    common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("normal-form", help="reduce a tree or element to standard monomials")
    pres(p)
    p.add_argument("--tree", help="s-expression such as '(m (m _ _ _) _ _)'")
    p.add_argument("--element", help="element JSON file")
    common(p)
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("pair", help="signed pairing of weight-2 elements")
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--dual", help="element JSON over mu*")
    p.add_argument("--primal", help="element JSON over mu")
    common(p)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("check-algebra", help="validate total associativity")
    p.add_argument("file")
    common(p, field=False)
    p.set_defaults(func=cmd_check_algebra)

    p = sub.add_parser("verify", help="symbolic partial associativity of the cup product")
    p.add_argument("--n", type=int, required=True, choices=[3, 4])
    p.add_argument("--degrees", help="comma-separated cochain degrees (2n-1 of them)")
    p.add_argument("--wcap", type=int, default=5)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("defect", help="numeric residual of partial associativity on an algebra")
    p.add_argument("--n", type=int, required=True, choices=[3, 4])
    p.add_argument("--algebra", required=True, help="algebra JSON file")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degrees", help="comma-separated cochain degrees (2n-1 of them)")
    common(p)
    p.set_defaults(func=cmd_defect)
    return parser


def run(argv=None) -> CommandResult:
    args = build_parser().parse_args(argv)
    result = args.func(args)
    result.json = args.json
    return result


def main(argv=None) -> int:
    try:
        result = run(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(f"operadix: error: {exc.code}", file=sys.stderr)
            return EXIT_USAGE
        return exc.code if exc.code is not None else EXIT_OK
    except (ValueError, IndexError, OSError) as exc:
        print(f"operadix: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if result.json:
        print(json.dumps(result.document(), indent=2))
    else:
        print(result.text)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
