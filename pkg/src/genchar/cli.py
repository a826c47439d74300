"""Command-line front end.

Every handler returns ``(lines, data)``: ``lines`` is the text output and
``data`` the structured form printed under ``--json``.  Exit codes: 0 on
success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from .character import CharContext, chi_preimage, chi_root
from .cyclotomic import CycloNum, as_root_of_unity, cyclotomic_poly
from .errors import GencharError
from .finite_field import conway_poly, format_univariate, fq_dlog, fq_embed
from .ideals import Ideal, NEG_INF, i_ideal, j_ideal, special_poly
from .mann import (
    STANDARD_VALUES,
    axiom_instance,
    coefficient_pool,
    d_bound,
    genericity_check,
    mann_solve,
)
from .mult_lattice import is_mult_independent, mcl_member, mult_basis, relation_lattice, unit_str
from .pcsets import (
    REL_SYMBOLS,
    is_geometric,
    label_str,
    load_presentation,
    pc_closure,
    pc_rank_deg,
    pc_rel,
    presentation_gr_gd,
    presentation_json,
    primary_quotient,
    rank_str,
    refine_essentially_disjoint,
    refine_geometric,
)
from .polyparse import parse_fq, parse_number, parse_polys, parse_root, split_top_level
from .pullback import char_pullback
from .rank import BOTTOM, Ordinal2, gd_eval, gr_eval, ord_compare, parse_descriptor
from .verify import SUITES

Output = tuple[list[str], Any]


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _units(text: str | None) -> list[Any]:
    if not text:
        return []
    return [parse_number(t) for t in split_top_level(text)]


def _coeffs(text: str) -> list[Fraction]:
    out = []
    for t in split_top_level(text):
        v = parse_number(t)
        if isinstance(v, CycloNum):
            raise GencharError(f"coefficient {t} is not rational")
        out.append(Fraction(v))
    return out


# -- handlers --------------------------------------------------------------------------


def cmd_chi(a: argparse.Namespace) -> Output:
    ctx = CharContext(a.p)
    if a.root is not None:
        r = chi_preimage(ctx, parse_root(a.root))
        text = "none" if r is None else r.fq_str()
        return [text], {"preimage": None if r is None else r.fq_str()}
    if a.elem is None:
        raise GencharError("give --elem or --root")
    r = chi_root(ctx, parse_fq(a.elem))
    text = "0" if r is None else str(r)
    return [text], {"chi": text}


def cmd_fq(a: argparse.Namespace) -> Output:
    if a.action == "conway":
        text = format_univariate(conway_poly(a.p, a.n))
        return [text], {"conway": text}
    x = parse_fq(a.elem)
    if a.action == "dlog":
        k = fq_dlog(x)
        return [str(k)], {"dlog": k}
    if a.action == "embed":
        y = fq_embed(x, a.n)
        return [y.fq_str()], {"embed": y.fq_str()}
    if a.action == "order":
        return [str(x.order())], {"order": x.order()}
    y = x.canonical()
    return [y.fq_str()], {"canonical": y.fq_str()}


def cmd_cyclo(a: argparse.Namespace) -> Output:
    if a.action == "phi":
        text = cyclotomic_poly(a.k).format(["x"])
        return [text], {"phi": text}
    x = parse_number(a.expr)
    x = x if isinstance(x, CycloNum) else CycloNum.rational(x)
    if a.action == "galois":
        x = x.galois(a.u)
    elif a.action == "root":
        r = as_root_of_unity(x)
        return [str(r) if r else "none"], {"root": str(r) if r else None}
    return [str(x)], {"value": str(x), "conductor": x.conductor}


def cmd_mtp(a: argparse.Namespace) -> Output:
    lat = relation_lattice(_units(a.units), _units(a.over))
    rows = [list(r) for r in lat.basis]
    return [str(lat)], {"basis": rows, "rank": lat.rank}


def cmd_mcl(a: argparse.Namespace) -> Output:
    A, B = _units(a.gens), _units(a.over)
    if a.action == "member":
        ok = mcl_member(parse_number(a.unit), A, B)
        return [_bool(ok)], {"member": ok}
    if a.action == "independent":
        ok = is_mult_independent(A, B)
        return [_bool(ok)], {"independent": ok}
    basis = [unit_str(u) for u in mult_basis(A, B)]
    return [",".join(basis) if basis else "(empty)"], {"basis": basis}


def cmd_mann(a: argparse.Namespace) -> Output:
    if a.action == "bound":
        return [str(d_bound(a.n))], {"d_bound": d_bound(a.n)}
    sols = mann_solve(_coeffs(a.coeffs))
    lines = [",".join(map(str, s)) for s in sols]
    return lines or ["(none)"], {"solutions": lines, "bound": sols.bound_used}


def cmd_generic(a: argparse.Namespace) -> Output:
    res = genericity_check(_units(a.G), _units(a.H))
    lines = [_bool(res.generic)]
    if res.witness is not None:
        lines.append(f"witness: {unit_str(res.witness)}")
    if res.equation is not None:
        lines.append("equation: " + ",".join(map(str, res.equation)))
    return lines, {
        "generic": res.generic,
        "witness": None if res.witness is None else unit_str(res.witness),
        "reason": res.reason,
    }


def cmd_axiom(a: argparse.Namespace) -> Output:
    if a.coeffs:
        pool = [_coeffs(t) for t in a.coeffs.split(";")]
    else:
        pool = coefficient_pool(STANDARD_VALUES, a.n)
    res = axiom_instance(CharContext(a.p), a.n, pool, a.nmax)
    lines = [_bool(res.holds), f"equations: {res.equations}", f"solutions: {res.solutions}"]
    if res.witness is not None:
        c, roots = res.witness
        lines.append("witness: " + ",".join(map(str, c)) + " -> " + ",".join(map(str, roots)))
    return lines, {"holds": res.holds, "equations": res.equations, "solutions": res.solutions}


def cmd_pullback(a: argparse.Namespace) -> Output:
    polys = parse_polys(a.system, a.k, "w")
    k = a.k if a.k is not None else polys[0].nvars
    res = char_pullback(CharContext(a.p), polys, k)
    lines = res.format("s")
    return lines or ["(no equations: all of F^k)"], {"system": lines}


def _ideal_inputs(a: argparse.Namespace) -> tuple[Ideal, Any]:
    texts = split_top_level(a.gens)
    extra = [a.poly] if getattr(a, "poly", None) else []
    polys = parse_polys(texts + extra, None, "x")
    n = polys[0].nvars
    return Ideal(n, polys[: len(texts)], a.order), (polys[-1] if extra else None)


def cmd_ideal(a: argparse.Namespace) -> Output:
    if a.action == "type":
        roots = [parse_root(t) for t in split_top_level(a.roots)]
        I, J = i_ideal(roots), j_ideal(roots)
        gi = [g.format("x") for g in I.groebner()]
        gj = [g.format("x") for g in J.groebner()]
        return ["I: " + ", ".join(gi), "J: " + ", ".join(gj)], {"I": gi, "J": gj}
    if a.action == "special":
        M, N = parse_polys([a.M, a.N], None, "x")
        text = special_poly(M, N, a.k).format("x")
        return [text], {"special": text}
    ideal, poly = _ideal_inputs(a)
    if a.action == "gb":
        gb = [g.format("x") for g in ideal.groebner()]
        return gb, {"groebner": gb}
    if a.action == "dim":
        d = ideal.dim()
        text = rank_str(d)
        return [text], {"dim": None if d == NEG_INF else int(d)}
    if poly is None:
        raise GencharError("member needs --poly")
    ok = ideal.radical_contains(poly) if a.radical else ideal.contains(poly)
    return [_bool(ok)], {"member": ok, "radical": a.radical}


def cmd_pcset(a: argparse.Namespace) -> Output:
    P = load_presentation(a.file)
    if a.action == "closure":
        lines, data = [], []
        for l, f in P.items():
            lines.append(f"{label_str(l)}: {pc_closure(f)}")
            data.append({"label": label_str(l), "closure": str(pc_closure(f))})
        return lines, data
    if a.action == "rank":
        lines, data = [], []
        for l, f in P.items():
            r, d = pc_rank_deg(f)
            lines.append(f"{label_str(l)}: r={rank_str(r)} d={d}")
            data.append({"label": label_str(l), "r": rank_str(r), "d": d})
        return lines, data
    if a.action == "rel":
        i, j = a.a - 1, a.b - 1
        if not (0 <= i < len(P.fibers) and 0 <= j < len(P.fibers)):
            raise GencharError("fiber index out of range")
        rel = pc_rel(P.fibers[i], P.fibers[j])
        return [REL_SYMBOLS[rel]], {"relation": rel}
    if a.action == "refine":
        Q = refine_geometric(P) if a.mode == "geometric" else refine_essentially_disjoint(P)
        lines = [f"{label_str(l)}: {f}" for l, f in Q.items()]
        return lines, presentation_json(Q)
    if a.action == "quotient":
        classes = primary_quotient(P)
        lines = ["{" + ", ".join(label_str(l) for l in c) + "}" for c in classes]
        return lines, {"classes": lines}
    Q = P if is_geometric(P) else refine_geometric(P)
    gr, gd = presentation_gr_gd(Q)
    return [f"gr={gr}", f"gd={gd}"], {"gr": str(gr), "gd": gd}


def _parse_ordinal(text: str) -> Ordinal2:
    t = text.replace(" ", "")
    if t == "-inf":
        return BOTTOM
    try:
        if t.startswith("w*"):
            k, _, f = t[2:].partition("+")
            return Ordinal2(int(k), int(f or 0))
        return Ordinal2(0, int(t))
    except ValueError:
        raise GencharError(f"not an ordinal below w^2: {text!r}") from None


def cmd_rank(a: argparse.Namespace) -> Output:
    if a.action == "cmp":
        x, y = _parse_ordinal(a.a), _parse_ordinal(a.b)
        c = ord_compare(x, y)
        word = {1: "greater", 0: "equal", -1: "less"}[c]
        return [word], {"compare": c, "max": str(max(x, y))}
    d = parse_descriptor(a.expr)
    if a.action == "gd":
        v = gd_eval(d)
        return [str(v)], {"gd": v}
    g = gr_eval(d)
    return [str(g)], {"gr": str(g)}


def cmd_verify(a: argparse.Namespace) -> Output:
    if a.suite == "character":
        rep = SUITES["character"](a.p, a.nmax)
    elif a.suite == "mann":
        rep = SUITES["mann"](a.n)
    else:
        rep = SUITES[a.suite]()
    data = {
        "suite": rep.name,
        "passed": rep.passed,
        "checks": [{"name": c.name, "count": c.count, "failures": c.failures} for c in rep.checks],
    }
    if not rep.passed:
        raise SuiteFailed(rep.lines(), data)
    return rep.lines(), data


class SuiteFailed(GencharError):
    def __init__(self, lines: list[str], data: Any):
        super().__init__("verification suite failed")
        self.lines = lines
        self.data = data


# -- parser --------------------------------------------------------------------------------

DISPATCH: dict[str, Callable[[argparse.Namespace], Output]] = {
    "chi": cmd_chi,
    "fq": cmd_fq,
    "cyclo": cmd_cyclo,
    "mtp": cmd_mtp,
    "mcl": cmd_mcl,
    "mann": cmd_mann,
    "generic": cmd_generic,
    "axiom": cmd_axiom,
    "pullback": cmd_pullback,
    "ideal": cmd_ideal,
    "pcset": cmd_pcset,
    "rank": cmd_rank,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")
    parser = argparse.ArgumentParser(prog="genchar", description="Exact computations with generic characters.")
    parser.add_argument("--json", action="store_true", help="structured output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("chi", "the character on a finite-field element, or its inverse on a root of unity")
    p.add_argument("--p", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--elem", help='e.g. "fq(7,1,[3])"')
    g.add_argument("--root", help='e.g. "z(1/6)"')

    p = add("fq", "finite-field utilities")
    p.add_argument("action", choices=["conway", "dlog", "embed", "order", "canonical"])
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--elem")

    p = add("cyclo", "cyclotomic numbers")
    p.add_argument("action", choices=["reduce", "galois", "root", "phi"])
    p.add_argument("--expr")
    p.add_argument("--u", type=int, default=1)
    p.add_argument("--k", type=int)

    p = add("mtp", "relation lattice (multiplicative type) of a tuple of units")
    p.add_argument("--units", required=True)
    p.add_argument("--over", default="")

    p = add("mcl", "multiplicative closure")
    p.add_argument("action", choices=["member", "basis", "independent"])
    p.add_argument("--unit")
    p.add_argument("--gens", default="")
    p.add_argument("--over", default="")

    p = add("mann", "linear equations in roots of unity")
    p.add_argument("action", choices=["solve", "bound"])
    p.add_argument("--coeffs")
    p.add_argument("--n", type=int)

    p = add("generic", "genericity of a multiplicative group over another")
    p.add_argument("--G", required=True)
    p.add_argument("--H", default="")

    p = add("axiom", "one instance of the genericity axiom scheme")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nmax", type=int, default=2)
    p.add_argument("--coeffs", help='";"-separated coefficient vectors; default is the standard pool')

    p = add("pullback", "pull an algebraic set back along the character")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--system", required=True, help='polynomials in w1..wk, e.g. "w1+w2"')
    p.add_argument("--k", type=int)

    p = add("ideal", "Groebner bases, membership, dimension, type ideals")
    p.add_argument("action", choices=["gb", "member", "dim", "type", "special"])
    p.add_argument("--gens", default="")
    p.add_argument("--poly")
    p.add_argument("--radical", action="store_true")
    p.add_argument("--order", default="grevlex", choices=["lex", "grlex", "grevlex"])
    p.add_argument("--roots")
    p.add_argument("--M")
    p.add_argument("--N")
    p.add_argument("--k", type=int)

    p = add("pcset", "pc-set presentations read from a JSON file")
    p.add_argument("action", choices=["closure", "rank", "rel", "refine", "quotient", "grgd"])
    p.add_argument("--file", required=True)
    p.add_argument("--a", type=int, default=1, help="first fiber (1-based) for rel")
    p.add_argument("--b", type=int, default=2, help="second fiber (1-based) for rel")
    p.add_argument("--mode", choices=["disjoint", "geometric"], default="disjoint")

    p = add("rank", "ordinal rank calculus on descriptors")
    p.add_argument("action", choices=["eval", "gd", "cmp"])
    p.add_argument("--expr")
    p.add_argument("--a")
    p.add_argument("--b")

    p = add("verify", "run a property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--n", type=int, default=2)
    return parser


_REQUIRED = {
    ("fq", "conway"): ("p", "n"),
    ("fq", "dlog"): ("elem",),
    ("fq", "embed"): ("elem", "n"),
    ("fq", "order"): ("elem",),
    ("fq", "canonical"): ("elem",),
    ("cyclo", "reduce"): ("expr",),
    ("cyclo", "galois"): ("expr",),
    ("cyclo", "root"): ("expr",),
    ("cyclo", "phi"): ("k",),
    ("mcl", "member"): ("unit",),
    ("mann", "solve"): ("coeffs",),
    ("mann", "bound"): ("n",),
    ("ideal", "gb"): ("gens",),
    ("ideal", "member"): ("gens", "poly"),
    ("ideal", "dim"): ("gens",),
    ("ideal", "type"): ("roots",),
    ("ideal", "special"): ("M", "N", "k"),
    ("rank", "eval"): ("expr",),
    ("rank", "gd"): ("expr",),
    ("rank", "cmp"): ("a", "b"),
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    action = getattr(args, "action", None)
    missing = [f"--{k}" for k in _REQUIRED.get((args.command, action), ()) if not getattr(args, k)]
    if missing:
        parser.print_usage(sys.stderr)
        print(f"genchar {args.command} {action}: missing {', '.join(missing)}", file=sys.stderr)
        return 2
    try:
        lines, data = DISPATCH[args.command](args)
        code = 0
    except SuiteFailed as exc:
        lines, data, code = exc.lines, exc.data, 1
    except (GencharError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
