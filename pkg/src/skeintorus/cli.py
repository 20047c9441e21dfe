"""Command-line front end.

Exit codes: 0 success, 2 syntax/type errors, 3 math-domain errors
(``NotDivisible``, ``NotSymmetric``, ...), 4 unknown knot or command.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .catalog import KNOTS, catalog
from .errors import SkeinError, TypeMismatch, UnknownCommand
from .laurent import LaurentPolynomial
from .parser import as_cosine, evaluate, families, infer_context, parse
from .peripheral import IdealPolynomial, ideal_to_peripheral, peripheral_to_ideal
from .quantum_torus import CosineElement, TorusElement, cosine_multiply, embed, qt_multiply
from .recurrence import analyze, check_theorem2, orthogonality_relation, solve_kappa
from .solid_torus import SolidTorusElement, convert_basis, left_act, right_act, x_map

FORMATS = ("text", "json", "latex")
COMMANDS = ("mul", "act", "xmap", "relation", "kappa", "analyze", "convert", "theorem2", "catalog")


# --- latex ----------------------------------------------------------------

def latex(text):
    """Rewrite a canonical text form as LaTeX."""
    s = re.sub(r"\^(-?\d+)", r"^{\1}", text)
    s = re.sub(r"\((-?\d+),(-?\d+)\)", r"(\1,\2)_T", s)
    s = re.sub(r"e\[(-?\d+),(-?\d+)\]", r"e_{\1,\2}", s)
    s = re.sub(r"([TS])\[(-?\d+)\]", r"\1_{\2}(\\alpha)", s)
    s = re.sub(r"kappa\[(-?\d+)\]", r"\\kappa_{\1}", s)
    s = re.sub(r"\ba\b", r"\\alpha", s)
    s = re.sub(r"(\d+)/(\d+)", r"\\frac{\1}{\2}", s)
    return s.replace("*", " ")


# --- helpers --------------------------------------------------------------

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]+")


def _knot_name(text):
    """``text`` if it looks like a knot name; raises for unknown names."""
    if text in KNOTS:
        return text
    if _NAME.fullmatch(text):
        catalog(text)  # raises UnknownKnot
    return None


def _element_arg(text):
    """A catalog knot name (its default peripheral element) or a cosine expression."""
    if _knot_name(text):
        return catalog(text).default_element.element
    return as_cosine(evaluate(text, context="torus"))


def _ideal_arg(text):
    return evaluate(text, context="ideal")


def _load_seed(path):
    with open(path) as fh:
        data = json.load(fh)
    return {int(k): LaurentPolynomial.from_json(v) for k, v in data.items()}


class Result:
    """Text lines plus a JSON payload for one command."""

    def __init__(self, text, payload):
        self.text = text
        self.payload = payload

    def render(self, fmt):
        if fmt == "json":
            return json.dumps(self.payload, indent=2, sort_keys=False)
        if fmt == "latex":
            return "\n".join(latex(line) for line in self.text.splitlines())
        return self.text


def _value_json(value):
    if isinstance(value, LaurentPolynomial):
        return {"type": "laurent", "value": value.to_json()}
    return value.to_json()


def value_from_json(data):
    """Inverse of the JSON payload produced for a single algebraic value."""
    kind = data.get("type")
    if kind == "laurent":
        return LaurentPolynomial.from_json(data["value"])
    if kind == "torus":
        cls = CosineElement if data["basis"] == "cosine" else TorusElement
        return cls.from_json(data)
    if kind == "solid_torus":
        return SolidTorusElement.from_json(data)
    if kind == "ideal":
        return IdealPolynomial.from_json(data)
    raise ValueError(f"unknown value type {kind!r}")


# --- commands -------------------------------------------------------------

def cmd_mul(args):
    na, nb = parse(args.x), parse(args.y)
    if {"lm", "cosine"} <= families(na) | families(nb):
        raise TypeMismatch("mixing l, m with (p,q) needs an explicit conversion")
    ca, cb = infer_context(na, prefer_ideal=True), infer_context(nb, prefer_ideal=True)
    kinds = {ca, cb} - {"scalar"}
    if kinds == {"ideal"}:
        value = evaluate(na, "ideal") * evaluate(nb, "ideal")
    elif kinds == {"solid"}:
        value = evaluate(na, "solid") * evaluate(nb, "solid")
    elif not kinds:
        value = evaluate(na, "scalar") * evaluate(nb, "scalar")
    elif "solid" in kinds:
        raise TypeMismatch("cannot multiply a solid-torus element with a torus element; use act")
    else:
        a, b = evaluate(na, "torus"), evaluate(nb, "torus")
        if isinstance(a, CosineElement) and isinstance(b, CosineElement):
            value = cosine_multiply(a, b)
        else:
            a = a if isinstance(a, TorusElement) else _torus(a)
            b = b if isinstance(b, TorusElement) else _torus(b)
            value = qt_multiply(a, b)
    return Result(str(value), _value_json(value))


def _torus(x):
    if isinstance(x, CosineElement):
        return embed(x)
    return TorusElement.scalar(x)


def cmd_act(args):
    a = as_cosine(evaluate(args.element, context="torus"))
    u = evaluate(args.module, context="solid")
    if not isinstance(u, SolidTorusElement):
        u = SolidTorusElement("monomial", {0: u})
    value = right_act(u, a) if args.right else left_act(a, u)
    value = convert_basis(value, args.basis)
    return Result(str(value), _value_json(value))


def cmd_xmap(args):
    a = as_cosine(evaluate(args.element, context="torus"))
    value = convert_basis(x_map(a), args.basis)
    return Result(str(value), _value_json(value))


def cmd_relation(args):
    rel = orthogonality_relation(_element_arg(args.element), args.n)
    return Result(str(rel), rel.to_json())


def cmd_kappa(args):
    seed = _load_seed(args.seed) if args.seed else None
    if _knot_name(args.target):
        entry = catalog(args.target)
        el = entry.peripheral_elements[args.element_index].element
    else:
        el = _element_arg(args.target)
    seq = solve_kappa(el, seed=seed, n_max=args.n_max)
    lines = [f"kappa[{n}] = {seq[n]}" for n in range(args.n_max + 1)]
    payload = {"element": el.to_json(), **seq.to_json(args.n_max)}
    return Result("\n".join(lines), payload)


def cmd_analyze(args):
    rep = analyze(_element_arg(args.element))
    text = (f"p_max = {rep.p_max}\nvanishing_n = {rep.vanishing_n}\nnu = {rep.nu}\n"
            f"separation_bound = {rep.separation_bound}")
    return Result(text, rep.to_json())


def cmd_convert(args):
    node = parse(args.poly)
    ctx = infer_context(node, prefer_ideal=True)
    if ctx == "ideal":
        conv = ideal_to_peripheral(evaluate(node, "ideal"))
        el = conv.peripheral.element
        text = f"{el}\nrecentering = e[{-conv.recentering[0]},{-conv.recentering[1]}]\nunit = {conv.unit}"
        payload = {
            "direction": "ideal_to_peripheral",
            "element": el.to_json(),
            "recentering": list(conv.recentering),
            "unit": conv.unit.to_json(),
        }
        return Result(text, payload)
    if ctx == "torus":
        poly = peripheral_to_ideal(as_cosine(evaluate(node, "torus")))
        payload = {"direction": "peripheral_to_ideal", "ideal": poly.to_json()}
        return Result(str(poly), payload)
    raise TypeMismatch(f"convert expects an l,m polynomial or a cosine element, got {ctx}")


def cmd_theorem2(args):
    res = check_theorem2(_ideal_arg(args.poly))
    if res.holds:
        text = f"holds (separation bound {res.separation_bound})"
    else:
        text = f"fails at n = {res.violating_n} (separation bound {res.separation_bound})"
    return Result(text, res.to_json())


def cmd_catalog(args):
    entry = catalog(args.knot)
    lines = [f"knot: {entry.name}", "A-ideal generators:"]
    for text, g in zip(entry.generator_texts, entry.ideal_generators):
        lines.append(f"  {text}")
        lines.append(f"    = {g}")
    lines.append("peripheral elements:")
    lines.extend(f"  {p.element}" for p in entry.peripheral_elements)
    if entry.reference_peripheral is not None:
        lines.append(f"reference peripheral element (t^3 variant): {entry.reference_peripheral.element}")
    lines.append("known kappa:")
    lines.extend(f"  kappa[{k}] = {v}" for k, v in sorted(entry.known_kappa.items()))
    return Result("\n".join(lines), entry.to_json())


# --- entry point ----------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="skeintorus",
                                     description="Torus skein algebra and colored Kauffman brackets.")
    parser.add_argument("--format", choices=FORMATS, default="text")
    # accepted after the subcommand too; SUPPRESS keeps an earlier value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", parents=[common], help="product of two expressions")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("act", parents=[common], help="torus skein acting on a solid-torus skein")
    p.add_argument("element")
    p.add_argument("module")
    p.add_argument("--right", action="store_true", help="right action u.a instead of a.u")
    p.add_argument("--basis", choices=("S", "T", "monomial"), default="S")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("xmap", parents=[common], help="project a torus skein into the solid torus")
    p.add_argument("element")
    p.add_argument("--basis", choices=("S", "T", "monomial"), default="S")
    p.set_defaults(func=cmd_xmap)

    p = sub.add_parser("relation", parents=[common], help="orthogonality relation at n")
    p.add_argument("element")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("kappa", parents=[common], help="solve for colored Kauffman brackets")
    p.add_argument("target", help="catalog knot name or peripheral element")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--seed", help="JSON file mapping index to Laurent JSON")
    p.add_argument("--element-index", type=int, default=0,
                   help="which catalog peripheral element to use")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("analyze", parents=[common], help="leading-coefficient analysis")
    p.add_argument("element")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("convert", parents=[common], help="A-ideal polynomial <-> peripheral element")
    p.add_argument("poly")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("theorem2", parents=[common], help="degree-2 determinacy criterion")
    p.add_argument("poly")
    p.set_defaults(func=cmd_theorem2)

    p = sub.add_parser("catalog", parents=[common], help="built-in knot data")
    p.add_argument("knot")
    p.set_defaults(func=cmd_catalog)
    return parser


def _first_positional(argv):
    skip = False
    for arg in argv:
        if skip:
            skip = False
            continue
        if arg == "--format":
            skip = True
            continue
        if arg.startswith("-"):
            continue
        return arg
    return None


def main(argv=None, out=None, err=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    command = _first_positional(argv)
    if command is not None and command not in COMMANDS:
        print(f"UnknownCommand: {command!r}; expected one of {', '.join(COMMANDS)}", file=err)
        return UnknownCommand.exit_code
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        result = args.func(args)
    except SkeinError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return 2
    print(result.render(args.format), file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
