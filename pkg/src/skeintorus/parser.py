"""Expression reader for torus, solid-torus and A-ideal expressions.

Grammar (``^`` binds tighter than unary minus, which binds tighter than ``*``)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT ['/' INT] | 't' | 'l' | 'm' | 'a'
            | '(' INT ',' INT ')' | 'e[' INT ',' INT ']' | 'T[' INT ']' | 'S[' INT ']'
            | '(' expr ')' | '[' expr ']'

Generators fall into families; the evaluation context is chosen from the
families present, and incompatible mixtures raise :class:`TypeMismatch`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, TypeMismatch
from .laurent import LaurentPolynomial
from .peripheral import IdealPolynomial
from .quantum_torus import CosineElement, TorusElement, cosine, embed, exponential, to_cosine
from .solid_torus import SolidTorusElement

__all__ = ["parse", "evaluate", "families", "Node", "infer_context"]

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<pair>\(\s*-?\d+\s*,\s*-?\d+\s*\))
  | (?P<int>\d+)
  | (?P<gen>e\[|T\[|S\[)
  | (?P<name>[tlma])(?![A-Za-z_])
  | (?P<op>[-+*^/()\[\],])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


@dataclass(frozen=True)
class Node:
    kind: str       # num, gen, add, sub, mul, neg, pow
    value: object
    children: tuple = ()
    pos: int = 0


def tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = mt.lastgroup
        if kind != "ws":
            out.append(Token(kind, mt.group(), pos))
        pos = mt.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        tok = self.peek()
        if tok.text != text:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"expected {text!r}, found {found}", tok.pos)
        return self.next()

    def integer(self):
        tok = self.peek()
        sign = 1
        if tok.text == "-":
            self.next()
            sign = -1
            tok = self.peek()
        if tok.kind != "int":
            raise ParseError("expected an integer", tok.pos)
        self.next()
        return sign * int(tok.text)

    def parse(self):
        if self.peek().kind == "end":
            raise ParseError("empty expression", 0)
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek().text in ("+", "-"):
            op = self.next()
            rhs = self.term()
            node = Node("add" if op.text == "+" else "sub", None, (node, rhs), op.pos)
        return node

    def term(self):
        node = self.unary()
        while self.peek().text == "*":
            op = self.next()
            node = Node("mul", None, (node, self.unary()), op.pos)
        return node

    def unary(self):
        tok = self.peek()
        if tok.text == "-":
            self.next()
            return Node("neg", None, (self.unary(),), tok.pos)
        if tok.text == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().text == "^":
            op = self.next()
            return Node("pow", self.integer(), (base,), op.pos)
        return base

    def atom(self):
        tok = self.next()
        if tok.kind == "int":
            value = Fraction(int(tok.text))
            if self.peek().text == "/":
                self.next()
                den = self.peek()
                if den.kind != "int":
                    raise ParseError("expected a denominator", den.pos)
                self.next()
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.pos)
                value = value / int(den.text)
            return Node("num", value, pos=tok.pos)
        if tok.kind == "name":
            return Node("gen", (tok.text,), pos=tok.pos)
        if tok.kind == "pair":
            p, q = (int(x) for x in tok.text.strip("()").split(","))
            return Node("gen", ("pair", p, q), pos=tok.pos)
        if tok.kind == "gen":
            if tok.text == "e[":
                p = self.integer()
                self.expect(",")
                q = self.integer()
                self.expect("]")
                return Node("gen", ("e", p, q), pos=tok.pos)
            k = self.integer()
            self.expect("]")
            return Node("gen", (tok.text[0], k), pos=tok.pos)
        if tok.text in ("(", "["):
            inner = self.expr()
            self.expect(")" if tok.text == "(" else "]")
            return inner
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"unexpected {found}", tok.pos)


def parse(text):
    """Parse ``text`` into an AST; raises :class:`ParseError` with an offset."""
    return _Parser(text).parse()


_FAMILY = {"t": "scalar", "l": "lm", "m": "lm", "e": "exp", "pair": "cosine",
           "a": "solid", "T": "solid", "S": "solid"}


def families(node):
    if node.kind == "gen":
        return {_FAMILY[node.value[0]]}
    out = set()
    for child in node.children:
        out |= families(child)
    return out


def infer_context(node, prefer_ideal=False):
    fams = families(node) - {"scalar"}
    if "solid" in fams and len(fams) > 1:
        raise TypeMismatch("solid-torus generators cannot be mixed with torus or ideal generators")
    if "lm" in fams and "cosine" in fams:
        raise TypeMismatch("mixing l, m with (p,q) needs an explicit conversion")
    if "solid" in fams:
        return "solid"
    if not fams:
        return "scalar"
    if fams == {"lm"} and prefer_ideal:
        return "ideal"
    return "torus"


def evaluate(source, context=None, prefer_ideal=False):
    """Evaluate text or an AST.

    ``context`` is one of ``scalar``, ``torus``, ``ideal``, ``solid``; by
    default it is inferred.  Torus results that came only from cosine
    generators and are symmetric are returned as :class:`CosineElement`.
    """
    node = parse(source) if isinstance(source, str) else source
    inferred = infer_context(node, prefer_ideal or context == "ideal")
    if context is None:
        context = inferred
    elif inferred not in ("scalar", context) and (inferred, context) != ("ideal", "torus"):
        raise TypeMismatch(f"expression is a {inferred} expression, expected {context}")
    value = _Eval(context).run(node)
    if context == "torus":
        fams = families(node) - {"scalar"}
        if fams <= {"cosine"} and value.is_symmetric():
            return to_cosine(value)
    return value


class _Eval:
    def __init__(self, context):
        self.context = context

    def lift(self, value):
        if self.context == "scalar":
            return value
        if self.context == "torus":
            return TorusElement.scalar(value)
        if self.context == "ideal":
            return IdealPolynomial.scalar(value)
        return SolidTorusElement("monomial", {0: value})

    def run(self, node):
        k = node.kind
        if k == "num":
            return self.lift(LaurentPolynomial.constant(node.value))
        if k == "gen":
            return self.generator(node)
        if k == "neg":
            return -self.run(node.children[0])
        if k in ("add", "sub", "mul"):
            a = self.run(node.children[0])
            b = self.run(node.children[1])
            if k == "add":
                return a + b
            if k == "sub":
                return a - b
            return a * b
        if k == "pow":
            return self.power(node)
        raise AssertionError(k)

    def power(self, node):
        n = node.value
        child = node.children[0]
        if not families(child) - {"scalar"}:
            base = _Eval("scalar").run(child)
            if n < 0 and not base.is_unit():
                raise TypeMismatch(f"negative power of a non-monomial at offset {node.pos}")
            return self.lift(base ** n)
        base = self.run(child)
        if n >= 0:
            return base ** n
        if self.context == "torus":
            try:
                return base ** n
            except ValueError as err:
                raise TypeMismatch(f"{err} (offset {node.pos})") from None
        raise TypeMismatch(f"negative powers are not allowed in {self.context} expressions "
                           f"(offset {node.pos})")

    def generator(self, node):
        name = node.value[0]
        if name == "t":
            return self.lift(LaurentPolynomial.monomial(1))
        if self.context == "torus":
            if name == "l":
                return exponential(1, 0)
            if name == "m":
                return exponential(0, 1)
            if name == "e":
                return exponential(node.value[1], node.value[2])
            if name == "pair":
                return embed(cosine(node.value[1], node.value[2]))
        if self.context == "ideal":
            if name == "l":
                return IdealPolynomial({(1, 0): 1})
            if name == "m":
                return IdealPolynomial({(0, 1): 1})
        if self.context == "solid":
            if name == "a":
                return SolidTorusElement("monomial", {1: 1})
            return SolidTorusElement(name, {node.value[1]: 1})
        raise TypeMismatch(f"generator {name!r} is not valid in a {self.context} expression "
                           f"(offset {node.pos})")


def as_cosine(value):
    """Coerce an evaluated torus value to a :class:`CosineElement`."""
    if isinstance(value, CosineElement):
        return value
    if isinstance(value, TorusElement):
        return to_cosine(value)
    if isinstance(value, LaurentPolynomial):
        return CosineElement.scalar(value)
    raise TypeMismatch(f"expected a torus element, got {type(value).__name__}")
