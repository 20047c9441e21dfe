"""Exact Laurent polynomials in one variable ``t`` over the rationals.

A :class:`LaurentPolynomial` is an immutable sparse map ``exponent -> coefficient``
with zero coefficients dropped, so that ``==`` is structural.  Integer
coefficients are kept as ``int``; genuinely fractional ones as
:class:`fractions.Fraction`.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import DivisionByZero, EvalAtZero, NotDivisible

__all__ = [
    "LaurentPolynomial",
    "t",
    "ONE",
    "ZERO",
    "add",
    "multiply",
    "divide_exact",
    "substitute",
]


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class LaurentPolynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in dict(terms).items():
                c = _norm(c)
                if c:
                    clean[int(k)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, (int, Fraction, Rational)) and not isinstance(value, bool):
            return cls({0: value})
        raise TypeError(f"cannot interpret {value!r} as a Laurent polynomial")

    # --- inspection -------------------------------------------------------
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs in descending exponent order."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, k):
        return self._terms.get(k, 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self):
        """Top exponent; ``None`` for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def valuation(self):
        """Bottom exponent; ``None`` for the zero polynomial."""
        return min(self._terms) if self._terms else None

    def span(self):
        if not self._terms:
            return None
        return self.degree() - self.valuation()

    def is_monomial(self):
        return len(self._terms) == 1

    def is_unit(self):
        """Units of Q[t, 1/t] are the nonzero monomials."""
        return len(self._terms) == 1

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(0, 0)

    def leading(self):
        d = self.degree()
        return d, self._terms[d]

    def trailing(self):
        v = self.valuation()
        return v, self._terms[v]

    # --- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = _norm(s)
            else:
                out.pop(k, None)
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentPolynomial):
            a, b = self._terms, other._terms
            if len(a) < len(b):
                a, b = b, a
            out = {}
            for j, d in b.items():
                for i, c in a.items():
                    k = i + j
                    s = out.get(k, 0) + c * d
                    if s:
                        out[k] = s
                    else:
                        del out[k]
            return LaurentPolynomial._raw({k: _norm(c) for k, c in out.items()})
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            other = _norm(other)
            if not other:
                return ZERO
            return LaurentPolynomial._raw({k: _norm(c * other) for k, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``t**k``."""
        if not k:
            return self
        return LaurentPolynomial._raw({e + k: c for e, c in self._terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise NotDivisible(f"{self} is not a unit; cannot raise to {n}")
            (e, c), = self._terms.items()
            return LaurentPolynomial({e * n: Fraction(1) / Fraction(c) ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        return divide_exact(self, LaurentPolynomial.coerce(other))

    def __rtruediv__(self, other):
        return divide_exact(LaurentPolynomial.coerce(other), self)

    # --- substitutions ----------------------------------------------------
    def negate_t(self):
        """Apply ``t -> -t``."""
        return LaurentPolynomial._raw(
            {k: (-c if k % 2 else c) for k, c in self._terms.items()}
        )

    def invert_t(self):
        """Apply ``t -> 1/t``."""
        return LaurentPolynomial._raw({-k: c for k, c in self._terms.items()})

    def evaluate(self, value):
        value = Fraction(value)
        if value == 0:
            raise EvalAtZero("cannot evaluate a Laurent polynomial at t = 0")
        return _norm(sum((c * value ** k for k, c in self._terms.items()), Fraction(0)))

    # --- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self._terms == other._terms
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # --- text / json ------------------------------------------------------
    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPolynomial('{self}')"

    def to_json(self):
        return {str(k): str(c) for k, c in self.items()}

    @classmethod
    def from_json(cls, data):
        return cls({int(k): Fraction(v) for k, v in data.items()})

    def to_latex(self):
        return format_laurent(self, latex=True)

    @classmethod
    def parse(cls, text):
        """Parse ``c*t^k`` sums, e.g. ``"t^18 - t^10 - 1/2*t^-2"``."""
        return parse_laurent(text)


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial({0: 1})
t = LaurentPolynomial({1: 1})


def format_laurent(p, latex=False, var="t"):
    if not p._terms:
        return "0"
    pieces = []
    for k, c in p.items():
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if k == 0:
            body = _fmt_coeff(a, latex)
        else:
            if latex:
                power = var if k == 1 else f"{var}^{{{k}}}"
            else:
                power = var if k == 1 else f"{var}^{k}"
            if a == 1:
                body = power
            else:
                body = _fmt_coeff(a, latex) + ("" if latex else "*") + power
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _fmt_coeff(a, latex):
    if isinstance(a, Fraction) and a.denominator != 1:
        if latex:
            return f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
        return f"{a.numerator}/{a.denominator}"
    return str(a)


_TERM_RE = re.compile(
    r"\s*([+-])?\s*(?:(\d+)(?:/(\d+))?\s*(\*)?\s*)?(t(?:\s*\^\s*(-?\d+))?)?\s*"
)


def parse_laurent(text):
    """Small standalone reader for the canonical text form."""
    text = text.strip()
    if not text:
        raise ValueError("empty Laurent polynomial text")
    pos = 0
    total = ZERO
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        sign, num, den, star, tpart, exp = m.groups()
        if (num is None and tpart is None) or (not first and sign is None):
            raise ValueError(f"cannot parse Laurent polynomial near offset {pos}: {text!r}")
        if star and not tpart:
            raise ValueError(f"dangling '*' near offset {pos}: {text!r}")
        c = Fraction(int(num), int(den) if den else 1) if num else Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if not tpart else (int(exp) if exp is not None else 1)
        total = total + LaurentPolynomial({k: c})
        pos = m.end()
        first = False
    return total


# --- functional surface --------------------------------------------------

def add(a, b):
    return LaurentPolynomial.coerce(a) + LaurentPolynomial.coerce(b)


def multiply(a, b):
    return LaurentPolynomial.coerce(a) * LaurentPolynomial.coerce(b)


def divide_exact(a, b):
    """Return ``q`` with ``q * b == a``; raise :class:`NotDivisible` otherwise.

    Long division from the top exponent.  The quotient's bottom exponent is
    forced to ``val(a) - val(b)``, which bounds the loop.
    """
    a = LaurentPolynomial.coerce(a)
    b = LaurentPolynomial.coerce(b)
    if not b:
        raise DivisionByZero("division by the zero Laurent polynomial")
    if not a:
        return ZERO
    db, cb = b.leading()
    if b.is_monomial():
        return LaurentPolynomial({k - db: Fraction(c) / cb for k, c in a._terms.items()})
    floor = a.valuation() - b.valuation()
    quotient = {}
    rem = a
    while rem:
        d, c = rem.leading()
        k = d - db
        if k < floor or rem.span() < b.span():
            raise NotDivisible(f"{a} is not divisible by {b}")
        q = Fraction(c) / cb
        quotient[k] = q
        rem = rem - b.shift(k) * q
    return LaurentPolynomial(quotient)


def substitute(a, kind, value=None):
    """Apply ``negate_t``, ``invert_t`` or ``eval_at`` (with ``value``)."""
    a = LaurentPolynomial.coerce(a)
    if kind == "negate_t":
        return a.negate_t()
    if kind == "invert_t":
        return a.invert_t()
    if kind == "eval_at":
        return a.evaluate(value)
    raise ValueError(f"unknown substitution {kind!r}")
