"""A-ideal polynomials in ``l, m`` and their peripheral-ideal cosine forms.

An :class:`IdealPolynomial` lives in ``Q_t[l, m]`` with ``l*m = t^2 m*l`` and is
stored normal-ordered (every ``l`` to the left of every ``m``).  Passing to
the exponential basis uses ``l^p m^q = t^{pq} e_{p,q}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import NoSymmetrization
from .laurent import ONE, ZERO, LaurentPolynomial
from .quantum_torus import CosineElement, TorusElement, exponential, qt_multiply, to_cosine, embed

__all__ = [
    "IdealPolynomial",
    "PeripheralElement",
    "Conversion",
    "L",
    "M",
    "nc_expand",
    "to_exponential",
    "ideal_to_peripheral",
    "peripheral_to_ideal",
    "classical_specialization",
    "ClassicalPolynomial",
    "normalize_unit",
]


def _accumulate(out, key, c):
    s = out.get(key)
    s = c if s is None else s + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def _monomial_text(p, q):
    parts = []
    if p:
        parts.append("l" if p == 1 else f"l^{p}")
    if q:
        parts.append("m" if q == 1 else f"m^{q}")
    return "*".join(parts)


class IdealPolynomial:
    """Normal-ordered ``sum gamma_{p,q} l^p m^q`` with ``p, q >= 0``."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for (p, q), c in (terms or {}).items():
            if p < 0 or q < 0:
                raise ValueError(f"negative exponent ({p},{q}) is not in Q_t[l, m]")
            c = LaurentPolynomial.coerce(c)
            if c:
                _accumulate(clean, (int(p), int(q)), c)
        self._terms = clean

    @classmethod
    def scalar(cls, c):
        return cls({(0, 0): c})

    @property
    def terms(self):
        return dict(self._terms)

    def coeff(self, p, q):
        return self._terms.get((p, q), ZERO)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def l_degree(self):
        return max(p for p, _ in self._terms) if self._terms else None

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        other = _as_ideal(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(out, k, c)
        return IdealPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IdealPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_ideal(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, IdealPolynomial):
            # (l^a m^b)(l^c m^d) = t^{-2bc} l^{a+c} m^{b+d}
            out = {}
            for (a, b), x in self._terms.items():
                for (c, d), y in other._terms.items():
                    _accumulate(out, (a + c, b + d), (x * y).shift(-2 * b * c))
            return IdealPolynomial(out)
        try:
            c = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return IdealPolynomial({k: v * c for k, v in self._terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        return nc_expand([self] * n)

    def __eq__(self, other):
        other = _as_ideal(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for (p, q), c in self.items():
            mono = _monomial_text(p, q)
            if not mono:
                parts = [str(LaurentPolynomial({e: v})) for e, v in c.items()]
            elif c == ONE:
                parts = [mono]
            elif c == -ONE:
                parts = ["-" + mono]
            elif len(c) == 1:
                parts = [f"{c}*{mono}"]
            else:
                parts = [f"({c})*{mono}"]
            for text in parts:
                neg = text.startswith("-")
                body = text[1:] if neg else text
                if not out:
                    out.append(("-" if neg else "") + body)
                else:
                    out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"IdealPolynomial('{self}')"

    def to_json(self):
        return {
            "type": "ideal",
            "terms": [{"l": p, "m": q, "coeff": c.to_json()} for (p, q), c in self.items()],
        }

    @classmethod
    def from_json(cls, data):
        return cls({(d["l"], d["m"]): LaurentPolynomial.from_json(d["coeff"]) for d in data["terms"]})


def _as_ideal(x):
    if isinstance(x, IdealPolynomial):
        return x
    try:
        return IdealPolynomial.scalar(LaurentPolynomial.coerce(x))
    except TypeError:
        return NotImplemented


L = IdealPolynomial({(1, 0): 1})
M = IdealPolynomial({(0, 1): 1})


def nc_expand(factors):
    """Normal-ordered product of ``factors`` (left to right)."""
    return reduce(lambda a, b: a * b, factors, IdealPolynomial.scalar(1))


def to_exponential(poly):
    """``sum gamma_{p,q} l^p m^q`` as ``sum gamma_{p,q} t^{pq} e_{p,q}``."""
    return TorusElement({(p, q): c.shift(p * q) for (p, q), c in poly._terms.items()})


@dataclass(frozen=True)
class PeripheralElement:
    """A torus skein recorded as an annihilator of the empty link."""

    element: CosineElement
    knot: str | None = None

    def __str__(self):
        return str(self.element)


@dataclass(frozen=True)
class Conversion:
    """Result of :func:`ideal_to_peripheral`.

    ``embed(peripheral.element) == unit * e_{-p0,-q0} * to_exponential(poly)``
    where ``recentering == (p0, q0)``.
    """

    peripheral: PeripheralElement
    recentering: tuple
    unit: LaurentPolynomial


def normalize_unit(el):
    """Scale ``el`` by a unit so its lexicographically largest coefficient
    has a positive trailing term sitting at ``t^0``.  Returns ``(el, unit)``.
    """
    if not el:
        return el, ONE
    c = el.terms[max(el.terms)]
    v, lead = c.trailing()
    unit = LaurentPolynomial({-v: 1 if lead > 0 else -1})
    return el * unit, unit


def _recentering_candidates(support):
    ps = [p for p, _ in support]
    qs = [q for _, q in support]
    pmin, pmax, qmin, qmax = min(ps), max(ps), min(qs), max(qs)
    # symmetric about the origin after the shift forces the bounding-box centre;
    # the wider window only guards against degenerate supports
    cp, cq = Fraction(pmin + pmax, 2), Fraction(qmin + qmax, 2)
    cands = [(p0, q0) for p0 in range(pmin, pmax + 1) for q0 in range(qmin, qmax + 1)]
    cands.sort(key=lambda c: (abs(c[0] - cp) + abs(c[1] - cq), c))
    return cands, ((pmin, pmax), (qmin, qmax))


def ideal_to_peripheral(poly, knot=None):
    """Find the left recentering ``e_{-p0,-q0}`` that symmetrizes ``poly``."""
    if not poly:
        raise ValueError("cannot convert the zero polynomial")
    expo = to_exponential(poly)
    cands, window = _recentering_candidates(expo.support())
    for p0, q0 in cands:
        shifted = qt_multiply(exponential(-p0, -q0), expo)
        if shifted.is_symmetric():
            el, unit = normalize_unit(to_cosine(shifted))
            return Conversion(PeripheralElement(el, knot), (p0, q0), unit)
    raise NoSymmetrization(window)


def peripheral_to_ideal(el):
    """Contract a cosine element to ``Q_t[l, m]`` by the minimal left shift."""
    if isinstance(el, PeripheralElement):
        el = el.element
    expo = embed(el)
    if not expo:
        return IdealPolynomial()
    p0 = -min(p for p, _ in expo.support())
    q0 = -min(q for _, q in expo.support())
    shifted = qt_multiply(exponential(p0, q0), expo)
    return IdealPolynomial({(p, q): c.shift(-p * q) for (p, q), c in shifted.terms.items()})


class ClassicalPolynomial(dict):
    """Commutative polynomial ``{(p, q): rational}`` in ``l, m``."""

    def __str__(self):
        if not self:
            return "0"
        out = []
        for (p, q), c in sorted(self.items(), reverse=True):
            mono = _monomial_text(p, q)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)


def classical_specialization(poly):
    """Set ``t = -1`` and substitute ``l -> -l``, ``m -> -m``."""
    out = ClassicalPolynomial()
    for (p, q), c in poly.terms.items():
        v = c.evaluate(-1) * (-1) ** (p + q)
        if v:
            s = out.get((p, q), 0) + v
            if s:
                out[(p, q)] = s
            else:
                out.pop((p, q), None)
    return out
