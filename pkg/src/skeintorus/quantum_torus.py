"""The noncommutative torus and its cosine subalgebra.

Elements are stored in the exponential basis ``e_{p,q} = t^{-pq} l^p m^q``
where ``e_{p,q} * e_{r,s} = t^{ps - qr} e_{p+r, q+s}``.  The torus skein
algebra is the subalgebra spanned by ``(p,q)_T = e_{p,q} + e_{-p,-q}``;
:class:`CosineElement` is a view on those symmetric elements, indexed by a
strict fundamental domain (``p > 0``, or ``p == 0`` and ``q >= 0``).
"""
from __future__ import annotations

from fractions import Fraction

from .errors import NotSymmetric
from .laurent import ONE, ZERO, LaurentPolynomial

__all__ = [
    "TorusElement",
    "CosineElement",
    "exponential",
    "cosine",
    "l",
    "m",
    "qt_multiply",
    "cosine_multiply",
    "to_cosine",
    "embed",
    "involution",
    "normalize_pair",
]


def _coerce_scalar(value):
    return LaurentPolynomial.coerce(value)


def _accumulate(out, key, c):
    s = out.get(key)
    s = c if s is None else s + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def normalize_pair(p, q):
    """Representative of ``{(p,q), (-p,-q)}`` in the fundamental domain."""
    if p > 0 or (p == 0 and q >= 0):
        return p, q
    return -p, -q


class TorusElement:
    """Finite sum ``sum a_{p,q} e_{p,q}`` with Laurent coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (p, q), c in dict(terms).items():
                c = _coerce_scalar(c)
                if c:
                    _accumulate(clean, (int(p), int(q)), c)
        self._terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def scalar(cls, c):
        return cls({(0, 0): c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, p, q):
        return self._terms.get((p, q), ZERO)

    def support(self):
        return set(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_symmetric(self):
        return all(self._terms.get((-p, -q), ZERO) == c for (p, q), c in self._terms.items())

    def __add__(self, other):
        other = _as_torus(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(out, k, c)
        return TorusElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_torus(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TorusElement):
            return qt_multiply(self, other)
        try:
            c = _coerce_scalar(other)
        except TypeError:
            return NotImplemented
        if not c:
            return TorusElement()
        return TorusElement._raw({k: v * c for k, v in self._terms.items()})

    def __rmul__(self, other):
        # scalars are central
        return self.__mul__(other)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only single exponentials can be inverted")
            ((p, q), c), = self._terms.items()
            return TorusElement({(-p, -q): c ** -1}) ** (-n)
        result = TorusElement.scalar(1)
        base = self
        while n:
            if n & 1:
                result = qt_multiply(result, base)
            base = qt_multiply(base, base)
            n >>= 1
        return result

    def __eq__(self, other):
        other = _as_torus(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map_coefficients(self, fn):
        return TorusElement({k: fn(c) for k, c in self._terms.items()})

    def __str__(self):
        return _format_sum((f"e[{p},{q}]", c) for (p, q), c in self.items())

    def __repr__(self):
        return f"TorusElement('{self}')"

    def to_json(self):
        return {
            "type": "torus",
            "basis": "exponential",
            "terms": [{"p": p, "q": q, "coeff": c.to_json()} for (p, q), c in self.items()],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            {(d["p"], d["q"]): LaurentPolynomial.from_json(d["coeff"]) for d in data["terms"]}
        )


def _as_torus(x):
    if isinstance(x, TorusElement):
        return x
    if isinstance(x, CosineElement):
        return embed(x)
    try:
        return TorusElement.scalar(_coerce_scalar(x))
    except TypeError:
        return NotImplemented


def exponential(p, q, coeff=1):
    return TorusElement({(p, q): coeff})


l = exponential(1, 0)
m = exponential(0, 1)


def qt_multiply(a, b):
    """Bilinear extension of ``e_{p,q} * e_{r,s} = t^{ps-qr} e_{p+r,q+s}``."""
    out = {}
    for (p, q), c in a._terms.items():
        for (r, s), d in b._terms.items():
            _accumulate(out, (p + r, q + s), (c * d).shift(p * s - q * r))
    return TorusElement._raw(out)


class CosineElement:
    """Finite sum ``sum c_{p,q} (p,q)_T`` over the fundamental domain.

    ``(0,0)_T`` is the scalar 2, so a scalar ``s`` has coefficient ``s/2`` on
    the ``(0,0)`` key.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (p, q), c in dict(terms).items():
                c = _coerce_scalar(c)
                if c:
                    _accumulate(clean, normalize_pair(int(p), int(q)), c)
        self._terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def scalar(cls, c):
        return cls({(0, 0): _coerce_scalar(c) * Fraction(1, 2)})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, p, q):
        return self._terms.get(normalize_pair(p, q), ZERO)

    def scalar_part(self):
        """Coefficient of the identity, i.e. ``2 * c_{0,0}``."""
        return self._terms.get((0, 0), ZERO) * 2

    def support(self):
        return set(self._terms)

    def max_p(self):
        return max(p for p, _ in self._terms) if self._terms else None

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __add__(self, other):
        other = _as_cosine(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(out, k, c)
        return CosineElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return CosineElement._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_cosine(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CosineElement):
            return cosine_multiply(self, other)
        try:
            c = _coerce_scalar(other)
        except TypeError:
            return NotImplemented
        if not c:
            return CosineElement()
        return CosineElement._raw({k: v * c for k, v in self._terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        other = _as_cosine(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map_coefficients(self, fn):
        return CosineElement({k: fn(c) for k, c in self._terms.items()})

    def __str__(self):
        pieces = []
        for (p, q), c in self.items():
            if (p, q) == (0, 0):
                pieces.append((None, c * 2))
            else:
                pieces.append((f"({p},{q})", c))
        return _format_sum(pieces)

    def __repr__(self):
        return f"CosineElement('{self}')"

    def to_json(self):
        return {
            "type": "torus",
            "basis": "cosine",
            "terms": [{"p": p, "q": q, "coeff": c.to_json()} for (p, q), c in self.items()],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            {(d["p"], d["q"]): LaurentPolynomial.from_json(d["coeff"]) for d in data["terms"]}
        )


def _as_cosine(x):
    if isinstance(x, CosineElement):
        return x
    try:
        return CosineElement.scalar(_coerce_scalar(x))
    except TypeError:
        return NotImplemented


def cosine(p, q, coeff=1):
    """``coeff * (p,q)_T`` for any integer pair."""
    return CosineElement({normalize_pair(p, q): coeff})


def embed(a):
    """Image of a cosine element in the exponential basis."""
    out = {}
    for (p, q), c in a._terms.items():
        if (p, q) == (0, 0):
            _accumulate(out, (0, 0), c * 2)
        else:
            _accumulate(out, (p, q), c)
            _accumulate(out, (-p, -q), c)
    return TorusElement._raw(out)


def to_cosine(a):
    """Inverse of :func:`embed`; raises :class:`NotSymmetric` off its image."""
    if isinstance(a, CosineElement):
        return a
    out = {}
    for (p, q), c in a._terms.items():
        if a._terms.get((-p, -q), ZERO) != c:
            raise NotSymmetric((p, q))
        if (p, q) == (0, 0):
            out[(0, 0)] = c * Fraction(1, 2)
        elif normalize_pair(p, q) == (p, q):
            out[(p, q)] = c
    return CosineElement._raw(out)


def cosine_multiply(a, b):
    """Product in the torus skein algebra, computed through the exponentials."""
    return to_cosine(qt_multiply(embed(a), embed(b)))


def involution(a, kind):
    """``flip_q`` (``e_{p,q} -> e_{p,-q}``) or ``mirror_t`` (``t -> 1/t``).

    ``flip_q`` is a ``Q[t, 1/t]``-linear anti-automorphism:
    ``flip(x * y) == flip(y) * flip(x)``.
    """
    if kind == "flip_q":
        if isinstance(a, CosineElement):
            return CosineElement({(p, -q): c for (p, q), c in a._terms.items()})
        return TorusElement({(p, -q): c for (p, q), c in a._terms.items()})
    if kind == "mirror_t":
        return a.map_coefficients(LaurentPolynomial.invert_t)
    raise ValueError(f"unknown involution {kind!r}")


def _format_sum(pieces):
    # pieces: (generator text or None for a scalar, Laurent coefficient)
    out = []
    for gen, c in pieces:
        if gen is None:
            # scalars are written monomial by monomial
            parts = [(str(LaurentPolynomial({k: v})), False) for k, v in c.items()]
        elif c == ONE:
            parts = [(gen, False)]
        elif c == -ONE:
            parts = [("-" + gen, False)]
        elif len(c) == 1:
            parts = [(f"{c}*{gen}", False)]
        else:
            parts = [(f"({c})*{gen}", False)]
        for text, _ in parts:
            negative = text.startswith("-")
            body = text[1:] if negative else text
            if not out:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
    return "".join(out) if out else "0"
