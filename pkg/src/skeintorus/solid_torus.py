"""Skein module of the solid torus, ``Q[t, 1/t][alpha]``, and the torus action.

Elements carry one of three bases: monomials ``alpha^k``, ``T_k(alpha)`` or
``S_k(alpha)``.  The action of a torus skein ``a`` on ``T_n(alpha)`` lifts
``T_n(alpha)`` to ``(n,0)_T`` on the boundary, multiplies in the torus skein
algebra and projects back with the x-map.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import chebyshev, fold_s_index
from .laurent import ZERO, LaurentPolynomial
from .quantum_torus import cosine, cosine_multiply, involution

__all__ = [
    "SolidTorusElement",
    "BASES",
    "alpha",
    "T",
    "S",
    "convert_basis",
    "x_pq",
    "x_map",
    "left_act",
    "right_act",
    "xpq_recurrence_check",
    "RecurrenceReport",
]

BASES = ("monomial", "T", "S")
_GEN = {"monomial": "a^{}", "T": "T[{}]", "S": "S[{}]"}


def _accumulate(out, k, c):
    s = out.get(k)
    s = c if s is None else s + c
    if s:
        out[k] = s
    else:
        out.pop(k, None)


class SolidTorusElement:
    """Finite ``{k: coefficient}`` vector over one of the three bases.

    Negative indices are folded on construction: ``T_{-k} = T_k`` and
    ``S_{-k} = -S_{k-2}``.  Equality compares the underlying element, not
    the basis it happens to be written in.
    """

    __slots__ = ("basis", "_coeffs")

    def __init__(self, basis, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        out = {}
        for k, c in (coeffs or {}).items():
            c = LaurentPolynomial.coerce(c)
            if not c:
                continue
            k = int(k)
            if k < 0:
                if basis == "monomial":
                    raise ValueError("negative powers of alpha are not in the module")
                if basis == "T":
                    k = -k
                else:
                    sign, k = fold_s_index(k)
                    if not sign:
                        continue
                    c = c * sign
            _accumulate(out, k, c)
        self._coeffs = out

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def coeff(self, k):
        return self._coeffs.get(k, ZERO)

    def items(self):
        return sorted(self._coeffs.items(), reverse=True)

    def degree(self):
        return max(self._coeffs) if self._coeffs else None

    def __bool__(self):
        return bool(self._coeffs)

    def to(self, basis):
        return convert_basis(self, basis)

    def __add__(self, other):
        other = _as_solid(other, self.basis)
        if other is NotImplemented:
            return NotImplemented
        other = convert_basis(other, self.basis)
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            _accumulate(out, k, c)
        return SolidTorusElement(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SolidTorusElement(self.basis, {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        other = _as_solid(other, self.basis)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SolidTorusElement):
            # commutative polynomial product in alpha
            a = convert_basis(self, "monomial")._coeffs
            b = convert_basis(other, "monomial")._coeffs
            out = {}
            for i, c in a.items():
                for j, d in b.items():
                    _accumulate(out, i + j, c * d)
            return convert_basis(SolidTorusElement("monomial", out), self.basis)
        try:
            c = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return SolidTorusElement(self.basis, {k: v * c for k, v in self._coeffs.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = convert_basis(SolidTorusElement("monomial", {0: 1}), self.basis)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = _as_solid(other, self.basis)
        if other is NotImplemented:
            return NotImplemented
        return convert_basis(self, "S")._coeffs == convert_basis(other, "S")._coeffs

    def __hash__(self):
        return hash(frozenset(convert_basis(self, "S")._coeffs.items()))

    def __str__(self):
        if not self._coeffs:
            return "0"
        gen = _GEN[self.basis]
        out = []
        for k, c in self.items():
            if self.basis == "monomial" and k == 0:
                parts = [str(LaurentPolynomial({e: v})) for e, v in c.items()]
            else:
                g = "a" if (self.basis == "monomial" and k == 1) else gen.format(k)
                if c == 1:
                    parts = [g]
                elif c == -1:
                    parts = ["-" + g]
                elif len(c) == 1:
                    parts = [f"{c}*{g}"]
                else:
                    parts = [f"({c})*{g}"]
            for text in parts:
                neg = text.startswith("-")
                body = text[1:] if neg else text
                if not out:
                    out.append(("-" if neg else "") + body)
                else:
                    out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"SolidTorusElement({self.basis!r}, '{self}')"

    def to_json(self):
        return {
            "type": "solid_torus",
            "basis": self.basis,
            "terms": [{"index": k, "coeff": c.to_json()} for k, c in self.items()],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["basis"],
            {d["index"]: LaurentPolynomial.from_json(d["coeff"]) for d in data["terms"]},
        )


def _as_solid(x, basis):
    if isinstance(x, SolidTorusElement):
        return x
    try:
        c = LaurentPolynomial.coerce(x)
    except TypeError:
        return NotImplemented
    return SolidTorusElement("monomial", {0: c})


alpha = SolidTorusElement("monomial", {1: 1})


def T(n):
    return SolidTorusElement("T", {n: 1})


def S(n):
    return SolidTorusElement("S", {n: 1})


def convert_basis(u, target):
    """Re-express ``u`` in ``target`` basis exactly."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if u.basis == target:
        return u
    if u.basis == "T" and target == "S":
        # T_k = S_k - S_{k-2}, negative indices folded by the constructor
        out = SolidTorusElement("S")
        acc = {}
        for k, c in u._coeffs.items():
            _accumulate(acc, k, c)
            sign, j = fold_s_index(k - 2)
            if sign:
                _accumulate(acc, j, c * -sign)
        out._coeffs = acc
        return out
    mono = _to_monomial(u)
    if target == "monomial":
        return mono
    return _from_monomial(mono, target)


def _to_monomial(u):
    if u.basis == "monomial":
        return u
    out = {}
    for k, c in u._coeffs.items():
        for e, v in chebyshev(u.basis, k).coefficients.items():
            _accumulate(out, e, c * v)
    return SolidTorusElement("monomial", out)


def _from_monomial(u, target):
    rem = dict(u._coeffs)
    out = {}
    while rem:
        d = max(rem)
        c = rem[d]
        if target == "T" and d == 0:
            c = c * Fraction(1, 2)
        out[d] = c
        for e, v in chebyshev(target, d).coefficients.items():
            _accumulate(rem, e, -(c * v))
    return SolidTorusElement(target, out)


def x_pq(p, q):
    """Closed form ``x_{p,q} = t^{-pq}((-t^{-2})^q S_p - (-t^2)^q S_{p-2})``.

    Valid for every integer pair; ``x_{-p,-q} == x_{p,q}``.
    """
    sign = -1 if q % 2 else 1
    a = LaurentPolynomial({-p * q - 2 * q: sign})
    b = LaurentPolynomial({-p * q + 2 * q: -sign})
    return SolidTorusElement("S", {p: a}) + SolidTorusElement("S", {p - 2: b})


def x_map(a):
    """Project a torus skein into the solid torus, in the S-basis."""
    acc = {}
    for (p, q), c in a._terms.items():
        if (p, q) == (0, 0):
            _accumulate(acc, 0, c * 2)
            continue
        for k, v in x_pq(p, q)._coeffs.items():
            _accumulate(acc, k, v * c)
    out = SolidTorusElement("S")
    out._coeffs = acc
    return out


def left_act(a, u):
    """``a . u`` for a torus skein ``a`` acting on the left of ``u``."""
    acc = SolidTorusElement("S")
    for n, c in convert_basis(u, "T")._coeffs.items():
        # T_0 = 2 lifts to (0,0)_T, which is also the scalar 2
        acc = acc + x_map(cosine_multiply(a, cosine(n, 0))) * c
    return acc


def right_act(u, a):
    """``u . a``, which equals ``flip_q(a) . u``."""
    return left_act(involution(a, "flip_q"), u)


@dataclass
class RecurrenceReport:
    ok: bool
    checked: int
    counterexample: tuple | None = None

    def __bool__(self):
        return self.ok


def xpq_recurrence_check(p_max, q_range):
    """Check ``x_{p+1,q} = t^{-q} (1,0).x_{p,q} - t^{-2q} x_{p-1,q}``.

    The left side is the closed form; the right side acts with ``(1,0)_T``
    through lift-multiply-project.  Covers ``1 <= p < p_max``.
    """
    if p_max < 2:
        raise ValueError("p_max must be at least 2")
    gen = cosine(1, 0)
    checked = 0
    for q in q_range:
        for p in range(1, p_max):
            lhs = x_pq(p + 1, q)
            rhs = (left_act(gen, x_pq(p, q)) * LaurentPolynomial({-q: 1})
                   - x_pq(p - 1, q) * LaurentPolynomial({-2 * q: 1}))
            checked += 1
            if lhs != rhs:
                return RecurrenceReport(False, checked, (p, q))
    return RecurrenceReport(True, checked)
