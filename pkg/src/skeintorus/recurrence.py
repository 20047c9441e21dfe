"""Orthogonality relations and the colored Kauffman bracket solver.

For a peripheral element ``a`` and ``n >= 0`` the right action
``T_n(alpha) . a`` written in the S-basis gives a linear relation
``sum_j c_j kappa_j = 0`` (pairing ``S_j(alpha)`` with the empty link yields
``kappa_j``).  Negative indices fold by ``kappa_{-k} = -kappa_{k-2}``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .errors import (
    DegenerateElement,
    InconsistentRelation,
    LeadingCoefficientVanishes,
    MissingSeed,
    WrongDegree,
)
from .laurent import ONE, ZERO, LaurentPolynomial, divide_exact
from .peripheral import IdealPolynomial, PeripheralElement
from .quantum_torus import CosineElement, embed
from .solid_torus import T, right_act

__all__ = [
    "KappaSequence",
    "LinearRelation",
    "RecurrenceAnalysis",
    "Theorem2Result",
    "orthogonality_relation",
    "leading_coefficient",
    "leading_coefficient_formula",
    "separation_bound",
    "analyze",
    "check_theorem2",
    "solve_kappa",
    "kappa_closed_form_unknot",
]


def _element(a):
    if isinstance(a, PeripheralElement):
        return a.element
    if isinstance(a, CosineElement):
        return a
    raise TypeError(f"expected a peripheral/cosine element, got {type(a).__name__}")


@dataclass
class LinearRelation:
    """``sum_j coefficients[j] * kappa_j == 0``, indices already folded to ``j >= 0``."""

    n: int
    coefficients: dict

    def indices(self):
        return sorted(self.coefficients, reverse=True)

    def coeff(self, j):
        return self.coefficients.get(j, ZERO)

    def top_index(self):
        return max(self.coefficients) if self.coefficients else None

    def is_trivial(self):
        return not self.coefficients

    def residual(self, kappa):
        """Evaluate the left side on ``kappa`` (anything indexable by ``j``)."""
        total = ZERO
        for j, c in self.coefficients.items():
            total = total + c * kappa[j]
        return total

    def __str__(self):
        if not self.coefficients:
            return "0 = 0"
        parts = []
        for j in self.indices():
            parts.append(f"({self.coefficients[j]})*kappa[{j}]")
        return " + ".join(parts) + " = 0"

    def to_json(self):
        return {
            "n": self.n,
            "terms": [
                {"kappa_index": j, "coeff": self.coefficients[j].to_json()} for j in self.indices()
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["n"],
            {d["kappa_index"]: LaurentPolynomial.from_json(d["coeff"]) for d in data["terms"]},
        )


def orthogonality_relation(a, n):
    """Relation obtained by pairing ``T_n(alpha) . a`` with the empty link."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    el = _element(a)
    return LinearRelation(n, right_act(T(n), el).coeffs)


def leading_coefficient(a, n):
    """Coefficient of ``kappa_{n + p_max}`` in the relation at ``n``."""
    el = _element(a)
    if not el:
        raise DegenerateElement("the zero element has no leading coefficient")
    return orthogonality_relation(el, n).coeff(n + el.max_p())


def _top_exponentials(el):
    # exponential-basis coefficients a_{P,q} for P = max p of the support
    expo = embed(el)
    top = max(p for p, _ in expo.support())
    return top, {q: c for (p, q), c in expo.terms.items() if p == top}


def _exponent_sum(blocks, k):
    # sum_q c_q (-1)^q t^{k q}
    total = ZERO
    for q, c in blocks.items():
        total = total + c.shift(k * q) * (-1 if q % 2 else 1)
    return total


def leading_coefficient_formula(a, n):
    """``sum_q a_{P,q} (-1)^q t^{(2n+2+P) q}`` over the top exponentials.

    Equals :func:`leading_coefficient` for ``n >= 1``; at ``n = 0`` the
    relation carries an extra factor 2 from ``T_0 = 2``.
    """
    el = _element(a)
    if not el:
        raise DegenerateElement("the zero element has no leading coefficient")
    top, blocks = _top_exponentials(el)
    return _exponent_sum(blocks, 2 * n + 2 + top)


def separation_bound(blocks, offset):
    """Smallest ``N >= 0`` with ``(2N + offset) * min_gap > degree span``.

    For ``n >= N`` the blocks ``c_q t^{kq}`` have disjoint t-supports, so
    their sum cannot vanish.  A single block never vanishes: bound 0.
    """
    qs = sorted(blocks)
    if len(qs) < 2:
        return 0
    gap = min(b - a for a, b in zip(qs, qs[1:]))
    hi = max(c.degree() for c in blocks.values())
    lo = min(c.valuation() for c in blocks.values())
    span = hi - lo
    n = 0
    while (2 * n + offset) * gap <= span:
        n += 1
    return n


@dataclass
class RecurrenceAnalysis:
    p_max: int
    vanishing_n: list
    nu: int
    separation_bound: int

    def to_json(self):
        return {
            "p_max": self.p_max,
            "vanishing_n": list(self.vanishing_n),
            "nu": self.nu,
            "separation_bound": self.separation_bound,
        }


def analyze(a):
    """Enumerate every ``n >= 0`` at which the leading coefficient vanishes."""
    el = _element(a)
    if not el:
        raise DegenerateElement("cannot analyze the zero element")
    top, blocks = _top_exponentials(el)
    bound = separation_bound(blocks, 2 + top)
    vanishing = [n for n in range(bound) if not _exponent_sum(blocks, 2 * n + 2 + top)]
    nu = vanishing[-1] + 1 if vanishing else 0
    return RecurrenceAnalysis(top, vanishing, nu, bound)


@dataclass
class Theorem2Result:
    holds: bool
    separation_bound: int
    violating_n: list = field(default_factory=list)

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {
            "holds": self.holds,
            "separation_bound": self.separation_bound,
            "violating_n": list(self.violating_n),
        }


def check_theorem2(poly):
    """Test ``sum_q gamma_{2,q} (-1)^q t^{(2n+2) q}`` for identical vanishing.

    Only ``n`` below the separation bound need checking; past it the sum is
    nonzero automatically.
    """
    if not isinstance(poly, IdealPolynomial):
        raise TypeError("check_theorem2 expects an IdealPolynomial")
    deg = poly.l_degree()
    if deg != 2:
        raise WrongDegree(f"l-degree is {deg}, expected 2")
    blocks = {q: c for (p, q), c in poly.terms.items() if p == 2}
    bound = separation_bound(blocks, 2)
    bad = [n for n in range(bound) if not _exponent_sum(blocks, 2 * n + 2)]
    return Theorem2Result(not bad, bound, bad)


class KappaSequence:
    """Colored Kauffman brackets ``kappa_n`` with negative-index folding.

    ``kappa_0 = 1``, ``kappa_{-1} = 0`` and ``kappa_{-k} = -kappa_{k-2}``.
    When built with an element, reading an unknown index extends the table
    through the orthogonality relations.
    """

    def __init__(self, element=None, seed=None):
        self.element = _element(element) if element is not None else None
        self._table = {}
        self._seeded = set()
        self._next_n = 0
        self._lock = threading.RLock()
        for j, v in (seed or {}).items():
            j = int(j)
            if j < 1:
                raise ValueError("seed indices must be >= 1 (kappa_0 and below are fixed)")
            self._table[j] = LaurentPolynomial.coerce(v)
            self._seeded.add(j)

    def is_known(self, j):
        return j <= 0 or j in self._table

    def known_upto(self):
        n = 0
        while n + 1 in self._table:
            n += 1
        return n

    def __getitem__(self, j):
        if j == 0:
            return ONE
        if j == -1:
            return ZERO
        if j < -1:
            return -self[-j - 2]
        if j not in self._table:
            if self.element is None:
                raise KeyError(j)
            self.extend(j)
        return self._table[j]

    def values(self, n_max):
        return [self[j] for j in range(n_max + 1)]

    def extend(self, n_max):
        """Fill the table up to ``kappa_{n_max}``."""
        if self.element is None:
            raise ValueError("no element attached; cannot extend")
        with self._lock:
            p_max = self.element.max_p()
            while not all(j in self._table for j in range(1, n_max + 1)):
                n = self._next_n
                if n > n_max + 1:
                    missing = [j for j in range(1, n_max + 1) if j not in self._table]
                    raise MissingSeed(n, missing)
                self._step(n, p_max)
                self._next_n = n + 1
        return self

    def _step(self, n, p_max):
        rel = orthogonality_relation(self.element, n)
        target = n + p_max
        unknown = sorted((j for j in rel.coefficients if not self.is_known(j)), reverse=True)
        if target > 0 and not self.is_known(target) and target not in rel.coefficients:
            raise LeadingCoefficientVanishes(n, target)
        if not unknown:
            res = rel.residual(self)
            if res:
                raise InconsistentRelation(n, res)
            return
        if len(unknown) > 1:
            raise MissingSeed(n, unknown[1:])
        j = unknown[0]
        rest = ZERO
        for i, c in rel.coefficients.items():
            if i != j:
                rest = rest + c * self[i]
        # NotDivisible here means element and seed are inconsistent
        self._table[j] = divide_exact(-rest, rel.coefficients[j])

    def to_json(self, n_max):
        return {"kappa": [{"n": j, "value": self[j].to_json()} for j in range(n_max + 1)]}


def solve_kappa(a, seed=None, n_max=10):
    """Solve the orthogonality recursion for ``kappa_1 .. kappa_{n_max}``."""
    el = _element(a)
    if not el:
        raise DegenerateElement("cannot solve with the zero element")
    return KappaSequence(el, seed).extend(n_max)


def kappa_closed_form_unknot(n):
    """``(-1)^n (t^{2n+2} - t^{-2n-2}) / (t^2 - t^{-2})``, divided exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    num = LaurentPolynomial({2 * n + 2: 1, -2 * n - 2: -1})
    q = divide_exact(num, LaurentPolynomial({2: 1, -2: -1}))
    return -q if n % 2 else q
