"""Chebyshev families ``T_n`` and ``S_n`` for every integer index.

Both satisfy ``P_{n+1} = x P_n - P_{n-1}``.  ``T`` starts from ``T_0 = 2``,
``T_1 = x``; ``S`` from ``S_0 = 1``, ``S_1 = x``.  Negative indices follow
``T_{-n} = T_n`` and ``S_{-k} = -S_{k-2}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

__all__ = ["ChebyshevPoly", "chebyshev", "t_in_s_basis", "poly_mul_x", "poly_sub"]


@dataclass(frozen=True)
class ChebyshevPoly:
    kind: str
    index: int
    coefficients: dict = field(compare=True, hash=False)

    def degree(self):
        return max(self.coefficients) if self.coefficients else -1

    def __getitem__(self, k):
        return self.coefficients.get(k, 0)

    def __str__(self):
        if not self.coefficients:
            return "0"
        out = []
        for k in sorted(self.coefficients, reverse=True):
            c = self.coefficients[k]
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k == 0:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append(("-" if c < 0 else "") + body if not out else f" {sign} {body}")
        return "".join(out)


def poly_mul_x(p):
    return {k + 1: c for k, c in p.items()}


def poly_sub(p, q):
    out = dict(p)
    for k, c in q.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


@lru_cache(maxsize=None)
def _forward(kind, n):
    # n >= 0, built iteratively so deep indices do not recurse
    if kind == "T":
        prev, cur = {0: 2}, {1: 1}
    else:
        prev, cur = {0: 1}, {1: 1}
    if n == 0:
        return tuple(sorted(prev.items()))
    for _ in range(n - 1):
        prev, cur = cur, poly_sub(poly_mul_x(cur), prev)
    return tuple(sorted(cur.items()))


def chebyshev(kind, n):
    """Return ``T_n`` or ``S_n`` as a :class:`ChebyshevPoly`.

    >>> str(chebyshev("T", 2))
    'x^2 - 2'
    >>> str(chebyshev("S", -2))
    '-1'
    """
    if kind not in ("T", "S"):
        raise ValueError(f"kind must be 'T' or 'S', got {kind!r}")
    n = int(n)
    if n >= 0:
        coeffs = dict(_forward(kind, n))
    elif kind == "T":
        coeffs = dict(_forward("T", -n))
    elif n == -1:
        coeffs = {}
    else:
        coeffs = {k: -c for k, c in _forward("S", -n - 2)}
    return ChebyshevPoly(kind, n, coeffs)


def t_in_s_basis(n):
    """Expansion of ``T_n`` over ``{S_k : k >= 0}``, as ``{k: coefficient}``.

    Uses ``T_n = S_n - S_{n-2}``; the folded ``S_{-1} = 0`` and ``S_{-2} = -1``
    make ``T_0 = 2 S_0`` and ``T_1 = S_1``.
    """
    if n < 0:
        raise ValueError("t_in_s_basis requires n >= 0")
    if n == 0:
        return {0: 2}
    if n == 1:
        return {1: 1}
    return {n: 1, n - 2: -1}


def fold_s_index(k):
    """Rewrite ``S_k`` for any integer ``k`` as ``sign * S_j`` with ``j >= 0``.

    Returns ``(sign, j)``; sign 0 means ``S_k`` vanishes.
    """
    if k >= 0:
        return 1, k
    if k == -1:
        return 0, 0
    return -1, -k - 2
