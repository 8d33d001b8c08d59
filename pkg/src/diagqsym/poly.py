"""Sparse polynomials in x1..xn, y1..yn with exact rational coefficients.

A monomial is the pair ``(support, exponent)``: a strictly increasing tuple
of variable indices and a bicomposition of the same length, so
``((1, 3), ((2, 1), (0, 1)))`` is ``x1^2*y1*y3``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial, prod

from . import bicomp
from .bicomp import Bicomposition

Monomial = tuple[tuple[int, ...], Bicomposition]

ONE_MONOMIAL: Monomial = ((), ())


def monomial_from_dict(exps: dict[int, tuple[int, int]]) -> Monomial:
    """Canonical monomial from ``{index: (xdeg, ydeg)}``; zero columns dropped."""
    items = sorted((i, e) for i, e in exps.items() if e != (0, 0))
    return tuple(i for i, _ in items), tuple(e for _, e in items)


def monomial_to_dict(m: Monomial) -> dict[int, tuple[int, int]]:
    return dict(zip(m[0], m[1]))


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    exps = monomial_to_dict(m1)
    for i, e in zip(*m2):
        exps[i] = bicomp.vec_add(exps.get(i, (0, 0)), e)
    return monomial_from_dict(exps)


def monomial_bidegree(m: Monomial) -> tuple[int, int]:
    return bicomp.bidegree(m[1])


def monomial_key(m: Monomial):
    return (monomial_bidegree(m), m[0], m[1])


def monomial_norm(m: Monomial) -> int:
    """<m, m> for the differential scalar product."""
    return prod(factorial(a) * factorial(b) for a, b in m[1])


def format_monomial(m: Monomial) -> str:
    if not m[0]:
        return "1"
    factors = []
    for i, (a, b) in zip(*m):
        for var, e in (("x", a), ("y", b)):
            if e == 1:
                factors.append(f"{var}{i}")
            elif e > 1:
                factors.append(f"{var}{i}^{e}")
    return "*".join(factors)


def _fmt_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Polynomial:
    """Immutable element of Q[x1..xn, y1..yn]."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    if m[0] and m[0][-1] > n:
                        raise ValueError(f"variable index {m[0][-1]} exceeds n={n}")
                    clean[m] = c
        self.terms: dict[Monomial, Fraction] = clean

    @classmethod
    def monomial(cls, n: int, m: Monomial, coeff=1) -> Polynomial:
        return cls(n, {m: coeff})

    @classmethod
    def one(cls, n: int) -> Polynomial:
        return cls(n, {ONE_MONOMIAL: 1})

    @classmethod
    def x(cls, i: int, n: int) -> Polynomial:
        return cls(n, {((i,), ((1, 0),)): 1})

    @classmethod
    def y(cls, i: int, n: int) -> Polynomial:
        return cls(n, {((i,), ((0, 1),)): 1})

    def _check(self, other: Polynomial):
        if self.n != other.n:
            raise ValueError(f"mismatched number of variables: {self.n} vs {other.n}")

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]))

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.n, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, c) -> Polynomial:
        return Polynomial(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def bidegrees(self) -> set[tuple[int, int]]:
        return {monomial_bidegree(m) for m in self.terms}

    def is_bihomogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def __repr__(self):
        return f"Polynomial({self.n}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for m, c in p.items():
        mono = format_monomial(m)
        if mono == "1":
            out.append(_fmt_coeff(c))
        elif c == 1:
            out.append(mono)
        elif c == -1:
            out.append("-" + mono)
        else:
            out.append(f"{_fmt_coeff(c)}*{mono}")
    return " + ".join(out).replace("+ -", "- ")


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    out: dict = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            m = monomial_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return Polynomial(p.n, out)


def _diff_monomial(mp: Monomial, mq: Monomial):
    """Apply the operator mp(d/dx, d/dy) to mq; returns (coefficient, monomial) or None."""
    q_exps = monomial_to_dict(mq)
    coeff = 1
    for i, (a, b) in zip(*mp):
        qa, qb = q_exps.get(i, (0, 0))
        if qa < a or qb < b:
            return None
        coeff *= (factorial(qa) // factorial(qa - a)) * (factorial(qb) // factorial(qb - b))
        q_exps[i] = (qa - a, qb - b)
    return coeff, monomial_from_dict(q_exps)


def apply_diff(p: Polynomial, q: Polynomial) -> Polynomial:
    """p(d/dx, d/dy) applied to q."""
    p._check(q)
    out: dict = {}
    for mp, cp in p.terms.items():
        for mq, cq in q.terms.items():
            r = _diff_monomial(mp, mq)
            if r is not None:
                k, m = r
                out[m] = out.get(m, 0) + cp * cq * k
    return Polynomial(p.n, out)


def scalar_product(p: Polynomial, q: Polynomial):
    """Constant term of p(d/dx, d/dy) q; monomials are orthogonal."""
    p._check(q)
    total = 0
    for m, c in p.terms.items():
        if m in q.terms:
            total += c * q.terms[m] * monomial_norm(m)
    return Fraction(total)


def bidegree_component(p: Polynomial, d: tuple[int, int]) -> Polynomial:
    d = tuple(d)
    return Polynomial(p.n, {m: c for m, c in p.terms.items() if monomial_bidegree(m) == d})


def _exponent_vectors(n: int, deg: int):
    """All length-n nonnegative integer vectors summing to deg."""
    for combo in combinations_with_replacement(range(n), deg):
        v = [0] * n
        for i in combo:
            v[i] += 1
        yield v


def monomial_basis(n: int, d: tuple[int, int]) -> list[Monomial]:
    """All monomials of bidegree d in n variables per set, in canonical order."""
    out = []
    for xs in _exponent_vectors(n, d[0]):
        for ys in _exponent_vectors(n, d[1]):
            out.append(monomial_from_dict({i + 1: (xs[i], ys[i]) for i in range(n)}))
    out.sort(key=monomial_key)
    return out


def monomial_count(n: int, d: tuple[int, int]) -> int:
    if n == 0:
        return int(d == (0, 0))
    return comb(d[0] + n - 1, n - 1) * comb(d[1] + n - 1, n - 1)
