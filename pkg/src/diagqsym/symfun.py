"""Symmetric functions in the power-sum basis, enough to check the bigraded
Frobenius characteristic of Q[x, y] under the Hivert action."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial, prod

from . import action, bicomp
from .poly import _fmt_coeff

Partition = tuple[int, ...]

MAX_TRACE_N = 5


def partitions(n: int, maxpart: int | None = None):
    """Partitions of n in reverse lexicographic order."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def z_of(lam: Partition) -> int:
    return prod(k ** m * factorial(m) for k, m in Counter(lam).items())


class SymP:
    """Homogeneous symmetric function of degree n, as {partition: coefficient} over p_lambda."""

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms: dict[Partition, Fraction] = {}
        for lam, c in (terms or {}).items():
            lam = tuple(sorted(lam, reverse=True))
            if sum(lam) != n:
                raise ValueError(f"partition {lam} does not have size {n}")
            if c:
                self.terms[lam] = self.terms.get(lam, 0) + Fraction(c)
        self.terms = {k: v for k, v in self.terms.items() if v}

    def __eq__(self, other):
        if isinstance(other, SymP):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("adding symmetric functions of different degrees")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SymP(self.n, out)

    def scale(self, c):
        return SymP(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymP):
            return p_mult(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __repr__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), reverse=True)
        return " + ".join(f"{_fmt_coeff(c)}*p[{','.join(map(str, lam))}]" for lam, c in items)


def p(lam) -> SymP:
    lam = tuple(lam)
    return SymP(sum(lam), {lam: 1})


def h_in_p(k: int) -> SymP:
    """h_k = sum over partitions of k of p_lambda / z_lambda."""
    return SymP(k, {lam: Fraction(1, z_of(lam)) for lam in partitions(k)})


def p_mult(u: SymP, v: SymP) -> SymP:
    out: dict = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            lam = tuple(sorted(a + b, reverse=True))
            out[lam] = out.get(lam, 0) + c * d
    return SymP(u.n + v.n, out)


def frobenius_of_character(n: int, chi) -> SymP:
    """(1/n!) sum over S_n of chi(sigma) p_{cycle type of sigma}."""
    out: dict = {}
    for s in action.all_perms(n):
        v = chi(s)
        if v:
            lam = action.cycle_type(s)
            out[lam] = out.get(lam, 0) + v
    return SymP(n, {lam: Fraction(v, factorial(n)) for lam, v in out.items()})


def frobenius_from_traces(n: int, d: tuple[int, int]) -> SymP:
    if n > MAX_TRACE_N:
        raise ValueError(f"trace sum over S_{n} refused (limit n <= {MAX_TRACE_N})")
    return frobenius_of_character(n, lambda s: action.hivert_trace(s, n, d))


def length_counts(d: tuple[int, int]) -> dict[int, int]:
    """c_k(d): number of bicompositions of bidegree d and length k."""
    return dict(Counter(len(c) for c in bicomp.enumerate_bicompositions(d)))


def frobenius_from_formula(n: int, d: tuple[int, int]) -> SymP:
    """sum_k c_k(d) h_k h_{n-k}."""
    out = SymP(n)
    for k, ck in length_counts(d).items():
        if k <= n:
            out = out + (h_in_p(k) * h_in_p(n - k)).scale(ck)
    return out


def k_space_frobenius(a: bicomp.Bicomposition, n: int) -> SymP:
    """Frobenius characteristic of the span of monomials with exponent exactly a."""
    k = len(a)
    if k > n:
        raise ValueError(f"bicomposition of length {k} has no monomials in {n} variables")
    supports = action.k_subsets(n, k)
    monomials = [(i, tuple(a)) for i in supports]
    return frobenius_of_character(n, lambda s: action.fixed_monomial_count(s, monomials))


def qt_kernel_power(k: int, trunc: tuple[int, int]):
    """((q + t - qt) / ((1 - q)(1 - t)))^k as a truncated bivariate series."""
    from .series import BivariateSeries, geometric

    num = BivariateSeries({(1, 0): 1, (0, 1): 1, (1, 1): -1}, trunc)
    base = num * geometric((1, 0), trunc) * geometric((0, 1), trunc)
    return base ** k
