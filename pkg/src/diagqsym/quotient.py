"""Bigraded dimensions of quotient spaces, computed by exact elimination.

* ``hilbert_dq``: Q[x, y] modulo the ideal generated by the M_a, a nonempty.
* ``hilbert_r_diag``: DQSym_n modulo the ideal generated by the diagonally
  symmetric polynomials without constant term.
* ``hilbert_r_univariate``: the one-set analogue QSym_n / <Sym_n^+>.

Every dimension is computed one bidegree at a time; the spaces are
bihomogeneous so the components never interact.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import bicomp, dqsym, linalg
from .linalg import Echelon
from .poly import Monomial, Polynomial, monomial_basis, monomial_bidegree, monomial_mul, monomial_norm
from .series import BivariateSeries, UnivariateSeries, geometric
from .symfun import partitions, z_of

log = logging.getLogger(__name__)

Bidegree = tuple[int, int]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def bidegrees_of_total(s: int) -> list[Bidegree]:
    return [(a, s - a) for a in range(s + 1)]


def bidegrees_upto_total(s: int) -> list[Bidegree]:
    return [d for k in range(s + 1) for d in bidegrees_of_total(k)]


@dataclass
class HilbertMatrix:
    """Bigraded dimensions; ``entries[(d1, d2)]`` is the dimension in bidegree (d1, d2).

    Rows are displayed top to bottom by decreasing t-degree (the bidegree's
    second entry); row entries run over increasing q-degree.
    """

    n: int
    entries: dict[Bidegree, int]
    degree: int | None = None
    band: dict[Bidegree, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.degree is None:
            nz = [a + b for (a, b), v in self.entries.items() if v]
            self.degree = max(nz, default=0)

    def __getitem__(self, d: Bidegree) -> int:
        return self.entries.get(tuple(d), 0)

    def rows(self) -> list[list[int]]:
        k = self.degree
        return [[self[i, j] for i in range(k - j + 1)] for j in range(k, -1, -1)]

    def band_vanishes(self) -> bool:
        return all(v == 0 for v in self.band.values())

    def is_symmetric(self) -> bool:
        return all(self[b, a] == v for (a, b), v in self.entries.items())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "convention": "cartesian",
            "rows": self.rows(),
            "bidegrees": [[a, b, v] for (a, b), v in sorted(self.entries.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> HilbertMatrix:
        entries = {(a, b): v for a, b, v in data["bidegrees"]}
        rows = data["rows"]
        return cls(data["n"], entries, degree=len(rows) - 1)

    @classmethod
    def from_rows(cls, n: int, rows: list[list[int]]) -> HilbertMatrix:
        """Inverse of ``rows``: top row is the highest t-degree."""
        k = len(rows) - 1
        entries = {}
        for r, row in enumerate(rows):
            for i, v in enumerate(row):
                entries[i, k - r] = v
        return cls(n, entries, degree=k)

    def render(self) -> str:
        rows = self.rows()
        width = max((len(str(v)) for row in rows for v in row), default=1)
        lines = []
        for row in rows:
            cells = [(str(v) if v else "").rjust(width) for v in row]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


# -- ideal components and ranks ------------------------------------------------

def ideal_component(gens: list[Polynomial], n: int, d: Bidegree) -> list[Polynomial]:
    """Spanning set m*g of the bidegree-d part of the ideal generated by ``gens``."""
    d = tuple(d)
    out = []
    for g in gens:
        degs = g.bidegrees()
        if len(degs) != 1:
            if not degs:
                continue
            raise ValueError("ideal generators must be bihomogeneous")
        (e,) = degs
        if e == (0, 0):
            raise ValueError("ideal generators must have no constant term")
        if e[0] > d[0] or e[1] > d[1]:
            continue
        for m in monomial_basis(n, (d[0] - e[0], d[1] - e[1])):
            out.append(Polynomial.monomial(n, m) * g)
    return out


def coordinates(p: Polynomial, index: dict[Monomial, int]) -> dict[int, Fraction]:
    return {index[m]: c for m, c in p.terms.items()}


def exact_rank(vectors: list[Polynomial], n: int, d: Bidegree) -> int:
    d = tuple(d)
    basis = monomial_basis(n, d)
    index = {m: i for i, m in enumerate(basis)}
    ech = Echelon(len(basis))
    for v in vectors:
        if v.n != n:
            raise ValueError("vector has the wrong number of variables")
        if v and v.bidegrees() != {d}:
            raise ValueError(f"vector is not bihomogeneous of bidegree {d}")
        ech.add(coordinates(v, index))
    return ech.rank


def _m_generators(n: int, d: Bidegree):
    """Index bicompositions of the nonzero M_a in n variables with bidegree <= d,
    largest bidegree first."""
    out = []
    for e in sorted(bicomp.bidegrees_upto(d), key=lambda e: -(e[0] + e[1])):
        if e != (0, 0):
            out.extend(bicomp.enumerate_bicompositions(e, n))
    return out


@lru_cache(maxsize=None)
def _dq_echelon(n: int, d: Bidegree) -> tuple[Echelon, tuple[Monomial, ...]]:
    """Echelon form of the bidegree-d part of J_n, in monomial coordinates."""
    basis = monomial_basis(n, d)
    index = {m: i for i, m in enumerate(basis)}
    ech = Echelon(len(basis))
    supports_cache: dict[int, list] = {}
    for a in _m_generators(n, d):
        if ech.full():
            break
        k = len(a)
        if k not in supports_cache:
            from itertools import combinations

            supports_cache[k] = list(combinations(range(1, n + 1), k))
        gen = [(s, a) for s in supports_cache[k]]
        e = bicomp.bidegree(a)
        for m in monomial_basis(n, (d[0] - e[0], d[1] - e[1])):
            vec: dict = {}
            for g in gen:
                j = index[monomial_mul(m, g)]
                vec[j] = vec.get(j, 0) + 1
            ech.add(vec)
            if ech.full():
                break
    log.debug("J_%d at %s: rank %d of %d", n, d, ech.rank, len(basis))
    return ech, tuple(basis)


def dq_dimension(n: int, d: Bidegree) -> int:
    ech, basis = _dq_echelon(n, tuple(d))
    return len(basis) - ech.rank


def hilbert_dq(n: int, band: bool = True) -> HilbertMatrix:
    """Hilbert matrix of Q[x, y] / J_n over total degrees <= n - 1, plus the
    total degree n band (expected to vanish) when ``band`` is set."""
    if n < 1:
        raise ValueError("n must be at least 1")
    entries = {d: dq_dimension(n, d) for d in bidegrees_upto_total(n - 1)}
    extra = {d: dq_dimension(n, d) for d in bidegrees_of_total(n)} if band else {}
    return HilbertMatrix(n, entries, degree=n - 1, band=extra)


@lru_cache(maxsize=None)
def _predicted(n: int) -> dict[Bidegree, int]:
    if n == 1:
        return {(0, 0): 1}
    prev = _predicted(n - 1)
    out = {}
    for a, b in bidegrees_upto_total(n - 1):
        if a + b == n - 1:
            out[a, b] = catalan(n - 1)
        else:
            out[a, b] = sum(v for (i, j), v in prev.items() if i <= a and j <= b)
    return out


def predicted_dq(n: int) -> HilbertMatrix:
    """Matrix predicted by the Catalan diagonal and the cumulative-sum recursion."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return HilbertMatrix(n, dict(_predicted(n)), degree=n - 1)


def hilbert_q(n: int) -> UnivariateSeries:
    """sum_{k<n} (n-k)/(n+k) binom(n+k, k) q^k."""
    if n < 1:
        raise ValueError("n must be at least 1")
    coeffs = {k: Fraction(n - k, n + k) * comb(n + k, k) for k in range(n)}
    return UnivariateSeries(coeffs, n - 1)


# -- harmonics ---------------------------------------------------------------

def harmonics_basis(n: int, d: Bidegree) -> list[Polynomial]:
    """Basis of the orthogonal complement of J_n in bidegree d for the
    differential scalar product."""
    ech, basis = _dq_echelon(n, tuple(d))
    rows = list(ech.rows.values())
    out = []
    for z in linalg.nullspace(rows, len(basis)):
        # <g, h> = sum g_m h_m <m, m>, so h_m = z_m / <m, m>
        terms = {basis[j]: c / monomial_norm(basis[j]) for j, c in z.items()}
        out.append(Polynomial(n, terms))
    return out


# -- conjectured monomial basis ------------------------------------------------

def _phi_monomial(m: Monomial) -> Monomial:
    return m[0], bicomp.phi(m[1])


def _times_power(m: Monomial, n: int, c: int, e: int) -> Monomial:
    if c == 0 and e == 0:
        return m
    return monomial_mul(m, ((n,), ((c, e),)))


@lru_cache(maxsize=None)
def _conjectured(n: int) -> dict[Bidegree, frozenset]:
    if n == 1:
        return {(0, 0): frozenset({((), ())})}
    prev = _conjectured(n - 1)

    def recurrence(i, j):
        out = set()
        for (a, b), ms in prev.items():
            if a <= i and b <= j:
                out.update(_times_power(m, n, i - a, j - b) for m in ms)
        return frozenset(out)

    out = {}
    for i, j in bidegrees_upto_total(n - 2):
        out[i, j] = recurrence(i, j)
    out[n - 1, 0] = recurrence(n - 1, 0)
    for i in range(1, n):
        out[n - 1 - i, i] = frozenset(_phi_monomial(m) for m in out[n - i, i - 1])
    return out


def conjectured_basis(n: int) -> dict[Bidegree, list[Monomial]]:
    """The recursively built monomial set B_n, by bidegree."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return {d: sorted(ms, key=lambda m: (m[0], m[1])) for d, ms in _conjectured(n).items()}


@dataclass
class BasisReport:
    n: int
    ok: bool
    failures: list = field(default_factory=list)
    sizes: dict = field(default_factory=dict)


def basis_report(n: int) -> BasisReport:
    """Check that B_n is independent modulo J_n and has the quotient's size
    in every bidegree of total degree <= n (the last band must be empty)."""
    B = conjectured_basis(n)
    report = BasisReport(n, True)
    for d in bidegrees_upto_total(n):
        cands = B.get(d, [])
        ech, basis = _dq_echelon(n, d)
        dim = len(basis) - ech.rank
        report.sizes[d] = (len(cands), dim)
        if len(cands) != dim:
            report.ok = False
            report.failures.append((d, "size", len(cands), dim))
            continue
        index = {m: i for i, m in enumerate(basis)}
        work = Echelon(len(basis))
        work.rows = dict(ech.rows)
        for m in cands:
            if not work.add({index[m]: 1}):
                report.ok = False
                report.failures.append((d, "dependent", m))
                break
    return report


def basis_check(n: int) -> bool:
    return basis_report(n).ok


# -- DQSym_n modulo diagonally symmetric functions -----------------------------

def dsym_exponents(maxdeg: int) -> list[bicomp.Bivector]:
    return [(a, s - a) for s in range(1, maxdeg + 1) for a in range(s, -1, -1)]


def dsym_generators(n: int, maxdeg: int) -> list[Polynomial]:
    """Polarized power sums sum_i x_i^a y_i^b with 1 <= a + b <= maxdeg."""
    return [dqsym.m_expand((e,), n) for e in dsym_exponents(maxdeg)]


def _r_rank_poly(n: int, d: Bidegree, gen_degree: int) -> int:
    basis = monomial_basis(n, d)
    index = {m: i for i, m in enumerate(basis)}
    ech = Echelon(len(basis))
    for e in dsym_exponents(gen_degree):
        if e[0] > d[0] or e[1] > d[1]:
            continue
        g = dqsym.m_expand((e,), n)
        for c in bicomp.enumerate_bicompositions((d[0] - e[0], d[1] - e[1]), n):
            ech.add(coordinates(dqsym.m_expand(c, n) * g, index))
    return ech.rank


def _r_rank_mbasis(n: int, d: Bidegree, gen_degree: int) -> int:
    basis = bicomp.enumerate_bicompositions(d, n)
    index = {c: i for i, c in enumerate(basis)}
    ech = Echelon(len(basis))
    for e in dsym_exponents(gen_degree):
        if e[0] > d[0] or e[1] > d[1]:
            continue
        for c in bicomp.enumerate_bicompositions((d[0] - e[0], d[1] - e[1]), n):
            u = dqsym.truncate(dqsym.M(c) * dqsym.M((e,)), n)
            ech.add({index[k]: v for k, v in u.terms.items()})
    return ech.rank


def r_dimension(n: int, d: Bidegree, gen_degree: int | None = None, route: str = "poly") -> int:
    if gen_degree is None:
        gen_degree = n
    d = tuple(d)
    dim = len(bicomp.enumerate_bicompositions(d, n))
    rank_fn = {"poly": _r_rank_poly, "mbasis": _r_rank_mbasis}[route]
    return dim - rank_fn(n, d, gen_degree)


def r_display_degree(n: int) -> int:
    """Total degree shown for R_n: the degree of the univariate series Psi_n."""
    return psi(n).degree()


def hilbert_r_diag(n: int, maxdeg: int | None = None, gen_degree: int | None = None,
                   route: str = "poly") -> HilbertMatrix:
    """Hilbert matrix of DQSym_n / <DSym_n^+> for total degree <= maxdeg, plus
    one extra band of total degree maxdeg + 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if maxdeg is None:
        maxdeg = r_display_degree(n)
    entries = {d: r_dimension(n, d, gen_degree, route) for d in bidegrees_upto_total(maxdeg)}
    band = {d: r_dimension(n, d, gen_degree, route) for d in bidegrees_of_total(maxdeg + 1)}
    return HilbertMatrix(n, entries, degree=maxdeg, band=band)


def hilbert_r_univariate(n: int, trunc: int | None = None) -> UnivariateSeries:
    """Dimensions of QSym_n / <e_1, ..., e_n> degree by degree."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if trunc is None:
        trunc = r_display_degree(n) + 1
    coeffs = {}
    for deg in range(trunc + 1):
        basis = monomial_basis(n, (deg, 0))
        index = {m: i for i, m in enumerate(basis)}
        comps = bicomp.enumerate_bicompositions((deg, 0), n)
        ech = Echelon(len(basis))
        for k in range(1, min(n, deg) + 1):
            ek = dqsym.m_expand(((1, 0),) * k, n)
            for c in bicomp.enumerate_bicompositions((deg - k, 0), n):
                ech.add(coordinates(dqsym.m_expand(c, n) * ek, index))
        coeffs[deg] = len(comps) - ech.rank
    return UnivariateSeries(coeffs, trunc)


# -- closed forms ----------------------------------------------------------------

def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def q_factorial(n: int) -> list[int]:
    out = [1]
    for k in range(1, n + 1):
        out = _pmul(out, [1] * k)
    return out


@lru_cache(maxsize=None)
def _psi(n: int) -> tuple:
    if n == 0:
        return (1,)
    prev = list(_psi(n - 1))
    fact = q_factorial(n)
    diff = [0] * max(len(fact), len(prev))
    for i, v in enumerate(fact):
        diff[i] += v
    for i, v in enumerate(prev):
        diff[i] -= v
    out = prev + [0] * (n + len(diff) - len(prev))
    for i, v in enumerate(diff):
        out[n + i] += v
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def psi(n: int, trunc: int | None = None) -> UnivariateSeries:
    """Psi_n(q) = Psi_{n-1} + q^n (n!_q - Psi_{n-1}), Psi_0 = 1.

    Psi_n is a polynomial, so any truncation is exact; the default stops at
    its degree.
    """
    coeffs = _psi(n)
    if trunc is None:
        trunc = len(coeffs) - 1
    return UnivariateSeries(dict(enumerate(coeffs)), trunc)


def formule_r(n: int, trunc: int) -> UnivariateSeries:
    """Expansion of (1+q)(1+q+q^2)...(1+...+q^(n-1)) ((1-q)^(n+1) - q^(n+1)) / (1 - 2q)."""
    num = [1]
    for k in range(2, n + 1):
        num = _pmul(num, [1] * k)
    alt = [comb(n + 1, i) * (-1) ** i for i in range(n + 2)]
    alt[n + 1] -= 1
    num = _pmul(num, alt)
    geo = [2 ** k for k in range(trunc + 1)]
    coeffs = _pmul(num, geo)[: trunc + 1]
    return UnivariateSeries(dict(enumerate(coeffs)), trunc)


def h_n_plethysm(n: int, trunc) -> BivariateSeries:
    """h_n[1/((1-q)(1-t))] = sum_lambda z_lambda^-1 prod_k 1/((1-q^lk)(1-t^lk))."""
    out = BivariateSeries({}, trunc)
    for lam in partitions(n):
        term = BivariateSeries.one(trunc) * Fraction(1, z_of(lam))
        for part in lam:
            term = term * geometric((part, 0), trunc) * geometric((0, part), trunc)
        out = out + term
    return out


def plethystic_guess(n: int, trunc) -> BivariateSeries:
    """The series R_n would have if DQSym_n were free over DSym_n."""
    trunc = tuple(trunc)
    x = geometric((1, 0), trunc) * geometric((0, 1), trunc) - BivariateSeries.one(trunc)
    num = BivariateSeries({}, trunc)
    for k in range(n + 1):
        num = num + x ** k
    return num * h_n_plethysm(n, trunc).inverse()
