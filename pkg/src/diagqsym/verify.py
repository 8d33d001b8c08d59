"""Exhaustive verification suites.

Each suite returns a :class:`SuiteResult`; ``failures`` holds the first few
counterexamples found, so a failing run is directly actionable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import action, bicomp, dnsym, dqsym, quotient, symfun
from .dqsym import M
from .poly import Polynomial, monomial_basis

MAX_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, *witness):
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(witness)


def monomials_upto(n: int, d: tuple[int, int]):
    return [m for e in bicomp.bidegrees_upto(d) for m in monomial_basis(n, e)]


def verify_kernel(nmax: int, maxdeg=(2, 2)) -> SuiteResult:
    """E_{i,j,k} kills every monomial of bidegree <= maxdeg under the Hivert action."""
    res = SuiteResult("kernel")
    for n in range(3, nmax + 1):
        monos = monomials_upto(n, maxdeg)
        for i, j, k in combinations(range(1, n + 1), 3):
            e = action.e_element(i, j, k, n)
            for m in monos:
                res.checked += 1
                if action.group_algebra_apply(e, Polynomial.monomial(n, m), "hivert"):
                    res.fail(n, (i, j, k), m)
    return res


def verify_duality(bound: int) -> SuiteResult:
    """Adjointness of product and coproduct for all triples with |bidegree(c)| <= bound.

    Triples whose bidegrees do not add up give zero on both sides, so only
    a, b with d(a) + d(b) = d(c) are enumerated; a handful of mismatched
    triples are included as a sanity check of the vacuous case.
    """
    res = SuiteResult("duality")
    for c in dqsym.all_upto_total(bound):
        dc = bicomp.bidegree(c)
        for da in bicomp.bidegrees_upto(dc):
            db = (dc[0] - da[0], dc[1] - da[1])
            for a in bicomp.enumerate_bicompositions(da):
                for b in bicomp.enumerate_bicompositions(db):
                    res.checked += 1
                    if not dnsym.duality_check(a, b, c):
                        res.fail(a, b, c)
        res.checked += 1
        if not dnsym.duality_check(c, ((1, 0),), c):
            res.fail(c, ((1, 0),), c)
    return res


def verify_frobenius(nmax: int, maxdeg=(3, 3), kmax: int = 4, kdeg=(2, 2)) -> SuiteResult:
    res = SuiteResult("frobenius")
    for n in range(1, nmax + 1):
        for d in bicomp.bidegrees_upto(maxdeg):
            res.checked += 1
            if symfun.frobenius_from_traces(n, d) != symfun.frobenius_from_formula(n, d):
                res.fail("traces-vs-formula", n, d)
    for n in range(0, kmax + 1):
        for d in bicomp.bidegrees_upto(kdeg):
            for a in bicomp.enumerate_bicompositions(d, n):
                res.checked += 1
                k = len(a)
                if symfun.k_space_frobenius(a, n) != symfun.h_in_p(k) * symfun.h_in_p(n - k):
                    res.fail("k-space", n, a)
    return res


def verify_lyndon(bound: int) -> SuiteResult:
    res = SuiteResult("lyndon")
    for d in quotient.bidegrees_upto_total(bound):
        if d == (0, 0):
            continue
        res.checked += 1
        if not dqsym.lyndon_freeness_check(d):
            res.fail(d)
    return res


def verify_basis(nmax: int) -> SuiteResult:
    res = SuiteResult("basis")
    for n in range(1, nmax + 1):
        rep = quotient.basis_report(n)
        res.checked += 1
        if not rep.ok:
            res.fail(n, rep.failures[:2])
    res.details["basis"] = quotient.conjectured_basis(nmax)
    return res


def _tensor_eq(x: dict, y: dict) -> bool:
    return {k: v for k, v in x.items() if v} == {k: v for k, v in y.items() if v}


def verify_hopf(bound: int) -> SuiteResult:
    """Bialgebra axioms on M-basis elements, and the projection to QSym."""
    res = SuiteResult("hopf")
    elems = dqsym.all_upto_total(bound)
    for a in elems:
        u = M(a)
        du = dqsym.coproduct(u)
        res.checked += 3
        if dqsym.coproduct_left(du) != dqsym.coproduct_right(du):
            res.fail("coassociativity", a)
        if dqsym.counit_left(du) != u or dqsym.counit_right(du) != u:
            res.fail("counit", a)
        if not _tensor_eq(dqsym.pi_tensor(du), dqsym.qsym_coproduct(dqsym.pi_project(u))):
            res.fail("pi-coproduct", a)
    for a in elems:
        for b in elems:
            if sum(bicomp.bidegree(a)) + sum(bicomp.bidegree(b)) > bound:
                continue
            u, v = M(a), M(b)
            res.checked += 2
            if dqsym.coproduct(u * v) != dqsym.coproduct(u) * dqsym.coproduct(v):
                res.fail("multiplicativity", a, b)
            if dqsym.pi_project(u * v) != dqsym.qsym_product(dqsym.pi_project(u), dqsym.pi_project(v)):
                res.fail("pi-product", a, b)
    res.checked += 1
    if dqsym.counit(M(()) * M(())) != 1:
        res.fail("counit-unit")
    return res


SUITES = {
    "kernel": verify_kernel,
    "duality": verify_duality,
    "frobenius": verify_frobenius,
    "lyndon": verify_lyndon,
    "basis": verify_basis,
    "hopf": verify_hopf,
}
