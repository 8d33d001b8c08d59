from fractions import Fraction
from itertools import product

import sympy
from conftest import all_bicomps
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import bicompositions

from diagqsym import action, bicomp, dqsym, linalg
from diagqsym.bicomp import parse
from diagqsym.dqsym import ONE, M, DQSymElt, TensorElt
from diagqsym.poly import Polynomial

F_EXAMPLE = ["2,0/1,1", "1,1,0/1,0,1", "1,1,0/0,1,1", "2,0,0/0,1,1", "0,2,0/1,0,1",
             "1,1,0,0/0,0,1,1", "1,0,1,0/0,1,0,1", "0,1,1,0/1,0,0,1"]


def Mp(text, coeff=1):
    return M(parse(text), coeff)


def test_m_expand_examples():
    assert dqsym.m_expand(parse("1/0"), 3) == sum(
        (Polynomial.x(i, 3) for i in (2, 3)), Polynomial.x(1, 3))
    assert dqsym.m_expand(parse("1,1,1/0,0,0"), 2) == Polynomial(2)
    assert dqsym.m_expand(parse("1,0/0,1"), 2) == Polynomial.x(1, 2) * Polynomial.y(2, 2)
    assert dqsym.m_expand(parse("1/1"), 2) == (Polynomial.x(1, 2) * Polynomial.y(1, 2)
                                               + Polynomial.x(2, 2) * Polynomial.y(2, 2))


def test_m_expand_term_count():
    from math import comb
    for n in range(5):
        for c in all_bicomps(3):
            assert len(dqsym.m_expand(c, n)) == comb(n, len(c))


def test_mult_examples():
    u = Mp("2,0/1,3") * Mp("0,2/1,0")
    assert len(u.terms) == 13
    assert all(v == 1 for v in u.terms.values())
    a = parse("1,2/0,1")
    assert ONE * M(a) == M(a) == M(a) * ONE
    # collision: repeated letters give coefficient 2
    assert Mp("1/0") * Mp("1/0") == Mp("2/0") + Mp("1,1/0,0", 2)


def test_bilinearity():
    a, b, c = Mp("1/0"), Mp("0,1/1,0"), Mp("1/1")
    assert (a + b) * c == a * c + b * c
    assert (a.scale(3)) * c == (a * c).scale(3)


def test_expansion_is_ring_morphism():
    elems = all_bicomps(3)
    for a, b in product(elems, repeat=2):
        if sum(bicomp.bidegree(a)) + sum(bicomp.bidegree(b)) > 4:
            continue
        prod = M(a) * M(b)
        for n in range(1, 5):
            assert dqsym.expand(prod, n) == dqsym.m_expand(a, n) * dqsym.m_expand(b, n), (a, b, n)


@settings(max_examples=40, deadline=None)
@given(bicompositions, bicompositions, bicompositions)
def test_product_commutative_associative(a, b, c):
    u, v, w = M(a), M(b), M(c)
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)


def test_expansion_hivert_invariant():
    n = 3
    for c in all_bicomps(3):
        p = dqsym.m_expand(c, n)
        for s in action.all_perms(n):
            assert action.hivert_action(s, p) == p


def test_expansions_of_long_words_are_not_natural_invariants():
    p = dqsym.m_expand(parse("1,0/0,1"), 2)
    assert action.natural_action((2, 1), p) != p


def test_dimension_by_rank():
    for n in range(1, 4):
        for d in [(1, 1), (2, 1), (2, 2)]:
            elems = bicomp.enumerate_bicompositions(d)
            polys = [dqsym.m_expand(c, n) for c in elems]
            idx = {}
            vecs = []
            for p in polys:
                vecs.append({idx.setdefault(m, len(idx)): c for m, c in p.terms.items()})
            assert linalg.rank(vecs) == len(bicomp.enumerate_bicompositions(d, n))


def test_coproduct_examples():
    assert dqsym.coproduct(ONE) == TensorElt({((), ()): 1})
    a = parse("1/1")
    assert dqsym.coproduct(M(a)) == TensorElt({((), a): 1, (a, ()): 1})
    assert len(dqsym.coproduct(Mp("2,0/1,3")).terms) == 3


def test_counit():
    assert dqsym.counit(ONE) == 1
    assert dqsym.counit(Mp("1/0")) == 0
    assert dqsym.counit(ONE.scale(3) + Mp("1/1", 5)) == 3


def test_f_basis_example():
    assert dqsym.f_basis(parse("2,0/1,1")) == DQSymElt({parse(s): 1 for s in F_EXAMPLE})
    assert dqsym.f_basis(parse("1/0")) == Mp("1/0")
    assert dqsym.f_basis(parse("2/0")) == Mp("2/0") + Mp("1,1/0,0")


def test_m_in_f_examples():
    b = parse("2,0/1,1")
    assert dqsym.m_in_f(dqsym.f_basis(b)) == M(b)
    assert dqsym.m_in_f(Mp("1/0")) == Mp("1/0")
    # M_(2/0) = F_(2/0) - F_(1,1/0,0)
    assert dqsym.m_in_f(Mp("2/0")) == Mp("2/0") - Mp("1,1/0,0")


def test_m_in_f_against_matrix_inverse():
    for d in bicomp.bidegrees_upto((2, 2)):
        elems = bicomp.enumerate_bicompositions(d)
        k = len(elems)
        # column j of T holds the M-coordinates of F_{elems[j]}
        T = sympy.zeros(k, k)
        for j, b in enumerate(elems):
            for a, c in dqsym.f_basis(b).terms.items():
                T[elems.index(a), j] = c
        Tinv = T.inv()
        for i, a in enumerate(elems):
            got = dqsym.m_in_f(M(a))
            for j, b in enumerate(elems):
                assert got.coefficient(b) == Fraction(int(Tinv[j, i].p), int(Tinv[j, i].q))


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(bicompositions, st.integers(-3, 3), max_size=4))
def test_f_roundtrip(terms):
    u = DQSymElt(terms)
    assert dqsym.f_to_m(dqsym.m_in_f(u)) == u
    assert dqsym.m_in_f(dqsym.f_to_m(u)) == u


def test_pi_examples():
    assert dqsym.pi_project(Mp("2,0/1,3")) == {(3, 3): 1}
    assert dqsym.pi_project(Mp("1/0") + Mp("0/1")) == {(1,): 2}


@settings(max_examples=40, deadline=None)
@given(bicompositions, bicompositions)
def test_pi_is_algebra_morphism(a, b):
    lhs = dqsym.pi_project(M(a) * M(b))
    rhs = dqsym.qsym_product(dqsym.pi_project(M(a)), dqsym.pi_project(M(b)))
    assert lhs == rhs


def test_lyndon_freeness():
    assert dqsym.lyndon_freeness_check((1, 0))
    assert len(dqsym.lyndon_products((1, 1))) == 3
    assert dqsym.lyndon_freeness_check((1, 1))
    assert dqsym.lyndon_freeness_check((2, 1))
    for d in [(2, 2), (3, 1), (4, 0)]:
        assert len(dqsym.lyndon_products(d)) == len(bicomp.enumerate_bicompositions(d))
        assert dqsym.lyndon_freeness_check(d)


def test_truncate_kills_long_words():
    u = Mp("1,1,1/0,0,0") + Mp("1/1")
    assert dqsym.truncate(u, 2) == Mp("1/1")
    assert dqsym.expand(u, 2) == dqsym.expand(dqsym.truncate(u, 2), 2)


def test_repr():
    assert repr(Mp("1/0") + Mp("0,1/1,0", Fraction(1, 2))) in (
        "1*M[1/0] + 1/2*M[0,1/1,0]", "1/2*M[0,1/1,0] + 1*M[1/0]")
