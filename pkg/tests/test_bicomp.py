from collections import Counter
from itertools import product

import pytest
from conftest import all_bicomps, brute_quasi_shuffles

from diagqsym import bicomp
from diagqsym.bicomp import BicompositionError, parse
from diagqsym.series import BivariateSeries, geometric

SHUFFLE_13 = [
    "2,0,0,2/1,3,1,0", "2,0,2/1,4,0", "2,0,0,2/1,1,3,0", "2,0,2/2,3,0", "2,0,2/1,1,3",
    "2,2/2,3", "2,0,2,0/1,1,0,3", "2,2,0/2,0,3", "0,2,0,2/1,1,3,0", "0,2,2/1,1,3",
    "0,2,2,0/1,1,0,3", "0,4,0/1,1,3", "0,2,2,0/1,0,1,3",
]


def test_parse_and_format_roundtrip():
    for text in ["2,0/1,3", "1/0", "0,1,1/1,0,2"]:
        assert bicomp.fmt(parse(text)) == text
    assert parse("-") == ()
    assert bicomp.fmt(()) == "-"
    assert parse("2,0/1,3") == ((2, 1), (0, 3))


@pytest.mark.parametrize("bad", ["1,0/0", "0/0", "1,0/0,0", "a/1", "1/1/1", "1,-1/0,2"])
def test_parse_rejects(bad):
    with pytest.raises(BicompositionError):
        parse(bad)


@pytest.mark.parametrize("text,expected", [("2,0/1,3", (2, 4)), ("-", (0, 0)), ("0,2/1,0", (2, 1))])
def test_bidegree(text, expected):
    assert bicomp.bidegree(parse(text)) == expected


@pytest.mark.parametrize("text,expected", [("2,0/1,3", (3, 3)), ("-", ()), ("1,1,0/1,0,1", (2, 1, 1))])
def test_collapse(text, expected):
    assert bicomp.collapse(parse(text)) == expected


def test_sum():
    assert bicomp.bsum(parse("2/1"), parse("0,2/1,0")) == parse("2,2/2,0")
    assert bicomp.bsum(parse("1/1"), parse("1,0/0,1")) == parse("2,0/1,1")
    assert bicomp.bsum(parse("1/0"), parse("0/1")) == parse("1/1")
    with pytest.raises(BicompositionError):
        bicomp.bsum((), parse("1/0"))


def test_concat():
    assert bicomp.concat(parse("2/1"), parse("0,2/1,0")) == parse("2,0,2/1,1,0")
    a = parse("1,2/0,1")
    assert bicomp.concat((), a) == a
    assert bicomp.concat(parse("1/1"), parse("1/0"), parse("0/1")) == parse("1,1,0/1,0,1")


def test_quasi_shuffle_displayed_example():
    got = bicomp.quasi_shuffle(parse("2,0/1,3"), parse("0,2/1,0"))
    assert set(got) == {parse(s) for s in SHUFFLE_13}
    assert len(got) == 13


def test_quasi_shuffle_small_cases():
    a = parse("1,2/0,1")
    assert bicomp.quasi_shuffle((), a) == [a]
    assert bicomp.quasi_shuffle(a, ()) == [a]
    assert set(bicomp.quasi_shuffle(parse("1/0"), parse("0/1"))) == {
        parse("1,0/0,1"), parse("0,1/1,0"), parse("1/1")}


def test_quasi_shuffle_has_multiplicities():
    # repeated letters collide: M_(1/0)^2 = M_(2/0) + 2 M_(1,1/0,0)
    ms = bicomp.quasi_shuffle_multiset(parse("1/0"), parse("1/0"))
    assert ms == Counter({parse("2/0"): 1, parse("1,1/0,0"): 2})
    assert len(bicomp.quasi_shuffle(parse("1/0"), parse("1/0"))) == 2


def test_quasi_shuffle_against_brute_force():
    elems = all_bicomps(3)
    for a, b in product(elems, repeat=2):
        if sum(bicomp.bidegree(a)) + sum(bicomp.bidegree(b)) > 4:
            continue
        assert bicomp.quasi_shuffle_multiset(a, b) == brute_quasi_shuffles(a, b), (a, b)


def test_quasi_shuffle_commutative_and_graded():
    elems = all_bicomps(4)
    for a, b in product(elems, repeat=2):
        da, db = bicomp.bidegree(a), bicomp.bidegree(b)
        if sum(da) + sum(db) > 4:
            continue
        ab = bicomp.quasi_shuffle_multiset(a, b)
        assert ab == bicomp.quasi_shuffle_multiset(b, a)
        for c in ab:
            assert bicomp.bidegree(c) == (da[0] + db[0], da[1] + db[1])
            assert max(len(a), len(b)) <= len(c) <= len(a) + len(b)


def test_collapse_commutes_with_concat():
    for a, b in product(all_bicomps(2), repeat=2):
        assert bicomp.collapse(a + b) == bicomp.collapse(a) + bicomp.collapse(b)


def test_refinements_examples():
    assert len(bicomp.refinements(parse("2,0/1,1"))) == 8
    assert bicomp.refinements(parse("1/0")) == [parse("1/0")]
    assert set(bicomp.refinements(parse("2/0"))) == {parse("2/0"), parse("1,1/0,0")}


def test_order_leq_examples():
    assert bicomp.order_leq(parse("2,0/1,1"), parse("1,1,0/1,0,1"))
    a = parse("1,0,2/0,3,1")
    assert bicomp.order_leq(a, a)
    assert bicomp.order_leq(parse("1/1"), parse("1,0/0,1"))
    assert not bicomp.order_leq(parse("1/1"), parse("2/0"))


def _single_merges(c):
    return {c[:i] + (bicomp.vec_add(c[i], c[i + 1]),) + c[i + 2:] for i in range(len(c) - 1)}


def _merge_closure(c):
    seen, frontier = {c}, [c]
    while frontier:
        nxt = []
        for x in frontier:
            for y in _single_merges(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_order_characterizations_agree():
    elems = all_bicomps(4)
    by_degree = {}
    for c in elems:
        by_degree.setdefault(bicomp.bidegree(c), []).append(c)
    for group in by_degree.values():
        for b in group:
            refs = set(bicomp.refinements(b))
            coarse = set(bicomp.coarsenings(b))
            assert b in refs and b in coarse
            assert coarse == _merge_closure(b)
            for a in group:
                leq = bicomp.order_leq(a, b)
                assert leq == (a in coarse)
                assert leq == (b in set(bicomp.refinements(a)))


def test_is_lyndon():
    assert bicomp.is_lyndon(parse("3/1"))
    assert not bicomp.is_lyndon(parse("1,1/0,0"))
    assert bicomp.is_lyndon(parse("1,2/0,0"))
    assert not bicomp.is_lyndon(parse("2,1/0,0"))
    with pytest.raises(BicompositionError):
        bicomp.is_lyndon(())


def test_lyndon_list():
    assert bicomp.lyndon_list((1, 0)) == [parse("1/0")]
    # biletters ordered (0,1) < (1,0) < (1,1): (0,1)(1,0) is Lyndon, (1,0)(0,1) is not
    assert set(bicomp.lyndon_list((1, 1))) == {parse("1/0"), parse("0/1"), parse("1/1"), parse("0,1/1,0")}
    exact = [c for c in bicomp.enumerate_bicompositions((2, 1)) if bicomp.is_lyndon(c)]
    brute = [c for c in bicomp.enumerate_bicompositions((2, 1))
             if all(c < c[k:] + c[:k] for k in range(1, len(c)))]
    assert exact == brute
    # 2/1, 0,2/1,0, 1,1/0,1, 0,1,1/1,0,0
    assert len(exact) == 4


def _lyndon_splits(c):
    """All factorizations of c into Lyndon words, by brute force."""
    if not c:
        return [[]]
    out = []
    for k in range(1, len(c) + 1):
        head = c[:k]
        if bicomp.is_lyndon(head):
            out.extend([head] + rest for rest in _lyndon_splits(c[k:]))
    return out


def test_lyndon_factorization_unique():
    for c in all_bicomps(3):
        if not c:
            continue
        decreasing = [f for f in _lyndon_splits(c) if all(f[i] >= f[i + 1] for i in range(len(f) - 1))]
        assert len(decreasing) == 1
        assert bicomp.lyndon_factorization(c) == decreasing[0]


@pytest.mark.parametrize("text,expected", [("2/0", "1/1"), ("1,1/0,0", "0,1/1,0"), ("0,1/1,0", "0,0/1,1")])
def test_phi(text, expected):
    assert bicomp.phi(parse(text)) == parse(expected)


def test_phi_shifts_bidegree():
    for c in all_bicomps(3):
        if any(a for a, _ in c):
            p = bicomp.phi(c)
            assert len(p) == len(c)
            d, e = bicomp.bidegree(c), bicomp.bidegree(p)
            assert e == (d[0] - 1, d[1] + 1)
    with pytest.raises(BicompositionError):
        bicomp.phi(parse("0,0/1,2"))


def test_enumerate_bicompositions():
    assert bicomp.enumerate_bicompositions((1, 0), 3) == [parse("1/0")]
    assert set(bicomp.enumerate_bicompositions((1, 1), 2)) == {parse("1/1"), parse("1,0/0,1"), parse("0,1/1,0")}
    assert bicomp.enumerate_bicompositions((0, 0)) == [()]
    got = bicomp.enumerate_bicompositions((2, 2), 3)
    assert len(got) == len(set(got))
    assert all(len(c) <= 3 and bicomp.bidegree(c) == (2, 2) for c in got)


def test_bicomposition_counts_match_series():
    trunc = (4, 4)
    kernel = BivariateSeries({(1, 0): 1, (0, 1): 1, (1, 1): -1}, trunc) * geometric((1, 0), trunc) * geometric((0, 1), trunc)
    total = BivariateSeries({}, trunc)
    for k in range(9):
        total = total + kernel ** k
    for i in range(5):
        for j in range(5):
            assert len(bicomp.enumerate_bicompositions((i, j))) == total[i, j]
