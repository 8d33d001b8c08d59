"""The Hopf algebra DQSym of diagonally quasi-symmetric functions.

Elements are kept basis-abstractly as ``{bicomposition: coefficient}`` in the
monomial basis M; ``expand`` gives the polynomial at a chosen number of
variables.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import bicomp, linalg
from .bicomp import Bicomposition
from .poly import Polynomial, _fmt_coeff


class _LinearCombination:
    """Shared plumbing for finite maps index -> nonzero rational."""

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, index, coeff=1):
        return cls({index: coeff})

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return type(self)({k: c * v for k, v in self.terms.items()})

    def coefficient(self, index):
        return self.terms.get(index, 0)


class DQSymElt(_LinearCombination):
    def __mul__(self, other):
        if isinstance(other, DQSymElt):
            return product_(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: bicomp.sort_key(kv[0]))

    def __repr__(self):
        return format_element(self, "M")


class TensorElt(_LinearCombination):
    """Element of a tensor square, keyed by pairs of bicompositions."""

    def __mul__(self, other):
        if isinstance(other, TensorElt):
            return tensor_product_dqsym(self, other)
        return self.scale(other)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (bicomp.sort_key(kv[0][0]), bicomp.sort_key(kv[0][1])))

    def __repr__(self):
        return format_tensor(self, "M")


def format_element(u: _LinearCombination, letter: str) -> str:
    if not u.terms:
        return "0"
    return " + ".join(f"{_fmt_coeff(c)}*{letter}[{bicomp.fmt(k)}]" for k, c in u.items())


def format_tensor(u: TensorElt, letter: str) -> str:
    if not u.terms:
        return "0"
    return " + ".join(
        f"{_fmt_coeff(c)}*{letter}[{bicomp.fmt(a)}]#{letter}[{bicomp.fmt(b)}]" for (a, b), c in u.items()
    )


def M(c: Bicomposition, coeff=1) -> DQSymElt:
    return DQSymElt({tuple(c): coeff})


ONE = M(())


def m_expand(c: Bicomposition, n: int) -> Polynomial:
    """Sum of the monomials with exponent ``c`` over all supports of size len(c)."""
    c = tuple(c)
    return Polynomial(n, {(support, c): 1 for support in combinations(range(1, n + 1), len(c))})


def expand(u: DQSymElt, n: int) -> Polynomial:
    out: dict = {}
    for c, coeff in u.terms.items():
        if len(c) > n:
            continue
        for support in combinations(range(1, n + 1), len(c)):
            out[support, c] = out.get((support, c), 0) + coeff
    return Polynomial(n, out)


def m_mult(a: Bicomposition, b: Bicomposition) -> DQSymElt:
    """M_a M_b, with each quasi-shuffle counted as often as it arises."""
    return DQSymElt(dict(bicomp.quasi_shuffle_multiset(tuple(a), tuple(b))))


def product_(u: DQSymElt, v: DQSymElt) -> DQSymElt:
    out: dict = {}
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            for c, mult in bicomp.quasi_shuffle_multiset(a, b).items():
                out[c] = out.get(c, 0) + ca * cb * mult
    return DQSymElt(out)


def truncate(u: DQSymElt, n: int) -> DQSymElt:
    """Image in DQSym_n: drop basis elements longer than n."""
    return DQSymElt({c: v for c, v in u.terms.items() if len(c) <= n})


def coproduct(u: DQSymElt) -> TensorElt:
    """Deconcatenation."""
    out: dict = {}
    for c, coeff in u.terms.items():
        for k in range(len(c) + 1):
            key = (c[:k], c[k:])
            out[key] = out.get(key, 0) + coeff
    return TensorElt(out)


def counit(u: DQSymElt):
    return u.terms.get((), 0)


def tensor_product_dqsym(s: TensorElt, t: TensorElt) -> TensorElt:
    """Componentwise product in DQSym (x) DQSym."""
    out: dict = {}
    for (a1, a2), c in s.terms.items():
        for (b1, b2), d in t.terms.items():
            left = bicomp.quasi_shuffle_multiset(a1, b1)
            right = bicomp.quasi_shuffle_multiset(a2, b2)
            for x, mx in left.items():
                for y, my in right.items():
                    out[x, y] = out.get((x, y), 0) + c * d * mx * my
    return TensorElt(out)


def coproduct_left(t: TensorElt) -> dict:
    """(Delta (x) id) on a tensor, as a map of index triples."""
    out: dict = {}
    for (a, b), c in t.terms.items():
        for k in range(len(a) + 1):
            key = (a[:k], a[k:], b)
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def coproduct_right(t: TensorElt) -> dict:
    out: dict = {}
    for (a, b), c in t.terms.items():
        for k in range(len(b) + 1):
            key = (a, b[:k], b[k:])
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def counit_left(t: TensorElt) -> DQSymElt:
    """(eps (x) id)."""
    return DQSymElt({b: c for (a, b), c in t.terms.items() if a == ()})


def counit_right(t: TensorElt) -> DQSymElt:
    return DQSymElt({a: c for (a, b), c in t.terms.items() if b == ()})


def f_basis(c: Bicomposition) -> DQSymElt:
    """F_c as the sum of M_a over the refinements a of c."""
    return DQSymElt({a: 1 for a in bicomp.refinements(tuple(c))})


def f_to_m(u: DQSymElt) -> DQSymElt:
    """Rewrite an element given in F coordinates into the M basis."""
    out = DQSymElt()
    for c, coeff in u.terms.items():
        out = out + f_basis(c).scale(coeff)
    return out


def m_in_f(u: DQSymElt) -> DQSymElt:
    """Coefficients of ``u`` in the F basis (result keyed by F indices).

    Triangular solve: M_a's coefficient receives contributions from F_b for
    every coarsening b of a, so process candidates from shortest to longest.
    Only refinements of the support can carry a nonzero F coefficient.
    """
    candidates = set()
    for a in u.terms:
        candidates.update(bicomp.refinements(a))
    fcoeff: dict = {}
    for a in sorted(candidates, key=bicomp.sort_key):
        val = u.terms.get(a, 0)
        for b in bicomp.coarsenings(a):
            if b != a:
                val -= fcoeff.get(b, 0)
        if val:
            fcoeff[a] = val
    return DQSymElt(fcoeff)


# -- projection to QSym ------------------------------------------------------

def pi_project(u: DQSymElt) -> dict[tuple[int, ...], Fraction]:
    """Identify y with x: M_(a,b) -> M_(a+b), as a map composition -> coefficient."""
    out: dict = {}
    for c, coeff in u.terms.items():
        k = bicomp.collapse(c)
        out[k] = out.get(k, 0) + coeff
    return {k: v for k, v in out.items() if v}


def _as_row(comp: tuple[int, ...]) -> Bicomposition:
    return tuple((a, 0) for a in comp)


def qsym_product(u: dict, v: dict) -> dict:
    """Product in QSym, via the same quasi-shuffle on single-row bicompositions."""
    out: dict = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for c, mult in bicomp.quasi_shuffle_multiset(_as_row(a), _as_row(b)).items():
                k = tuple(x for x, _ in c)
                out[k] = out.get(k, 0) + ca * cb * mult
    return {k: v for k, v in out.items() if v}


def qsym_coproduct(u: dict) -> dict:
    out: dict = {}
    for a, c in u.items():
        for k in range(len(a) + 1):
            out[a[:k], a[k:]] = out.get((a[:k], a[k:]), 0) + c
    return {k: v for k, v in out.items() if v}


def pi_tensor(t: TensorElt) -> dict:
    out: dict = {}
    for (a, b), c in t.terms.items():
        key = (bicomp.collapse(a), bicomp.collapse(b))
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


# -- freeness ----------------------------------------------------------------

def _multisets(items, total: tuple[int, int], start: int = 0):
    """Weakly decreasing sequences (by index into ``items``) with bidegree sum ``total``."""
    if total == (0, 0):
        yield ()
        return
    for i in range(start, len(items)):
        d = bicomp.bidegree(items[i])
        if d[0] <= total[0] and d[1] <= total[1]:
            for rest in _multisets(items, (total[0] - d[0], total[1] - d[1]), i):
                yield (items[i],) + rest


def lyndon_products(d: tuple[int, int]) -> list[tuple[Bicomposition, ...]]:
    """Multisets of Lyndon bicompositions of total bidegree d, each listed in
    weakly decreasing order."""
    lyn = sorted(bicomp.lyndon_list(d), reverse=True)
    return list(_multisets(lyn, tuple(d)))


def lyndon_freeness_check(d: tuple[int, int]) -> bool:
    """True iff products of Lyndon M's of bidegree d form a basis of that component."""
    basis = bicomp.enumerate_bicompositions(d)
    index = {c: i for i, c in enumerate(basis)}
    words = lyndon_products(d)
    if len(words) != len(basis):
        return False
    vectors = []
    for w in words:
        u = ONE
        for c in w:
            u = u * M(c)
        vectors.append({index[c]: v for c, v in u.terms.items()})
    return linalg.rank(vectors) == len(basis)


def basis_elements(d: tuple[int, int], maxlen: int | None = None) -> list[Bicomposition]:
    return bicomp.enumerate_bicompositions(d, maxlen)


def all_upto_total(total: int) -> list[Bicomposition]:
    """All bicompositions with d1 + d2 <= total."""
    out = []
    for s in range(total + 1):
        for d1 in range(s + 1):
            out.extend(bicomp.enumerate_bicompositions((d1, s - d1)))
    return out
