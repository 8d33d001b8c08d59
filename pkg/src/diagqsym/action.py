"""Symmetric group actions on Q[x, y]: the diagonal (variable permuting) action
and the Hivert action, which moves a monomial's support and freezes its
exponent."""

from __future__ import annotations

from itertools import combinations, permutations

from . import poly
from .poly import Monomial, Polynomial

Permutation = tuple[int, ...]


def perm(images) -> Permutation:
    p = tuple(int(i) for i in images)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_perm(text: str) -> Permutation:
    return perm(text.replace(",", " ").split())


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(s: Permutation, t: Permutation) -> Permutation:
    """(s t)(i) = s(t(i))."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for i, si in enumerate(s, 1):
        out[si - 1] = i
    return tuple(out)


def sign(s: Permutation) -> int:
    sgn = 1
    for lam in cycle_type(s):
        if lam % 2 == 0:
            sgn = -sgn
    return sgn


def cycle_type(s: Permutation) -> tuple[int, ...]:
    seen = [False] * len(s)
    lengths = []
    for start in range(len(s)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = s[j] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def all_perms(n: int):
    return [tuple(p) for p in permutations(range(1, n + 1))]


def _check_n(s: Permutation, p: Polynomial):
    if len(s) != p.n:
        raise ValueError(f"permutation of size {len(s)} acting on polynomial with n={p.n}")


def natural_monomial(s: Permutation, m: Monomial) -> Monomial:
    return poly.monomial_from_dict({s[i - 1]: e for i, e in zip(*m)})


def hivert_monomial(s: Permutation, m: Monomial) -> Monomial:
    return tuple(sorted(s[i - 1] for i in m[0])), m[1]


def natural_action(s: Permutation, p: Polynomial) -> Polynomial:
    _check_n(s, p)
    return Polynomial(p.n, {natural_monomial(s, m): c for m, c in p.terms.items()})


def hivert_action(s: Permutation, p: Polynomial) -> Polynomial:
    _check_n(s, p)
    return Polynomial(p.n, {hivert_monomial(s, m): c for m, c in p.terms.items()})


class GroupAlgebraElt:
    """Finite linear combination of permutations of a fixed size."""

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms: dict[Permutation, int] = {}
        for s, c in (terms or {}).items():
            if len(s) != n:
                raise ValueError("permutation size does not match n")
            if c:
                self.terms[s] = self.terms.get(s, 0) + c
        self.terms = {s: c for s, c in self.terms.items() if c}

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElt) and self.n == other.n and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, 0) + c
        return GroupAlgebraElt(self.n, out)

    def __sub__(self, other):
        return self + GroupAlgebraElt(other.n, {s: -c for s, c in other.terms.items()})

    def __mul__(self, other):
        out: dict = {}
        for s, c in self.terms.items():
            for t, d in other.terms.items():
                st = compose(s, t)
                out[st] = out.get(st, 0) + c * d
        return GroupAlgebraElt(self.n, out)

    def __repr__(self):
        parts = [f"{c:+}*[{' '.join(map(str, s))}]" for s, c in sorted(self.terms.items())]
        return " ".join(parts) or "0"


def group_algebra_apply(e: GroupAlgebraElt, p: Polynomial, mode: str = "hivert") -> Polynomial:
    if e.n != p.n:
        raise ValueError(f"group algebra of S_{e.n} acting on polynomial with n={p.n}")
    act = {"hivert": hivert_monomial, "natural": natural_monomial}[mode]
    out: dict = {}
    for s, c in e.terms.items():
        for m, v in p.terms.items():
            m2 = act(s, m)
            out[m2] = out.get(m2, 0) + c * v
    return Polynomial(p.n, out)


def e_element(i: int, j: int, k: int, n: int) -> GroupAlgebraElt:
    """Signed sum of the six permutations moving only i, j, k."""
    if not 1 <= i < j < k <= n:
        raise ValueError(f"need 1 <= i < j < k <= n, got {(i, j, k, n)}")
    pos = (i, j, k)
    terms = {}
    for w in permutations(range(3)):
        images = list(range(1, n + 1))
        for r in range(3):
            images[pos[r] - 1] = pos[w[r]]
        s = tuple(images)
        terms[s] = sign(s)
    return GroupAlgebraElt(n, terms)


def conjugate(e: GroupAlgebraElt, c: Permutation) -> GroupAlgebraElt:
    """c e c^{-1}."""
    ci = inverse(c)
    return GroupAlgebraElt(e.n, {compose(compose(c, s), ci): v for s, v in e.terms.items()})


def hivert_trace(s: Permutation, n: int, d: tuple[int, int]) -> int:
    """Trace of the Hivert action on the bidegree-d component.

    The action permutes monomials, so the trace is the number of fixed ones.
    A monomial is fixed iff its support is a union of cycles of ``s``; the
    exponent is free, so we count support sets times exponents.
    """
    if len(s) != n:
        raise ValueError("permutation size does not match n")
    from .bicomp import enumerate_bicompositions

    counts_by_len = {}
    for c in enumerate_bicompositions(d):
        counts_by_len[len(c)] = counts_by_len.get(len(c), 0) + 1
    lengths = _invariant_subset_counts(s)
    return sum(counts_by_len[k] * lengths.get(k, 0) for k in counts_by_len)


def _invariant_subset_counts(s: Permutation) -> dict[int, int]:
    """Number of s-stable subsets of [n], by size."""
    counts = {0: 1}
    for lam in cycle_type(s):
        new = dict(counts)
        for size, c in counts.items():
            new[size + lam] = new.get(size + lam, 0) + c
        counts = new
    return counts


def fixed_monomial_count(s: Permutation, monomials, mode: str = "hivert") -> int:
    """Brute-force trace on an explicit list of monomials."""
    act = {"hivert": hivert_monomial, "natural": natural_monomial}[mode]
    return sum(1 for m in monomials if act(s, m) == m)


def k_subsets(n: int, k: int):
    return list(combinations(range(1, n + 1), k))
