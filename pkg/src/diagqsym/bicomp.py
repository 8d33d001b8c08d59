"""Bicompositions and the combinatorics on them.

A bicomposition is stored as a plain tuple of ``(a, b)`` pairs, none equal to
``(0, 0)``.  Tuples compare lexicographically, which gives the biletter order
used for Lyndon words (top entry first, bottom entry as tie-break).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

Bivector = tuple[int, int]
Bicomposition = tuple[Bivector, ...]

EMPTY: Bicomposition = ()


class BicompositionError(ValueError):
    pass


def make(top, bottom=None) -> Bicomposition:
    """Build a bicomposition from two rows, or from a sequence of pairs.

    >>> make([2, 0], [1, 3])
    ((2, 1), (0, 3))
    >>> make([(1, 0), (0, 1)])
    ((1, 0), (0, 1))
    """
    if bottom is None:
        parts = tuple((int(a), int(b)) for a, b in top)
    else:
        if len(top) != len(bottom):
            raise BicompositionError("rows of unequal length")
        parts = tuple((int(a), int(b)) for a, b in zip(top, bottom))
    for a, b in parts:
        if a < 0 or b < 0:
            raise BicompositionError(f"negative entry in column {(a, b)}")
        if a == 0 and b == 0:
            raise BicompositionError("zero column (0,0) in bicomposition")
    return parts


def parse(text: str) -> Bicomposition:
    """Parse ``"2,0/1,3"``; ``"-"`` is the empty bicomposition."""
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    if text.count("/") != 1:
        raise BicompositionError(f"expected exactly one '/' in {text!r}")
    top, bottom = text.split("/")
    try:
        a = [int(v) for v in top.split(",")]
        b = [int(v) for v in bottom.split(",")]
    except ValueError:
        raise BicompositionError(f"non-integer entry in {text!r}") from None
    return make(a, b)


def fmt(c: Bicomposition) -> str:
    if not c:
        return "-"
    top = ",".join(str(a) for a, _ in c)
    bottom = ",".join(str(b) for _, b in c)
    return f"{top}/{bottom}"


def sort_key(c: Bicomposition):
    return (len(c), c)


def bidegree(c: Bicomposition) -> tuple[int, int]:
    return (sum(a for a, _ in c), sum(b for _, b in c))


def collapse(c: Bicomposition) -> tuple[int, ...]:
    """The ordinary composition of column sums."""
    return tuple(a + b for a, b in c)


def vec_add(u: Bivector, v: Bivector) -> Bivector:
    return (u[0] + v[0], u[1] + v[1])


def bsum(c: Bicomposition, d: Bicomposition) -> Bicomposition:
    """Concatenate, merging the last part of ``c`` with the first part of ``d``."""
    if not c or not d:
        raise BicompositionError("sum of bicompositions needs both operands nonempty")
    return c[:-1] + (vec_add(c[-1], d[0]),) + d[1:]


def concat(*parts: Bicomposition) -> Bicomposition:
    out: Bicomposition = ()
    for p in parts:
        out += p
    return out


@lru_cache(maxsize=None)
def quasi_shuffle_multiset(c: Bicomposition, d: Bicomposition) -> Counter:
    """Quasi-shuffles of ``c`` and ``d`` counted with multiplicity.

    The recursion places the first part of ``d`` after a prefix of ``c``,
    either as a new part or merged into the last part of that prefix.
    """
    if not d:
        return Counter({c: 1})
    if not c:
        return Counter({d: 1})
    d1, d2 = d[:1], d[1:]
    out: Counter = Counter()
    for k in range(len(c) + 1):
        c1, c2 = c[:k], c[k:]
        for w, mult in quasi_shuffle_multiset(c2, d2).items():
            out[c1 + d1 + w] += mult
            if c1:
                out[bsum(c1, d1) + w] += mult
    return out


def quasi_shuffle(c: Bicomposition, d: Bicomposition) -> list[Bicomposition]:
    """The set of quasi-shuffles, as a sorted list without repetitions."""
    return sorted(quasi_shuffle_multiset(c, d), key=sort_key)


@lru_cache(maxsize=None)
def _vector_compositions(v: Bivector) -> tuple[Bicomposition, ...]:
    """All sequences of nonzero bivectors with vector sum ``v``."""
    if v == (0, 0):
        return (EMPTY,)
    out = []
    for a in range(v[0] + 1):
        for b in range(v[1] + 1):
            if a == 0 and b == 0:
                continue
            for rest in _vector_compositions((v[0] - a, v[1] - b)):
                out.append(((a, b),) + rest)
    return tuple(out)


def refinements(c: Bicomposition) -> list[Bicomposition]:
    """Bicompositions obtained by splitting each part of ``c`` into an ordered
    sequence of nonzero parts with the same vector sum."""
    out = [concat(*pieces) for pieces in product(*(_vector_compositions(p) for p in c))]
    return sorted(out, key=sort_key)


def coarsenings(c: Bicomposition) -> list[Bicomposition]:
    """Bicompositions obtained from ``c`` by summing groups of consecutive parts."""
    if not c:
        return [EMPTY]
    out = []
    for cuts in product((False, True), repeat=len(c) - 1):
        parts = [c[0]]
        for part, cut in zip(c[1:], cuts):
            if cut:
                parts.append(part)
            else:
                parts[-1] = vec_add(parts[-1], part)
        out.append(tuple(parts))
    return sorted(set(out), key=sort_key)


def order_leq(c: Bicomposition, d: Bicomposition) -> bool:
    """True iff ``c`` is obtained from ``d`` by merging consecutive parts."""
    if bidegree(c) != bidegree(d) or len(c) > len(d):
        return False
    # greedy: each part of c must be a sum of a run of consecutive parts of d
    j = 0
    for part in c:
        acc = (0, 0)
        while acc[0] < part[0] or acc[1] < part[1] or acc == (0, 0):
            if j == len(d):
                return False
            acc = vec_add(acc, d[j])
            j += 1
        if acc != part:
            return False
    return j == len(d)


def is_lyndon(c: Bicomposition) -> bool:
    if not c:
        raise BicompositionError("Lyndon test is undefined on the empty bicomposition")
    return all(c < c[k:] + c[:k] for k in range(1, len(c)))


def lyndon_factorization(c: Bicomposition) -> list[Bicomposition]:
    """Duval's algorithm: factors of ``c`` as weakly decreasing Lyndon words."""
    factors = []
    i, n = 0, len(c)
    while i < n:
        j, k = i + 1, i
        while j < n and c[k] <= c[j]:
            k = i if c[k] < c[j] else k + 1
            j += 1
        while i <= k:
            factors.append(c[i:i + j - k])
            i += j - k
    return factors


@lru_cache(maxsize=None)
def _enumerate(d: tuple[int, int], maxlen: int) -> tuple[Bicomposition, ...]:
    if d == (0, 0):
        return (EMPTY,)
    if maxlen == 0:
        return ()
    out = []
    for a in range(d[0] + 1):
        for b in range(d[1] + 1):
            if a == 0 and b == 0:
                continue
            for rest in _enumerate((d[0] - a, d[1] - b), maxlen - 1):
                out.append(((a, b),) + rest)
    return tuple(out)


def enumerate_bicompositions(d: tuple[int, int], maxlen: int | None = None) -> list[Bicomposition]:
    """All bicompositions of bidegree exactly ``d`` with at most ``maxlen`` parts."""
    if maxlen is None:
        maxlen = d[0] + d[1]
    return sorted(_enumerate(tuple(d), maxlen), key=sort_key)


def bidegrees_upto(d: tuple[int, int]):
    return [(i, j) for i in range(d[0] + 1) for j in range(d[1] + 1)]


def lyndon_list(maxbidegree: tuple[int, int]) -> list[Bicomposition]:
    out = []
    for e in bidegrees_upto(maxbidegree):
        if e == (0, 0):
            continue
        out.extend(c for c in enumerate_bicompositions(e) if is_lyndon(c))
    return sorted(out, key=sort_key)


def phi(c: Bicomposition) -> Bicomposition:
    """Move one unit from the top row to the bottom row at the first column
    with a nonzero top entry."""
    for m, (a, b) in enumerate(c):
        if a > 0:
            return c[:m] + ((a - 1, b + 1),) + c[m + 1:]
    raise BicompositionError("phi needs a bicomposition with a nonzero top row")
