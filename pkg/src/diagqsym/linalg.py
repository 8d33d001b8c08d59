"""Exact sparse linear algebra over Q.

Vectors are dicts ``{column: integer}``.  Elimination is fraction-free:
rows are kept primitive (content divided out) so entries stay small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def primitive(v: dict) -> dict:
    """Scale a rational vector to a primitive integer vector with positive leading entry."""
    if not v:
        return {}
    den = 1
    for c in v.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    w = {k: int(c * den) for k, c in v.items() if c}
    g = 0
    for c in w.values():
        g = gcd(g, c)
    lead = w[min(w)]
    if lead < 0:
        g = -g
    return {k: c // g for k, c in w.items()}


class Echelon:
    """Incrementally maintained row echelon form.

    ``add`` reduces a vector against the stored rows and keeps it if a
    nonzero remainder is left; the return value says whether the rank grew.
    """

    def __init__(self, ncols: int | None = None):
        self.ncols = ncols
        self.rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def full(self) -> bool:
        return self.ncols is not None and self.rank >= self.ncols

    def reduce(self, v: dict) -> dict:
        v = primitive(v)
        rows = self.rows
        while v:
            pivots = [c for c in v if c in rows]
            if not pivots:
                return v
            c = min(pivots)
            r = rows[c]
            a, b = r[c], v[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            out = {k: a * x for k, x in v.items()}
            for k, x in r.items():
                y = out.get(k, 0) - b * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            v = primitive(out)
        return v

    def add(self, v: dict) -> bool:
        if self.full():
            return False
        v = self.reduce(v)
        if not v:
            return False
        self.rows[min(v)] = v
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def rank(vectors) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def rref(vectors, ncols: int) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form with rational entries and unit pivots."""
    e = Echelon(ncols)
    for v in vectors:
        e.add(v)
    pivots = sorted(e.rows)
    rows = {c: {k: Fraction(x, e.rows[c][c]) for k, x in e.rows[c].items()} for c in pivots}
    # back substitution, last pivot first
    for c in reversed(pivots):
        rc = rows[c]
        for c2 in pivots:
            if c2 < c and c in rows[c2]:
                f = rows[c2][c]
                r2 = dict(rows[c2])
                for k, x in rc.items():
                    y = r2.get(k, 0) - f * x
                    if y:
                        r2[k] = y
                    else:
                        r2.pop(k, None)
                rows[c2] = r2
    return [rows[c] for c in pivots], pivots


def nullspace(vectors, ncols: int) -> list[dict]:
    """Basis of {z : <v, z> = 0 for every v}, one vector per free column."""
    rows, pivots = rref(vectors, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        z = {f: Fraction(1)}
        for r, p in zip(rows, pivots):
            if f in r:
                z[p] = -r[f]
        basis.append(z)
    return basis


def dense_rank(matrix) -> int:
    """Rank of a small dense rational matrix by plain Gauss-Jordan; used as an oracle."""
    m = [[Fraction(x) for x in row] for row in matrix]
    rk = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][col] != 0:
                f = m[i][col] / m[rk][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk
