"""Truncated power series in q (univariate) and in q, t (bivariate).

Coefficients past the truncation are unknown; asking for one raises.
"""

from __future__ import annotations

from fractions import Fraction


class TruncationError(KeyError):
    pass


class UnivariateSeries:
    def __init__(self, coeffs, trunc: int):
        self.trunc = trunc
        self.coeffs = {k: Fraction(c) for k, c in dict(coeffs).items() if c and k <= trunc}

    @classmethod
    def from_list(cls, values, trunc: int | None = None):
        if trunc is None:
            trunc = len(values) - 1
        return cls(dict(enumerate(values)), trunc)

    @classmethod
    def one(cls, trunc: int):
        return cls({0: 1}, trunc)

    def __getitem__(self, k: int) -> Fraction:
        if k > self.trunc:
            raise TruncationError(f"coefficient q^{k} beyond truncation {self.trunc}")
        return self.coeffs.get(k, Fraction(0))

    def to_list(self) -> list[Fraction]:
        return [self[k] for k in range(self.trunc + 1)]

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __eq__(self, other):
        if not isinstance(other, UnivariateSeries):
            return NotImplemented
        t = min(self.trunc, other.trunc)
        return all(self[k] == other[k] for k in range(t + 1))

    def __add__(self, other):
        t = min(self.trunc, other.trunc)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return UnivariateSeries(out, t)

    def __neg__(self):
        return UnivariateSeries({k: -c for k, c in self.coeffs.items()}, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UnivariateSeries):
            return UnivariateSeries({k: c * other for k, c in self.coeffs.items()}, self.trunc)
        t = min(self.trunc, other.trunc)
        out: dict = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                if i + j <= t:
                    out[i + j] = out.get(i + j, 0) + a * b
        return UnivariateSeries(out, t)

    __rmul__ = __mul__

    def with_trunc(self, trunc: int) -> UnivariateSeries:
        if trunc > self.trunc:
            raise TruncationError("cannot extend a truncated series")
        return UnivariateSeries(self.coeffs, trunc)

    def __repr__(self):
        terms = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                terms.append(str(c))
            elif c in (1, -1):
                terms.append(mono if c == 1 else f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return (" + ".join(terms) or "0").replace("+ -", "- ") + f" + O(q^{self.trunc + 1})"


class BivariateSeries:
    """Series in q, t truncated to the box q-degree <= tq, t-degree <= tt."""

    def __init__(self, coeffs, trunc: tuple[int, int]):
        self.trunc = tuple(trunc)
        tq, tt = self.trunc
        self.coeffs = {
            (i, j): Fraction(c) for (i, j), c in dict(coeffs).items() if c and i <= tq and j <= tt
        }

    @classmethod
    def one(cls, trunc):
        return cls({(0, 0): 1}, trunc)

    def __getitem__(self, key) -> Fraction:
        i, j = key
        if i > self.trunc[0] or j > self.trunc[1]:
            raise TruncationError(f"coefficient q^{i} t^{j} beyond truncation {self.trunc}")
        return self.coeffs.get((i, j), Fraction(0))

    def _box(self, other):
        return (min(self.trunc[0], other.trunc[0]), min(self.trunc[1], other.trunc[1]))

    def __eq__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        tq, tt = self._box(other)
        return all(self[i, j] == other[i, j] for i in range(tq + 1) for j in range(tt + 1))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariateSeries(out, self._box(other))

    def __neg__(self):
        return BivariateSeries({k: -c for k, c in self.coeffs.items()}, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivariateSeries):
            return BivariateSeries({k: c * other for k, c in self.coeffs.items()}, self.trunc)
        tq, tt = box = self._box(other)
        out: dict = {}
        for (i, j), a in self.coeffs.items():
            for (k, l), b in other.coeffs.items():
                if i + k <= tq and j + l <= tt:
                    key = (i + k, j + l)
                    out[key] = out.get(key, 0) + a * b
        return BivariateSeries(out, box)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BivariateSeries.one(self.trunc)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> BivariateSeries:
        """Multiplicative inverse; needs a nonzero constant term."""
        c0 = self[0, 0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        tq, tt = self.trunc
        inv: dict = {}
        for total in range(tq + tt + 1):
            for i in range(min(total, tq) + 1):
                j = total - i
                if j > tt:
                    continue
                if (i, j) == (0, 0):
                    inv[0, 0] = 1 / c0
                    continue
                acc = Fraction(0)
                for (a, b), c in self.coeffs.items():
                    if (a, b) != (0, 0) and a <= i and b <= j:
                        acc += c * inv.get((i - a, j - b), 0)
                inv[i, j] = -acc / c0
        return BivariateSeries(inv, self.trunc)

    def negative_terms(self):
        return sorted(k for k, c in self.coeffs.items() if c < 0)

    def __repr__(self):
        terms = []
        for (i, j) in sorted(self.coeffs, key=lambda k: (k[0] + k[1], -k[0])):
            c = self.coeffs[i, j]
            mono = "*".join(
                s for s in (("q" if i == 1 else f"q^{i}") if i else "", ("t" if j == 1 else f"t^{j}") if j else "") if s
            )
            if not mono:
                terms.append(str(c))
            elif c in (1, -1):
                terms.append(mono if c == 1 else f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return (" + ".join(terms) or "0").replace("+ -", "- ")


def geometric(ratio_deg: tuple[int, int], trunc, coeff=1) -> BivariateSeries:
    """1 / (1 - coeff * q^a t^b) truncated to the box."""
    a, b = ratio_deg
    if a == 0 and b == 0:
        raise ValueError("ratio must have positive degree")
    out = {}
    k = 0
    while k * a <= trunc[0] and k * b <= trunc[1]:
        out[k * a, k * b] = Fraction(coeff) ** k
        k += 1
    return BivariateSeries(out, trunc)
