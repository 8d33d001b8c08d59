"""DNSym, the free algebra on letters h_alpha (alpha a nonzero bivector), and
its duality with DQSym.

A word h_{alpha_1} ... h_{alpha_k} is indexed by the bicomposition
(alpha_1, ..., alpha_k); the empty word is the unit.
"""

from __future__ import annotations

from . import bicomp, dqsym
from .bicomp import Bicomposition
from .dqsym import DQSymElt, TensorElt, _LinearCombination, format_element, format_tensor


class DNSymElt(_LinearCombination):
    def __mul__(self, other):
        if isinstance(other, DNSymElt):
            return h_product(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: bicomp.sort_key(kv[0]))

    def __repr__(self):
        return format_words(self)


class DNTensor(TensorElt):
    """Tensor square of DNSym; multiplication concatenates both factors."""

    def __mul__(self, other):
        if isinstance(other, TensorElt):
            out: dict = {}
            for (a1, a2), c in self.terms.items():
                for (b1, b2), d in other.terms.items():
                    key = (a1 + b1, a2 + b2)
                    out[key] = out.get(key, 0) + c * d
            return DNTensor(out)
        return self.scale(other)

    def __repr__(self):
        return format_tensor(self, "h")


def format_words(u: DNSymElt) -> str:
    """Render as ``c*h[2/1]*h[0/3]``; the unit word is ``h[-]``."""
    if not u.terms:
        return "0"
    out = []
    for w, c in u.items():
        word = "*".join(f"h[{bicomp.fmt((letter,))}]" for letter in w) or "h[-]"
        out.append(word if c == 1 else f"{dqsym._fmt_coeff(c)}*{word}")
    return " + ".join(out)


def h(*letters, coeff=1) -> DNSymElt:
    """Word in the generators; each letter is a bivector (a, b)."""
    word = bicomp.make([tuple(x) for x in letters])
    return DNSymElt({word: coeff})


def h_word(c: Bicomposition, coeff=1) -> DNSymElt:
    return DNSymElt({tuple(c): coeff})


ONE = DNSymElt({(): 1})


def h_product(u: DNSymElt, v: DNSymElt) -> DNSymElt:
    out: dict = {}
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            out[a + b] = out.get(a + b, 0) + ca * cb
    return DNSymElt(out)


def _letter_coproduct(alpha) -> DNTensor:
    out = {}
    for b0 in range(alpha[0] + 1):
        for b1 in range(alpha[1] + 1):
            beta = (b0, b1)
            gamma = (alpha[0] - b0, alpha[1] - b1)
            # h_0 is the unit
            left = () if beta == (0, 0) else (beta,)
            right = () if gamma == (0, 0) else (gamma,)
            out[left, right] = out.get((left, right), 0) + 1
    return DNTensor(out)


def h_coproduct(u: DNSymElt) -> DNTensor:
    """Coproduct as the algebra morphism extending the rule on letters."""
    out = DNTensor()
    for w, c in u.terms.items():
        t = DNTensor({((), ()): c})
        for letter in w:
            t = t * _letter_coproduct(letter)
        out = out + t
    return out


def h_counit(u: DNSymElt):
    return u.terms.get((), 0)


def pairing(u: DNSymElt, v: DQSymElt):
    """<h_a, M_b> = 1 if a == b else 0, extended bilinearly."""
    return sum((c * v.terms[a] for a, c in u.terms.items() if a in v.terms), 0)


def tensor_pairing(s: TensorElt, t: TensorElt):
    return sum((c * t.terms[k] for k, c in s.terms.items() if k in t.terms), 0)


def duality_check(a: Bicomposition, b: Bicomposition, c: Bicomposition) -> bool:
    """Both adjointness identities for the index triple (a, b, c)."""
    a, b, c = tuple(a), tuple(b), tuple(c)
    prod_side = pairing(h_word(c), dqsym.M(a) * dqsym.M(b))
    coprod_side = tensor_pairing(h_coproduct(h_word(c)), TensorElt({(a, b): 1}))
    if prod_side != coprod_side:
        return False
    hprod_side = pairing(h_word(a) * h_word(b), dqsym.M(c))
    mcoprod_side = tensor_pairing(TensorElt({(a, b): 1}), dqsym.coproduct(dqsym.M(c)))
    return hprod_side == mcoprod_side


def format_dn(u: DNSymElt) -> str:
    return format_element(u, "h")
