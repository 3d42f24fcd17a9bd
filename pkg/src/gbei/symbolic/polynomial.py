"""Sparse multivariate polynomials over the rationals.

A monomial is a tuple of exponents; a polynomial maps monomials to
``Fraction`` coefficients (zero coefficients are never stored). Term
orders are small objects exposing ``key(exponents)``; a larger key means a
larger monomial.
"""

from fractions import Fraction


class MonomialOrder:
    """``lex`` or ``degrevlex`` with an optional variable ranking.

    ``ranking`` lists variable positions from largest to smallest; the
    default ranks position 0 highest.
    """

    def __init__(self, kind="lex", ranking=None):
        if kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.ranking = tuple(ranking) if ranking is not None else None

    def _ranked(self, exp):
        if self.ranking is None:
            return exp
        return tuple(exp[r] for r in self.ranking)

    def key(self, exp):
        e = self._ranked(exp)
        if self.kind == "lex":
            return e
        return (sum(e), tuple(-x for x in reversed(e)))

    @property
    def name(self):
        return self.kind if self.ranking is None else f"{self.kind}[{','.join(map(str, self.ranking))}]"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.ranking) == (other.kind, other.ranking)

    def __hash__(self):
        return hash((self.kind, self.ranking))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, ranking={self.ranking})"


class EliminationOrder:
    """Block order: the first ``k`` variables lex-compared first, then ``inner``
    on the remaining ones."""

    def __init__(self, k, inner):
        self.k = k
        self.inner = inner

    def key(self, exp):
        return (exp[:self.k], self.inner.key(exp[self.k:]))

    @property
    def name(self):
        return f"elim{self.k}+{self.inner.name}"


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class Polynomial:
    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars=None):
        clean = {}
        for exp, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(exp)] = c
        if nvars is None:
            if not clean:
                raise ValueError("nvars required for the zero polynomial")
            nvars = len(next(iter(clean)))
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def zero(cls, nvars):
        return cls({}, nvars)

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({tuple(exp): coeff}, len(exp))

    @classmethod
    def variable(cls, nvars, index):
        exp = [0] * nvars
        exp[index] = 1
        return cls.monomial(tuple(exp))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def copy(self):
        p = Polynomial.__new__(Polynomial)
        p.terms = dict(self.terms)
        p.nvars = self.nvars
        return p

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out, self.nvars)

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c, exp=None):
        """``c * x^exp * self``."""
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        if exp is None:
            return _raw({e: c * v for e, v in self.terms.items()}, self.nvars)
        return _raw({mono_mul(e, exp): c * v for e, v in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _raw(out, self.nvars)

    __rmul__ = __mul__

    def leading_monomial(self, order):
        return max(self.terms, key=order.key)

    def leading_term(self, order):
        e = self.leading_monomial(order)
        return e, self.terms[e]

    def monic(self, order):
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(1 / c)

    def sorted_terms(self, order):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def extend(self, front=0, back=0):
        """Embed into a ring with extra variables prepended/appended."""
        pad_f, pad_b = (0,) * front, (0,) * back
        return _raw({pad_f + e + pad_b: c for e, c in self.terms.items()}, self.nvars + front + back)

    def drop_front(self, k):
        """Project away the first ``k`` variables (they must not occur)."""
        assert all(not any(e[:k]) for e in self.terms), "eliminated variable still present"
        return _raw({e[k:]: c for e, c in self.terms.items()}, self.nvars - k)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Polynomial({self.terms!r})"


def _raw(terms, nvars):
    p = Polynomial.__new__(Polynomial)
    p.terms = terms
    p.nvars = nvars
    return p
