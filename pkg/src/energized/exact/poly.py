"""Sparse polynomials with integer coefficients.

One class covers both polynomial rings used by the package: Laurent
polynomials in ``t`` (negative exponents allowed) and bivariate
polynomials in ``T, H``. A polynomial is a mapping from exponent tuples to
non-zero coefficients over a fixed tuple of variable names.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

__all__ = ["Poly", "NotDivisibleError", "RingMismatchError", "laurent", "bipoly", "var"]


class NotDivisibleError(ArithmeticError):
    pass


class RingMismatchError(TypeError):
    pass


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Poly:
    """Immutable sparse polynomial over a tuple of variable names."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None, vars: tuple[str, ...] = ("t",)):
        self.vars = tuple(vars)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(self.vars):
                raise ValueError(f"exponent {exp} does not match variables {self.vars}")
            c = _norm_coeff(c)
            if c != 0:
                clean[exp] = c
        self.terms = clean
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def constant(cls, c, vars: tuple[str, ...]) -> "Poly":
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def monomial(cls, exp: Iterable[int], c=1, vars: tuple[str, ...] = ("t",)) -> "Poly":
        return cls({tuple(exp): c}, vars)

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise RingMismatchError(f"cannot combine polynomials in {self.vars} and {other.vars}")
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return Poly.constant(other, self.vars)
        if isinstance(other, bool):
            return Poly.constant(int(other), self.vars)
        return None

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()}, self.vars)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise NotDivisibleError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise NotDivisibleError("negative power needs a unit coefficient")
            return Poly({tuple(k * x for x in e): c ** (-k)}, self.vars)
        result = Poly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        return self.divide_exact(other)

    def divide_exact(self, other) -> "Poly":
        """Exact quotient; raises :class:`NotDivisibleError` when it leaves the ring.

        Divisors supported: non-zero scalars and monomials (any ring), and
        arbitrary univariate divisors through long division.
        """
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide Poly by {type(other).__name__}")
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if o.is_monomial():
            (e2, c2), = o.terms.items()
            out = {}
            for e, c in self.terms.items():
                q = Fraction(c) / c2
                if q.denominator != 1 and not isinstance(c, Fraction):
                    raise NotDivisibleError(f"coefficient {c} not divisible by {c2}")
                out[tuple(a - b for a, b in zip(e, e2))] = q
            return Poly(out, self.vars)
        if len(self.vars) != 1:
            raise NotDivisibleError("multivariate division only by monomials")
        return self._univariate_divide(o)

    def _univariate_divide(self, d: "Poly") -> "Poly":
        if self.is_zero():
            return self
        shift = min(min(e[0] for e in self.terms), min(e[0] for e in d.terms))
        num = {e[0] - shift: c for e, c in self.terms.items()}
        den = {e[0] - shift: c for e, c in d.terms.items()}
        dd = max(den)
        lead = den[dd]
        quot: dict[int, int] = {}
        while num:
            top = max(num)
            if top < dd:
                raise NotDivisibleError("non-zero remainder")
            q = Fraction(num[top]) / lead
            if q.denominator != 1:
                raise NotDivisibleError("non-integral quotient coefficient")
            q = int(q)
            quot[top - dd] = q
            for e, c in den.items():
                k = e + top - dd
                v = num.get(k, 0) - q * c
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        return Poly({(e,): c for e, c in quot.items()}, self.vars)

    # comparisons ----------------------------------------------------------

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except RingMismatchError:
            return False
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def degree(self, var: str | int = 0) -> int:
        i = self.vars.index(var) if isinstance(var, str) else var
        return max((e[i] for e in self.terms), default=0)

    def min_degree(self, var: str | int = 0) -> int:
        i = self.vars.index(var) if isinstance(var, str) else var
        return min((e[i] for e in self.terms), default=0)

    def is_multilinear(self) -> bool:
        return all(0 <= x <= 1 for e in self.terms for x in e)

    def coeffs(self, var: str | int = 0) -> tuple[int, list]:
        """Univariate view ``(shift, [c_shift, c_shift+1, ...])``, ascending."""
        if len(self.vars) != 1:
            raise ValueError("coeffs() is univariate only")
        if not self.terms:
            return 0, []
        lo, hi = self.min_degree(), self.degree()
        return lo, [self.terms.get((k,), 0) for k in range(lo, hi + 1)]

    def substitute(self, **values) -> "Poly":
        """Substitute numbers for some variables; the rest stay symbolic."""
        idx = [i for i, v in enumerate(self.vars) if v in values]
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        out: dict[tuple, object] = {}
        for e, c in self.terms.items():
            val = c
            for i in idx:
                x = values[self.vars[i]]
                val = val * (Fraction(x) ** e[i] if e[i] < 0 else x ** e[i])
            k = tuple(e[i] for i in keep)
            out[k] = out.get(k, 0) + val
        if not keep:
            return _norm_coeff(out.get((), 0))
        return Poly(out, tuple(self.vars[i] for i in keep))

    def __call__(self, *args, **kwargs):
        if args:
            kwargs.update(zip(self.vars, args))
        return self.substitute(**kwargs)

    def swap(self, a: str, b: str) -> "Poly":
        """Exchange two variables."""
        i, j = self.vars.index(a), self.vars.index(b)
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return Poly(out, self.vars)

    # display --------------------------------------------------------------

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k != 0
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # serialization ----------------------------------------------------------

    def to_json(self):
        if self.vars == ("t",):
            shift, cs = self.coeffs()
            return {"shift": shift, "coeffs": cs}
        return {"vars": list(self.vars), "terms": [[*e, c] for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, obj) -> "Poly":
        if "shift" in obj:
            return laurent(obj["coeffs"], obj["shift"])
        vars = tuple(obj["vars"])
        return cls({tuple(row[:-1]): row[-1] for row in obj["terms"]}, vars)


def laurent(coeffs: Iterable[int], shift: int = 0) -> Poly:
    """Laurent polynomial ``sum coeffs[k] t^(shift+k)``."""
    return Poly({(shift + k,): c for k, c in enumerate(coeffs)}, ("t",))


def bipoly(terms: Mapping[tuple[int, int], int]) -> Poly:
    return Poly(terms, ("T", "H"))


def var(name: str, vars: tuple[str, ...] | None = None) -> Poly:
    vars = vars or (name,)
    e = tuple(1 if v == name else 0 for v in vars)
    return Poly({e: 1}, vars)
