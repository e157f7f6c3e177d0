"""Dense univariate polynomials in ``k`` with exact rational coefficients."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DivisibilityError, DomainError

__all__ = [
    "Poly",
    "K",
    "ONE",
    "ZERO",
    "binomial_poly",
    "falling_factorial",
    "evaluate",
    "derivative",
    "divide_exact",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as an exact coefficient")


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``k**i``.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients
    and degree -1.  Coefficients are :class:`fractions.Fraction`, which keeps
    them in lowest terms with a positive denominator.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # construction helpers -------------------------------------------------
    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Poly":
        return cls([0] * degree + [c])

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly([other])

    # basic queries --------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def lowest_power(self) -> int:
        """Smallest ``i`` with a nonzero coefficient (-1 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return divide_exact(self, other)
        c = _frac(other)
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return Poly(x / c for x in self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative powers are not polynomials")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, self._coerce(other))

    def __call__(self, x):
        acc = Fraction(0)
        x = _frac(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # calculus -------------------------------------------------------------
    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, other: "Poly") -> "Poly":
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    # rendering ------------------------------------------------------------
    def to_text(self, var: str = "k") -> str:
        """Render as ``3k^7 - 23k^6 + 145/2k^5 ...`` in descending powers."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    @classmethod
    def from_text(cls, text: str, var: str = "k") -> "Poly":
        """Parse the format produced by :meth:`to_text`."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        term = re.compile(
            rf"([+-])(\d+(?:/\d+)?)?({re.escape(var)}(?:\^(\d+))?)?")
        pos = 0
        acc: dict[int, Fraction] = {}
        while pos < len(s):
            mt = term.match(s, pos)
            if not mt or mt.end() == pos or (mt.group(2) is None and mt.group(3) is None):
                raise DomainError(f"cannot parse polynomial text at {s[pos:]!r}")
            sign, num, mono, power = mt.groups()
            c = Fraction(num) if num else Fraction(1)
            if sign == "-":
                c = -c
            if mono is None:
                d = 0
            else:
                d = int(power) if power else 1
            acc[d] = acc.get(d, Fraction(0)) + c
            pos = mt.end()
        top = max(acc)
        return cls(acc.get(i, 0) for i in range(top + 1))

    def to_json_list(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(self.to_json_list())

    @classmethod
    def from_json(cls, data) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list):
            raise DomainError("polynomial JSON must be an array of rational strings")
        return cls(Fraction(str(x)) for x in data)


ZERO = Poly()
ONE = Poly([1])
K = Poly([0, 1])


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.leading
    if p.degree < dq:
        return ZERO, p
    quot = [Fraction(0)] * (p.degree - dq + 1)
    for i in range(p.degree - dq, -1, -1):
        c = rem[i + dq] / lead
        quot[i] = c
        if c:
            for j, b in enumerate(q.coeffs):
                rem[i + j] -= c * b
    return Poly(quot), Poly(rem[:dq])


def divide_exact(p: Poly, q: Poly) -> Poly:
    """Return ``p / q``; raise :class:`DivisibilityError` if ``q`` does not divide ``p``."""
    quot, rem = poly_divmod(p, q)
    if not rem.is_zero():
        raise DivisibilityError(rem)
    return quot


def evaluate(p: Poly, x) -> Fraction:
    return p(x)


def derivative(p: Poly) -> Poly:
    return p.derivative()


@lru_cache(maxsize=None)
def falling_factorial(a: int, length: int) -> Poly:
    """``(k - a)(k - a - 1)...`` with ``length`` factors."""
    out = ONE
    for i in range(length):
        out = out * Poly([-(a + i), 1])
    return out


@lru_cache(maxsize=None)
def binomial_poly(kappa: int) -> Poly:
    """``C(k, kappa)`` as a polynomial of degree ``kappa``."""
    if kappa < 0:
        raise DomainError("kappa must be non-negative")
    return falling_factorial(0, kappa) / factorial(kappa)


def linear(a, b=1) -> Poly:
    """``b*k + a`` -- handy for writing factors such as ``k - 2``."""
    return Poly([a, b])


def poly_sum(polys: Sequence[Poly] | Iterable[Poly]) -> Poly:
    acc = ZERO
    for p in polys:
        acc = acc + p
    return acc
