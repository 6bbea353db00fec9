"""Exact Laurent polynomials in q with integer coefficients.

Everything in the package (rank polynomials, traces, q-integers, matrix
entries) is a :class:`LaurentPoly`.  Coefficients are Python ints, so there
is no overflow however deep the computation goes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class NotDivisible(ArithmeticError):
    """Raised by :meth:`LaurentPoly.divide_exact` when a remainder is left."""


class LaurentPoly:
    """Dense Laurent polynomial ``sum(coeffs[i] * q**(min_deg + i))``.

    Instances are immutable and kept in canonical form: no leading or
    trailing zero coefficients, and the zero polynomial is ``min_deg=0,
    coeffs=()``.
    """

    __slots__ = ("_min_deg", "_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = (), min_deg: int = 0):
        cs = [int(c) for c in coeffs]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self._min_deg = 0
            self._coeffs: tuple[int, ...] = ()
        else:
            self._min_deg = int(min_deg) + lo
            self._coeffs = tuple(cs[lo:hi])
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "LaurentPoly":
        return cls((c,), k)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "LaurentPoly":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls((x,))
        raise TypeError(f"cannot convert {type(x).__name__} to LaurentPoly")

    # -- basic accessors --------------------------------------------------

    @property
    def min_deg(self) -> int:
        return self._min_deg

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def max_deg(self) -> int:
        """Highest exponent; equals ``min_deg - 1`` for the zero polynomial."""
        return self._min_deg + len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __getitem__(self, k: int) -> int:
        """Coefficient of q**k."""
        i = k - self._min_deg
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def terms(self):
        for i, c in enumerate(self._coeffs):
            if c:
                yield self._min_deg + i, c

    def is_polynomial(self) -> bool:
        return self.is_zero() or self._min_deg >= 0

    # -- ring operations ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._min_deg == other._min_deg and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._min_deg, self._coeffs))
        return self._hash

    def __neg__(self):
        return LaurentPoly([-c for c in self._coeffs], self._min_deg)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        lo = min(self._min_deg, other._min_deg)
        hi = max(self.max_deg, other.max_deg)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self._coeffs):
            out[self._min_deg - lo + i] += c
        for i, c in enumerate(other._coeffs):
            out[other._min_deg - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly([c * other for c in self._coeffs], self._min_deg)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(out, self._min_deg + other._min_deg)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._coeffs) == 1 and self._coeffs[0] in (1, -1):
                c = self._coeffs[0]
                return LaurentPoly.monomial(self._min_deg * n, c ** (-n))
            raise ValueError("only monomials ±q^k are invertible")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- exponent manipulation ------------------------------------------

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        if not self._coeffs:
            return self
        return LaurentPoly(self._coeffs, self._min_deg + k)

    def reverse(self) -> "LaurentPoly":
        """Reverse the coefficient sequence, keeping ``min_deg``.

        Equals ``q**(min_deg + max_deg) * self(1/q)``.
        """
        return LaurentPoly(self._coeffs[::-1], self._min_deg)

    def substitute_inverse(self) -> "LaurentPoly":
        """The polynomial ``self(1/q)``."""
        if not self._coeffs:
            return self
        return LaurentPoly(self._coeffs[::-1], -self.max_deg)

    def eval(self, x):
        """Evaluate at an int or Fraction (negative powers give Fractions)."""
        total = 0
        for k, c in self.terms():
            if k >= 0:
                total += c * x ** k
            else:
                total += c * Fraction(1, 1) / Fraction(x) ** (-k)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def at_one(self) -> int:
        return sum(self._coeffs)

    # -- predicates -------------------------------------------------------

    def is_symmetric(self) -> bool:
        return self._coeffs == self._coeffs[::-1]

    def is_unimodal(self) -> bool:
        """Coefficients (internal zeros included) weakly rise then weakly fall."""
        cs = self._coeffs
        i, n = 0, len(cs)
        while i + 1 < n and cs[i] <= cs[i + 1]:
            i += 1
        while i + 1 < n and cs[i] >= cs[i + 1]:
            i += 1
        return i >= n - 1

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._coeffs)

    # -- division -----------------------------------------------------------

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return ``c`` with ``other * c == self``; raise NotDivisible otherwise."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        a, b = list(self._coeffs), other._coeffs
        n = len(a) - len(b) + 1
        if n <= 0:
            raise NotDivisible(f"{self} is not divisible by {other}")
        b0 = b[0]
        quot = []
        for i in range(n):
            c, r = divmod(a[i], b0)
            if r:
                raise NotDivisible(f"{self} is not divisible by {other}")
            quot.append(c)
            if c:
                for j, y in enumerate(b):
                    a[i + j] -= c * y
        if any(a):
            raise NotDivisible(f"{self} is not divisible by {other}")
        return LaurentPoly(quot, self._min_deg - other._min_deg)

    def __floordiv__(self, other):
        return self.divide_exact(other)

    # -- formatting -------------------------------------------------------

    def _format(self, pow_fmt) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in self.terms():
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else pow_fmt(k)
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self):
        return self._format(lambda k: f"q^{k}")

    def to_latex(self) -> str:
        return self._format(lambda k: f"q^{{{k}}}")

    def __repr__(self):
        return f"LaurentPoly({list(self._coeffs)!r}, min_deg={self._min_deg})"

    def to_json(self) -> dict:
        return {"min_deg": self._min_deg, "coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls([int(c) for c in data["coeffs"]], int(data["min_deg"]))


ZERO = LaurentPoly()
ONE = LaurentPoly((1,))
Q = LaurentPoly((1,), 1)
Q_INV = LaurentPoly((1,), -1)


def poly(*coeffs: int, min_deg: int = 0) -> LaurentPoly:
    """Shorthand: ``poly(1, 3, 5)`` is 1 + 3q + 5q^2."""
    return LaurentPoly(coeffs, min_deg)


def qint(n: int) -> LaurentPoly:
    """The q-integer [n]_q; [-n]_q = -q^-1 - ... - q^-n."""
    if n >= 0:
        return LaurentPoly([1] * n)
    return LaurentPoly([-1] * (-n), n)


def qint_inv(n: int) -> LaurentPoly:
    """[n]_{q^-1}, the q-integer with q replaced by 1/q."""
    return qint(n).substitute_inverse()


def mul(a, b) -> LaurentPoly:
    return LaurentPoly.coerce(a) * LaurentPoly.coerce(b)


def add(a, b) -> LaurentPoly:
    return LaurentPoly.coerce(a) + LaurentPoly.coerce(b)


def shift(a: LaurentPoly, k: int) -> LaurentPoly:
    return a.shift(k)


def reverse(a: LaurentPoly) -> LaurentPoly:
    return a.reverse()


def is_symmetric(a: LaurentPoly) -> bool:
    return a.is_symmetric()


def is_unimodal(a: LaurentPoly) -> bool:
    return a.is_unimodal()


def divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a.divide_exact(b)


def product(factors: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ONE
    for f in factors:
        out = out * f
    return out


def from_symmetric_prefix(prefix: Sequence[int], degree: int) -> LaurentPoly:
    """Complete a palindromic polynomial of the given degree from its first coefficients.

    Mirrors how tables print symmetric polynomials as ``1 + 4q + ... + q^14``.
    """
    coeffs = [0] * (degree + 1)
    for i, c in enumerate(prefix):
        coeffs[i] = c
        coeffs[degree - i] = c
    if len(prefix) * 2 < degree + 1:
        raise ValueError("prefix too short to determine the polynomial")
    return LaurentPoly(coeffs)


class RatFunc:
    """Quotient ``num / den`` of Laurent polynomials, never reduced.

    Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num, den = LaurentPoly.coerce(num), LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        return x if isinstance(x, RatFunc) else cls(x)

    def __eq__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __add__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by a zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def eval(self, x):
        return Fraction(self.num.eval(x)) / Fraction(self.den.eval(x))

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"
