"""Continued fractions, q-rationals and the matrices M_q and M_q^+.

For a rational ``r/t >= 1`` we use two expansions:

* regular ``[a1, ..., a2m]``, always normalized to an even number of terms;
* negative ``[[c1, ..., ck]]`` with ``c_i >= 2`` for ``i >= 2``.

The q-deformation ``R(q)/T(q)`` is computed from the fence of
``alpha = (a1 - 1, a2, ..., a2m - 1)``: ``R`` is its rank polynomial and ``T``
the rank polynomial of the same fence with its leftmost segment removed.
:func:`q_rational` also evaluates both nested q-fractions and checks that
they agree with ``R/T``.

``1/1`` is a boundary case.  Its regular expansion is ``[0, 1]`` and its
negative expansion ``[[1]]``; there is no fence for it, so :func:`alpha_of`
rejects it and the other functions special-case it.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .fence import (
    InvalidParams,
    circular_rank,
    circular_rank_oracle,
    clmat,
    drm_of_composition,
    left_deleted_rank,
    rank,
    rank_oracle,
    rmm_of_composition,
    trace_rank,
)
from .matrix import D0, I2, R_Q, S_Q, U0, RankMatrix
from .poset import Composition
from .qpoly import ONE, Q, LaurentPoly, RatFunc, qint, qint_inv


class InternalMismatch(AssertionError):
    """Two computations that must agree did not.  Always a bug."""


# -- rationals ------------------------------------------------------------------

@dataclass(frozen=True)
class Rational:
    r: int
    t: int

    def __post_init__(self):
        if self.t < 1 or self.r < 1:
            raise ValueError(f"need positive numerator and denominator, got {self.r}/{self.t}")
        if math.gcd(self.r, self.t) != 1:
            raise ValueError(f"{self.r}/{self.t} is not in lowest terms")
        if self.r < self.t:
            raise ValueError(f"{self.r}/{self.t} < 1; only r/t >= 1 is supported")

    @property
    def value(self) -> Fraction:
        return Fraction(self.r, self.t)

    def __str__(self):
        return f"{self.r}/{self.t}"


_FRACTION = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text) -> Rational:
    """Accept ``"32/9"``, ``"5"``, a Fraction, an int or a Rational."""
    if isinstance(text, Rational):
        return text
    if isinstance(text, int):
        return Rational(text, 1)
    if isinstance(text, Fraction):
        return Rational(text.numerator, text.denominator)
    m = _FRACTION.match(str(text))
    if not m:
        raise ValueError(f"cannot parse {text!r} as r/t")
    return Rational(int(m.group(1)), int(m.group(2) or 1))


def all_rationals(rmax: int) -> list[Rational]:
    """Every coprime ``r/t`` with ``1 <= t <= r <= rmax``, sorted by (r, t)."""
    return [
        Rational(r, t)
        for r in range(1, rmax + 1)
        for t in range(1, r + 1)
        if math.gcd(r, t) == 1
    ]


# -- continued fractions --------------------------------------------------------

class RegularCF(tuple):
    """``[a1, ..., a2m]`` with ``a1 >= 1`` and the rest ``>= 1``.

    ``[0, 1]`` (the expansion of 1) is the only form allowed with ``a1 = 0``.
    """

    def __new__(cls, terms: Iterable[int]):
        terms = tuple(int(a) for a in terms)
        if not terms or len(terms) % 2:
            raise ValueError(f"a regular expansion needs an even number of terms, got {terms}")
        if terms != (0, 1) and (terms[0] < 1 or any(a < 1 for a in terms[1:])):
            raise ValueError(f"invalid regular continued fraction {terms}")
        return super().__new__(cls, terms)

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self):
        return f"RegularCF({list(self)})"


class NegativeCF(tuple):
    """``[[c1, ..., ck]]`` with every term ``>= 2`` (``[[1]]`` stands for 1)."""

    def __new__(cls, terms: Iterable[int]):
        terms = tuple(int(c) for c in terms)
        if not terms:
            raise ValueError("empty negative continued fraction")
        if terms != (1,) and any(c < 2 for c in terms):
            raise ValueError(f"invalid negative continued fraction {terms}")
        return super().__new__(cls, terms)

    def __str__(self):
        return "[[" + ",".join(map(str, self)) + "]]"

    def __repr__(self):
        return f"NegativeCF({list(self)})"


def parse_cf(text: str) -> RegularCF | NegativeCF:
    """``"[3,1,1,4]"`` gives a RegularCF, ``"[[4,3,2,2,2]]"`` a NegativeCF."""
    s = text.strip()
    negative = s.startswith("[[")
    body = s.strip("[] ")
    try:
        terms = [int(x) for x in body.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse continued fraction {text!r}") from None
    return NegativeCF(terms) if negative else RegularCF(terms)


def expand_regular(x) -> RegularCF:
    x = parse_rational(x)
    r, t = x.r, x.t
    terms = []
    while t:
        terms.append(r // t)
        r, t = t, r % t
    if len(terms) % 2:
        # the Euclid expansion ends in a term >= 2 except for the integer 1
        terms[-1:] = [terms[-1] - 1, 1]
    return RegularCF(terms)


def expand_negative(x) -> NegativeCF:
    x = parse_rational(x)
    r, t = x.r, x.t
    terms = []
    while True:
        c = -(-r // t)
        terms.append(c)
        if c * t == r:
            break
        r, t = t, c * t - r
    return NegativeCF(terms)


def regular_to_negative(a) -> NegativeCF:
    a = RegularCF(a)
    out = [a[0] + 1] + [2] * (a[1] - 1)
    for i in range(2, len(a), 2):
        out += [a[i] + 2] + [2] * (a[i + 1] - 1)
    return NegativeCF(out)


def evaluate(cf) -> Fraction:
    """Exact value of a RegularCF or NegativeCF."""
    terms = list(cf)
    value = Fraction(terms[-1])
    sign = -1 if isinstance(cf, NegativeCF) else 1
    for term in reversed(terms[:-1]):
        value = term + sign / value
    return value


# -- fences attached to r/t -----------------------------------------------------

def alpha_of(x) -> Composition:
    """The composition ``(a1 - 1, a2, ..., a2m - 1)``, possibly with zero ends."""
    x = parse_rational(x)
    if x.r == x.t:
        raise ValueError("1/1 has no fence; its q-rational is 1")
    a = expand_regular(x)
    return Composition((a[0] - 1,) + tuple(a[1:-1]) + (a[-1] - 1,))


def rational_of_alpha(alpha) -> Rational:
    """Inverse of :func:`alpha_of`: read ``[u1 + 1, d1, ..., ds + 1]``."""
    alpha = Composition(alpha)
    if len(alpha) % 2:
        alpha = Composition(tuple(alpha) + (0,))
    terms = (alpha[0] + 1,) + tuple(alpha[1:-1]) + (alpha[-1] + 1,)
    return parse_rational(evaluate(RegularCF(terms)))


def numerator_poly(x) -> LaurentPoly:
    x = parse_rational(x)
    return ONE if x.r == x.t else rank(alpha_of(x))


def denominator_poly(x) -> LaurentPoly:
    x = parse_rational(x)
    return ONE if x.r == x.t else left_deleted_rank(alpha_of(x))


def regular_q_form(a) -> RatFunc:
    """Nested q-fraction built from the regular expansion.

    Odd positions contribute ``[a]_q`` and ``q^a``; even positions
    ``[a]_{1/q}`` and ``q^-a``.
    """
    a = RegularCF(a)
    value = RatFunc(qint(a[-1]) if len(a) % 2 else qint_inv(a[-1]))
    for i in range(len(a) - 2, -1, -1):
        odd_position = i % 2 == 0
        head = qint(a[i]) if odd_position else qint_inv(a[i])
        step = Q ** a[i] if odd_position else Q ** (-a[i])
        value = RatFunc(head) + RatFunc(step) / value
    return value


def negative_q_form(c) -> RatFunc:
    c = NegativeCF(c)
    value = RatFunc(qint(c[-1]))
    for term in reversed(c[:-1]):
        value = RatFunc(qint(term)) - RatFunc(Q ** (term - 1)) / value
    return value


def q_rational(x) -> RatFunc:
    """``R(q)/T(q)``, checked against both nested q-fractions."""
    x = parse_rational(x)
    result = RatFunc(numerator_poly(x), denominator_poly(x))
    via_regular = regular_q_form(expand_regular(x))
    via_negative = negative_q_form(expand_negative(x))
    if via_regular != via_negative:
        raise InternalMismatch(f"the two q-fractions of {x} disagree")
    if via_regular != result:
        raise InternalMismatch(f"q-fraction of {x} differs from the fence rank quotient")
    if result.num.at_one() != x.r or result.den.at_one() != x.t:
        raise InternalMismatch(f"R(1)/T(1) != {x}")
    return result


# -- PSL_q(2, Z) words -----------------------------------------------------------

RSR = R_Q @ S_Q @ R_Q


def matrix_Mq(c) -> RankMatrix:
    """``R^c1 S R^c2 S ... R^ck S``."""
    out = I2
    for term in c:
        out = out @ (R_Q ** int(term)) @ S_Q
    return out


def matrix_Mq_plus(a) -> RankMatrix:
    """``R^a1 (RSR)^a2 R^a3 (RSR)^a4 ...``."""
    out = I2
    for i, term in enumerate(a):
        out = out @ ((R_Q if i % 2 == 0 else RSR) ** int(term))
    return out


def trace_theorems(x, oracle: bool = False, max_nodes: int = 64) -> dict[str, bool]:
    """Check the fence descriptions of ``M_q`` and ``M_q^+`` for ``r/t``.

    Returns ``{statement: holds}``.  With ``oracle`` the two traces are also
    compared with brute-force circular rank polynomials.
    """
    x = parse_rational(x)
    a = expand_regular(x)
    c = expand_negative(x)
    mq, mplus = matrix_Mq(c), matrix_Mq_plus(a)
    R, T = numerator_poly(x), denominator_poly(x)
    report = {
        "negative expansion from regular": regular_to_negative(a) == c,
        "M_q top-left = R, bottom-left = T": mq[0, 0] == R and mq[1, 0] == T,
        "M_q+ top-left = qR, bottom-left = qT": mplus[0, 0] == Q * R and mplus[1, 0] == Q * T,
    }
    if x.r == x.t:
        # no fence for 1; M_q([[1]]) = R S has trace 1 (only the empty ideal
        # survives) and M_q+([0,1]) = RSR has the trace of D0
        report["tr M_q = 1"] = mq.trace() == ONE
        report["tr M_q+ = tr D0"] = mplus.trace() == D0.trace() == trace_rank((0, 1))
        return report

    alpha = alpha_of(x)
    shifted = (a[0] - 1,) + tuple(a[1:])
    report["M_q = rmm(alpha)"] = mq == rmm_of_composition(alpha)
    report["M_q = clmat(alpha) D0"] = mq == clmat(alpha) @ D0
    report["M_q+ = clmat(alpha) D0 U0"] = mplus == clmat(alpha) @ D0 @ U0
    report["M_q+ = drm(a1-1, a2, ..., a2m)"] = mplus == drm_of_composition(shifted)
    report["tr M_q = circular rank (a1-1, a2, ..., a2m)"] = mq.trace() == trace_rank(shifted)
    report["tr M_q+ = circular rank (a1, ..., a2m)"] = mplus.trace() == circular_rank(a)
    if oracle:
        report["oracle: R"] = R == rank_oracle(alpha, max_nodes)
        report["oracle: tr M_q"] = mq.trace() == circular_rank_oracle(shifted, max_nodes)
        report["oracle: tr M_q+"] = mplus.trace() == circular_rank_oracle(a, max_nodes)
    return report


# -- non-unimodal traces ------------------------------------------------------------

def _ce1_closed(k: int) -> LaurentPoly:
    return ONE + Q ** k


def _ce2_closed(n: int) -> LaurentPoly:
    rising = list(range(1, n + 2))
    return LaurentPoly(rising + [n] + rising[::-1])


def counterexamples(kind: str, n: int) -> LaurentPoly:
    """Trace polynomial of one of the non-unimodal families.

    ``CE1``: ``tr M_q(2^n) = 1 + q^n`` for ``n >= 2``.
    ``CE2``: ``tr M_q(n+2, n+2)``, coefficients ``1..n+1, n, n+1..1``.
    ``CE2'``: ``tr M_q(2^(n-1), 3, 2^(n-1), 3)``, same polynomial as CE2.
    """
    kind = kind.upper().replace("PRIME", "'")
    if kind == "CE1":
        if n < 2:
            raise InvalidParams("CE1 needs n >= 2")
        value, closed = matrix_Mq([2] * n).trace(), _ce1_closed(n)
    elif kind == "CE2":
        if n < 1:
            raise InvalidParams("CE2 needs n >= 1")
        value, closed = matrix_Mq([n + 2, n + 2]).trace(), _ce2_closed(n)
    elif kind == "CE2'":
        if n < 1:
            raise InvalidParams("CE2' needs n >= 1")
        half = [2] * (n - 1) + [3]
        value, closed = matrix_Mq(half + half).trace(), _ce2_closed(n)
    else:
        raise InvalidParams(f"unknown family {kind!r}; choose CE1, CE2 or CE2'")
    if value != closed:
        raise InternalMismatch(f"{kind}({n}) = {value}, expected {closed}")
    if value.is_unimodal():
        raise InternalMismatch(f"{kind}({n}) = {value} is unimodal")
    return value
