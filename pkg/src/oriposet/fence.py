"""Rank polynomials of fences and circular fences via U0/D0 products.

A fence ``(u1, d1, ..., us, ds)`` is built one node at a time: ``U0`` for
a node followed by an up step, ``D0`` for a node followed by a down step.
This gives

* ``rmm_of_composition(a) = U0^u1 D0^d1 ... U0^us D0^(ds+1)``, top-left entry
  is ``rank(a; q)``;
* ``drm_of_composition(a) = U0^u1 D0^d1 ... U0^us D0^ds U0``, top row sums
  to ``rank(a; q)``;
* ``clmat(a) = U0^u1 D0^d1 ... U0^us D0^ds``, trace is the circular rank.

Leading and trailing zero parts are accepted by the matrix builders
(a fence starting with a down step, or ending with an up step).
"""

from __future__ import annotations

from typing import Callable, Sequence

from .matrix import D0, U0, RankMatrix, word_product
from .poset import Composition, InvalidComposition, OddLength, circular_fence, fence, power
from .qpoly import ONE, Q, LaurentPoly, qint


class InvalidParams(ValueError):
    pass


def _extended(parts) -> Composition:
    parts = Composition(parts)
    nz = [k for k, p in enumerate(parts) if p]
    if nz and any(p == 0 for p in parts[nz[0] : nz[-1] + 1]):
        raise InvalidComposition(f"zero part in the interior of {tuple(parts)}")
    return parts


def _segments(parts: Sequence[int]) -> list[tuple[RankMatrix, int]]:
    return [(U0 if k % 2 == 0 else D0, p) for k, p in enumerate(parts)]


def rmm_of_composition(parts) -> RankMatrix:
    """Rank matrix of the fence of ``parts`` (odd length means ``ds = 0``)."""
    parts = _extended(parts)
    factors = _segments(parts)
    if len(parts) % 2:
        factors.append((D0, 1))
    else:
        factors[-1] = (D0, parts[-1] + 1)
    return word_product(factors)


def drm_of_composition(parts) -> RankMatrix:
    parts = _extended(parts)
    return word_product(_segments(parts) + [(U0, 1)])


def clmat(parts) -> RankMatrix:
    """Matrix whose trace is the circular rank polynomial of ``parts``."""
    parts = _extended(parts)
    if len(parts) % 2:
        raise OddLength(
            f"clmat needs an even number of parts, got {tuple(parts)}; "
            "see close_composition() for the explicit normalization"
        )
    return word_product(_segments(parts))


def close_composition(parts) -> Composition:
    """Composition of the circular fence obtained by closing the fence of ``parts``.

    Even length: the last part grows by one.  Odd length: a part of size 1
    is appended.  ``trace(rmm_of_composition(a)) == circular_rank(close_composition(a))``.
    """
    parts = Composition(parts).require_positive()
    if len(parts) % 2:
        return Composition(parts + (1,))
    return Composition(parts[:-1] + (parts[-1] + 1,))


def rank(parts) -> LaurentPoly:
    """rank(alpha; q) via the matrix product."""
    return rmm_of_composition(parts)[0, 0]


def rank_from_drm(parts) -> LaurentPoly:
    m = drm_of_composition(parts)
    return m[0, 0] + m[0, 1]


def circular_rank(parts) -> LaurentPoly:
    """Circular rank polynomial; even length, parts >= 1."""
    parts = Composition(parts).require_positive()
    if len(parts) % 2:
        raise OddLength(f"circular rank needs an even number of parts, got {tuple(parts)}")
    return clmat(parts).trace()


def trace_rank(parts) -> LaurentPoly:
    """``tr(clmat(parts))``, also for forms with zero end parts."""
    return clmat(parts).trace()


def rank_oracle(parts, max_nodes=None) -> LaurentPoly:
    return fence(parts, allow_zero_ends=True).rank_poly(max_nodes)


def circular_rank_oracle(parts, max_nodes=None) -> LaurentPoly:
    return circular_fence(parts, allow_zero_ends=True).rank_poly(max_nodes)


def left_deleted(parts) -> Composition | None:
    """The fence with its leftmost segment removed.

    ``(u1, d1, rest...)`` becomes ``(0, d1 - 1, rest...)``; ``None`` when
    nothing is left.
    """
    parts = tuple(_extended(parts))
    while len(parts) >= 2 and parts[0] == 0 and parts[1] == 0:
        parts = parts[2:]
    if len(parts) < 2 or parts[1] == 0:
        return None
    return Composition((0, parts[1] - 1) + parts[2:])


def left_deleted_rank(parts) -> LaurentPoly:
    rest = left_deleted(parts)
    return ONE if rest is None else rank(rest)


# -- the Psi maps -----------------------------------------------------------

def psi_plus(M: RankMatrix) -> LaurentPoly:
    (x11, x12), (x21, x22) = M.rows
    return x11 + x12 - (ONE + Q) * x21 - x22


def psi_minus(M: RankMatrix) -> LaurentPoly:
    (x11, x12), (x21, x22) = M.rows
    return x11 + (ONE - Q) * x12 - (ONE + Q * Q) * x21 - x22


def palindromic_vanishing(rho) -> dict[str, bool]:
    """Which of the vanishing statements hold for a palindromic ``rho``.

    Even length: ``psi_plus`` kills ``clmat(rho)`` and ``clmat(0, rho, 0)``.
    Odd length: ``psi_minus`` kills ``clmat(0, rho)``; for ``clmat(rho, 0)``
    both ``psi_minus`` and ``psi_plus`` are reported, since only one of
    them can be the intended statement.
    """
    rho = Composition(rho).require_positive()
    if not rho.is_palindromic():
        raise InvalidParams(f"{tuple(rho)} is not palindromic")
    r = tuple(rho)
    if len(r) % 2 == 0:
        return {
            "psi+(clmat(rho))": psi_plus(clmat(r)).is_zero(),
            "psi+(clmat(0,rho,0))": psi_plus(clmat((0,) + r + (0,))).is_zero(),
        }
    return {
        "psi-(clmat(0,rho))": psi_minus(clmat((0,) + r)).is_zero(),
        "psi-(clmat(rho,0))": psi_minus(clmat(r + (0,))).is_zero(),
        "psi+(clmat(rho,0))": psi_plus(clmat(r + (0,))).is_zero(),
    }


# -- identities between circular rank polynomials -------------------------------

def _palindromic_even(X, allow_empty=True) -> tuple[int, ...]:
    X = tuple(int(x) for x in X)
    if not X and allow_empty:
        return X
    if not X:
        raise InvalidParams("composition must be nonempty")
    if any(x < 1 for x in X):
        raise InvalidParams(f"parts must be >= 1: {X}")
    if X != X[::-1] or len(X) % 2:
        raise InvalidParams(f"{X} is not a palindromic composition of even length")
    return X


def _need(cond: bool, msg: str):
    if not cond:
        raise InvalidParams(msg)


def id0_1(k: int, s: int):
    _need(k >= 1 and s >= 0, "Id 0.1 needs k >= 1, s >= 0")
    lhs = circular_rank((k, 2) + power(1, 2 * s + 2))
    rhs = qint(k + 1) * circular_rank((3,) + power(1, 2 * s + 1))
    return lhs, rhs


def id0_2(k: int, s: int):
    _need(k >= 1 and s >= 0, "Id 0.2 needs k >= 1, s >= 0")
    lhs = circular_rank((k + 1, 1, k) + power(1, 2 * s + 1))
    rhs = qint(k + 1) * circular_rank((k + 2,) + power(1, 2 * s + 1))
    return lhs, rhs


def id1(k: int, r: int, X=()):
    _need(k >= 1 and r >= 1, "Id 1 needs k >= 1, r >= 1")
    X = _palindromic_even(X)
    lhs = circular_rank((1, k, r + 1) + X + (r,))
    rhs = qint(k + 1) * circular_rank((r + 2,) + X + (r,))
    return lhs, rhs


def id2(k: int, r: int, X=()):
    _need(k >= 1 and r >= 1, "Id 2 needs k >= 1, r >= 1")
    X = _palindromic_even(X)
    lhs = circular_rank((k, 1, k + r) + X + (r,))
    rhs = qint(k + 1) * circular_rank((k + r + 1,) + X + (r,))
    return lhs, rhs


def _bump(rho, n):
    return (rho[0] + n,) + rho[1:]


def id1_prime(k: int, rho):
    _need(k >= 1, "Id 1' needs k >= 1")
    rho = _palindromic_even(rho, allow_empty=False)
    lhs = circular_rank((1, k) + _bump(rho, 1))
    rhs = qint(k + 1) * circular_rank(_bump(rho, 2))
    return lhs, rhs


def id2_prime(k: int, rho):
    _need(k >= 1, "Id 2' needs k >= 1")
    rho = _palindromic_even(rho, allow_empty=False)
    lhs = circular_rank((k, 1) + _bump(rho, k))
    rhs = qint(k + 1) * circular_rank(_bump(rho, k + 1))
    return lhs, rhs


def id3(k: int, s: int):
    _need(k >= 2 and s >= 0, "Id 3 needs k >= 2, s >= 0")
    lhs = circular_rank((2 * k,) + power(k, 2 * s + 1))
    rhs = (ONE + Q ** k) * circular_rank((k + 1, k - 1) + power(k, 2 * s))
    return lhs, rhs


IDENTITIES: dict[str, Callable] = {
    "Id0.1": id0_1,
    "Id0.2": id0_2,
    "Id1": id1,
    "Id2": id2,
    "Id1'": id1_prime,
    "Id2'": id2_prime,
    "Id3": id3,
}


def identity_sides(name: str, **params) -> tuple[LaurentPoly, LaurentPoly]:
    try:
        fn = IDENTITIES[name]
    except KeyError:
        raise InvalidParams(f"unknown identity {name!r}; choose from {sorted(IDENTITIES)}") from None
    try:
        return fn(**params)
    except (InvalidComposition, TypeError) as exc:
        raise InvalidParams(str(exc)) from exc


def verify_identity(name: str, **params) -> bool:
    lhs, rhs = identity_sides(name, **params)
    return lhs == rhs


def factor_probe(lhs, rhs, factor: LaurentPoly = ONE) -> bool:
    """Does ``circular_rank(lhs) == factor * circular_rank(rhs)`` hold exactly?

    Meant for exploring new identities, e.g. generalizations of Id 3.
    """
    return circular_rank(lhs) == LaurentPoly.coerce(factor) * circular_rank(rhs)


def is_exceptional(parts) -> bool:
    """Is ``parts`` of the shape (1,k,1,k) or (k,1,k,1)?"""
    p = tuple(parts)
    if len(p) != 4:
        return False
    return (p[0] == p[2] == 1 and p[1] == p[3]) or (p[1] == p[3] == 1 and p[0] == p[2])
