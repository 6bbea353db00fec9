"""Oriented posets and their rank matrices.

An oriented poset is a poset with a left end ``x_L`` and a right end
``x_R``.  Gluing ``P (+) Q`` puts ``P``'s right end above ``Q``'s left end
and the dual gluing puts it below.  Closing adds ``x_L <= x_R`` and the
dual closing adds ``x_R <= x_L``.

With ``R`` the rank polynomial and subscripts marking ideals that contain
(1) or avoid (0) an endpoint (left subscript for ``x_L``, right subscript
for ``x_R``)::

    rmm = [[R,  -R_1],      drm = [[R_1,  R_0],
           [0R, -0R_1]]            [0R_1, 0R_0]]

so that gluing multiplies matrices and closing takes the trace.  Every
matrix here comes from brute-force ideal enumeration; the generator
products for fences live in :mod:`oriposet.fence`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import DRM_TO_RMM, RMM_TO_DRM, RankMatrix
from .poset import (
    Degenerate,
    FinitePoset,
    PosetError,
    chain,
    disjoint_union,
    with_relation,
)
from .qpoly import LaurentPoly


@dataclass(frozen=True)
class OrientedPoset:
    poset: FinitePoset
    left: int
    right: int

    def __post_init__(self):
        n = self.poset.n
        if not (0 <= self.left < n and 0 <= self.right < n):
            raise PosetError(f"endpoints ({self.left}, {self.right}) out of range for {n} nodes")

    @property
    def n(self) -> int:
        return self.poset.n


def single_node() -> OrientedPoset:
    """The one-node oriented poset; both an up chain and a down chain of length 0."""
    return OrientedPoset(FinitePoset(1), 0, 0)


def up_chain(n: int) -> OrientedPoset:
    """Increasing chain with ``n`` steps; left end is the minimum."""
    return OrientedPoset(chain(n + 1), 0, n)


def down_chain(n: int) -> OrientedPoset:
    """Decreasing chain with ``n`` steps; left end is the maximum."""
    return OrientedPoset(chain(n + 1), n, 0)


def _endpoint_buckets(P: OrientedPoset, max_nodes=None):
    """Size counts of ideals, bucketed by (x_L in I, x_R in I)."""
    size = P.n + 1
    buckets = {(a, b): [0] * size for a in (0, 1) for b in (0, 1)}
    lbit, rbit = 1 << P.left, 1 << P.right
    for mask in P.poset.ideal_masks(max_nodes):
        key = (int(bool(mask & lbit)), int(bool(mask & rbit)))
        buckets[key][mask.bit_count()] += 1
    return {k: LaurentPoly(v) for k, v in buckets.items()}


def rmm(P: OrientedPoset, max_nodes=None) -> RankMatrix:
    """Rank matrix, second column negated."""
    b = _endpoint_buckets(P, max_nodes)
    total = b[0, 0] + b[0, 1] + b[1, 0] + b[1, 1]
    right_in = b[0, 1] + b[1, 1]
    left_out = b[0, 0] + b[0, 1]
    return RankMatrix([[total, -right_in], [left_out, -b[0, 1]]])


def drm(P: OrientedPoset, max_nodes=None) -> RankMatrix:
    """Dual rank matrix, all entries nonnegative."""
    b = _endpoint_buckets(P, max_nodes)
    right_in = b[0, 1] + b[1, 1]
    right_out = b[0, 0] + b[1, 0]
    return RankMatrix([[right_in, right_out], [b[0, 1], b[0, 0]]])


def _join(P: OrientedPoset, Q: OrientedPoset, lower: int, upper: int) -> OrientedPoset:
    union = disjoint_union(P.poset, Q.poset)
    glued = with_relation(union, lower, upper)
    return OrientedPoset(glued, P.left, Q.right + P.n)


def glue(P: OrientedPoset, Q: OrientedPoset) -> OrientedPoset:
    """``P (+) Q``: P's right end is placed above Q's left end."""
    return _join(P, Q, Q.left + P.n, P.right)


def dual_glue(P: OrientedPoset, Q: OrientedPoset) -> OrientedPoset:
    """Dual gluing: P's right end is placed below Q's left end."""
    return _join(P, Q, P.right, Q.left + P.n)


def close(P: OrientedPoset) -> FinitePoset | Degenerate:
    """Add ``x_L <= x_R``.  Degenerate when ``x_R < x_L`` already held."""
    return with_relation(P.poset, P.left, P.right)


def dual_close(P: OrientedPoset) -> FinitePoset | Degenerate:
    """Add ``x_R <= x_L``."""
    return with_relation(P.poset, P.right, P.left)


def close_trace(M: RankMatrix, dual: bool = False) -> LaurentPoly:
    """Trace of a rank matrix (``dual`` only records which closure is meant).

    For ``M = rmm(P)`` this is the rank polynomial of ``close(P)``; for
    ``M = drm(P)`` it is that of ``dual_close(P)``.
    """
    return M.trace()


def convert(M: RankMatrix, direction: str = "to_dual") -> RankMatrix:
    """Switch between rank and dual rank matrix of the same oriented poset."""
    if direction == "to_dual":
        return M @ RMM_TO_DRM
    if direction == "to_rank":
        return M @ DRM_TO_RMM
    raise ValueError(f"unknown direction {direction!r}")


def multiplicativity_report(P: OrientedPoset, Q: OrientedPoset, max_nodes=None) -> dict[str, bool]:
    """Check every gluing/closing law on the pair ``(P, Q)`` against the oracle."""
    rP, dP = rmm(P, max_nodes), drm(P, max_nodes)
    rQ, dQ = rmm(Q, max_nodes), drm(Q, max_nodes)
    g, dg = glue(P, Q), dual_glue(P, Q)
    return {
        "rmm(P+Q) = rmm(P) rmm(Q)": rmm(g, max_nodes) == rP @ rQ,
        "drm(P+'Q) = drm(P) drm(Q)": drm(dg, max_nodes) == dP @ dQ,
        "rmm(P+'Q) = drm(P) rmm(Q)": rmm(dg, max_nodes) == dP @ rQ,
        "drm(P+Q) = rmm(P) drm(Q)": drm(g, max_nodes) == rP @ dQ,
        "rank(close P) = tr rmm(P)": close(P).rank_poly(max_nodes) == rP.trace(),
        "rank(dual close P) = tr drm(P)": dual_close(P).rank_poly(max_nodes) == dP.trace(),
        "drm(P) = rmm(P) [[0,1],[-1,1]]": convert(rP) == dP,
    }


def multiplicativity_check(P: OrientedPoset, Q: OrientedPoset, max_nodes=None) -> bool:
    return all(multiplicativity_report(P, Q, max_nodes).values())
