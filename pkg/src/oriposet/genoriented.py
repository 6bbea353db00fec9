"""Generalized oriented posets: lists of left and right ends.

A ``(t, s)``-oriented poset carries ``t`` left ends and ``s`` right ends.
Its rank matrices are ``2^t x 2^s``; row ``A`` counts ideals that avoid
``L_i`` for every ``i`` in ``A``.  In the rank matrix column ``B`` asks for
``R_i`` in the ideal for ``i`` in ``B`` (sign ``(-1)^|B|``).  In the dual rank
matrix column ``B`` asks for ``R_i`` in the ideal exactly when ``i`` is not in
``B``.

Subsets are indexed by bitmask: ``{i1, i2, ...}`` (1-based) sits at
``sum 2^(i-1)``, so index 0 is the empty set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .matrix import RankMatrix
from .oriented import OrientedPoset
from .poset import Degenerate, FinitePoset, PosetError, disjoint_union, make_relation
from .qpoly import LaurentPoly

MAX_ARITY = 4


class ArityMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GenOrientedPoset:
    poset: FinitePoset
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(int(i) for i in self.left))
        object.__setattr__(self, "right", tuple(int(i) for i in self.right))
        n = self.poset.n
        for i in self.left + self.right:
            if not 0 <= i < n:
                raise PosetError(f"end node {i} out of range for {n} nodes")
        if len(self.left) > MAX_ARITY or len(self.right) > MAX_ARITY:
            raise ArityMismatch(f"at most {MAX_ARITY} ends on each side")

    @property
    def t(self) -> int:
        return len(self.left)

    @property
    def s(self) -> int:
        return len(self.right)

    @property
    def n(self) -> int:
        return self.poset.n

    @classmethod
    def from_oriented(cls, P: OrientedPoset) -> "GenOrientedPoset":
        return cls(P.poset, (P.left,), (P.right,))


class GenRankMatrix(RankMatrix):
    """A ``2^t x 2^s`` matrix with rows and columns indexed by subsets."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        for size in self.shape:
            if size & (size - 1):
                raise ValueError(f"dimensions must be powers of two, got {self.shape}")

    @property
    def t(self) -> int:
        return self.shape[0].bit_length() - 1

    @property
    def s(self) -> int:
        return self.shape[1].bit_length() - 1

    def entry(self, A: Sequence[int], B: Sequence[int]) -> LaurentPoly:
        """Entry at 1-based subsets ``A`` (rows) and ``B`` (columns)."""
        return self[subset_index(A), subset_index(B)]

    def __matmul__(self, other):
        out = super().__matmul__(other)
        return GenRankMatrix(out.rows) if out is not NotImplemented else out


def subset_index(subset: Sequence[int]) -> int:
    return sum(1 << (i - 1) for i in set(subset))


def index_subset(index: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(index.bit_length()) if index >> i & 1)


def _bit_mask(nodes: Sequence[int], index: int) -> int:
    """Bitmask of the nodes ``nodes[i]`` for the bits ``i`` set in ``index``."""
    mask = 0
    for i, node in enumerate(nodes):
        if index >> i & 1:
            mask |= 1 << node
    return mask


def _tabulate(P: GenOrientedPoset, max_nodes=None) -> dict[tuple[int, int], list[int]]:
    """Size counts of ideals keyed by (left ends inside, right ends inside)."""
    left_bits = [1 << x for x in P.left]
    right_bits = [1 << x for x in P.right]
    table: dict[tuple[int, int], list[int]] = {}
    for mask in P.poset.ideal_masks(max_nodes):
        lin = sum(1 << i for i, b in enumerate(left_bits) if mask & b)
        rin = sum(1 << i for i, b in enumerate(right_bits) if mask & b)
        counts = table.setdefault((lin, rin), [0] * (P.n + 1))
        counts[mask.bit_count()] += 1
    return table


def _entry(table, row_excluded: int, col_test) -> LaurentPoly:
    acc = LaurentPoly()
    for (lin, rin), counts in table.items():
        if lin & row_excluded == 0 and col_test(rin):
            acc = acc + LaurentPoly(counts)
    return acc


def gen_rmm(P: GenOrientedPoset, max_nodes=None) -> GenRankMatrix:
    table = _tabulate(P, max_nodes)
    rows = []
    for A in range(1 << P.t):
        row = []
        for B in range(1 << P.s):
            value = _entry(table, A, lambda rin, B=B: rin & B == B)
            row.append(-value if bin(B).count("1") % 2 else value)
        rows.append(row)
    return GenRankMatrix(rows)


def gen_drm(P: GenOrientedPoset, max_nodes=None) -> GenRankMatrix:
    table = _tabulate(P, max_nodes)
    full = (1 << P.s) - 1
    return GenRankMatrix(
        [
            [_entry(table, A, lambda rin, B=B: rin == full ^ B) for B in range(1 << P.s)]
            for A in range(1 << P.t)
        ]
    )


def _connect(P: GenOrientedPoset, Q: GenOrientedPoset, dual: bool) -> GenOrientedPoset:
    if P.s != Q.t:
        raise ArityMismatch(f"P has {P.s} right ends but Q has {Q.t} left ends")
    union = disjoint_union(P.poset, Q.poset)
    covers = set(union.covers)
    for r, l in zip(P.right, Q.left):
        l += P.n
        covers.add((r, l) if dual else (l, r))
    glued = make_relation(union.n, covers)
    if isinstance(glued, Degenerate):
        raise PosetError("gluing produced a cycle")  # cannot happen for disjoint pieces
    return GenOrientedPoset(glued, P.left, tuple(x + P.n for x in Q.right))


def gen_glue(P: GenOrientedPoset, Q: GenOrientedPoset) -> GenOrientedPoset:
    """Put ``R_i`` of ``P`` above ``L_i`` of ``Q`` for every ``i``."""
    return _connect(P, Q, dual=False)


def gen_dual_glue(P: GenOrientedPoset, Q: GenOrientedPoset) -> GenOrientedPoset:
    """Put ``R_i`` of ``P`` below ``L_i`` of ``Q`` for every ``i``."""
    return _connect(P, Q, dual=True)


def _closure(P: GenOrientedPoset, dual: bool):
    if P.t != P.s:
        raise ArityMismatch(f"closing needs as many left as right ends, got {P.t} and {P.s}")
    covers = set(P.poset.covers)
    for l, r in zip(P.left, P.right):
        covers.add((r, l) if dual else (l, r))
    return make_relation(P.n, covers)


def gen_close(P: GenOrientedPoset):
    """Add ``L_i <= R_i`` for every ``i``; may be Degenerate."""
    return _closure(P, dual=False)


def gen_dual_close(P: GenOrientedPoset):
    """Add ``R_i <= L_i`` for every ``i``; may be Degenerate."""
    return _closure(P, dual=True)


def gen_close_trace(M: RankMatrix) -> LaurentPoly:
    if M.shape[0] != M.shape[1]:
        raise ArityMismatch(f"trace needs a square matrix, got {M.shape}")
    return M.trace()


def prop_laws(P: GenOrientedPoset, Q: GenOrientedPoset, max_nodes=None) -> dict[str, bool]:
    """The gluing and closing laws for the pair, each checked by enumeration."""
    rP, dP = gen_rmm(P, max_nodes), gen_drm(P, max_nodes)
    rQ, dQ = gen_rmm(Q, max_nodes), gen_drm(Q, max_nodes)
    g, dg = gen_glue(P, Q), gen_dual_glue(P, Q)
    out = {
        "rmm(P+Q) = rmm(P) rmm(Q)": gen_rmm(g, max_nodes) == rP @ rQ,
        "rmm(P+'Q) = drm(P) rmm(Q)": gen_rmm(dg, max_nodes) == dP @ rQ,
        "drm(P+'Q) = drm(P) drm(Q)": gen_drm(dg, max_nodes) == dP @ dQ,
        "drm(P+Q) = rmm(P) drm(Q)": gen_drm(g, max_nodes) == rP @ dQ,
    }
    if P.t == P.s:
        out["rank(close P) = tr rmm(P)"] = gen_close(P).rank_poly(max_nodes) == gen_close_trace(rP)
        out["rank(dual close P) = tr drm(P)"] = (
            gen_dual_close(P).rank_poly(max_nodes) == gen_close_trace(dP)
        )
    return out


# -- random instances --------------------------------------------------------------

def random_poset(n: int, rng: random.Random, density: float = 0.3) -> FinitePoset:
    """Random poset: each pair ``i < j`` becomes a relation with the given
    probability, then the nodes are shuffled."""
    perm = list(range(n))
    rng.shuffle(perm)
    covers = [
        (perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density
    ]
    return FinitePoset(n, covers)


def random_gen_poset(
    rng: random.Random, max_nodes: int = 8, t: int | None = None, s: int | None = None
) -> GenOrientedPoset:
    n = rng.randint(1, max_nodes)
    t = rng.randint(1, 2) if t is None else t
    s = rng.randint(1, 2) if s is None else s
    P = random_poset(n, rng)
    return GenOrientedPoset(
        P,
        tuple(rng.randrange(n) for _ in range(t)),
        tuple(rng.randrange(n) for _ in range(s)),
    )
