"""Explicit finite posets and the brute-force order-ideal oracle.

Nodes are the integers ``0..n-1``.  A relation is stored as a set of
pairs ``(i, j)`` meaning ``i <= j``; only the transitive closure matters.
Down-sets and up-sets are kept as int bitmasks.

Ideals are enumerated by branching on a node: either it is in the ideal
(and so is its whole down-set) or it is not (and neither is its up-set).
Every leaf of that search is a distinct ideal, so the cost is linear in
the number of ideals rather than in ``2**n``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .qpoly import LaurentPoly

DEFAULT_MAX_NODES = 24


class PosetError(ValueError):
    pass


class InvalidComposition(ValueError):
    pass


class OddLength(InvalidComposition):
    pass


class TooLarge(ValueError):
    pass


class Composition(tuple):
    """A tuple of nonnegative part sizes.

    Zeros are allowed at this level because several constructions use a
    leading or trailing zero (a fence starting with a down step, say);
    :meth:`require_positive` enforces the ordinary definition.
    """

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise InvalidComposition("a composition needs at least one part")
        if any(p < 0 for p in parts):
            raise InvalidComposition(f"negative part in {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def require_positive(self) -> "Composition":
        if any(p < 1 for p in self):
            raise InvalidComposition(f"parts must be >= 1, got {tuple(self)}")
        return self

    def is_palindromic(self) -> bool:
        return tuple(self) == tuple(self)[::-1]

    def rotate(self, k: int = 1) -> "Composition":
        """Cyclic shift moving the last ``k`` parts to the front."""
        k %= len(self)
        return Composition(self[-k:] + self[:-k]) if k else self

    def __repr__(self):
        return f"Composition({tuple(self)!r})"

    def __str__(self):
        return ",".join(str(p) for p in self)


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_composition(text: str) -> Composition:
    """Parse ``"2,1,1,3"``; ``a^b`` stands for ``b`` parts equal to ``a``."""
    body = text.strip().strip("()[]")
    if not body:
        raise InvalidComposition(f"empty composition: {text!r}")
    parts: list[int] = []
    for tok in body.split(","):
        m = _TOKEN.match(tok)
        if not m:
            raise InvalidComposition(f"cannot parse part {tok!r} in {text!r}")
        value, reps = int(m.group(1)), m.group(2)
        parts.extend([value] * (int(reps) if reps is not None else 1))
    if not parts:
        raise InvalidComposition(f"empty composition: {text!r}")
    return Composition(parts)


def power(value: int, reps: int) -> tuple[int, ...]:
    """The block ``value^reps`` as a tuple."""
    return (value,) * reps


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Relation:
    """Reflexive-transitive closure of a finite relation (a preorder)."""

    def __init__(self, n: int, covers: Iterable[tuple[int, int]]):
        n = int(n)
        if n < 0:
            raise PosetError("node count must be nonnegative")
        covers = frozenset((int(i), int(j)) for i, j in covers)
        for i, j in covers:
            if not (0 <= i < n and 0 <= j < n):
                raise PosetError(f"relation ({i}, {j}) out of range for {n} nodes")
        self.n = n
        self.covers = frozenset((i, j) for i, j in covers if i != j)
        below = [0] * n
        above = [0] * n
        for i, j in self.covers:
            below[j] |= 1 << i
            above[i] |= 1 << j
        self._down = self._closure(below)
        self._up = self._closure(above)

    def _closure(self, step: list[int]) -> tuple[int, ...]:
        out = []
        for x in range(self.n):
            seen = 1 << x
            frontier = step[x] & ~seen
            while frontier:
                seen |= frontier
                nxt = 0
                for y in _bits(frontier):
                    nxt |= step[y]
                frontier = nxt & ~seen
            out.append(seen)
        return tuple(out)

    def leq(self, i: int, j: int) -> bool:
        return bool(self._down[j] >> i & 1)

    def downset(self, i: int) -> frozenset[int]:
        return frozenset(_bits(self._down[i]))

    def upset(self, i: int) -> frozenset[int]:
        return frozenset(_bits(self._up[i]))

    def _check_size(self, max_nodes: int | None):
        bound = DEFAULT_MAX_NODES if max_nodes is None else max_nodes
        if self.n > bound:
            raise TooLarge(f"{self.n} nodes exceeds the oracle bound of {bound}")

    def ideal_masks(self, max_nodes: int | None = None) -> Iterator[int]:
        """Yield every down-closed subset as a bitmask, each exactly once."""
        self._check_size(max_nodes)
        down, up = self._down, self._up
        stack = [((1 << self.n) - 1, 0)]
        while stack:
            undecided, included = stack.pop()
            if not undecided:
                yield included
                continue
            x = (undecided & -undecided).bit_length() - 1
            stack.append((undecided & ~up[x], included))
            stack.append((undecided & ~down[x], included | down[x]))

    def ideals(self, max_nodes: int | None = None) -> Iterator[frozenset[int]]:
        for mask in self.ideal_masks(max_nodes):
            yield frozenset(_bits(mask))

    def rank_poly(self, max_nodes: int | None = None) -> LaurentPoly:
        """Generating polynomial of ideal sizes, by explicit enumeration."""
        counts = [0] * (self.n + 1)
        for mask in self.ideal_masks(max_nodes):
            counts[mask.bit_count()] += 1
        return LaurentPoly(counts)

    def restricted_rank_poly(
        self,
        include: Iterable[int] = (),
        exclude: Iterable[int] = (),
        max_nodes: int | None = None,
    ) -> LaurentPoly:
        """Rank polynomial over ideals containing ``include`` and avoiding ``exclude``."""
        inc = sum(1 << i for i in set(include))
        exc = sum(1 << i for i in set(exclude))
        counts = [0] * (self.n + 1)
        for mask in self.ideal_masks(max_nodes):
            if mask & inc == inc and not mask & exc:
                counts[mask.bit_count()] += 1
        return LaurentPoly(counts)

    def count_ideals(self, max_nodes: int | None = None) -> int:
        return sum(1 for _ in self.ideal_masks(max_nodes))

    def __eq__(self, other):
        if not isinstance(other, _Relation) or type(self) is not type(other):
            return NotImplemented
        return self.n == other.n and self._down == other._down

    def __hash__(self):
        return hash((type(self).__name__, self.n, self._down))


class FinitePoset(_Relation):
    """A finite poset on nodes ``0..n-1``; rejects directed cycles."""

    def __init__(self, n: int, covers: Iterable[tuple[int, int]] = ()):
        super().__init__(n, covers)
        for i in range(self.n):
            # anything both below and above i other than i itself closes a cycle
            if (self._down[i] & self._up[i]) != 1 << i:
                raise PosetError("relation has a directed cycle; not a poset")

    def __repr__(self):
        return f"FinitePoset({self.n}, {sorted(self.covers)})"


class Degenerate(_Relation):
    """A closed structure in which some distinct nodes were forced equal.

    Its ideals are the down-closed subsets of the preorder, so identified
    nodes enter or leave an ideal together.  Closing a chain top to bottom
    leaves only the empty ideal and the whole chain.
    """

    def classes(self) -> list[frozenset[int]]:
        seen, out = 0, []
        for i in range(self.n):
            if not seen >> i & 1:
                cls = self._down[i] & self._up[i]
                seen |= cls
                out.append(frozenset(_bits(cls)))
        return out

    def __repr__(self):
        return f"Degenerate({self.n}, {sorted(self.covers)})"


def make_relation(n: int, covers: Iterable[tuple[int, int]]) -> FinitePoset | Degenerate:
    """Build a FinitePoset, or a Degenerate preorder if the relation has cycles."""
    covers = list(covers)
    try:
        return FinitePoset(n, covers)
    except PosetError as exc:
        if "cycle" not in str(exc):
            raise
        return Degenerate(n, covers)


def with_relation(P: _Relation, i: int, j: int) -> FinitePoset | Degenerate:
    """Add ``i <= j`` to ``P``.  Returns ``P`` itself if already implied."""
    if not (0 <= i < P.n and 0 <= j < P.n):
        raise PosetError(f"node out of range: ({i}, {j})")
    if P.leq(i, j):
        return P
    return make_relation(P.n, set(P.covers) | {(i, j)})


def disjoint_union(P: _Relation, Q: _Relation) -> FinitePoset | Degenerate:
    """Union with Q's nodes renumbered to ``P.n .. P.n + Q.n - 1``."""
    covers = set(P.covers) | {(i + P.n, j + P.n) for i, j in Q.covers}
    return make_relation(P.n + Q.n, covers)


def chain(n_nodes: int) -> FinitePoset:
    """Chain ``0 < 1 < ... < n_nodes - 1``."""
    return FinitePoset(n_nodes, [(i, i + 1) for i in range(n_nodes - 1)])


def antichain(n_nodes: int) -> FinitePoset:
    return FinitePoset(n_nodes)


def _check_zigzag_parts(parts, allow_zero_ends: bool) -> Composition:
    parts = Composition(parts)
    if not allow_zero_ends:
        return parts.require_positive()
    nz = [k for k, p in enumerate(parts) if p]
    if nz:
        first, last = nz[0], nz[-1]
        if any(p == 0 for p in parts[first : last + 1]):
            raise InvalidComposition(f"zero part in the interior of {tuple(parts)}")
    return parts


def _zigzag_covers(parts: Composition) -> list[tuple[int, int]]:
    covers, j = [], 0
    for seg, length in enumerate(parts):
        for _ in range(length):
            covers.append((j, j + 1) if seg % 2 == 0 else (j + 1, j))
            j += 1
    return covers


def fence(parts, allow_zero_ends: bool = False) -> FinitePoset:
    """Fence poset F(alpha) on ``|alpha| + 1`` nodes, starting with an up step.

    Segment ``k`` (0-based) goes up for even ``k`` and down for odd ``k``.
    With ``allow_zero_ends`` a leading zero gives a fence that starts
    with a down step, and a trailing zero is a no-op.
    """
    parts = _check_zigzag_parts(parts, allow_zero_ends)
    return FinitePoset(parts.size + 1, _zigzag_covers(parts))


def circular_fence(parts, allow_zero_ends: bool = False) -> FinitePoset | Degenerate:
    """Circular fence: the fence with its last node identified with node 0.

    Needs an even number of parts.  For ordinary compositions the result
    is always a genuine poset on ``|alpha|`` nodes; zero end parts can make
    it degenerate (e.g. ``(0, k)`` closes a chain onto itself).
    """
    parts = _check_zigzag_parts(parts, allow_zero_ends)
    if len(parts) % 2:
        raise OddLength(f"circular fence needs an even number of parts, got {len(parts)}")
    n = parts.size
    if n == 0:
        raise InvalidComposition("circular fence of size 0")
    covers = [(i % n, j % n) for i, j in _zigzag_covers(parts)]
    return make_relation(n, covers)


def rank_poly_bruteforce(P: _Relation, max_nodes: int | None = None) -> LaurentPoly:
    return P.rank_poly(max_nodes)


def ideals(P: _Relation, max_nodes: int | None = None) -> Iterator[frozenset[int]]:
    return P.ideals(max_nodes)
