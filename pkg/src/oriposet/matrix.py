"""Small dense matrices over Laurent polynomials.

:class:`RankMatrix` is used for the 2x2 rank matrices as well as the
2^t x 2^s matrices of generalized oriented posets.  The standard
generators live here too:

* ``R_q = [[q, 1], [0, 1]]`` and ``S_q = [[0, -1/q], [1, 0]]``
* ``U0 = R_q`` (dual rank matrix of a single node, an up step)
* ``D0 = R_q^2 S_q`` (rank matrix of a single node, a down step)
"""

from __future__ import annotations

from typing import Sequence

from .qpoly import ONE, Q, Q_INV, ZERO, LaurentPoly


class RankMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(LaurentPoly.coerce(x) for x in row) for row in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must be nonempty and of equal length")
        self.rows = rows

    @classmethod
    def identity(cls, n: int = 2) -> "RankMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, RankMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RankMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return RankMatrix([[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "RankMatrix":
        c = LaurentPoly.coerce(c)
        return RankMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if not isinstance(other, RankMatrix):
            return NotImplemented
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                new.append(acc)
            out.append(new)
        return RankMatrix(out)

    def __mul__(self, other):
        if isinstance(other, RankMatrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "RankMatrix":
        if self.shape[0] != self.shape[1]:
            raise ValueError("power of a non-square matrix")
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        result = RankMatrix.identity(self.shape[0])
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self) -> LaurentPoly:
        if self.shape[0] != self.shape[1]:
            raise ValueError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.shape[0]):
            acc = acc + self.rows[i][i]
        return acc

    def det(self) -> LaurentPoly:
        if self.shape != (2, 2):
            raise ValueError("det only implemented for 2x2")
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def inverse(self) -> "RankMatrix":
        """Exact inverse of a 2x2 matrix whose determinant is a unit ±q^k."""
        det = self.det()
        inv_det = det ** -1  # ValueError unless det is ±q^k
        (a, b), (c, d) = self.rows
        return RankMatrix([[d, -b], [-c, a]]).scale(inv_det)

    def at(self, x) -> list[list]:
        return [[e.eval(x) for e in r] for r in self.rows]

    def at_one(self) -> list[list[int]]:
        return [[e.at_one() for e in r] for r in self.rows]

    def to_json(self) -> list:
        return [[e.to_json() for e in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "RankMatrix":
        return cls([[LaurentPoly.from_json(e) for e in r] for r in data])

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows) + "]"

    def __repr__(self):
        return f"RankMatrix({[[str(e) for e in r] for r in self.rows]!r})"


I2 = RankMatrix.identity(2)
R_Q = RankMatrix([[Q, ONE], [ZERO, ONE]])
S_Q = RankMatrix([[ZERO, -Q_INV], [ONE, ZERO]])
U0 = R_Q
D0 = R_Q @ R_Q @ S_Q

# right factors relating the two rank matrices of one oriented poset
RMM_TO_DRM = RankMatrix([[0, 1], [-1, 1]])
DRM_TO_RMM = RankMatrix([[1, -1], [1, 0]])


def word_product(factors: Sequence[tuple[RankMatrix, int]]) -> RankMatrix:
    """Product of powers ``M1**e1 @ M2**e2 @ ...`` (negative exponents allowed)."""
    out = I2
    for m, e in factors:
        if e:
            out = out @ (m ** e)
    return out
