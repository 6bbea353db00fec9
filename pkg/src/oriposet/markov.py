"""Christoffel words, q-deformed Cohn matrices and q-Markov numbers.

Christoffel triples grow from ``(a, ab, b)`` by two moves::

    L: (u, uv, v) -> (u, uuv, uv)
    R: (u, uv, v) -> (uv, uvv, v)

so every triple has an address, a string over ``L``/``R``.  Substituting the
q-deformed Cohn matrices ``[A]_q`` and ``[B]_q`` for the letters of a word
gives a matrix whose trace is the circular rank polynomial of
``alpha(w)`` (each ``a`` contributes parts ``1,1``, each ``b`` parts ``2,2``).
For ``w = a w' b`` that trace is ``[3]_q`` times the circular rank polynomial
of ``(3, 1, alpha(w'))``, the q-Markov number of ``w``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .fence import circular_rank
from .matrix import I2, RankMatrix
from .oriented import OrientedPoset, down_chain, drm
from .poset import Composition, fence
from .qpoly import ONE, Q, LaurentPoly, NotDivisible, from_symmetric_prefix, qint


class TrivialWord(ValueError):
    pass


class InvalidWord(ValueError):
    pass


def _check_letters(letters: str) -> str:
    letters = letters.strip().lower()
    if not letters or set(letters) - {"a", "b"}:
        raise InvalidWord(f"expected a nonempty word over a, b: {letters!r}")
    return letters


def expand_word(text: str) -> str:
    """Expand shorthand such as ``a^2bab`` or ``ab^4`` into plain letters."""
    out, i, text = [], 0, text.strip()
    while i < len(text):
        ch = text[i]
        i += 1
        if ch in " *":
            continue
        if ch not in "abAB":
            raise InvalidWord(f"unexpected character {ch!r} in {text!r}")
        reps = 1
        if i < len(text) and text[i] == "^":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise InvalidWord(f"missing exponent in {text!r}")
            reps, i = int(text[i + 1 : j]), j
        out.append(ch.lower() * reps)
    return _check_letters("".join(out))


@dataclass(frozen=True)
class ChristoffelWord:
    """A word over ``{a, b}``; ``path`` is the L/R address of the triple it is
    the middle word of (``None`` for the trivial words and hand-built words)."""

    letters: str
    path: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "letters", _check_letters(self.letters))

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def count_a(self) -> int:
        return self.letters.count("a")

    @property
    def count_b(self) -> int:
        return self.letters.count("b")

    def is_trivial(self) -> bool:
        return self.letters in ("a", "b")

    def inner(self) -> str:
        """The word between the leading ``a`` and trailing ``b``."""
        if self.is_trivial() or self.letters[0] != "a" or self.letters[-1] != "b":
            raise TrivialWord(f"{self.letters} is not of the form a...b")
        return self.letters[1:-1]

    def __str__(self):
        return self.letters


@dataclass(frozen=True)
class ChristoffelTriple:
    u: ChristoffelWord
    w: ChristoffelWord
    v: ChristoffelWord
    path: str = ""

    def __post_init__(self):
        if self.w.letters != self.u.letters + self.v.letters:
            raise InvalidWord(f"middle word {self.w} is not {self.u}{self.v}")

    @property
    def depth(self) -> int:
        return len(self.path)

    def left(self) -> "ChristoffelTriple":
        path = self.path + "L"
        u, uv = self.u.letters, self.w.letters
        return ChristoffelTriple(self.u, ChristoffelWord(u + uv, path), ChristoffelWord(uv, self.w.path), path)

    def right(self) -> "ChristoffelTriple":
        path = self.path + "R"
        uv, v = self.w.letters, self.v.letters
        return ChristoffelTriple(ChristoffelWord(uv, self.w.path), ChristoffelWord(uv + v, path), self.v, path)

    def words(self) -> tuple[ChristoffelWord, ChristoffelWord, ChristoffelWord]:
        return self.u, self.w, self.v

    def __str__(self):
        return f"({self.u}, {self.w}, {self.v})"


ROOT = ChristoffelTriple(ChristoffelWord("a"), ChristoffelWord("ab", ""), ChristoffelWord("b"), "")


def triple_at(path: str) -> ChristoffelTriple:
    """The triple reached from the root by a string of ``L``/``R`` moves."""
    node = ROOT
    for move in path.strip().upper():
        if move == "L":
            node = node.left()
        elif move == "R":
            node = node.right()
        else:
            raise ValueError(f"path must use L and R only: {path!r}")
    return node


def tree(depth: int) -> Iterator[ChristoffelTriple]:
    """Triples at distance ``<= depth`` from the root, breadth first, L before R."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    queue = deque([ROOT])
    while queue:
        node = queue.popleft()
        yield node
        if node.depth < depth:
            queue.append(node.left())
            queue.append(node.right())


def words_up_to(depth: int) -> list[ChristoffelWord]:
    """Distinct words occurring in triples up to ``depth``, in first-seen order."""
    seen: dict[str, ChristoffelWord] = {}
    for node in tree(depth):
        for word in (node.u, node.w, node.v):
            if word.letters not in seen:
                seen[word.letters] = word
    return list(seen.values())


def find_path(letters: str, max_depth: int = 12) -> str | None:
    """Address of the triple whose middle word is ``letters``, if any."""
    letters = _check_letters(letters)
    for node in tree(max_depth):
        if node.w.letters == letters:
            return node.path
    return None


# -- Cohn matrices ---------------------------------------------------------------

COHN_A = RankMatrix([[2, 1], [1, 1]])
COHN_B = RankMatrix([[5, 2], [2, 1]])


def P_A() -> OrientedPoset:
    """Two nodes, left end above right end."""
    return down_chain(1)


def P_B() -> OrientedPoset:
    """The fence (1, 2): one step up from the left end, two steps down to the right end."""
    return OrientedPoset(fence((1, 2)), 0, 3)


_COHN_Q = {
    "a": RankMatrix([[Q + Q ** 2, 1], [Q, 1]]),
    "b": RankMatrix([[Q + 2 * Q ** 2 + Q ** 3 + Q ** 4, 1 + Q], [Q + Q ** 2, 1]]),
}
# the alternative normalization scales A by q^-1 and B by q^-2
_KOGISO_SHIFT = {"a": -1, "b": -2}


def cohn_q(letter: str, kogiso: bool = False) -> RankMatrix:
    key = letter.strip().lower()
    if key not in _COHN_Q:
        raise InvalidWord(f"letter must be A or B, got {letter!r}")
    m = _COHN_Q[key]
    return m.scale(Q ** _KOGISO_SHIFT[key]) if kogiso else m


def _letters(w) -> str:
    return w.letters if isinstance(w, ChristoffelWord) else _check_letters(str(w))


def word_matrix(w, kogiso: bool = False) -> RankMatrix:
    out = I2
    for ch in _letters(w):
        out = out @ cohn_q(ch, kogiso)
    return out


def classical_matrix(w) -> RankMatrix:
    out = I2
    for ch in _letters(w):
        out = out @ (COHN_A if ch == "a" else COHN_B)
    return out


def alpha_of_word(w) -> Composition:
    """Each ``a`` becomes parts ``1,1`` and each ``b`` parts ``2,2``."""
    parts: list[int] = []
    for ch in _letters(w):
        parts += [1, 1] if ch == "a" else [2, 2]
    return Composition(parts)


def word_trace(w, kogiso: bool = False) -> LaurentPoly:
    """Trace of the q-Cohn product along ``w``, cross-checked with the circular fence."""
    tr = word_matrix(w).trace()
    expected = circular_rank(alpha_of_word(w))
    if tr != expected:
        raise AssertionError(f"trace of {_letters(w)} differs from its circular rank polynomial")
    if kogiso:
        letters = _letters(w)
        return tr.shift(-(letters.count("a") + 2 * letters.count("b")))
    return tr


def markov_fence(w) -> Composition:
    """``(3, 1, alpha(inner word))`` for a nontrivial Christoffel word."""
    word = w if isinstance(w, ChristoffelWord) else ChristoffelWord(str(w))
    inner = word.inner()
    return Composition((3, 1) + (tuple(alpha_of_word(inner)) if inner else ()))


def markov_number(w) -> LaurentPoly:
    """``tr(w_q) / [3]_q`` for any word, trivial words included."""
    return word_trace(w).divide_exact(qint(3))


def q_markov(w) -> LaurentPoly:
    """q-Markov number of a nontrivial word as a circular rank polynomial.

    Checks that it equals ``tr(w_q) / [3]_q`` and is symmetric and unimodal.
    """
    word = w if isinstance(w, ChristoffelWord) else ChristoffelWord(str(w))
    if word.is_trivial():
        raise TrivialWord(f"{word} is trivial; use markov_number() for its trace quotient")
    value = circular_rank(markov_fence(word))
    if word_trace(word) != qint(3) * value:
        raise NotDivisible(f"tr({word}_q) is not [3]_q times the circular rank of {markov_fence(word)}")
    if not (value.is_symmetric() and value.is_unimodal()):
        raise AssertionError(f"q-Markov number of {word} is not symmetric and unimodal")
    return value


# -- the q-deformed Markov equation ----------------------------------------------

#: constant for which the equation holds exactly
MARKOV_CONSTANT = (Q - 1) ** 2 * Q ** -3
#: the constant in the form usually quoted, off by a factor (q - 1)
PRINTED_MARKOV_CONSTANT = (Q - 1) ** 3 * Q ** -3


def _exponent(word: ChristoffelWord) -> int:
    return word.length + word.count_b


def markov_equation_sides(t: ChristoffelTriple, constant: LaurentPoly = MARKOV_CONSTANT):
    """Both sides of the q-Markov equation for the triple ``t``.

    ``x, y, z`` are ``tr / [3]_q`` of the three words (exact divisions) and
    each is scaled by ``q^-c`` with ``c = length + number of b``, the middle
    word using the sum of the outer two exponents.
    """
    x, y, z = (markov_number(word) for word in t.words())
    cx, cz = _exponent(t.u), _exponent(t.v)
    X, Y, Z = x * Q ** -cx, y * Q ** -(cx + cz), z * Q ** -cz
    lhs = X * X + Y * Y + Z * Z + constant
    rhs = qint(3) * X * Y * Z
    return lhs, rhs


def q_markov_equation_check(t: ChristoffelTriple) -> bool:
    lhs, rhs = markov_equation_sides(t)
    return lhs == rhs


def printed_constant_residual(t: ChristoffelTriple) -> LaurentPoly:
    """``lhs - rhs`` when the quoted constant ``(q-1)^3/q^3`` is used."""
    lhs, rhs = markov_equation_sides(t, PRINTED_MARKOV_CONSTANT)
    return lhs - rhs


#: residual left by the quoted constant on every triple
PRINTED_CONSTANT_RESIDUAL = PRINTED_MARKOV_CONSTANT - MARKOV_CONSTANT


def classical_check(t: ChristoffelTriple) -> bool:
    """At ``q = 1`` the three numbers solve ``x^2 + y^2 + z^2 = 3xyz``."""
    x, y, z = (markov_number(word).at_one() for word in t.words())
    return x * x + y * y + z * z == 3 * x * y * z


# -- the table of small q-Markov numbers ------------------------------------------

@dataclass(frozen=True)
class TableRow:
    label: str
    fence: tuple[int, ...]
    polynomial: LaurentPoly


def _row(label, parts, prefix, degree=None):
    poly = LaurentPoly(prefix) if degree is None else from_symmetric_prefix(prefix, degree)
    return TableRow(label, tuple(parts), poly)


# rows printed with "..." are completed symmetrically from the printed prefix
TABLE_1 = (
    _row("ab", (3, 1), [1, 1, 1, 1, 1]),
    _row("a^2b", (3, 1, 1, 1), [1, 2, 2, 3, 2, 2, 1]),
    _row("ab^2", (3, 1, 2, 2), [1, 2, 4, 5, 5, 5, 4, 2, 1]),
    _row("a^3b", (3, 1, 1, 1, 1, 1), [1, 3, 4, 6, 6, 6, 4, 3, 1]),
    _row("abab^2", (3, 1, 2, 2, 1, 1, 2, 2), [1, 4, 11, 22, 36, 50, 60, 65, 60], 14),
    _row("ab^2", (3, 1, 2, 2, 2, 2), [1, 3, 8, 14, 20, 25, 27, 25, 20], 12),
    _row("a^4b", (3, 1, 1, 1, 1, 1, 1, 1), [1, 4, 7, 11, 14, 15, 14, 11, 7, 4, 1]),
    _row("ab^4", (3, 1, 2, 2, 2, 2, 2, 2), [1, 4, 13, 29, 53, 82, 110, 131, 139], 16),
)


def word_of_markov_fence(parts) -> str | None:
    """Recover ``w`` from ``(3, 1, alpha(inner))``, or ``None`` if not of that shape."""
    parts = tuple(parts)
    if parts[:2] != (3, 1) or len(parts) % 2:
        return None
    inner = []
    for i in range(2, len(parts), 2):
        pair = parts[i : i + 2]
        if pair == (1, 1):
            inner.append("a")
        elif pair == (2, 2):
            inner.append("b")
        else:
            return None
    return "a" + "".join(inner) + "b"


def table1_report() -> list[dict]:
    """Recompute every table row from its word label and from its fence."""
    out = []
    for row in TABLE_1:
        word = expand_word(row.label)
        from_word = q_markov(word)
        from_fence = circular_rank(row.fence)
        fence_word = word_of_markov_fence(row.fence)
        out.append(
            {
                "label": row.label,
                "fence": row.fence,
                "printed": row.polynomial,
                "from_word": from_word,
                "from_fence": from_fence,
                "fence_matches_printed": from_fence == row.polynomial,
                "word_matches_printed": from_word == row.polynomial,
                "label_consistent": tuple(markov_fence(word)) == row.fence,
                "word_from_fence": fence_word,
                "is_christoffel": find_path(word, 8) is not None,
            }
        )
    return out


def table_rows(depth: int) -> list[dict]:
    """Word / fence / polynomial rows for every word up to ``depth``."""
    rows = []
    for word in words_up_to(depth):
        if word.is_trivial():
            rows.append({"word": word.letters, "path": word.path, "fence": None,
                         "polynomial": markov_number(word)})
        else:
            rows.append({"word": word.letters, "path": word.path,
                         "fence": tuple(markov_fence(word)), "polynomial": q_markov(word)})
    return rows
