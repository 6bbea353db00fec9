"""Rank polynomials of fence posets via oriented-poset rank matrices.

Exact integer arithmetic throughout.  Start with :func:`fence.rank`,
:func:`fence.circular_rank`, :func:`qrational.q_rational` or
:func:`markov.q_markov`; every matrix formula can be cross-checked against
the brute-force ideal enumeration in :mod:`oriposet.poset`.
"""

from .fence import circular_rank, rank
from .markov import q_markov
from .matrix import D0, U0, RankMatrix
from .poset import Composition, FinitePoset, parse_composition
from .qpoly import LaurentPoly, qint
from .qrational import q_rational

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "D0",
    "FinitePoset",
    "LaurentPoly",
    "RankMatrix",
    "U0",
    "circular_rank",
    "parse_composition",
    "q_markov",
    "q_rational",
    "qint",
    "rank",
]
