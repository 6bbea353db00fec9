"""Batch verification suites used by ``oriposet verify`` and the acceptance tests.

Each suite returns a :class:`SuiteResult` with pass/fail counts, the first
few failing cases (witnesses) and optional table rows for CSV output.
Parameter grids are walked in a fixed order so output is reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import fence, genoriented, markov, qrational
from .oriented import OrientedPoset, drm, multiplicativity_report, rmm

MAX_WITNESSES = 10


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    witnesses: list = field(default_factory=list)
    # failures the suite expects (the exceptional unimodality family)
    expected: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    oracle_mismatch: bool = False

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, witness=None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{self.name}: {status} ({self.passed} passed, {self.failed} failed"
        if self.expected:
            line += f", {len(self.expected)} expected exceptions"
        return line + ")"

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "passed": self.passed,
            "failed": self.failed,
            "witnesses": [str(w) for w in self.witnesses],
            "expected_exceptions": len(self.expected),
        }


# -- composition grids ---------------------------------------------------------------

def compositions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``n`` in lexicographic order of cut positions."""
    if n <= 0:
        return
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def compositions_up_to(max_size: int, even_only: bool = False) -> list[tuple[int, ...]]:
    out = []
    for n in range(1, max_size + 1):
        for c in compositions_of(n):
            if not even_only or len(c) % 2 == 0:
                out.append(c)
    return out


def palindromes_up_to(max_size: int, even_length: bool | None = None) -> list[tuple[int, ...]]:
    out = []
    for c in compositions_up_to(max_size):
        if c == c[::-1] and (even_length is None or (len(c) % 2 == 0) == even_length):
            out.append(c)
    return out


# -- suites ---------------------------------------------------------------------------

def suite_oracle(max_size: int = 12) -> SuiteResult:
    """Matrix-product rank polynomials against brute-force enumeration."""
    res = SuiteResult("oracle")
    for c in compositions_up_to(max_size):
        res.record(fence.rank(c) == fence.rank_oracle(c), ("linear", c))
        if len(c) % 2 == 0:
            res.record(fence.circular_rank(c) == fence.circular_rank_oracle(c), ("circular", c))
    res.oracle_mismatch = not res.ok
    return res


def suite_props(max_size: int = 8, seed: int = 0, count: int = 60) -> SuiteResult:
    """Structural invariants: oracle agreement, symmetry, shift invariance,
    gluing laws on random oriented posets."""
    res = SuiteResult("props")
    for c in compositions_up_to(max_size):
        lin = fence.rank(c)
        res.record(lin == fence.rank_oracle(c), ("rank vs oracle", c))
        res.record(lin == fence.rank_from_drm(c), ("rank via drm", c))
        # read right to left; an odd number of parts then starts with a down step
        mirror = c[::-1] if len(c) % 2 == 0 else (0,) + c[::-1]
        res.record(lin == fence.rank(mirror), ("mirror image", c))
        if len(c) % 2 == 0:
            circ = fence.circular_rank(c)
            res.record(circ == fence.circular_rank_oracle(c), ("circular vs oracle", c))
            res.record(circ.is_symmetric(), ("circular symmetric", c))
            res.record(circ == fence.circular_rank(c[2:] + c[:2]), ("shift by two parts", c))
            res.record(circ == fence.circular_rank(c[::-1]), ("reversal", c))
    rng = random.Random(seed)
    for _ in range(count):
        P, Q = _random_oriented(rng), _random_oriented(rng)
        for law, ok in multiplicativity_report(P, Q).items():
            res.record(ok, (law, P, Q))
    return res


def _random_oriented(rng: random.Random, max_nodes: int = 7) -> OrientedPoset:
    n = rng.randint(1, max_nodes)
    P = genoriented.random_poset(n, rng)
    return OrientedPoset(P, rng.randrange(n), rng.randrange(n))


def suite_identities(
    kmax: int = 5, smax: int = 3, rmax: int = 4, xmax: int = 6, k3max: int = 5, s3max: int = 2,
    palindrome_max: int = 12,
) -> SuiteResult:
    res = SuiteResult("identities")

    def check(name, **params):
        lhs, rhs = fence.identity_sides(name, **params)
        res.record(lhs == rhs, (name, params))

    for k in range(1, kmax + 1):
        for s in range(0, smax + 1):
            check("Id0.1", k=k, s=s)
            check("Id0.2", k=k, s=s)
    even_pals = [()] + palindromes_up_to(xmax, even_length=True)
    for k in range(1, rmax + 1):
        for r in range(1, rmax + 1):
            for X in even_pals:
                check("Id1", k=k, r=r, X=X)
                check("Id2", k=k, r=r, X=X)
        for rho in even_pals[1:]:
            check("Id1'", k=k, rho=rho)
            check("Id2'", k=k, rho=rho)
    for k in range(2, k3max + 1):
        for s in range(0, s3max + 1):
            check("Id3", k=k, s=s)
    for rho in palindromes_up_to(palindrome_max):
        report = fence.palindromic_vanishing(rho)
        for statement, ok in report.items():
            if statement == "psi+(clmat(rho,0))":
                # alternative reading of the odd case; reported, never required
                res.rows.append({"rho": rho, "statement": statement, "holds": ok})
                continue
            res.record(ok, (statement, rho))
    return res


def suite_traces(rmax: int = 40, oracle: bool = False) -> SuiteResult:
    res = SuiteResult("traces")
    for x in qrational.all_rationals(rmax):
        try:
            q = qrational.q_rational(x)
            res.record(q.num.at_one() == x.r and q.den.at_one() == x.t, (str(x), "q-rational at 1"))
        except qrational.InternalMismatch as exc:
            res.record(False, (str(x), str(exc)))
        report = qrational.trace_theorems(x, oracle=oracle)
        for statement, ok in report.items():
            res.record(ok, (str(x), statement))
            if not ok and statement.startswith("oracle"):
                res.oracle_mismatch = True
    return res


def suite_markov_eq(depth: int = 3) -> SuiteResult:
    res = SuiteResult("markov-eq")
    for t in markov.tree(depth):
        res.record(markov.q_markov_equation_check(t), (t.path, str(t), "q-equation"))
        res.record(markov.classical_check(t), (t.path, str(t), "classical at q=1"))
        residual = markov.printed_constant_residual(t)
        res.rows.append({"path": t.path, "triple": str(t), "printed_constant_residual": residual})
    return res


def suite_markov_words(depth: int = 5) -> SuiteResult:
    """Divisibility, symmetry, unimodality and the trace formula on tree words."""
    res = SuiteResult("markov-words")
    for word in markov.words_up_to(depth):
        trace = markov.word_matrix(word).trace()
        res.record(trace == fence.circular_rank(markov.alpha_of_word(word)), (word.letters, "trace"))
        if word.is_trivial():
            continue
        res.record(word.inner() == word.inner()[::-1], (word.letters, "inner palindrome"))
        try:
            value = markov.q_markov(word)
            res.record(value.is_symmetric() and value.is_unimodal(), (word.letters, "shape"))
        except (AssertionError, ValueError, ArithmeticError) as exc:
            res.record(False, (word.letters, str(exc)))
    return res


def suite_unimodal_sweep(max_size: int = 12) -> SuiteResult:
    """Non-unimodal circular rank polynomials must all be (1,k,1,k) or (k,1,k,1)."""
    res = SuiteResult("unimodal-sweep")
    for c in compositions_up_to(max_size, even_only=True):
        poly = fence.circular_rank(c)
        unimodal = poly.is_unimodal()
        res.rows.append({"composition": c, "polynomial": poly,
                         "symmetric": poly.is_symmetric(), "unimodal": unimodal})
        if unimodal:
            res.passed += 1
        elif fence.is_exceptional(c):
            res.expected.append(c)
        else:
            res.record(False, c)
    # every member of the family in range must actually fail unimodality
    for k in range(1, max_size // 2):
        for c in ((1, k, 1, k), (k, 1, k, 1)):
            if sum(c) <= max_size and c not in res.expected:
                res.record(False, ("family member is unimodal", c))
    return res


def suite_counterexamples(k_max: int = 10, n_max: int = 8) -> SuiteResult:
    res = SuiteResult("counterexamples")
    cases = [("CE1", k) for k in range(2, k_max + 1)]
    cases += [(kind, n) for kind in ("CE2", "CE2'") for n in range(1, n_max + 1)]
    for kind, n in cases:
        try:
            poly = qrational.counterexamples(kind, n)
            res.record(True)
            res.rows.append({"family": kind, "n": n, "polynomial": poly})
        except (qrational.InternalMismatch, fence.InvalidParams) as exc:
            res.record(False, (kind, n, str(exc)))
    return res


def suite_table1() -> SuiteResult:
    """Table rows recomputed; suspect labels go to ``expected`` instead of failing."""
    res = SuiteResult("table1")
    for row in markov.table1_report():
        res.rows.append(row)
        res.record(row["fence_matches_printed"], (row["label"], "fence vs printed"))
        if row["label_consistent"] and row["word_matches_printed"]:
            res.passed += 1
        else:
            res.expected.append((row["label"], row["word_from_fence"]))
    return res


def suite_generalized(count: int = 200, seed: int = 0, max_nodes: int = 8) -> SuiteResult:
    res = SuiteResult("generalized")
    rng = random.Random(seed)
    for i in range(count):
        P = genoriented.random_gen_poset(rng, max_nodes)
        Q = genoriented.random_gen_poset(rng, max_nodes, t=P.s)
        for law, ok in genoriented.prop_laws(P, Q).items():
            res.record(ok, (i, law))
        # reduction to one end on each side
        single = OrientedPoset(P.poset, P.left[0], P.right[0])
        G = genoriented.GenOrientedPoset.from_oriented(single)
        res.record(genoriented.gen_rmm(G) == rmm(single), (i, "rmm reduction"))
        res.record(genoriented.gen_drm(G) == drm(single), (i, "drm reduction"))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "props": suite_props,
    "identities": suite_identities,
    "traces": suite_traces,
    "markov-eq": suite_markov_eq,
    "unimodal-sweep": suite_unimodal_sweep,
    "oracle": suite_oracle,
    "markov-words": suite_markov_words,
    "counterexamples": suite_counterexamples,
    "table1": suite_table1,
    "generalized": suite_generalized,
}


def run_suite(name: str, **params) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(**params)
