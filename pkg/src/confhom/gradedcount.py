"""Truncated bivariate generating functions over Python integers.

A rank table is the Hilbert series of a free graded-commutative algebra,
truncated at weight ``k_max`` and reduced degree ``q_max``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .loopspace import GeneratorSpec


@dataclass(frozen=True)
class PoincareSeries:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a series needs at least the degree-0 coefficient")
        if any(c < 0 for c in coeffs):
            raise ValueError("Poincare series coefficients are nonnegative")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def q_max(self) -> int:
        return len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def coefficient(self, q: int) -> int:
        """Coefficient at degree q; zero outside the stored range."""
        if 0 <= q < len(self.coefficients):
            return self.coefficients[q]
        return 0

    def trimmed(self) -> "PoincareSeries":
        """Drop trailing zeros, keeping at least the constant term."""
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return PoincareSeries(tuple(coeffs))

    def as_list(self) -> list[int]:
        return list(self.coefficients)


@dataclass(frozen=True)
class BigradedRankTable:
    k_max: int
    q_max: int
    rows: tuple[tuple[int, ...], ...]  # rows[k][q]

    def rank(self, k: int, q: int) -> int:
        if not (0 <= k <= self.k_max and 0 <= q <= self.q_max):
            raise IndexError(f"({k}, {q}) outside table caps ({self.k_max}, {self.q_max})")
        return self.rows[k][q]

    def __getitem__(self, kq: tuple[int, int]) -> int:
        return self.rank(*kq)

    def items(self):
        for k, row in enumerate(self.rows):
            for q, r in enumerate(row):
                yield (k, q), r


def _check_generators(generators: Sequence[GeneratorSpec]) -> None:
    seen = set()
    for g in generators:
        if g.id in seen:
            raise ValueError(f"duplicate generator id {g.id!r}")
        seen.add(g.id)
        if g.weight == 0 and g.reduced_degree == 0:
            raise ValueError(f"generator {g.id!r} has weight 0 and degree 0; counts would be infinite")


def rank_table(generators: Sequence[GeneratorSpec], k_max: int, q_max: int) -> BigradedRankTable:
    """Monomial counts by (weight, reduced degree) for the free algebra on ``generators``.

    Each polynomial generator multiplies the running series by the geometric
    series 1/(1 - t^d s^w), each exterior one by (1 + t^d s^w).
    """
    if k_max < 0 or q_max < 0:
        raise ValueError("truncation caps must be nonnegative")
    _check_generators(generators)

    table = [[0] * (q_max + 1) for _ in range(k_max + 1)]
    table[0][0] = 1
    for g in generators:
        w, d = g.weight, g.reduced_degree
        if w > k_max or d > q_max:
            continue
        if g.exterior:
            # descending so each generator is used at most once
            for k in range(k_max, w - 1, -1):
                src, dst = table[k - w], table[k]
                for q in range(q_max, d - 1, -1):
                    dst[q] += src[q - d]
        else:
            # ascending: dividing by (1 - t^d s^w) in place
            for k in range(w, k_max + 1):
                src, dst = table[k - w], table[k]
                for q in range(d, q_max + 1):
                    dst[q] += src[q - d]
    return BigradedRankTable(k_max, q_max, tuple(tuple(row) for row in table))


def series_product(a: PoincareSeries, b: PoincareSeries, q_max: int) -> PoincareSeries:
    """Cauchy product truncated at degree q_max."""
    if q_max < 0:
        raise ValueError("q_max must be nonnegative")
    ac, bc = a.coefficients, b.coefficients
    out = [0] * (q_max + 1)
    for i, x in enumerate(ac[: q_max + 1]):
        if x:
            for j, y in enumerate(bc[: q_max + 1 - i]):
                out[i + j] += x * y
    return PoincareSeries(tuple(out))


def table_slice(table: BigradedRankTable, k: int) -> PoincareSeries:
    if not 0 <= k <= table.k_max:
        raise IndexError(f"weight {k} outside 0..{table.k_max}")
    return PoincareSeries(table.rows[k])


def full_degree_rank(
    generators: Iterable[GeneratorSpec], n: int, total_degree: int, weight: int
) -> int:
    """Number of monomials of exactly ``weight`` and full degree ``total_degree``.

    Generators are graded by reduced_degree + n * weight here, so this count
    does not go through the reduced grading used by :func:`rank_table`.
    """
    if n < 1:
        raise ValueError("label sphere dimension n must be >= 1")
    if weight < 0 or total_degree < 0:
        return 0
    gens = list(generators)
    _check_generators(gens)
    # sparse map (weight, degree) -> count, grown one generator at a time
    counts: dict[tuple[int, int], int] = {(0, 0): 1}
    for g in gens:
        w, d = g.weight, g.full_degree(n)
        if w > weight or d > total_degree:
            continue
        # d > 0 always: (0, 0) generators are rejected and n >= 1
        max_power = 1 if g.exterior else total_degree // d
        new: dict[tuple[int, int], int] = {}
        for (cw, cd), c in counts.items():
            for p in range(max_power + 1):
                key = (cw + p * w, cd + p * d)
                if key[0] > weight or key[1] > total_degree:
                    break
                new[key] = new.get(key, 0) + c
        counts = new
    return counts.get((weight, total_degree), 0)
