"""Dyer-Lashof monomial generators of H_*(Omega^j S^{n+j}; F2).

Everything is graded by *reduced degree* (homological degree minus n times
weight), which removes the label-sphere dimension n from all outputs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class AdmissibleWord:
    """Nondecreasing sequence (i_1 <= ... <= i_r) of positive integers."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(int(i) for i in self.entries)
        object.__setattr__(self, "entries", entries)
        if any(i <= 0 for i in entries):
            raise ValueError(f"admissible entries must be positive: {entries}")
        if any(a > b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"admissible entries must be nondecreasing: {entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def excess(self) -> int:
        """Largest entry i_r (0 for the empty word)."""
        return self.entries[-1] if self.entries else 0

    def sort_key(self):
        return (len(self.entries), self.entries)


@dataclass(frozen=True)
class GeneratorSpec:
    """One polynomial or exterior generator: u_alpha or Q_I u_alpha."""

    id: str
    handle_degree: int
    word: AdmissibleWord
    reduced_degree: int
    weight: int
    exterior: bool = False

    def __post_init__(self):
        if self.handle_degree < 0 or self.reduced_degree < 0 or self.weight < 0:
            raise ValueError(f"negative grading in generator {self.id!r}")

    def full_degree(self, n: int) -> int:
        return self.reduced_degree + n * self.weight


def enumerate_admissible(lambda_max: int, weight_cap: int) -> list[AdmissibleWord]:
    """All admissible words with entries <= lambda_max and 2**len <= weight_cap.

    Ordered shorter first, then lexicographically; the empty word is first.
    """
    if lambda_max < 0 or weight_cap < 1:
        raise ValueError("need lambda_max >= 0 and weight_cap >= 1")
    max_len = weight_cap.bit_length() - 1
    words = [AdmissibleWord()]
    if lambda_max == 0:
        return words
    for r in range(1, max_len + 1):
        words.extend(
            AdmissibleWord(w)
            for w in itertools.combinations_with_replacement(range(1, lambda_max + 1), r)
        )
    return words


def word_reduced_degree(word: AdmissibleWord, handle_degree: int) -> int:
    """i_1 + 2 i_2 + ... + 2^{r-1} i_r + 2^r * handle_degree."""
    entries = tuple(word)
    total = sum(i << pos for pos, i in enumerate(entries))
    return total + (handle_degree << len(entries))


def word_full_degree(word: AdmissibleWord, handle_degree: int, n: int) -> int:
    """Degree of Q_I u with |u| = handle_degree + n, applying Q_i: q -> 2q + i."""
    degree = handle_degree + n
    for i in reversed(tuple(word)):
        degree = 2 * degree + i
    return degree


def _generator_id(word: AdmissibleWord, label: str) -> str:
    if not len(word):
        return label
    return "Q[" + ",".join(map(str, word)) + "]" + label


def loop_space_generators(
    loop_order: int,
    handle_degree: int,
    ambient_dim: int,
    weight_cap: int,
    label: str = "u",
) -> list[GeneratorSpec]:
    """Generators of H_*(Omega^{loop_order} S^{ambient_dim+n}) up to weight_cap.

    loop_order = 0 is the sphere itself: a single exterior class u with u^2 = 0.
    ``label`` names the fundamental class and keeps ids distinct across copies.
    """
    if loop_order < 0:
        raise ValueError(f"loop order must be nonnegative, got {loop_order}")
    if loop_order != ambient_dim - handle_degree:
        raise ValueError(
            f"loop order {loop_order} != ambient_dim - handle_degree "
            f"= {ambient_dim - handle_degree}"
        )
    if weight_cap < 1:
        raise ValueError("weight_cap must be >= 1")

    if loop_order == 0:
        return [
            GeneratorSpec(
                id=label,
                handle_degree=handle_degree,
                word=AdmissibleWord(),
                reduced_degree=handle_degree,
                weight=1,
                exterior=True,
            )
        ]

    gens = [
        GeneratorSpec(
            id=_generator_id(word, label),
            handle_degree=handle_degree,
            word=word,
            reduced_degree=word_reduced_degree(word, handle_degree),
            weight=1 << len(word),
        )
        for word in enumerate_admissible(loop_order - 1, weight_cap)
    ]
    gens.sort(key=lambda g: (g.weight, g.reduced_degree, g.word.entries))
    return gens
