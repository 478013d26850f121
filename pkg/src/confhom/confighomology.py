"""Mod-2 homology of unordered configuration spaces and braid groups.

H_*C(M; S^n) is a tensor product of iterated loop space homologies, one
factor per mod-2 Betti class of M.  Its weight-k part, regraded by reduced
degree, is H_*(F_k(M)/Sigma_k; F2).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .gradedcount import (
    PoincareSeries,
    full_degree_rank,
    rank_table,
    table_slice,
)
from .loopspace import GeneratorSpec, loop_space_generators


@dataclass(frozen=True)
class ManifoldData:
    dimension: int
    mod2_betti: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        betti = tuple(int(b) for b in self.mod2_betti)
        object.__setattr__(self, "mod2_betti", betti)
        if self.dimension < 1:
            raise ValueError("manifold dimension must be >= 1")
        if len(betti) != self.dimension + 1:
            raise ValueError(
                f"need {self.dimension + 1} Betti numbers for a {self.dimension}-manifold, got {len(betti)}"
            )
        if any(b < 0 for b in betti):
            raise ValueError("Betti numbers are nonnegative")
        if betti[0] != 1:
            raise ValueError("manifold must be connected (beta_0 = 1)")


def orientable_surface(genus: int) -> ManifoldData:
    if genus < 0:
        raise ValueError("orientable genus must be >= 0")
    name = "sphere" if genus == 0 else f"orientable:{genus}"
    return ManifoldData(2, (1, 2 * genus, 1), name)


def nonorientable_surface(genus: int) -> ManifoldData:
    if genus < 1:
        raise ValueError("non-orientable genus must be >= 1")
    name = {1: "rp2", 2: "klein"}.get(genus, f"nonorientable:{genus}")
    return ManifoldData(2, (1, genus, 1), name)


def real_projective_plane() -> ManifoldData:
    return nonorientable_surface(1)


def klein_bottle() -> ManifoldData:
    return nonorientable_surface(2)


def sphere() -> ManifoldData:
    return orientable_surface(0)


def parse_surface(spec: str) -> ManifoldData:
    """Parse ``rp2 | klein | sphere | nonorientable:g | orientable:g``."""
    spec = spec.strip().lower()
    simple = {"rp2": real_projective_plane, "klein": klein_bottle, "sphere": sphere}
    if spec in simple:
        return simple[spec]()
    kind, sep, genus = spec.partition(":")
    if sep and kind in ("nonorientable", "orientable"):
        try:
            g = int(genus)
        except ValueError:
            raise ValueError(f"bad genus in surface spec {spec!r}") from None
        if kind == "nonorientable":
            return nonorientable_surface(g)
        return orientable_surface(g)
    raise ValueError(
        f"unknown surface {spec!r}; expected rp2, klein, sphere, nonorientable:g or orientable:g"
    )


BUILTIN_SURFACES: tuple[ManifoldData, ...] = (
    real_projective_plane(),
    klein_bottle(),
    nonorientable_surface(3),
    sphere(),
    orientable_surface(1),
    orientable_surface(2),
)


def bct_generators(manifold: ManifoldData, weight_cap: int) -> list[GeneratorSpec]:
    """Generators of H_*C(M; S^n): one loop space factor per Betti class."""
    m = manifold.dimension
    gens: list[GeneratorSpec] = []
    for q, beta in enumerate(manifold.mod2_betti):
        for copy in range(beta):
            label = f"u{q}" if beta == 1 else f"u{q}_{copy + 1}"
            gens.extend(loop_space_generators(m - q, q, m, weight_cap, label=label))
    return gens


def config_degree_cap(manifold: ManifoldData, k: int) -> int:
    # every generator has reduced_degree <= dimension * weight
    m = manifold.dimension
    return max(2 * k + m, m * k)


def config_betti(manifold: ManifoldData, k: int) -> PoincareSeries:
    """Mod-2 Betti numbers of F_k(M)/Sigma_k, trailing zeros dropped."""
    if k < 0:
        raise ValueError("k must be >= 0")
    gens = bct_generators(manifold, max(k, 1))
    table = rank_table(gens, k, config_degree_cap(manifold, k))
    return table_slice(table, k).trimmed()


def braid_generators(weight_cap: int) -> list[GeneratorSpec]:
    """y_j = Q_1^j y_0 in H_*(Omega^2 S^{n+2}), i.e. C(R^2; S^n)."""
    return loop_space_generators(2, 0, 2, weight_cap, label="y")


@lru_cache(maxsize=None)
def braid_betti(k: int) -> PoincareSeries:
    """Mod-2 Betti numbers of the Artin braid group B_k (B_0 = B_1 = 1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    table = rank_table(braid_generators(max(k, 1)), k, max(k, 1))
    return table_slice(table, k).trimmed()


def rp2_betti_via_braids(k: int, q: int) -> int:
    """rank H_q(F_k(RP^2)/Sigma_k) as a sum of braid group Betti numbers.

    Terms x^l * y contribute H_{q-l}(B_{k-l}); terms u x^l y contribute
    H_{q-l-2}(B_{k-l-1}).
    """
    total = sum(braid_betti(k - l).coefficient(q - l) for l in range(min(q, k) + 1))
    total += sum(
        braid_betti(k - l - 1).coefficient(q - l - 2) for l in range(min(q - 2, k - 1) + 1)
    )
    return total


@dataclass(frozen=True)
class Mismatch:
    k: int
    q: int
    expected: int
    actual: int
    context: str = ""


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    cells_by_k: tuple[tuple[int, int], ...] = ()
    mismatches: tuple[Mismatch, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def cells_checked(self) -> int:
        return sum(c for _, c in self.cells_by_k)


def merge_reports(suite: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    cells: dict[int, int] = {}
    mismatches: list[Mismatch] = []
    notes: list[str] = []
    for r in reports:
        for k, c in r.cells_by_k:
            cells[k] = cells.get(k, 0) + c
        mismatches.extend(r.mismatches)
        notes.extend(r.notes)
    return VerificationReport(suite, tuple(sorted(cells.items())), tuple(mismatches), tuple(notes))


def verify_braid_decomposition(k_max: int) -> VerificationReport:
    """Direct RP^2 enumeration against the braid group direct-sum formula."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rp2 = real_projective_plane()
    cells = []
    mismatches = []
    for k in range(1, k_max + 1):
        direct = config_betti(rp2, k)
        for q in range(k + 3):
            via = rp2_betti_via_braids(k, q)
            if via != direct.coefficient(q):
                mismatches.append(Mismatch(k, q, direct.coefficient(q), via, "rp2 vs braids"))
        cells.append((k, k + 3))
    return VerificationReport("braid-decomposition", tuple(cells), tuple(mismatches))


def verify_n_independence(
    manifold: ManifoldData, k: int, n_values: Sequence[int]
) -> VerificationReport:
    """Full-degree counts at q + k*n agree for every n and with config_betti."""
    if any(n < 1 for n in n_values):
        raise ValueError("label sphere dimensions must be >= 1")
    gens = bct_generators(manifold, max(k, 1))
    expected = config_betti(manifold, k)
    mismatches = []
    # one degree past the last nonzero rank also checks vanishing
    q_top = expected.q_max + 1
    for q in range(q_top + 1):
        for n in n_values:
            actual = full_degree_rank(gens, n, q + k * n, k)
            if actual != expected.coefficient(q):
                mismatches.append(
                    Mismatch(k, q, expected.coefficient(q), actual, f"{manifold.name} n={n}")
                )
    return VerificationReport(
        "n-independence", ((k, (q_top + 1) * len(n_values)),), tuple(mismatches)
    )


def verify_n_independence_all(
    k_max: int,
    n_values: Sequence[int] = (1, 2, 3),
    surfaces: Sequence[ManifoldData] = BUILTIN_SURFACES,
) -> VerificationReport:
    return merge_reports(
        "n-independence",
        (verify_n_independence(s, k, n_values) for s in surfaces for k in range(k_max + 1)),
    )
