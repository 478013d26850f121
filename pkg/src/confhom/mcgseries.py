"""Mod-2 Poincare series of the mapping class group of RP^2 with k punctures.

The Borel construction ESO(3) x_{SO(3)} F_k(RP^2)/Sigma_k is a K(pi, 1) for
pi = Gamma^k(RP^2) when k >= 2, and its Serre spectral sequence over BSO(3)
collapses mod 2.  Hence the series is the configuration space series times
the series of F2[w_2, w_3].  Nothing is claimed for k < 2.
"""
from __future__ import annotations

from dataclasses import dataclass

from .confighomology import Mismatch, VerificationReport, config_betti, real_projective_plane
from .gradedcount import PoincareSeries, series_product


@dataclass(frozen=True)
class McgQuery:
    k: int
    q_max: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(
                f"k = {self.k}: the tensor product formula for H^*(Gamma^k(RP^2); F2) "
                "is only established for k >= 2"
            )
        if self.q_max < 0:
            raise ValueError("q_max must be nonnegative")


def bso3_series(q_max: int) -> PoincareSeries:
    """Series of F2[w_2, w_3]: count of (a, b) with 2a + 3b = q."""
    if q_max < 0:
        raise ValueError("q_max must be nonnegative")
    coeffs = [0] * (q_max + 1)
    for b in range(q_max // 3 + 1):
        for a in range((q_max - 3 * b) // 2 + 1):
            coeffs[2 * a + 3 * b] += 1
    return PoincareSeries(tuple(coeffs))


def mcg_rp2_series(query: McgQuery) -> PoincareSeries:
    fiber = config_betti(real_projective_plane(), query.k)
    return series_product(fiber, bso3_series(query.q_max), query.q_max)


def dihedral_series(q_max: int) -> PoincareSeries:
    """H^*(D_8; F2) series (1 + t)/((1 - t)(1 - t^2)), whose coefficient at q is q + 1."""
    return PoincareSeries(tuple(q + 1 for q in range(q_max + 1)))


def verify_k2_dihedral(q_max: int) -> VerificationReport:
    """k = 2 series against the dihedral group D_8 closed form."""
    got = mcg_rp2_series(McgQuery(2, q_max))
    want = dihedral_series(q_max)
    mismatches = tuple(
        Mismatch(2, q, w, g, "D_8 closed form")
        for q, (w, g) in enumerate(zip(want, got))
        if w != g
    )
    return VerificationReport("dihedral", ((2, q_max + 1),), mismatches)
