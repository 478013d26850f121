"""Mod-2 Betti numbers of configuration spaces of surfaces, braid groups and
the punctured projective plane's mapping class group, by monomial counting."""

from .loopspace import (
    AdmissibleWord,
    GeneratorSpec,
    enumerate_admissible,
    loop_space_generators,
    word_reduced_degree,
)
from .gradedcount import (
    BigradedRankTable,
    PoincareSeries,
    full_degree_rank,
    rank_table,
    series_product,
    table_slice,
)
from .confighomology import (
    BUILTIN_SURFACES,
    ManifoldData,
    VerificationReport,
    bct_generators,
    braid_betti,
    config_betti,
    klein_bottle,
    nonorientable_surface,
    orientable_surface,
    parse_surface,
    real_projective_plane,
    rp2_betti_via_braids,
    sphere,
    verify_braid_decomposition,
    verify_n_independence,
    verify_n_independence_all,
)
from .mcgseries import McgQuery, bso3_series, mcg_rp2_series, verify_k2_dihedral

__version__ = "0.1.0"
