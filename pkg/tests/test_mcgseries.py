import pytest
from hypothesis import given, settings, strategies as st

from confhom.confighomology import config_betti, real_projective_plane
from confhom.mcgseries import McgQuery, bso3_series, mcg_rp2_series, verify_k2_dihedral

from oracles import convolve, dihedral_coefficients


def test_bso3_series():
    assert bso3_series(6).as_list() == [1, 0, 1, 1, 1, 1, 2]
    assert bso3_series(0).as_list() == [1]
    assert bso3_series(12).coefficient(12) == 3


def test_mcg_examples():
    assert mcg_rp2_series(McgQuery(2, 5)).as_list() == [1, 2, 3, 4, 5, 6]
    # [1,2,3,3,1] * [1,0,1,1,1]: degree 4 is 1*1 + 2*1 + 3*1 + 3*0 + 1*1 = 7
    assert mcg_rp2_series(McgQuery(3, 4)).as_list() == [1, 2, 4, 6, 7]
    assert mcg_rp2_series(McgQuery(4, 0)).as_list() == [1]


@pytest.mark.parametrize("k", [-1, 0, 1])
def test_rejects_small_k(k):
    with pytest.raises(ValueError, match="k >= 2"):
        McgQuery(k, 4)


def test_dihedral_closed_form_oracle():
    assert dihedral_coefficients(20) == list(range(1, 22))


@pytest.mark.parametrize("q_max", [0, 5, 20])
def test_verify_k2_dihedral(q_max):
    report = verify_k2_dihedral(q_max)
    assert report.passed
    assert mcg_rp2_series(McgQuery(2, q_max)).as_list() == dihedral_coefficients(q_max)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 12), st.integers(0, 30))
def test_mcg_series_properties(k, q_max):
    series = mcg_rp2_series(McgQuery(k, q_max))
    fiber = config_betti(real_projective_plane(), k).as_list()
    assert series.as_list() == convolve(fiber, bso3_series(q_max).as_list(), q_max)
    assert series.coefficient(0) == 1
    if q_max >= 1:
        assert series.coefficient(1) == 2
    for q in range(q_max - 5):
        assert series.coefficient(q + 6) >= series.coefficient(q)
