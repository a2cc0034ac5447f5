import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidband.bands import Band, BandPresentation, presentation_product, standard_band
from braidband.braid_core import BraidWord, closure_components, identity, inverse
from braidband.garside import words_equal
from braidband.surface import band_trajectory, build_surface, euler_characteristic, ribbon_summary
from oracles import track_position


@st.composite
def presentations(draw, max_strands=6, max_bands=8, max_conj=6):
    n = draw(st.integers(2, max_strands))
    letter = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    bands = draw(
        st.lists(
            st.tuples(st.lists(letter, max_size=max_conj), st.sampled_from((1, -1))),
            max_size=max_bands,
        )
    )
    return BandPresentation(n, tuple(Band(n, BraidWord(n, tuple(c)), s) for c, s in bands))


def test_single_pierced_band(pierced_conjugator):
    s = build_surface(BandPresentation(4, (Band(4, pierced_conjugator, 1),)))
    (band,) = s.bands
    assert band.attach == (1, 4)
    assert band.singularities == (3,)
    assert ribbon_summary(s)["total_singularities"] == 1


def test_standard_sigma_one_band():
    s = build_surface(BandPresentation(2, (Band(2, identity(2), 1),)))
    assert s.bands[0].attach == (1, 2)
    assert s.bands[0].singularities == ()
    assert s.bands[0].trajectory == ()


def test_empty_presentation():
    s = build_surface(BandPresentation(3))
    assert s.disks == (1, 2, 3)
    assert euler_characteristic(s) == 3
    assert s.boundary_components() == 3
    assert ribbon_summary(s)["total_singularities"] == 0


@pytest.mark.parametrize("n", range(2, 8))
def test_fence_surface_is_embedded(n):
    p = BandPresentation(n, tuple(standard_band(i, n) for i in range(1, n)))
    s = build_surface(p)
    assert ribbon_summary(s)["total_singularities"] == 0
    assert euler_characteristic(s) == 1
    assert s.boundary_components() == 1


def test_same_sign_conjugator_is_embedded_mixed_is_not():
    same = build_surface(BandPresentation(4, (Band(4, BraidWord(4, (3, 2)), 1),)))
    assert same.bands[0].attach == (1, 4) and same.bands[0].singularities == ()
    loop = build_surface(BandPresentation(3, (Band(3, BraidWord(3, (2, 2)), 1),)))
    assert loop.bands[0].attach == (1, 2) and loop.bands[0].singularities == (3,)


def test_summary_field_order(pierced_conjugator):
    s = build_surface(BandPresentation(4, (Band(4, pierced_conjugator, 1),)))
    summary = ribbon_summary(s)
    assert list(summary) == [
        "strands",
        "band_count",
        "bands",
        "total_singularities",
        "total_self_intersections",
        "euler_characteristic",
        "boundary_components",
    ]
    assert summary["bands"][0] == {
        "index": 1,
        "sign": 1,
        "attach": [1, 4],
        "singularities": [3],
        "self_intersections": 0,
    }


@given(presentations())
def test_surface_invariants(p):
    s = build_surface(p)
    assert euler_characteristic(s) == p.strands - len(p)
    assert words_equal(s.boundary(), presentation_product(p))
    assert s.boundary_components() == closure_components(presentation_product(p))
    for geom, band in zip(s.bands, p.bands):
        assert geom.attach_start == 1
        assert geom.attach_end == track_position(inverse(band.conjugator).letters, 2)
        movers = 0
        pos = 2
        for x in reversed(band.conjugator.letters):
            if pos in (abs(x), abs(x) + 1):
                movers += 1
                pos = track_position((x,), pos)
        assert len(geom.trajectory) == movers
        lo, hi = geom.swept_interval()
        assert all(lo <= d <= hi for d in geom.singularities)
        assert len(geom.singularities) <= max(len(geom.trajectory) - 1, 0)


@given(presentations(max_strands=6))
def test_knot_boundaries_need_enough_bands(p):
    s = build_surface(p)
    if s.boundary_components() == 1:
        assert len(p) >= p.strands - 1


def test_trajectory_records_sides():
    steps = band_trajectory(BraidWord(4, (-3, 2)))
    assert [(t.start, t.position, t.sign) for t in steps] == [(2, 3, 1), (3, 4, -1)]
    assert steps[0].over and not steps[1].over
