from fractions import Fraction as F

import pytest

from braidband.annular_pl import make_profile, random_admissible
from braidband.braid_core import BraidWord, conjugate, identity, stabilize
from braidband.obstruction import (
    CONFIRMED,
    FAIL,
    INFINITE_ORDER,
    NO_OBSTRUCTION,
    NOT_RIBBON,
    PASS,
    POSSIBLY_FINITE_ORDER,
    UNCHECKED,
    ObstructionError,
    PhiInvariant,
    Property,
    abs_writhe_phi,
    check_properties,
    components_phi,
    endpoint_phi,
    finite_order_writhe_filter,
    link_invariant,
    profile_gap_phi,
    ribbon_obstruction,
    slice_consistency,
    writhe_phi,
)
from braidband.braid_core import writhe

SAMPLES = [
    BraidWord(2, (1, 1, 1)),
    BraidWord(3, (1, -2)),
    BraidWord(3, (1, 2, 1, 1)),
    BraidWord(4, (1, 2, 3)),
    BraidWord(4, (1, -2, 3, 2)),
    identity(3),
]
ALL = frozenset(Property)


def writhe_line_profile(w):
    """Gap |writhe| everywhere: starts at writhe - n with slope n."""
    n = w.strands
    return make_profile(n, [0, 1], [writhe(w) - n, writhe(w)])


def test_writhe_fails_stabilization():
    report = check_properties(writhe_phi(), SAMPLES, seed=1)
    r = report[Property.STABILIZATION_ADDS_ONE]
    assert r.status == FAIL and "-1" in r.counterexample
    assert report[Property.CONJUGACY_INVARIANT].status == PASS
    assert report[Property.BOUNDED_BY_BAND_RANK].status == PASS


def test_components_invariant_properties():
    report = check_properties(components_phi(), SAMPLES, seed=2)
    assert report[Property.CONJUGACY_INVARIANT].status == PASS
    assert report[Property.STABILIZATION_ADDS_ONE].status == PASS
    assert report[Property.BOUNDED_BY_BAND_RANK].status == PASS
    assert report[Property.INCLUSION_NON_RIGID].status == CONFIRMED
    assert report[Property.EXCEEDS_STRANDS_MINUS_ONE].status == UNCHECKED


def test_profile_phi_bounded_by_witnesses():
    phi = profile_gap_phi(writhe_line_profile)
    report = check_properties(phi, SAMPLES, seed=3)
    assert report[Property.BOUNDED_BY_BAND_RANK].status == PASS
    assert report[Property.CONJUGACY_INVARIANT].status == PASS


def test_property_three_failure_is_reported():
    greedy = PhiInvariant("n+1", lambda w: F(w.strands + 1), ALL)
    r = check_properties(greedy, [identity(3)])[Property.BOUNDED_BY_BAND_RANK]
    assert r.status == FAIL


def test_property_five_needs_witness():
    phi = PhiInvariant("n", lambda w: F(w.strands), ALL)
    report = check_properties(phi, SAMPLES, witnesses=[BraidWord(2, (1, 1, 1))])
    assert report[Property.EXCEEDS_STRANDS_MINUS_ONE].status == CONFIRMED


def test_link_invariant():
    phi = components_phi()
    w = BraidWord(3, (1, 2, -1))
    base = link_invariant(phi, w)
    assert link_invariant(phi, stabilize(w, 1)) == base
    assert link_invariant(phi, stabilize(w, -1)) == base
    assert link_invariant(phi, conjugate(w, BraidWord(3, (2, 1)))) == base
    assert link_invariant(phi, identity(4)) == -4
    with pytest.raises(ObstructionError):
        link_invariant(writhe_phi(), w)


def test_ribbon_obstruction():
    v = ribbon_obstruction(components_phi(), BraidWord(4, (1, 2, 3)))
    assert v.verdict == NO_OBSTRUCTION and v.phi_value == 3
    synthetic = PhiInvariant("synthetic", lambda w: F(w.strands), ALL)
    v = ribbon_obstruction(synthetic, BraidWord(3, (1, 2)))
    assert v.verdict == NOT_RIBBON and v.link_invariant == 0
    with pytest.raises(ObstructionError):
        ribbon_obstruction(components_phi(), identity(2))
    with pytest.raises(ObstructionError):
        ribbon_obstruction(abs_writhe_phi(), BraidWord(2, (1,)))


def test_threshold_is_exact():
    just_above = PhiInvariant("x", lambda w: F(w.strands - 1) + F(1, 10**9), ALL)
    at = PhiInvariant("y", lambda w: F(w.strands - 1), ALL)
    w = BraidWord(3, (1, 2))
    assert ribbon_obstruction(just_above, w).verdict == NOT_RIBBON
    assert ribbon_obstruction(at, w).verdict == NO_OBSTRUCTION


def test_profile_gap_negative_result():
    w = BraidWord(3, (1, -2))
    for seed in range(50):
        f = random_admissible(3, seed % 4, seed, fixed_start=-1, fixed_end=writhe(w))
        v = ribbon_obstruction(profile_gap_phi(f), w)
        assert v.phi_value == 2 and v.verdict == NO_OBSTRUCTION


def test_endpoint_phi():
    trefoil = BraidWord(2, (1, 1, 1))
    assert ribbon_obstruction(endpoint_phi(2), trefoil).verdict == NOT_RIBBON
    assert ribbon_obstruction(endpoint_phi(0), BraidWord(3, (1, -2))).verdict == NO_OBSTRUCTION


def test_slice_consistency():
    trefoil = BraidWord(2, (1, 1, 1))
    report = slice_consistency(abs_writhe_phi(), trefoil, 3)
    assert report.violations == (0,)
    assert report.not_slice
    assert [r.margin for r in report.rows] == [-2, 0, 2, 4]
    ok = slice_consistency(abs_writhe_phi(), identity(3), 4)
    assert not ok.not_slice
    with pytest.raises(ObstructionError):
        slice_consistency(PhiInvariant("bare", lambda w: F(0)), trefoil, 1)


def test_finite_order_filter():
    assert finite_order_writhe_filter(BraidWord(2, (1, 1, 1))) == INFINITE_ORDER
    assert finite_order_writhe_filter(identity(1)) == POSSIBLY_FINITE_ORDER
    fig8 = BraidWord(3, (1, -2, 1, -2))
    assert finite_order_writhe_filter(fig8) == POSSIBLY_FINITE_ORDER
    # per representative: a positive stabilization keeps the trefoil flagged
    assert finite_order_writhe_filter(stabilize(BraidWord(2, (1, 1, 1)), 1)) == INFINITE_ORDER
    with pytest.raises(ObstructionError):
        finite_order_writhe_filter(identity(2))


def test_verdict_json():
    v = ribbon_obstruction(components_phi(), BraidWord(3, (1, 2)))
    assert list(v.to_json()) == ["braid", "n", "phi", "phi_value", "threshold", "verdict", "evidence"]
