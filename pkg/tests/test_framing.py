import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parallelise.braids import BraidWord, FramedLink, closure_components, linking_parity, random_braid
from parallelise.framing import (
    SurfaceClassId,
    SurgeryCurveId,
    TwistState,
    apply_surface_twists,
    base_twists,
    check_even_surgery,
    compute_certificate,
    intersection_parity,
    reverify_certificate,
)
from parallelise.gf2 import DimensionError, Gf2Vector, LinkingParity

INF_CURVE = SurgeryCurveId.infinity()
INF_SURF = SurfaceClassId.infinity()

linking_parities = st.tuples(st.integers(0, 24), st.integers(0, 2**32 - 1)).map(
    lambda t: LinkingParity.random(t[0], np.random.default_rng(t[1]))
)


def test_base_twists():
    assert base_twists(0).as_dict() == {"sigma_inf": 0}
    assert base_twists(1).as_dict() == {"sigma_1": 1, "sigma_inf": 0}
    assert base_twists(3) == TwistState((1, 1, 1), 0)
    with pytest.raises(ValueError):
        base_twists(-1)


def test_intersection_table():
    lp = LinkingParity.from_off_diagonal(3, [(0, 1)])
    assert intersection_parity(INF_CURVE, INF_SURF, lp) == 1
    assert intersection_parity(INF_CURVE, SurfaceClassId(2), lp) == 0
    assert intersection_parity(SurgeryCurveId(1), INF_SURF, lp) == 1
    assert intersection_parity(SurgeryCurveId(2), SurfaceClassId(2), lp) == 1
    assert intersection_parity(SurgeryCurveId(1), SurfaceClassId(2), lp) == 1
    assert intersection_parity(SurgeryCurveId(2), SurfaceClassId(1), lp) == 1
    assert intersection_parity(SurgeryCurveId(1), SurfaceClassId(3), lp) == 0


def test_intersection_out_of_range():
    lp = LinkingParity.from_off_diagonal(2, [])
    with pytest.raises(IndexError):
        intersection_parity(SurgeryCurveId(3), INF_SURF, lp)
    with pytest.raises(IndexError):
        intersection_parity(INF_CURVE, SurfaceClassId(0), lp)


def test_apply_surface_twists_examples():
    lp = LinkingParity.from_off_diagonal(2, [(0, 1)])
    base = base_twists(2)
    assert apply_surface_twists(base, Gf2Vector.zeros(2), 0, lp) == base
    single = LinkingParity.from_off_diagonal(1, [])
    assert apply_surface_twists(base_twists(1), Gf2Vector.of([1]), 1, single) == TwistState((1,), 1)
    assert apply_surface_twists(base, Gf2Vector.of([1, 0]), 1, lp) == TwistState((1, 1), 1)


def test_apply_surface_twists_dimension_mismatch():
    lp = LinkingParity.from_off_diagonal(2, [])
    with pytest.raises(DimensionError):
        apply_surface_twists(base_twists(2), Gf2Vector.zeros(3), 1, lp)
    with pytest.raises(DimensionError):
        apply_surface_twists(base_twists(1), Gf2Vector.zeros(2), 1, lp)


@pytest.mark.parametrize(
    "lp, a",
    [
        (LinkingParity.from_rows([]), ()),
        (LinkingParity.from_off_diagonal(1, []), (1,)),
        (LinkingParity.from_off_diagonal(2, [(0, 1)]), (1, 0)),
    ],
)
def test_certificate_examples(lp, a):
    cert = compute_certificate(lp)
    assert cert.a.entries == a
    assert cert.a_inf == 1
    assert cert.valid
    assert set(cert.resulting.as_dict().values()) == {1}


@settings(max_examples=200)
@given(linking_parities)
def test_certificate_valid_and_reverified(lp):
    cert = compute_certificate(lp)
    assert cert.valid
    assert reverify_certificate(cert, lp) == cert.resulting.as_dict()


@given(linking_parities, st.data())
def test_twists_add_mod_two(lp, data):
    n = lp.n
    bits = st.lists(st.integers(0, 1), min_size=n, max_size=n)
    a1, a2 = Gf2Vector.of(data.draw(bits)), Gf2Vector.of(data.draw(bits))
    i1, i2 = data.draw(st.integers(0, 1)), data.draw(st.integers(0, 1))
    base = base_twists(n)
    once = apply_surface_twists(base, a1 + a2, i1 ^ i2, lp)
    twice = apply_surface_twists(apply_surface_twists(base, a1, i1, lp), a2, i2, lp)
    assert once == twice


@given(linking_parities, st.data())
def test_sigma_inf_untouched_without_sigma_inf_surface(lp, data):
    a = Gf2Vector.of(data.draw(st.lists(st.integers(0, 1), min_size=lp.n, max_size=lp.n)))
    base = base_twists(lp.n)
    assert apply_surface_twists(base, a, 0, lp).inf == base.inf


@pytest.mark.parametrize(
    "braid, framing, sl, extends",
    [
        (BraidWord(1, ()), 0, -1, True),
        (BraidWord(1, ()), -1, -1, False),
        (BraidWord(2, (1, 1, 1)), 2, 1, True),
    ],
)
def test_even_surgery_examples(braid, framing, sl, extends):
    report = check_even_surgery(FramedLink(braid, (framing,)))
    (v,) = report.components
    assert v.self_linking == sl
    assert v.extends is extends
    assert v.difference_parity == (framing - sl) % 2
    assert report.overall is extends
    assert report.all_even is (framing % 2 == 0)


@settings(max_examples=200)
@given(st.integers(1, 6), st.integers(0, 12), st.integers(0, 2**32 - 1))
def test_even_framings_always_extend(strands, length, seed):
    rng = np.random.default_rng(seed)
    b = random_braid(rng, strands, length)
    count = closure_components(b).count
    framings = tuple(int(2 * x) for x in rng.integers(-5, 6, size=count))
    report = check_even_surgery(FramedLink(b, framings))
    assert report.all_even and report.overall
    assert all(v.self_linking % 2 == 1 for v in report.components)


@given(st.integers(1, 6), st.integers(0, 12), st.integers(0, 2**32 - 1))
def test_braid_certificate(strands, length, seed):
    b = random_braid(np.random.default_rng(seed), strands, length)
    lp = linking_parity(b)
    assert compute_certificate(lp).valid
