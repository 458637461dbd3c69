"""Cosimplicial identities, partial shifts, and the correspondence between
SCOs and partial-shift systems on finite truncations."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cosimplex import simplicial
from cosimplex.cli import ordinal_sco
from cosimplex.simplicial import (
    Colim,
    ExchangeLawError,
    FaceMap,
    InjectivityError,
    Level,
    PartialShiftSystem,
    Sco,
    TruncationError,
    VerificationError,
    fixed_point_filtration,
    nat_partial_shift,
    prop_partial_check,
    relabel,
    sco_from_shifts,
    sco_verify,
    shifts_from_sco,
    verify_partial_shifts,
)


def test_face_map_values():
    f = FaceMap(2, 4)
    assert [f(m) for m in range(4)] == [0, 1, 3, 4]
    with pytest.raises(ValueError):
        f(4)
    with pytest.raises(ValueError):
        FaceMap(5, 4)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 20))
def test_face_map_identity_on_naturals(i, j, m):
    # delta^j delta^i = delta^i delta^{j-1} for i < j, on the shift model
    if i >= j:
        i, j = j, i + 1
    lhs = nat_partial_shift(j, nat_partial_shift(i, m))
    rhs = nat_partial_shift(i, nat_partial_shift(j - 1, m))
    assert lhs == rhs


def test_nat_partial_shift_is_injective_and_misses_k():
    values = [nat_partial_shift(3, m) for m in range(10)]
    assert len(set(values)) == 10
    assert 3 not in values


def test_ordinal_sco_verifies():
    rep = sco_verify(ordinal_sco(6))
    assert rep.passed
    assert rep.mode == "exhaustive"
    assert rep.checked_count > 0


def test_broken_coface_detected():
    base = ordinal_sco(4)
    broken = Sco(
        levels=base.levels,
        # perturbing a single coface breaks the identity with a witness
        coface=lambda n, k, x: x + 1 if (n, k) == (2, 1) else FaceMap(k, n)(x),
    )
    rep = sco_verify(broken)
    assert not rep.passed
    assert rep.witness is not None


def test_delta_bounds():
    s = ordinal_sco(3)
    with pytest.raises(ValueError):
        s.delta(2, 3, 0)
    with pytest.raises(TruncationError):
        s.delta(4, 0, 0)


def test_shifts_round_trip_on_ordinals():
    s = ordinal_sco(5)
    p = shifts_from_sco(s)
    assert verify_partial_shifts(p).passed
    s2 = sco_from_shifts(p)
    for n in range(1, 5):
        for k in range(n + 1):
            for x in s.levels[n - 1].elements:
                assert s.delta(n, k, x) == s2.delta(n, k, x)


def test_partial_shift_formula():
    # alpha_k alpha_0^N mu_0 equals alpha_0^N mu_0 for N < k, else one more shift
    p = shifts_from_sco(ordinal_sco(8))
    for k in range(7):
        for n_power in range(7):
            assert prop_partial_check(p, k, n_power, 0)


def test_colimit_pushforward_equality():
    p = shifts_from_sco(ordinal_sco(4))
    a = Colim(0, 0)
    b = p.push(a, 3)
    assert b.level == 3
    assert p.colim_equal(a, b)


def test_relabel_shifts_indices():
    p = shifts_from_sco(ordinal_sco(6))
    r = relabel(p, 2)
    # relabeled alpha_0 is the original alpha_2 two levels up
    for x in p.levels[2].elements:
        assert r.alpha(0, 1, x) == p.alpha(2, 3, x)
    assert r.n_max == p.n_max - 2


def test_injectivity_check():
    levels = (Level((0, 1)), Level((0, 1)))
    collapsing = PartialShiftSystem(
        levels=levels,
        connect=lambda n, x: 0,  # both level-0 points merge downstream
        alpha=lambda k, n, x: x,
    )
    with pytest.raises(InjectivityError):
        sco_from_shifts(collapsing)


def test_sco_from_shifts_rejects_broken_exchange():
    levels = tuple(Level(tuple(range(n + 1))) for n in range(4))
    bad = PartialShiftSystem(
        levels=levels,
        connect=lambda n, x: x,
        alpha=lambda k, n, x: min(x + k, n),  # not a coface family
    )
    with pytest.raises(VerificationError):
        sco_from_shifts(bad)


def test_fixed_point_filtration_from_clamped_shifts():
    # the clamped shift model on {0..9}: alpha_k(m) = min(m+1, 9) for m >= k
    carrier = tuple(range(10))
    maps = [
        (lambda k: (lambda m: m if m < k else min(m + 1, 9)))(k) for k in range(10)
    ]
    p = fixed_point_filtration(maps, carrier)
    # X_n = {x : alpha_{n+1} x = x} = {0..n} plus the clamp point 9
    for n in range(5):
        assert p.levels[n].elements == tuple(range(n + 1)) + (9,)


def test_fixed_point_filtration_rejects_non_commuting_maps():
    carrier = (0, 1, 2)
    maps = [lambda m: (m + 1) % 3, lambda m: m, lambda m: 2 - m]
    with pytest.raises(ExchangeLawError):
        fixed_point_filtration(maps, carrier)


def test_fixed_point_filtration_reports_untruncatable_elements():
    carrier = tuple(range(10))
    maps = [
        (lambda k: (lambda m: m if m < k else m + 1 if m < 9 else 9))(k)
        for k in range(3)
    ]
    # only alpha_0, alpha_1, alpha_2 available: elements 2..8 lie outside X_1
    with pytest.raises(TruncationError):
        fixed_point_filtration(maps, carrier)


def test_augmented_verification_covers_augmentation():
    # the constant one-point SCO is augmented; the verifier must include the
    # sources at level -1 (where delta^0 sigma = delta^1 sigma is required)
    plain = Sco(
        levels=tuple(Level(("pt",)) for _ in range(4)),
        coface=lambda n, k, x: "pt",
    )
    aug = Sco(levels=plain.levels, coface=plain.coface, augmentation=Level(("pt",)))
    assert sco_verify(aug).passed
    assert sco_verify(aug).checked_count > sco_verify(plain).checked_count
