"""Cochain complexes of matrix braid actions: differentials, d d = 0,
and cohomology dimensions via the exact rank oracle."""

import random

import pytest

from cosimplex import cohomology, groups, linalg
from cosimplex.cohomology import (
    BrokenComplexError,
    CochainComplex,
    cochain_complex,
    cohomology_dim,
    cohomology_table,
    differential,
    h1_explicit,
    module_sco,
    verify_dd_zero,
)
from cosimplex.linalg import Matrix
from cosimplex.scalars import scalar


def trivial_sco(dim=2, n_max=4):
    return module_sco([Matrix.identity(dim)] * (n_max + 2), n_max)


def perm_sco(size=6, n_max=4):
    return module_sco(groups.permutation_matrix_generators(size), n_max)


def burau_sco(size=7, n_max=4):
    return module_sco(groups.burau_generators(size, scalar(2)), n_max)


def test_trivial_action_differentials_alternate():
    # all cofaces are the identity, so d^n = (n+1 terms of alternating signs)
    s = trivial_sco()
    for n in range(5):
        expect = Matrix.identity(2) if n % 2 == 0 else Matrix.zero(2, 2)
        assert differential(s, n) == expect


def test_d_zero_is_the_inclusion():
    # d^0 = delta^0 : V^{-1} -> V^0 is the identity in the chosen bases
    for s in (trivial_sco(), perm_sco(), burau_sco()):
        d0 = differential(s, 0)
        assert d0.rows == s.basis(0).cols and d0.cols == s.basis(-1).cols
        assert s.basis(0) * d0 == s.basis(-1)


def test_d_one_is_sigma_minus_identity():
    # on V^0 (fixed by sigma_k, k >= 2) the alternating sum collapses to
    # d^1 x = sigma_1 x - x
    for s in (perm_sco(), burau_sco()):
        p0 = s.basis(0)
        assert s.basis(1) * differential(s, 1) == s.generator(1) * p0 - p0


def test_dd_zero_for_all_actions():
    for s in (trivial_sco(), perm_sco(), burau_sco()):
        assert verify_dd_zero(cochain_complex(s)).passed


def test_trivial_action_has_vanishing_cohomology():
    c = cochain_complex(trivial_sco())
    for n in range(c.top):
        assert cohomology_dim(c, n) == 0


def test_h0_vanishes_for_all_actions():
    for s in (trivial_sco(), perm_sco(), burau_sco()):
        assert cohomology_dim(cochain_complex(s), 0) == 0


def test_h1_generic_and_explicit_descriptions_agree():
    for s in (trivial_sco(), perm_sco(), burau_sco()):
        assert cohomology_dim(cochain_complex(s), 1) == h1_explicit(s)


def test_dimension_is_basis_independent():
    # conjugating every generator by a fixed invertible matrix changes all the
    # level bases but no cohomology dimension
    rng = random.Random(5)
    size = 6
    while True:
        p = linalg.random_matrix(rng, size, size)
        if linalg.rank(p) == size:
            break
    p_inv = linalg.inverse(p)
    gens = groups.permutation_matrix_generators(size)
    a = module_sco(gens, 3)
    b = module_sco([p * g * p_inv for g in gens], 3)
    for n in range(3):
        assert cohomology_dim(cochain_complex(a), n) == cohomology_dim(
            cochain_complex(b), n
        )


def test_mutant_differential_fails_with_witness():
    c = cochain_complex(perm_sco())
    d1 = c.diffs[1]
    bumped = d1 + Matrix.from_rows(
        [
            [scalar(1 if (i, j) == (0, 0) else 0) for j in range(d1.cols)]
            for i in range(d1.rows)
        ]
    )
    mutant = CochainComplex((c.diffs[0], bumped) + c.diffs[2:])
    rep = verify_dd_zero(mutant)
    assert not rep.passed
    assert rep.witness is not None
    assert "entry" in rep.witness.data


def test_broken_complex_raises_on_negative_dimension():
    eye = Matrix.identity(1)
    with pytest.raises(BrokenComplexError):
        cohomology_dim(CochainComplex((eye, eye)), 0)


def test_cohomology_table_shape():
    s = burau_sco()
    table = cohomology_table(s)
    assert [row["n"] for row in table] == list(range(4))
    for row in table:
        assert row["dim_H"] == row["dim_ker_d_next"] - row["rank_d"]
    assert table[0]["dim_H"] == 0


def test_level_bases_are_nested_fixed_spaces():
    s = burau_sco()
    for n in range(-1, 4):
        basis = s.basis(n)
        # every basis vector is fixed by all generators of index >= n + 2
        for k in range(n + 2, 7):
            assert s.generator(k) * basis == basis


def test_differential_range_errors():
    s = trivial_sco(n_max=2)
    with pytest.raises(ValueError):
        differential(s, 3)
    with pytest.raises(ValueError):
        s.coface_matrix(1, 2)
