from fractions import Fraction as F

import pytest

from polyseq import (
    HSpec,
    LinTensor,
    PolyseqError,
    SpecTooShortError,
    StructureError,
    ThreeTermRecurrence,
    TruncMatrix,
    WindowError,
    ZeroAlphaError,
    build_P_recurrence,
    lin_tensor_direct,
    op_lin_recurrence,
    op_sequence,
    orthogonality_table,
    partial_orthogonality_check,
    realize_H,
    squared_norms,
    support_check,
)
from tests.conftest import rand_fraction, rand_nonzero_fraction


def hermite_rec(length=12):
    return ThreeTermRecurrence(
        beta=tuple(0 for _ in range(length)),
        alpha=tuple(n for n in range(1, length)),
    )


def test_recurrence_coerces_to_fractions():
    rec = ThreeTermRecurrence(beta=(1, 2), alpha=("1/2",))
    assert rec.alpha_at(1) == F(1, 2)
    assert isinstance(rec.beta[0], F)


def test_require_lengths():
    rec = ThreeTermRecurrence(beta=(1, 2), alpha=(1,))
    with pytest.raises(SpecTooShortError):
        rec.require(3, 1)
    with pytest.raises(SpecTooShortError):
        rec.require(2, 2)


def test_zero_alpha_rejected_on_use():
    rec = ThreeTermRecurrence(beta=(0, 0, 0), alpha=(1, 0))
    rec.require(3, 1)
    with pytest.raises(ZeroAlphaError) as err:
        rec.require(3, 2)
    assert err.value.index == 2


def test_op_sequence_is_tridiagonal_pair():
    pair = op_sequence(hermite_rec(), 8)
    assert pair.polys[3].coeffs == (0, -3, 0, 1)
    assert pair.H.entry(2, 1) == 2
    assert pair.H.entry(2, 2) == 0


# -- four-term recurrence route ---------------------------------------------------

def test_four_term_matches_direct_hermite():
    rec = hermite_rec()
    pair = op_sequence(rec, 10)
    direct = lin_tensor_direct(pair, 4)
    for k in range(9):
        grid = op_lin_recurrence(rec, 4, k)
        for n in range(5):
            for m in range(5):
                assert grid[n][m] == direct.value(n, m, k)


def test_four_term_matches_direct_random(rng):
    for _ in range(4):
        length = 10
        rec = ThreeTermRecurrence(
            beta=tuple(rand_fraction(rng) for _ in range(length)),
            alpha=tuple(rand_nonzero_fraction(rng) for _ in range(length - 1)),
        )
        pair = op_sequence(rec, 10)
        direct = lin_tensor_direct(pair, 4)
        for k in range(9):
            grid = op_lin_recurrence(rec, 4, k)
            for n in range(5):
                for m in range(5):
                    assert grid[n][m] == direct.value(n, m, k)


def test_four_term_k_range():
    with pytest.raises(PolyseqError):
        op_lin_recurrence(hermite_rec(), 2, 5)


def test_k0_slice_is_norms_diagonal():
    rec = ThreeTermRecurrence(beta=(0, 0, 0, 0, 0, 0), alpha=(2, 3, 4, 5, 6))
    grid = op_lin_recurrence(rec, 2, 0)
    assert [grid[i][i] for i in range(3)] == [1, 2, 6]
    for n in range(3):
        for m in range(3):
            if n != m:
                assert grid[n][m] == 0


def test_squared_norms_products():
    rec = ThreeTermRecurrence(beta=(0,) * 6, alpha=(2, 3, 4, 5, 6))
    assert squared_norms(rec, 4) == [1, 2, 6, 24, 120]
    assert squared_norms(hermite_rec(), 4) == [1, 1, 2, 6, 24]


def test_squared_norms_need_enough_alphas():
    rec = ThreeTermRecurrence(beta=(0, 0), alpha=(2,))
    with pytest.raises(SpecTooShortError):
        squared_norms(rec, 3)


# -- orthogonality via moments -------------------------------------------------------

def test_orthogonality_table_hermite(hermite_pair):
    table = orthogonality_table(hermite_pair, 4)
    assert [table[i][i] for i in range(5)] == [1, 1, 2, 6, 24]
    for n in range(5):
        for m in range(5):
            if n != m:
                assert table[n][m] == 0


def test_orthogonality_table_random_tridiagonal(rng):
    length = 12
    rec = ThreeTermRecurrence(
        beta=tuple(rand_fraction(rng) for _ in range(length)),
        alpha=tuple(rand_nonzero_fraction(rng) for _ in range(length - 1)),
    )
    pair = op_sequence(rec, 12)
    table = orthogonality_table(pair, 5)
    assert [table[i][i] for i in range(6)] == squared_norms(rec, 5)
    for n in range(6):
        for m in range(6):
            if n != m:
                assert table[n][m] == 0


def test_orthogonality_table_window_guard(hermite_pair):
    with pytest.raises(WindowError):
        orthogonality_table(hermite_pair, 5)


# -- support bound ---------------------------------------------------------------------

def test_support_check_tridiagonal(hermite_pair):
    tensor = lin_tensor_direct(hermite_pair, 4)
    ok, where = support_check(tensor)
    assert ok and where is None


def test_support_check_flags_violations():
    # a violation is a nonzero d(n,m,k) with k < |n-m|
    good = (
        ((F(1), F(0)), (F(0), F(1))),
        ((F(0), F(1)), (F(1), F(0))),
        ((F(0), F(0)), (F(0), F(5))),
    )
    ok, _ = support_check(LinTensor(n_max=1, k_max=2, slices=good))
    assert ok
    bad = (
        ((F(1), F(7)), (F(0), F(1))),  # d(0,1,0) = 7 but 0 < |0-1|
        ((F(0), F(1)), (F(1), F(0))),
        ((F(0), F(0)), (F(0), F(1))),
    )
    ok, where = support_check(LinTensor(n_max=1, k_max=2, slices=bad))
    assert not ok
    assert where == (0, 1, 0)


# -- banded partial orthogonality -------------------------------------------------------

def banded_matrix(rng, size, band):
    """Monic Hessenberg with nonzero entries only on diagonals -1..band-2."""
    spread = band - 2
    rows = []
    for i in range(size):
        row = [F(0)] * size
        for j in range(max(0, i - spread), i + 1):
            row[j] = rand_fraction(rng, -3, 3)
        if i < size - 1:
            row[i + 1] = F(1)
        rows.append(tuple(row))
    return TruncMatrix(rows=tuple(rows), index=-1)


def test_partial_orthogonality_four_banded(rng):
    for _ in range(3):
        h = banded_matrix(rng, 16, 4)
        ok, where = partial_orthogonality_check(h, 4, 6)
        assert ok, where


def test_partial_orthogonality_pentadiagonal(rng):
    for _ in range(3):
        h = banded_matrix(rng, 16, 5)
        ok, where = partial_orthogonality_check(h, 5, 6)
        assert ok, where


def test_partial_orthogonality_band_covers_tridiagonal():
    # a tridiagonal matrix is 3-banded: every tau(p_n p_m) with m > n vanishes
    spec = HSpec.tridiagonal(beta=(0,) * 16, alpha=(1,) * 15)
    h = realize_H(spec, 16)
    ok, where = partial_orthogonality_check(h, 3, 6)
    assert ok, where


def test_partial_orthogonality_rejects_wider_matrix(rng):
    h = banded_matrix(rng, 16, 5)
    if all(h.rows[i][i - 2] == 0 for i in range(2, 16)):
        pytest.skip("random draw happened to be narrower than 5-banded")
    with pytest.raises(StructureError):
        partial_orthogonality_check(h, 4, 5)


def test_partial_orthogonality_window_guard(rng):
    h = banded_matrix(rng, 6, 4)
    with pytest.raises(WindowError):
        partial_orthogonality_check(h, 4, 6)


def test_partial_orthogonality_band_floor():
    spec = HSpec.tridiagonal(beta=(0,) * 8, alpha=(1,) * 7)
    with pytest.raises(PolyseqError):
        partial_orthogonality_check(realize_H(spec, 8), 2, 2)
