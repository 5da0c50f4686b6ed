import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parallelise.gf2 import (
    DimensionError,
    Gf2Matrix,
    Gf2Vector,
    LinkingParity,
    gf2_rank,
    gf2_solve,
    solve_framing_system,
    zero_row_subsets,
)

from oracles import brute_force_rank, brute_force_solutions, symmetric_unit_diagonal, zero_sum_row_subsets


def M(rows):
    return Gf2Matrix.from_rows(rows)


def V(bits):
    return Gf2Vector.of(bits)


@pytest.mark.parametrize(
    "rows, b, expected",
    [
        ([[1]], [1], (1,)),
        ([[1, 0], [0, 1]], [1, 0], (1, 0)),
        ([[1, 1], [1, 1]], [1, 1], (1, 0)),
        ([[1, 1], [1, 1]], [1, 0], None),
    ],
)
def test_solve_examples(rows, b, expected):
    got = gf2_solve(M(rows), V(b))
    assert (None if got is None else got.entries) == expected


def test_frozen_examples_match_enumeration():
    assert brute_force_solutions([[1, 1], [1, 1]], 2, [1, 1]) == [(0, 1), (1, 0)]
    assert brute_force_solutions([[1, 1], [1, 1]], 2, [1, 0]) == []
    all_ones = [[1] * 3] * 3
    assert brute_force_solutions(all_ones, 3, [1, 1, 1]) == [
        (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)
    ]
    assert brute_force_solutions([[1, 1], [1, 1]], 2, [1, 1])[-1] == (1, 0)
    assert brute_force_rank([[1, 1], [1, 1]], 2) == 1


def test_solve_dimension_mismatch_is_an_error():
    with pytest.raises(DimensionError):
        gf2_solve(M([[1, 0], [0, 1]]), V([1]))


@pytest.mark.parametrize(
    "rows, ncols, rank",
    [([[0]], 1, 0), ([[1, 1], [1, 1]], 2, 1), ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3, 3), ([], 3, 0)],
)
def test_rank_examples(rows, ncols, rank):
    assert gf2_rank(Gf2Matrix.from_rows(rows, ncols=ncols)) == rank


def test_empty_system():
    assert gf2_solve(Gf2Matrix(0, 0, ()), V([])) == V([])
    assert gf2_solve(Gf2Matrix(0, 3, ()), V([])) == V([0, 0, 0])
    assert solve_framing_system(LinkingParity.from_rows([])) == V([])


@pytest.mark.parametrize(
    "lp, expected",
    [
        (LinkingParity.from_off_diagonal(3, []), (1, 1, 1)),
        (LinkingParity.from_off_diagonal(2, [(0, 1)]), (1, 0)),
        (LinkingParity.from_rows([[1, 1, 1]] * 3), (1, 0, 0)),
    ],
)
def test_framing_system_examples(lp, expected):
    assert solve_framing_system(lp).entries == expected


def test_solver_agrees_with_enumeration_on_small_shapes():
    # exhaustive up to 3x3 here; the 4x4 sweep lives in the acceptance suite
    for nrows in range(1, 4):
        for ncols in range(1, 4):
            for bits in itertools.product((0, 1), repeat=nrows * ncols):
                rows = [list(bits[r * ncols:(r + 1) * ncols]) for r in range(nrows)]
                m = Gf2Matrix.from_rows(rows, ncols=ncols)
                assert gf2_rank(m) == brute_force_rank(rows, ncols)
                for b in itertools.product((0, 1), repeat=nrows):
                    sols = brute_force_solutions(rows, ncols, b)
                    got = gf2_solve(m, V(b))
                    assert (got is None) == (not sols)
                    if got is not None:
                        assert got.entries in sols


matrices = st.integers(1, 8).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda c: st.tuples(
            st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r),
            st.lists(st.integers(0, 1), min_size=r, max_size=r),
        )
    )
)


@given(matrices)
def test_returned_solution_satisfies_system(case):
    rows, b = case
    m = M(rows)
    a = gf2_solve(m, V(b))
    if a is not None:
        assert m.matvec(a) == V(b)
        assert a == gf2_solve(m, V(b))


@given(matrices)
def test_rank_bounds(case):
    rows, _ = case
    m = M(rows)
    assert 0 <= gf2_rank(m) <= min(m.shape)
    assert gf2_rank(m) == gf2_rank(m.transpose())


@settings(max_examples=200)
@given(st.integers(0, 40), st.integers(0, 2**32 - 1))
def test_framing_system_always_solvable(n, seed):
    lp = LinkingParity.random(n, np.random.default_rng(seed))
    a = solve_framing_system(lp)
    assert lp.matrix.matvec(a) == Gf2Vector.ones(n)


@pytest.mark.parametrize("n", range(0, 5))
def test_zero_row_subsets_have_even_size(n):
    for m in symmetric_unit_diagonal(n):
        lp = LinkingParity(Gf2Matrix.from_array(m))
        reference = {sum(1 << i for i in s) for s in zero_sum_row_subsets(m)}
        assert set(zero_row_subsets(lp)) == reference
        assert all(bin(mask).count("1") % 2 == 0 for mask in reference)


def test_linking_parity_validation():
    with pytest.raises(ValueError):
        LinkingParity.from_rows([[0]])
    with pytest.raises(ValueError):
        LinkingParity.from_rows([[1, 1], [0, 1]])
    with pytest.raises(ValueError):
        LinkingParity(Gf2Matrix.from_rows([[1, 0]]))
    assert LinkingParity.from_linking_matrix([[0, -3], [-3, 0]]).to_rows() == [[1, 1], [1, 1]]


def test_matrix_rejects_non_bits():
    with pytest.raises(ValueError):
        M([[2]])
    with pytest.raises(ValueError):
        Gf2Vector((0, 3))


def test_vector_addition():
    assert V([1, 0, 1]) + V([1, 1, 0]) == V([0, 1, 1])
    with pytest.raises(DimensionError):
        V([1]) + V([1, 0])
