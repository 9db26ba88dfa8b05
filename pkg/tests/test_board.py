import pytest
from hypothesis import given, strategies as st

from projboard.board import BoardError, board


@pytest.mark.parametrize(
    "m,n,s,want",
    [(4, 3, (1, 2), (2, 2)), (4, 3, (3, 1), (0, 1)), (3, 3, (2, 0), (0, 2))],
)
def test_east(m, n, s, want):
    assert board(m, n).east(s) == want


@pytest.mark.parametrize(
    "m,n,s,want",
    [(4, 3, (2, 1), (2, 2)), (4, 3, (2, 2), (1, 0)), (3, 3, (0, 2), (2, 0))],
)
def test_north(m, n, s, want):
    assert board(m, n).north(s) == want


def test_inverse_steps():
    assert board(4, 3).east_inv((0, 1)) == (3, 1)
    assert board(3, 3).east_inv((0, 2)) == (2, 0)
    assert board(4, 3).north_inv((1, 0)) == (2, 2)
    assert board(4, 3).step_inv((1, 0), "N") == (2, 2)


def test_inverse_square():
    assert board(4, 3).inverse((0, 0)) == (3, 2)
    assert board(3, 3).inverse((1, 1)) == (1, 1)
    assert board(4, 3).inverse(board(4, 3).inverse((2, 1))) == (2, 1)


def test_transpose_square():
    b = board(3, 3)
    assert b.transpose((1, 2)) == (2, 1)
    assert b.transpose((0, 0)) == (0, 0)
    with pytest.raises(BoardError):
        board(4, 3).transpose((0, 0))


def test_subdiagonal():
    b = board(4, 3)
    assert set(b.subdiagonal(2)) == {(2, 0), (1, 1), (0, 2)}
    assert set(b.subdiagonal(0)) == {(0, 0)}
    assert set(b.subdiagonal(5)) == {(3, 2)}
    with pytest.raises(BoardError):
        b.subdiagonal(6)


def test_diagonal_of():
    b = board(4, 3)
    d = b.diagonal_of((1, 0))
    assert (d.lo, d.hi) == (1, 3) and not d.singleton
    assert b.diagonal_of((3, 2)).singleton
    d = b.diagonal_of((1, 1))
    assert d.lo == d.hi == 2


def test_rowful():
    assert board(4, 3).is_rowful(board(4, 3).diagonal(2))
    assert not board(4, 3).is_rowful(board(4, 3).diagonal(1))
    assert board(6, 3).is_rowful(board(6, 3).diagonal(2))


def test_classify():
    b = board(5, 3)
    assert b.classify(b.diagonal(1), b.diagonal(2)) == "outer"
    b = board(6, 3)
    assert b.classify(b.diagonal(2), b.diagonal(1)) == "inner"
    assert b.classify(b.diagonal(1), b.diagonal(1)) == "terminal"


def test_tau_plus():
    assert board(4, 3).tau_plus(3) == (3, 0)
    assert board(3, 3).tau_plus(2) == (2, 0)
    assert board(5, 3).tau_plus(4) == (4, 0)


def test_u_index():
    b = board(4, 3)
    d = b.diagonal(1)
    assert b.u_index(d, (0, 1), (3, 0)) == 1
    assert b.u_index(d, (0, 1), (0, 1)) == len(d) == 5


def test_half_constants():
    b = board(7, 4)
    assert (b.mf_minus, b.mf, b.mf_plus) == (3, 3, 4)
    assert (b.nf_minus, b.nf, b.nf_plus) == (1, 2, 2)


def test_bad_dimensions():
    with pytest.raises(BoardError):
        board(0, 3)


dims = st.tuples(st.integers(1, 9), st.integers(1, 9))


@given(dims, st.data())
def test_steps_invert(mn, data):
    b = board(*mn)
    s = (data.draw(st.integers(0, b.m - 1)), data.draw(st.integers(0, b.n - 1)))
    assert b.east_inv(b.east(s)) == s
    assert b.north_inv(b.north(s)) == s
    assert b.inverse(b.inverse(s)) == s
    # the half-turn commutes with both moves, reversing them
    assert b.inverse(b.east(s)) == b.east_inv(b.inverse(s))


@given(dims)
def test_diagonals_partition(mn):
    b = board(*mn)
    seen = [s for d in b.diagonals for s in d.members]
    assert sorted(seen) == sorted(b.squares())
    for d in b.diagonals:
        if not d.singleton:
            assert set(d.members) == set(b.subdiagonal(d.lo)) | set(b.subdiagonal(d.hi))
            assert d.lo + d.hi == b.m + b.n - 3


@given(dims)
def test_u_index_full_orbit(mn):
    b = board(*mn)
    for d in b.diagonals:
        if d.singleton:
            continue
        tau = d.members[0]
        assert sorted(b.u_index(d, tau, s) for s in d.members) == list(range(1, len(d) + 1))
