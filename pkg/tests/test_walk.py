import pytest
from hypothesis import given, strategies as st

from projboard.board import BoardError, board
from projboard.walk import (
    Walk,
    WalkError,
    blocks,
    drop_last,
    east_set,
    invert,
    is_hamiltonian,
    power,
    realize,
    seq,
    transpose,
    travel_map,
)


def test_sequence_builders():
    assert power("NE", 0) == ""
    assert power("N", 3) == "NNN"
    assert blocks(lambda i: power("N", i) + "E", 1, 3) == "NENNENNNE"
    assert blocks(lambda i: "E", 2, 1) == ""
    assert drop_last("NNE") == "NN"
    with pytest.raises(WalkError):
        power("N", -1)
    with pytest.raises(WalkError):
        seq("NX")


def test_realize():
    assert realize(Walk(board(3, 3), (0, 2), "N")) == [(0, 2), (2, 0)]
    assert realize(Walk(board(4, 3), (0, 0))) == [(0, 0)]


def test_hamiltonian(ha33):
    sq = realize(ha33)
    assert len(set(sq)) == 9 and sq[-1] == (1, 0)
    assert is_hamiltonian(ha33)
    assert not is_hamiltonian(Walk(board(3, 3), (0, 0), "N" * 8))
    assert not is_hamiltonian(Walk(board(3, 3), (0, 2), "NNNNNEN"))


def test_invert(ha33):
    inv = invert(ha33)
    assert (inv.start, inv.end) == ((1, 2), (2, 0))
    assert is_hamiltonian(inv)
    assert inv.moves == ha33.moves[::-1]
    assert invert(inv) == ha33


def test_transpose(ha33):
    t = transpose(ha33)
    assert t == Walk(board(3, 3), (2, 0), "EEEEENEE")
    assert transpose(t) == ha33
    w = Walk(board(4, 3), (0, 2), "NNNNNENNNNN")
    with pytest.raises(BoardError):
        transpose(w)


def test_travel_map(ha33):
    tm = travel_map(ha33)
    assert tm[(0, 1)] == "E" and tm[(0, 0)] == "N"
    assert (1, 0) not in tm
    assert len(tm) == 8


def test_east_set(ha33):
    assert east_set(ha33) == frozenset()


def test_east_set_rejects_mixed():
    # hamiltonian paths are never mixed, so only the non-hamiltonian guard is reachable
    with pytest.raises(WalkError):
        east_set(Walk(board(3, 3), (0, 0), "N" * 8))


def test_json_roundtrip(ha33):
    text = ha33.to_json()
    assert text == '{"m":3,"n":3,"start":[0,2],"moves":"NNNNNENN"}'
    assert Walk.from_json(text) == ha33
    with pytest.raises(WalkError):
        Walk.from_json('{"m":3}')


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_realize_length(m, n, data):
    b = board(m, n)
    moves = data.draw(st.text(alphabet="EN", max_size=20))
    s = (data.draw(st.integers(0, m - 1)), data.draw(st.integers(0, n - 1)))
    w = Walk(b, s, moves)
    assert len(realize(w)) == len(moves) + 1
    assert realize(w)[-1] == w.end
