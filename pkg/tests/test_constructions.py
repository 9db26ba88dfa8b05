import pytest

from projboard.board import board
from projboard.constructions import (
    HypothesisViolation,
    construct_canonical,
    construct_exceptional,
    construct_ha,
    construct_hb,
    construct_n1,
    construct_n2,
    construction_sweep,
    literal_hb,
)
from projboard.decoder import InvalidSpec, PathSpec
from projboard.walk import east_set, is_hamiltonian


def _ok(w, start, end):
    assert is_hamiltonian(w)
    assert (w.start, w.end) == (start, end)
    assert east_set(w) == frozenset()


def test_ha_even():
    w = construct_ha(board(4, 3), 1)
    assert w.moves == "NNNNNENNNNN"
    _ok(w, (0, 2), (1, 0))


def test_ha_odd():
    assert construct_ha(board(3, 3), 1).moves == "NNNNNENN"
    w = construct_ha(board(5, 3), 2)
    assert w.moves == "NNNNNE" * 2 + "NN"
    _ok(w, (4, 0), (2, 0))


def test_ha_hypotheses():
    with pytest.raises(HypothesisViolation):
        construct_ha(board(3, 4), 1)
    with pytest.raises(HypothesisViolation):
        construct_ha(board(6, 3), 0)  # a <= m-2 <= b fails


def test_hb():
    _ok(construct_hb(board(4, 3), 1, 3), (0, 2), (2, 1))
    log = []
    _ok(construct_hb(board(5, 3), 2, 3, log), (4, 0), (2, 1))
    assert log and log[0].source == "decoder"
    assert len(literal_hb(board(5, 3), 2, 3)) != 14
    with pytest.raises(HypothesisViolation):
        construct_hb(board(3, 3), 1, 1)


def test_exceptional():
    _ok(construct_exceptional(5), (3, 0), (1, 1))
    _ok(construct_exceptional(6), (4, 0), (2, 1))
    with pytest.raises(HypothesisViolation):
        construct_exceptional(4)


def test_n1():
    assert construct_n1(5, 3).end == (2, 0)
    assert construct_n1(5, 0).end == (4, 0)
    w = construct_n1(1, 0)
    assert w.moves == "" and w.squares() == [(0, 0)]


def test_n2():
    w = construct_n2(3, "A2", 1, 0)
    assert (w.start, w.end) == ((1, 0), (0, 0))
    w = construct_n2(4, "B2")
    assert (w.start, w.end) == ((0, 1), (0, 0))
    w = construct_n2(5, "D2")
    assert (w.start, w.end) == ((4, 1), (4, 0))
    assert is_hamiltonian(w)
    with pytest.raises(HypothesisViolation):
        construct_n2(5, "Z2")


def test_canonical(ha33):
    b = board(3, 3)
    assert construct_canonical(b, PathSpec((0, 2), (1, 0))) == ha33
    with pytest.raises(InvalidSpec):
        construct_canonical(b, PathSpec((0, 2), (2, 2)))
    assert construct_canonical(b, PathSpec((0, 2), (1, 0), frozenset({0}))) is not None
    # (0,1) shares the terminal diagonal but no path from (0,2) ends there
    assert construct_canonical(b, PathSpec((0, 2), (0, 1), frozenset({0}))) is None


def test_sweep_small():
    res = construction_sweep(7)
    assert res.checked > 0
    assert res.failures == []
    assert all(e.literal_attempt == "pass" for e in res.log if e.kind == "Ha")
