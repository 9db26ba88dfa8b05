import pytest

from projboard.board import BoardError, board
from projboard.characterization import (
    admissible_pairs,
    clause_table,
    endpoint_pairs,
    from_0q,
    from_p0_large,
    from_p0_small,
    initial_square,
    initial_squares,
    n1_pairs,
    n2_pairs,
    tau_plus_e_form,
    terminal_square,
    terminal_squares,
)
from projboard.decoder import enumerate_dfs


def test_initial_examples():
    b = board(3, 3)
    assert not initial_square(b, (0, 0))
    r = initial_square(b, (1, 1))
    assert r and set(r.clauses) == {"init(4)", "init(6)"}
    assert not initial_square(b, (2, 2))


def test_terminal_examples():
    b = board(3, 3)
    assert not terminal_square(b, (0, 0))
    assert "term(1)" in terminal_square(b, (2, 0)).clauses


def test_duality():
    for m in range(3, 13):
        for n in range(3, m + 1):
            b = board(m, n)
            for s in b.squares():
                assert bool(terminal_square(b, s)) == bool(initial_square(b, b.inverse(s)))


def test_tau_plus_e_form():
    assert tau_plus_e_form(board(4, 3)) == {(0, 1), (0, 2), (3, 0)}
    assert tau_plus_e_form(board(3, 3)) == {(0, 1), (0, 2)}
    for m in range(3, 11):
        for n in range(3, m + 1):
            b = board(m, n)
            direct = {b.east(b.tau_plus(d.hi)) for d in b.diagonals if not d.singleton}
            assert direct == tau_plus_e_form(b)


def test_from_0q():
    b = board(3, 3)
    assert from_0q(b, 2) == {(1, 0), (1, 1)}
    assert from_0q(b, 1) == {(1, 2)}


def _dfs_terminals_from(b, s):
    return {t for i, t in enumerate_dfs(b).pairs if i == s}


def test_from_p0_small():
    # x + y = p - 1 with y = 1 gives (0, 1); the DFS oracle agrees
    assert from_p0_small(board(4, 3), 2) == {(0, 1), (2, 1)} == _dfs_terminals_from(board(4, 3), (2, 0))
    assert from_p0_small(board(5, 3), 1) == {(4, 1)}
    with pytest.raises(BoardError):
        from_p0_small(board(5, 3), 0)


def test_from_p0_large():
    assert from_p0_large(board(4, 3), 3) == {(1, 1)}
    assert from_p0_large(board(5, 3), 4) == {(2, 0), (2, 1)} == _dfs_terminals_from(board(5, 3), (4, 0))
    with pytest.raises(BoardError):
        from_p0_large(board(5, 3), 3)
    with pytest.raises(BoardError):
        from_p0_large(board(4, 4), 3)


@pytest.mark.parametrize("m,n", [(3, 3), (4, 3), (5, 4)])
def test_pairs_against_dfs(m, n):
    b = board(m, n)
    rep = enumerate_dfs(b)
    pairs = admissible_pairs(b)
    assert pairs == rep.pairs
    assert {p[0] for p in pairs} == initial_squares(b)
    assert {p[1] for p in pairs} == terminal_squares(b)


@pytest.mark.parametrize("m", [2, 3, 5, 6])
def test_n2_against_dfs(m):
    assert n2_pairs(m) == enumerate_dfs(board(m, 2)).pairs


def test_n1():
    assert {((4, 0), (3, 0)), ((0, 0), (4, 0))} <= n1_pairs(5)
    assert n1_pairs(1) == {((0, 0), (0, 0))}
    assert all(len(n1_pairs(m)) == m for m in range(1, 10))


@pytest.mark.parametrize("m,n", [(3, 4), (2, 5), (1, 4), (4, 2)])
def test_endpoint_pairs_any_shape(m, n):
    assert endpoint_pairs(board(m, n)) == enumerate_dfs(board(m, n)).pairs


def test_thin_boards_rejected():
    with pytest.raises(BoardError):
        initial_square(board(5, 2), (0, 0))


def test_clause_table():
    rows = clause_table(board(3, 3), "init")
    assert len(rows) == 7
    assert rows[0].to_dict()["clauses"]
