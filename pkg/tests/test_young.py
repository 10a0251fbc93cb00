from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from homflypt.coeff import S, V, ZERO, s_diff
from homflypt.young import (
    Cell, StandardTableau, YoungDiagram, c_scalar, content_sum, hook_length_count,
    parse_partition, partitions, restrict, standard_tableaux,
)

EMPTY = YoungDiagram(())
small_partitions = st.integers(0, 6).flatmap(lambda n: st.sampled_from(partitions(n)))


def brute_force_tableaux(lam: YoungDiagram) -> int:
    cells = lam.cells()
    count = 0
    for labels in permutations(range(1, lam.size + 1)):
        at = dict(zip(((c.row, c.col) for c in cells), labels))
        ok = all(at[(i, j)] < at[(i, j + 1)] for (i, j) in at if (i, j + 1) in at)
        ok = ok and all(at[(i, j)] < at[(i + 1, j)] for (i, j) in at if (i + 1, j) in at)
        count += ok
    return count


def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert [p.parts for p in partitions(3)] == [(3,), (2, 1), (1, 1, 1)]


def test_content_of_cells():
    assert Cell(1, 3).content == 2
    assert Cell(3, 1).content == -2
    lam = YoungDiagram((2, 1))
    assert content_sum(lam) == S ** 2 + 1 + S ** -2


@pytest.mark.parametrize("n", range(1, 7))
def test_tableau_counts_against_brute_force(n):
    total = 0
    for lam in partitions(n):
        k = len(standard_tableaux(lam))
        assert k == hook_length_count(lam)
        if n <= 5:
            assert k == brute_force_tableaux(lam)
        total += k * k
    assert total == factorial(n)


def test_tableaux_restrict_to_tableaux():
    for t in standard_tableaux(YoungDiagram((3, 2))):
        r = restrict(t)
        assert r.size == 4
        assert r in standard_tableaux(r.shape)


def test_invalid_tableaux_rejected():
    with pytest.raises(ValueError):
        StandardTableau(((2, 1),))
    with pytest.raises(ValueError):
        StandardTableau(((1, 2), (1,)))
    with pytest.raises(ValueError):
        StandardTableau(((1, 3), (4,), (2,)))


def test_tableau_parse_round_trip():
    t = StandardTableau(((1, 3), (2,)))
    assert StandardTableau.parse(str(t)) == t
    assert t.cell_of(3) == Cell(1, 2)


def test_invalid_partition_rejected():
    with pytest.raises(ValueError):
        YoungDiagram((1, 2))
    with pytest.raises(ValueError):
        parse_partition("3")


def test_c_scalar_small_values():
    box = YoungDiagram((1,))
    q = s_diff()
    assert c_scalar(box, EMPTY) == V ** -1 * q
    assert c_scalar(EMPTY, box) == -V * q
    assert c_scalar(box, box) == (V ** -1 - V) * q


@settings(max_examples=40, deadline=None)
@given(small_partitions)
def test_content_transpose(lam):
    assert content_sum(lam.conjugate()) == content_sum(lam, -1)
    assert lam.conjugate().conjugate() == lam


@settings(max_examples=40, deadline=None)
@given(small_partitions, small_partitions)
def test_c_symmetry(lam, mu):
    # inverting v and s swaps the roles of lam and mu
    assert c_scalar(lam, mu).invert_vars("vs") == c_scalar(mu, lam)


@pytest.mark.parametrize("n", range(1, 5))
def test_c_nonzero_for_equal_sizes(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert c_scalar(lam, mu) != ZERO
