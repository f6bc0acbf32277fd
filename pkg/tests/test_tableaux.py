from math import factorial

import pytest
from hypothesis import given

from youngops import (
    Polynomial,
    SizeLimitError,
    YoungDiagram,
    YoungTableau,
    enumerate_syt,
    partitions,
)
from oracles import brute_force_syt, partition_strategy

# Number of standard tableaux with n boxes, n = 1..7.
SYT_TOTALS = [1, 2, 4, 10, 26, 76, 232]


def test_partitions_descending_lex():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(1)) == [(1,)]
    assert len(list(partitions(7))) == 15


def test_diagram_validation():
    with pytest.raises(ValueError):
        YoungDiagram([])
    with pytest.raises(ValueError):
        YoungDiagram([2, 3])
    with pytest.raises(ValueError):
        YoungDiagram([2, 0])


def test_conjugate():
    d = YoungDiagram([3, 2])
    assert d.columns == (2, 2, 1)
    assert d.conjugate().rows == (2, 2, 1)
    assert d.conjugate().conjugate() == d
    assert d.n == 5 and d.row_count == 2 and d.column_count == 3


@given(partition_strategy())
def test_conjugate_is_involutive(shape):
    d = YoungDiagram(shape)
    assert d.conjugate().conjugate() == d
    assert d.conjugate().n == d.n


def test_hook_product_known_values():
    assert YoungDiagram([3, 2]).hook_product() == 24
    assert YoungDiagram([1]).hook_product() == 1
    assert YoungDiagram([2, 1]).hook_product() == 3
    assert YoungDiagram([5]).hook_product() == 120
    assert YoungDiagram([2, 2]).hook_product() == 12
    assert YoungDiagram([1, 1, 1]).hook_product() == 6


def test_hook_lengths_cell_by_cell():
    d = YoungDiagram([3, 2])
    assert [[d.hook_length(j, k) for k in range(1, lam + 1)]
            for j, lam in enumerate(d.rows, start=1)] == [[4, 3, 1], [2, 1]]
    with pytest.raises(ValueError):
        d.hook_length(1, 4)


@given(partition_strategy())
def test_hook_product_divides_factorial(shape):
    d = YoungDiagram(shape)
    assert factorial(d.n) % d.hook_product() == 0
    assert d.syt_count() >= 1


def test_syt_counts_per_shape():
    assert YoungDiagram([3, 2]).syt_count() == 5
    assert YoungDiagram([2, 2, 1]).syt_count() == 5
    assert YoungDiagram([4]).syt_count() == 1
    assert YoungDiagram([1, 1, 1, 1]).syt_count() == 1


def test_enumeration_counts():
    for n, total in enumerate(SYT_TOTALS, start=1):
        tableaux = enumerate_syt(n)
        assert len(tableaux) == total
        assert len(set(tableaux)) == total
        assert all(t.is_standard() for t in tableaux)
        assert all(t.n == n for t in tableaux)


def test_enumeration_matches_brute_force():
    for n in range(1, 6):
        assert set(enumerate_syt(n)) == set(brute_force_syt(n))


def test_enumeration_order_fixture():
    assert [t.to_string() for t in enumerate_syt(2)] == ["12", "1/2"]
    assert [t.to_string() for t in enumerate_syt(3)] == \
        ["123", "12/3", "1/2/3", "13/2"]
    # words ascend; equal words resolved by wider shape first
    words = [t.row_word() for t in enumerate_syt(4)]
    assert words == sorted(words)


def test_enumeration_rejects_bad_n():
    with pytest.raises(ValueError):
        enumerate_syt(0)
    with pytest.raises(SizeLimitError):
        enumerate_syt(8)
    assert len(enumerate_syt(8, max_n=8)) == 764


def test_enumeration_env_override(monkeypatch):
    monkeypatch.setenv("HY_MAX_N", "3")
    with pytest.raises(SizeLimitError):
        enumerate_syt(4)
    monkeypatch.setenv("HY_MAX_N", "8")
    assert len(enumerate_syt(8)) == 764
    monkeypatch.setenv("HY_MAX_N", "junk")
    with pytest.raises(ValueError):
        enumerate_syt(2)


def test_regular_representation_count():
    # sum over shapes of (number of SYT)^2 = n!
    for n in range(1, 7):
        total = sum(YoungDiagram(shape).syt_count() ** 2
                    for shape in partitions(n))
        assert total == factorial(n)


def test_tableau_validation():
    with pytest.raises(ValueError):
        YoungTableau([[1, 2], [3, 4, 5]])  # not weakly decreasing
    with pytest.raises(ValueError):
        YoungTableau([[1, 2], [2]])  # not a bijection
    with pytest.raises(ValueError):
        YoungTableau([[1, 2], [4]])  # misses 3


def test_standardness_predicate():
    assert YoungTableau([[1, 2, 3], [4, 5]]).is_standard()
    assert not YoungTableau([[2, 1, 3], [4, 5]]).is_standard()  # row falls
    assert not YoungTableau([[1, 4, 5], [2, 3]]).is_standard()  # column falls
    assert YoungTableau([[1, 3, 5], [2, 4]]).is_standard()


def test_entries_and_lookup():
    t = YoungTableau.from_string("135/24")
    assert t.entry(1, 2) == 3
    assert t.cell_of(4) == (2, 2)
    assert t.entries[(2, 1)] == 2
    assert t.row_word() == (1, 3, 5, 2, 4)
    with pytest.raises(ValueError):
        t.cell_of(6)


def test_string_round_trip():
    for text in ["1", "12", "1/2", "123/45", "135/24", "12/34/5"]:
        assert YoungTableau.from_string(text).to_string() == text
    with pytest.raises(ValueError):
        YoungTableau.from_string("12//3")
    with pytest.raises(ValueError):
        YoungTableau.from_string("1a/2")


def test_dict_round_trip():
    t = YoungTableau.from_string("123/45")
    d = t.to_dict()
    assert d == {"shape": [3, 2], "rows": [[1, 2, 3], [4, 5]]}
    assert YoungTableau.from_dict(d) == t
    with pytest.raises(ValueError):
        YoungTableau.from_dict({"shape": [2, 2], "rows": [[1, 2, 3], [4, 5]]})


def test_parent_examples():
    par, p, q = YoungTableau.from_string("123/45").parent()
    assert (par.to_string(), p, q) == ("123/4", 2, 2)
    par, p, q = YoungTableau.from_string("1/2").parent()
    assert (par.to_string(), p, q) == ("1", 1, 2)
    par, p, q = YoungTableau.from_string("135/24").parent()
    assert (par.to_string(), p, q) == ("13/24", 3, 1)


def test_parent_requirements():
    with pytest.raises(ValueError):
        YoungTableau.from_string("1").parent()
    with pytest.raises(ValueError):
        YoungTableau([[2, 1], [3]]).parent()


def test_parent_partitions_syt():
    # every tableau of n has its parent in SYT_{n-1}; grouping by parent
    # hits every parent and covers SYT_n exactly once
    for n in range(2, 7):
        smaller = set(enumerate_syt(n - 1))
        groups = {}
        for t in enumerate_syt(n):
            par, p, q = t.parent()
            assert par in smaller
            # p, q are the removed cell's row and column lengths
            j0, k0 = t.cell_of(n)
            assert p == t.shape.rows[j0 - 1] == k0
            assert q == t.shape.columns[k0 - 1] == j0
            groups.setdefault(par, []).append(t)
        assert set(groups) == smaller
        assert sum(len(g) for g in groups.values()) == len(enumerate_syt(n))


def test_dimension_polynomial_examples():
    N = Polynomial.monomial(1)
    assert YoungDiagram([1]).dimension_polynomial() == N
    # single column of length N+1 vanishes at that N
    for height in range(2, 6):
        assert YoungDiagram([1] * height).dimension_polynomial()(height - 1) == 0
    d = YoungDiagram([2, 1])
    assert d.dimension_polynomial()(3) == 24
    assert d.dimension(3) == 8
    assert d.dimension_polynomial() == N * (N + 1) * (N - 1)


def test_dimension_polynomial_structure():
    for n in range(1, 7):
        for shape in partitions(n):
            f = YoungDiagram(shape).dimension_polynomial()
            assert f.degree == n
            assert f.coeffs[-1] == 1
            # at N = 1 only the single-row shape survives
            expected = factorial(n) if len(shape) == 1 else 0
            assert f(1) == expected


def test_dimension_values_sum_to_tensor_dimension():
    for n in range(1, 6):
        for N in (1, 2, 3):
            total = sum(t.shape.dimension(N) for t in enumerate_syt(n))
            assert total == N ** n
