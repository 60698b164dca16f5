import threading
from fractions import Fraction

import pytest
from django.core.exceptions import ValidationError

from cores.counting import (
    CountTable, anderson, catalan, catalan_central, count_table, exact_div, f, motzkin,
    oracle_avg_size_consecutive, oracle_max_size, oracle_self_conjugate, r_class_formula, sequence_lines,
)
from cores.exceptions import TranscriptionError


@pytest.mark.parametrize("t, p, expected", [(3, 1, 5), (4, 2, 9), (5, 3, 17), (0, 4, 1), (-1, 2, 0), (-7, 1, 0)])
def test_recurrence(t, p, expected):
    assert f(t, p) == expected


@pytest.mark.parametrize("t, expected", [(3, 5), (0, 1), (10, 16796)])
def test_catalan(t, expected):
    assert catalan(t) == expected


@pytest.mark.parametrize("t, expected", [(4, 9), (0, 1), (6, 51)])
def test_motzkin(t, expected):
    assert motzkin(t) == expected


@pytest.mark.parametrize("t", range(16))
def test_recurrence_matches_closed_forms(t):
    assert f(t, 1) == catalan(t) == catalan_central(t)
    assert f(t, 2) == motzkin(t)


@pytest.mark.parametrize("t", range(1, 13))
def test_anderson_on_consecutive_pairs(t):
    assert anderson(t, t + 1) == f(t, 1)


def test_anderson():
    assert anderson(3, 4) == 5
    assert anderson(3, 7) == 12
    with pytest.raises(ValidationError):
        anderson(2, 4)


def test_oracles():
    assert oracle_max_size(3, 4) == 5
    assert oracle_max_size(4, 5) == 15
    assert oracle_avg_size_consecutive(3) == 2
    assert oracle_avg_size_consecutive(2) == Fraction(1, 2)
    assert oracle_self_conjugate(3, 4) == 3
    with pytest.raises(ValidationError):
        oracle_max_size(4, 6)
    with pytest.raises(ValidationError):
        oracle_self_conjugate(6, 9)


def test_exact_div():
    assert exact_div(35, 7) == 5
    with pytest.raises(TranscriptionError):
        exact_div(36, 7)


def test_r_class_formula():
    assert r_class_formula(3, 1) == (2, 1, 2)
    assert r_class_formula(3, 2) == (2, 1, 1)
    assert r_class_formula(0, 2) == ()


@pytest.mark.parametrize("t, p", [(t, p) for t in range(1, 20) for p in range(1, 5)])
def test_r_classes_sum_to_count(t, p):
    assert sum(r_class_formula(t, p)) == f(t, p)


def test_sequence_lines():
    assert sequence_lines(2, 0, 4) == ["0\t1", "1\t1", "2\t2", "3\t4", "4\t9"]


def test_count_table_is_shared_per_p():
    assert count_table(3) is count_table(3)
    assert count_table(3) is not count_table(2)


def test_count_table_rejects_p():
    with pytest.raises(ValidationError):
        CountTable(0)


def test_count_table_concurrent_extension():
    table = CountTable(2)
    results = []

    def read(t):
        results.append((t, table[t]))

    threads = [threading.Thread(target=read, args=(t,)) for t in range(40, 0, -3)]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()
    assert all(value == motzkin(t) for t, value in results)
