"""
Counting (t, t+1, ..., t+p)-core partitions.

f_t = 0 for t < 0, f_0 = 1 and, for t >= 1,

    f_t = sum_{i=1}^{p-1} f_{t-i} + sum_{j=0}^{t-p} f_j f_{t-p-j}.

p = 1 gives the Catalan numbers and p = 2 the Motzkin numbers. The other
closed forms in this module are reference values for pairs (t_1, t_2)
used by the self-test.
"""
import logging
import threading
from fractions import Fraction
from math import comb, gcd

from django.core.exceptions import ValidationError

from .exceptions import TranscriptionError

logger = logging.getLogger(__name__)


def exact_div(n, d):
    """n / d, which must leave no remainder."""
    q = n // d
    if q * d != n:
        raise TranscriptionError(f"{n} is not divisible by {d}")
    return q


class CountTable:
    """Memoised f_t for one p. Reads are lock-free; extension holds the lock."""

    def __init__(self, p):
        if p < 1:
            raise ValidationError("p must be at least 1, got %(p)s.", code="p_range", params={"p": p})
        self.p = p
        self._values = [1]
        self._lock = threading.Lock()

    def __getitem__(self, t):
        if t < 0:
            return 0
        values = self._values
        if t < len(values):
            return values[t]
        with self._lock:
            self._extend(t)
        return self._values[t]

    def _extend(self, t):
        values = list(self._values)
        p = self.p
        for n in range(len(values), t + 1):
            # empty first sum when p = 1
            linear = sum(values[n - i] for i in range(1, p) if n - i >= 0)
            quadratic = sum(values[j] * values[n - p - j] for j in range(0, n - p + 1))
            values.append(linear + quadratic)
        self._values = values

    def values(self, t_max):
        self[t_max]
        return tuple(self._values[:t_max + 1])


_tables = {}
_tables_lock = threading.Lock()


def count_table(p):
    table = _tables.get(p)
    if table is None:
        with _tables_lock:
            table = _tables.setdefault(p, CountTable(p))
    return table


def f(t, p):
    return count_table(p)[t]


def r_class_formula(t, p):
    """
    Predicted r_{t,1}, ..., r_{t,t}: f_{t-j} for j <= p-1 and f_{j-p} f_{t-j} for j >= p.
    """
    table = count_table(p)
    return tuple(
        table[t - j] if j <= p - 1 else table[j - p] * table[t - j]
        for j in range(1, t + 1)
    )


def sequence_lines(p, t_from, t_to):
    table = count_table(p)
    return [f"{t}\t{table[t]}" for t in range(t_from, t_to + 1)]


def catalan(t):
    return exact_div(comb(2 * t + 1, t), 2 * t + 1)


def catalan_central(t):
    return exact_div(comb(2 * t, t), t + 1)


def motzkin(t):
    # each term is C(t, 2k) times the k-th Catalan number
    return sum(exact_div(comb(t, 2 * k) * comb(2 * k, k), k + 1) for k in range(t // 2 + 1))


def _require_coprime(t1, t2):
    if t1 < 1 or t2 < 1:
        raise ValidationError("Arguments must be positive, got %(t1)s, %(t2)s.", code="non_positive",
                              params={"t1": t1, "t2": t2})
    if gcd(t1, t2) != 1:
        raise ValidationError("%(t1)s and %(t2)s are not coprime.", code="not_coprime",
                              params={"t1": t1, "t2": t2})


def anderson(t1, t2):
    """Number of (t1, t2)-cores for coprime t1, t2."""
    _require_coprime(t1, t2)
    return exact_div(comb(t1 + t2, t1), t1 + t2)


def oracle_max_size(t1, t2):
    """Largest size of a (t1, t2)-core."""
    _require_coprime(t1, t2)
    return exact_div((t1 * t1 - 1) * (t2 * t2 - 1), 24)


def oracle_avg_size_consecutive(t):
    """Average size of a (t, t+1)-core."""
    if t < 1:
        raise ValidationError("t must be positive, got %(t)s.", code="non_positive", params={"t": t})
    return Fraction(comb(t + 1, 3), 2)


def oracle_self_conjugate(t1, t2):
    """Number of self-conjugate (t1, t2)-cores."""
    _require_coprime(t1, t2)
    return comb(t1 // 2 + t2 // 2, t1 // 2)
