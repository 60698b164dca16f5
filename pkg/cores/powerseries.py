"""
Truncated formal power series with exact rational coefficients.

Used to expand

    F(x) = (P(x) - sqrt(P(x)^2 - 4 x^p)) / (2 x^p),   P(x) = 1 - x - ... - x^(p-1),

and to check F - 1 = (x + ... + x^(p-1)) F + x^p F^2 coefficientwise.
"""
from dataclasses import dataclass
from fractions import Fraction

from django.core.exceptions import ValidationError

from .counting import count_table
from .exceptions import TranscriptionError


@dataclass(frozen=True)
class Series:
    """Coefficients c_0, ..., c_N; products and sums are truncated at the smaller order."""

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValidationError("A series needs at least the constant term.", code="empty")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @property
    def order(self):
        return len(self.coefficients) - 1

    def __getitem__(self, n):
        return self.coefficients[n]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other):
        n = min(self.order, other.order)
        return Series(tuple(a + b for a, b in zip(self.coefficients[:n + 1], other.coefficients)))

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        return Series(tuple(sum(a[k] * b[m - k] for k in range(m + 1)) for m in range(n + 1)))

    __rmul__ = __mul__

    def scale(self, factor):
        return Series(tuple(c * factor for c in self.coefficients))

    def truncate(self, n):
        return Series(self.coefficients[:n + 1])

    def shift(self, k):
        """Multiply by x^k, keeping the order."""
        return Series(((0,) * k + self.coefficients)[:self.order + 1])

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coefficients)

    def as_strings(self):
        return [str(c) for c in self.coefficients]

    def __str__(self):
        return ", ".join(self.as_strings())


def polynomial(coefficients, n):
    """The polynomial with the given coefficients as a series of order n."""
    padded = tuple(coefficients)[:n + 1]
    return Series(padded + (0,) * (n + 1 - len(padded)))


def _one_minus_partial_geometric(p, n):
    # 1 - x - ... - x^(p-1)
    return polynomial((1,) + (-1,) * (p - 1), n)


def radicand(p, n):
    base = _one_minus_partial_geometric(p, n)
    return base * base - polynomial((0,) * p + (4,), n)


def series_from_recurrence(p, n):
    return Series(count_table(p).values(n))


def check_functional_equation(s, p):
    if s.order < p:
        raise ValidationError("Series order %(order)s is below p = %(p)s.", code="order_too_small",
                              params={"order": s.order, "p": p})
    lhs = s - polynomial((1,), s.order)
    rhs = (s * s).shift(p)
    for i in range(1, p):
        rhs = rhs + s.shift(i)
    # coefficient n of the right side only uses c_0..c_{n-1}
    return lhs == rhs


def sqrt_series(q):
    """The series R with R_0 = 1 and R^2 = q through the order of q."""
    if q[0] != 1:
        raise ValidationError("sqrt_series needs constant term 1, got %(c0)s.", code="constant_term",
                              params={"c0": str(q[0])})
    root = [Fraction(1)]
    for n in range(1, q.order + 1):
        cross = sum(root[k] * root[n - k] for k in range(1, n))
        root.append((q[n] - cross) / 2)
    return Series(tuple(root))


def closed_form_series(p, n):
    order = n + p
    numerator = _one_minus_partial_geometric(p, order) - sqrt_series(radicand(p, order))
    if any(numerator[k] != 0 for k in range(p)):
        raise TranscriptionError(f"numerator of the closed form does not vanish below x^{p}: {numerator}")
    coefficients = []
    for k in range(p, order + 1):
        c = numerator[k]
        if c.denominator != 1 or c.numerator % 2:
            raise TranscriptionError(f"coefficient {c} of x^{k} cannot be halved exactly")
        coefficients.append(c.numerator // 2)
    return Series(tuple(coefficients))
