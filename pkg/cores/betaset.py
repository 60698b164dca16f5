"""
Beta-sets and the beta-set characterisation of (simultaneous) core partitions.

The beta-set of (l_1, ..., l_r) is {l_i + r - i}, the first-column hook
lengths. It never contains 0, and every finite set of positive integers is
the beta-set of exactly one partition.
"""
import re
from dataclasses import dataclass
from functools import reduce
from math import gcd

from django.core.exceptions import ValidationError

from .exceptions import TranscriptionError
from .partitions import Partition, hook_table

_SEPARATORS = re.compile(r"[\s,]+")
_INTEGER = re.compile(r"^[+-]?[0-9]+$", re.ASCII)


@dataclass(frozen=True)
class BetaSet:
    """Distinct positive integers, stored strictly decreasing."""

    elements: tuple = ()

    def __post_init__(self):
        raw = tuple(self.elements)
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in raw):
            raise ValidationError("Beta-set elements must be positive integers.", code="non_positive")
        elements = tuple(sorted(set(raw), reverse=True))
        if len(elements) != len(raw):
            raise ValidationError("Beta-set elements must be distinct.", code="duplicate")
        object.__setattr__(self, "elements", elements)

    def __str__(self):
        return "{" + ",".join(str(x) for x in self.elements) + "}"

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def as_set(self):
        return frozenset(self.elements)


@dataclass(frozen=True)
class CoreSpec:
    """Strictly increasing moduli t_1 < ... < t_m, m >= 1."""

    moduli: tuple

    def __post_init__(self):
        moduli = tuple(self.moduli)
        if not moduli:
            raise ValidationError("A core spec needs at least one modulus.", code="empty")
        if any(not isinstance(t, int) or isinstance(t, bool) or t < 1 for t in moduli):
            raise ValidationError("Moduli must be positive integers, got %(moduli)s.",
                                  code="non_positive", params={"moduli": list(moduli)})
        if any(moduli[i] >= moduli[i + 1] for i in range(len(moduli) - 1)):
            raise ValidationError("Moduli must be strictly increasing, got %(moduli)s.",
                                  code="not_increasing", params={"moduli": list(moduli)})
        object.__setattr__(self, "moduli", moduli)

    def __str__(self):
        return "(" + ",".join(str(t) for t in self.moduli) + ")"

    def __iter__(self):
        return iter(self.moduli)

    def __len__(self):
        return len(self.moduli)

    @property
    def gcd(self):
        return reduce(gcd, self.moduli)

    @classmethod
    def consecutive(cls, t, p):
        return cls(tuple(range(t, t + p + 1)))


def from_elements(elements):
    return BetaSet(tuple(elements))


def parse_core_spec(value):
    """Accept ``"4 5"``, ``"4,5"`` or a sequence of ints/strings."""
    if isinstance(value, str):
        tokens = [tok for tok in _SEPARATORS.split(value.strip()) if tok]
    else:
        tokens = [tok for item in value for tok in _SEPARATORS.split(str(item).strip()) if tok]
    if not all(_INTEGER.match(tok) for tok in tokens):
        raise ValidationError("Moduli must be integers, got %(value)r.", code="not_integer",
                              params={"value": value})
    return CoreSpec(tuple(int(tok) for tok in tokens))


def is_consecutive(spec):
    """Return ``(t, p)`` when spec is (t, t+1, ..., t+p) with p >= 1, else None."""
    moduli = spec.moduli
    if len(moduli) < 2 or moduli != tuple(range(moduli[0], moduli[0] + len(moduli))):
        return None
    return moduli[0], len(moduli) - 1


def semigroup_reachable(generators, limit):
    """
    reachable[n] is True iff n = sum a_k g_k with integers a_k >= 0, for 0 <= n <= limit.
    """
    if limit < 0:
        return []
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for n in range(1, limit + 1):
        reachable[n] = any(g <= n and reachable[n - g] for g in generators)
    return reachable


def beta_set(p):
    r = len(p.parts)
    return BetaSet(tuple(part + r - i for i, part in enumerate(p.parts, start=1)))


def partition_of(b):
    # x_1 > ... > x_r gives l_i = x_i - (r - i); consecutive gaps >= 1 keep it a partition
    r = len(b.elements)
    return Partition(tuple(x - (r - i) for i, x in enumerate(b.elements, start=1)))


def is_t_core_beta(b, t):
    members = b.as_set()
    return all(x - t > 0 and x - t in members for x in b.elements if x >= t)


def is_t_core_hooks(p, t):
    return not any(h % t == 0 for row in hook_table(p).rows for h in row)


def is_simultaneous_core(p, spec):
    by_hooks = all(is_t_core_hooks(p, t) for t in spec.moduli)
    b = beta_set(p)
    by_beta = all(is_t_core_beta(b, t) for t in spec.moduli)
    if by_hooks != by_beta:
        raise TranscriptionError(f"hook and beta-set routes disagree on {p} for {spec}")
    return by_hooks


def excludes_linear_combinations(b, spec):
    if not b.elements:
        return True
    reachable = semigroup_reachable(spec.moduli, b.elements[0])
    return not any(reachable[x] for x in b.elements)
