"""
Partitions, Young diagrams and hook lengths.

Rows and columns are 0-indexed here. The box written (i, j) in the usual
1-indexed notation is ``rows[i - 1][j - 1]`` of a :class:`HookTable`.
"""
import re
from dataclasses import dataclass

from django.core.exceptions import ValidationError

_PARTITION_TEXT = re.compile(r"^\[\s*([0-9]+(\s*,\s*[0-9]+)*)?\s*\]$", re.ASCII)


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts; ``()`` is the empty partition."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(x, int) or isinstance(x, bool) for x in parts):
            raise ValidationError("Parts must be integers.", code="not_integer")
        if any(x < 1 for x in parts):
            raise ValidationError("Parts must be positive, got %(parts)s.", code="non_positive",
                                  params={"parts": list(parts)})
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValidationError("Parts must be weakly decreasing, got %(parts)s.", code="increasing",
                                  params={"parts": list(parts)})
        object.__setattr__(self, "parts", parts)

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.parts) + "]"

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def size(self):
        return sum(self.parts)

    def sort_key(self):
        """Canonical order: size ascending, then larger parts first."""
        return (self.size, tuple(-x for x in self.parts))


@dataclass(frozen=True)
class HookTable:
    rows: tuple = ()

    def __getitem__(self, index):
        return self.rows[index]

    def first_column(self):
        return tuple(row[0] for row in self.rows)

    def as_lists(self):
        return [list(row) for row in self.rows]


def from_parts(parts):
    return Partition(tuple(parts))


def parse_partition(text):
    """Parse the bracket form ``[5,2,2]``; ``[]`` is the empty partition."""
    text = (text or "").strip()
    if not _PARTITION_TEXT.match(text):
        raise ValidationError("Partitions are written like [5,2,2] or [], got %(text)r.",
                              code="malformed", params={"text": text})
    body = text[1:-1].strip()
    if not body:
        return Partition()
    return from_parts(int(x) for x in body.split(","))


def size(p):
    return p.size


def conjugate(p):
    """Column lengths of the Young diagram of ``p``."""
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for x in p.parts if x > j) for j in range(p.parts[0])))


def hook_table(p):
    # h(i, j) = parts[i] - j + conj[j] - i - 1
    conj = conjugate(p).parts
    return HookTable(tuple(
        tuple(row - j + conj[j] - i - 1 for j in range(row))
        for i, row in enumerate(p.parts)
    ))


def hook_lengths(p):
    return tuple(sorted(h for row in hook_table(p).rows for h in row))


def is_self_conjugate(p):
    return conjugate(p) == p
