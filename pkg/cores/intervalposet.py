"""
The poset behind (t, t+1, ..., t+p)-cores.

Beta-sets of these cores live in the union of the intervals

    S_{t,i} = [(i-1)(t+p) + 1, it - 1],   1 <= i <= floor((t+p-2)/p),

ordered by y <= x iff x - y is a nonnegative combination of t, ..., t+p.
A partition is such a core iff its beta-set is a down-set ("good subset")
of that poset.
"""
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from .betaset import semigroup_reachable


def _check_range(t, p):
    if t < 1 or p < 1:
        raise ValidationError("t and p must be positive, got t=%(t)s, p=%(p)s.", code="range",
                              params={"t": t, "p": p})


@dataclass(frozen=True)
class IntervalFamily:
    t: int
    p: int
    index_bound: int
    intervals: tuple = ()

    @property
    def ground(self):
        return tuple(x for low, high in self.intervals for x in range(low, high + 1))


@dataclass(frozen=True)
class CorePoset:
    t: int
    p: int
    ground: tuple
    _reachable: tuple

    def precedes(self, y, x):
        """y <= x in the poset."""
        return x >= y and self._reachable[x - y]

    def predecessors(self, x):
        return tuple(y for y in self.ground if y != x and self.precedes(y, x))

    def as_dict(self):
        return {
            "t": self.t,
            "p": self.p,
            "ground": list(self.ground),
            "covers": [list(pair) for pair in cover_pairs(self)],
        }


def index_bound(t, p):
    _check_range(t, p)
    return (t + p - 2) // p


def build_intervals(t, p):
    top = index_bound(t, p)
    intervals = []
    for i in range(1, top + 1):
        low, high = (i - 1) * (t + p) + 1, i * t - 1
        if low <= high:
            intervals.append((low, high))
    return IntervalFamily(t=t, p=p, index_bound=top, intervals=tuple(intervals))


def complement_intervals(t, p):
    """The blocks [it, i(t+p)] removed from {1, ..., index_bound * t - 1}."""
    top = index_bound(t, p)
    return tuple((i * t, i * (t + p)) for i in range(1, top))


def build_poset(t, p):
    ground = build_intervals(t, p).ground
    span = ground[-1] if ground else 0
    reachable = semigroup_reachable(range(t, t + p + 1), span)
    return CorePoset(t=t, p=p, ground=ground, _reachable=tuple(reachable))


def _require_subset(pos, s):
    outside = set(s) - set(pos.ground)
    if outside:
        raise ValidationError("%(outside)s not in the ground set.", code="outside_ground",
                              params={"outside": sorted(outside)})


def is_good_subset(pos, s):
    _require_subset(pos, s)
    members = set(s)
    return all(y in members for x in members for y in pos.predecessors(x))


def cover_pairs(pos):
    pairs = []
    for x in pos.ground:
        below = pos.predecessors(x)
        for y in below:
            if not any(pos.precedes(y, z) for z in below if z != y):
                pairs.append((y, x))
    return sorted(pairs)


def _down_sets(pos):
    # every strict predecessor is numerically smaller, so ground order is a linear extension
    ground = pos.ground
    below = {x: pos.predecessors(x) for x in ground}
    chosen = set()

    def extend(index):
        if index == len(ground):
            yield frozenset(chosen)
            return
        x = ground[index]
        yield from extend(index + 1)
        if all(y in chosen for y in below[x]):
            chosen.add(x)
            yield from extend(index + 1)
            chosen.discard(x)

    yield from extend(0)


def count_good_subsets(pos):
    return sum(1 for _ in _down_sets(pos))


def enumerate_good_subsets(pos):
    return sorted(_down_sets(pos), key=lambda s: (len(s), sorted(s)))
