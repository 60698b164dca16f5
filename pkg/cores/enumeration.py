"""
Enumeration of all (t_1, ..., t_m)-cores for a coprime CoreSpec.

A set S of positive integers is a core's beta-set iff x - t is in S for
every x in S and every modulus t <= x (t itself is never in S). Elements
are decided in increasing order; since x - t < x, each closed set is
produced exactly once.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from django.conf import settings
from django.core.exceptions import ValidationError

from .betaset import (
    BetaSet, CoreSpec, beta_set, is_simultaneous_core, partition_of, semigroup_reachable,
)
from .exceptions import InfiniteFamilyError
from .finiteness import analyze
from .partitions import is_self_conjugate

logger = logging.getLogger(__name__)

EXHAUSTIVE_BOUND_LIMIT = 18


@dataclass(frozen=True)
class CoreFamily:
    spec: object
    members: tuple = field(default=())

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def lines(self):
        return [str(p) for p in self.members]

    def as_dict(self):
        return {
            "spec": list(self.spec.moduli),
            "count": len(self.members),
            "members": [list(p.parts) for p in self.members],
        }


@dataclass(frozen=True)
class FamilyStats:
    count: int
    max_size: int
    total_size: int
    self_conjugate_count: int

    @property
    def average(self):
        return Fraction(self.total_size, self.count)

    def as_dict(self):
        return {
            "count": self.count,
            "max_size": self.max_size,
            "total_size": self.total_size,
            "average": str(self.average),
            "self_conjugate_count": self.self_conjugate_count,
        }


def _finite_bound(spec):
    report = analyze(spec)
    if not report.finite:
        raise InfiniteFamilyError(spec.moduli, report.gcd)
    return report.bound


def beta_universe(spec):
    """Integers 1 <= x < B that are not nonnegative combinations of the moduli."""
    return _gaps_below(spec, _finite_bound(spec))


def _gaps_below(spec, bound):
    reachable = semigroup_reachable(spec.moduli, bound - 1)
    return tuple(x for x in range(1, bound) if not reachable[x])


def _closed_subsets(universe, moduli):
    chosen = set()
    found = []

    def extend(index):
        if index == len(universe):
            found.append(frozenset(chosen))
            return
        x = universe[index]
        extend(index + 1)
        if all(x - t in chosen for t in moduli if t <= x):
            chosen.add(x)
            extend(index + 1)
            chosen.discard(x)

    extend(0)
    return found


def _family(spec, subsets):
    members = sorted((partition_of(BetaSet(tuple(s))) for s in subsets), key=lambda p: p.sort_key())
    return CoreFamily(spec=spec, members=tuple(members))


def enumerate_cores(spec):
    bound = _finite_bound(spec)
    universe = _gaps_below(spec, bound)
    logger.debug("Enumerating %s: bound %s, %s candidate beta elements", spec, bound, len(universe))
    if bound > getattr(settings, "CORES_ENUMERATION_WARN_BOUND", 1000):
        logger.warning("Beta-set bound %s for %s is large; enumeration may be slow", bound, spec)
    return _family(spec, _closed_subsets(universe, spec.moduli))


def enumerate_cores_exhaustive(spec):
    """Filter every subset of {1, ..., B - 1}. Only for B <= 18."""
    bound = _finite_bound(spec)
    if bound > EXHAUSTIVE_BOUND_LIMIT:
        raise ValidationError("Exhaustive enumeration needs B <= %(limit)s, %(spec)s has B = %(bound)s.",
                              code="bound_too_large",
                              params={"limit": EXHAUSTIVE_BOUND_LIMIT, "spec": str(spec), "bound": bound})
    ground = range(1, bound)
    subsets = []
    for k in range(len(ground) + 1):
        for candidate in combinations(ground, k):
            members = set(candidate)
            if all(x - t in members for x in candidate for t in spec.moduli if t <= x):
                subsets.append(members)
    return _family(spec, subsets)


def stats(spec):
    family = enumerate_cores(spec)
    sizes = [p.size for p in family]
    return FamilyStats(
        count=len(family),
        max_size=max(sizes),
        total_size=sum(sizes),
        self_conjugate_count=sum(1 for p in family if is_self_conjugate(p)),
    )


def r_class_counts(t, p):
    """
    r_{t,j} for j = 1..t: cores of (t, ..., t+p) whose beta-set contains
    1, ..., j-1 but not j.
    """
    if t < 1 or p < 1:
        raise ValidationError("t and p must be positive, got t=%(t)s, p=%(p)s.", code="range",
                              params={"t": t, "p": p})
    counts = [0] * t
    for core in enumerate_cores(CoreSpec.consecutive(t, p)):
        members = beta_set(core).as_set()
        j = 1
        while j in members:
            j += 1
        # t is never in a beta-set here, so j <= t
        counts[j - 1] += 1
    return tuple(counts)


def verify_family(family):
    """Every member is a simultaneous core by both routes (raises on disagreement)."""
    return all(is_simultaneous_core(p, family.spec) for p in family)
