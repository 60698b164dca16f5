"""
Finiteness of the family of (t_1, ..., t_m)-cores.

The family is finite iff gcd(t_1, ..., t_m) = 1. In that case every
beta-set lies in {1, ..., B - 1} with B = (t_1 - 1) * (t_2 + ... + t_m).
When d = gcd > 1 the beta-sets {1, 1 + d, ..., 1 + n d} give infinitely
many cores.
"""
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from .betaset import BetaSet, partition_of
from .exceptions import FiniteFamilyError, TranscriptionError


@dataclass(frozen=True)
class FinitenessReport:
    gcd: int
    finite: bool
    bound: int = None

    def as_dict(self):
        record = {"gcd": self.gcd, "finite": self.finite}
        if self.bound is not None:
            record["bound"] = self.bound
        return record


def beta_bound(spec):
    """B for a gcd-1 spec. t_1 = 1 admits only the empty partition, so B = 1."""
    t1 = spec.moduli[0]
    if t1 == 1:
        return 1
    return (t1 - 1) * sum(spec.moduli[1:])


def analyze(spec):
    d = spec.gcd
    if d != 1:
        return FinitenessReport(gcd=d, finite=False)
    return FinitenessReport(gcd=1, finite=True, bound=beta_bound(spec))


def witness(spec, n):
    if n < 0:
        raise ValidationError("n must be nonnegative, got %(n)s.", code="negative", params={"n": n})
    d = spec.gcd
    if d == 1:
        raise FiniteFamilyError(spec.moduli)
    return partition_of(BetaSet(tuple(1 + k * d for k in range(n + 1))))


def representation(spec, x):
    """
    Coefficients (a_1, ..., a_m) >= 0 with sum a_i t_i = x, where
    0 <= a_i <= t_1 - 1 for i >= 2. Exists for every x >= B when gcd = 1.
    """
    if spec.gcd != 1:
        raise ValidationError("%(spec)s is not coprime.", code="not_coprime", params={"spec": str(spec)})
    bound = beta_bound(spec)
    if x < bound:
        raise ValidationError("%(x)s is below the bound %(bound)s.", code="below_bound",
                              params={"x": x, "bound": bound})
    t1, rest = spec.moduli[0], spec.moduli[1:]
    # residue mod t_1 -> first coefficient tuple (for t_2..t_m) reaching it
    found = {0: ()}
    for t in rest:
        step = {}
        for residue, coefficients in found.items():
            for a in range(t1):
                step.setdefault((residue + a * t) % t1, coefficients + (a,))
        found = step
    coefficients = found[x % t1]
    a1, remainder = divmod(x - sum(a * t for a, t in zip(coefficients, rest)), t1)
    if remainder or a1 < 0:
        raise TranscriptionError(f"no representation of {x} over {spec} with a_1 >= 0")
    return (a1,) + coefficients
