import pytest
from django.core.exceptions import ValidationError

from cores.betaset import CoreSpec, beta_set, is_simultaneous_core
from cores.enumeration import enumerate_cores
from cores.exceptions import FiniteFamilyError
from cores.finiteness import analyze, representation, witness
from cores.partitions import from_parts


def test_analyze_infinite():
    report = analyze(CoreSpec((4, 6)))
    assert (report.gcd, report.finite, report.bound) == (2, False, None)
    assert report.as_dict() == {"gcd": 2, "finite": False}


@pytest.mark.parametrize("moduli, bound", [((3, 4), 8), ((6, 10, 15), 125), ((1,), 1), ((1, 5), 1)])
def test_analyze_finite(moduli, bound):
    report = analyze(CoreSpec(moduli))
    assert report.finite and report.gcd == 1
    assert report.bound == bound
    assert report.as_dict() == {"gcd": 1, "finite": True, "bound": bound}


def test_appending_a_modulus_never_increases_gcd():
    specs = [(4,), (4, 6), (4, 6, 9), (4, 6, 9, 10)]
    gcds = [analyze(CoreSpec(moduli)).gcd for moduli in specs]
    assert gcds == sorted(gcds, reverse=True)


def test_witness_examples():
    assert witness(CoreSpec((4, 6)), 2) == from_parts([3, 2, 1])
    assert witness(CoreSpec((4, 6)), 0) == from_parts([1])


def test_witness_rejects_coprime_spec():
    with pytest.raises(FiniteFamilyError):
        witness(CoreSpec((3, 4)), 1)


@pytest.mark.parametrize("moduli", [(4, 6), (6, 9), (10, 15), (4, 6, 10)])
def test_witnesses_are_distinct_cores(moduli):
    spec = CoreSpec(moduli)
    family = [witness(spec, n) for n in range(21)]
    assert all(is_simultaneous_core(p, spec) for p in family)
    sizes = [p.size for p in family]
    assert sizes == sorted(set(sizes))


@pytest.mark.parametrize("moduli", [(2, 3), (3, 4), (3, 7), (5, 6), (3, 4, 5), (6, 10, 15)])
def test_enumerated_beta_sets_lie_below_bound(moduli):
    spec = CoreSpec(moduli)
    bound = analyze(spec).bound
    for core in enumerate_cores(spec):
        assert all(x < bound for x in beta_set(core))


@pytest.mark.parametrize("moduli", [(3, 4), (6, 10, 15), (5, 7, 9), (1, 4)])
def test_representation_above_bound(moduli):
    spec = CoreSpec(moduli)
    bound = analyze(spec).bound
    t1 = spec.moduli[0]
    for x in range(bound, bound + 40):
        coefficients = representation(spec, x)
        assert sum(a * t for a, t in zip(coefficients, spec.moduli)) == x
        assert coefficients[0] >= 0
        assert all(0 <= a <= max(t1 - 1, 0) for a in coefficients[1:])


def test_representation_rejects():
    with pytest.raises(ValidationError):
        representation(CoreSpec((3, 4)), 7)
    with pytest.raises(ValidationError):
        representation(CoreSpec((4, 6)), 100)
