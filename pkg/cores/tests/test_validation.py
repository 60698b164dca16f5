import pytest
from django.conf import settings

from cores import validation
from cores.validation import METHODS, CheckResult, SelfTest, _run, count_by_method, run_selftest


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("t, p, expected", [(3, 1, 5), (4, 2, 9), (5, 3, 17), (1, 1, 1)])
def test_count_by_method(method, t, p, expected):
    assert count_by_method(t, p, method) == expected


def test_count_by_method_rejects_unknown():
    with pytest.raises(ValueError):
        count_by_method(3, 1, "guess")


@pytest.mark.parametrize("name", [name for name, _ in SelfTest(3, 2).checks()])
def test_each_check_passes(name):
    checks = dict(SelfTest(3, 2).checks())
    assert checks[name]() is None


def test_run_selftest_keeps_order():
    names = [name for name, _ in SelfTest(2, 1).checks()]
    results = run_selftest(2, 1, workers=4)
    assert [r.name for r in results] == names
    assert all(r.passed for r in results)


def test_run_reports_failures_and_exceptions():
    assert _run(("fine", lambda: None)) == CheckResult("fine", True)
    assert _run(("off", lambda: "4 != 5")) == CheckResult("off", False, "4 != 5")
    crashed = _run(("crash", lambda: 1 // 0))
    assert not crashed.passed
    assert crashed.detail.startswith("ZeroDivisionError")


def test_check_result_text():
    assert str(CheckResult("motzkin_law", True)) == "PASS motzkin_law"
    assert str(CheckResult("motzkin_law", False, "t=3")) == "FAIL motzkin_law: t=3"


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("t, p", [(t, p) for t in range(1, 11) for p in range(1, 4)])
def test_every_method_matches_recurrence(method, t, p):
    assert count_by_method(t, p, method) == count_by_method(t, p, "recurrence")


@pytest.mark.parametrize("t_max", [1, settings.CORES_SELFTEST_T_MAX])
def test_motzkin_law_enumerates_triples_through_ten(t_max, monkeypatch):
    seen = []
    family = validation._family

    def recording(moduli):
        seen.append(moduli)
        return family(moduli)

    monkeypatch.setattr(validation, "_family", recording)
    assert SelfTest(t_max, settings.CORES_SELFTEST_P_MAX).motzkin_law() is None
    assert {(9, 10, 11), (10, 11, 12)} <= set(seen)


def test_default_selftest_range_covers_ten():
    assert settings.CORES_SELFTEST_T_MAX >= 10
