import pytest

from cores.betaset import CoreSpec
from cores.forms import CheckForm, CountForm, SelftestForm, SeriesForm, WitnessForm
from cores.partitions import Partition


def test_count_form_with_moduli():
    form = CountForm(data={"moduli": "3, 4"})
    assert form.is_valid(), form.errors
    assert form.cleaned_data["moduli"] == CoreSpec((3, 4))
    assert form.cleaned_data["format"] == "lines"


def test_count_form_consecutive_defaults_to_recurrence():
    form = CountForm(data={"consecutive": "3", "p": "2"})
    assert form.is_valid(), form.errors
    assert form.cleaned_data["method"] == "recurrence"


@pytest.mark.parametrize("data", [
    {},
    {"consecutive": "3"},
    {"moduli": "3 4", "p": "1"},
    {"moduli": "3 4", "method": "poset"},
    {"consecutive": "0", "p": "1"},
    {"consecutive": "3", "p": "1", "method": "guess"},
    {"moduli": "4 4"},
    {"moduli": "4 x"},
    {"moduli": "3 4", "format": "xml"},
])
def test_count_form_rejects(data):
    assert not CountForm(data=data).is_valid()


def test_check_form_accepts_empty_partition():
    form = CheckForm(data={"partition": "[]", "moduli": "2 3"})
    assert form.is_valid(), form.errors
    assert form.cleaned_data["partition"] == Partition(())


@pytest.mark.parametrize("partition", ["", "[2,3]", "5,2", "[0]"])
def test_check_form_rejects_partitions(partition):
    assert not CheckForm(data={"partition": partition, "moduli": "2 3"}).is_valid()


def test_witness_form_needs_common_divisor():
    assert WitnessForm(data={"moduli": "4 6", "n": "3"}).is_valid()
    form = WitnessForm(data={"moduli": "3 4", "n": "3"})
    assert not form.is_valid()
    assert form.errors.as_data()["moduli"][0].code == "coprime"


def test_series_form():
    form = SeriesForm(data={"p": "2", "order": "6", "format": "structured"})
    assert form.is_valid(), form.errors
    assert form.cleaned_data["closed_form"] is False
    assert not SeriesForm(data={"p": "0", "order": "6"}).is_valid()
    assert not SeriesForm(data={"p": "2", "order": "-1"}).is_valid()


@pytest.mark.parametrize("data, valid", [
    ({"t_max": 8, "p_max": 3, "workers": 1}, True),
    ({"t_max": 13, "p_max": 3, "workers": 1}, False),
    ({"t_max": 8, "p_max": 5, "workers": 1}, False),
    ({"t_max": 8, "p_max": 3, "workers": 0}, False),
])
def test_selftest_form_ranges(data, valid):
    assert SelftestForm(data=data).is_valid() is valid


@pytest.mark.parametrize("field, value", [("p", "\u0662"), ("order", "\u0666"), ("p", "2.5")])
def test_series_form_needs_ascii_decimal_integers(field, value):
    data = {"p": "2", "order": "6", field: value}
    assert not SeriesForm(data=data).is_valid()


def test_series_form_accepts_table_format():
    form = SeriesForm(data={"p": "2", "order": "6", "format": "table"})
    assert form.is_valid(), form.errors
