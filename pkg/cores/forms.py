import re

from django import forms
from django.core.exceptions import ValidationError

from .betaset import parse_core_spec
from .partitions import parse_partition

FORMAT_CHOICES = [
    ("lines", "One item per line"),
    ("structured", "Single JSON document"),
]

METHOD_CHOICES = [
    ("recurrence", "Recurrence"),
    ("poset", "Good subsets of the interval poset"),
    ("enumerate", "Enumeration of beta-sets"),
    ("series", "Closed-form generating function"),
]


_DECIMAL = re.compile(r"^\s*[+-]?[0-9]+\s*$", re.ASCII)


class DecimalIntegerField(forms.IntegerField):
    """IntegerField restricted to ASCII decimal digits."""

    def to_python(self, value):
        if isinstance(value, str) and value.strip() and not _DECIMAL.match(value):
            raise ValidationError(self.error_messages["invalid"], code="invalid")
        return super().to_python(value)


class CoreSpecField(forms.Field):
    """Moduli given as "4 5", "4,5" or a list of tokens."""

    def to_python(self, value):
        if value in self.empty_values:
            return None
        if isinstance(value, (list, tuple)):
            value = " ".join(str(v) for v in value)
        return parse_core_spec(value)


class PartitionField(forms.Field):
    """A partition in bracket form, e.g. [5,2,2] or []."""

    def to_python(self, value):
        if value in (None, ""):
            return None
        return parse_partition(value)

    def validate(self, value):
        # the empty partition is a value, not a missing one
        if value is None and self.required:
            raise ValidationError(self.error_messages["required"], code="required")


class OutputForm(forms.Form):
    format = forms.ChoiceField(choices=FORMAT_CHOICES, required=False)

    def clean_format(self):
        return self.cleaned_data.get("format") or "lines"


class CountForm(OutputForm):
    moduli = CoreSpecField(required=False)
    consecutive = DecimalIntegerField(min_value=1, required=False, help_text="t of (t, ..., t+p)")
    p = DecimalIntegerField(min_value=1, required=False)
    method = forms.ChoiceField(choices=METHOD_CHOICES, required=False)

    def clean(self):
        cleaned = super().clean()
        spec, t, p = cleaned.get("moduli"), cleaned.get("consecutive"), cleaned.get("p")
        if self.errors:
            return cleaned
        if spec is not None and (t is not None or p is not None):
            raise ValidationError("Give either moduli or --consecutive/--p, not both.")
        if spec is None:
            if t is None or p is None:
                raise ValidationError("Give moduli, or both --consecutive and --p.")
        elif cleaned.get("method"):
            raise ValidationError("--method only applies to --consecutive counts.")
        cleaned["method"] = cleaned.get("method") or "recurrence"
        return cleaned


class SpecForm(OutputForm):
    moduli = CoreSpecField()


class CheckForm(forms.Form):
    partition = PartitionField()
    moduli = CoreSpecField()


class SeriesForm(OutputForm):
    format = forms.ChoiceField(choices=FORMAT_CHOICES + [("table", "t<TAB>f_t per line")], required=False)
    p = DecimalIntegerField(min_value=1)
    order = DecimalIntegerField(min_value=0, help_text="Truncation order N")
    closed_form = forms.BooleanField(required=False)


class WitnessForm(OutputForm):
    moduli = CoreSpecField()
    n = DecimalIntegerField(min_value=0)

    def clean_moduli(self):
        spec = self.cleaned_data["moduli"]
        if spec.gcd == 1:
            raise ValidationError("%(spec)s is coprime; there is no infinite family.",
                                  code="coprime", params={"spec": str(spec)})
        return spec


class PosetForm(OutputForm):
    t = DecimalIntegerField(min_value=1)
    p = DecimalIntegerField(min_value=1)


class SelftestForm(forms.Form):
    t_max = DecimalIntegerField(min_value=1, max_value=12)
    p_max = DecimalIntegerField(min_value=1, max_value=4)
    workers = DecimalIntegerField(min_value=1, max_value=64)

