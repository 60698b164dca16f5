import json
import logging

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from django.core.serializers.json import DjangoJSONEncoder

from cores.betaset import is_consecutive, is_simultaneous_core
from cores.counting import f, sequence_lines
from cores.enumeration import enumerate_cores, stats
from cores.exceptions import InfiniteFamilyError, TranscriptionError
from cores.finiteness import witness
from cores.forms import CheckForm, CountForm, PosetForm, SelftestForm, SeriesForm, SpecForm, WitnessForm
from cores.intervalposet import build_poset, cover_pairs
from cores.powerseries import closed_form_series, series_from_recurrence
from cores.validation import count_by_method, run_selftest

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
INFINITE_FAMILY = 3
INTERNAL_ERROR = 4


class Command(BaseCommand):
    help = "Count, enumerate and cross-check simultaneous core partitions."
    requires_system_checks = []

    def add_arguments(self, parser):
        sub = parser.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

        count = sub.add_parser("count", help="Number of simultaneous cores")
        count.add_argument("moduli", nargs="*", help="Moduli t_1 < ... < t_m")
        count.add_argument("--consecutive", help="t of the moduli (t, t+1, ..., t+p)")
        count.add_argument("--p", help="p of the moduli (t, t+1, ..., t+p)")
        count.add_argument("--method", help="recurrence, poset, enumerate or series")
        count.add_argument("--format", help="lines or structured")

        enumerate_ = sub.add_parser("enumerate", help="List every core in canonical order")
        enumerate_.add_argument("moduli", nargs="+")
        enumerate_.add_argument("--format", help="lines or structured")

        check = sub.add_parser("check", help="Exit 0 iff the partition is a simultaneous core")
        check.add_argument("partition", help="Bracket form, e.g. [5,2,2] or []")
        check.add_argument("moduli", nargs="+")

        stats_ = sub.add_parser("stats", help="Count, sizes and self-conjugate count")
        stats_.add_argument("moduli", nargs="+")
        stats_.add_argument("--format", help="lines or structured")

        series = sub.add_parser("series", help="Coefficients f_0, ..., f_N")
        series.add_argument("--p", required=True)
        series.add_argument("-N", dest="order", required=True)
        series.add_argument("--closed-form", action="store_true", help="Expand the generating function")
        series.add_argument("--format", help="lines, table or structured")

        witness_ = sub.add_parser("witness", help="Members of the infinite family for gcd > 1")
        witness_.add_argument("moduli", nargs="+")
        witness_.add_argument("-n", dest="n", required=True)
        witness_.add_argument("--format", help="lines or structured")

        poset = sub.add_parser("poset", help="Ground set and cover pairs of the interval poset")
        poset.add_argument("--t", required=True)
        poset.add_argument("--p", required=True)
        poset.add_argument("--format", help="lines or structured")

        selftest = sub.add_parser("selftest", help="Run the cross-validation matrix")
        selftest.add_argument("--t-max", default=getattr(settings, "CORES_SELFTEST_T_MAX", 10))
        selftest.add_argument("--p-max", default=getattr(settings, "CORES_SELFTEST_P_MAX", 3))
        selftest.add_argument("--workers", default=getattr(settings, "CORES_SELFTEST_WORKERS", 1))

    def handle(self, *args, **options):
        subcommand = options["subcommand"]
        logger.debug(f"Dispatching cores {subcommand}")
        handler = getattr(self, f"handle_{subcommand}")
        try:
            handler(options)
        except InfiniteFamilyError as e:
            self.stdout.write("infinite")
            raise CommandError(str(e), returncode=INFINITE_FAMILY)
        except TranscriptionError as e:
            logger.error(f"Internal assertion failed in cores {subcommand}: {e}")
            raise CommandError(f"internal assertion failed: {e}", returncode=INTERNAL_ERROR)
        except ValidationError as e:
            raise CommandError("; ".join(e.messages), returncode=USAGE_ERROR)

    # helpers

    def validated(self, form_class, **data):
        form = form_class(data=data)
        if not form.is_valid():
            errors = []
            for field, messages in form.errors.items():
                label = "error" if field == "__all__" else field
                errors.extend(f"{label}: {message}" for message in messages)
            raise CommandError("; ".join(errors), returncode=USAGE_ERROR)
        return form.cleaned_data

    def emit(self, data, command, spec, result, lines):
        if data.get("format") == "structured":
            document = {"command": command, "spec": spec, "result": result}
            self.stdout.write(json.dumps(document, cls=DjangoJSONEncoder))
        else:
            for line in lines:
                self.stdout.write(line)

    # sub-commands

    def handle_count(self, options):
        data = self.validated(
            CountForm,
            moduli=" ".join(options["moduli"]),
            consecutive=options["consecutive"],
            p=options["p"],
            method=options["method"],
            format=options["format"],
        )
        spec = data["moduli"]
        if spec is None:
            t, p, method = data["consecutive"], data["p"], data["method"]
            value = count_by_method(t, p, method)
            self.emit(data, "count", list(range(t, t + p + 1)), {"count": value, "method": method}, [str(value)])
            return

        count = len(enumerate_cores(spec))
        lines = [str(count)]
        result = {"count": count}
        consecutive = is_consecutive(spec)
        if consecutive:
            t, p = consecutive
            expected = f(t, p)
            if expected != count:
                raise TranscriptionError(f"{spec} enumerates {count} cores but f_{t} = {expected} for p = {p}")
            lines.append(f"f_t = {expected} (t={t}, p={p})")
            result["f_t"] = expected
        self.emit(data, "count", list(spec.moduli), result, lines)

    def handle_enumerate(self, options):
        data = self.validated(SpecForm, moduli=" ".join(options["moduli"]), format=options["format"])
        family = enumerate_cores(data["moduli"])
        result = family.as_dict()
        del result["spec"]
        self.emit(data, "enumerate", list(family.spec.moduli), result, family.lines())

    def handle_check(self, options):
        data = self.validated(CheckForm, partition=options["partition"], moduli=" ".join(options["moduli"]))
        partition, spec = data["partition"], data["moduli"]
        if not is_simultaneous_core(partition, spec):
            raise CommandError(f"{partition} is not a {spec}-core", returncode=1)
        self.stdout.write(f"{partition} is a {spec}-core")

    def handle_stats(self, options):
        data = self.validated(SpecForm, moduli=" ".join(options["moduli"]), format=options["format"])
        spec = data["moduli"]
        summary = stats(spec)
        result = summary.as_dict()
        self.emit(data, "stats", list(spec.moduli), result, [f"{key}\t{value}" for key, value in result.items()])

    def handle_series(self, options):
        data = self.validated(
            SeriesForm,
            p=options["p"],
            order=options["order"],
            closed_form=options["closed_form"],
            format=options["format"],
        )
        p, order = data["p"], data["order"]
        if data["closed_form"]:
            series = closed_form_series(p, order)
            table = [f"{t}\t{c}" for t, c in enumerate(series.as_strings())]
        else:
            series = series_from_recurrence(p, order)
            table = sequence_lines(p, 0, order)
        lines = table if data["format"] == "table" else [str(series)]
        self.emit(data, "series", {"p": p, "N": order}, series.as_strings(), lines)

    def handle_witness(self, options):
        data = self.validated(WitnessForm, moduli=" ".join(options["moduli"]), n=options["n"],
                              format=options["format"])
        spec = data["moduli"]
        members = [witness(spec, k) for k in range(data["n"] + 1)]
        self.emit(data, "witness", list(spec.moduli), [list(p.parts) for p in members],
                  [str(p) for p in members])

    def handle_poset(self, options):
        data = self.validated(PosetForm, t=options["t"], p=options["p"], format=options["format"])
        poset = build_poset(data["t"], data["p"])
        lines = ["ground\t" + " ".join(str(x) for x in poset.ground)]
        lines.extend(f"cover\t{y} {x}" for y, x in cover_pairs(poset))
        self.emit(data, "poset", {"t": poset.t, "p": poset.p}, poset.as_dict(), lines)

    def handle_selftest(self, options):
        data = self.validated(
            SelftestForm,
            t_max=options["t_max"],
            p_max=options["p_max"],
            workers=options["workers"],
        )
        results = run_selftest(data["t_max"], data["p_max"], workers=data["workers"])
        for result in results:
            style = self.style.SUCCESS if result.passed else self.style.ERROR
            self.stdout.write(str(result), style_func=style)
        failed = [result.name for result in results if not result.passed]
        self.stdout.write(f"{len(results)} checks, {len(results) - len(failed)} passed")
        if failed:
            raise CommandError(f"self-test failed: {', '.join(failed)}", returncode=INTERNAL_ERROR)
