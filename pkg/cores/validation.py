"""
Cross-validation of every counting route against each other and against
the known closed forms for pairs (t_1, t_2). Run by ``manage.py cores selftest``.
"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .betaset import (
    BetaSet, CoreSpec, beta_set, excludes_linear_combinations, is_simultaneous_core, is_t_core_beta,
    is_t_core_hooks, partition_of,
)
from .counting import (
    anderson, catalan, catalan_central, f, motzkin, oracle_avg_size_consecutive, oracle_max_size,
    oracle_self_conjugate, r_class_formula,
)
from .enumeration import enumerate_cores, enumerate_cores_exhaustive, r_class_counts, stats, verify_family
from .finiteness import analyze, beta_bound, representation, witness
from .intervalposet import build_poset, count_good_subsets, enumerate_good_subsets
from .partitions import Partition
from .powerseries import check_functional_equation, closed_form_series, series_from_recurrence

logger = logging.getLogger(__name__)

METHODS = ("recurrence", "poset", "enumerate", "series")

COPRIME_PAIRS = ((2, 3), (3, 4), (3, 5), (4, 5), (3, 7), (4, 7), (5, 6))
NON_COPRIME_SPECS = ((4, 6), (6, 9), (10, 15))
MOTZKIN_PREFIX = (1, 1, 2, 4, 9, 21, 51, 127, 323, 835)
FORMULA_T_MAX = 12
MOTZKIN_ENUMERATION_T_MAX = 10
SERIES_ORDER = 30
SERIES_P_VALUES = (1, 2, 3, 4)
RANDOM_PARTITIONS = 1000
RANDOM_SEED = 20140127


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        if self.passed:
            return f"PASS {self.name}"
        return f"FAIL {self.name}: {self.detail}"


def count_by_method(t, p, method):
    """f_t for (t, ..., t+p) computed by one of METHODS."""
    if method == "recurrence":
        return f(t, p)
    if method == "poset":
        return count_good_subsets(build_poset(t, p))
    if method == "enumerate":
        return len(enumerate_cores(CoreSpec.consecutive(t, p)))
    if method == "series":
        return int(closed_form_series(p, t)[t])
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _family(moduli):
    return enumerate_cores(CoreSpec(moduli))


class SelfTest:
    """The check matrix, scaled by the largest t and p to enumerate."""

    def __init__(self, t_max, p_max):
        self.t_max = t_max
        self.p_max = p_max

    def checks(self):
        return [
            ("catalan_law", self.catalan_law),
            ("motzkin_law", self.motzkin_law),
            ("generating_functions", self.generating_functions),
            ("count_methods_agree", self.count_methods_agree),
            ("anderson_count", self.anderson_count),
            ("largest_size", self.largest_size),
            ("average_size", self.average_size),
            ("self_conjugate_count", self.self_conjugate_count),
            ("infinite_witnesses", self.infinite_witnesses),
            ("beta_bound", self.beta_bound),
            ("r_class_laws", self.r_class_laws),
            ("good_subsets", self.good_subsets),
            ("hooks_match_beta_sets", self.hooks_match_beta_sets),
            ("linear_combinations_excluded", self.linear_combinations_excluded),
            ("exhaustive_completeness", self.exhaustive_completeness),
        ]

    def catalan_law(self):
        for t in range(FORMULA_T_MAX + 1):
            values = {f(t, 1), catalan(t), catalan_central(t)}
            if t >= 1:
                values.add(anderson(t, t + 1))
            if len(values) != 1:
                return f"t={t}: {sorted(values)}"
        for t in range(1, min(self.t_max, 8) + 1):
            found = len(_family((t, t + 1)))
            if found != f(t, 1):
                return f"({t},{t + 1}) enumerates {found}, expected {f(t, 1)}"

    def motzkin_law(self):
        for t in range(FORMULA_T_MAX + 1):
            if f(t, 2) != motzkin(t):
                return f"t={t}: recurrence {f(t, 2)} != {motzkin(t)}"
        prefix = tuple(f(t, 2) for t in range(len(MOTZKIN_PREFIX)))
        if prefix != MOTZKIN_PREFIX:
            return f"prefix {prefix}"
        for t in range(1, max(self.t_max, MOTZKIN_ENUMERATION_T_MAX) + 1):
            found = len(_family((t, t + 1, t + 2)))
            if found != f(t, 2):
                return f"({t},{t + 1},{t + 2}) enumerates {found}, expected {f(t, 2)}"

    def generating_functions(self):
        for p in SERIES_P_VALUES:
            recurrence = series_from_recurrence(p, SERIES_ORDER)
            if closed_form_series(p, SERIES_ORDER) != recurrence:
                return f"p={p}: closed form differs from the recurrence"
            if not check_functional_equation(recurrence, p):
                return f"p={p}: functional equation fails"

    def count_methods_agree(self):
        for p in range(1, self.p_max + 1):
            for t in range(1, self.t_max + 1):
                counts = {method: count_by_method(t, p, method) for method in METHODS}
                if len(set(counts.values())) != 1:
                    return f"t={t}, p={p}: {counts}"

    def anderson_count(self):
        for pair in COPRIME_PAIRS:
            if len(_family(pair)) != anderson(*pair):
                return f"{pair}: {len(_family(pair))} != {anderson(*pair)}"

    def largest_size(self):
        for pair in COPRIME_PAIRS:
            largest = max(core.size for core in _family(pair))
            if largest != oracle_max_size(*pair):
                return f"{pair}: {largest} != {oracle_max_size(*pair)}"

    def average_size(self):
        for t in range(1, 8):
            average = stats(CoreSpec((t, t + 1))).average
            if average != oracle_avg_size_consecutive(t):
                return f"t={t}: {average} != {oracle_avg_size_consecutive(t)}"

    def self_conjugate_count(self):
        for pair in COPRIME_PAIRS:
            found = stats(CoreSpec(pair)).self_conjugate_count
            if found != oracle_self_conjugate(*pair):
                return f"{pair}: {found} != {oracle_self_conjugate(*pair)}"

    def infinite_witnesses(self):
        for moduli in NON_COPRIME_SPECS:
            spec = CoreSpec(moduli)
            sizes = []
            for n in range(21):
                core = witness(spec, n)
                if not is_simultaneous_core(core, spec):
                    return f"{spec}, n={n}: {core} is not a core"
                sizes.append(core.size)
            if any(a >= b for a, b in zip(sizes, sizes[1:])):
                return f"{spec}: sizes do not increase: {sizes}"

    def beta_bound(self):
        for moduli in COPRIME_PAIRS + ((6, 10, 15),):
            spec = CoreSpec(moduli)
            bound = analyze(spec).bound
            for core in _family(moduli):
                elements = beta_set(core).elements
                if elements and elements[0] >= bound:
                    return f"{spec}: {core} has beta element {elements[0]} >= {bound}"
            for x in range(bound, bound + spec.moduli[-1]):
                coefficients = representation(spec, x)
                if sum(a * t for a, t in zip(coefficients, spec.moduli)) != x:
                    return f"{spec}: bad representation of {x}: {coefficients}"

    def r_class_laws(self):
        for p in range(1, self.p_max + 1):
            for t in range(1, self.t_max + 1):
                counted = r_class_counts(t, p)
                if counted != r_class_formula(t, p):
                    return f"t={t}, p={p}: {counted} != {r_class_formula(t, p)}"
                if sum(counted) != f(t, p):
                    return f"t={t}, p={p}: classes sum to {sum(counted)}, f_t = {f(t, p)}"

    def good_subsets(self):
        for p in range(1, self.p_max + 1):
            for t in range(1, self.t_max + 1):
                poset = build_poset(t, p)
                from_poset = {partition_of(BetaSet(tuple(s))) for s in enumerate_good_subsets(poset)}
                family = set(_family(tuple(range(t, t + p + 1))))
                if from_poset != family:
                    return f"t={t}, p={p}: good subsets and enumeration differ"
                if count_good_subsets(poset) != f(t, p):
                    return f"t={t}, p={p}: {count_good_subsets(poset)} good subsets, f_t = {f(t, p)}"

    def hooks_match_beta_sets(self):
        rng = random.Random(RANDOM_SEED)
        for _ in range(RANDOM_PARTITIONS):
            length = rng.randint(0, 12)
            core = Partition(tuple(sorted((rng.randint(1, 12) for _ in range(length)), reverse=True)))
            b = beta_set(core)
            for t in range(1, 10):
                if is_t_core_hooks(core, t) != is_t_core_beta(b, t):
                    return f"{core}, t={t}"

    def linear_combinations_excluded(self):
        for pair in COPRIME_PAIRS:
            spec = CoreSpec(pair)
            for core in _family(pair):
                if not excludes_linear_combinations(beta_set(core), spec):
                    return f"{spec}: {core}"
            if not verify_family(_family(pair)):
                return f"{spec}: a member fails the core test"

    def exhaustive_completeness(self):
        for moduli in COPRIME_PAIRS + ((2, 5), (2, 7), (2, 3, 4)):
            spec = CoreSpec(moduli)
            if beta_bound(spec) > 18:
                continue
            if enumerate_cores_exhaustive(spec) != _family(moduli):
                return f"{spec}: exhaustive and closure enumeration differ"


def _run(check):
    name, func = check
    try:
        failure = func()
    except Exception as e:
        failure = f"{type(e).__name__}: {e}"
    if failure:
        logger.error(f"Self-test check {name} failed: {failure}")
        return CheckResult(name, False, failure)
    return CheckResult(name, True)


def run_selftest(t_max, p_max, workers=1):
    """Results in the fixed order of SelfTest.checks(), whatever the worker count."""
    checks = SelfTest(t_max, p_max).checks()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run, checks))
