"""
Named verification suites.

Each suite is a generator of SuiteInstance records over a parameter grid
bounded by ``nmax``. A suite fails when any instance fails. A discrepancy is
a recorded mismatch between a formula as it is usually printed and the
value derived from the generating function or the operator; it never fails
the suite.
"""

import itertools
import logging
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Generator

import networkx as nx

from . import bellpart, graphs
from .combinat import (
    NumberKind, audit_table, bell_number, bell_triangle_number, lah,
    r_stirling1_unsigned, stirling1_unsigned,
)
from .exactmath import (
    X, InternalInconsistency, Poly, divide_by_x_power, falling_factorial_poly,
    poly_mul, poly_pow, poly_scale, poly_shift, poly_to_json, rising_factorial_poly,
)
from .rzcert import certify_rz, is_log_concave, is_log_convex, newton_consistent
from .umbra import (
    DOBINSKI_TERMS, apply_falling_chain, apply_falling_op, apply_falling_product,
    bell_poly, chain_order_report, direct_falling_op, dobinski_oracle,
    falling_op_closed_form, lah_poly, multi_r_bell, r_bell_poly, rolle_step_check,
    umbral_eval,
)

logger = logging.getLogger(__name__)

SAMPLE_POINTS = (Fraction(1, 2), Fraction(1), Fraction(2))
DOBINSKI_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SuiteInstance:
    params: dict
    passed: bool
    witness: Any = None
    discrepancy: str | None = None

    def to_dict(self) -> dict:
        data = {'params': self.params, 'passed': self.passed}
        if self.witness is not None:
            data['witness'] = self.witness
        if self.discrepancy:
            data['discrepancy'] = self.discrepancy
        return data


@dataclass
class SuiteReport:
    suite_name: str
    nmax: int
    seed: int
    instances: list[SuiteInstance] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def all_passed(self) -> bool:
        return all(i.passed for i in self.instances)

    @property
    def failures(self) -> list[SuiteInstance]:
        return [i for i in self.instances if not i.passed]

    @property
    def discrepancies(self) -> list[SuiteInstance]:
        return [i for i in self.instances if i.discrepancy]

    def to_dict(self) -> dict:
        return {
            'suite_name': self.suite_name,
            'nmax': self.nmax,
            'seed': self.seed,
            'all_passed': self.all_passed,
            'instance_count': len(self.instances),
            'failure_count': len(self.failures),
            'discrepancy_count': len(self.discrepancies),
            'elapsed': round(self.elapsed, 6),
            'instances': [i.to_dict() for i in self.instances],
        }


@dataclass
class SuiteContext:
    nmax: int
    seed: int
    rng: random.Random
    max_vertices: int = graphs.DEFAULT_MAX_VERTICES
    dobinski_terms: int = DOBINSKI_TERMS


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    default_nmax: int
    runner: Callable[[SuiteContext], Generator[SuiteInstance, None, None]]

    def descriptor(self) -> dict:
        return {'name': self.name, 'description': self.description,
                'default_nmax': self.default_nmax}


SUITES: dict[str, Suite] = {}


def register(name: str, description: str, default_nmax: int):
    def wrap(runner):
        SUITES[name] = Suite(name, description, default_nmax, runner)
        return runner
    return wrap


def list_suites() -> list[dict]:
    return [suite.descriptor() for suite in SUITES.values()]


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise ValueError(f"Unknown suite {name!r}; expected one of {sorted(SUITES)}") from None


def run_suite(name: str, nmax: int | None = None, seed: int = 0,
              max_vertices: int = graphs.DEFAULT_MAX_VERTICES,
              dobinski_terms: int = DOBINSKI_TERMS) -> SuiteReport:
    suite = get_suite(name)
    if nmax is None:
        nmax = suite.default_nmax
    if nmax < 0:
        raise ValueError(f"nmax must be non-negative, got {nmax}")
    ctx = SuiteContext(nmax=nmax, seed=seed, rng=random.Random(seed),
                       max_vertices=max_vertices, dobinski_terms=dobinski_terms)
    report = SuiteReport(suite_name=name, nmax=nmax, seed=seed)
    started = time.perf_counter()
    for instance in suite.runner(ctx):
        report.instances.append(instance)
        if not instance.passed:
            logger.warning('Suite %s failed at %s: %s', name, instance.params, instance.witness)
        if instance.discrepancy:
            logger.warning('Suite %s discrepancy at %s: %s', name, instance.params,
                           instance.discrepancy)
    report.elapsed = time.perf_counter() - started
    logger.info('Suite %s: %s instances, %s failures, %s discrepancies in %.3fs',
                name, len(report.instances), len(report.failures),
                len(report.discrepancies), report.elapsed)
    return report


def _sublists(pool, max_len: int, min_len: int = 1):
    for size in range(min_len, max_len + 1):
        yield from itertools.combinations(pool, size)


def _is_rz(p: Poly) -> bool:
    """Certified real-rooted, with Newton's inequalities holding on the coefficients."""
    if p.is_zero or not certify_rz(p).all_real:
        return False
    if not newton_consistent(p):
        logger.warning('Real-rooted %s has coefficients that are not log-concave', poly_to_json(p))
        return False
    return True


def _chain_expansion(weights: list, rs) -> Poly:
    """x**rs[-1] sum_k weights[k] B_{k; rs}(x)."""
    total = Poly()
    for k, w in enumerate(weights):
        if w:
            total = total + poly_scale(multi_r_bell(k, rs), w)
    return poly_mul(Poly.monomial(rs[-1]), total)


@register('theorem1', 'Chains of falling-factorial operators on y^n: real-rooted, divisible by x^max', 8)
def _theorem1(ctx: SuiteContext):
    for n in range(ctx.nmax + 1):
        f = Poly.monomial(n)
        for rs in _sublists((1, 2, 3, 4), 3):
            folded = apply_falling_chain(f, rs)
            try:
                divide_by_x_power(folded, max(rs))
                divisible = True
            except InternalInconsistency:
                divisible = False
            all_real = _is_rz(folded)
            rolle = all(rolle_step_check(f, r) for r in set(rs))
            passed = all_real and divisible and rolle
            witness = None if passed else {
                'value': poly_to_json(folded), 'all_real': all_real,
                'divisible': divisible, 'rolle': rolle,
            }
            yield SuiteInstance({'n': n, 'chain': list(rs)}, passed, witness)
    for rs in _sublists((1, 2, 3), 3, min_len=2):
        report = chain_order_report(Poly.monomial(2), rs)
        note = None
        if report['order_dependent']:
            note = f"fold depends on the order of the chain: {report['witness']}"
        yield SuiteInstance({'n': 2, 'chain': list(rs), 'check': 'order'}, True, None, note)


@register('examples2', 'Closed forms for chains applied to (y)_n and (y+n-1)_n', 6)
def _examples2(ctx: SuiteContext):
    chains = list(_sublists((1, 2, 3), 2))
    for n in range(ctx.nmax + 1):
        falling = falling_factorial_poly(n)
        for r in range(4):
            value = apply_falling_op(falling, r)
            closed = falling_op_closed_form(n, r)
            passed = value == closed and _is_rz(value)
            witness = None if passed else {'value': poly_to_json(value),
                                           'closed_form': poly_to_json(closed)}
            yield SuiteInstance({'f': 'falling', 'n': n, 'r': r}, passed, witness)

        signed = [(-1) ** (n - k) * stirling1_unsigned(n, k) for k in range(n + 1)]
        for rs in chains:
            value = apply_falling_chain(falling, rs)
            expansion = _chain_expansion(signed, rs)
            passed = value == expansion and _is_rz(value)
            witness = None if passed else {'value': poly_to_json(value),
                                           'expansion': poly_to_json(expansion)}
            yield SuiteInstance({'f': 'falling', 'n': n, 'chain': list(rs)}, passed, witness)

        if n == 0:
            continue
        shifted = falling_factorial_poly(n, n - 1)
        lah_n = lah_poly(n)
        lah_ok = (shifted == rising_factorial_poly(n)
                  and lah_n == Poly(lah(n, k) for k in range(n + 1))
                  and _is_rz(lah_n))
        yield SuiteInstance({'f': 'lah', 'n': n}, lah_ok,
                            None if lah_ok else {'lah': poly_to_json(lah_n)})

        printed = Poly(
            (-1) ** (n - k) * r_stirling1_unsigned(2 * n - 1, k + n - 1, n - 1)
            for k in range(n + 1)
        )
        printed_ok = printed == falling_factorial_poly(n, 1 - n)
        note = None
        if printed != shifted:
            note = ('printed r-Stirling sum expands (y-n+1)_n, not (y+n-1)_n; '
                    'the correct weights are the unsigned Stirling numbers [n k]')
        unsigned = [stirling1_unsigned(n, k) for k in range(n + 1)]
        for rs in chains:
            value = apply_falling_chain(shifted, rs)
            expansion = _chain_expansion(unsigned, rs)
            passed = value == expansion and _is_rz(value) and printed_ok
            witness = None if passed else {'value': poly_to_json(value),
                                           'expansion': poly_to_json(expansion),
                                           'printed_sum': poly_to_json(printed)}
            yield SuiteInstance({'f': 'shifted-falling', 'n': n, 'chain': list(rs)},
                                passed, witness, note)


def _tree_shapes(n: int, rng: random.Random):
    yield 'path', graphs.path_graph(n)
    yield 'star', graphs.star_graph(n)
    yield 'random-tree', graphs.random_tree(n, rng)


@register('sigma-corollary', 'Sigma polynomials of G u K_r1 u ...: graph route against umbral route', 7)
def _sigma_corollary(ctx: SuiteContext):
    for n in range(1, ctx.nmax + 1):
        for shape, tree in _tree_shapes(n, ctx.rng):
            for r in range(5):
                union = graphs.disjoint_union(tree, graphs.complete_graph(r))
                sigma = graphs.sigma_poly(union, ctx.max_vertices)
                closed = graphs.union_sigma_closed_form(n, r)
                passed = sigma == closed and _is_rz(sigma)
                witness = None if passed else {'sigma': poly_to_json(sigma),
                                               'closed_form': poly_to_json(closed)}
                yield SuiteInstance({'graph': f'{shape}:{n}', 'union': [r]}, passed, witness)

    bases = [('cycle:4', graphs.cycle_graph(4)), ('cycle:5', graphs.cycle_graph(5)),
             ('complete:4', graphs.complete_graph(4))]
    for label, base in bases:
        chromatic = graphs.chromatic_poly(base, ctx.max_vertices)
        base_rz = _is_rz(graphs.sigma_poly(base, ctx.max_vertices))
        for rs in _sublists((1, 2, 3), 2):
            union = base
            for r in rs:
                union = graphs.disjoint_union(union, graphs.complete_graph(r))
            sigma = graphs.sigma_poly(union, ctx.max_vertices)
            product = apply_falling_product(chromatic, rs)
            folded = apply_falling_chain(chromatic, rs)
            passed = sigma == product and (not base_rz or _is_rz(sigma))
            note = None
            if folded != product:
                note = 'the folded chain differs from the graph route; the product reading matches it'
            witness = None if passed else {'sigma': poly_to_json(sigma),
                                           'umbral': poly_to_json(product)}
            yield SuiteInstance({'graph': label, 'union': list(rs)}, passed, witness, note)


PROP5_SEQUENCES = ('ones', 'shift:1', 'shift:2', 'factorials')


@register('prop5', 'V_{n,r} by partial r-Bell extraction against f_n(B_x + r)', 8)
def _prop5(ctx: SuiteContext):
    for name in PROP5_SEQUENCES:
        a = bellpart.parse_seq(name, max(ctx.nmax, 1))
        for n in range(ctx.nmax + 1):
            base_rz = _is_rz(bellpart.v_poly(n, 0, a))
            for r in range(4):
                series = bellpart.v_poly(n, r, a)
                umbral = bellpart.v_poly_umbral(n, r, a)
                passed = series == umbral and (not base_rz or _is_rz(series))
                witness = None if passed else {'series': poly_to_json(series),
                                               'umbral': poly_to_json(umbral)}
                yield SuiteInstance({'seq': name, 'n': n, 'r': r}, passed, witness)


@register('assoc', '2- and 3-associated Bell polynomials and their V_{n,r}', 8)
def _assoc(ctx: SuiteContext):
    for m in (2, 3):
        a = bellpart.parse_seq(f'shift:{m - 1}', max(ctx.nmax, 1))
        for n in range(ctx.nmax + 1):
            table_poly = bellpart.assoc_bell_poly(m, n)
            for r in range(4):
                value = bellpart.v_poly(n, r, a)
                passed = _is_rz(value)
                if r == 0:
                    passed = passed and value == table_poly
                witness = None if passed else {'value': poly_to_json(value),
                                               'table': poly_to_json(table_poly)}
                yield SuiteInstance({'m': m, 'n': n, 'r': r}, passed, witness)


THEOREM3_PRESETS = ('exp', 'log')
LOG_BEHAVIOUR_NMAX = 12


def _theorem3_identities(name: str, family: list[Poly], s: int) -> bool:
    """Closed forms of the -ln(1 - t) family at s = 0, 1, 2."""
    if name != 'log':
        return True
    for n, p in enumerate(family):
        if s == 0:
            expected = rising_factorial_poly(n)
        elif s == 1:
            expected = lah_poly(n)
        elif s == 2:
            expected = Poly()
            for k in range(n + 1):
                expected = expected + poly_scale(bell_poly(k), lah(n, k))
        else:
            return True
        if p != expected:
            return False
    return True


@register('theorem3', 'Iterated umbral families: EGF identity and log-convexity / log-concavity', 8)
def _theorem3(ctx: SuiteContext):
    length = max(ctx.nmax, LOG_BEHAVIOUR_NMAX)
    for name in THEOREM3_PRESETS:
        h = bellpart.family_preset(name).h(length)
        for s in (0, 1, 2):
            try:
                bellpart.iterated_family(h, s, ctx.nmax, verify=True)
                egf_ok = True
            except InternalInconsistency:
                egf_ok = False
            family = bellpart.iterated_family(h, s, length, verify=False)
            identities = _theorem3_identities(name, family, s)
            passed = egf_ok and identities
            yield SuiteInstance({'h': name, 's': s, 'check': 'egf'}, passed,
                                None if passed else {'egf': egf_ok, 'closed_form': identities})

            hypothesis = bellpart.bender_canfield_hypothesis(h, s, length)
            for x0 in SAMPLE_POINTS:
                values = [family[n](x0) for n in range(1, length + 1)]
                normalized = [v / math.factorial(n) for n, v in enumerate(values, start=1)]
                convex = is_log_convex(values, strict_positivity_required=True)
                concave = is_log_concave(normalized, strict_positivity_required=True)
                params = {'h': name, 's': s, 'x': str(x0), 'check': 'log'}
                if not hypothesis.holds:
                    yield SuiteInstance(params, True, None,
                                        'log-concavity hypothesis on A_n(1)/(n-1)! fails; nothing asserted')
                    continue
                passed = convex.holds and (concave.holds or x0 < 1)
                note = None
                if not concave.holds and x0 < 1:
                    note = (f'A_n(x)/n! is not log-concave at x = {x0} '
                            f'(first violation at n = {concave.first_violation_index + 1})')
                witness = None if passed else {'log_convex': convex.to_dict(),
                                               'normalized_log_concave': concave.to_dict()}
                yield SuiteInstance(params, passed, witness, note)


SECTION4_PRESETS = ('exp', 'log1p', 'lah')


@register('section4', 'Families F h^r exp(x h): derivative identity, closed forms, real roots', 8)
def _section4(ctx: SuiteContext):
    for name in SECTION4_PRESETS:
        preset = bellpart.family_preset(name)
        for r in range(min(3, ctx.nmax) + 1):
            try:
                family = preset.family(r, ctx.nmax, verify=True)
            except InternalInconsistency as exc:
                yield SuiteInstance({'family': name, 'r': r}, False, str(exc))
                continue
            for n in range(r, ctx.nmax + 1):
                value = family[n]
                derived = preset.derived_form(n, r)
                passed = value.degree == n - r and value == derived and _is_rz(value)
                note = None
                if preset.printed_form is not None and preset.printed_form(n, r) != value:
                    note = 'printed summation differs from the generating-function value'
                witness = None if passed else {'value': poly_to_json(value),
                                               'derived': poly_to_json(derived)}
                yield SuiteInstance({'family': name, 'n': n, 'r': r}, passed, witness, note)


UMBRAL_SAMPLES = 1000


def random_int_poly(rng: random.Random, max_degree: int, bound: int = 9) -> Poly:
    return Poly(rng.randint(-bound, bound) for _ in range(rng.randint(0, max_degree) + 1))


@register('umbral-identity', 'Two routes to (B_x)_n f(B_x), the Rolle step and B^{n+1} = x (B + 1)^n', 5)
def _umbral_identity(ctx: SuiteContext):
    per_n = -(-UMBRAL_SAMPLES // (ctx.nmax + 1))
    for n in range(ctx.nmax + 1):
        failure = None
        for _ in range(per_n):
            f = random_int_poly(ctx.rng, 8)
            if apply_falling_op(f, n) != direct_falling_op(f, n):
                failure = {'f': poly_to_json(f), 'check': 'operator'}
                break
            r = ctx.rng.randint(1, 4)
            if not rolle_step_check(f, r):
                failure = {'f': poly_to_json(f), 'r': r, 'check': 'rolle'}
                break
        yield SuiteInstance({'n': n, 'samples': per_n}, failure is None, failure)
    bad = [n for n in range(21)
           if bell_poly(n + 1) != poly_mul(X, umbral_eval(poly_shift(Poly.monomial(n), 1)))]
    yield SuiteInstance({'check': 'bell-recurrence', 'n_max': 20}, not bad, bad or None)


@register('dobinski', 'Bell and r-Bell polynomials against truncated Dobinski sums', 10)
def _dobinski(ctx: SuiteContext):
    for n in range(ctx.nmax + 1):
        for r in range(4):
            source = poly_shift(Poly.monomial(n), r)
            exact_poly = r_bell_poly(n, r)
            for x0 in SAMPLE_POINTS:
                exact = float(exact_poly(x0))
                approx = dobinski_oracle(source, x0, ctx.dobinski_terms)
                error = abs(approx - exact) / abs(exact)
                passed = error <= DOBINSKI_TOLERANCE
                yield SuiteInstance({'n': n, 'r': r, 'x': str(x0)}, passed,
                                    None if passed else {'exact': exact, 'oracle': approx})
    expected = [1, 1, 2, 5, 15, 52, 203, 877]
    computed = [int(bell_poly(n)(1)) for n in range(len(expected))]
    independent = [bell_triangle_number(n) for n in range(len(expected))]
    passed = computed == expected == independent
    yield SuiteInstance({'check': 'bell-numbers'}, passed,
                        None if passed else {'computed': computed, 'triangle': independent})


RZCERT_SAMPLES = 500


def random_factored_poly(rng: random.Random, max_degree: int) -> tuple[Poly, int]:
    """
    A polynomial with known root structure and its number of real roots
    (with multiplicity): rational linear factors, some repeated, and
    possibly a quadratic factor without real roots.
    """
    degree = rng.randint(1, max(max_degree, 1))
    p = Poly.constant(rng.choice([-3, -2, -1, 1, 2, 5]))
    real = 0
    remaining = degree
    if remaining >= 2 and rng.random() < 0.3:
        b = rng.randint(-3, 3)
        c = b * b // 4 + rng.randint(1, 4)
        p = poly_mul(p, Poly([c, b, 1]))
        remaining -= 2
    while remaining:
        root = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        mult = min(rng.randint(1, 3), remaining)
        p = poly_mul(p, poly_pow(Poly([-root, 1]), mult))
        real += mult
        remaining -= mult
    return p, real


@register('rzcert', 'Sturm certificates on polynomials with known real-root structure', 8)
def _rzcert(ctx: SuiteContext):
    by_degree: dict[int, list] = {}
    for _ in range(RZCERT_SAMPLES):
        p, real = random_factored_poly(ctx.rng, ctx.nmax)
        by_degree.setdefault(p.degree, []).append((p, real))
    for degree in sorted(by_degree):
        failure = None
        for p, real in by_degree[degree]:
            cert = certify_rz(p)
            if (cert.real_root_count_with_multiplicity != real or cert.all_real != (real == degree)
                    or not newton_consistent(p)):
                failure = {'poly': poly_to_json(p), 'expected_real': real,
                           'certificate': cert.to_dict()}
                break
        yield SuiteInstance({'degree': degree, 'samples': len(by_degree[degree])},
                            failure is None, failure)


PRODUCT_LAW_PAIRS = 100


def _graph_corpus(nmax: int, rng: random.Random):
    for n in range(1, nmax + 1):
        yield f'path:{n}', graphs.path_graph(n)
        yield f'star:{n}', graphs.star_graph(n)
        yield f'complete:{n}', graphs.complete_graph(n)
        yield f'empty:{n}', graphs.edgeless_graph(n)
        if n >= 3:
            yield f'cycle:{n}', graphs.cycle_graph(n)
        yield f'random-tree:{n}', graphs.random_tree(n, rng)
        yield f'gnp:{n}', _random_graph(n, rng)


def _random_graph(n: int, rng: random.Random) -> graphs.Graph:
    return graphs.Graph.from_networkx(nx.gnp_random_graph(n, 0.5, seed=rng.randrange(2 ** 32)))


@register('chromatic', 'Deletion-contraction against exhaustive colouring counts and the product law', 7)
def _chromatic(ctx: SuiteContext):
    for label, g in _graph_corpus(ctx.nmax, ctx.rng):
        chromatic = graphs.chromatic_poly(g, ctx.max_vertices)
        values = [int(chromatic(lam)) for lam in range(5)]
        counts = [graphs.count_proper_colorings(g, lam) for lam in range(5)]
        passed = values == counts
        yield SuiteInstance({'graph': label, 'edges': len(g.edges)}, passed,
                            None if passed else {'polynomial': values, 'counted': counts})
    failure = None
    for _ in range(PRODUCT_LAW_PAIRS):
        g = _random_graph(ctx.rng.randint(0, 5), ctx.rng)
        h = _random_graph(ctx.rng.randint(0, 5), ctx.rng)
        union = graphs.chromatic_poly(graphs.disjoint_union(g, h), ctx.max_vertices)
        product = poly_mul(graphs.chromatic_poly(g), graphs.chromatic_poly(h))
        if union != product:
            failure = {'g': graphs.graph_to_json(g), 'h': graphs.graph_to_json(h)}
            break
    yield SuiteInstance({'check': 'product-law', 'pairs': PRODUCT_LAW_PAIRS}, failure is None, failure)


@register('remark', 'V^{(s)}_{n,r} over a_s = (A^{(s)}_j(1)) for h = -ln(1 - t)', 6)
def _remark(ctx: SuiteContext):
    h = bellpart.cycle_counts(max(ctx.nmax, 1))
    for s in (0, 1):
        a_s = bellpart.iterated_sequence(h, s, max(ctx.nmax, 1))
        expected = (bellpart.factorials(len(a_s)) if s == 0
                    else bellpart.Seq(lah_poly(j)(1) for j in range(1, len(a_s) + 1)))
        yield SuiteInstance({'s': s, 'check': 'sequence'}, a_s == expected,
                            None if a_s == expected else {'sequence': a_s.to_json()})
        for n in range(ctx.nmax + 1):
            base = bellpart.remark_family(h, s, n, 0)
            if not _is_rz(base):
                yield SuiteInstance({'s': s, 'n': n}, True, None,
                                    'V_{n,0} is not real-rooted; nothing asserted')
                continue
            for r in range(1, 4):
                value = bellpart.remark_family(h, s, n, r)
                passed = _is_rz(value)
                yield SuiteInstance({'s': s, 'n': n, 'r': r}, passed,
                                    None if passed else {'value': poly_to_json(value)})


ASSOC_AUDIT_NMAX = 16


@register('tables', 'Randomized audit of the cached number tables', 30)
def _tables(ctx: SuiteContext):
    audits = [
        (NumberKind.STIRLING1_UNSIGNED, None, ctx.nmax),
        (NumberKind.STIRLING1_SIGNED, None, ctx.nmax),
        (NumberKind.STIRLING2, None, ctx.nmax),
        (NumberKind.LAH, None, ctx.nmax),
        (NumberKind.BINOMIAL, None, ctx.nmax),
        (NumberKind.R_STIRLING1_UNSIGNED, 2, ctx.nmax),
        (NumberKind.ASSOC_STIRLING2, 2, min(ctx.nmax, ASSOC_AUDIT_NMAX)),
        (NumberKind.ASSOC_STIRLING2, 3, min(ctx.nmax, ASSOC_AUDIT_NMAX)),
    ]
    for kind, param, n_max in audits:
        mismatches = audit_table(kind, samples=100, seed=ctx.seed, param=param, n_max=n_max)
        yield SuiteInstance({'kind': kind.value, 'param': param, 'n_max': n_max},
                            not mismatches, [list(m) for m in mismatches] or None)
    bad = [n for n in range(ctx.nmax + 1) if bell_number(n) != bell_triangle_number(n)]
    yield SuiteInstance({'check': 'bell-numbers', 'n_max': ctx.nmax}, not bad, bad or None)
