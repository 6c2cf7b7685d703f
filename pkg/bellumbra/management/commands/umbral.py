"""
``umbral``: compute Bell-umbra families, certify real-rootedness and run the
verification suites. Every result is written to stdout as JSON (exact values
as strings) or, with --csv, as one CSV row per polynomial.

Exit status: 0 on success, 1 on bad input, 2 when an assertion fails
(--expect-rz, a failing suite, or a violated internal identity).
"""

import argparse
import csv
import json
import logging
from dataclasses import dataclass
from typing import Any

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.db import DatabaseError

from bellumbra import bellpart, graphs, suites
from bellumbra.combinat import NumberKind, triangle
from bellumbra.exactmath import InternalInconsistency, poly_from_json, poly_to_json
from bellumbra.models import SuiteRun
from bellumbra.rzcert import certify_rz
from bellumbra.umbra import (
    DOBINSKI_TERMS, READINGS, bell_poly, chain_order_report, dobinski_oracle,
    lah_poly, r_bell_poly, umbral_apply,
)

logger = logging.getLogger(__name__)

HISTORY_LIMIT = 20


@dataclass
class Output:
    payload: Any
    rows: list[list[str]] | None = None
    failure: str | None = None


def parse_chain(text: str) -> list[int]:
    """"1,2,3" -> [1, 2, 3]; the empty string is the empty chain."""
    text = text.strip()
    if not text:
        return []
    try:
        rs = [int(part) for part in text.split(',')]
    except ValueError as exc:
        raise ValueError(f"Chain must be comma-separated integers, got {text!r}") from exc
    if any(r < 0 for r in rs):
        raise ValueError(f"Chain entries must be non-negative, got {rs}")
    return rs


def _polys_json(polys) -> list:
    return [poly_to_json(p) for p in polys]


class Command(BaseCommand):
    help = 'Bell umbra operator algebra, real-rootedness certificates and verification suites'

    def add_arguments(self, parser):
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--csv', action='store_true',
                            help='Write polynomial coefficient rows as CSV instead of JSON')
        sub = parser.add_subparsers(dest='subcommand', required=True)

        p = sub.add_parser('bell', parents=[common], help='Bell polynomial B_n(x)')
        p.add_argument('n', type=int)

        p = sub.add_parser('rbell', parents=[common], help='r-Bell polynomial B_{n,r}(x)')
        p.add_argument('n', type=int)
        p.add_argument('r', type=int)

        p = sub.add_parser('lah', parents=[common], help='Lah polynomial L_n(x)')
        p.add_argument('n', type=int)

        p = sub.add_parser('umbra-apply', parents=[common],
                           help='Apply a chain of falling-factorial operators to a polynomial')
        p.add_argument('--poly', required=True, help='JSON array of coefficients, lowest degree first')
        p.add_argument('--chain', default='', help='Comma-separated r values, applied first to last')
        p.add_argument('--reading', choices=READINGS, default='fold',
                       help='fold applies the chain first to last and divides by x^max(r) '
                            'only when the largest r is last; product is order free')
        p.add_argument('--order-report', action='store_true',
                       help='Also fold every ordering of the chain and report order dependence')

        p = sub.add_parser('rz-certify', parents=[common], help='Sturm certificate of real-rootedness')
        p.add_argument('--poly', required=True)
        p.add_argument('--expect-rz', action='store_true',
                       help='Exit with status 2 unless every root is real')

        p = sub.add_parser('numbers', parents=[common], help='Triangle of special numbers')
        p.add_argument('--kind', required=True, choices=[k.value for k in NumberKind])
        p.add_argument('--rows', type=int, required=True)
        p.add_argument('--param', type=int, help='r for r-stirling1, m for assoc-stirling2')

        p = sub.add_parser('partial-bell', parents=[common], help='Partial Bell value B_{n,k}(a)')
        p.add_argument('n', type=int)
        p.add_argument('k', type=int)
        p.add_argument('--seq', required=True,
                       help='ones, shift:m, factorials, cycle, alt-cycle or a JSON array')
        p.add_argument('--r', type=int, default=0, help='With r > 0, the partial r-Bell value')
        p.add_argument('--b', help='Second sequence for --r (default e + L a)')

        p = sub.add_parser('vpoly', parents=[common], help='V_{n,r}(x) over a sequence')
        p.add_argument('n', type=int)
        p.add_argument('r', type=int)
        p.add_argument('--seq', required=True)
        p.add_argument('--check', action='store_true',
                       help='Also compute f_n(B_x + r) and exit with status 2 on disagreement')

        p = sub.add_parser('family', parents=[common],
                           help='Polynomial family of a preset h: iterated (--s), convolution (--r), '
                                'or V^{(s)}_{n,r} over A^{(s)}_j(1) (both)')
        p.add_argument('--preset', required=True, choices=sorted(bellpart.FAMILY_PRESETS))
        p.add_argument('--s', type=int, default=0, help='Iteration level')
        p.add_argument('--r', type=int, default=0, help='Convolution order')
        p.add_argument('--nmax', type=int, default=8)

        for name, text in (('sigma', 'Sigma polynomial of a graph'),
                           ('chromatic', 'Chromatic polynomial of a graph')):
            p = sub.add_parser(name, parents=[common], help=text)
            p.add_argument('--graph', required=True,
                           help='Preset (path:n, cycle:n, complete:n, star:n, empty:n), inline JSON or file')
            p.add_argument('--union', action='append', default=[],
                           help='Extra component joined disjointly, e.g. complete:3 (repeatable)')
            p.add_argument('--max-vertices', type=int)

        p = sub.add_parser('verify', parents=[common], help='Run a verification suite')
        p.add_argument('--suite', required=True)
        p.add_argument('--nmax', type=int)
        p.add_argument('--seed', type=int)
        p.add_argument('--record', action='store_true', help='Store the report in the database')

        sub.add_parser('suites', parents=[common], help='List the verification suites')

        p = sub.add_parser('history', parents=[common], help='Recorded suite runs, newest first')
        p.add_argument('--suite')
        p.add_argument('--limit', type=int, default=HISTORY_LIMIT)

        p = sub.add_parser('dobinski', parents=[common],
                           help='Truncated Dobinski sum e^-x sum_k f(k) x^k / k!')
        p.add_argument('--poly', required=True)
        p.add_argument('--x', required=True, help='Non-negative rational sample point')
        p.add_argument('--terms', type=int)

    def handle(self, *args, **options):
        subcommand = options['subcommand']
        handler = getattr(self, 'handle_' + subcommand.replace('-', '_'))
        try:
            output = handler(options)
        except (ValueError, json.JSONDecodeError, OSError, OverflowError) as exc:
            logger.error('umbral %s: %s', subcommand, exc)
            raise CommandError(str(exc)) from exc
        except InternalInconsistency as exc:
            logger.error('umbral %s: internal inconsistency: %s', subcommand, exc)
            raise CommandError(f"Internal inconsistency: {exc}", returncode=2) from exc
        self.emit(output, options['csv'])
        if output.failure:
            raise CommandError(output.failure, returncode=2)

    def emit(self, output: Output, as_csv: bool):
        if as_csv and output.rows is not None:
            writer = csv.writer(self.stdout, lineterminator='\n')
            for index, row in enumerate(output.rows):
                writer.writerow([index] + row)
            return
        self.stdout.write(json.dumps(output.payload, indent=2))

    def _max_vertices(self, options) -> int:
        if options.get('max_vertices') is not None:
            return options['max_vertices']
        return getattr(settings, 'UMBRAL_RZ_MAX_VERTICES', graphs.DEFAULT_MAX_VERTICES)

    def handle_bell(self, options):
        p = bell_poly(options['n'])
        return Output(poly_to_json(p), [poly_to_json(p)])

    def handle_rbell(self, options):
        p = r_bell_poly(options['n'], options['r'])
        return Output(poly_to_json(p), [poly_to_json(p)])

    def handle_lah(self, options):
        p = lah_poly(options['n'])
        return Output(poly_to_json(p), [poly_to_json(p)])

    def handle_umbra_apply(self, options):
        f = poly_from_json(options['poly'])
        rs = parse_chain(options['chain'])
        result = umbral_apply(f, rs, options['reading'])
        payload = result.to_dict()
        if options['order_report']:
            payload['order_report'] = chain_order_report(f, rs)
        return Output(payload, [poly_to_json(result.value)])

    def handle_rz_certify(self, options):
        p = poly_from_json(options['poly'])
        cert = certify_rz(p)
        failure = None
        if options['expect_rz'] and not cert.all_real:
            failure = (f"Expected only real roots, found {cert.real_root_count_with_multiplicity} "
                       f"of {cert.degree}")
        return Output(cert.to_dict(), failure=failure)

    def handle_numbers(self, options):
        kind = NumberKind(options['kind'])
        if options['rows'] < 0:
            raise ValueError(f"Row count must be non-negative, got {options['rows']}")
        rows = triangle(kind, options['rows'], options['param'])
        table_rows = [[str(v) for v in row] for row in rows]
        return Output(table_rows, table_rows)

    def handle_partial_bell(self, options):
        n, k = options['n'], options['k']
        length = max(n + 1, 1)
        a = bellpart.parse_seq(options['seq'], length)
        if options['r']:
            b = bellpart.parse_seq(options['b'], length + 1) if options['b'] else bellpart.e_plus(a)
            value = bellpart.partial_r_bell(n, k, bellpart.RBellSpec(a, b, options['r']))
        else:
            value = bellpart.partial_bell(n, k, a)
        return Output(str(value))

    def handle_vpoly(self, options):
        n, r = options['n'], options['r']
        a = bellpart.parse_seq(options['seq'], max(n, 1))
        p = bellpart.v_poly(n, r, a)
        if not options['check']:
            return Output(poly_to_json(p), [poly_to_json(p)])
        umbral = bellpart.v_poly_umbral(n, r, a)
        failure = None if umbral == p else 'Series and umbral computations of V_{n,r} disagree'
        return Output({'series': poly_to_json(p), 'umbral': poly_to_json(umbral),
                       'agree': umbral == p}, [poly_to_json(p)], failure)

    def handle_family(self, options):
        preset = bellpart.family_preset(options['preset'])
        s, r, nmax = options['s'], options['r'], options['nmax']
        if nmax < 0:
            raise ValueError(f"nmax must be non-negative, got {nmax}")
        if s < 0 or r < 0:
            raise ValueError(f"--s and --r must be non-negative, got s={s}, r={r}")
        if s and r:
            h = preset.h(max(nmax, 1))
            family = [bellpart.remark_family(h, s, n, r) for n in range(nmax + 1)]
        elif r:
            family = preset.family(r, nmax)
        else:
            family = bellpart.iterated_family(preset.h(max(nmax, 1)), s, nmax)
        rows = _polys_json(family)
        return Output(rows, rows)

    def _graph(self, options) -> graphs.Graph:
        g = graphs.parse_graph(options['graph'])
        for extra in options['union']:
            g = graphs.disjoint_union(g, graphs.parse_graph(extra))
        return g

    def handle_sigma(self, options):
        g = self._graph(options)
        p = graphs.sigma_poly(g, self._max_vertices(options))
        return Output({'graph': graphs.graph_to_json(g), 'sigma': poly_to_json(p)}, [poly_to_json(p)])

    def handle_chromatic(self, options):
        g = self._graph(options)
        limit = self._max_vertices(options)
        p = graphs.chromatic_poly(g, limit)
        return Output({
            'graph': graphs.graph_to_json(g),
            'chromatic': poly_to_json(p),
            'alpha': graphs.alpha_coeffs(g, limit),
        }, [poly_to_json(p)])

    def handle_verify(self, options):
        seed = options['seed']
        if seed is None:
            seed = getattr(settings, 'UMBRAL_RZ_SEED', 0)
        report = suites.run_suite(
            options['suite'],
            nmax=options['nmax'],
            seed=seed,
            max_vertices=getattr(settings, 'UMBRAL_RZ_MAX_VERTICES', graphs.DEFAULT_MAX_VERTICES),
            dobinski_terms=getattr(settings, 'UMBRAL_RZ_DOBINSKI_TERMS', DOBINSKI_TERMS),
        )
        payload = report.to_dict()
        if options['record']:
            try:
                payload['run_id'] = SuiteRun.record(report).id
            except DatabaseError as exc:
                raise ValueError(f"Could not record the run ({exc}); run `manage.py migrate` first") from exc
        failure = None
        if not report.all_passed:
            failure = f"Suite {report.suite_name} failed {len(report.failures)} instance(s)"
        return Output(payload, failure=failure)

    def handle_suites(self, options):
        return Output(suites.list_suites())

    def handle_history(self, options):
        if options['limit'] < 1:
            raise ValueError(f"Limit must be positive, got {options['limit']}")
        runs = SuiteRun.objects.all()
        if options['suite']:
            runs = runs.filter(suite_name=options['suite'])
        try:
            return Output([run.summary() for run in runs[:options['limit']]])
        except DatabaseError as exc:
            raise ValueError(f"Could not read run history ({exc}); run `manage.py migrate` first") from exc

    def handle_dobinski(self, options):
        f = poly_from_json(options['poly'])
        terms = options['terms']
        if terms is None:
            terms = getattr(settings, 'UMBRAL_RZ_DOBINSKI_TERMS', DOBINSKI_TERMS)
        value = dobinski_oracle(f, options['x'], terms)
        return Output({'x': options['x'], 'terms': terms, 'value': value})
