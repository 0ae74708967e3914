import argparse
import json
import logging
import sys
from fractions import Fraction

from invariants.classical import delta_sl, delta_sp, phi_so
from invariants.g2inv import g2_Htilde, g2_invariants
from liealg.algebras import get_algebra
from mmap.chains import chain_report
from mmap.lift import LiftError, ScalarMismatch
from resources.config import get_configs
from runner import utils
from runner.suite import SuiteRunner
from special.gaudin import commutativity_report, gaudin_experiment, gaudin_quadratic, gaudin_rho, \
    two_point_generators, two_point_span_check
from special.shifts import diagonal_shift, g2_qmf, is_regular, qmf_generators
from ssvec.vectors import SUPPORTED_FAMILIES, central_report, complete_set, get_candidate

config = get_configs()

logger = utils.get_logger('ffkernel', level=getattr(logging, config.log_level), stream=sys.stderr)

OK, FAILED, USAGE = 0, 1, 2


def parse_csv(text):
    """'1,2,-3/2' -> [Fraction(1), Fraction(2), Fraction(-3, 2)]."""
    try:
        return [Fraction(v.strip()) for v in text.split(',') if v.strip()]
    except ValueError:
        raise ValueError("Invalid list of rationals: '{}'".format(text))


def emit(report):
    print(json.dumps(report, default=str))


def family_setup(family, n):
    """(spec, invariant generators, complete set of candidates) of one family."""
    if family == 'A':
        return get_algebra('sl', n), [delta_sl(n, k) for k in range(2, n + 1)], complete_set('A', n)
    if family == 'C':
        return get_algebra('sp', n), [delta_sp(n, k) for k in range(1, n // 2 + 1)], complete_set('C', n)
    if family == 'BD':
        return get_algebra('so', n), [phi_so(n, k) for k in range(1, (n - 1) // 2 + 1)], complete_set('BD', n)
    if family == 'G2':
        delta2, _ = g2_invariants()
        return get_algebra('g2'), [delta2, g2_Htilde()], complete_set('G2')
    raise ValueError("Invalid family for this command: {}".format(family))


def cmd_verify(args):
    stopwatch = utils.Stopwatch()
    report = central_report(get_candidate(args.family, args.n, args.k), args.jobs)
    report['wall_time'] = stopwatch.elapsed()
    emit(report)
    return OK if report['central'] else FAILED


def cmd_mmap(args):
    report = chain_report(args.family, args.n, args.k, args.r)
    emit(report)
    return OK if report['match'] else FAILED


def cmd_gaudin(args):
    zbar = parse_csv(args.z) if args.z else list(range(1, args.sites + 1))
    if len(zbar) != args.sites:
        raise ValueError("Invalid points: {} given for {} sites".format(len(zbar), args.sites))
    spec, H_list, candidates = family_setup(args.family, args.n)
    elems = [gaudin_quadratic(spec, k, zbar) for k in range(1, args.sites + 1)]
    images = [gaudin_rho(spec, c.value, zbar) for c in candidates]
    if args.sites == 2:
        report = commutativity_report(spec, elems + images + two_point_generators(spec, H_list), args.jobs)
        report['two_point_span'] = two_point_span_check(spec, candidates, H_list, zbar)
    else:
        report = commutativity_report(spec, elems, args.jobs)
        report['images'] = commutativity_report(spec, images, args.jobs)
        # images against the quadratics are reported only
        report['candidates'] = gaudin_experiment(spec, candidates, zbar)
    report['sites'] = args.sites
    emit(report)
    ok = report['failures'] == 0 and report.get('two_point_span', True)
    return OK if ok and not report.get('images', {}).get('failures') else FAILED


def cmd_qmf(args):
    text, diag = args.mu, args.diag
    if text.endswith('-diag'):
        text, diag = text[:-len('-diag')], True
    entries = parse_csv(text)
    spec = get_algebra('g2') if args.family == 'G2' else family_setup(args.family, args.n)[0]
    mu = diagonal_shift(spec, entries) if diag else entries
    if args.family == 'G2':
        result = g2_qmf(mu, args.jobs)
        report = {'generators': len(result['generators']), 'failures': len(result['failures']),
                  'failed_pairs': [f['pair'] for f in result['failures']],
                  'y_parts': {str(d): v for d, v in result['y_parts'].items()},
                  'centralizer_dim': result['centralizer_dim']}
        emit(report)
        return OK if not result['failures'] and all(result['y_parts'].values()) else FAILED
    _, H_list, _ = family_setup(args.family, args.n)
    if not is_regular(spec, mu):
        logger.warning("Shift is not regular; the generators need not form a maximal subalgebra")
    generators = qmf_generators(spec, mu, H_list)
    report = commutativity_report(spec, generators, args.jobs)
    report['generators'] = len(generators)
    emit(report)
    return OK if report['failures'] == 0 else FAILED


def cmd_emit(args):
    candidate = get_candidate(args.what, args.n, args.k)
    with open(args.out, 'w', encoding='utf-8') as f:
        json.dump(candidate.to_dict(), f, indent=2)
    logger.info("Saved {} to {}".format(candidate, args.out))
    emit({'out': args.out, 'name': candidate.meta['name'], 'terms': len(candidate.value),
          'symbol_terms': len(candidate.symbol())})
    return OK


COMMANDS = {'verify': cmd_verify, 'mmap': cmd_mmap, 'gaudin': cmd_gaudin, 'qmf': cmd_qmf, 'emit': cmd_emit}


def build_parser():
    parser = argparse.ArgumentParser(description='Exact Segal-Sugawara vectors and their checks')
    parser.add_argument('--suite', action='store_true', help='run the acceptance grid')
    parser.add_argument('--resume', type=str, default=None, help='rerun the failed checks of this report')
    parser.add_argument('--jobs', type=int, default=None, help='worker processes')
    sub = parser.add_subparsers(dest='command')

    verify = sub.add_parser('verify', help='[H[-1], S] = 0 for one vector')
    verify.add_argument('--family', required=True, choices=SUPPORTED_FAMILIES)
    verify.add_argument('--n', type=int)
    verify.add_argument('--k', type=int)

    mmap = sub.add_parser('mmap', help='m^r of a named invariant against its closed form')
    mmap.add_argument('--family', required=True, choices=SUPPORTED_FAMILIES)
    mmap.add_argument('--n', type=int)
    mmap.add_argument('--k', type=int)
    mmap.add_argument('--r', type=int, default=1)

    gaudin = sub.add_parser('gaudin', help='commutativity at evaluation points')
    gaudin.add_argument('--family', required=True, choices=['A', 'C', 'BD', 'G2'])
    gaudin.add_argument('--n', type=int)
    gaudin.add_argument('--sites', type=int, default=2)
    gaudin.add_argument('--z', type=str, default=None, help='comma separated points, default 1..sites')

    qmf = sub.add_parser('qmf', help='quantum shift subalgebra generators')
    qmf.add_argument('--family', required=True, choices=['A', 'C', 'BD', 'G2'])
    qmf.add_argument('--n', type=int)
    qmf.add_argument('--mu', required=True, type=str, help='comma separated values mu(x_a)')
    qmf.add_argument('--diag', action='store_true', help='--mu lists diagonal matrix entries (same as a -diag suffix)')

    out = sub.add_parser('emit', help='write one vector as JSON')
    out.add_argument('--what', required=True, choices=SUPPORTED_FAMILIES)
    out.add_argument('--n', type=int)
    out.add_argument('--k', type=int)
    out.add_argument('--out', required=True, type=str)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.jobs = utils.resolve_jobs(args.jobs, config.get('jobs'))
        if args.suite or args.resume:
            if args.resume:
                runner = SuiteRunner.from_report(args.resume, config, args.jobs, logger)
            else:
                runner = SuiteRunner.from_config(config, args.jobs, logger)
            return OK if runner.fit() else FAILED
        if args.command is None:
            parser.print_usage(sys.stderr)
            return USAGE
        return COMMANDS[args.command](args)
    except (LiftError, ScalarMismatch) as e:
        logger.error(str(e))
        return FAILED
    except (ValueError, AssertionError, IOError) as e:
        logger.error(str(e))
        return USAGE


if __name__ == '__main__':
    sys.exit(main())
