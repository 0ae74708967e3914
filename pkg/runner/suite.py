import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

from natsort import natsorted

from invariants.classical import delta_sl
from liealg.algebras import get_algebra
from mmap.chains import chain_report
from mmap.g2probe import g2_probe_suite
from runner import utils
from special.gaudin import commutativity_report, gaudin_quadratic, gaudin_rho
from special.shifts import diagonal_shift, qmf_generators
from ssvec.comlab import c_constants_probe
from ssvec.vectors import central_report, complete_set, get_candidate, verify_complete_set

# m^r chains checked against their closed forms: (family, n, k, r)
SCALAR_CHAINS = [('A', 4, 4, 1), ('A', 5, 5, 1), ('A', 5, 4, 1), ('A', 5, 5, 2),
                 ('C', 4, 2, 1), ('C', 6, 2, 1), ('C', 6, 3, 1), ('C', 6, 3, 2),
                 ('BD', 7, 2, 1), ('BD', 8, 2, 1), ('BD', 7, 3, 1), ('BD', 8, 3, 1),
                 ('Pf', 8, None, 1), ('G2', None, None, 1), ('G2', None, None, 2)]


class Check(NamedTuple):
    name: str
    tag: str
    kind: str
    args: tuple
    gating: bool = True


# ---------------------------------------------------------------------------
# check bodies, all top level so that worker processes can unpickle them

def _central(family, n, k):
    report = central_report(get_candidate(family, n, k))
    return report['central'], report


def _chain(family, n, k, r):
    report = chain_report(family, n, k, r)
    return report['match'], report


def _complete(family, n):
    candidates = complete_set(family, n)
    independent = verify_complete_set(candidates)
    return independent, {'family': family, 'n': n, 'names': [c.meta['name'] for c in candidates]}


def _g2_probe():
    rows = g2_probe_suite()
    return all(row['ok'] for row in rows), {'failed': [row['check'] for row in rows if not row['ok']]}


def _c_constants(m):
    report = c_constants_probe(m)
    detail = {k: report[k] for k in ('m', 'rank', 'unknowns', 'consistent', 'determined', 'y_independent',
                                     'symmetric', 'signs')}
    detail['total'] = str(report['total'])
    detail['c23'] = {'{},{}'.format(j, p): str(v) for (j, p), v in sorted(report['c23'].items())}
    return bool(report['matches']), detail


def _gaudin(n, zbar):
    spec = get_algebra('sl', n)
    quadratics = [gaudin_quadratic(spec, k, zbar) for k in range(1, len(zbar) + 1)]
    images = [gaudin_rho(spec, c.value, zbar) for c in complete_set('A', n)]
    report = commutativity_report(spec, quadratics)
    report['images'] = commutativity_report(spec, images)
    return report['failures'] == 0 and report['images']['failures'] == 0, report


def _qmf(n, entries):
    spec = get_algebra('sl', n)
    H_list = [delta_sl(n, k) for k in range(2, n + 1)]
    report = commutativity_report(spec, qmf_generators(spec, diagonal_shift(spec, entries), H_list))
    return report['failures'] == 0, report


CHECK_KINDS = {
    'central': _central,
    'chain': _chain,
    'complete': _complete,
    'g2_probe': _g2_probe,
    'c_constants': _c_constants,
    'gaudin': _gaudin,
    'qmf': _qmf,
}


def run_check(check):
    """Runs one check in the current process.

    Returns:
        dict row {check, tag, ok, gating, seconds, detail}; exceptions become failed rows
    """
    start = time.perf_counter()
    try:
        ok, detail = CHECK_KINDS[check.kind](*check.args)
    except Exception as e:
        ok, detail = False, {'error': '{}: {}'.format(type(e).__name__, e)}
    return {'check': check.name, 'tag': check.tag, 'ok': bool(ok), 'gating': check.gating,
            'seconds': round(time.perf_counter() - start, 3), 'detail': detail}


def build_checks(suite_grid, extended=False):
    """Expands the YAML grid into the list of checks, ordered naturally by name."""
    checks = []
    for family in ('A', 'C', 'BD'):
        for n, k in suite_grid.get(family, []):
            checks.append(Check('central/{}/{}/{}'.format(family, n, k), family, 'central', (family, n, k)))
    for n in suite_grid.get('Pf', []):
        checks.append(Check('central/Pf/{}'.format(n), 'Pf', 'central', ('Pf', n, None)))
    if suite_grid.get('G2'):
        checks.append(Check('central/G2', 'G2', 'central', ('G2', None, None)))
        checks.append(Check('probe/G2', 'G2', 'g2_probe', ()))
        checks.append(Check('complete/G2', 'G2', 'complete', ('G2', None)))
    for family, n, k, r in SCALAR_CHAINS:
        name = 'chain/{}/{}/{}/{}'.format(family, n, k, r)
        checks.append(Check(name, family, 'chain', (family, n, k, r)))
    for n in (2, 3, 4):
        checks.append(Check('complete/A/{}'.format(n), 'A', 'complete', ('A', n)))
    checks.append(Check('complete/C/4', 'C', 'complete', ('C', 4)))
    checks.append(Check('complete/BD/7', 'BD', 'complete', ('BD', 7)))
    for m in (4, 5):
        checks.append(Check('c_constants/{}'.format(m), 'sl2', 'c_constants', (m,)))
    if extended:
        checks.append(Check('central/BD/7/3', 'BD', 'central', ('BD', 7, 3), gating=False))
        checks.append(Check('c_constants/6', 'sl2', 'c_constants', (6,)))
        checks.append(Check('gaudin/A/2', 'A', 'gaudin', (2, (1, 2, 4)), gating=False))
        checks.append(Check('qmf/A/3', 'A', 'qmf', (3, (1, 2, -3)), gating=False))
    return natsorted(checks, key=lambda c: c.name)


class SuiteRunner:
    """Runs the acceptance grid and writes a report.

    Args:
        checks (list): Check tuples to run
        report_dir (string): directory where the report is saved
        jobs (int): number of worker processes, 1 runs everything in-process
        report_name (string): report file stem
        logger (logging.Logger): where progress and the result table go
    """

    def __init__(self, checks, report_dir, jobs=1, report_name='suite', logger=None):
        if logger is None:
            self.logger = utils.get_logger('SuiteRunner', level=logging.DEBUG)
        else:
            self.logger = logger

        self.checks = list(checks)
        self.report_dir = report_dir
        self.jobs = jobs
        self.report_name = report_name
        self.rows = []
        self.timing = utils.RunningAverage()
        self.logger.info("Suite of {} checks on {} jobs".format(len(self.checks), self.jobs))

    @classmethod
    def from_config(cls, config, jobs=None, logger=None):
        jobs = utils.resolve_jobs(jobs, config.get('jobs'))
        checks = build_checks(config.suite_grid, config.get('suite_extended', False))
        return cls(checks, config.report_dir, jobs=jobs, logger=logger)

    @classmethod
    def from_report(cls, report_path, config, jobs=None, logger=None):
        """Reruns only the checks that did not pass in a previous report."""
        runner = cls.from_config(config, jobs, logger)
        runner.logger.info("Loading report '{}'...".format(report_path))
        previous = utils.load_report(report_path)
        passed = {row['check'] for row in previous.get('rows', []) if row['ok']}
        runner.rows = [row for row in previous.get('rows', []) if row['ok']]
        runner.checks = [c for c in runner.checks if c.name not in passed]
        runner.logger.info("{} checks passed before, {} to rerun".format(len(passed), len(runner.checks)))
        return runner

    def fit(self):
        """Runs the remaining checks, saves the report and returns True when every gating check passed."""
        stopwatch = utils.Stopwatch()
        if self.jobs > 1 and len(self.checks) > 1:
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                for row in pool.map(run_check, self.checks):
                    self._record(row)
        else:
            for check in self.checks:
                self._record(run_check(check))

        self.rows = natsorted(self.rows, key=lambda row: row['check'])
        passed = all(row['ok'] for row in self.rows if row['gating'])
        report = {'passed': passed, 'seconds': stopwatch.elapsed(), 'rows': self.rows}
        utils.save_report(report, self.report_dir, self.report_name, self.logger)
        self.logger.info("\n" + self.table())
        self.logger.info("Suite {} in {}s (mean {:.3f}s per check)".format(
            'passed' if passed else 'FAILED', report['seconds'], self.timing.avg))
        return passed

    def _record(self, row):
        self.timing.update(row['seconds'])
        level = logging.INFO if row['ok'] or not row['gating'] else logging.ERROR
        self.logger.log(level, "{} [{}]: {}".format(row['check'], row['tag'], 'ok' if row['ok'] else 'FAILED'))
        self.rows.append(row)

    def table(self):
        width = max([len(row['check']) for row in self.rows] + [5])
        lines = ['{:<{w}}  {:<4}  {:<7}  {:>8}'.format('check', 'tag', 'verdict', 'seconds', w=width)]
        for row in self.rows:
            verdict = 'ok' if row['ok'] else ('FAILED' if row['gating'] else 'failed*')
            lines.append('{:<{w}}  {:<4}  {:<7}  {:>8.3f}'.format(row['check'], row['tag'], verdict,
                                                                 row['seconds'], w=width))
        return '\n'.join(lines)
