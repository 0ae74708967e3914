import json
import logging
import os
import sys
import time


def save_report(report, report_dir, name, logger=None):
    """Saves a suite or command report at '{report_dir}/{name}.json'.
    The previous report of the same name is kept as '{name}.prev.json'.

    Args:
        report (dict): JSON-serialisable report (rationals already rendered as 'p/q')
        report_dir (string): directory where the report is to be saved
        name (string): report file stem
        logger (logging.Logger) optional: where progress messages go

    Returns:
        path of the written file
    """

    def log_info(message):
        if logger is not None:
            logger.info(message)

    if not os.path.exists(report_dir):
        log_info("Report directory does not exist. Creating {}".format(report_dir))
        os.makedirs(report_dir)

    file_path = os.path.join(report_dir, '{}.json'.format(name))
    if os.path.exists(file_path):
        os.replace(file_path, os.path.join(report_dir, '{}.prev.json'.format(name)))
    log_info("Saving report {}".format(file_path))
    with open(file_path, 'w', encoding='utf-8') as f:
        json.dump(report, f, indent=2, ensure_ascii=False)
    return file_path


def load_report(report_path):
    """Loads a report written by save_report.

    Args:
        report_path (string): path to the report to be loaded

    Returns:
        report dict
    """
    if not os.path.exists(report_path):
        raise IOError("Report '{}' does not exist".format(report_path))
    with open(report_path, 'r', encoding='utf-8') as f:
        return json.load(f)


def get_logger(name, level=logging.INFO, stream=None):
    logger = logging.getLogger(name)
    logger.setLevel(level)
    if logger.handlers:
        return logger
    # Logging to console
    stream_handler = logging.StreamHandler(stream or sys.stdout)
    formatter = logging.Formatter(
        '%(asctime)s [%(threadName)s] %(levelname)s %(name)s - %(message)s')
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)

    return logger


def get_kernel_logger(name):
    """Child of the 'ffkernel' logger; handlers live on the parent configured by get_logger."""
    return logging.getLogger('ffkernel.{}'.format(name))


def resolve_jobs(flag_value=None, config_value=None):
    """--jobs wins over FFKERNEL_JOBS, which wins over the YAML value."""
    for value in (flag_value, os.environ.get('FFKERNEL_JOBS'), config_value):
        if value is None or value == '':
            continue
        jobs = int(value)
        if jobs < 1:
            raise ValueError("Invalid number of jobs: {}".format(value))
        return jobs
    return os.cpu_count() or 1


class RunningAverage:
    """Computes and stores the average wall time of finished checks
    """

    def __init__(self):
        self.count = 0
        self.sum = 0.0
        self.avg = 0.0

    def update(self, value, n=1):
        self.count += n
        self.sum += value * n
        self.avg = self.sum / self.count


class Stopwatch:
    def __init__(self):
        self.start = time.perf_counter()

    def elapsed(self):
        return round(time.perf_counter() - self.start, 3)
