"""
Job Factory Module

Factory selecting the runner for a command, and the error translation
shared by the command line and the JSON service.
"""

import logging

from tools.field import parse_field
from tools.jobs import runners
from tools.jobs.runners import NEGATIVE, USAGE, JobResult, JobSpec
from tools.utils.date_utils import timed
from tools.utils.error_utils import USAGE_ERRORS, ToolkitError, UsageError, format_error_message, log_exception, \
    usage_payload

logger = logging.getLogger(__name__)

COMMANDS = ('imp', 'certify', 'group', 'pfd', 'kill', 'verify', 'verify-identities', 'selftest')


def get_runner(command):
    """
    Factory method to get the runner for a command.

    Args:
        command (str): One of COMMANDS

    Returns:
        function: Runner taking a JobSpec and returning a JobResult

    Raises:
        UsageError: For unknown commands
    """
    name = str(command).lower()
    if name not in COMMANDS:
        logger.error(f"Unsupported command: {command}")
        raise UsageError(f"unknown command {command!r}", hint=f"commands: {', '.join(COMMANDS)}")
    logger.debug(f"Selected {name} runner")
    return getattr(runners, f"run_{name.replace('-', '_')}")


def run_job(job):
    """
    Run one job and translate failures into exit codes.

    Usage errors (bad payloads, unparsable expressions, invalid parameters)
    give exit code 2 with {error, hint}; other library errors such as a point
    that is not on its group give exit code 1.

    Args:
        job (JobSpec): The job

    Returns:
        JobResult: Report and exit code
    """
    try:
        runner = get_runner(job.command)
        if not isinstance(job.payload, dict):
            raise UsageError("payload must be a JSON object")
        with timed(f"job {job.command}") as watch:
            result = runner(job)
        logger.info(f"{job.command} finished with exit code {result.exit_code} in {watch.elapsed_ms} ms")
        return result
    except USAGE_ERRORS as ex:
        logger.warning(f"{job.command}: usage error: {format_error_message(ex)}")
        return JobResult(job.command, usage_payload(ex), USAGE)
    except (KeyError, TypeError, ValueError) as ex:
        log_exception(ex, f"{job.command}: malformed payload", level=logging.WARNING)
        return JobResult(job.command, usage_payload(UsageError(f"malformed payload: {ex}")), USAGE)
    except ToolkitError as ex:
        logger.warning(f"{job.command}: {format_error_message(ex)}")
        return JobResult(job.command, {'error': format_error_message(ex), 'hint': ex.hint}, NEGATIVE)


def job_from_entry(entry, ctx, seed=0, samples=None):
    """
    A JobSpec from one manifest entry {command, field?, seed?, payload}.

    Raises:
        UsageError: When the entry is not an object with a command
    """
    if not isinstance(entry, dict) or 'command' not in entry:
        raise UsageError("manifest entries need a command", hint='{"command": "kill", "payload": {...}}')
    if 'field' in entry:
        ctx = parse_field(entry['field'])
    return JobSpec(entry['command'], entry.get('payload', {}), ctx, int(entry.get('seed', seed)), samples)


def run_manifest(entries, ctx, seed=0, samples=None):
    """
    Run every job of a manifest in order.

    Args:
        entries (list): Manifest entries
        ctx (FieldContext): Default field
        seed (int): Default seed
        samples (int): Default sample count for random modes

    Returns:
        tuple: (list of JobResult, worst exit code)
    """
    if not isinstance(entries, list):
        raise UsageError("a manifest is a JSON array of jobs")
    results = []
    for index, entry in enumerate(entries):
        try:
            job = job_from_entry(entry, ctx, seed, samples)
        except USAGE_ERRORS as ex:
            results.append(JobResult(str(entry.get('command') if isinstance(entry, dict) else None),
                                     usage_payload(ex), USAGE))
            continue
        logger.info(f"manifest job {index + 1}/{len(entries)}: {job.command}")
        results.append(run_job(job))
    worst = max((result.exit_code for result in results), default=0)
    return results, worst
