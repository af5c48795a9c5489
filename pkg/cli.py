"""
Command Line Module

Front end for the toolkit: `wound-tool [flags] <command> [payload]` runs one
job, `wound-tool --manifest jobs.json` runs a batch. Payloads are JSON given
inline or as a file path; reports are JSON on stdout or in the --json file.
"""

import argparse
import json
import logging
import os
import sys

from tools.field import parse_field
from tools.jobs import COMMANDS, USAGE, JobSpec, configure_logging, get_settings, run_job, run_manifest
from tools.utils.error_utils import USAGE_ERRORS, UsageError, format_error_message, usage_payload
from tools.utils.file_utils import read_json, safe_json_write

logger = logging.getLogger(__name__)


def _parse_args(argv=None):
    parser = argparse.ArgumentParser(
        prog="wound-tool",
        description="Exact algebra over characteristic-p function fields with replayable JSON reports.",
    )
    parser.add_argument("--field", help="base field as p,e,r (default WOUND_FIELD or 2,1,1)")
    parser.add_argument("--seed", type=int, help="seed for randomized checks (default WOUND_SEED or 0)")
    parser.add_argument("--samples", type=int, help="sample count for random-mode claims")
    parser.add_argument("--json", dest="out_json_path", help="write the report here instead of stdout")
    parser.add_argument("--manifest", dest="manifest_path", help="JSON array of {command, payload} jobs")
    parser.add_argument("--log-level", dest="log_level", help="logging level (default WOUND_LOG_LEVEL or INFO)")
    parser.add_argument("command", nargs="?", choices=COMMANDS)
    parser.add_argument("payload", nargs="?", help="JSON object, or a path to a JSON file")
    return parser.parse_args(argv)


def load_payload(text):
    """
    Decode a payload argument.

    Args:
        text (str): Inline JSON, a path to a JSON file, or None

    Returns:
        dict/list: Decoded payload ({} when absent)

    Raises:
        UsageError: When the text is neither JSON nor a readable JSON file
    """
    if text is None:
        return {}
    try:
        if text.lstrip().startswith(('{', '[')):
            return json.loads(text)
        if os.path.isfile(text):
            return read_json(text)
    except ValueError as ex:
        raise UsageError(f"payload is not valid JSON: {ex}") from ex
    raise UsageError(f"no such payload file {text!r}", hint="pass inline JSON such as '{\"G\": \"0\"}' or a file path")


def emit(data, out_json_path=None):
    """Print the report, or write it to ``out_json_path``."""
    if out_json_path:
        if not safe_json_write(out_json_path, data):
            logger.error(f"Could not write report to {out_json_path}")
            return False
        logger.info(f"Report written to {out_json_path}")
        return True
    print(json.dumps(data, indent=2, sort_keys=True))
    return True


def main(argv=None):
    """
    Run the command line.

    Returns:
        int: 0 success, 1 domain negative, 2 usage error
    """
    args = _parse_args(argv)
    try:
        settings = get_settings()
        configure_logging(args.log_level or settings.log_level)
        ctx = parse_field(args.field or settings.field)
        seed = settings.seed if args.seed is None else args.seed
        samples = settings.random_samples if args.samples is None else args.samples

        if args.manifest_path:
            entries = load_payload(args.manifest_path)
            results, exit_code = run_manifest(entries, ctx, seed, samples)
            emit([result.to_json() for result in results], args.out_json_path)
            return exit_code

        if args.command is None:
            raise UsageError("a command or --manifest is required", hint=f"commands: {', '.join(COMMANDS)}")
        job = JobSpec(args.command, load_payload(args.payload), ctx, seed, samples)
        logger.info(f"Running {job.command} over {ctx.describe()}")
        result = run_job(job)
        emit(result.report, args.out_json_path)
        return result.exit_code
    except USAGE_ERRORS as ex:
        print(format_error_message(ex), file=sys.stderr)
        emit(usage_payload(ex), args.out_json_path)
        return USAGE


if __name__ == "__main__":
    raise SystemExit(main())
