"""
Jobs Package

Command runners, their factory and the environment-backed defaults shared
by the command line and the JSON service.
"""

from .config import Settings, configure_logging, get_settings
from .runners import NEGATIVE, SUCCESS, USAGE, JobResult, JobSpec
from .job_factory import COMMANDS, get_runner, job_from_entry, run_job, run_manifest

__all__ = [
    # Configuration
    'Settings',
    'configure_logging',
    'get_settings',

    # Jobs
    'JobSpec',
    'JobResult',
    'SUCCESS',
    'NEGATIVE',
    'USAGE',

    # Dispatch
    'COMMANDS',
    'get_runner',
    'job_from_entry',
    'run_job',
    'run_manifest'
]
