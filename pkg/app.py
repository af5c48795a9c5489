import logging
import os

from flask import Flask, jsonify, request

from tools.field import parse_field
from tools.jobs import COMMANDS, SUCCESS, USAGE, JobSpec, configure_logging, get_settings, run_job, run_manifest
from tools.utils.date_utils import get_current_datetime_string
from tools.utils.error_utils import USAGE_ERRORS, UsageError, create_error_response, log_exception, usage_payload
from tools.utils.file_utils import ensure_directory_exists, safe_json_write

settings = get_settings()
configure_logging(settings.log_level)
logger = logging.getLogger(__name__)

app = Flask(__name__)

# Configure application
app.config['OUTPUT_FOLDER'] = settings.output_dir
app.config['WRITE_REPORTS'] = True

ensure_directory_exists(app.config['OUTPUT_FOLDER'])


def _job_context():
    """Field, seed and sample count from the query string, falling back to the environment."""
    ctx = parse_field(request.args.get('field') or settings.field)
    try:
        seed = int(request.args.get('seed', settings.seed))
        samples = int(request.args.get('samples', settings.random_samples))
    except ValueError as ex:
        raise UsageError(f"seed and samples must be integers: {ex}") from ex
    return ctx, seed, samples


def _save_report(command, data):
    """Write a report under OUTPUT_FOLDER; returns the file name or None."""
    if not app.config['WRITE_REPORTS']:
        return None
    filename = f"{command}-{get_current_datetime_string('%Y%m%d-%H%M%S-%f')}.json"
    path = os.path.join(app.config['OUTPUT_FOLDER'], filename)
    if safe_json_write(path, data):
        return filename
    return None


@app.route('/', methods=['GET'])
def index():
    """List the available job commands."""
    return jsonify({'success': True, 'commands': list(COMMANDS)})


@app.route('/api/jobs/<command>', methods=['POST'])
def run_job_route(command):
    """Run one job; the request body is the command's JSON payload."""
    if command not in COMMANDS:
        return jsonify(create_error_response(f"Unknown command {command}", 404, {'commands': list(COMMANDS)})), 404

    payload = request.get_json(silent=True)
    if payload is None:
        payload = {}

    try:
        ctx, seed, samples = _job_context()
        result = run_job(JobSpec(command, payload, ctx, seed, samples))
    except USAGE_ERRORS as ex:
        return jsonify(create_error_response(str(ex), 400, usage_payload(ex))), 400
    except Exception as ex:
        log_exception(ex, f"Error running {command}")
        return jsonify(create_error_response(f"Error running {command}: {ex}", 500)), 500

    if result.exit_code == USAGE:
        return jsonify(create_error_response(result.report['error'], 400, result.report)), 400

    return jsonify({
        'success': result.exit_code == SUCCESS,
        'exit_code': result.exit_code,
        'report': result.report,
        'report_file': _save_report(command, result.report),
    })


@app.route('/api/manifest', methods=['POST'])
def run_manifest_route():
    """Run a JSON array of {command, payload} jobs in order."""
    entries = request.get_json(silent=True)
    try:
        ctx, seed, samples = _job_context()
        results, exit_code = run_manifest(entries, ctx, seed, samples)
    except USAGE_ERRORS as ex:
        return jsonify(create_error_response(str(ex), 400, usage_payload(ex))), 400
    except Exception as ex:
        log_exception(ex, "Error running manifest")
        return jsonify(create_error_response(f"Error running manifest: {ex}", 500)), 500

    data = [result.to_json() for result in results]
    return jsonify({
        'success': exit_code == SUCCESS,
        'exit_code': exit_code,
        'results': data,
        'report_file': _save_report('manifest', data),
    })


if __name__ == '__main__':
    app.run(debug=True)
