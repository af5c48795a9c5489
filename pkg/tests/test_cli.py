import json

import pytest

import cli


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ('WOUND_FIELD', 'WOUND_SEED', 'WOUND_LOG_LEVEL', 'WOUND_RANDOM_SAMPLES'):
        monkeypatch.delenv(name, raising=False)


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_imp_inline_payload(capsys):
    payload = '{"generators": [{"a": "l1", "n": 1}, {"a": "l2", "n": 1}]}'
    code, report = run(capsys, '--field', '2,1,2', 'imp', payload)
    assert code == 0
    assert report['imp'] == 2


def test_kill_and_verify_through_files(tmp_path, capsys):
    cert_path = tmp_path / 'cert.json'
    assert cli.main(['--json', str(cert_path), 'kill', '{"G": "l1*T"}']) == 0
    assert 'H' in json.loads(cert_path.read_text())
    code, report = run(capsys, 'verify', str(cert_path))
    assert code == 0
    assert report['verified'] is True


def test_field_from_environment(monkeypatch, capsys):
    monkeypatch.setenv('WOUND_FIELD', '3,1,1')
    code, report = run(capsys, 'group', '{"preset": "V"}')
    assert code == 0
    assert report['field']['p'] == 3


def test_negative_answer_exits_one(capsys):
    code, report = run(capsys, 'group', '{"action": "membership", "preset": "V", "point": ["l1", "0"]}')
    assert code == 1
    assert report['member'] is False


def test_usage_errors_exit_two(capsys):
    code, report = run(capsys, '--field', '4,1,1', 'kill', '{"G": "0"}')
    assert code == 2
    assert report['error'].startswith('BadParams') and report['hint']

    code, report = run(capsys, 'kill', '{"G": ')
    assert code == 2
    assert 'JSON' in report['error']

    code, report = run(capsys, 'kill', 'missing.json')
    assert code == 2


def test_command_or_manifest_required(capsys):
    code, report = run(capsys)
    assert code == 2
    assert 'command' in report['error']


def test_unknown_command_is_rejected_by_the_parser():
    with pytest.raises(SystemExit) as exit_info:
        cli.main(['factor'])
    assert exit_info.value.code == 2


def test_seed_flag_reaches_random_claims(capsys):
    payload = '{"claim": "pairing_membership", "params": {"n": 1, "p": 2, "r": 2, "mode": "random"}}'
    code, report = run(capsys, '--seed', '3', '--samples', '2', 'verify-identities', payload)
    assert code == 0
    assert report['params']['seed'] == 3
    assert report['samples'] == 2


def test_manifest(tmp_path, capsys):
    manifest = tmp_path / 'jobs.json'
    manifest.write_text(json.dumps([
        {'command': 'kill', 'payload': {'G': '0'}},
        {'command': 'verify-identities', 'payload': {'claim': 'largergp', 'params': {'n': 2, 'p': 2}}},
    ]))
    out = tmp_path / 'reports.json'
    assert cli.main(['--manifest', str(manifest), '--json', str(out)]) == 0
    reports = json.loads(out.read_text())
    assert [item['command'] for item in reports] == ['kill', 'verify-identities']
    assert reports[1]['report']['verdict'] == 'verified'


def test_selftest(capsys):
    code, reports = run(capsys, 'selftest')
    assert code == 0
    assert {item['claim'] for item in reports} >= {'largergp', 'weil_gm'}
