import json

import pytest

pytest.importorskip("flask")

from app import app  # noqa: E402


@pytest.fixture
def client(tmp_path):
    app.config.update(TESTING=True, OUTPUT_FOLDER=str(tmp_path), WRITE_REPORTS=True)
    with app.test_client() as client:
        yield client


def test_index_lists_commands(client):
    data = client.get('/').get_json()
    assert data['success'] is True
    assert 'verify-identities' in data['commands']


def test_imp_job(client, tmp_path):
    payload = {'generators': [{'a': 'l1', 'n': 1}, {'a': 'l2', 'n': 1}]}
    response = client.post('/api/jobs/imp?field=2,1,2', json=payload)
    assert response.status_code == 200
    data = response.get_json()
    assert data['success'] is True and data['exit_code'] == 0
    assert data['report']['imp'] == 2
    saved = json.loads((tmp_path / data['report_file']).read_text())
    assert saved == data['report']


def test_negative_answer_is_not_an_http_error(client):
    payload = {'action': 'membership', 'preset': 'V', 'point': ['l1', '0']}
    response = client.post('/api/jobs/group', json=payload)
    assert response.status_code == 200
    data = response.get_json()
    assert data['success'] is False and data['exit_code'] == 1


def test_usage_error(client):
    response = client.post('/api/jobs/kill', json={'factors': []})
    assert response.status_code == 400
    data = response.get_json()
    assert data['success'] is False
    assert data['error']['status_code'] == 400
    assert set(data['error']['details']) == {'error', 'hint'}


def test_bad_query_field(client):
    response = client.post('/api/jobs/kill?field=6,1,1', json={'G': '0'})
    assert response.status_code == 400


def test_unknown_command(client):
    response = client.post('/api/jobs/factor', json={})
    assert response.status_code == 404
    assert 'kill' in response.get_json()['error']['details']['commands']


def test_manifest(client):
    entries = [
        {'command': 'kill', 'payload': {'G': '0'}},
        {'command': 'verify-identities', 'payload': {'claim': 'weil_gm', 'params': {'p': 2}}},
    ]
    data = client.post('/api/manifest', json=entries).get_json()
    assert data['exit_code'] == 0
    assert [item['exit_code'] for item in data['results']] == [0, 0]


def test_manifest_must_be_an_array(client):
    assert client.post('/api/manifest', json={'command': 'kill'}).status_code == 400


def test_reports_can_be_kept_in_memory(client):
    app.config['WRITE_REPORTS'] = False
    data = client.post('/api/jobs/kill', json={'G': '0'}).get_json()
    assert data['report_file'] is None
