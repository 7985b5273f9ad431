"""Tests of the fracspec program."""

import json

import numpy as np
import pytest

from fracspec.parser.config import parse_jsonfile
from fracspec.parser.csv import FileCSV, read_field
from fracspec.tools import verify
from progs.fracspec import EXIT_CONFIG, EXIT_OK, EXIT_VERIFY, run

INI_RUN = """[Problem]
Kind = {kind}
Alpha = 1.5
N_Modes = 8

[Initial]
U0 = single_mode 1
U1 = zero

[Grid]
T_Max = 1.0
N_T = 6
N_X = 11

[Output]
Prefix = {prefix}
"""


def solve(tmp_path, kind):
    prefix = str(tmp_path / kind / 'run')
    fname = tmp_path / f'{kind}.ini'
    fname.write_text(INI_RUN.format(kind=kind, prefix=prefix),
                     encoding='utf-8')
    assert run(['solve', '-c', str(fname)]) == EXIT_OK
    return prefix


def test_solve_outputs(tmp_path):
    prefix = solve(tmp_path, 'wave')
    field = read_field(f'{prefix}_u.csv')
    assert field.values.shape == (6, 11)
    ref = np.sqrt(2/np.pi)*np.sin(field.x)
    np.testing.assert_allclose(field.values[0], ref, atol=1e-14)
    for key in ('ut', 'caputo'):
        assert read_field(f'{prefix}_{key}.csv').values.shape == (6, 11)
    with open(f'{prefix}_manifest.json', encoding='utf-8') as fobj:
        manifest = json.load(fobj)
    assert manifest['outputs']['u'] == f'{prefix}_u.csv'
    assert parse_jsonfile(f'{prefix}_manifest.json').kind == 'wave'


def test_rerun_from_manifest(tmp_path):
    prefix = solve(tmp_path, 'wave')
    with open(f'{prefix}_u.csv', encoding='utf-8') as fobj:
        first = fobj.read()
    assert run(['solve', '-c', f'{prefix}_manifest.json']) == EXIT_OK
    with open(f'{prefix}_u.csv', encoding='utf-8') as fobj:
        assert fobj.read() == first


def test_wave_petrovsky_first_mode(tmp_path):
    wave = solve(tmp_path, 'wave')
    plate = solve(tmp_path, 'petrovsky')
    with open(f'{wave}_u.csv', 'rb') as fobj:
        wave_bytes = fobj.read()
    with open(f'{plate}_u.csv', 'rb') as fobj:
        assert fobj.read() == wave_bytes


def test_solve_scalar(tmp_path):
    prefix = str(tmp_path / 'scalar')
    conf = {'schema_version': 1,
            'problem': {'kind': 'scalar', 'alpha': 1.5, 'lam': 2.0},
            'initial': {'u0': '1.0', 'u1': '0.5'},
            'grid': {'t_max': 1.0, 'n_t': 11},
            'output': {'prefix': prefix}}
    fname = tmp_path / 'scalar.json'
    fname.write_text(json.dumps(conf), encoding='utf-8')
    assert run(['solve', '--config', str(fname)]) == EXIT_OK
    table = FileCSV(f'{prefix}_u.csv')
    assert table.header == ['t', 'u', 'u_t', 'caputo_u', 'memory']
    data = table.read_data()
    assert data.shape == (11, 5)
    np.testing.assert_allclose(data[0, 1:3], [1.0, 0.5])
    np.testing.assert_allclose(data[:, 3], -2.0*data[:, 1])


def test_gen_ini(tmp_path):
    fname = str(tmp_path / 'template.ini')
    assert run(['solve', '--gen-ini', fname]) == EXIT_OK
    with open(fname, encoding='utf-8') as fobj:
        assert '[Problem]' in fobj.read()


def test_invalid_config(tmp_path, capsys):
    fname = tmp_path / 'bad.ini'
    fname.write_text('[Problem]\nKind = wave\nAlpha = 2.5\n',
                     encoding='utf-8')
    assert run(['solve', '-c', str(fname)]) == EXIT_CONFIG
    error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert error['error'] == 'ConfigError'
    assert run(['solve']) == EXIT_CONFIG
    assert run(['solve', '-c', str(tmp_path / 'missing.ini')]) \
        == EXIT_CONFIG


def test_usage_error():
    with pytest.raises(SystemExit) as err:
        run(['mlf', '--alpha', '1.5'])
    assert err.value.code == EXIT_CONFIG


def test_mlf_table(tmp_path, capsys):
    assert run(['mlf', '--alpha', '1', '--beta', '1', '--from', '-1',
                '--to', '1', '--steps', '4']) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'x,value,est_abs_error,branch'
    assert len(lines) == 6
    x, value = (float(item) for item in lines[3].split(',')[:2])
    assert (x, value) == (0.0, 1.0)
    fname = str(tmp_path / 'mlf.csv')
    assert run(['mlf', '--alpha', '1.5', '--beta', '1', '--from', '-500',
                '--to', '0', '--steps', '10', '--csv', fname]) == EXIT_OK
    with open(fname, encoding='utf-8') as fobj:
        rows = fobj.read().splitlines()
    assert rows[1].endswith('asymptotic')
    assert rows[-1].endswith('series')


def test_mlf_errors():
    base = ['mlf', '--beta', '1', '--from', '0', '--to', '1']
    assert run(base + ['--alpha', '2.5', '--steps', '4']) == EXIT_CONFIG
    assert run(base + ['--alpha', '1.5', '--steps', '0']) == EXIT_CONFIG


def test_verify_list(capsys):
    assert run(['verify', '--suite', 'mlf', '--list']) == EXIT_OK
    names = capsys.readouterr().out.split()
    assert 'mlf.exp' in names


def test_verify_report(tmp_path):
    fname = str(tmp_path / 'report.json')
    assert run(['verify', '-s', 'mlf', '--report', fname]) == EXIT_OK
    with open(fname, encoding='utf-8') as fobj:
        report = json.load(fobj)
    assert report['passed']
    assert report['suite'] == 'mlf'


def test_verify_failure(monkeypatch, capsys):
    monkeypatch.setitem(verify.SUITES, 'mlf',
                        [('mlf.exp', lambda: (1.0, 0.5))])
    assert run(['verify', '-s', 'mlf']) == EXIT_VERIFY
    report = json.loads(capsys.readouterr().out)
    assert not report['passed']
    assert report['checks'][0]['name'] == 'mlf.exp'


@pytest.mark.slow
def test_verify_all(tmp_path):
    fname = str(tmp_path / 'report.json')
    assert run(['verify', '--suite', 'all', '--report', fname]) == EXIT_OK
    with open(fname, encoding='utf-8') as fobj:
        assert json.load(fobj)['passed']
