"""
Test quivdt.cli: input format, report formats and exit codes.
"""
import io
import json
import os

import pytest

from quivdt.cli import (JobSpec, parse_input, format_input, emit_report,
                        dispatch, main)
from quivdt.errors import InputError
from quivdt.models import doubled_a2, one_loop, milnor_example
from quivdt.utils import Command

A2 = """\
# doubled A2, W = (xy)^2
[quiver]
vertices = 2
arrow x 0 1
arrow y 1 0    # back arrow
[potential]
term 1 x y x y
"""

CUBIC = """\
[quiver]
vertices = 1
arrow x 0 0
[potential]
term 1 x x x
"""


def test_parse_input():
    Q, W = parse_input(A2)
    assert (Q, W) == doubled_a2(1)
    assert parse_input(CUBIC) == one_loop(2)


def test_format_input_round_trip():
    for Q, W in (doubled_a2(2), milnor_example(3)):
        assert parse_input(format_input(Q, W)) == (Q, W)


def test_rational_coefficients():
    Q, W = parse_input(CUBIC.replace('term 1 ', 'term -3/4 '))
    (word, coeff), = W.items()
    assert str(coeff) == '-3/4'


@pytest.mark.parametrize('text, message', [
    ('[graph]\n', 'line 1, column 1: unknown section [graph]'),
    ('vertices = 1\n', 'line 1, column 1: content before the [quiver]'),
    ('[quiver]\nvertices = 2\narrow x 0 1\n[potential]\n',
     'line 4, column 1: the quiver is not symmetric'),
    ('[quiver]\nvertices = 1\narrow x 0 a\n',
     "line 3, column 11: malformed vertex 'a'"),
    ('[quiver]\nvertices = 1\narrow x 0 0\narrow z 0 3\n',
     "line 4, column 1: arrow 'z' has an endpoint out of range"),
    (CUBIC.replace('term 1 ', 'term 1/0 '),
     "line 5, column 6: malformed rational '1/0'"),
    (CUBIC.replace('x x x', 'x w x'), "line 5, column 10: unknown arrow 'w'"),
    (CUBIC.replace('term', 'trem'), 'line 5, column 1: expected "term'),
    ('[quiver]\narrow x 0 0\n', 'missing "vertices = <n>"'),
])
def test_parse_errors(text, message):
    with pytest.raises(InputError) as excinfo:
        parse_input(text)
    assert message in str(excinfo.value)


def test_jobspec_validate():
    job = JobSpec('a2.qp', 'bps', output_format='csv').validate()
    assert job.command == Command.BPS
    with pytest.raises(InputError, match='--framing'):
        JobSpec('a2.qp', 'bps', framing=2).validate()
    with pytest.raises(InputError, match='--self-test'):
        JobSpec('a2.qp', 'bps', self_test=True).validate()
    with pytest.raises(ValueError):
        JobSpec('a2.qp', 'plot').validate()


def test_jacobi_json(write_input, capsys):
    assert main(['jacobi', write_input(A2)]) == 0
    out = capsys.readouterr().out
    assert out == '[{"certified":true,"dim_by_vertex_pair":[[2,1],[1,2]],' \
                  '"dim_total":6,"n_star":3}]'


def test_spectrum_text(write_input, capsys):
    assert main(['spectrum', write_input(CUBIC), '--format', 'text']) == 0
    assert capsys.readouterr().out == '1/3, 2/3\n'


def test_milnor_json(write_input, capsys):
    text = format_input(*milnor_example(2))
    assert main(['milnor', write_input(text)]) == 0
    record, = json.loads(capsys.readouterr().out)
    assert record['omega_num'] == 2
    assert record['gamma'] == [1]


def test_count_csv(write_input, capsys):
    code = main(['count', write_input(CUBIC), '--fields', '4',
                 '--max-total-degree', '1', '--format', 'csv'])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'gamma,q,N0,N1,E,elapsed_ms'
    assert lines[1].startswith('1,4,1,3,-2,')


def test_count_json_is_deterministic(write_input, capsys):
    path = write_input(CUBIC)
    argv = ['count', path, '--fields', '4,16', '--max-total-degree', '1']
    outputs = []
    for _ in range(2):
        assert main(argv) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert 'elapsed_ms' not in outputs[0]
    assert [r['q'] for r in json.loads(outputs[0])] == [4, 16]


def test_bps_reports(a2_bps):
    _, _, table = a2_bps
    data = emit_report(table, 'json')
    assert data == emit_report(table, 'json')
    assert data.startswith(b'[{"gamma":[0,1],"omega":"1"')

    csv_lines = emit_report(table, 'csv').decode().splitlines()
    assert csv_lines[0] == \
        'gamma,omega,omega_num,positive,palindromic,simple_sector'
    assert csv_lines[1].startswith('0 1,1,1,True,True,True')
    assert len(csv_lines) == 6

    text = emit_report(table, 'text').decode()
    assert 'length' in text
    assert 'omega_num' in text


def test_verify_exit_codes(write_input, capsys):
    path = write_input(A2)
    assert main(['verify', path]) == 0
    statuses = [r['status'] for r in json.loads(capsys.readouterr().out)]
    assert statuses == ['pass'] * 4

    assert main(['verify', path, '--self-test']) == 1
    captured = capsys.readouterr()
    assert 'check failed: sum rule' in captured.err
    failed = [r['check'] for r in json.loads(captured.out)
              if r['status'] == 'fail']
    assert failed == ['sum rule']


def test_input_error_exit_codes(write_input, tmp_path, capsys):
    assert main(['bps', str(tmp_path / 'missing.qp')]) == 2
    assert 'cannot read' in capsys.readouterr().err

    assert main(['bps', write_input(A2), '--framing', '2']) == 2
    assert main(['plot', write_input(A2)]) == 2
    assert main(['bps', write_input('[quiver]\nvertices = x\n')]) == 2
    assert 'malformed vertex count' in capsys.readouterr().err


def test_budget_and_field_exit_codes(write_input, capsys):
    assert main(['count', write_input(A2), '--budget', '1']) == 3
    assert 'budget' in capsys.readouterr().err
    # F_7 carries no rational cube-root Gauss sums
    assert main(['bps', write_input(CUBIC), '--max-total-degree', '1',
                 '--fields', '7,13,19']) == 3


def test_out_dir(write_input, tmp_path, capsys):
    out_dir = tmp_path / 'reports'
    code = main(['jacobi', write_input(A2, 'a2.qp'), '--out-dir',
                 str(out_dir)])
    assert code == 0
    path = out_dir / 'a2_jacobi_G2.json'
    assert path.exists()
    assert json.loads(path.read_text())[0]['dim_total'] == 6
    assert str(path) in capsys.readouterr().err


def test_dispatch_streams(write_input):
    stdout, stderr = io.BytesIO(), io.StringIO()
    job = JobSpec(write_input(CUBIC), 'spectrum', output_format='json')
    assert dispatch(job, stdout, stderr) == 0
    assert stdout.getvalue() == b'[{"alpha":"1/3"},{"alpha":"2/3"}]'
    assert stderr.getvalue() == ''


def test_log_file(write_input, tmp_path):
    log_fn = tmp_path / 'run.log'
    assert main(['count', write_input(CUBIC), '--fields', '4',
                 '--max-total-degree', '1', '--log-file', str(log_fn)]) == 0
    assert os.path.getsize(log_fn) > 0


@pytest.mark.parametrize('argv', [
    ['bps'],
    ['gv', '--rank-max', '2', '--length', '1'],
    ['framed-check', '--framing', '1', '--max-total-degree', '1',
     '--fields', '4,16,25'],
])
def test_reports_json_is_deterministic(write_input, capsys, argv):
    argv = argv[:1] + [write_input(CUBIC)] + argv[1:]
    outputs = []
    for _ in range(2):
        assert main(argv) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert 'elapsed_ms' not in outputs[0]


def test_framed_check_samples_given_fields(write_input, capsys):
    assert main(['framed-check', write_input(CUBIC), '--max-total-degree',
                 '1', '--fields', '4,16,25']) == 0
    checks = [r['check'] for r in json.loads(capsys.readouterr().out)]
    assert 'framed identity m=1 q=25' in checks
    assert 'framing independence m=1 q=25' in checks
    assert len(checks) == 7


def test_gv_json(write_input, capsys):
    assert main(['gv', write_input(CUBIC), '--rank-max', '2',
                 '--length', '1']) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [r['gv_num'] for r in rows] == [2, 0]


@pytest.mark.parametrize('argv, message', [
    (['gv'], 'gv needs --rank-max'),
    (['bps', '--fields', '9,9'], 'distinct field sizes'),
    (['spectrum', '--fields', '9'], '--fields does not apply to spectrum'),
    (['framed-check', '--fields', '4'], '1 field sizes given, 3 needed'),
])
def test_option_errors(write_input, capsys, argv, message):
    argv = argv[:1] + [write_input(CUBIC)] + argv[1:]
    assert main(argv) == 2
    assert message in capsys.readouterr().err
