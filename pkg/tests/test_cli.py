import json

import pytest

from automorphic.cli import cmd_stats, cmd_verify, main, parse_range
from automorphic.errors import DomainError
from automorphic.version import __version__


table_rows = [
    pytest.param(1, '         5', '         6'),
    pytest.param(4, '      0625', '      9376'),
    pytest.param(5, '     90625', '     09376'),
    pytest.param(10, '8212890625', '1787109376'),
]


def test_parse_range():
    assert parse_range('2..36') == (2, 36)
    assert parse_range('7') == (7, 7)


def test_parse_range_invalid():
    with pytest.raises(DomainError):
        parse_range('5..2')
    with pytest.raises(DomainError):
        parse_range('a..b')


def test_list(capsys):
    assert main(['list', '--base', '10', '--n', '4']) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].split() == ['residue', 'digits', 'selector', 'exact_width']
    assert out[1].split() == ['625', '0625', '(1,0)', 'no']
    assert out[2].split() == ['9376', '9376', '(0,1)', 'yes']
    assert len(out) == 3


def test_list_include_trivial(capsys):
    main(['list', '--base', '10', '--n', '4', '--include-trivial'])
    out = capsys.readouterr().out.splitlines()
    assert [line.split()[0] for line in out[1:]] == ['0', '1', '625', '9376']


def test_list_json(capsys):
    main(['list', '--base', '10', '--n', '4', '--format', 'json'])
    items = json.loads(capsys.readouterr().out)
    assert items == [
        {
            'base': 10,
            'n': 4,
            'residue': '625',
            'digits': [0, 6, 2, 5],
            'selector': [1, 0],
            'exact_width': False,
        },
        {
            'base': 10,
            'n': 4,
            'residue': '9376',
            'digits': [9, 3, 7, 6],
            'selector': [0, 1],
            'exact_width': True,
        },
    ]


def test_list_csv(capsys):
    main(['list', '--base', '6', '--n', '2', '--format', 'csv'])
    out = capsys.readouterr().out.splitlines()
    assert out == [
        'base,n,residue,digits,selector,exact_width',
        '6,2,9,13,"(1,0)",yes',
        '6,2,28,44,"(0,1)",yes',
    ]


def test_list_invalid_base(capsys):
    assert main(['list', '--base', '1', '--n', '3']) == 2
    assert 'error' in capsys.readouterr().err


def test_list_invalid_width(capsys):
    assert main(['list', '--base', '10', '--n', '0']) == 2


@pytest.mark.parametrize('n,r_text,s_text', table_rows)
def test_table(capsys, n, r_text, s_text):
    assert main(['table', '--base', '10', '--max-n', '10']) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 12
    assert out[0] == ' n |        r_n |        s_n'
    assert out[1] == '-+-'.join(['-' * 2, '-' * 10, '-' * 10])
    assert out[n + 1] == '{:>2} | {} | {}'.format(n, r_text, s_text)


def test_table_three_primes(capsys):
    main(['table', '--base', '30', '--max-n', '2'])
    out = capsys.readouterr().out.splitlines()
    assert out[0].split(' | ')[1:] == [
        't=110', 't=101', 't=100', 't=011', 't=010', 't=001'
    ]
    assert len(out) == 4


def test_verify(capsys):
    code = main(['verify', '--bases', '10..10', '--n', '2..10'])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.splitlines()[-1] == (
        'verify: pass (cells=9, violations=0)'
    )
    assert 'elapsed' in captured.err


def test_verify_json(capsys):
    main(['verify', '--bases', '2..12', '--n', '1..3', '--format', 'json'])
    report = json.loads(capsys.readouterr().out)
    assert report == {
        'command': 'verify',
        'parameters': {
            'bases': '2..12',
            'n': '1..3',
            'oracle_ceiling': 10 ** 7,
        },
        'outcome': 'pass',
        'violations': [],
    }


def test_verify_jobs(capsys):
    report = cmd_verify((2, 16), (1, 4), jobs=2)
    assert report.outcome.value == 'pass'
    assert report.exit_code == 0


def test_verify_empty_range(capsys):
    code = main(['verify', '--bases', '10..5', '--n', '1..2'])
    assert code == 2
    assert 'is empty' in capsys.readouterr().err


def test_verify_invalid_jobs(capsys):
    code = main(['verify', '--bases', '2..3', '--n', '1', '--jobs', '0'])
    assert code == 2


def test_unknown_command(capsys):
    assert main(['factor']) == 2


def test_oracle(capsys):
    assert main(['oracle', '--base', '10', '--n', '4']) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == [
        'enumerated: 0 1 625 9376',
        'brute-force: 0 1 625 9376',
        'difference: none',
    ]


def test_oracle_above_ceiling(capsys):
    assert main(['oracle', '--base', '10', '--n', '8']) == 2
    assert 'oracle ceiling' in capsys.readouterr().err


def test_stats(capsys):
    assert main(['stats', '--base', '10', '--n', '2..10']) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ['records=9', 'one=2', 'two=7']


def test_stats_csv_file(capsys, tmp_path):
    path = tmp_path / 'stats.csv'
    main([
        'stats', '--base', '10', '--n', '2..10', '--out', str(path),
        '--jobs', '2'
    ])
    lines = path.read_text().splitlines()
    assert len(lines) == 10
    assert lines[0] == (
        'base,n,r_residue,s_residue,r_leading,s_leading,classification'
    )
    assert lines[3] == '10,4,625,9376,0,9,one'
    assert 'one=2' in capsys.readouterr().out


def test_stats_csv_stdout(capsys):
    main(['stats', '--base', '10', '--n', '2..3', '--format', 'csv'])
    out = capsys.readouterr().out.splitlines()
    assert out[1:] == ['10,2,25,76,2,7,two', '10,3,625,376,6,3,two']


def test_stats_several_pairs(capsys):
    main(['stats', '--base', '30', '--n', '2..4'])
    out = capsys.readouterr().out.splitlines()
    assert out[0] == 'records=9'
    assert len([line for line in out if line.startswith('pair ')]) == 3


def test_stats_unwritable(capsys, tmp_path):
    path = tmp_path / 'missing' / 'stats.csv'
    code = main(['stats', '--base', '10', '--n', '2..3', '--out', str(path)])
    assert code == 2


def test_stats_invalid_width(capsys):
    assert main(['stats', '--base', '10', '--n', '1..3']) == 2


def test_cryptarithm(capsys):
    assert main(['cryptarithm']) == 0
    out = capsys.readouterr().out.splitlines()
    assert 'ATOM = 9376' in out
    assert '9376^2 = 87909376' in out
    assert 'solutions: 1' in out
    assert 'candidate 0625: rejected, leading digit A is zero' in out


def test_version(capsys):
    assert main(['--version']) == 0
    assert __version__ in capsys.readouterr().out


def test_list_prime_power(capsys):
    assert main(['list', '--base', '8', '--n', '3', '--format', 'json']) == 0
    assert json.loads(capsys.readouterr().out) == []


def test_list_base6_include_trivial(capsys):
    main(['list', '--base', '6', '--n', '2', '--include-trivial'])
    out = capsys.readouterr().out.splitlines()
    assert [line.split()[0] for line in out[1:]] == ['0', '1', '9', '28']


def test_list_json_is_stable(capsys):
    main(['list', '--base', '30', '--n', '5', '--format', 'json'])
    out = capsys.readouterr().out
    assert json.dumps(json.loads(out), indent=2) + '\n' == out


def test_table_single_row(capsys):
    main(['table', '--base', '10', '--max-n', '1'])
    out = capsys.readouterr().out.splitlines()
    assert out[2].split(' | ') == ['1', '  5', '  6']


def test_table_is_deterministic(capsys):
    main(['table', '--base', '12', '--max-n', '8'])
    first = capsys.readouterr().out
    main(['table', '--base', '12', '--max-n', '8'])
    assert capsys.readouterr().out == first


def test_verify_prime_power(capsys):
    assert main(['verify', '--bases', '4..4', '--n', '2..6']) == 0


def test_verify_small_bases(capsys):
    assert main(['verify', '--bases', '2..36', '--n', '1..5']) == 0


def test_stats_single_width(capsys):
    main(['stats', '--base', '10', '--n', '2..2'])
    out = capsys.readouterr().out.splitlines()
    assert out == ['records=1', 'one=0', 'two=1']


def test_stats_base21(capsys, tmp_path):
    path = tmp_path / 'stats.csv'
    main(['stats', '--base', '21', '--n', '2..6', '--out', str(path)])
    rows = [line.split(',') for line in path.read_text().splitlines()[1:]]
    assert len(rows) == 5
    for row in rows:
        assert int(row[4]) + int(row[5]) == 20


def test_table_prime_power(capsys):
    assert main(['table', '--base', '8', '--max-n', '3']) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == 'n'
    assert out[2:5] == ['1', '2', '3']
    assert out[-1] == 'no non-trivial solutions: base 8 is a prime power'


def test_verify_unsupported_base(capsys):
    base = str(2 ** 32 + 1)
    code = main(['verify', '--bases', base + '..' + base, '--n', '1'])
    captured = capsys.readouterr()
    assert code == 2
    assert 'supported maximum' in captured.err
    assert 'verify:' not in captured.out


def test_stats_unsupported_base_with_jobs(capsys):
    base = str(2 ** 32 + 1)
    code = main(['stats', '--base', base, '--n', '2..3', '--jobs', '2'])
    assert code == 2
    assert 'supported maximum' in capsys.readouterr().err


def test_stats_empty_range():
    with pytest.raises(DomainError):
        cmd_stats(10, 5, 4)
