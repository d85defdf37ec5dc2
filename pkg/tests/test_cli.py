import json

import pytest

from ellsurf.cli import main
from ellsurf.commands import commands
from ellsurf.containers import CommandInterface


def test_text_output(capsys):
    assert main(['hesse']) == 0

    out, _ = capsys.readouterr()
    assert out.startswith('== ')
    assert out.rstrip().endswith('1/1 reports passed')


def test_json_output(capsys):
    assert main(['--json', 'quotient']) == 0

    out, _ = capsys.readouterr()
    target = json.loads(out)
    assert target['reports'][0]['command'] == 'quotient'
    assert 'generated_at' in target


@pytest.mark.parametrize('argv, code', (
    (['qseries', '--terms', '5'], 'USAGE'),
    (['basechange', '--profile', 'd=3; 0:2'], 'INVALID_PROFILE'),
))
def test_usage_errors(capsys, argv, code):
    assert main(argv) == 2

    _, err = capsys.readouterr()
    assert err.startswith("error {}".format(code))


def test_usage_error__json(capsys):
    assert main(['qseries', '--terms', '5', '--json']) == 2

    out, _ = capsys.readouterr()
    assert json.loads(out)['code'] == 'USAGE'


@pytest.mark.parametrize('argv', (
    [],
    ['unknown'],
    ['qseries', '--form', '1,1,-3'],
))
def test_argument_errors(capsys, argv):
    with pytest.raises(SystemExit) as result:
        main(argv)

    assert result.value.code == 2


def test_assumed_rank_beyond_h11(capsys):
    assert main(['surface', '--a', '7', '--rank', '3']) == 1

    _, err = capsys.readouterr()
    assert err.startswith('error EXCEEDS_H11')


@pytest.mark.parametrize('argv, expected', (
    (['qseries'], False),
    (['qseries', '--check-zero'], True),
))
def test_check_zero_flag(argv, expected):
    parser = CommandInterface(commands).build_parser()

    assert parser.parse_args(argv).check_zero is expected
