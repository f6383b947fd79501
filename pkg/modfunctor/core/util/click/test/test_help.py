import pytest
from click.testing import CliRunner

from modfunctor.core.modfunctor import modfunctor

COMMANDS = ["validate", "relations", "s-matrix", "dims", "generate", "version", "util"]


def test_root_help():
    result = CliRunner().invoke(modfunctor, ["--help"])
    assert result.exit_code == 0
    assert "Usage: modfunctor [OPTIONS] COMMAND [ARGS]..." in result.output
    for command in COMMANDS:
        assert command in result.output


@pytest.mark.parametrize("command", COMMANDS)
def test_command_help(command):
    result = CliRunner().invoke(modfunctor, [command, "--help"])
    assert result.exit_code == 0
    assert f"Usage: modfunctor {command} [OPTIONS]" in result.output


def test_nested_help():
    result = CliRunner().invoke(modfunctor, ["util", "install-strict-dependencies", "--help"])
    assert result.exit_code == 0
    assert "install-strict-dependencies" in result.output
