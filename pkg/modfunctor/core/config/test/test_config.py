import os
import warnings
from json import dump, loads

from pytest import raises

from modfunctor.core.types import Reading
from modfunctor.core.util.config import Config
from .. import environ, ModFunctorConfig


simple_str = '{"a": 1}'
simple_map = loads(simple_str)

deep_str = '{"a": {"b": {"c": [1, 2, 3]}}}'


def test_simple_config_value_str():
    config = Config(simple_str)
    assert config.data["a"] == 1


def test_simple_config_value_map():
    config = Config(simple_map)
    assert config.data["a"] == 1


def test_simple_config_value_file(tmpdir):
    f = tmpdir.join("config.json")
    f.write(simple_str)
    config = Config(f"@{f}")
    assert config.data["a"] == 1


def test_missing_config_file_is_empty(tmpdir):
    config = Config(f"@{tmpdir.join('nothing-here')}")
    assert not config.data


def test_lookup_dne():
    config = Config(simple_str)
    with raises(KeyError):
        config.lookup(["foo"])
    assert config.lookup(["foo"], 1) == 1
    assert config.lookup(["foo", "bar"], 2) == 2


def test_lookup_deep():
    config = Config(deep_str)
    assert config.lookup(["a", "b"]) == {"c": [1, 2, 3]}
    assert config.lookup(["a", "b", "c"]) == [1, 2, 3]
    assert config.lookup(["a", "b", "c", "d"], "x") == "x"


def test_remove_prunes_empty_parents():
    config = Config('{"a": {"b": 1}}')
    assert config.lookup(("a", "b"), remove=True) == 1
    assert config.data == {}


def test_remove_step_wise():
    config = Config('{"a": {"b": {"c": true, "d": true}, "e": 1}, "f": 2}')
    config.lookup(("a", "b", "c"), {}, remove=True)
    assert "c" not in config.data["a"]["b"]
    config.lookup(("a", "b"), {}, remove=True)
    assert "b" not in config.data["a"]


def test_defaults(tmpdir, monkeypatch):
    setup_config({}, tmpdir, monkeypatch)
    config = ModFunctorConfig()
    assert config.tol == 1e-9
    assert config.cond_limit == 1e6
    assert config.reading == Reading.STATEMENT
    assert config.jobs == 1
    assert not config.strict


def test_config_file(tmpdir, monkeypatch):
    setup_config({
        "numerics": {"tol": 1e-6, "cond_limit": 1e8},
        "reading": "proof",
        "jobs": 4,
        "validation": {"strict": True},
    }, tmpdir, monkeypatch)
    config = ModFunctorConfig()
    assert config.tol == 1e-6
    assert config.cond_limit == 1e8
    assert config.reading == Reading.PROOF
    assert config.jobs == 4
    assert config.strict


def test_environment_overrides(tmpdir, monkeypatch):
    setup_config({}, tmpdir, monkeypatch,
                 MODFUNCTOR_NUMERICS_TOL="1e-7", MODFUNCTOR_VALIDATION_STRICT="true")
    config = ModFunctorConfig()
    assert config.tol == 1e-7
    assert config.strict


def test_non_positive_tolerance(tmpdir, monkeypatch):
    setup_config({"numerics": {"tol": 0}}, tmpdir, monkeypatch)
    with raises(ValueError):
        ModFunctorConfig()


def test_unknown_reading(tmpdir, monkeypatch):
    setup_config({"reading": "sideways"}, tmpdir, monkeypatch)
    with raises(ValueError):
        ModFunctorConfig()


def test_warn_on_unknown_key(tmpdir, monkeypatch):
    setup_config({"unknown": True}, tmpdir, monkeypatch)
    with warnings.catch_warnings(record=True) as warnings_:
        warnings.simplefilter("always")
        ModFunctorConfig()
        assert len(warnings_) == 1


def test_environ(tmpdir, monkeypatch):
    setup_config({}, tmpdir, monkeypatch)
    assert ModFunctorConfig().reading == Reading.STATEMENT
    with environ(READING="proof"):
        assert ModFunctorConfig().reading == Reading.PROOF
    assert "MODFUNCTOR_READING" not in os.environ


def test_environ_warn(tmpdir, monkeypatch):
    setup_config({}, tmpdir, monkeypatch)
    with environ(UNKNOWN="true"):
        with warnings.catch_warnings(record=True) as warnings_:
            warnings.simplefilter("always")
            ModFunctorConfig()
            assert len(warnings_) == 1

#
# HELPERS
#


def setup_config(config, tmpdir, monkeypatch, **environment_variables):
    config_file = tmpdir / "config"
    with open(config_file, "w") as o:
        dump(config, o)
    monkeypatch.setitem(os.environ, "MODFUNCTOR_CONFIG", f"@{config_file}")
    for key in [k for k in os.environ if k.startswith("MODFUNCTOR_") and k != "MODFUNCTOR_CONFIG"]:
        monkeypatch.delitem(os.environ, key)
    for k, v in environment_variables.items():
        monkeypatch.setitem(os.environ, k, v)
