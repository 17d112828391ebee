import pytest

from core.config import ConfigurationManager
from core.consts import FlagKeys, Languages
from core.errors import BadParams


@pytest.fixture
def flags_file(tmp_path):
    path = tmp_path / "test.flags"
    path.write_text(
        "\n".join([
            "VCS_ENUMERATION_BOUND=5000",
            "VCS_SEED=7",
            "VCS_MAX_WORKERS=2",
            "VCS_LOG_LEVEL=debug",
            "VCS_LANGUAGE=xx",
        ]) + "\n",
        encoding="utf-8",
    )
    return path


def test_defaults(monkeypatch):
    monkeypatch.delenv(FlagKeys.ENUMERATION_BOUND, raising=False)
    config = ConfigurationManager()
    assert config.get_enumeration_config() == {"bound": 200000}
    assert config.get_run_config() == {"seed": 0}
    assert config.get_search_config() == {"max_workers": 4, "order_cap": 200000}
    assert config.get_log_config()["level"] == "INFO"


def test_flags_file_values(monkeypatch, flags_file):
    monkeypatch.delenv(FlagKeys.ENUMERATION_BOUND, raising=False)
    config = ConfigurationManager(flags_file)
    assert config.get_enumeration_config()["bound"] == 5000
    assert config.get_run_config()["seed"] == 7
    assert config.get_search_config()["max_workers"] == 2
    assert config.get_log_config()["level"] == "DEBUG"
    assert config.get_language_config()["language"] == Languages.DEFAULT


def test_default_flags_file_in_the_working_directory(tmp_path, monkeypatch):
    (tmp_path / "vcs.flags").write_text("VCS_SEED=3\n", encoding="utf-8")
    assert ConfigurationManager().get_run_config()["seed"] == 3


def test_precedence(monkeypatch, flags_file):
    monkeypatch.setenv(FlagKeys.ENUMERATION_BOUND, "9000")
    monkeypatch.setenv(FlagKeys.SEED, "99")
    config = ConfigurationManager(flags_file)
    assert config.get_enumeration_config()["bound"] == 9000
    # only the bound is read from the environment
    assert config.get_run_config()["seed"] == 7

    config = ConfigurationManager(flags_file, {FlagKeys.ENUMERATION_BOUND: 100, FlagKeys.SEED: None})
    assert config.get_enumeration_config()["bound"] == 100
    assert config.get_run_config()["seed"] == 7


@pytest.mark.parametrize("key, value", [
    (FlagKeys.ENUMERATION_BOUND, "0"),
    (FlagKeys.MAX_WORKERS, "many"),
    (FlagKeys.SEED, "-1"),
])
def test_invalid_values(key, value):
    config = ConfigurationManager(overrides={key: value})
    with pytest.raises(BadParams):
        config.get_enumeration_config()
        config.get_search_config()
        config.get_run_config()


def test_missing_flags_file():
    with pytest.raises(BadParams):
        ConfigurationManager("nowhere.flags")
