import pytest

from c2v.config import (
    DEFAULT_CONFIG_PATH,
    ConfigError,
    Limits,
    RunConfig,
    config_from_dict,
    load_config,
    parse_check_ids,
    parse_k_range,
    parse_weight_cap,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("5", (5,)),
        ("5..8", (5, 6, 7, 8)),
        ("5,7,9", (5, 7, 9)),
        ("5..6, 9", (5, 6, 9)),
        ("5,5,6", (5, 6)),
        (7, (7,)),
    ],
)
def test_parse_k_range(text, expected):
    assert parse_k_range(text) == expected


@pytest.mark.parametrize("text", ["", "a..b", "9..5", "five"])
def test_parse_k_range_rejects(text):
    with pytest.raises(ConfigError):
        parse_k_range(text)


def test_parse_check_ids():
    assert parse_check_ids("all") == "all"
    assert parse_check_ids("c1, C4,c1") == ("C1", "C4")
    assert parse_check_ids(["c2"]) == ("C2",)
    with pytest.raises(ConfigError):
        parse_check_ids(" , ")


def test_parse_weight_cap():
    assert parse_weight_cap("auto") == "auto"
    assert parse_weight_cap("20") == 20
    with pytest.raises(ConfigError):
        parse_weight_cap("big")


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(k_values=())
    with pytest.raises(ConfigError):
        RunConfig(k_values=(0,))
    with pytest.raises(ConfigError):
        RunConfig(mode="fast")
    with pytest.raises(ConfigError):
        RunConfig(format="xml")
    with pytest.raises(ConfigError):
        RunConfig(jobs=0)
    with pytest.raises(ConfigError):
        RunConfig(weight_cap=0)


def test_cap_and_overrides():
    config = RunConfig()
    assert config.cap_for(5) == 16
    changed = config.with_overrides(weight_cap=30, mode=None, jobs=2)
    assert changed.cap_for(5) == 30
    assert changed.mode == "auto"
    assert changed.jobs == 2
    assert config.jobs == 1


def test_config_from_dict():
    config = config_from_dict(
        {
            "run": {"k": "5..6", "checks": "C1,C2", "format": "json", "mutations": ["g2:0"]},
            "limits": {"random_products": 3},
        }
    )
    assert config.k_values == (5, 6)
    assert config.check_ids == ("C1", "C2")
    assert config.format == "json"
    assert config.mutations == ("g2:0",)
    assert config.limits == Limits(random_products=3)


@pytest.mark.parametrize(
    "data",
    [
        {"server": {}},
        {"run": {"levels": "5"}},
        {"limits": {"unknown": 1}},
        {"limits": {"seed": -1}},
        {"run": {"mode": "fast"}},
    ],
)
def test_config_from_dict_rejects(data):
    with pytest.raises(ConfigError):
        config_from_dict(data)


def test_load_config_from_file(tmp_path):
    path = tmp_path / "verify.yaml"
    path.write_text("run:\n  k: 5..7\n  strict: true\nlimits:\n  seed: 7\n", encoding="utf-8")
    config = load_config(path)
    assert config.k_values == (5, 6, 7)
    assert config.strict
    assert config.limits.seed == 7


def test_load_config_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.yaml")
    broken = tmp_path / "broken.yaml"
    broken.write_text("run: [unclosed\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(broken)


def test_shipped_defaults_match_built_ins():
    assert DEFAULT_CONFIG_PATH.exists()
    assert load_config() == RunConfig()
