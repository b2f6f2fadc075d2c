"""Tests for the session configuration schema."""

from dataclasses import replace
from fractions import Fraction
from pathlib import Path

import pytest
import voluptuous as vol
import yaml

from tgha.config_schema import CONFIG_SCHEMA, cocycle_selector, group_selector, rational, seed_forms
from tgha.const import DOMAIN, CocycleKind, Command, EmitFormat, Strategy
from tgha.session import Session, SessionConfig

ROOT = Path(__file__).resolve().parents[1]


def validate(**section):
    return CONFIG_SCHEMA({DOMAIN: section})[DOMAIN]


def test_defaults():
    config = validate(command="classify", group="builtin:sym:4")
    assert config["command"] is Command.CLASSIFY
    assert config["cocycle"] == CocycleKind.TRIVIAL
    assert config["bound"] == 3
    assert config["emit"] is EmitFormat.TEXT
    assert config["strategy"] is Strategy.LEFTMOST
    assert config["seed_forms"] == {}
    assert config["expressions"] == []


def test_other_sections_are_ignored():
    validated = CONFIG_SCHEMA({DOMAIN: {}, "logger": {"default": "info"}})
    assert "logger" in validated


def test_session_file_validates():
    document = yaml.safe_load((ROOT / "config" / "session.yaml").read_text(encoding="utf-8"))
    config = SessionConfig.from_config(CONFIG_SCHEMA(document)[DOMAIN])
    session = Session(replace(config, group=str(ROOT / config.group)))
    assert session.group.order == 9
    assert session.cocycle.name == "elem-abelian"
    assert len(session.family.support()) == 1


@pytest.mark.parametrize(
    ("value", "expected"),
    [(3, Fraction(3)), ("-1/2", Fraction(-1, 2)), (0.5, Fraction(1, 2)), (" 2/4 ", Fraction(1, 2))],
)
def test_rational(value, expected):
    assert rational(value) == expected


@pytest.mark.parametrize("value", [True, "abc", "1/0", None])
def test_bad_rational(value):
    with pytest.raises(vol.Invalid):
        rational(value)


def test_selectors():
    assert cocycle_selector("sym-cover") == "sym-cover"
    assert cocycle_selector("table:alpha.txt") == "table:alpha.txt"
    assert group_selector(" builtin:sl2:4 ") == "builtin:sl2:4"
    for bad in ("table", "table:", "bogus"):
        with pytest.raises(vol.Invalid):
            cocycle_selector(bad)
    for bad in ("", "builtin:sym"):
        with pytest.raises(vol.Invalid):
            group_selector(bad)


def test_seed_forms():
    assert seed_forms(["g1=1", "g2 = -1/3"]) == {"g1": Fraction(1), "g2": Fraction(-1, 3)}
    assert seed_forms({"identity": 2}) == {"identity": Fraction(2)}
    assert seed_forms(None) == {}
    for bad in (["g1"], ["=1"], ["g1=1", "g1=2"]):
        with pytest.raises(vol.Invalid):
            seed_forms(bad)


@pytest.mark.parametrize(
    "section",
    [
        {"command": "classify"},
        {"command": "verify", "group": "builtin:sym:4"},
        {"command": "forms", "group": "builtin:sym:4", "forms": "a.forms"},
        {"command": "classify", "group": "builtin:sym:4", "forms": "a.forms", "seed_forms": ["g1=1"]},
        {"command": "multiply", "group": "builtin:sym:4"},
        {"command": "mu", "group": "builtin:sym:4", "expressions": ["v1"]},
        {"command": "classify", "group": "builtin:sym:4", "bound": 0},
        {"command": "classify", "group": "builtin:sym:4", "emit": "xml"},
        {"command": "lusztig", "type": "G2"},
        {"command": "dance", "group": "builtin:sym:4"},
    ],
)
def test_invalid_sessions(section):
    with pytest.raises(vol.Invalid):
        CONFIG_SCHEMA({DOMAIN: section})


def test_lusztig_needs_no_group():
    config = validate(command="lusztig", type="B2", k="1", k2="1/2")
    assert config["k"] == Fraction(1)
    assert config["k2"] == Fraction(1, 2)
