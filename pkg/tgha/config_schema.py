"""Session configuration schema.

A session can be described by CLI flags, by a YAML file under the `tgha:`
key, or both; flags win. Every source is validated by the same schema.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from typing import Any, Final

import voluptuous as vol

from .const import (
    BUILTIN_PREFIX,
    DEFAULT_DEGREE_BOUND,
    DEFAULT_GROUP_CAP,
    DEFAULT_RANDOM_SEED,
    DOMAIN,
    TABLE_PREFIX,
    CocycleKind,
    Command,
    Config,
    EmitFormat,
    RootType,
    Strategy,
)

_POSITIVE_INT: Final = vol.All(vol.Coerce(int), vol.Range(min=1))


def rational(value: Any) -> Fraction:
    """Coerce 3, '3', '-1/2' or 0.5 to a Fraction."""
    if isinstance(value, bool):
        raise vol.Invalid(f"expected a rational number, got {value!r}")
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise vol.Invalid(f"expected a rational number, got {value!r}") from exc


def cocycle_selector(value: Any) -> str:
    """Accept trivial, elem-abelian, sym-cover or table:PATH."""
    text = str(value).strip()
    if text.startswith(TABLE_PREFIX):
        if not text.removeprefix(TABLE_PREFIX):
            raise vol.Invalid("table cocycle needs a path, as in table:FILE")
        return text
    if text == CocycleKind.TABLE or text not in {str(kind) for kind in CocycleKind}:
        raise vol.Invalid(f"unknown cocycle selector {text!r}")
    return text


def group_selector(value: Any) -> str:
    """Accept a group file path or a builtin:KIND:ARGS selector."""
    text = str(value).strip()
    if not text:
        raise vol.Invalid("group selector is empty")
    if text.startswith(BUILTIN_PREFIX) and len(text.split(":")) < 3:
        raise vol.Invalid(f"incomplete builtin selector {text!r}")
    return text


def seed_forms(value: Any) -> dict[str, Fraction]:
    """Accept a mapping WORD -> rational or a list of WORD=RATIONAL strings."""
    if value is None:
        return {}
    if isinstance(value, Mapping):
        items = list(value.items())
    else:
        items = []
        for entry in vol.Schema([str])(value if isinstance(value, list) else [value]):
            word, sep, number = entry.partition("=")
            if not sep or not word.strip():
                raise vol.Invalid(f"seed form {entry!r} is not WORD=RATIONAL")
            items.append((word, number))
    seeds: dict[str, Fraction] = {}
    for word, number in items:
        word = str(word).strip()
        if word in seeds:
            raise vol.Invalid(f"seed for {word!r} given twice")
        seeds[word] = rational(number)
    return seeds


def ensure_list(value: Any) -> list[str]:
    """Wrap a single expression in a list; None becomes the empty list."""
    if value is None:
        return []
    return vol.Schema([str])(value if isinstance(value, list) else [value])


def _validate_session(config: dict[str, Any]) -> dict[str, Any]:
    """Apply the cross-field rules of each command."""
    command = config.get(Config.COMMAND)
    if command is None:
        return config

    if command is not Command.LUSZTIG and not config.get(Config.GROUP):
        raise vol.Invalid(f"'group' is required for {command}")

    if command is Command.VERIFY and not config.get(Config.FORMS):
        raise vol.Invalid("'forms' is required for verify")

    if command is Command.FORMS and config.get(Config.FORMS):
        raise vol.Invalid("'forms' writes a forms file; use 'output' for its destination")

    if config.get(Config.FORMS) and config.get(Config.SEED_FORMS):
        raise vol.Invalid("give either 'forms' or 'seed_forms', not both")

    if command is Command.MULTIPLY and not config.get(Config.EXPRESSIONS):
        raise vol.Invalid("multiply needs at least one expression")

    if command is Command.MU and len(config.get(Config.EXPRESSIONS, [])) % 2:
        raise vol.Invalid("mu takes expressions in pairs")

    return config


SESSION_SCHEMA: Final = vol.All(
    vol.Schema(
        {
            vol.Optional(str(Config.COMMAND)): vol.Coerce(Command),
            vol.Optional(str(Config.GROUP)): group_selector,
            vol.Optional(str(Config.COCYCLE), default=str(CocycleKind.TRIVIAL)): cocycle_selector,
            vol.Optional(str(Config.FORMS)): vol.All(str, vol.Length(min=1)),
            vol.Optional(str(Config.SEED_FORMS), default=dict): seed_forms,
            vol.Optional(str(Config.BOUND), default=DEFAULT_DEGREE_BOUND): _POSITIVE_INT,
            vol.Optional(str(Config.CAP), default=DEFAULT_GROUP_CAP): _POSITIVE_INT,
            vol.Optional(str(Config.FORCE), default=False): vol.Boolean(),
            vol.Optional(str(Config.EMIT), default=str(EmitFormat.TEXT)): vol.Coerce(EmitFormat),
            vol.Optional(str(Config.RANDOM_SEED), default=DEFAULT_RANDOM_SEED): vol.Coerce(int),
            vol.Optional(str(Config.STABILITY_SAMPLES), default=0): vol.All(
                vol.Coerce(int), vol.Range(min=0)
            ),
            vol.Optional(str(Config.STRATEGY), default=str(Strategy.LEFTMOST)): vol.Coerce(Strategy),
            vol.Optional(str(Config.ROOT_TYPE), default=str(RootType.A2)): vol.Coerce(RootType),
            vol.Optional(str(Config.K), default=1): rational,
            vol.Optional(str(Config.K2)): rational,
            vol.Optional(str(Config.CHECK), default=False): vol.Boolean(),
            vol.Optional(str(Config.EXPRESSIONS), default=list): ensure_list,
            vol.Optional(str(Config.OUTPUT)): vol.All(str, vol.Length(min=1)),
        }
    ),
    _validate_session,
)

CONFIG_SCHEMA: Final = vol.Schema(
    {DOMAIN: SESSION_SCHEMA},
    extra=vol.ALLOW_EXTRA,
)
