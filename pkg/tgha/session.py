"""Assemble group, cocycle, form family and algebra from a validated configuration."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Any

from .algebra import HeckeAlgebra
from .catalog import builtin_group
from .classify import FormFamily, propagate_family, zero_family
from .cocycle import (
    TwoCocycle,
    elementary_abelian_cocycle,
    symmetric_group_cocycle,
    trivial_cocycle,
    verify_cocycle,
)
from .const import (
    _LOGGER,
    BUILTIN_PREFIX,
    DEFAULT_DEGREE_BOUND,
    DEFAULT_GROUP_CAP,
    DEFAULT_RANDOM_SEED,
    IDENTITY_FORM_WORD,
    IDENTITY_WORD,
    TABLE_PREFIX,
    CocycleKind,
    Command,
    Config,
    EmitFormat,
    RootType,
    Strategy,
)
from .cyclo import ONE, ZERO
from .exceptions import ParseError
from .file_formats import read_cocycle, read_forms, read_group
from .linalg import Matrix
from .matgroup import FiniteMatrixGroup
from .parsing import resolve_word


@dataclass(frozen=True, slots=True)
class SessionConfig:
    """Validated settings for one run."""

    command: Command | None = None
    group: str | None = None
    cocycle: str = str(CocycleKind.TRIVIAL)
    forms: str | None = None
    seed_forms: Mapping[str, Fraction] = field(default_factory=dict)
    bound: int = DEFAULT_DEGREE_BOUND
    cap: int = DEFAULT_GROUP_CAP
    force: bool = False
    emit: EmitFormat = EmitFormat.TEXT
    random_seed: int = DEFAULT_RANDOM_SEED
    stability_samples: int = 0
    strategy: Strategy = Strategy.LEFTMOST
    root_type: RootType = RootType.A2
    k: Fraction = Fraction(1)
    k2: Fraction | None = None
    check: bool = False
    expressions: tuple[str, ...] = ()
    output: str | None = None

    @classmethod
    def from_config(cls, config: Mapping[str, Any]) -> SessionConfig:
        """Build from a mapping already validated by SESSION_SCHEMA."""
        return cls(
            command=config.get(Config.COMMAND),
            group=config.get(Config.GROUP),
            cocycle=config[Config.COCYCLE],
            forms=config.get(Config.FORMS),
            seed_forms=dict(config[Config.SEED_FORMS]),
            bound=config[Config.BOUND],
            cap=config[Config.CAP],
            force=config[Config.FORCE],
            emit=config[Config.EMIT],
            random_seed=config[Config.RANDOM_SEED],
            stability_samples=config[Config.STABILITY_SAMPLES],
            strategy=config[Config.STRATEGY],
            root_type=config[Config.ROOT_TYPE],
            k=config[Config.K],
            k2=config.get(Config.K2),
            check=config[Config.CHECK],
            expressions=tuple(config[Config.EXPRESSIONS]),
            output=config.get(Config.OUTPUT),
        )


def standard_symplectic_form(n: int) -> Matrix:
    """Return the block-diagonal form with blocks [[0, 1], [-1, 0]]."""
    if n % 2:
        raise ParseError(f"no symplectic form in odd dimension {n}")
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(0, n, 2):
        rows[i][i + 1] = ONE
        rows[i + 1][i] = -ONE
    return Matrix(tuple(tuple(row) for row in rows))


class Session:
    """Lazily built objects of one run; each property raises the matching TghaError."""

    def __init__(self, config: SessionConfig) -> None:
        """Initialize from a session configuration."""
        self.config = config

    @cached_property
    def group(self) -> FiniteMatrixGroup:
        """Return the group named by the group selector."""
        selector = self.config.group
        if not selector:
            raise ParseError("no group given")
        if selector.startswith(BUILTIN_PREFIX):
            return builtin_group(selector, self.config.cap)
        try:
            return read_group(selector, self.config.cap)
        except OSError as exc:
            raise ParseError(f"cannot read group file: {exc.strerror}", selector) from exc

    @cached_property
    def cocycle(self) -> TwoCocycle:
        """Return the verified cocycle named by the cocycle selector."""
        selector = self.config.cocycle
        group = self.group
        if selector.startswith(TABLE_PREFIX):
            path = Path(selector.removeprefix(TABLE_PREFIX))
            try:
                alpha = read_cocycle(path, group)
            except OSError as exc:
                raise ParseError(f"cannot read cocycle file: {exc.strerror}", str(path)) from exc
        else:
            match CocycleKind(selector):
                case CocycleKind.TRIVIAL:
                    alpha = trivial_cocycle(group)
                case CocycleKind.ELEM_ABELIAN:
                    alpha = elementary_abelian_cocycle(group)
                case CocycleKind.SYM_COVER:
                    alpha = symmetric_group_cocycle(group)
                case _:
                    raise ParseError(f"unknown cocycle selector {selector!r}")
        verify_cocycle(alpha)
        return alpha

    def seeds(self) -> tuple[dict[int, Fraction], Matrix | None]:
        """Resolve seed words to class representatives; the identity seed scales the standard symplectic form."""
        group = self.group
        seeds: dict[int, Fraction] = {}
        identity_form = None
        for word, value in self.config.seed_forms.items():
            if word in (IDENTITY_WORD, IDENTITY_FORM_WORD):
                identity_form = standard_symplectic_form(group.dim).scale(value)
                continue
            g = group.representative(resolve_word(group, word, "seed_forms"))
            if g in seeds:
                raise ParseError(f"second seed for the class of {group.word(g)}", "seed_forms")
            seeds[g] = value
        return seeds, identity_form

    @cached_property
    def family(self) -> FormFamily:
        """Return the family from the forms file, from the seeds, or the zero family."""
        if self.config.forms:
            try:
                return read_forms(self.config.forms, self.group, self.cocycle)
            except OSError as exc:
                raise ParseError(f"cannot read forms file: {exc.strerror}", self.config.forms) from exc
        seeds, identity_form = self.seeds()
        if not seeds and identity_form is None:
            return zero_family(self.group, self.cocycle)
        return propagate_family(
            self.group, self.cocycle, seeds, identity_form, force=self.config.force
        )

    @cached_property
    def algebra(self) -> HeckeAlgebra:
        """Return the Hecke algebra of the family."""
        algebra = HeckeAlgebra(self.family, force=self.config.force, strategy=self.config.strategy)
        _LOGGER.debug("%s; session algebra ready", self.group.name)
        return algebra
