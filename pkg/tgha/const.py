"""Constants for tgha."""

import enum
from logging import Logger, getLogger
from typing import Final

_LOGGER: Logger = getLogger(__package__)

DOMAIN: Final = "tgha"
NAME: Final = "Twisted graded Hecke algebras"

DEFAULT_DEGREE_BOUND: Final = 3
DEFAULT_GROUP_CAP: Final = 10_000
DEFAULT_RANDOM_SEED: Final = 0

# Central element of the Schur cover: lifts of disjoint transpositions anticommute.
SCHUR_COVER_CENTRAL_SIGN: Final = -1

# Above this Weyl group order the Phi_t homomorphism check uses only 1 and the simple reflections.
PHI_FULL_GROUP_ORDER: Final = 8

IDENTITY_WORD: Final = "e"
IDENTITY_FORM_WORD: Final = "identity"
BUILTIN_PREFIX: Final = "builtin:"
TABLE_PREFIX: Final = "table:"


class CocycleKind(enum.StrEnum):
    """Cocycle selectors."""

    TRIVIAL = "trivial"
    ELEM_ABELIAN = "elem-abelian"
    SYM_COVER = "sym-cover"
    TABLE = "table"


class BuiltinGroup(enum.StrEnum):
    """Builtin group families."""

    DIAG = "diag"
    SYM = "sym"
    SL2 = "sl2"


class RootType(enum.StrEnum):
    """Builtin root system types."""

    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    B2 = "B2"


class Command(enum.StrEnum):
    """CLI commands."""

    CLASSIFY = "classify"
    VERIFY = "verify"
    FORMS = "forms"
    MULTIPLY = "multiply"
    MU = "mu"
    PBW_CHECK = "pbw-check"
    LUSZTIG = "lusztig"


class EmitFormat(enum.StrEnum):
    """Report output formats."""

    TEXT = "text"
    JSON = "json"
    YAML = "yaml"


class Strategy(enum.StrEnum):
    """Rewriting strategies for normal forms."""

    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"


class ExitStatus(enum.IntEnum):
    """Process exit statuses."""

    OK = 0
    INTERNAL = 1
    PARSE = 2
    COCYCLE = 3
    FAMILY = 4
    DEGREE_LAW = 5


class Config(enum.StrEnum):
    """Configuration values."""

    BOUND = "bound"
    CAP = "cap"
    CHECK = "check"
    COCYCLE = "cocycle"
    COMMAND = "command"
    EMIT = "emit"
    EXPRESSIONS = "expressions"
    FORCE = "force"
    FORMS = "forms"
    GROUP = "group"
    K = "k"
    K2 = "k2"
    OUTPUT = "output"
    RANDOM_SEED = "random_seed"
    ROOT_TYPE = "type"
    SEED_FORMS = "seed_forms"
    STABILITY_SAMPLES = "stability_samples"
    STRATEGY = "strategy"


class Descent(enum.StrEnum):
    """Which left descent a reduced word peels off first."""

    FIRST = "first"
    LAST = "last"
