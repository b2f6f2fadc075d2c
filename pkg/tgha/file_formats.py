"""Readers and writers for group, cocycle and forms files.

All three formats are line oriented; `#` starts a comment and blank lines are
ignored. Matrix entries are literals without spaces, separated by spaces.
"""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

from .classify import FormFamily, SkewForm
from .cocycle import TwoCocycle, cocycle_from_table
from .const import _LOGGER, DEFAULT_GROUP_CAP, IDENTITY_FORM_WORD
from .cyclo import Cyclotomic, to_literal
from .exceptions import ParseError
from .linalg import Matrix
from .matgroup import FiniteMatrixGroup, generate_group
from .parsing import parse_literal, resolve_word

COCYCLE_HEADER = ("cocycle", "table")


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split("#", 1)[0].split()
        if fields:
            yield number, fields


class _Lines:
    """Cursor over the content lines of one file."""

    def __init__(self, text: str, source: str) -> None:
        self.lines = list(_content_lines(text))
        self.position = 0
        self.source = source

    @property
    def line(self) -> int:
        if self.position < len(self.lines):
            return self.lines[self.position][0]
        return self.lines[-1][0] if self.lines else 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.source, self.line)

    def done(self) -> bool:
        return self.position >= len(self.lines)

    def next(self, what: str) -> tuple[int, list[str]]:
        if self.done():
            raise ParseError(f"unexpected end of file, expected {what}", self.source, self.line)
        entry = self.lines[self.position]
        self.position += 1
        return entry

    def integer(self, name: str) -> int:
        number, fields = self.next(f"'{name}'")
        if len(fields) != 2 or fields[0] != name:
            raise ParseError(f"expected '{name} <value>'", self.source, number)
        if not fields[1].isdigit() or int(fields[1]) < 1:
            raise ParseError(f"'{name}' needs a positive integer, got {fields[1]!r}", self.source, number)
        return int(fields[1])

    def matrix(self, n: int, conductor: int) -> Matrix:
        rows = []
        for _ in range(n):
            number, fields = self.next("a matrix row")
            if len(fields) != n:
                raise ParseError(f"expected {n} entries, got {len(fields)}", self.source, number)
            rows.append(tuple(parse_literal(f, conductor, self.source, number) for f in fields))
        return Matrix(tuple(rows))


def read_group_text(
    text: str, source: str = "<group>", cap: int = DEFAULT_GROUP_CAP, name: str | None = None
) -> FiniteMatrixGroup:
    """Parse `conductor N`, `dim n`, `generators k` and k blocks of n rows."""
    lines = _Lines(text, source)
    conductor = lines.integer("conductor")
    n = lines.integer("dim")
    count = lines.integer("generators")
    gens = [lines.matrix(n, conductor) for _ in range(count)]
    if not lines.done():
        raise lines.error("trailing content after the last generator")
    _LOGGER.debug("%s; read %d generators of size %d", source, count, n)
    return generate_group(gens, cap, conductor=conductor, name=name or Path(source).stem)


def read_group(path: str | Path, cap: int = DEFAULT_GROUP_CAP) -> FiniteMatrixGroup:
    """Read a group file."""
    path = Path(path)
    return read_group_text(path.read_text(encoding="utf-8"), str(path), cap, path.stem)


def format_group(group: FiniteMatrixGroup) -> str:
    """Write the generators of a group in group-file syntax."""
    lines = [f"conductor {group.conductor}", f"dim {group.dim}", f"generators {len(group.generators)}"]
    for number, g in enumerate(group.generators, start=1):
        lines.append(f"# g{number}")
        lines.extend(_matrix_lines(group.matrix(g), group.conductor))
    return "\n".join(lines) + "\n"


def read_cocycle_text(text: str, group: FiniteMatrixGroup, source: str = "<cocycle>") -> TwoCocycle:
    """Parse `cocycle table` followed by one `g h value` line per pair."""
    lines = _Lines(text, source)
    number, header = lines.next("'cocycle table'")
    if tuple(header) != COCYCLE_HEADER:
        raise ParseError("expected header 'cocycle table'", source, number)
    values: dict[tuple[int, int], Cyclotomic] = {}
    while not lines.done():
        number, fields = lines.next("a table row")
        if len(fields) != 3:
            raise ParseError("expected '<element> <element> <value>'", source, number)
        g = resolve_word(group, fields[0], source, number)
        h = resolve_word(group, fields[1], source, number)
        if (g, h) in values:
            raise ParseError(f"duplicate entry for ({fields[0]}, {fields[1]})", source, number)
        values[(g, h)] = parse_literal(fields[2], group.conductor, source, number)
    expected = group.order**2
    if len(values) != expected:
        raise ParseError(f"table has {len(values)} entries, expected {expected}", source, lines.line)
    alpha = cocycle_from_table(group, values)
    _LOGGER.debug("%s; read %d cocycle values", source, len(values))
    return alpha


def read_cocycle(path: str | Path, group: FiniteMatrixGroup) -> TwoCocycle:
    """Read a cocycle table file."""
    path = Path(path)
    return read_cocycle_text(path.read_text(encoding="utf-8"), group, str(path))


def format_cocycle(alpha: TwoCocycle) -> str:
    """Write a cocycle as a table keyed by raw element indices."""
    conductor = alpha.group.conductor
    lines = [" ".join(COCYCLE_HEADER)]
    for g in range(alpha.group.order):
        for h in range(alpha.group.order):
            lines.append(f"{g} {h} {_literal(alpha(g, h), conductor)}")
    return "\n".join(lines) + "\n"


def read_forms_text(
    text: str, group: FiniteMatrixGroup, alpha: TwoCocycle, source: str = "<forms>"
) -> FormFamily:
    """Parse `form <element-word>` blocks of n rows; `form identity` is a_1."""
    lines = _Lines(text, source)
    forms: dict[int, SkewForm] = {}
    seen: set[int] = set()
    while not lines.done():
        number, fields = lines.next("'form <element>'")
        if len(fields) != 2 or fields[0] != "form":
            raise ParseError("expected 'form <element>'", source, number)
        g = resolve_word(group, fields[1], source, number)
        if g in seen:
            raise ParseError(f"form for {fields[1]} given twice", source, number)
        seen.add(g)
        form = SkewForm(lines.matrix(group.dim, group.conductor))
        if not form.is_zero():
            forms[g] = form
    _LOGGER.debug("%s; read %d nonzero forms", source, len(forms))
    return FormFamily(group, alpha, forms)


def read_forms(path: str | Path, group: FiniteMatrixGroup, alpha: TwoCocycle) -> FormFamily:
    """Read a forms file."""
    path = Path(path)
    return read_forms_text(path.read_text(encoding="utf-8"), group, alpha, str(path))


def format_forms(family: FormFamily) -> str:
    """Write the nonzero forms of a family in forms-file syntax."""
    group = family.group
    lines: list[str] = []
    for g in family.support():
        word = IDENTITY_FORM_WORD if g == 0 else group.word(g)
        lines.append(f"form {word}")
        lines.extend(_matrix_lines(family.forms[g].matrix, group.conductor))
    return "\n".join(lines) + "\n" if lines else ""


def _literal(x: Cyclotomic, conductor: int) -> str:
    return to_literal(x, conductor).replace(" ", "")


def _matrix_lines(matrix: Matrix, conductor: int) -> list[str]:
    return [" ".join(_literal(x, conductor) for x in row) for row in matrix.rows]
