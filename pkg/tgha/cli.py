"""Command-line front end."""

from __future__ import annotations

import argparse
from collections.abc import Callable, Sequence
import logging
from pathlib import Path
import random
import sys
from typing import Any

import colorlog
import voluptuous as vol
import yaml

from .algebra import AlgebraElement, format_monomial
from .checks import associativity_check, conjugation_check, monomial_pairs, pbw_dimension_check
from .classify import classify_all, verify_family
from .cocycle import random_beta
from .config_schema import CONFIG_SCHEMA
from .const import (
    _LOGGER,
    DOMAIN,
    NAME,
    CocycleKind,
    Command,
    Config,
    EmitFormat,
    ExitStatus,
    RootType,
    Strategy,
)
from .deformation import deformation_mu
from .exceptions import ParseError, TghaError
from .file_formats import format_forms
from .lusztig import PhiMap, root_system, verify_phi_isomorphism
from .parsing import parse_element
from .reports import (
    Report,
    classify_report,
    forms_report,
    lusztig_check_report,
    lusztig_forms_report,
    mu_report,
    multiply_report,
    pbw_report,
    render,
    verify_report,
)
from .session import Session, SessionConfig

LOG_FORMAT = "%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s"
EXPRESSION_SOURCE = "<expression>"


def setup_logging(verbose: bool = False) -> None:
    """Send package logs to stderr through a colored formatter."""
    handler = colorlog.StreamHandler(sys.stderr)
    handler.setFormatter(colorlog.ColoredFormatter(LOG_FORMAT))
    logger = logging.getLogger(DOMAIN)
    logger.handlers[:] = [handler]
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    parent.add_argument("--group", dest=str(Config.GROUP), help="group file or builtin:KIND:ARGS")
    parent.add_argument(
        "--cocycle",
        dest=str(Config.COCYCLE),
        help=f"{', '.join(k for k in CocycleKind if k is not CocycleKind.TABLE)} or table:FILE",
    )
    parent.add_argument("--forms", dest=str(Config.FORMS), help="forms file")
    parent.add_argument(
        "--seed-form",
        dest=str(Config.SEED_FORMS),
        action="append",
        metavar="WORD=RATIONAL",
        help="seed the class of WORD with a multiple of its canonical form",
    )
    parent.add_argument("--bound", dest=str(Config.BOUND), type=int, help="degree bound")
    parent.add_argument("--cap", dest=str(Config.CAP), type=int, help="largest group order to close")
    parent.add_argument(
        "--force", dest=str(Config.FORCE), action="store_true", help="skip family verification"
    )
    parent.add_argument(
        "--emit", dest=str(Config.EMIT), choices=[str(e) for e in EmitFormat], help="report format"
    )
    parent.add_argument("--random-seed", dest=str(Config.RANDOM_SEED), type=int)
    parent.add_argument(
        "--strategy", dest=str(Config.STRATEGY), choices=[str(s) for s in Strategy]
    )
    parent.add_argument("--output", dest=str(Config.OUTPUT), help="write the report to a file")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser."""
    parser = argparse.ArgumentParser(prog=DOMAIN, description=NAME)
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--config", type=Path, help="YAML session file with a 'tgha:' section")
    commands = parser.add_subparsers(dest="command", required=True)
    parent = _common_options()

    classify = commands.add_parser(str(Command.CLASSIFY), parents=[parent], help="admissible classes")
    classify.add_argument(
        "--stability",
        dest=str(Config.STABILITY_SAMPLES),
        type=int,
        default=argparse.SUPPRESS,
        help="also compare against this many random coboundary twists",
    )
    verify = commands.add_parser(str(Command.VERIFY), parents=[parent], help="check a forms file")
    verify.add_argument(
        "--check",
        dest=str(Config.CHECK),
        action="store_true",
        default=argparse.SUPPRESS,
        help="also run associativity and PBW checks",
    )
    commands.add_parser(str(Command.FORMS), parents=[parent], help="emit propagated forms")
    for command, text in (
        (Command.MULTIPLY, "normal forms of expressions"),
        (Command.MU, "deformation coefficients of expression pairs"),
    ):
        sub = commands.add_parser(str(command), parents=[parent], help=text)
        sub.add_argument(str(Config.EXPRESSIONS), nargs="*", default=argparse.SUPPRESS)
    commands.add_parser(str(Command.PBW_CHECK), parents=[parent], help="flatness checks")

    lusztig = commands.add_parser(str(Command.LUSZTIG), parents=[parent], help="Lusztig comparison")
    lusztig.add_argument(
        "--type", dest=str(Config.ROOT_TYPE), choices=[str(t) for t in RootType], default=argparse.SUPPRESS
    )
    lusztig.add_argument("--k", dest=str(Config.K), default=argparse.SUPPRESS, help="long-root parameter")
    lusztig.add_argument("--k2", dest=str(Config.K2), default=argparse.SUPPRESS, help="short-root parameter")
    lusztig.add_argument(
        "--check", dest=str(Config.CHECK), action="store_true", default=argparse.SUPPRESS
    )
    lusztig.add_argument(str(Config.EXPRESSIONS), nargs="*", default=argparse.SUPPRESS)
    return parser


def load_config(args: argparse.Namespace) -> SessionConfig:
    """Merge the YAML session file and the flags, then validate."""
    raw: dict[str, Any] = {}
    if args.config is not None:
        try:
            document = yaml.safe_load(args.config.read_text(encoding="utf-8")) or {}
        except OSError as exc:
            raise ParseError(f"cannot read session file: {exc.strerror}", str(args.config)) from exc
        except yaml.YAMLError as exc:
            raise ParseError(f"invalid YAML: {exc}", str(args.config)) from exc
        if not isinstance(document, dict):
            raise ParseError("session file must be a mapping", str(args.config))
        raw.update(document.get(DOMAIN) or {})
    flags = {
        k: v
        for k, v in vars(args).items()
        if k not in ("verbose", "config", "command") and v is not argparse.SUPPRESS
    }
    raw.update(flags)
    raw[str(Config.COMMAND)] = args.command
    validated = CONFIG_SCHEMA({DOMAIN: raw})[DOMAIN]
    return SessionConfig.from_config(validated)


def cmd_classify(session: Session) -> Report:
    """Classify the admissible classes."""
    group, alpha = session.group, session.cocycle
    result = classify_all(group, alpha)
    stable = None
    samples = session.config.stability_samples
    if samples:
        rng = random.Random(session.config.random_seed)
        flags = result.flags()
        stable = all(
            classify_all(group, alpha.twisted_by(random_beta(group, rng))).flags() == flags
            for _ in range(samples)
        )
    return classify_report(group, alpha, result, stable)


def cmd_verify(session: Session) -> Report:
    """Verify a forms file, optionally with the flatness checks."""
    family = session.family
    result = verify_family(family)
    associativity = pbw = None
    if session.config.check and (result.passed or session.config.force):
        algebra = session.algebra
        bound = session.config.bound
        associativity = associativity_check(algebra, bound)
        pbw = pbw_dimension_check(algebra, bound)
    return verify_report(family, result, associativity, pbw)


def cmd_forms(session: Session) -> Report:
    """Emit the propagated family in forms-file syntax."""
    family = session.family
    text = format_forms(family)
    destination = session.config.output
    if destination is not None:
        Path(destination).write_text(text, encoding="utf-8")
        _LOGGER.debug("%s; wrote %d forms to %s", family.group.name, len(family.support()), destination)
    return forms_report(family, text, destination)


def cmd_multiply(session: Session) -> Report:
    """Reduce each expression to normal form."""
    algebra = session.algebra
    products = [
        (text, parse_element(algebra, text, EXPRESSION_SOURCE, number))
        for number, text in enumerate(session.config.expressions, start=1)
    ]
    return multiply_report(algebra, products)


def _require_t_free(element: AlgebraElement, text: str, number: int) -> None:
    if any(m.tpow for m in element.terms):
        raise ParseError(f"{text!r} involves t", EXPRESSION_SOURCE, number)


def cmd_mu(session: Session) -> Report:
    """Split products by t-power, asserting the degree law on every monomial pair."""
    algebra = session.algebra
    entries: list[tuple[str, str, list[AlgebraElement]]] = []
    expressions = session.config.expressions
    if expressions:
        for number in range(0, len(expressions), 2):
            x_text, y_text = expressions[number], expressions[number + 1]
            x = parse_element(algebra, x_text, EXPRESSION_SOURCE, number + 1)
            y = parse_element(algebra, y_text, EXPRESSION_SOURCE, number + 2)
            _require_t_free(x, x_text, number + 1)
            _require_t_free(y, y_text, number + 2)
            for r in x.terms:
                for s in y.terms:
                    deformation_mu(algebra, r, s)
            product = algebra.multiply(x, y)
            top = max(product.t_powers(), default=0)
            entries.append((x_text, y_text, [product.t_coefficient(i) for i in range(1, top + 1)]))
    else:
        for r, s in monomial_pairs(algebra, session.config.bound):
            values = deformation_mu(algebra, r, s)
            if any(values):
                entries.append((format_monomial(r, algebra.group), format_monomial(s, algebra.group), values))
    return mu_report(algebra, entries)


def cmd_pbw_check(session: Session) -> Report:
    """Run associativity, PBW and conjugation checks."""
    algebra = session.algebra
    bound = session.config.bound
    return pbw_report(
        algebra,
        associativity_check(algebra, bound),
        pbw_dimension_check(algebra, bound),
        conjugation_check(algebra),
    )


def cmd_lusztig(session: Session) -> Report:
    """Show the Ram-Shepler forms and Phi_t images, or verify Phi_t."""
    config = session.config
    system = root_system(config.root_type, config.k, config.k2)
    if config.check:
        return lusztig_check_report(system, verify_phi_isomorphism(system, config.bound), config.bound)
    phi = PhiMap(system)
    images = []
    for number, text in enumerate(config.expressions, start=1):
        element = parse_element(system.lusztig, text, EXPRESSION_SOURCE, number)
        images.append((text, element, phi(element)))
    return lusztig_forms_report(system, images)


COMMANDS: dict[Command, Callable[[Session], Report]] = {
    Command.CLASSIFY: cmd_classify,
    Command.VERIFY: cmd_verify,
    Command.FORMS: cmd_forms,
    Command.MULTIPLY: cmd_multiply,
    Command.MU: cmd_mu,
    Command.PBW_CHECK: cmd_pbw_check,
    Command.LUSZTIG: cmd_lusztig,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit status."""
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        config = load_config(args)
        report = COMMANDS[config.command](Session(config))
    except vol.Invalid as exc:
        _LOGGER.error("configuration; %s", exc)
        return int(ExitStatus.PARSE)
    except TghaError as exc:
        _LOGGER.error("%s; %s", type(exc).__name__, exc)
        return int(exc.exit_status)

    text = render(report, config.emit)
    if config.output is not None and config.command is not Command.FORMS:
        Path(config.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return int(report.exit_status)
