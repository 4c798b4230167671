import argparse
import logging
import sys

import yaml

from .. import __version__
from ..config import Config
from ..exceptions import (
    BindingError, BoundsError, ConfigError, FormulaSyntaxError, ProofFormatError,
    SideConditionFailed, UnknownDerivation, UnknownSchema,
)
from ..logs import log_context, setup_logs
from .decide import EntailCommand, ModelCommand, NormalizeCommand, SatCommand, ValidCommand
from .oracle import OracleCommand
from .proofs import CheckProofCommand, DerivationsCommand, SchemasCommand


log = logging.getLogger(__name__)


COMMANDS = [
    ValidCommand,
    SatCommand,
    NormalizeCommand,
    ModelCommand,
    EntailCommand,
    CheckProofCommand,
    OracleCommand,
    SchemasCommand,
    DerivationsCommand,
]

# Reported on stderr with exit status 2; anything else is a bug.
USAGE_ERRORS = (
    BindingError,
    BoundsError,
    ConfigError,
    FormulaSyntaxError,
    ProofFormatError,
    SideConditionFailed,
    UnknownDerivation,
    UnknownSchema,
    OSError,
    yaml.YAMLError,
)


def build_parser(config):
    parser = argparse.ArgumentParser(prog='slq',
        description='Decide and prove quantifier-free separation logic formulas.',
    )
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    subparsers = parser.add_subparsers(dest='verb', metavar='VERB')
    subparsers.required = True
    commands = {}
    for cls in COMMANDS:
        command = cls(config)
        sub = subparsers.add_parser(cls.name, help=cls.help, description=cls.__doc__)
        command.add_arguments(sub)
        commands[cls.name] = command
    return parser, commands


def _fail(verb, e):
    print('slq%s: error: %s' % (' ' + verb if verb else '', e), file=sys.stderr)
    return 2


def run(argv=None):
    """Run one ``slq`` invocation and return its exit status.

    Option errors exit from inside argparse, with status 2.

    """

    try:
        config = Config()
    except USAGE_ERRORS as e:
        return _fail(None, e)

    parser, commands = build_parser(config)
    args = parser.parse_args(argv)
    command = commands[args.verb]

    try:
        config.parse_args(args)
        setup_logs(config)
        with log_context(verb=args.verb):
            return command.main(args) or 0
    except USAGE_ERRORS as e:
        log.debug('%s failed: %r', args.verb, e)
        return _fail(args.verb, e)


def main(argv=None):
    sys.exit(run(argv))
