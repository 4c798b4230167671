import argparse
import ast
import collections
import os
import re

import yaml

from .exceptions import ConfigError


# Sentinel for default values lower down.
NotSet = object()


ConfigSpec = collections.namedtuple('ConfigSpec', 'name default sections doc arg_kwargs')

class Config(dict):

    specifications = []

    @classmethod
    def register(cls, name, default, sections=None, doc=None, arg_kwargs=None):
        cls.specifications.append(ConfigSpec(name, default, sections or (), doc, arg_kwargs))

    def __init__(self, environ=None):
        super(Config, self).__init__()
        for spec in self.specifications:
            self[spec.name] = spec.default
        self.update_from_environ(os.environ if environ is None else environ)
        self.update_from_includes()

    def __getattr__(self, name):
        if not name.isupper():
            raise AttributeError(name)
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name)

    def __setattr__(self, name, value):
        if name.isupper():
            self[name] = value
        else:
            super(Config, self).__setattr__(name, value)

    def update_from_environ(self, environ):
        # Override with SLQ_* envvars. We attempt to parse them as Python literals,
        # so that `SLQ_MAX_HEAP=3` results in the integer 3 instead of a string.
        for k, v in environ.items():
            if k.startswith('SLQ_'):
                self[k[4:]] = parse_literal(v)

    def update_from_includes(self):
        paths = self.CONFIG
        if isinstance(paths, str):
            paths = [p for p in paths.split(':') if p]
        for path in paths or ():
            with open(path) as fh:
                data = yaml.safe_load(fh)
            if data is None:
                continue
            if not isinstance(data, dict):
                raise ConfigError('%s must contain a mapping, not %s' % (path, type(data).__name__))
            for key, value in data.items():
                self[str(key).upper()] = value

    def add_arguments(self, parser, sections=None):

        sections = set(sections or ())

        group_name = None
        group = None

        for spec in self.specifications:

            k = spec.name
            if not k.isupper(): # Extra protection.
                continue

            # Only if it is in requested sections
            if sections and not sections.intersection(spec.sections):
                continue

            group_names = [s for s in spec.sections if s in sections or not sections]
            if group_name not in group_names:
                group_name = group_names[0]
                group = parser.add_argument_group(group_name.title() + ' Options')

            kwargs = dict(spec.arg_kwargs or {})
            flags = kwargs.pop('flags', ['--' + k.lower().replace('_', '-')])
            kwargs['dest'] = 'config_' + k
            if kwargs.get('action') not in ('store_true', ):
                kwargs.setdefault('metavar', k)
            kwargs.setdefault('default', NotSet)
            if spec.doc and 'help' not in kwargs:
                kwargs['help'] = ' '.join(spec.doc.split())
            group.add_argument(*flags, **kwargs)

    def parse_args(self, args):

        overrides = {}
        for name, value in vars(args).items():

            if value is NotSet:
                continue

            m = re.match(r'^config_([A-Z_]+)$', name)
            if not m:
                continue

            overrides[m.group(1)] = parse_literal(value)

        # Includes named on the command line sit underneath the other flags.
        if 'CONFIG' in overrides:
            self['CONFIG'] = overrides.pop('CONFIG')
            self.update_from_includes()
        self.update(overrides)

    def bounds_overridden(self):
        """Were any of the oracle bounds set explicitly?"""
        return any(self[k] is not None for k in ('MAX_HEAP', 'MAX_LOC', 'BUDGET', 'FRESH'))


def parse_literal(value):
    if not isinstance(value, str):
        return value
    try:
        return ast.literal_eval(value)
    except (ValueError, SyntaxError):
        return value


def _nat(value):
    try:
        value = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError('%r is not a natural number' % value)
    if value < 0:
        raise argparse.ArgumentTypeError('%r is negative' % value)
    return value


# === BOUNDS ===

Config.register('MAX_HEAP', None, ['bounds'], '''
    Largest heap (in cells) enumerated by the brute-force oracle. Defaults to
    the size bound of the formula's basis.
''', arg_kwargs=dict(type=_nat, metavar='N'))

Config.register('MAX_LOC', None, ['bounds'], '''
    Size of the location universe; locations are drawn from [0, MAX_LOC).
''', arg_kwargs=dict(type=_nat, metavar='M'))

Config.register('BUDGET', None, ['bounds'], '''
    Largest extension heap tried when evaluating -* and -o.
''', arg_kwargs=dict(type=_nat, metavar='B'))

Config.register('FRESH', None, ['bounds'], '''
    Number of fresh locations offered to extension heaps.
''', arg_kwargs=dict(type=_nat, metavar='F'))


# === OUTPUT ===

Config.register('FORMAT', 'human', ['output'], '''
    Output mode; ``human`` for text, ``record`` for one JSON document.
''', arg_kwargs=dict(choices=['human', 'record']))

Config.register('TRACE', False, ['output'], '''
    Dump core type counts for every elimination of * and -o.
''', arg_kwargs=dict(action='store_true'))


# === LOGGING ===

Config.register('LOG_LEVEL', 'WARNING', ['logging'], '''
    Root logging level, by name.
''')
Config.register('LOG_FILE', None, ['logging'], '''
    Optional file to also append logs to.
''')


# === TESTING ===

Config.register('ORACLE_SAMPLES', 60, ['testing'], '''
    How many seeded random formulas the oracle agreement suites try. The
    default keeps a test run short; acceptance runs export
    ``SLQ_ORACLE_SAMPLES=1000``.
''')
Config.register('CORE_SAMPLES', 150, ['testing'], '''
    How many random Boolean combinations of core literals are cross-checked
    between the abstract core oracle and the brute-force oracle.
''')
Config.register('MUTATION_SAMPLES', 100, ['testing'], '''
    How many single-step mutations are tried against the builtin derivations.
''')
Config.register('ORACLE_VARS', 2, ['testing'], '''
    How many variables (drawn from x, y, z) the random formulas of the oracle
    agreement suites mention.
''')
Config.register('ORACLE_MAX_K', 1, ['testing'], '''
    Largest ``size >= k`` index in the random formulas of the oracle suites.
''')
Config.register('ORACLE_MAX_LEAVES', 3, ['testing'], '''
    Most atoms in one random formula of the oracle suites.
''')
Config.register('SLOW', False, ['testing'], '''
    Also run the slow suites: the acceptance run of the oracles over the
    full random formula shape, and the box grids over larger heaps.
''')
Config.register('ACCEPTANCE_SAMPLES', 1000, ['testing'], '''
    How many random formulas the slow acceptance run decides.
''')
Config.register('ACCEPTANCE_SECONDS', 600, ['testing'], '''
    Time allowed for each slow acceptance run; its elapsed time is logged.
''')


# === OTHER ===

Config.register('CONFIG', None, ['environ'], '''
    List of YAML configuration files to include; usually set via $SLQ_CONFIG
    as a colon-delimited list.
''', arg_kwargs=dict(
    metavar='PATH',
))


if os.environ.get('IS_SPHINX'):
    # Build up the docstring.
    doc_parts = []
    last_heading = None
    for spec in Config.specifications:
        if spec.sections and last_heading != spec.sections[0]:
            last_heading = spec.sections[0]
            doc_parts.append('%s\n%s\n' % (last_heading.title(), '-' * len(last_heading)))
        doc_parts.append('.. data:: %s\n\n%s' % (spec.name, spec.doc))
    __doc__ = '\n\n'.join(doc_parts)
