import json
import logging
import sys

from ..config import Config
from ..parser import parse


#: Version of the documents printed by ``--format record``.
SCHEMA_VERSION = 1


class Command(object):

    """One ``slq`` verb.

    Subclasses set :attr:`name`, add their own arguments, and return an exit
    status from :meth:`main`.

    """

    name = None
    help = None
    args_sections = ['output', 'logging', 'environ']

    def __init__(self, config=None):
        self.config = Config() if config is None else config
        self.log = logging.getLogger(self.__class__.__module__)

    def add_arguments(self, parser):
        self.config.add_arguments(parser, self.args_sections)

    def main(self, args):
        raise NotImplementedError()

    def read_formula(self, args, value):
        """Parse ``value``, or the file it names under ``-f``."""
        if getattr(args, 'file', False):
            with open(value, encoding='utf-8') as fh:
                value = fh.read()
        return parse(value)

    def emit(self, record, lines):
        if self.config.FORMAT == 'record':
            doc = dict(record, schema_version=SCHEMA_VERSION, verb=self.name)
            print(json.dumps(doc, indent=2, sort_keys=True))
        else:
            for line in lines:
                print(line)
        sys.stdout.flush()


def add_file_argument(parser):
    parser.add_argument('-f', '--file', action='store_true',
        help='Formula arguments are paths to UTF-8 files holding one formula each.',
    )
