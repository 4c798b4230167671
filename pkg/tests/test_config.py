import argparse
import tempfile

from . import *

from slq.config import Config, parse_literal
from slq.exceptions import ConfigError


class TestConfig(TestCase):

    def test_defaults(self):
        c = Config(environ={})
        self.assertEqual(c.FORMAT, 'human')
        self.assertIs(c.MAX_HEAP, None)
        self.assertFalse(c.bounds_overridden())

    def test_environ(self):
        c = Config(environ={'SLQ_MAX_HEAP': '3', 'SLQ_LOG_LEVEL': 'DEBUG', 'OTHER': '1'})
        self.assertEqual(c.MAX_HEAP, 3)
        self.assertEqual(c.LOG_LEVEL, 'DEBUG')
        self.assertNotIn('OTHER', c)
        self.assertTrue(c.bounds_overridden())

    def test_testing(self):
        c = Config(environ={})
        self.assertFalse(c.SLOW)
        self.assertEqual((c.ORACLE_VARS, c.ORACLE_MAX_K, c.ORACLE_MAX_LEAVES), (2, 1, 3))
        self.assertEqual(c.ACCEPTANCE_SAMPLES, 1000)
        c = Config(environ={'SLQ_SLOW': '1', 'SLQ_ORACLE_VARS': '3'})
        self.assertEqual((c.SLOW, c.ORACLE_VARS), (1, 3))

    def test_attribute_access(self):
        c = Config(environ={})
        c.BUDGET = 2
        self.assertEqual(c['BUDGET'], 2)
        self.assertRaises(AttributeError, getattr, c, 'NOT_A_SETTING')
        self.assertRaises(AttributeError, getattr, c, 'lowercase')

    def test_includes(self):
        with tempfile.NamedTemporaryFile('w', suffix='.yml') as fh:
            fh.write('max_loc: 7\nformat: record\n')
            fh.flush()
            c = Config(environ={'SLQ_CONFIG': fh.name})
        self.assertEqual(c.MAX_LOC, 7)
        self.assertEqual(c.FORMAT, 'record')

    def test_include_not_mapping(self):
        with tempfile.NamedTemporaryFile('w', suffix='.yml') as fh:
            fh.write('- 1\n- 2\n')
            fh.flush()
            self.assertRaises(ConfigError, Config, environ={'SLQ_CONFIG': fh.name})

    def test_arguments(self):
        c = Config(environ={})
        parser = argparse.ArgumentParser()
        c.add_arguments(parser, ['bounds', 'output'])
        args = parser.parse_args(['--max-heap', '2', '--trace'])
        c.parse_args(args)
        self.assertEqual(c.MAX_HEAP, 2)
        self.assertIs(c.TRACE, True)
        # Flags which were not given leave the settings alone.
        self.assertIs(c.MAX_LOC, None)
        self.assertEqual(c.FORMAT, 'human')

    def test_sections(self):
        c = Config(environ={})
        parser = argparse.ArgumentParser()
        c.add_arguments(parser, ['output'])
        self.assertRaises(SystemExit, parser.parse_args, ['--max-heap', '2'])

    def test_negative_bound(self):
        c = Config(environ={})
        parser = argparse.ArgumentParser()
        c.add_arguments(parser, ['bounds'])
        self.assertRaises(SystemExit, parser.parse_args, ['--budget', '-1'])

    def test_parse_literal(self):
        self.assertEqual(parse_literal('3'), 3)
        self.assertEqual(parse_literal('[1, 2]'), [1, 2])
        self.assertEqual(parse_literal('human'), 'human')
        self.assertEqual(parse_literal(4), 4)
