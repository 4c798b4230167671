from . import *

from .strategies import formulas

from slq.exceptions import FormulaSyntaxError


class TestParse(TestCase):

    def test_atoms(self):
        self.assertEqual(parse('emp'), EMP)
        self.assertEqual(parse('true'), TRUE)
        self.assertEqual(parse('false'), FALSE)
        self.assertEqual(parse('alloc(x)'), Alloc('x'))
        self.assertEqual(parse('x |-> y'), PointsTo('x', 'y'))
        self.assertEqual(parse('x = y'), Eq('x', 'y'))
        self.assertEqual(parse('x != y'), neq('x', 'y'))
        self.assertEqual(parse('size >= 3'), SizeGeq(3))
        self.assertEqual(parse('size = 1'), size_eq(1))

    def test_precedence(self):
        self.assertEqual(parse('not emp * emp'), Star(Not(EMP), EMP))
        self.assertEqual(parse('emp /\\ emp \\/ true'), Or(And(EMP, EMP), TRUE))
        self.assertEqual(parse('emp -> true -> false'), Implies(EMP, Implies(TRUE, FALSE)))
        self.assertEqual(parse('alloc(x) -* emp -o true'), Wand(Alloc('x'), Septraction(EMP, TRUE)))
        self.assertEqual(parse('emp \\/ true -> false'), Implies(Or(EMP, TRUE), FALSE))
        self.assertEqual(parse('emp <-> true -> false'), Iff(EMP, Implies(TRUE, FALSE)))
        # /\ and * share a level, and group to the left.
        self.assertEqual(parse('emp /\\ true * false'), Star(And(EMP, TRUE), FALSE))

    def test_whitespace_and_comments(self):
        self.assertEqual(parse('  emp\n * emp  # trailing\n'), Star(EMP, EMP))

    def test_errors(self):
        for text in ('', 'emp *', 'alloc x', 'size >= ', 'x |-> ', '(emp', 'emp <-> emp <-> emp', 'size >= -1'):
            self.assertRaises(FormulaSyntaxError, parse, text)

    def test_error_position(self):
        try:
            parse('emp *\n  * emp')
        except FormulaSyntaxError as e:
            self.assertEqual(e.line, 2)
            self.assertEqual(e.column, 3)
            self.assertIn('line 2', str(e))
        else:
            self.fail('no error')

    def test_printing(self):
        for text in (
            'emp -> alloc(x) /\\ size = 1 -* not size >= 2',
            'x != y',
            'not (emp * emp)',
            '(emp -> true) -> false',
            '(emp -* true) * false',
            'emp * (true /\\ false)',
        ):
            self.assertEqual(to_text(parse(text)), text)

    @given(formulas(('x', 'y', 'z'), max_k=3, max_leaves=8))
    @sampled('ORACLE_SAMPLES')
    def test_print_then_parse(self, f):
        self.assertEqual(parse(to_text(f)), f)

    def test_keyword_prefixes_are_variables(self):
        f = Star(PointsTo('empty', 'sizes'), Or(Alloc('note'), Eq('truex', 'falsey')))
        text = to_text(f)
        self.assertEqual(text, 'empty |-> sizes * (alloc(note) \\/ truex = falsey)')
        self.assertEqual(parse(text), f)
        self.assertEqual(parse('alloc(allocated) /\\ size >= 1'), And(Alloc('allocated'), SizeGeq(1)))

    @given(formulas(('emptyx', 'sizey', 'not_z'), max_k=2, max_leaves=6))
    @sampled('ORACLE_SAMPLES')
    def test_print_then_parse_keyword_prefixes(self, f):
        self.assertEqual(parse(to_text(f)), f)
