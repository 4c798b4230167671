from . import *

from slq.formula import (
    canonical_ac, conjoin, connective_count, disjoin, expand_shortcuts,
    size_eq_index, subformulas, substitute,
)
from slq.exceptions import BasisViolation


class TestNodes(TestCase):

    def test_structural_equality(self):
        self.assertEqual(Star(Alloc('x'), EMP), Star(Alloc('x'), EMP))
        self.assertNotEqual(Star(Alloc('x'), EMP), Star(EMP, Alloc('x')))
        self.assertEqual(len({Alloc('x'), Alloc('x'), Alloc('y')}), 2)

    def test_bad_variables(self):
        self.assertRaises(ValueError, Alloc, '1x')
        self.assertRaises(ValueError, Eq, 'x', '')
        self.assertRaises(ValueError, SizeGeq, -1)
        self.assertRaises(ValueError, SizeGeq, True)

    def test_keywords_are_not_variables(self):
        for word in ('emp', 'true', 'false', 'alloc', 'size', 'not'):
            self.assertRaises(ValueError, Eq, word, 'x')
            self.assertRaises(ValueError, PointsTo, 'x', word)
            self.assertRaises(ValueError, Alloc, word)
        self.assertEqual(Alloc('empty').var, 'empty')

    def test_free_vars(self):
        f = parse('x |-> y * (alloc(z) -* x = x)')
        self.assertEqual(free_vars(f), ('x', 'y', 'z'))
        self.assertEqual(free_vars(parse('emp * size >= 2')), ())

    def test_traversal(self):
        f = parse('not emp * alloc(x)')
        self.assertEqual(list(subformulas(f)), [f, Not(EMP), EMP, Alloc('x')])
        self.assertEqual(connective_count(f), 2)


class TestHelpers(TestCase):

    def test_size_eq(self):
        self.assertEqual(size_eq(2), And(SizeGeq(2), Not(SizeGeq(3))))
        self.assertEqual(size_eq_index(size_eq(2)), 2)
        self.assertIs(size_eq_index(And(SizeGeq(2), Not(SizeGeq(4)))), None)

    def test_conjoin(self):
        self.assertEqual(conjoin([]), TRUE)
        self.assertEqual(disjoin([]), FALSE)
        self.assertEqual(conjoin([EMP]), EMP)
        self.assertEqual(conjoin([EMP, TRUE, FALSE]), And(And(EMP, TRUE), FALSE))

    def test_substitute(self):
        f = parse('x |-> y /\\ alloc(y) /\\ y = z')
        self.assertEqual(substitute(f, {'y': 'x'}), parse('x |-> x /\\ alloc(x) /\\ x = z'))
        # Renaming is simultaneous.
        self.assertEqual(substitute(PointsTo('x', 'y'), {'x': 'y', 'y': 'x'}), PointsTo('y', 'x'))

    def test_expand_shortcuts(self):
        self.assertEqual(expand_shortcuts(Alloc('x')), Wand(PointsTo('x', 'x'), FALSE))
        self.assertEqual(expand_shortcuts(SizeGeq(0)), TRUE)
        self.assertEqual(expand_shortcuts(SizeGeq(1)), Not(EMP))
        self.assertEqual(to_text(expand_shortcuts(SizeGeq(3))), 'not emp * (not emp * not emp)')
        self.assertEqual(
            expand_shortcuts(Septraction(EMP, EMP)),
            Not(Wand(EMP, Not(EMP))),
        )
        self.assertEqual(expand_shortcuts(Or(EMP, TRUE)), Not(And(Not(EMP), Not(TRUE))))

    def test_long_chains_print_flat(self):
        text = to_text(disjoin(Alloc('x') for _ in range(5000)))
        self.assertEqual(text.count(' \\/ '), 4999)
        self.assertNotIn('(', text.replace('alloc(x)', ''))
        self.assertEqual(to_text(conjoin([size_eq(1), EMP, size_eq(2)])), 'size = 1 /\\ emp /\\ size = 2')
        self.assertEqual(to_text(Star(Star(EMP, Or(EMP, TRUE)), EMP)), 'emp * (emp \\/ true) * emp')

    def test_canonical_ac(self):
        a, b, c = Alloc('x'), EMP, PointsTo('x', 'y')
        self.assertEqual(canonical_ac(Star(Star(a, b), c)), canonical_ac(Star(c, Star(b, a))))
        self.assertEqual(canonical_ac(And(a, And(b, c))), canonical_ac(And(And(c, a), b)))
        self.assertNotEqual(canonical_ac(Star(a, b)), canonical_ac(And(a, b)))
        self.assertNotEqual(canonical_ac(Wand(a, b)), canonical_ac(Wand(b, a)))


class TestCoreBasis(TestCase):

    def test_normalizes_vars(self):
        self.assertEqual(CoreBasis(('y', 'x', 'y'), 2), CoreBasis(('x', 'y'), 2))
        self.assertEqual(str(CoreBasis(('y', 'x'), 2)), 'X={x, y}, alpha=2')
        self.assertRaises(BasisViolation, CoreBasis, (), 0)

    def test_core_formulae(self):
        basis = CoreBasis(('x', 'y'), 2)
        atoms = basis.core_formulae()
        self.assertEqual(len(atoms), 4 + 2 + 4 + 3)
        self.assertEqual(atoms[0], Eq('x', 'x'))
        self.assertEqual(atoms[-1], SizeGeq(2))
        self.assertTrue(all(basis.contains(a) for a in atoms))
        self.assertFalse(basis.contains(SizeGeq(3)))
        self.assertFalse(basis.contains(Alloc('z')))

    def test_join(self):
        a = CoreBasis(('x', ), 1)
        b = CoreBasis(('y', 'z'), 2)
        self.assertEqual(a.join(b), CoreBasis(('x', 'y', 'z'), 3))
        self.assertTrue(a.join(b).ready)
        self.assertFalse(CoreBasis(('x', 'y'), 1).ready)
