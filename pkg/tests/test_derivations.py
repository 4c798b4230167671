from . import *

from .strategies import formulas

from slq.core.decide import decide_valid
from slq.exceptions import UnknownDerivation
from slq.formula import conjoin
from slq.hilbert.checker import Checker, check_derivation
from slq.hilbert.fixtures import builtin, builtin_derivations, derivation_names, describe


class TestBuiltins(TestCase):

    def test_index(self):
        names = derivation_names()
        self.assertEqual(names[0], 'one-cell-bound')
        self.assertIn('one-cell-exact', names)
        self.assertEqual(len(names), len(set(names)))
        for name in names:
            self.assertTrue(describe(name))
        self.assertRaises(UnknownDerivation, builtin, 'no-such-derivation')
        self.assertRaises(UnknownDerivation, describe, 'no-such-derivation')

    def test_all_check(self):
        checker = Checker()
        for name, d in builtin_derivations():
            report = checker.check(d)
            self.assertTrue(report, '%s: %s' % (name, report))

    def test_one_cell(self):
        self.assertEqual(builtin('one-cell-bound').conclusion, parse('emp -> (alloc(x) /\\ size = 1 -* not size >= 2)'))
        self.assertEqual(builtin('one-cell-exact').conclusion, parse('emp -> (alloc(x) /\\ size = 1 -* size = 1)'))

    def test_aliases(self):
        self.assertIs(builtin('fig2'), builtin('one-cell-bound'))
        self.assertIs(builtin('fig3'), builtin('one-cell-exact'))
        self.assertEqual(len(builtin('fig2')), 6)
        self.assertEqual(describe('fig3'), describe('one-cell-exact'))
        self.assertNotIn('fig2', derivation_names())

    def test_conclusions_are_valid(self):
        for name, d in builtin_derivations():
            result = decide_valid(d.conclusion)
            self.assertTrue(result, '%s: countermodel %s' % (name, result.countermodel))


class TestMutation(TestCase):

    @given(st.data())
    @sampled('MUTATION_SAMPLES')
    def test_broken_steps_are_caught(self, data):
        name = data.draw(st.sampled_from(derivation_names()), label='derivation')
        d = builtin(name)
        n = data.draw(st.integers(1, len(d)), label='step')
        original = d.step(n).formula
        vars_ = free_vars(original)
        f = data.draw(formulas(vars_, max_k=1, max_leaves=3), label='replacement')
        # Mention every variable of the original step.
        f = conjoin([f] + [Eq(v, v) for v in vars_ if v not in free_vars(f)])
        assume(f != original)
        report = check_derivation(d.replace(n, f))
        if decide_valid(Iff(f, original)):
            return
        self.assertFalse(report, 'step %d of %s replaced by %s' % (n, name, to_text(f)))
        self.assertEqual(report.failing_step, n)
