import itertools

from . import *

from slq.core.decide import decide_valid
from slq.exceptions import BindingError, SideConditionFailed, UnknownSchema
from slq.hilbert.schemas import (
    FORMULA, NATURAL, VARIABLE, VARSET, axiom_instance, get_schema, schema_names,
)
from slq.hilbert.templates import nat, size_eq_t, template_text


SAMPLES = {
    FORMULA: (Alloc('x'), parse('not x |-> y')),
    VARIABLE: ('x', 'y', 'z'),
    NATURAL: (0, 1, 2, 3),
    VARSET: tuple(c for n in range(4) for c in itertools.combinations(('x', 'y', 'z'), n)),
}

MONO_CORE_ATOMS = ('not emp', 'x = y', 'x != y', 'x |-> y')


def sample_bindings(schema):
    names = [n for n, _ in schema.params]
    pools = [SAMPLES[k] for _, k in schema.params]
    for values in itertools.product(*pools):
        yield dict(zip(names, values))


class TestInstances(TestCase):

    def test_size_neg(self):
        f = axiom_instance('SizeNeg', {'b1': 1, 'b2': 2})
        self.assertEqual(to_text(f), 'not size >= 1 * not size >= 2 -> not size >= 2')
        # b1 + b2 - 1 stops at zero.
        f = axiom_instance('SizeNeg', {'b1': 0, 'b2': 0})
        self.assertEqual(f.right, Not(SizeGeq(0)))

    def test_eq_subst(self):
        f = axiom_instance('EqSubst', {'phi': parse('y |-> y'), 'x': 'x', 'y': 'y'})
        self.assertEqual(to_text(f), 'y |-> y /\\ x = y -> x |-> x')

    def test_set_parameters(self):
        f = axiom_instance('AllocSize', {'X': ('y', 'x')})
        self.assertEqual(f.right, SizeGeq(2))
        self.assertEqual(axiom_instance('AllocSize', {'X': ()}), parse('true -> size >= 0'))
        f = axiom_instance('WandAlloc', {'x': 'x', 'X': ('x', 'y')})
        self.assertEqual(to_text(f),
            'not alloc(x) -> alloc(x) /\\ size = 1 /\\ not x |-> x /\\ not x |-> y -o true')

    def test_codes(self):
        self.assertEqual(get_schema('A16').name, 'SizeNeg')
        self.assertEqual(get_schema('a16').name, 'SizeNeg')
        self.assertEqual(get_schema('I9').name, 'DistrOr')
        self.assertRaises(UnknownSchema, get_schema, 'A99')
        self.assertRaises(UnknownSchema, axiom_instance, 'NoSuchAxiom', {})

    def test_binding_errors(self):
        self.assertRaises(BindingError, axiom_instance, 'SizeNeg', {'b1': 1})
        self.assertRaises(BindingError, axiom_instance, 'SizeNeg', {'b1': -1, 'b2': 0})
        self.assertRaises(BindingError, axiom_instance, 'SizeNeg', {'b1': 'x', 'b2': 0})
        self.assertRaises(BindingError, axiom_instance, 'SizeNeg', {'b1': 1, 'b2': 1, 'k': 1})
        self.assertRaises(BindingError, axiom_instance, 'EqRefl', {'x': EMP})
        self.assertRaises(BindingError, axiom_instance, 'Commute', {'phi': 'x', 'psi': EMP})
        self.assertRaises(BindingError, axiom_instance, 'WandSize', {'X': 'xy'})

    def test_side_condition(self):
        for text in MONO_CORE_ATOMS:
            axiom_instance('MonoCore', {'a': parse(text)})
        for text in ('alloc(x)', 'emp', 'not x |-> y', 'size >= 1'):
            self.assertRaises(SideConditionFailed, axiom_instance, 'MonoCore', {'a': parse(text)})


class TestMatch(TestCase):

    def test_naturals(self):
        schema = get_schema('SizeNeg')
        f = parse('not size >= 1 * not size >= 2 -> not size >= 2')
        self.assertEqual(schema.match(f), {'b1': 1, 'b2': 2})
        self.assertIsNone(schema.match(parse('not size >= 1 * not size >= 2 -> not size >= 3')))
        self.assertIsNone(schema.match(f, {'b1': 2}))

    def test_sets(self):
        schema = get_schema('AllocSize')
        f = axiom_instance('AllocSize', {'X': ('x', 'y')})
        self.assertEqual(schema.match(f)['X'], ('x', 'y'))
        self.assertIsNone(schema.match(parse('alloc(x) -> size >= 2')))

    def test_formulas(self):
        schema = get_schema('Commute')
        m = schema.match(parse('emp * alloc(x) <-> alloc(x) * emp'))
        self.assertEqual(m, {'phi': EMP, 'psi': Alloc('x')})
        self.assertIsNone(schema.match(parse('emp * alloc(x) <-> emp * alloc(x)')))

    def test_substitution(self):
        schema = get_schema('EqSubst')
        self.assertIsNotNone(schema.match(parse('y |-> y /\\ x = y -> x |-> x')))
        self.assertIsNone(schema.match(parse('y |-> y /\\ x = y -> x |-> y')))

    def test_side_condition(self):
        schema = get_schema('MonoCore')
        self.assertIsNotNone(schema.match(parse('x |-> y * true -> x |-> y')))
        self.assertIsNone(schema.match(parse('alloc(x) * true -> alloc(x)')))


class TestSoundness(TestCase):

    def test_every_schema_is_valid(self):
        count = 0
        for name in schema_names():
            schema = get_schema(name)
            if name == 'MonoCore':
                continue
            for bindings in sample_bindings(schema):
                f = schema.instance(bindings)
                result = decide_valid(f)
                self.assertTrue(result, '%s: %s fails on %s' % (name, to_text(f), result.countermodel))
                count += 1
        self.assertGreaterEqual(count, 150)

    def test_mono_core(self):
        for text in MONO_CORE_ATOMS:
            f = axiom_instance('MonoCore', {'a': parse(text)})
            self.assertTrue(decide_valid(f), to_text(f))

    def test_mono_core_needs_its_side_condition(self):
        self.assertFalse(decide_valid(parse('not alloc(x) * true -> not alloc(x)')))


class TestTemplateText(TestCase):

    def test_render(self):
        self.assertEqual(template_text(size_eq_t(nat('b1', 'b2'))), 'size = b1+b2')
        self.assertEqual(template_text(get_schema('SizeNeg').template),
            '(not size >= b1 * not size >= b2) -> not size >= b1+b2-1')
        self.assertEqual(template_text(get_schema('SizeOne').template), 'not emp -> (size = 1 * true)')
        self.assertEqual(template_text(get_schema('EqSubst').template), '(phi /\\ x = y) -> phi[x/y]')
        self.assertIn('AND[v in X]', template_text(get_schema('WandSize').template))
        self.assertIn('AND[y in X - {x}]', template_text(get_schema('AllocSize').template))
