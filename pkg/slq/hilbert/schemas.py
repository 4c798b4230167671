"""The axiom schemas of the proof system, as templates.

Schemas are addressed by name; codes (``A16``, ``I5``) are accepted as
aliases. Parameters come in four kinds: formulas, variables, naturals and
finite variable sets.

"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Tuple

from ..exceptions import BindingError, SideConditionFailed, UnknownSchema
from ..formula import (
    EMP, FALSE, TRUE, Alloc, And, Eq, Formula, Iff, Implies, Not, Or, PointsTo,
    Septraction, SizeGeq, Star, check_variable, free_vars, neq,
)
from .templates import BigAnd, Meta, SizeHole, Subst, instantiate, match, nat, size_eq_t


log = logging.getLogger(__name__)


FORMULA = 'formula'
VARIABLE = 'variable'
NATURAL = 'natural'
VARSET = 'varset'


@dataclass(frozen=True)
class AxiomSchema(object):

    name: str
    code: str
    params: Tuple[Tuple[str, str], ...]
    template: Formula
    doc: str = ''
    side_condition: Callable = field(default=None, compare=False)
    #: Only used by the validity sweeps; not part of the full system.
    intermediate: bool = False

    def __str__(self):
        return '%s (%s)' % (self.name, self.code)

    @property
    def kinds(self):
        return dict(self.params)

    def check_bindings(self, bindings, partial=False):
        """Normalize and kind-check ``bindings``.

        :raises BindingError: on unknown names, kind mismatches, or (unless
            ``partial``) missing parameters.

        """
        kinds = self.kinds
        out = {}
        for name, value in bindings.items():
            kind = kinds.get(name)
            if kind is None:
                raise BindingError('%s has no parameter %r' % (self.name, name))
            out[name] = coerce_binding(kind, value, name)
        if not partial:
            missing = [n for n in kinds if n not in out]
            if missing:
                raise BindingError('%s needs %s' % (self.name, ', '.join(missing)))
        return out

    def instance(self, bindings):
        bindings = self.check_bindings(bindings)
        if self.side_condition and not self.side_condition(bindings):
            raise SideConditionFailed('%s does not hold for %s' % (
                self.doc or 'side condition of %s' % self.name, format_bindings(bindings)))
        return instantiate(self.template, bindings)

    def match(self, f, given=None):
        """Bindings making ``f`` an instance of this schema, or None."""
        given = self.check_bindings(given or {}, partial=True)
        open_sets = [n for n, k in self.params if k == VARSET and n not in given]
        if open_sets:
            vars_ = free_vars(f)
            choices = [
                dict(given, **{open_sets[0]: subset})
                for size in range(len(vars_) + 1)
                for subset in itertools.combinations(vars_, size)
            ]
        else:
            choices = [given]
        for seed in choices:
            bindings = match(self.template, f, seed)
            if bindings is None:
                continue
            if any(n not in bindings for n in self.kinds):
                continue
            if self.side_condition and not self.side_condition(bindings):
                continue
            return bindings


def coerce_binding(kind, value, name='?'):

    if kind == FORMULA:
        if not isinstance(value, Formula):
            raise BindingError('%s must be a formula; got %r' % (name, value))
        return value

    if kind == VARIABLE:
        try:
            return check_variable(value)
        except ValueError:
            raise BindingError('%s must be a variable; got %r' % (name, value))

    if kind == NATURAL:
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise BindingError('%s must be a natural number; got %r' % (name, value))
        return value

    if kind == VARSET:
        if isinstance(value, str):
            raise BindingError('%s must be a set of variables; got %r' % (name, value))
        try:
            return tuple(sorted(set(check_variable(v) for v in value)))
        except (TypeError, ValueError):
            raise BindingError('%s must be a set of variables; got %r' % (name, value))

    raise BindingError('unknown parameter kind %r' % kind)


def format_bindings(bindings):
    parts = []
    for name in sorted(bindings):
        value = bindings[name]
        if isinstance(value, tuple):
            value = '{%s}' % ','.join(value)
        parts.append('%s=%s' % (name, value))
    return '[%s]' % ','.join(parts)


def _mono_core_atom(bindings):
    a = bindings['a']
    if a == Not(EMP):
        return True
    if isinstance(a, Not):
        a = a.body
        return isinstance(a, Eq)
    return isinstance(a, (Eq, PointsTo))


phi, psi, chi = Meta('phi'), Meta('psi'), Meta('chi')
S1 = size_eq_t(nat(offset=1))


def _schemas():

    F, V, N, X = FORMULA, VARIABLE, NATURAL, VARSET

    yield AxiomSchema('EqRefl', 'A1', (('x', V), ), Eq('x', 'x'))
    yield AxiomSchema(
        'EqSubst', 'A2', (('phi', F), ('x', V), ('y', V)),
        Implies(And(phi, Eq('x', 'y')), Subst(phi, 'x', 'y')),
    )
    yield AxiomSchema('PtoAlloc', 'A3', (('x', V), ('y', V)), Implies(PointsTo('x', 'y'), Alloc('x')))
    yield AxiomSchema(
        'PtoFun', 'A4', (('x', V), ('y', V), ('z', V)),
        Implies(And(PointsTo('x', 'y'), PointsTo('x', 'z')), Eq('y', 'z')),
    )

    yield AxiomSchema('Commute', 'A7', (('phi', F), ('psi', F)), Iff(Star(phi, psi), Star(psi, phi)))
    yield AxiomSchema(
        'Assoc', 'A8', (('phi', F), ('psi', F), ('chi', F)),
        Iff(Star(Star(phi, psi), chi), Star(phi, Star(psi, chi))),
    )
    yield AxiomSchema('EmpUnit', 'A11', (('phi', F), ), Iff(phi, Star(phi, EMP)))
    yield AxiomSchema('DoubleAlloc', 'A13', (('x', V), ), Iff(Star(Alloc('x'), Alloc('x')), FALSE))
    yield AxiomSchema(
        'MonoCore', 'A14', (('a', F), ),
        Implies(Star(Meta('a'), TRUE), Meta('a')),
        doc='a is one of not emp, x = y, x != y, x |-> y',
        side_condition=_mono_core_atom,
    )
    yield AxiomSchema(
        'AllocNeg', 'A15', (('x', V), ),
        Implies(Star(Not(Alloc('x')), Not(Alloc('x'))), Not(Alloc('x'))),
    )
    yield AxiomSchema(
        'SizeNeg', 'A16', (('b1', N), ('b2', N)),
        Implies(
            Star(Not(SizeHole(nat('b1'))), Not(SizeHole(nat('b2')))),
            Not(SizeHole(nat('b1', 'b2', offset=-1))),
        ),
    )
    yield AxiomSchema(
        'PointsNeg', 'A17', (('x', V), ('y', V)),
        Implies(Star(And(Alloc('x'), Not(PointsTo('x', 'y'))), TRUE), Not(PointsTo('x', 'y'))),
    )
    yield AxiomSchema(
        'AllocSizeOne', 'A18', (('x', V), ),
        Implies(Alloc('x'), Star(And(Alloc('x'), S1), TRUE)),
    )
    yield AxiomSchema('SizeOne', 'A19', (), Implies(Not(EMP), Star(S1, TRUE)))
    yield AxiomSchema(
        'SizeTwo', 'A20', (('x', V), ('y', V)),
        Implies(And(And(Alloc('x'), Alloc('y')), neq('x', 'y')), SizeGeq(2)),
    )

    yield AxiomSchema(
        'WandSize', 'A21', (('X', X), ),
        Septraction(BigAnd((S1, ), 'X', 'v', Not(Alloc('v'))), TRUE),
    )
    yield AxiomSchema(
        'WandPointsTo', 'A22', (('x', V), ('y', V)),
        Implies(Not(Alloc('x')), Septraction(And(PointsTo('x', 'y'), S1), TRUE)),
    )
    yield AxiomSchema(
        'WandAlloc', 'A23', (('x', V), ('X', X)),
        Implies(
            Not(Alloc('x')),
            Septraction(BigAnd((Alloc('x'), S1), 'X', 'y', Not(PointsTo('x', 'y'))), TRUE),
        ),
    )

    # Intermediate schemas; derivable in the full system.
    yield AxiomSchema(
        'SizeMono', 'I5', (('b', N), ),
        Implies(SizeHole(nat('b', offset=1)), SizeHole(nat('b'))),
        intermediate=True,
    )
    yield AxiomSchema(
        'AllocSize', 'I6', (('X', X), ),
        Implies(
            BigAnd((), 'X', 'x', BigAnd((Alloc('x'), ), 'X', 'y', neq('x', 'y'), exclude='x')),
            SizeHole(nat('X')),
        ),
        intermediate=True,
    )
    yield AxiomSchema(
        'DistrOr', 'I9', (('phi', F), ('psi', F), ('chi', F)),
        Implies(Star(Or(phi, psi), chi), Or(Star(phi, chi), Star(psi, chi))),
        intermediate=True,
    )
    yield AxiomSchema('StarFalse', 'I10', (('phi', F), ), Iff(Star(FALSE, phi), FALSE), intermediate=True)
    yield AxiomSchema(
        'StarAlloc', 'I12', (('x', V), ),
        Implies(Star(Alloc('x'), TRUE), Alloc('x')),
        intermediate=True,
    )
    yield AxiomSchema(
        'SizeSplit', '-', (('b1', N), ('b2', N)),
        Implies(SizeHole(nat('b1', 'b2')), Star(size_eq_t(nat('b1')), SizeHole(nat('b2')))),
        intermediate=True,
    )
    yield AxiomSchema(
        'SizeSplitExact', '-', (('b1', N), ('b2', N)),
        Implies(size_eq_t(nat('b1', 'b2')), Star(size_eq_t(nat('b1')), size_eq_t(nat('b2')))),
        intermediate=True,
    )


SCHEMAS = {s.name: s for s in _schemas()}
_BY_CODE = {s.code.upper(): s for s in SCHEMAS.values() if s.code != '-'}


def schema_names():
    return list(SCHEMAS)


def get_schema(name):
    """Look up a schema by name, or by code."""
    try:
        return SCHEMAS[name]
    except KeyError:
        pass
    try:
        return _BY_CODE[name.upper()]
    except (KeyError, AttributeError):
        raise UnknownSchema(name)


def axiom_instance(name, bindings):
    """Instantiate the schema ``name``.

    :raises UnknownSchema: for an unknown name or code.
    :raises BindingError: for missing or ill-kinded bindings.
    :raises SideConditionFailed: when the schema's side condition fails.

    """
    return get_schema(name).instance(bindings)
