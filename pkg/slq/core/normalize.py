"""Translation of formulas into Boolean combinations of core formulae.

The normalizer works bottom-up. Every intermediate result is a
:class:`NormalizedForm`, which carries the exact set of core types over its
basis alongside a printable body. Boolean connectives become set operations
on the type sets, after lifting both operands to a common basis; ``*`` and
``-o`` go pairwise over the types through the closed forms of
:mod:`slq.core.boxes`. ``-*`` is rewritten as ``not (a -o not b)``.

Bodies are only built when asked for; deciding needs nothing but the types.

"""

import collections
import logging
import time

from ..formula import (
    FALSE, TRUE, Alloc, And, Bot, CoreBasis, Emp, Eq, Formula, Iff, Implies, Not, Or,
    PointsTo, Septraction, SizeGeq, Star, Top, Wand, disjoin, free_vars, to_text,
)
from .boxes import septraction_shape, septraction_size, star_shape, star_size
from .types import all_core_types, complete, conjunction_of, lift_type, literals_to_cube


log = logging.getLogger(__name__)


def _alpha(f):

    if isinstance(f, (Emp, Top, Bot, Eq, PointsTo, Alloc)):
        return 1
    if isinstance(f, SizeGeq):
        return max(f.k, 1)
    if isinstance(f, Not):
        return _alpha(f.body)
    if isinstance(f, Star):
        return _alpha(f.left) + _alpha(f.right)
    if isinstance(f, (And, Or, Implies, Iff, Wand, Septraction)):
        return max(_alpha(f.left), _alpha(f.right))
    raise TypeError('not a formula: %r' % (f, ))


def compute_basis(f):
    """The basis (X, alpha) a normal form of ``f`` can be written over.

    >>> str(compute_basis(Star(SizeGeq(2), SizeGeq(3))))
    'X={}, alpha=5'

    """
    vars_ = free_vars(f)
    return CoreBasis(vars_, max(_alpha(f), len(vars_), 1))


class NormalizedForm(object):

    """A Boolean combination of core literals over a basis.

    :param basis: The :class:`~slq.formula.CoreBasis` of the body.
    :param body: A :class:`~slq.formula.Formula` built from core formulae of the
        basis with ``not``, ``/\\``, ``\\/``, ``->``, ``<->``, true and false; or
        a callable building one on first use; or None for the disjunction of
        the types.
    :param types: The satisfiable core types of the body, if already known.

    """

    def __init__(self, basis, body=None, types=None):
        if body is None and types is None:
            raise ValueError('a normalized form needs a body or its types')
        self.basis = basis
        self._body = body
        self._types = None if types is None else frozenset(types)

    def __repr__(self):
        return '<NormalizedForm %s over %s>' % (self.body, self.basis)

    def _formula(self):
        if self._body is None:
            self._body = disjoin(conjunction_of(cube) for cube in self.cubes())
        elif not isinstance(self._body, Formula):
            self._body = self._body()
        return self._body

    @property
    def types(self):
        if self._types is None:
            self._types = frozenset(t for cube in _dnf(self._formula()) for t in complete(cube, self.basis))
        return self._types

    @property
    def is_false(self):
        return not self.types

    @property
    def is_true(self):
        return len(self.types) == len(all_core_types(self.basis))

    @property
    def body(self):
        if self._types is not None:
            if self.is_false:
                return FALSE
            if self.is_true:
                return TRUE
        return self._formula()

    def sorted_types(self):
        return sorted(self.types, key=lambda t: t.sort_key)

    def cubes(self):
        """The form as a DNF of literal lists; one cube per core type."""
        if self.is_true:
            return [[]]
        return [t.literals() for t in self.sorted_types()]

    def to_record(self):
        return {
            'basis': self.basis.to_record(),
            'body': to_text(self.body),
            'cubes': [[l.to_record() for l in cube] for cube in self.cubes()],
        }

    def lift(self, basis):
        """The same set of states, described over a larger basis."""
        if basis == self.basis:
            return self
        types = set()
        for t in self.types:
            types.update(lift_type(t, basis))
        return NormalizedForm(basis, self._body, types)

    # --- Boolean structure ---

    def negate(self):
        types = set(all_core_types(self.basis)).difference(self.types)
        return NormalizedForm(self.basis, lambda: Not(self._formula()), types)

    def combine(self, other, cls):
        basis = self.basis.join(other.basis)
        a = self.lift(basis).types
        b = other.lift(basis).types
        every = all_core_types(basis)
        if cls is And:
            types = a & b
        elif cls is Or:
            types = a | b
        elif cls is Implies:
            types = {t for t in every if t not in a or t in b}
        elif cls is Iff:
            types = {t for t in every if (t in a) == (t in b)}
        else:
            raise TypeError('not a Boolean connective: %r' % (cls, ))
        return NormalizedForm(basis, lambda: cls(self._formula(), other._formula()), types)


def _dnf(f):
    """Cubes (atom to polarity maps) whose disjunction is ``f``."""
    return list(_nnf_cubes(f, True))


def _merge(a, b):
    out = dict(a)
    for atom, value in b.items():
        if out.setdefault(atom, value) != value:
            return None
    return out


def _nnf_cubes(f, positive):

    if isinstance(f, (Eq, Alloc, PointsTo, SizeGeq)):
        return [{f: positive}]
    if isinstance(f, Top):
        return [{}] if positive else []
    if isinstance(f, Bot):
        return [] if positive else [{}]
    if isinstance(f, Not):
        return _nnf_cubes(f.body, not positive)

    if isinstance(f, Implies):
        return _nnf_cubes(Or(Not(f.left), f.right), positive)
    if isinstance(f, Iff):
        return _nnf_cubes(Or(And(f.left, f.right), And(Not(f.left), Not(f.right))), positive)

    conjunctive = isinstance(f, And) == positive
    if not isinstance(f, (And, Or)):
        raise TypeError('%s is not a Boolean combination of core formulae' % (f, ))
    left = _nnf_cubes(f.left, positive)
    right = _nnf_cubes(f.right, positive)
    if not conjunctive:
        return left + right
    out = []
    for a in left:
        for b in right:
            merged = _merge(a, b)
            if merged is not None:
                out.append(merged)
    return out


def to_core_type_dnf(g):
    """The satisfiable core types over ``g.basis``; their disjunction is equivalent to ``g``.

    A set copy of :attr:`NormalizedForm.types`, for callers which want to
    change it.

    """
    return set(g.types)


def atom_form(f):
    """The normalized form of a single atom."""

    if isinstance(f, Emp):
        f = Not(SizeGeq(1))
        basis = CoreBasis((), 1)
    elif isinstance(f, (Top, Bot)):
        basis = CoreBasis((), 1)
    else:
        basis = compute_basis(f)

    return NormalizedForm(basis, f)


def _points_from(t, sources):
    return frozenset(a for a in t.shape if isinstance(a, PointsTo) and a.source in sources)


def _star_compatible(t1, t2):
    # Both sides allocating one variable is a contradiction.
    return not t1.allocated & t2.allocated


def _septraction_compatible(t1, t2):
    # The added heap is part of the combined one, cell for cell.
    return t1.allocated <= t2.allocated and _points_from(t1, t1.allocated) == _points_from(t2, t1.allocated)


def _size_range(literals, basis):
    """The heap sizes over ``basis`` allowed by ``size >= k`` literals."""
    low, high = 0, basis.alpha
    for lit in literals:
        k = lit.atom.k
        if k > basis.alpha:
            continue
        if lit.positive:
            low = max(low, k)
        else:
            high = min(high, k - 1)
    return low, high


def _by_shape(types):
    groups = collections.defaultdict(list)
    for t in types:
        groups[t.shape].append(t)
    return groups


def _pairwise(basis, types1, types2, compatible, shape_box, size_box):
    """Union of the completed boxes of every pair of types, over ``basis``.

    The pairs are taken a shape at a time: the shape half of a box is
    completed once per pair of shapes, and the size half only narrows that
    completion down to an interval of heap sizes.

    """
    left = _by_shape(types1)
    right = collections.defaultdict(list)
    for shape, members in _by_shape(types2).items():
        right[members[0].partition].append(members)

    sizes = {}
    out = set()
    for members1 in left.values():
        rep1 = members1[0]
        # Operand types with different equalities contradict each other.
        for members2 in right.get(rep1.partition, ()):
            rep2 = members2[0]
            if not compatible(rep1, rep2):
                continue
            cube = literals_to_cube(shape_box(rep1, rep2))
            if cube is None:
                continue
            by_size = collections.defaultdict(list)
            for t in complete(cube, basis):
                by_size[t.maxsize].append(t)
            if not by_size:
                continue
            for n1 in {t.maxsize: t for t in members1}.values():
                for n2 in {t.maxsize: t for t in members2}.values():
                    key = (n1.maxsize, n2.maxsize)
                    if key not in sizes:
                        sizes[key] = _size_range(size_box(n1, n2), basis)
                    low, high = sizes[key]
                    for n in range(low, high + 1):
                        out.update(by_size.get(n, ()))
    return out


def eliminate_star(g1, g2):
    """A normalized form equivalent to ``g1 * g2``, over the summed alpha."""
    common = g1.basis.join(g2.basis)
    result = CoreBasis(common.vars, max(g1.basis.alpha + g2.basis.alpha, len(common.vars)))
    types = _pairwise(
        result, g1.lift(common).types, g2.lift(common).types,
        _star_compatible, star_shape, star_size,
    )
    return NormalizedForm(result, None, types)


def eliminate_septraction(g1, g2):
    """A normalized form equivalent to ``g1 -o g2``."""
    common = g1.basis.join(g2.basis)
    types = _pairwise(
        common, g1.lift(common).types, g2.lift(common).types,
        _septraction_compatible, septraction_shape, septraction_size,
    )
    return NormalizedForm(common, None, types)


ElimTrace = collections.namedtuple('ElimTrace', 'operator basis left_types right_types result_types elapsed')


class Normalizer(object):

    """The bottom-up normalization pass.

    :param bool trace: Record an :class:`ElimTrace` per elimination in :attr:`trace`.

    """

    def __init__(self, trace=False):
        self.trace = [] if trace else None
        self._memo = {}

    def normalize(self, f):
        try:
            return self._memo[f]
        except KeyError:
            pass
        g = self._normalize(f)
        self._memo[f] = g
        return g

    def _normalize(self, f):

        if isinstance(f, (Emp, Top, Bot, Eq, PointsTo, Alloc, SizeGeq)):
            return atom_form(f)

        if isinstance(f, Not):
            return self.normalize(f.body).negate()

        if isinstance(f, (And, Or, Implies, Iff)):
            return self.normalize(f.left).combine(self.normalize(f.right), type(f))

        if isinstance(f, Wand):
            return self.normalize(Not(Septraction(f.left, Not(f.right))))

        if isinstance(f, Star):
            return self._eliminate('*', eliminate_star, f)
        if isinstance(f, Septraction):
            return self._eliminate('-o', eliminate_septraction, f)

        raise TypeError('not a formula: %r' % (f, ))

    def _eliminate(self, operator, func, f):
        g1 = self.normalize(f.left)
        g2 = self.normalize(f.right)
        start = time.time()
        g = func(g1, g2)
        elapsed = time.time() - start
        log.debug('%s over %s: %d x %d types -> %d in %.3fs', operator, g.basis,
                  len(g1.types), len(g2.types), len(g.types), elapsed)
        if self.trace is not None:
            self.trace.append(ElimTrace(operator, g.basis, len(g1.types), len(g2.types), len(g.types), elapsed))
        return g


def normalize(f):
    """A :class:`NormalizedForm` equivalent to ``f``."""
    return Normalizer().normalize(f)
