"""Heaplet semantics: memory states, satisfaction, and brute-force oracles.

Locations are natural numbers. Wand and septraction quantify over extension
heaps, which is only finitely checkable; :class:`EnumerationBounds` says how far
to look, and :meth:`EnumerationBounds.for_formula` picks bounds which are large
enough for the answer to be exact.

"""

import itertools
import logging
import re
from dataclasses import dataclass

from .exceptions import BasisViolation, BoundsError, MissingVariable
from .formula import (
    Alloc, And, Bot, Emp, Eq, Iff, Implies, Not, Or, PointsTo,
    Septraction, SizeGeq, Star, Top, Wand, free_vars, subformulas,
)
from .utils import set_partitions


log = logging.getLogger(__name__)


class MemoryState(object):

    """A store (variable to location) and a finite heap (location to location)."""

    def __init__(self, store=None, heap=None):
        self.store = dict(store or {})
        self.heap = dict(heap or {})

    def __eq__(self, other):
        if not isinstance(other, MemoryState):
            return NotImplemented
        return self.store == other.store and self.heap == other.heap

    def __repr__(self):
        return '<MemoryState %s>' % self.to_text()

    def to_text(self):
        store = ', '.join('%s->%d' % (k, self.store[k]) for k in sorted(self.store))
        heap = ', '.join('%d->%d' % (k, self.heap[k]) for k in sorted(self.heap))
        return 'store: %s ; heap: %s' % (store or '-', heap or '-')

    __str__ = to_text

    def to_record(self):
        return {
            'store': {k: self.store[k] for k in sorted(self.store)},
            'heap': [[k, self.heap[k]] for k in sorted(self.heap)],
        }

    @classmethod
    def parse(cls, text):
        """Inverse of :meth:`to_text`."""
        m = re.match(r'^\s*store:\s*(.*?)\s*;\s*heap:\s*(.*?)\s*$', text)
        if not m:
            raise ValueError('not a memory state: %r' % text)
        store = {}
        heap = {}
        for part, out, key_type in ((m.group(1), store, str), (m.group(2), heap, int)):
            if part == '-':
                continue
            for pair in part.split(','):
                key, _, value = pair.partition('->')
                out[key_type(key.strip())] = int(value)
        return cls(store, heap)

    def location(self, var):
        try:
            return self.store[var]
        except KeyError:
            raise MissingVariable(var)


@dataclass(frozen=True)
class EnumerationBounds(object):

    """How far the enumerators and the wand evaluation look.

    :param int max_heap_size: Largest heap enumerated by :func:`enumerate_states`.
    :param int location_universe: Locations are drawn from ``[0, location_universe)``.
    :param int wand_extension_budget: Largest extension heap for ``-*`` and ``-o``.
    :param int fresh_locations: Unused locations offered to extension heaps.

    """

    max_heap_size: int
    location_universe: int
    wand_extension_budget: int
    fresh_locations: int

    def __post_init__(self):
        for name in ('max_heap_size', 'location_universe', 'wand_extension_budget', 'fresh_locations'):
            if getattr(self, name) < 0:
                raise BoundsError('%s must not be negative' % name)
        if self.fresh_locations < 1:
            raise BoundsError('fresh_locations must be at least 1')

    @classmethod
    def for_formula(cls, f):
        """Bounds under which every oracle answer about ``f`` is exact."""
        from .core.normalize import compute_basis
        basis = compute_basis(f)
        budget = 0
        for node in subformulas(f):
            if isinstance(node, (Wand, Septraction)):
                budget = max(budget, compute_basis(node).alpha)
        n = len(basis.vars)
        return cls(
            max_heap_size=basis.alpha,
            location_universe=n + basis.alpha + 1,
            wand_extension_budget=budget,
            fresh_locations=budget + n + 1,
        )

    def is_exact_for(self, f):
        exact = self.for_formula(f)
        return (
            self.max_heap_size >= exact.max_heap_size and
            self.location_universe >= exact.location_universe and
            self.wand_extension_budget >= exact.wand_extension_budget and
            self.fresh_locations >= exact.fresh_locations
        )

    def replace(self, **kwargs):
        fields = {
            'max_heap_size': self.max_heap_size,
            'location_universe': self.location_universe,
            'wand_extension_budget': self.wand_extension_budget,
            'fresh_locations': self.fresh_locations,
        }
        fields.update((k, v) for k, v in kwargs.items() if v is not None)
        return EnumerationBounds(**fields)

    def to_record(self):
        return {
            'max_heap': self.max_heap_size,
            'max_loc': self.location_universe,
            'budget': self.wand_extension_budget,
            'fresh': self.fresh_locations,
        }


def _heap_key(heap):
    return frozenset(heap.items())


class Evaluator(object):

    """Satisfaction of formulas for one store, over varying heaps.

    Results are memoized per (subformula, heap), so an evaluator should not
    outlive the formula it was used on.

    """

    def __init__(self, store, bounds):
        self.store = store
        self.bounds = bounds
        self._memo = {}

    def loc(self, var):
        try:
            return self.store[var]
        except KeyError:
            raise MissingVariable(var)

    def holds(self, f, heap):
        key = (id(f), _heap_key(heap))
        try:
            return self._memo[key][1]
        except KeyError:
            pass
        value = self._holds(f, heap)
        # Keep f alive alongside its id.
        self._memo[key] = (f, value)
        return value

    def _holds(self, f, heap):

        if isinstance(f, Emp):
            return not heap
        if isinstance(f, Top):
            return True
        if isinstance(f, Bot):
            return False
        if isinstance(f, Eq):
            return self.loc(f.left) == self.loc(f.right)
        if isinstance(f, PointsTo):
            src = self.loc(f.source)
            return src in heap and heap[src] == self.loc(f.target)
        if isinstance(f, Alloc):
            return self.loc(f.var) in heap
        if isinstance(f, SizeGeq):
            return len(heap) >= f.k

        if isinstance(f, Not):
            return not self.holds(f.body, heap)
        if isinstance(f, And):
            return self.holds(f.left, heap) and self.holds(f.right, heap)
        if isinstance(f, Or):
            return self.holds(f.left, heap) or self.holds(f.right, heap)
        if isinstance(f, Implies):
            return not self.holds(f.left, heap) or self.holds(f.right, heap)
        if isinstance(f, Iff):
            return self.holds(f.left, heap) == self.holds(f.right, heap)

        if isinstance(f, Star):
            return any(
                self.holds(f.left, h1) and self.holds(f.right, h2)
                for h1, h2 in splits(heap)
            )
        if isinstance(f, Wand):
            return all(
                not self.holds(f.left, ext) or self.holds(f.right, _union(heap, ext))
                for ext in self.extensions(heap)
            )
        if isinstance(f, Septraction):
            return any(
                self.holds(f.left, ext) and self.holds(f.right, _union(heap, ext))
                for ext in self.extensions(heap)
            )

        raise TypeError('not a formula: %r' % (f, ))

    def extensions(self, heap):
        """Heaps disjoint from ``heap`` within the extension budget.

        Fresh locations are interchangeable, so only extensions which use an
        initial run of them are produced.

        """
        used = set(heap)
        used.update(heap.values())
        used.update(self.store.values())
        fresh = []
        candidate = 0
        while len(fresh) < self.bounds.fresh_locations:
            if candidate not in used:
                fresh.append(candidate)
            candidate += 1

        known = sorted(used)
        fresh_rank = {loc: i for i, loc in enumerate(fresh)}

        for size in range(self.bounds.wand_extension_budget + 1):
            # No extension of this size can touch more than 2 * size fresh cells.
            offered = fresh[:2 * size]
            domain_pool = [l for l in known if l not in heap] + offered[:size]
            value_pool = known + offered
            for domain in itertools.combinations(domain_pool, size):
                for values in itertools.product(value_pool, repeat=size):
                    touched = {fresh_rank[l] for l in domain + values if l in fresh_rank}
                    if touched and max(touched) >= len(touched):
                        continue
                    yield dict(zip(domain, values))


def _union(h1, h2):
    out = dict(h1)
    out.update(h2)
    return out


def splits(heap):
    """Iter every ``(h1, h2)`` with ``h1 + h2 == heap``."""
    items = sorted(heap.items())
    for mask in range(1 << len(items)):
        h1 = {}
        h2 = {}
        for i, (k, v) in enumerate(items):
            if mask & (1 << i):
                h1[k] = v
            else:
                h2[k] = v
        yield h1, h2


def satisfies(state, f, bounds):
    """Does ``state`` satisfy ``f``?

    :raises MissingVariable: if the store does not cover ``free_vars(f)``.

    """
    for var in free_vars(f):
        state.location(var)
    return Evaluator(state.store, bounds).holds(f, state.heap)


def _canonical_stores(vars_, universe):
    # Stores up to renaming of locations: each variable reuses a location
    # already handed out, or takes the next unused one.
    def grow(i, assigned, top):
        if i == len(vars_):
            yield dict(zip(vars_, assigned))
            return
        for loc in range(min(top + 1, universe)):
            assigned.append(loc)
            for x in grow(i + 1, assigned, max(top, loc + 1)):
                yield x
            assigned.pop()
    return grow(0, [], 0)


def enumerate_states(vars_, bounds, canonical_stores=False):
    """Iter every memory state over ``vars_`` within ``bounds``, in a fixed order.

    Stores vary slowest. Heaps are ordered by size, then by domain, then by
    contents. With ``canonical_stores``, stores which only differ by a renaming
    of locations are produced once.

    """
    vars_ = tuple(sorted(vars_))
    universe = bounds.location_universe
    locations = range(universe)
    if vars_ and not universe:
        return
    if canonical_stores:
        stores = _canonical_stores(vars_, universe)
    else:
        stores = (dict(zip(vars_, locs)) for locs in itertools.product(locations, repeat=len(vars_)))
    for store in stores:
        for size in range(min(bounds.max_heap_size, universe) + 1):
            for domain in itertools.combinations(locations, size):
                for values in itertools.product(locations, repeat=size):
                    yield MemoryState(store, zip(domain, values))


def brute_sat(f, bounds):
    """The first enumerated state satisfying ``f``, or None.

    Stores are enumerated up to renaming of locations, which satisfaction
    cannot observe.

    """
    vars_ = free_vars(f)
    if bounds.location_universe < len(vars_) + bounds.max_heap_size:
        raise BoundsError('location universe %d is too small for %d variables and heaps of %d' % (
            bounds.location_universe, len(vars_), bounds.max_heap_size))
    evaluators = {}
    for state in enumerate_states(vars_, bounds, canonical_stores=True):
        key = tuple(sorted(state.store.items()))
        evaluator = evaluators.get(key)
        if evaluator is None:
            evaluator = evaluators[key] = Evaluator(state.store, bounds)
        if evaluator.holds(f, state.heap):
            return state


# === ABSTRACT CORE ORACLE ===

def _core_atoms(g, basis):
    for node in subformulas(g):
        if isinstance(node, (Eq, Alloc, PointsTo, SizeGeq)):
            if not basis.contains(node):
                raise BasisViolation('%s is outside of Core(%s)' % (node, basis))
        elif not isinstance(node, (Not, And, Or, Implies, Iff, Top, Bot)):
            raise BasisViolation('%s is not a Boolean combination of core formulae' % (node, ))


def core_abstract_sat(g, basis):
    """Is the Boolean combination of core formulae ``g`` satisfiable?

    Decided over abstractions of memory states: an equivalence on the
    variables, the allocated classes, a partial pointer map between classes,
    and a heap size ``N``. This shares no code with the normalizer.

    """
    _core_atoms(g, basis)
    vars_ = basis.vars
    top_size = basis.alpha + len(vars_)

    for partition in set_partitions(vars_):
        cls = {}
        for i, block in enumerate(partition):
            for v in block:
                cls[v] = i
        classes = range(len(partition))
        for d_size in range(len(partition) + 1):
            for allocated in itertools.combinations(classes, d_size):
                allocated_set = set(allocated)
                targets = list(classes) + [None]
                for image in itertools.product(targets, repeat=d_size):
                    pointer = dict(zip(allocated, image))
                    for n in range(d_size, top_size + 1):
                        if _abstract_holds(g, cls, allocated_set, pointer, n):
                            return True
    return False


def _abstract_holds(g, cls, allocated, pointer, n):
    if isinstance(g, Eq):
        return cls[g.left] == cls[g.right]
    if isinstance(g, Alloc):
        return cls[g.var] in allocated
    if isinstance(g, PointsTo):
        src = cls[g.source]
        return src in pointer and pointer[src] == cls[g.target]
    if isinstance(g, SizeGeq):
        return n >= g.k
    if isinstance(g, Top):
        return True
    if isinstance(g, Bot):
        return False
    if isinstance(g, Not):
        return not _abstract_holds(g.body, cls, allocated, pointer, n)
    left = _abstract_holds(g.left, cls, allocated, pointer, n)
    if isinstance(g, And):
        return left and _abstract_holds(g.right, cls, allocated, pointer, n)
    if isinstance(g, Or):
        return left or _abstract_holds(g.right, cls, allocated, pointer, n)
    if isinstance(g, Implies):
        return not left or _abstract_holds(g.right, cls, allocated, pointer, n)
    if isinstance(g, Iff):
        return left == _abstract_holds(g.right, cls, allocated, pointer, n)
    raise TypeError('not a core combination: %r' % (g, ))
