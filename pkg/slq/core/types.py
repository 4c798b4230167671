"""Core literals, core types, and the completion engine.

A core type fixes the polarity of every formula of Core(X, alpha). We store
only its positive atoms; everything else in the basis is negative.

Satisfiable core types correspond one to one with *abstractions* of memory
states: a partition of X, the set of allocated classes, where each allocated
class points (another class, or somewhere no variable names), and the heap
size N in [|allocated|, alpha] (N = alpha standing for "at least alpha").

"""

import functools
import itertools
import logging
from dataclasses import dataclass

from ..exceptions import BasisViolation, PreconditionViolation
from ..formula import Alloc, Eq, Not, PointsTo, SizeGeq, conjoin
from ..semantics import MemoryState
from ..utils import set_partitions


log = logging.getLogger(__name__)


_GROUPS = {Eq: 0, Alloc: 2, PointsTo: 4, SizeGeq: 6}


@dataclass(frozen=True)
class CoreLiteral(object):

    atom: object
    positive: bool = True

    def __post_init__(self):
        if type(self.atom) not in _GROUPS:
            raise BasisViolation('%r is not a core formula' % (self.atom, ))

    def __str__(self):
        return str(self.to_formula())

    def to_formula(self):
        return self.atom if self.positive else Not(self.atom)

    def negated(self):
        return CoreLiteral(self.atom, not self.positive)

    @property
    def sort_key(self):
        group = _GROUPS[type(self.atom)] + (0 if self.positive else 1)
        if isinstance(self.atom, SizeGeq):
            return (group, (), self.atom.k)
        return (group, self.atom.variables(), 0)

    def to_record(self):
        atom = self.atom
        kind = {Eq: 'eq', Alloc: 'alloc', PointsTo: 'points_to', SizeGeq: 'size_geq'}[type(atom)]
        return {
            'kind': kind,
            'args': list(atom.variables()),
            'k': atom.k if isinstance(atom, SizeGeq) else None,
            'positive': self.positive,
        }


def sort_literals(literals):
    """Canonical order: =, !=, alloc, not alloc, |->, not |->, size, not size."""
    return sorted(set(literals), key=lambda l: l.sort_key)


def literal_of(f):
    """Read a core literal back from ``atom`` or ``not atom``."""
    if isinstance(f, Not):
        return CoreLiteral(f.body, False)
    return CoreLiteral(f, True)


def conjunction_of(literals):
    return conjoin(l.to_formula() for l in sort_literals(literals))


def literals_to_cube(literals):
    """A polarity map from literals, or None if two of them clash."""
    cube = {}
    for lit in literals:
        if cube.setdefault(lit.atom, lit.positive) != lit.positive:
            return None
    return cube


@dataclass(frozen=True)
class CoreType(object):

    """A total polarity assignment over Core(basis).

    :param basis: The :class:`~slq.formula.CoreBasis`.
    :param positives: Frozenset of the atoms which are positive.

    """

    basis: object
    positives: frozenset

    def __post_init__(self):
        for atom in self.positives:
            if not self.basis.contains(atom):
                raise BasisViolation('%s is outside of Core(%s)' % (atom, self.basis))

    def __str__(self):
        return str(self.conjunction())

    def polarity(self, atom):
        if not self.basis.contains(atom):
            raise BasisViolation('%s is outside of Core(%s)' % (atom, self.basis))
        return atom in self.positives

    def literals(self):
        return sort_literals(CoreLiteral(a, a in self.positives) for a in self.basis.core_formulae())

    def conjunction(self):
        return conjunction_of(self.literals())

    def cube(self):
        return {a: a in self.positives for a in self.basis.core_formulae()}

    # --- derived views; only meaningful on satisfiable types ---

    @functools.cached_property
    def maxsize(self):
        """The largest k with ``size >= k`` positive."""
        return max((a.k for a in self.positives if isinstance(a, SizeGeq)), default=0)

    @functools.cached_property
    def shape(self):
        """The positive atoms other than ``size >= k``; types differing only in size share it."""
        return frozenset(a for a in self.positives if not isinstance(a, SizeGeq))

    @functools.cached_property
    def partition(self):
        """Classes of the variables under the positive equalities, as tuples."""
        out = []
        seen = set()
        for x in self.basis.vars:
            if x in seen:
                continue
            block = tuple(y for y in self.basis.vars if Eq(x, y) in self.positives)
            seen.update(block)
            out.append(block)
        return tuple(out)

    @functools.cached_property
    def allocated(self):
        return frozenset(x for x in self.basis.vars if Alloc(x) in self.positives)

    @property
    def sort_key(self):
        return (self.maxsize, len(self.partition), tuple(l.sort_key for l in self.literals() if l.positive))

    @classmethod
    def from_abstraction(cls, basis, partition, allocated, pointer, size):
        """Build the type of an abstraction.

        :param partition: Sequence of blocks of variables.
        :param allocated: Indices of the allocated blocks.
        :param pointer: Mapping of allocated block index to target block index
            (or None for a location no variable names).
        :param int size: Heap size; ``basis.alpha`` means "at least alpha".

        """
        index = {}
        for i, block in enumerate(partition):
            for v in block:
                index[v] = i
        positives = set()
        for x in basis.vars:
            for y in basis.vars:
                if index[x] == index[y]:
                    positives.add(Eq(x, y))
                if index[x] in allocated and pointer.get(index[x]) == index[y]:
                    positives.add(PointsTo(x, y))
            if index[x] in allocated:
                positives.add(Alloc(x))
        positives.update(SizeGeq(k) for k in range(min(size, basis.alpha) + 1))
        return cls(basis, frozenset(positives))

    def restrict(self, basis):
        """The type this one induces on a smaller basis."""
        if not set(basis.vars).issubset(self.basis.vars) or basis.alpha > self.basis.alpha:
            raise BasisViolation('%s is not contained in %s' % (basis, self.basis))
        return CoreType(basis, frozenset(a for a in self.positives if basis.contains(a)))


@functools.lru_cache(maxsize=None)
def core_type_sat(t):
    """Is the core type ``t`` satisfiable?"""

    basis = t.basis
    if not basis.ready:
        raise BasisViolation('alpha of %s is below the number of variables' % (basis, ))
    pos = t.positives
    X = basis.vars

    # Equalities form an equivalence relation.
    for x in X:
        if Eq(x, x) not in pos:
            return False
    for x in X:
        for y in X:
            if (Eq(x, y) in pos) != (Eq(y, x) in pos):
                return False
            if Eq(x, y) not in pos:
                continue
            for z in X:
                if Eq(y, z) in pos and Eq(x, z) not in pos:
                    return False

    for x in X:
        for y in X:
            if Eq(x, y) in pos:
                # alloc and |-> respect the equivalence.
                if (Alloc(x) in pos) != (Alloc(y) in pos):
                    return False
                for z in X:
                    if (PointsTo(x, z) in pos) != (PointsTo(y, z) in pos):
                        return False
                    if (PointsTo(z, x) in pos) != (PointsTo(z, y) in pos):
                        return False
            if PointsTo(x, y) in pos:
                if Alloc(x) not in pos:
                    return False
                for z in X:
                    if PointsTo(x, z) in pos and Eq(y, z) not in pos:
                        return False

    allocated_classes = len({t.partition.index(b) for b in t.partition if b[0] in t.allocated})
    lowest = max([allocated_classes] + [a.k for a in pos if isinstance(a, SizeGeq)])
    negative = [k for k in range(basis.alpha + 1) if SizeGeq(k) not in pos]
    return all(lowest < k for k in negative)


def core_type_model(t):
    """A memory state satisfying every literal of ``t``.

    Each class of variables gets its own location, from 1 up; location 0 is
    where allocated classes point when no variable names their target, and
    where garbage cells point. Garbage cells make up the heap size.

    """
    if not core_type_sat(t):
        raise PreconditionViolation('%s is not satisfiable' % (t, ))

    partition = t.partition
    location = {}
    for i, block in enumerate(partition):
        for v in block:
            location[v] = i + 1

    heap = {}
    for block in partition:
        x = block[0]
        if x not in t.allocated:
            continue
        target = 0
        for y in t.basis.vars:
            if PointsTo(x, y) in t.positives:
                target = location[y]
                break
        heap[location[x]] = target

    size = max(t.maxsize, len(heap))
    garbage = len(partition) + 1
    while len(heap) < size:
        heap[garbage] = 0
        garbage += 1

    return MemoryState(location, heap)


@functools.lru_cache(maxsize=None)
def _partitions(vars_):
    """Every set partition of ``vars_``, with its variable to block index map."""
    out = []
    for partition in set_partitions(vars_):
        index = {}
        for i, block in enumerate(partition):
            for v in block:
                index[v] = i
        out.append((partition, index))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _partition_table(vars_):
    """Partitions keyed by the set of equalities they make true."""
    table = {}
    for partition, index in _partitions(vars_):
        key = frozenset(Eq(x, y) for x in vars_ for y in vars_ if index[x] == index[y])
        table[key] = (partition, index)
    return table


@functools.lru_cache(maxsize=None)
def _complete(items, basis):

    cube = dict(items)
    for atom in cube:
        if not basis.contains(atom):
            raise BasisViolation('%s is outside of Core(%s)' % (atom, basis))

    eqs = [(a, v) for a, v in cube.items() if isinstance(a, Eq)]
    allocs = [(a, v) for a, v in cube.items() if isinstance(a, Alloc)]
    points = [(a, v) for a, v in cube.items() if isinstance(a, PointsTo)]
    sizes = [(a.k, v) for a, v in cube.items() if isinstance(a, SizeGeq)]

    low = max([k for k, v in sizes if v], default=0)
    high = min([k - 1 for k, v in sizes if not v], default=basis.alpha)
    if high < 0:
        return ()

    if len(eqs) == len(basis.vars) ** 2:
        # Every equality is fixed, so at most one partition fits.
        found = _partition_table(basis.vars).get(frozenset(a for a, v in eqs if v))
        candidates = [found] if found else []
    else:
        candidates = _partitions(basis.vars)

    out = []
    for partition, index in candidates:

        if any((index[a.left] == index[a.right]) != v for a, v in eqs):
            continue

        n = len(partition)
        alloc_req = [None] * n
        target_req = [None] * n
        forbidden = [set() for _ in range(n)]
        clash = False

        for a, v in allocs:
            c = index[a.var]
            if alloc_req[c] is None:
                alloc_req[c] = v
            elif alloc_req[c] != v:
                clash = True
        for a, v in points:
            c = index[a.source]
            d = index[a.target]
            if v:
                if alloc_req[c] is False or target_req[c] not in (None, d):
                    clash = True
                alloc_req[c] = True
                target_req[c] = d
            else:
                forbidden[c].add(d)
        if clash:
            continue

        options = []
        for c in range(n):
            opts = []
            if alloc_req[c] is not False:
                if target_req[c] is not None:
                    targets = [target_req[c]] if target_req[c] not in forbidden[c] else []
                else:
                    targets = [d for d in range(n) if d not in forbidden[c]] + [None]
                opts.extend((True, d) for d in targets)
            if alloc_req[c] is not True:
                opts.append((False, None))
            if not opts:
                break
            options.append(opts)
        else:
            for choice in itertools.product(*options):
                allocated = frozenset(c for c, (is_alloc, _) in enumerate(choice) if is_alloc)
                pointer = {c: d for c, (is_alloc, d) in enumerate(choice) if is_alloc}
                for size in range(max(low, len(allocated)), high + 1):
                    out.append(CoreType.from_abstraction(basis, partition, allocated, pointer, size))

    return tuple(out)


def complete(cube, basis):
    """The satisfiable core types over ``basis`` which agree with ``cube``.

    :param cube: Mapping of core atoms to polarities; atoms not mentioned are
        free to take either polarity.
    :return: Tuple of :class:`CoreType`, in enumeration order.

    """
    return _complete(frozenset(cube.items()), basis)


def all_core_types(basis):
    """Every satisfiable core type over ``basis``."""
    return complete({}, basis)


def lift_type(t, basis):
    """The types over a larger ``basis`` which restrict to ``t``."""
    if t.basis == basis:
        return (t, )
    if t.basis.vars == basis.vars and t.basis.alpha <= basis.alpha:
        # Only sizes change: an exact size stays, "at least alpha" spreads out.
        if t.maxsize < t.basis.alpha:
            sizes = [t.maxsize]
        else:
            sizes = range(t.basis.alpha, basis.alpha + 1)
        return tuple(CoreType(basis, t.shape | {SizeGeq(k) for k in range(n + 1)}) for n in sizes)
    return complete(t.cube(), basis)
