"""Syntax of quantifier-free separation logic with ``*``, ``-*`` and ``-o``.

Formulas are immutable trees which compare structurally. Variables are plain
strings. The concrete text syntax lives in :mod:`slq.parser`; :func:`to_text`
is its inverse.

"""

import functools
import re
from dataclasses import dataclass
from typing import ClassVar, Tuple

from .exceptions import BasisViolation


VARIABLE_RE = re.compile(r"^[a-zA-Z][a-zA-Z0-9_']*$")

#: Words the parser reads as syntax; they cannot name variables.
KEYWORDS = frozenset(['emp', 'true', 'false', 'alloc', 'size', 'not'])

# Binding strength of each printed shape; larger binds tighter.
IFF, IMP, OR, AND, UNARY, ATOM = range(6)


def check_variable(name):
    if not isinstance(name, str) or not VARIABLE_RE.match(name):
        raise ValueError('bad variable name %r' % (name, ))
    if name in KEYWORDS:
        raise ValueError('%r is a keyword, not a variable name' % (name, ))
    return name


class Formula(object):

    """Base of all formula nodes."""

    __slots__ = ()

    def children(self):
        return ()

    def rebuild(self, children):
        """A node of the same shape over new children."""
        return self

    def variables(self):
        """Variables mentioned by this node itself (not its children)."""
        return ()

    def __str__(self):
        return to_text(self)


# === ATOMS ===

@dataclass(frozen=True)
class Emp(Formula):
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Eq(Formula):

    left: str
    right: str

    def __post_init__(self):
        check_variable(self.left)
        check_variable(self.right)

    def variables(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class PointsTo(Formula):

    source: str
    target: str

    def __post_init__(self):
        check_variable(self.source)
        check_variable(self.target)

    def variables(self):
        return (self.source, self.target)


@dataclass(frozen=True)
class Alloc(Formula):

    var: str

    def __post_init__(self):
        check_variable(self.var)

    def variables(self):
        return (self.var, )


@dataclass(frozen=True)
class SizeGeq(Formula):

    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 0:
            raise ValueError('size index must be a natural number; got %r' % (self.k, ))


EMP = Emp()
TRUE = Top()
FALSE = Bot()

# === CONNECTIVES ===

@dataclass(frozen=True)
class Not(Formula):

    body: Formula

    def children(self):
        return (self.body, )

    def rebuild(self, children):
        body, = children
        return Not(body)


@dataclass(frozen=True)
class Binary(Formula):

    left: Formula
    right: Formula

    symbol: ClassVar[str] = None
    level: ClassVar[int] = None

    def children(self):
        return (self.left, self.right)

    def rebuild(self, children):
        left, right = children
        return self.__class__(left, right)


@dataclass(frozen=True)
class And(Binary):
    symbol = '/\\'
    level = AND


@dataclass(frozen=True)
class Star(Binary):
    symbol = '*'
    level = AND


@dataclass(frozen=True)
class Or(Binary):
    symbol = '\\/'
    level = OR


@dataclass(frozen=True)
class Implies(Binary):
    symbol = '->'
    level = IMP


@dataclass(frozen=True)
class Wand(Binary):
    symbol = '-*'
    level = IMP


@dataclass(frozen=True)
class Septraction(Binary):
    symbol = '-o'
    level = IMP


@dataclass(frozen=True)
class Iff(Binary):
    symbol = '<->'
    level = IFF


# === CORE BASIS ===

@dataclass(frozen=True)
class CoreBasis(object):

    """A variable set X and size bound alpha, which together fix Core(X, alpha).

    Variables are kept sorted and unique, whatever order they are given in.

    """

    vars: Tuple[str, ...]
    alpha: int

    def __post_init__(self):
        object.__setattr__(self, 'vars', tuple(sorted(set(self.vars))))
        if self.alpha < 1:
            raise BasisViolation('alpha must be at least 1; got %r' % (self.alpha, ))

    def __str__(self):
        return 'X={%s}, alpha=%d' % (', '.join(self.vars), self.alpha)

    @property
    def ready(self):
        """Is alpha large enough for the elimination operations?"""
        return self.alpha >= max(1, len(self.vars))

    def join(self, other, alpha=None):
        vars_ = set(self.vars).union(other.vars)
        if alpha is None:
            alpha = max(self.alpha, other.alpha)
        return CoreBasis(vars_, max(alpha, len(vars_), 1))

    def core_formulae(self):
        """Every formula of Core(X, alpha), in canonical order."""
        out = [Eq(x, y) for x in self.vars for y in self.vars]
        out.extend(Alloc(x) for x in self.vars)
        out.extend(PointsTo(x, y) for x in self.vars for y in self.vars)
        out.extend(SizeGeq(k) for k in range(self.alpha + 1))
        return out

    def contains(self, atom):
        if isinstance(atom, SizeGeq):
            return atom.k <= self.alpha
        if isinstance(atom, (Eq, Alloc, PointsTo)):
            return all(v in self.vars for v in atom.variables())
        return False

    def to_record(self):
        return {'vars': list(self.vars), 'alpha': self.alpha}


# === HELPERS ===

def size_eq(k):
    """``size = k``, which is sugar for ``size >= k /\\ not size >= k+1``."""
    return And(SizeGeq(k), Not(SizeGeq(k + 1)))


def size_eq_index(f):
    """The ``k`` if ``f`` is exactly the ``size = k`` shape, else None."""
    if (
        isinstance(f, And) and
        isinstance(f.left, SizeGeq) and
        isinstance(f.right, Not) and
        isinstance(f.right.body, SizeGeq) and
        f.right.body.k == f.left.k + 1
    ):
        return f.left.k


def neq(x, y):
    return Not(Eq(x, y))


def conjoin(items):
    """Left-nested conjunction; ``true`` when there is nothing to conjoin."""
    items = list(items)
    if not items:
        return TRUE
    return functools.reduce(And, items)


def disjoin(items):
    """Left-nested disjunction; ``false`` when there is nothing to disjoin."""
    items = list(items)
    if not items:
        return FALSE
    return functools.reduce(Or, items)


def subformulas(f):
    """Iter every node of ``f``, parents before children."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def connective_count(f):
    return sum(1 for node in subformulas(f) if node.children())


def free_vars(f):
    """All variables occurring in ``f``, sorted."""
    found = set()
    for node in subformulas(f):
        found.update(node.variables())
    return tuple(sorted(found))


def map_bottom_up(f, func):
    return func(f.rebuild([map_bottom_up(c, func) for c in f.children()]))


def substitute(f, mapping):
    """Simultaneously rename variables according to ``mapping``."""

    def rename(node):
        if isinstance(node, Eq):
            return Eq(mapping.get(node.left, node.left), mapping.get(node.right, node.right))
        if isinstance(node, PointsTo):
            return PointsTo(mapping.get(node.source, node.source), mapping.get(node.target, node.target))
        if isinstance(node, Alloc):
            return Alloc(mapping.get(node.var, node.var))
        return node

    return map_bottom_up(f, rename)


def _expand_node(node):

    if isinstance(node, Alloc):
        return Wand(PointsTo(node.var, node.var), FALSE)

    if isinstance(node, SizeGeq):
        if node.k == 0:
            return TRUE
        out = Not(EMP)
        for _ in range(node.k - 1):
            out = Star(Not(EMP), out)
        return out

    if isinstance(node, Septraction):
        return Not(Wand(node.left, Not(node.right)))

    if isinstance(node, Or):
        return Not(And(Not(node.left), Not(node.right)))

    if isinstance(node, Implies):
        return Not(And(node.left, Not(node.right)))

    if isinstance(node, Iff):
        return And(
            Not(And(node.left, Not(node.right))),
            Not(And(node.right, Not(node.left))),
        )

    return node


def expand_shortcuts(f):
    """Rewrite ``f`` into emp, =, |->, not, /\\, *, -* (plus true and false).

    Children are expanded before their parents, so the pieces a shortcut is
    rewritten into are already primitive::

        >>> to_text(expand_shortcuts(SizeGeq(3)))
        'not emp * (not emp * not emp)'

    """
    return map_bottom_up(f, _expand_node)


def canonical_ac(f):
    """A comparison key for ``f`` modulo associativity and commutativity of ``*`` and ``/\\``.

    Maximal runs of the same operator are flattened and their operands sorted;
    everything else keeps its shape.

    """
    if isinstance(f, (Star, And)):
        operands = []
        stack = [f]
        while stack:
            node = stack.pop()
            if type(node) is type(f):
                stack.extend(node.children())
            else:
                operands.append(canonical_ac(node))
        return (type(f).__name__, tuple(sorted(operands, key=repr)))
    children = f.children()
    if children:
        return (type(f).__name__, tuple(canonical_ac(c) for c in children))
    return f


# === PRINTING ===

def _render(f):

    if isinstance(f, Emp):
        return 'emp', ATOM
    if isinstance(f, Top):
        return 'true', ATOM
    if isinstance(f, Bot):
        return 'false', ATOM
    if isinstance(f, Eq):
        return '%s = %s' % (f.left, f.right), ATOM
    if isinstance(f, PointsTo):
        return '%s |-> %s' % (f.source, f.target), ATOM
    if isinstance(f, Alloc):
        return 'alloc(%s)' % f.var, ATOM
    if isinstance(f, SizeGeq):
        return 'size >= %d' % f.k, ATOM

    k = size_eq_index(f)
    if k is not None:
        return 'size = %d' % k, ATOM

    if isinstance(f, Not):
        if isinstance(f.body, Eq):
            return '%s != %s' % (f.body.left, f.body.right), ATOM
        return 'not ' + _wrap(f.body, UNARY), UNARY

    if isinstance(f, (Or, And, Star)):
        # Walk the left spine of a chain so long disjunctions print flat.
        cls = type(f)
        left, right = (OR, AND) if cls is Or else (AND, UNARY)
        operands = []
        node = f
        while type(node) is cls and size_eq_index(node) is None:
            operands.append(node.right)
            node = node.left
        parts = [_wrap(node, left)] + [_wrap(r, right) for r in reversed(operands)]
        return (' %s ' % f.symbol).join(parts), f.level

    if isinstance(f, Iff):
        left, right = IMP, IMP
    elif isinstance(f, (Implies, Wand, Septraction)):
        left, right = OR, IMP
    else:
        raise TypeError('not a formula: %r' % (f, ))

    return '%s %s %s' % (_wrap(f.left, left), f.symbol, _wrap(f.right, right)), f.level


def _wrap(f, min_level):
    text, level = _render(f)
    if level < min_level:
        return '(%s)' % text
    return text


def to_text(f):
    """Render ``f`` with as few parentheses as the grammar allows."""
    return _render(f)[0]
