"""Formula templates with metavariable holes, and first-order matching.

A template is an ordinary formula tree which may also contain the hole nodes
below. Every variable name inside a template atom is itself a metavariable,
so ``Eq('x', 'y')`` in a template matches any equality.

Matching walks the template and the candidate together, binding holes as it
goes. Holes which cannot be bound structurally (index arithmetic,
substitutions, conjunctions over a variable set) are checked at the end by
instantiating them under the bindings found and comparing.

"""

from dataclasses import dataclass
from typing import Tuple

from ..exceptions import BindingError
from ..formula import (
    Alloc, And, Eq, Formula, Not, PointsTo, SizeGeq, conjoin, substitute,
)
from ..utils import monus


@dataclass(frozen=True)
class Meta(Formula):

    """A formula metavariable."""

    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class NatExpr(object):

    """``max(0, sum(terms) + offset)``; a term names a natural or a variable set."""

    terms: Tuple[str, ...]
    offset: int = 0

    @property
    def bare(self):
        """The parameter name if this is exactly one term, else None."""
        if len(self.terms) == 1 and not self.offset:
            return self.terms[0]

    def value(self, bindings):
        total = 0
        for name in self.terms:
            try:
                v = bindings[name]
            except KeyError:
                raise BindingError('%s is not bound' % name)
            total += len(v) if isinstance(v, tuple) else v
        return monus(total, -self.offset) if self.offset < 0 else total + self.offset

    def __str__(self):
        if not self.terms:
            return str(max(self.offset, 0))
        out = '+'.join(self.terms)
        if self.offset > 0:
            out += '+%d' % self.offset
        elif self.offset < 0:
            out += '-%d' % -self.offset
        return out


def nat(*terms, offset=0):
    return NatExpr(tuple(terms), offset)


@dataclass(frozen=True)
class SizeHole(Formula):

    """``size >= expr``."""

    expr: NatExpr

    def __str__(self):
        return 'size >= %s' % self.expr


@dataclass(frozen=True)
class Subst(Formula):

    """``body`` with every occurrence of variable ``old`` replaced by ``new``."""

    body: Formula
    new: str
    old: str


@dataclass(frozen=True)
class BigAnd(Formula):

    """``prefix[0] /\\ ... /\\ body[var := m1] /\\ body[var := m2] ...``.

    Members ``m`` range over the sorted variable set bound to ``setparam``,
    skipping the member bound to ``exclude`` if there is one.

    """

    prefix: Tuple[Formula, ...]
    setparam: str
    var: str
    body: Formula
    exclude: str = None


def size_eq_t(expr):
    """Template for ``size = expr``."""
    return And(SizeHole(expr), Not(SizeHole(NatExpr(expr.terms, expr.offset + 1))))


def _var(bindings, name):
    try:
        return bindings[name]
    except KeyError:
        raise BindingError('variable %s is not bound' % name)


def instantiate(t, bindings):
    """Fill the holes of template ``t``.

    :raises BindingError: if a hole is not bound.

    """

    if isinstance(t, Meta):
        try:
            return bindings[t.name]
        except KeyError:
            raise BindingError('formula %s is not bound' % t.name)

    if isinstance(t, SizeHole):
        return SizeGeq(t.expr.value(bindings))

    if isinstance(t, Subst):
        return substitute(instantiate(t.body, bindings), {_var(bindings, t.old): _var(bindings, t.new)})

    if isinstance(t, BigAnd):
        members = _var(bindings, t.setparam)
        skip = bindings.get(t.exclude) if t.exclude else None
        parts = [instantiate(p, bindings) for p in t.prefix]
        for m in members:
            if m != skip:
                parts.append(instantiate(t.body, dict(bindings, **{t.var: m})))
        return conjoin(parts)

    if isinstance(t, Eq):
        return Eq(_var(bindings, t.left), _var(bindings, t.right))
    if isinstance(t, PointsTo):
        return PointsTo(_var(bindings, t.source), _var(bindings, t.target))
    if isinstance(t, Alloc):
        return Alloc(_var(bindings, t.var))

    children = t.children()
    if children:
        return t.rebuild([instantiate(c, bindings) for c in children])
    return t


def _bind(bindings, name, value):
    if name in bindings:
        return bindings[name] == value
    bindings[name] = value
    return True


def _match(t, f, bindings, deferred):

    if isinstance(t, Meta):
        return _bind(bindings, t.name, f)

    if isinstance(t, SizeHole):
        if not isinstance(f, SizeGeq):
            return False
        name = t.expr.bare
        # Set cardinalities are only ever checked, never bound.
        if name is not None and not isinstance(bindings.get(name), tuple):
            return _bind(bindings, name, f.k)
        deferred.append((t, f))
        return True

    if isinstance(t, (Subst, BigAnd)):
        deferred.append((t, f))
        return True

    if type(t) is not type(f):
        return False

    if isinstance(t, (Eq, PointsTo, Alloc)):
        return all(_bind(bindings, a, b) for a, b in zip(t.variables(), f.variables()))

    children = t.children()
    if not children:
        return t == f
    return all(_match(a, b, bindings, deferred) for a, b in zip(children, f.children()))


def match(t, f, bindings=None):
    """Bindings under which template ``t`` instantiates to exactly ``f``, or None.

    :param dict bindings: Bindings fixed in advance; they are not modified.

    """
    bindings = dict(bindings or {})
    deferred = []
    if not _match(t, f, bindings, deferred):
        return None
    for hole, target in deferred:
        try:
            if instantiate(hole, bindings) != target:
                return None
        except BindingError:
            return None
    return bindings


def _wrap_text(t):
    text = template_text(t)
    if t.children() and not isinstance(t, Not) and _size_eq_expr(t) is None:
        return '(%s)' % text
    if isinstance(t, BigAnd):
        return '(%s)' % text
    return text


def _size_eq_expr(t):
    if (
        isinstance(t, And) and isinstance(t.left, SizeHole) and
        isinstance(t.right, Not) and isinstance(t.right.body, SizeHole)
    ):
        a, b = t.left.expr, t.right.body.expr
        if a.terms == b.terms and a.offset + 1 == b.offset:
            return a


def template_text(t):
    """Render a template for people; holes print as their parameter names.

    >>> template_text(size_eq_t(nat('b1', 'b2')))
    'size = b1+b2'

    """

    if isinstance(t, (Meta, SizeHole)):
        return str(t)
    if isinstance(t, Subst):
        return '%s[%s/%s]' % (_wrap_text(t.body), t.new, t.old)
    if isinstance(t, BigAnd):
        member = '%s in %s' % (t.var, t.setparam)
        if t.exclude:
            member += ' - {%s}' % t.exclude
        parts = [_wrap_text(p) for p in t.prefix]
        parts.append('AND[%s] %s' % (member, _wrap_text(t.body)))
        return ' /\\ '.join(parts)

    expr = _size_eq_expr(t)
    if expr is not None:
        return 'size = %s' % expr

    if isinstance(t, Not):
        if isinstance(t.body, Eq):
            return '%s != %s' % (t.body.left, t.body.right)
        return 'not ' + _wrap_text(t.body)

    children = t.children()
    if not children:
        return str(t)
    return '%s %s %s' % (_wrap_text(t.left), t.symbol, _wrap_text(t.right))
