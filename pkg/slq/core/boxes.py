"""Closed forms of ``t1 * t2`` and ``t1 -o t2`` for satisfiable core types.

Both take two satisfiable types over one basis (X, alpha) with alpha >= |X|
and return a conjunction of core literals, as a canonically sorted list of
:class:`~slq.core.types.CoreLiteral`. The star form lives in Core(X, 2 alpha);
the septraction form stays inside Core(X, alpha).

A contradictory pair of types shows up as a literal ``x != x`` in the
result (or two clashing literals); callers complete the result and get no
types back.

Each form splits into a *shape* part, which reads only the equalities,
allocation and points-to literals of the operands, and a *size* part, which
reads only their ``size >= k`` literals. The normalizer uses the two halves
separately; :func:`boxstar` and :func:`boxseptra` are their conjunction.

"""

import functools
import logging

from ..exceptions import PreconditionViolation
from ..formula import Alloc, Eq, PointsTo, SizeGeq
from ..utils import monus
from .types import CoreLiteral, core_type_sat, sort_literals


log = logging.getLogger(__name__)


def _check_pair(t1, t2):
    if t1.basis != t2.basis:
        raise PreconditionViolation('core types over different bases: %s and %s' % (t1.basis, t2.basis))
    if not t1.basis.ready:
        raise PreconditionViolation('alpha of %s is below the number of variables' % (t1.basis, ))
    for t in (t1, t2):
        if not core_type_sat(t):
            raise PreconditionViolation('%s is not satisfiable' % (t, ))


def _sizes(t):
    pos = [k for k in range(t.basis.alpha + 1) if SizeGeq(k) in t.positives]
    neg = [k for k in range(t.basis.alpha + 1) if SizeGeq(k) not in t.positives]
    return pos, neg


def _equalities(t1, t2, X):
    for x in X:
        for y in X:
            yield CoreLiteral(Eq(x, y), Eq(x, y) in t1.positives)
            yield CoreLiteral(Eq(x, y), Eq(x, y) in t2.positives)


def star_shape(t1, t2):
    """The equality, allocation and points-to half of ``t1 * t2``."""

    X = t1.basis.vars
    p1 = t1.positives
    p2 = t2.positives

    out = list(_equalities(t1, t2, X))

    for x in X:
        a1 = Alloc(x) in p1
        a2 = Alloc(x) in p2
        if a1 or a2:
            out.append(CoreLiteral(Alloc(x)))
        else:
            out.append(CoreLiteral(Alloc(x), False))
        if a1 and a2:
            out.append(CoreLiteral(Eq(x, x), False))
        for y in X:
            pto = PointsTo(x, y)
            if pto in p1 or pto in p2:
                out.append(CoreLiteral(pto))
            if (a1 and pto not in p1) or (a2 and pto not in p2):
                out.append(CoreLiteral(pto, False))

    return out


def star_size(t1, t2):
    """The ``size >= k`` half of ``t1 * t2``."""
    pos1, neg1 = _sizes(t1)
    pos2, neg2 = _sizes(t2)
    out = [CoreLiteral(SizeGeq(b1 + b2)) for b1 in pos1 for b2 in pos2]
    out.extend(CoreLiteral(SizeGeq(monus(b1 + b2, 1)), False) for b1 in neg1 for b2 in neg2)
    return out


def septraction_shape(t1, t2):
    """The equality, allocation and points-to half of ``t1 -o t2``."""

    X = t1.basis.vars
    p1 = t1.positives
    p2 = t2.positives

    out = list(_equalities(t1, t2, X))

    for x in X:
        a1 = Alloc(x) in p1
        a2 = Alloc(x) in p2
        if not a1 and a2:
            out.append(CoreLiteral(Alloc(x)))
        if not a2:
            out.append(CoreLiteral(Alloc(x), False))
        if a1:
            out.append(CoreLiteral(Alloc(x), False))
            if not a2:
                out.append(CoreLiteral(Eq(x, x), False))
        for y in X:
            pto = PointsTo(x, y)
            if pto not in p2:
                out.append(CoreLiteral(pto, False))
            if not a1 and pto in p2:
                out.append(CoreLiteral(pto))
            if a1 and pto not in p1 and pto in p2:
                out.append(CoreLiteral(Eq(x, x), False))
            if pto in p1 and pto not in p2:
                out.append(CoreLiteral(Eq(x, x), False))

    return out


def septraction_size(t1, t2):
    """The ``size >= k`` half of ``t1 -o t2``."""
    pos1, neg1 = _sizes(t1)
    pos2, neg2 = _sizes(t2)
    out = [CoreLiteral(SizeGeq(monus(b2 + 1, b1))) for b1 in neg1 for b2 in pos2]
    out.extend(CoreLiteral(SizeGeq(monus(b2, b1)), False) for b1 in pos1 for b2 in neg2)
    return out


@functools.lru_cache(maxsize=None)
def boxstar(t1, t2):
    """Conjunction of literals equivalent to ``t1 * t2``."""
    _check_pair(t1, t2)
    return tuple(sort_literals(star_shape(t1, t2) + star_size(t1, t2)))


@functools.lru_cache(maxsize=None)
def boxseptra(t1, t2):
    """Conjunction of literals equivalent to ``t1 -o t2``.

    ``t1`` describes the added heap, ``t2`` the combined one.

    """
    _check_pair(t1, t2)
    return tuple(sort_literals(septraction_shape(t1, t2) + septraction_size(t1, t2)))
