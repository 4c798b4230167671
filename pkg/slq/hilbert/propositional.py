"""Propositional reasoning over opaque separation logic atoms.

Formulas are first rewritten with :func:`~slq.formula.expand_shortcuts`, so
only ``not`` and ``/\\`` remain as connectives. Every maximal subformula
which is not propositional (``emp``, ``=``, ``|->``, ``*``, ``-*``) becomes an
opaque atom, compared structurally.

"""

import itertools
import logging

from ..formula import And, Bot, Iff, Implies, Not, Or, Top, expand_shortcuts
from ..utils import iter_unique


log = logging.getLogger(__name__)


_CONNECTIVES = (Not, And, Or, Implies, Iff)


def opaque_atoms(f):
    """The opaque atoms of an already expanded formula, in order of appearance."""
    out = []
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, _CONNECTIVES):
            stack.extend(reversed(node.children()))
        elif not isinstance(node, (Top, Bot)):
            out.append(node)
    return list(iter_unique(out))


def evaluate(f, valuation):
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, Not):
        return not evaluate(f.body, valuation)
    if isinstance(f, And):
        return evaluate(f.left, valuation) and evaluate(f.right, valuation)
    if isinstance(f, Or):
        return evaluate(f.left, valuation) or evaluate(f.right, valuation)
    if isinstance(f, Implies):
        return not evaluate(f.left, valuation) or evaluate(f.right, valuation)
    if isinstance(f, Iff):
        return evaluate(f.left, valuation) == evaluate(f.right, valuation)
    return valuation[f]


def countervaluation(premises, conclusion):
    """An assignment of the atoms making every premise true and the conclusion
    false, or None if the conclusion is a propositional consequence.

    """
    premises = [expand_shortcuts(p) for p in premises]
    conclusion = expand_shortcuts(conclusion)
    atoms = list(iter_unique(a for f in premises + [conclusion] for a in opaque_atoms(f)))
    log.debug('truth table over %d atoms', len(atoms))
    for values in itertools.product((False, True), repeat=len(atoms)):
        valuation = dict(zip(atoms, values))
        if evaluate(conclusion, valuation):
            continue
        if all(evaluate(p, valuation) for p in premises):
            return valuation


def is_consequence(premises, conclusion):
    return countervaluation(premises, conclusion) is None


def is_tautology(f):
    return is_consequence((), f)
