import logging
import os
import time
from unittest import TestCase, skipUnless

from hypothesis import HealthCheck, assume, given, settings, strategies as st

from slq.config import Config
from slq.formula import (
    EMP, FALSE, TRUE, Alloc, And, CoreBasis, Eq, Iff, Implies, Not, Or, PointsTo,
    Septraction, SizeGeq, Star, Wand, free_vars, neq, size_eq, to_text,
)
from slq.parser import parse
from slq.semantics import EnumerationBounds, Evaluator, MemoryState, enumerate_states, satisfies


#: Settings as the test run sees them; suite sizes come from here.
config = Config()

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')

log = logging.getLogger(__name__)

#: Marks a suite which only runs with SLQ_SLOW=1.
slow = skipUnless(config.SLOW, 'slow; set SLQ_SLOW=1 to run')


def sampled(name, **kwargs):
    """Seeded hypothesis settings sized by the config setting ``name``."""
    return settings(
        max_examples=int(config[name]),
        derandomize=True,
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
        **kwargs
    )


def holds(text, store=None, heap=None, bounds=None):
    """Does the state given by ``store`` and ``heap`` satisfy formula ``text``?"""
    f = f_or_text(text)
    return satisfies(MemoryState(store, heap), f, bounds or EnumerationBounds.for_formula(f))


def f_or_text(f):
    return parse(f) if isinstance(f, str) else f


def disagreement(f, g, vars_, bounds):
    """The first state within ``bounds`` on which ``f`` and ``g`` differ, or None."""
    evaluators = {}
    for state in enumerate_states(vars_, bounds, canonical_stores=True):
        key = tuple(sorted(state.store.items()))
        ev = evaluators.get(key)
        if ev is None:
            ev = evaluators[key] = Evaluator(state.store, bounds)
        if ev.holds(f, state.heap) != ev.holds(g, state.heap):
            return state


def timed(label, func, limit):
    """Run ``func``, log how long it took, and fail past ``limit`` seconds."""
    start = time.monotonic()
    func()
    elapsed = time.monotonic() - start
    log.warning('%s took %.1fs', label, elapsed)
    if elapsed > limit:
        raise AssertionError('%s took %.1fs; the limit is %ss' % (label, elapsed, limit))
    return elapsed
