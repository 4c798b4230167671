import logging
import time

from ..exceptions import WitnessMismatch
from ..formula import Implies, Not
from ..semantics import EnumerationBounds, satisfies
from .normalize import Normalizer
from .types import core_type_model


log = logging.getLogger(__name__)


class SatResult(object):

    """Outcome of :func:`decide_sat`.

    :attr verdict: ``'SAT'`` or ``'UNSAT'``.
    :attr witness: A validated :class:`~slq.semantics.MemoryState`, or None.
    :attr normal_form: The :class:`~slq.core.normalize.NormalizedForm` decided on.

    """

    def __init__(self, formula, normal_form, witness, elapsed):
        self.formula = formula
        self.normal_form = normal_form
        self.witness = witness
        self.elapsed = elapsed

    def __bool__(self):
        return self.witness is not None

    @property
    def verdict(self):
        return 'SAT' if self else 'UNSAT'

    @property
    def basis(self):
        return self.normal_form.basis

    def __repr__(self):
        return '<SatResult %s>' % self.verdict


class ValidResult(object):

    """Outcome of :func:`decide_valid`; true when the formula is valid."""

    def __init__(self, formula, sat_result):
        self.formula = formula
        self.sat_result = sat_result

    def __bool__(self):
        return not self.sat_result

    @property
    def verdict(self):
        return 'VALID' if self else 'INVALID'

    @property
    def countermodel(self):
        return self.sat_result.witness

    @property
    def basis(self):
        return self.sat_result.basis

    @property
    def elapsed(self):
        return self.sat_result.elapsed

    def __repr__(self):
        return '<ValidResult %s>' % self.verdict


def decide_sat(f, normalizer=None):
    """Decide satisfiability of ``f`` through its normal form.

    The witness is the model of the smallest satisfiable core type, and is
    checked against ``f`` itself before it is returned.

    :raises WitnessMismatch: if that check fails.

    """
    start = time.time()
    normalizer = normalizer or Normalizer()
    g = normalizer.normalize(f)
    types = g.sorted_types()
    witness = None
    if types:
        witness = core_type_model(types[0])
        if not satisfies(witness, f, EnumerationBounds.for_formula(f)):
            log.error('witness %s does not satisfy %s', witness, f)
            raise WitnessMismatch('witness %s does not satisfy %s' % (witness, f))
    elapsed = time.time() - start
    log.debug('%s is %s after %.3fs over %s', f, 'SAT' if witness else 'UNSAT', elapsed, g.basis)
    return SatResult(f, g, witness, elapsed)


def decide_valid(f, normalizer=None):
    """Decide validity of ``f``; a countermodel comes back when it is not valid."""
    return ValidResult(f, decide_sat(Not(f), normalizer))


def entails(f, g, normalizer=None):
    """Does every model of ``f`` satisfy ``g``?"""
    return decide_valid(Implies(f, g), normalizer)
