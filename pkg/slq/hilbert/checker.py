import logging
from dataclasses import dataclass

from ..exceptions import SLQError, UnknownDerivation
from ..formula import Iff, Implies, Star, Wand, canonical_ac, expand_shortcuts, to_text
from .proofs import Justification
from .propositional import countervaluation
from .schemas import format_bindings, get_schema


log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckReport(object):

    ok: bool
    failing_step: int = None
    reason: str = ''
    steps: int = 0

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return 'ok (%d steps)' % self.steps
        return 'step %d: %s' % (self.failing_step, self.reason)

    def to_record(self):
        return {
            'ok': self.ok,
            'failing_step': self.failing_step,
            'reason': self.reason,
            'steps': self.steps,
        }


class StepError(SLQError):
    pass


def _implication(f, what):
    if not isinstance(f, Implies):
        raise StepError('%s must be an implication; got %s' % (what, to_text(f)))
    return f.left, f.right


def _expect(found, wanted, what):
    if found != wanted:
        raise StepError('%s: expected %s, found %s' % (what, to_text(wanted), to_text(found)))


class Checker(object):

    """Checks derivations, resolving ``lemma`` steps against a library.

    :param library: Callable from a derivation name to a
        :class:`~slq.hilbert.proofs.Derivation`; defaults to the builtins.

    """

    def __init__(self, library=None):
        if library is None:
            from .fixtures import builtin
            library = builtin
        self.library = library
        self._lemmas = {}
        self._active = []

    def check_step(self, d, n):
        """Raise :class:`StepError` unless step ``n`` (1-based) of ``d`` is justified."""

        step = d.step(n)
        just = step.justification
        f = step.formula

        for i in just.premises:
            if not 1 <= i < n:
                raise StepError('premise %d does not precede step %d' % (i, n))
        premises = [d.step(i).formula for i in just.premises]

        method = getattr(self, '_check_' + just.kind.replace('-', '_'))
        method(f, premises, just)

    def _check_axiom(self, f, premises, just):
        schema = get_schema(just.name)
        if schema.match(f, just.bindings) is None:
            extra = ' with %s' % format_bindings(just.bindings) if just.bindings else ''
            raise StepError('not an instance of %s%s' % (schema.name, extra))

    def _check_lemma(self, f, premises, just):
        conclusion = self.lemma(just.name)
        _expect(f, conclusion, 'lemma %s' % just.name)

    def _check_mp(self, f, premises, just):
        a, b = premises
        for imp, ante in ((a, b), (b, a)):
            if isinstance(imp, Implies) and imp.left == ante and imp.right == f:
                return
        raise StepError('modus ponens needs "A -> %s" and "A" as premises' % to_text(f))

    def _check_star_intro(self, f, premises, just):
        phi, chi = _implication(premises[0], 'premise')
        left, right = _implication(f, 'step')
        if not (isinstance(left, Star) and isinstance(right, Star)):
            raise StepError('star-intro concludes "A * C -> B * C"')
        _expect(left.left, phi, 'star-intro left operand')
        _expect(right.left, chi, 'star-intro right operand')
        _expect(right.right, left.right, 'star-intro frame')

    def _check_star_ilr(self, f, premises, just):
        # Derived: replayed through star-intro, Commute and pc on every use.
        a, a2 = _implication(premises[0], 'first premise')
        b, b2 = _implication(premises[1], 'second premise')
        _expect(f, Implies(Star(a, b), Star(a2, b2)), 'star-ilr')
        left = Implies(Star(a, b), Star(a2, b))
        right = Implies(Star(b, a2), Star(b2, a2))
        swap_in = Iff(Star(a2, b), Star(b, a2))
        swap_out = Iff(Star(b2, a2), Star(a2, b2))
        commute = Justification('axiom', name='Commute')
        self._check_star_intro(left, premises[:1], just)
        self._check_star_intro(right, premises[1:], just)
        self._check_axiom(swap_in, (), commute)
        self._check_axiom(swap_out, (), commute)
        if countervaluation([left, swap_in, right, swap_out], f) is not None:
            raise StepError('star-ilr does not close under pc')

    def _check_star_adj(self, f, premises, just):
        ante, chi = _implication(premises[0], 'premise')
        if not isinstance(ante, Star):
            raise StepError('star-adj needs a premise "A * B -> C"')
        _expect(f, Implies(ante.left, Wand(ante.right, chi)), 'star-adj')

    def _check_wand_adj(self, f, premises, just):
        phi, wand = _implication(premises[0], 'premise')
        if not isinstance(wand, Wand):
            raise StepError('wand-adj needs a premise "A -> (B -* C)"')
        _expect(f, Implies(Star(phi, wand.left), wand.right), 'wand-adj')

    def _check_pc(self, f, premises, just):
        valuation = countervaluation(premises, f)
        if valuation is not None:
            false = [to_text(a) for a, v in valuation.items() if not v]
            true = [to_text(a) for a, v in valuation.items() if v]
            raise StepError('not a propositional consequence of steps %s (counterexample: true {%s}, false {%s})' % (
                ', '.join(map(str, just.premises)) or 'none', '; '.join(true), '; '.join(false)))

    def _check_def(self, f, premises, just):
        if canonical_ac(expand_shortcuts(f)) != canonical_ac(expand_shortcuts(premises[0])):
            raise StepError('does not unfold to step %d' % just.premises[0])

    def lemma(self, name):
        """The conclusion of the named derivation, which must itself check."""
        try:
            return self._lemmas[name]
        except KeyError:
            pass
        if name in self._active:
            raise StepError('circular lemma: %s' % ' -> '.join(self._active + [name]))
        try:
            d = self.library(name)
        except UnknownDerivation:
            raise StepError('unknown lemma %r' % name)
        self._active.append(name)
        try:
            report = self.check(d)
        finally:
            self._active.pop()
        if not report:
            raise StepError('lemma %s does not check (%s)' % (name, report))
        self._lemmas[name] = d.conclusion
        return d.conclusion

    def check(self, d):
        for n in range(1, len(d) + 1):
            try:
                self.check_step(d, n)
            except StepError as e:
                log.info('%s fails at step %d: %s', d.name or 'derivation', n, e)
                return CheckReport(False, n, str(e), len(d))
            except SLQError as e:
                log.info('%s fails at step %d: %s', d.name or 'derivation', n, e)
                return CheckReport(False, n, '%s: %s' % (e.__class__.__name__, e), len(d))
        return CheckReport(True, None, '', len(d))


def check_step(d, n, library=None):
    """Raise :class:`StepError` unless step ``n`` of ``d`` is justified."""
    Checker(library).check_step(d, n)


def check_derivation(d, library=None):
    """Check every step of ``d`` in order; the report names the first failure."""
    return Checker(library).check(d)
