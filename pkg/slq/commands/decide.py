from ..core.decide import decide_sat, decide_valid
from ..core.normalize import Normalizer
from ..formula import Implies, to_text
from . import Command, add_file_argument


class DecideCommand(Command):

    def add_arguments(self, parser):
        add_file_argument(parser)
        parser.add_argument('formula', help='Formula text, or a path with -f.')
        super(DecideCommand, self).add_arguments(parser)

    def normalizer(self):
        return Normalizer(trace=bool(self.config.TRACE))

    def trace(self, normalizer, record, lines):
        if normalizer.trace is None:
            return
        record['trace'] = [{
            'operator': e.operator,
            'basis': e.basis.to_record(),
            'left_types': e.left_types,
            'right_types': e.right_types,
            'result_types': e.result_types,
            'elapsed': round(e.elapsed, 6),
        } for e in normalizer.trace]
        for e in normalizer.trace:
            lines.append('trace: %s over %s: %d x %d types -> %d' % (
                e.operator, e.basis, e.left_types, e.right_types, e.result_types))

    def emit_valid(self, result, normalizer):
        cm = result.countermodel
        record = {
            'formula': to_text(result.formula),
            'verdict': result.verdict,
            'countermodel': cm.to_record() if cm else None,
            'basis': result.basis.to_record(),
            'timing': {'elapsed': round(result.elapsed, 6)},
        }
        lines = [result.verdict]
        if cm:
            lines.append('countermodel: %s' % cm)
        self.trace(normalizer, record, lines)
        self.emit(record, lines)
        return 0 if result else 1


class ValidCommand(DecideCommand):

    """Decide validity; an invalid formula comes with a countermodel."""

    name = 'valid'
    help = 'decide validity'

    def main(self, args):
        f = self.read_formula(args, args.formula)
        normalizer = self.normalizer()
        return self.emit_valid(decide_valid(f, normalizer), normalizer)


class EntailCommand(DecideCommand):

    """Decide whether every model of the first formula satisfies the second."""

    name = 'entail'
    help = 'decide entailment'

    def add_arguments(self, parser):
        add_file_argument(parser)
        parser.add_argument('antecedent')
        parser.add_argument('consequent')
        Command.add_arguments(self, parser)

    def main(self, args):
        f = self.read_formula(args, args.antecedent)
        g = self.read_formula(args, args.consequent)
        normalizer = self.normalizer()
        return self.emit_valid(decide_valid(Implies(f, g), normalizer), normalizer)


class SatCommand(DecideCommand):

    """Decide satisfiability; a satisfiable formula comes with a witness."""

    name = 'sat'
    help = 'decide satisfiability'

    def main(self, args):
        f = self.read_formula(args, args.formula)
        normalizer = self.normalizer()
        result = decide_sat(f, normalizer)
        record = {
            'formula': to_text(f),
            'verdict': result.verdict,
            'witness': result.witness.to_record() if result else None,
            'basis': result.basis.to_record(),
            'timing': {'elapsed': round(result.elapsed, 6)},
        }
        lines = [result.verdict]
        if result:
            lines.append('witness: %s' % result.witness)
        self.trace(normalizer, record, lines)
        self.emit(record, lines)
        return 0 if result else 1


class ModelCommand(DecideCommand):

    """Print a memory state satisfying the formula, or "unsat"."""

    name = 'model'
    help = 'print a model'

    def main(self, args):
        f = self.read_formula(args, args.formula)
        normalizer = self.normalizer()
        result = decide_sat(f, normalizer)
        record = {
            'formula': to_text(f),
            'verdict': result.verdict,
            'witness': result.witness.to_record() if result else None,
            'basis': result.basis.to_record(),
            'timing': {'elapsed': round(result.elapsed, 6)},
        }
        lines = [str(result.witness) if result else 'unsat']
        self.trace(normalizer, record, lines)
        self.emit(record, lines)
        return 0 if result else 1


class NormalizeCommand(DecideCommand):

    """Print an equivalent Boolean combination of core formulae, and its basis."""

    name = 'normalize'
    help = 'print the normal form'

    def add_arguments(self, parser):
        parser.add_argument('--cubes', action='store_true',
            help='Also print the normal form as one core type per line.',
        )
        super(NormalizeCommand, self).add_arguments(parser)

    def main(self, args):
        f = self.read_formula(args, args.formula)
        normalizer = self.normalizer()
        g = normalizer.normalize(f)
        record = dict(g.to_record(), formula=to_text(f), verdict='UNSAT' if g.is_false else 'SAT')
        lines = [to_text(g.body), 'basis: %s' % g.basis]
        if args.cubes:
            for cube in g.cubes():
                lines.append('  ' + (' /\\ '.join(str(l) for l in cube) or 'true'))
        self.trace(normalizer, record, lines)
        self.emit(record, lines)
        return 0
