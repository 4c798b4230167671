from ..core.decide import decide_sat
from ..formula import to_text
from ..semantics import EnumerationBounds, brute_sat
from . import Command, add_file_argument


class OracleCommand(Command):

    """Decide satisfiability by enumerating memory states, and compare.

    Bounds default to ones under which the enumeration is exact for the
    formula; ``--max-heap`` and friends override them, at which point the
    answer may only be an approximation.

    """

    name = 'oracle'
    help = 'cross-check against brute-force enumeration'
    args_sections = ['bounds', 'output', 'logging', 'environ']

    def add_arguments(self, parser):
        add_file_argument(parser)
        parser.add_argument('formula', help='Formula text, or a path with -f.')
        super(OracleCommand, self).add_arguments(parser)

    def bounds_for(self, f):
        bounds = EnumerationBounds.for_formula(f)
        if self.config.bounds_overridden():
            bounds = bounds.replace(
                max_heap_size=self.config.MAX_HEAP,
                location_universe=self.config.MAX_LOC,
                wand_extension_budget=self.config.BUDGET,
                fresh_locations=self.config.FRESH,
            )
        return bounds

    def main(self, args):

        f = self.read_formula(args, args.formula)
        bounds = self.bounds_for(f)
        approximate = not bounds.is_exact_for(f)
        if approximate:
            self.log.warning('bounds are below the exactness threshold for this formula; the oracle is approximate')

        state = brute_sat(f, bounds)
        result = decide_sat(f)
        oracle = 'SAT' if state is not None else 'UNSAT'
        agree = oracle == result.verdict

        record = {
            'formula': to_text(f),
            'verdict': 'AGREE' if agree else 'DISAGREE',
            'oracle': oracle,
            'normalizer': result.verdict,
            'witness': state.to_record() if state is not None else None,
            'bounds': bounds.to_record(),
            'approximate': approximate,
            'basis': result.basis.to_record(),
        }
        lines = [
            'oracle: %s' % oracle,
            'normalizer: %s' % result.verdict,
            'agree' if agree else 'DISAGREE',
            'bounds: max_heap=%(max_heap)d max_loc=%(max_loc)d budget=%(budget)d fresh=%(fresh)d' % bounds.to_record() + (
                ' (approximate)' if approximate else ''),
        ]
        if state is not None:
            lines.insert(1, 'witness: %s' % state)
        self.emit(record, lines)
        return 0 if agree else 1
