from ..exceptions import BindingError
from ..formula import to_text
from ..hilbert.checker import Checker, check_derivation
from ..hilbert.fixtures import builtin, derivation_names, describe
from ..hilbert.proofs import format_proof, load_proof, parse_binding_value
from ..hilbert.schemas import FORMULA, axiom_instance, get_schema, schema_names
from ..hilbert.templates import template_text
from ..parser import parse
from . import Command


class CheckProofCommand(Command):

    """Check a derivation, reporting the first step which is not justified."""

    name = 'check-proof'
    help = 'check a Hilbert-style derivation'

    def add_arguments(self, parser):
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument('path', nargs='?', help='Proof file.')
        group.add_argument('--builtin', metavar='NAME', help='Check a builtin derivation instead.')
        super(CheckProofCommand, self).add_arguments(parser)

    def main(self, args):
        if args.builtin:
            d = builtin(args.builtin)
        else:
            d = load_proof(args.path)
        report = check_derivation(d)
        record = {
            'verdict': 'OK' if report else 'FAIL',
            'conclusion': to_text(d.conclusion),
            'report': report.to_record(),
        }
        self.emit(record, [str(report)])
        return 0 if report else 1


def parse_instance_bindings(schema, pairs):
    bindings = {}
    for pair in pairs:
        name, eq, value = pair.partition('=')
        if not eq:
            raise BindingError('binding %r has no "="' % pair)
        name = name.strip()
        if schema.kinds.get(name) == FORMULA:
            bindings[name] = parse(value)
        else:
            bindings[name] = parse_binding_value(value)
    return bindings


class SchemasCommand(Command):

    """List the axiom schemas, or print one instance."""

    name = 'schemas'
    help = 'list axiom schemas'

    def add_arguments(self, parser):
        parser.add_argument('--instance', metavar='NAME', help='Schema name or code to instantiate.')
        parser.add_argument('bindings', nargs='*', metavar='KEY=VALUE',
            help='Bindings for --instance; formulas as text, naturals, variables, or {x,y} sets.',
        )
        super(SchemasCommand, self).add_arguments(parser)

    def main(self, args):

        if args.instance:
            schema = get_schema(args.instance)
            f = axiom_instance(schema.name, parse_instance_bindings(schema, args.bindings))
            self.emit({'verdict': 'OK', 'schema': schema.name, 'instance': to_text(f)}, [to_text(f)])
            return 0

        if args.bindings:
            raise BindingError('bindings need --instance')

        rows = []
        lines = []
        for name in schema_names():
            schema = get_schema(name)
            rows.append({
                'name': schema.name,
                'code': schema.code,
                'params': [list(p) for p in schema.params],
                'template': template_text(schema.template),
                'intermediate': schema.intermediate,
                'doc': schema.doc,
            })
            line = '%-14s %-4s %s' % (schema.name, schema.code, template_text(schema.template))
            if schema.doc:
                line += '  (%s)' % schema.doc
            lines.append(line)
        self.emit({'verdict': 'OK', 'schemas': rows}, lines)
        return 0


class DerivationsCommand(Command):

    """List and check the builtin derivations."""

    name = 'derivations'
    help = 'list and check the builtin derivations'

    def add_arguments(self, parser):
        parser.add_argument('--show', metavar='NAME', help='Print one derivation.')
        super(DerivationsCommand, self).add_arguments(parser)

    def main(self, args):

        if args.show:
            d = builtin(args.show)
            text = format_proof(d)
            self.emit({
                'verdict': 'OK',
                'name': args.show,
                'description': describe(args.show),
                'proof': text,
            }, ['# ' + describe(args.show), text.rstrip('\n')])
            return 0

        checker = Checker()
        rows = []
        lines = []
        for name in derivation_names():
            d = builtin(name)
            report = checker.check(d)
            rows.append(dict(report.to_record(), name=name, conclusion=to_text(d.conclusion)))
            lines.append('%-16s %-24s %s' % (name, report, describe(name)))

        failed = [r for r in rows if not r['ok']]
        record = {'verdict': 'FAIL' if failed else 'OK', 'derivations': rows}
        self.emit(record, lines)
        return 1 if failed else 0
