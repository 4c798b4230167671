import logging

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from .exceptions import FormulaSyntaxError
from . import formula as F


log = logging.getLogger(__name__)


GRAMMAR = r'''

    ?start: iff

    ?iff: imp
        | imp "<->" imp                 -> iff

    ?imp: orx
        | orx "->" imp                  -> implies
        | orx "-*" imp                  -> wand
        | orx "-o" imp                  -> septraction

    ?orx: andx
        | orx "\\/" andx                -> or_

    ?andx: unary
        | andx "/\\" unary              -> and_
        | andx "*" unary                -> star

    ?unary: atom
        | "not" unary                   -> not_

    ?atom: "emp"                        -> emp
        | "true"                        -> top
        | "false"                       -> bot
        | "alloc" "(" IDENT ")"         -> alloc
        | "size" ">=" NAT               -> size_geq
        | "size" "=" NAT                -> size_eq
        | IDENT "=" IDENT               -> eq
        | IDENT "!=" IDENT              -> neq
        | IDENT "|->" IDENT             -> points_to
        | "(" iff ")"

    IDENT: /[a-zA-Z][a-zA-Z0-9_']*/
    NAT: /-?[0-9]+/

    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT

'''


@v_args(inline=True)
class FormulaBuilder(Transformer):

    def emp(self):
        return F.EMP

    def top(self):
        return F.TRUE

    def bot(self):
        return F.FALSE

    def alloc(self, name):
        return F.Alloc(str(name))

    def size_geq(self, k):
        return F.SizeGeq(self._nat(k))

    def size_eq(self, k):
        return F.size_eq(self._nat(k))

    def eq(self, a, b):
        return F.Eq(str(a), str(b))

    def neq(self, a, b):
        return F.neq(str(a), str(b))

    def points_to(self, a, b):
        return F.PointsTo(str(a), str(b))

    def not_(self, body):
        return F.Not(body)

    def and_(self, a, b):
        return F.And(a, b)

    def star(self, a, b):
        return F.Star(a, b)

    def or_(self, a, b):
        return F.Or(a, b)

    def implies(self, a, b):
        return F.Implies(a, b)

    def wand(self, a, b):
        return F.Wand(a, b)

    def septraction(self, a, b):
        return F.Septraction(a, b)

    def iff(self, a, b):
        return F.Iff(a, b)

    def _nat(self, token):
        value = int(token)
        if value < 0:
            raise FormulaSyntaxError('size index must not be negative', token.line, token.column, token.start_pos)
        return value


_parser = Lark(GRAMMAR, parser='lalr', propagate_positions=False, maybe_placeholders=False)


def _describe(e, text):
    if isinstance(e, UnexpectedEOF):
        return 'unexpected end of formula'
    if isinstance(e, UnexpectedCharacters):
        return 'unexpected character %r' % text[e.pos_in_stream:e.pos_in_stream + 1]
    if isinstance(e, UnexpectedToken):
        if e.token.type == '$END':
            return 'unexpected end of formula'
        if e.token == '<->':
            return 'unexpected "<->"; chains of <-> need parentheses'
        return 'unexpected %r' % str(e.token)
    return str(e)


def parse(text):
    """Parse formula text into a :class:`~slq.formula.Formula`.

    :raises FormulaSyntaxError: with the line and column of the problem.

    """
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        raise FormulaSyntaxError(_describe(e, text), e.line, e.column, getattr(e, 'pos_in_stream', None))
    try:
        return FormulaBuilder().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, FormulaSyntaxError):
            raise e.orig_exc
        raise
