"""Derivations and their text format.

One step per line::

    <n>. <formula> ; <justification>

where the justification is one of ``axiom NAME`` (optionally with bindings,
``axiom SizeNeg[b1=1,b2=2]``), ``mp i j``, ``star-intro i``, ``star-adj i``,
``wand-adj i``, ``star-ilr i j``, ``pc i j ...``, ``def i`` or
``lemma NAME``. Steps are numbered from 1 without gaps. ``#`` starts a
comment.

"""

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Tuple

from ..exceptions import FormulaSyntaxError, ProofFormatError
from ..formula import Formula, to_text
from ..parser import parse
from .schemas import format_bindings


log = logging.getLogger(__name__)


#: Justification kinds, and how many premises each takes (None for any number).
RULES = {
    'axiom': 0,
    'lemma': 0,
    'mp': 2,
    'star-intro': 1,
    'star-adj': 1,
    'wand-adj': 1,
    'star-ilr': 2,
    'def': 1,
    'pc': None,
}


@dataclass(frozen=True)
class Justification(object):

    kind: str
    premises: Tuple[int, ...] = ()
    #: Schema for ``axiom``, derivation for ``lemma``.
    name: str = None
    bindings: Dict[str, object] = field(default_factory=dict, compare=False, hash=False)

    def __str__(self):
        if self.kind == 'axiom':
            return 'axiom %s%s' % (self.name, format_bindings(self.bindings) if self.bindings else '')
        if self.kind == 'lemma':
            return 'lemma %s' % self.name
        return ' '.join([self.kind] + [str(i) for i in self.premises])


@dataclass(frozen=True)
class Step(object):

    formula: Formula
    justification: Justification

    def __str__(self):
        return '%s ; %s' % (to_text(self.formula), self.justification)


class Derivation(object):

    """An ordered list of :class:`Step`; step numbers start at 1."""

    def __init__(self, steps, name=None):
        self.steps = list(steps)
        self.name = name

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __repr__(self):
        return '<Derivation %s of %d steps>' % (self.name or '(anonymous)', len(self.steps))

    def step(self, n):
        return self.steps[n - 1]

    @property
    def conclusion(self):
        return self.steps[-1].formula if self.steps else None

    def replace(self, n, formula):
        """A copy with the formula of step ``n`` swapped out."""
        steps = list(self.steps)
        steps[n - 1] = Step(formula, steps[n - 1].justification)
        return Derivation(steps, self.name)


_line_re = re.compile(r'^\s*(\d+)\s*\.\s*(.+?)\s*;\s*(.+?)\s*$')
_axiom_re = re.compile(r'^axiom\s+([A-Za-z][\w-]*)\s*(?:\[(.*)\])?$')
_lemma_re = re.compile(r'^lemma\s+([\w-]+)$')
_rule_re = re.compile(r'^([a-z-]+)((?:\s+\d+)*)$')


def parse_binding_value(text):
    """``2`` is a natural, ``{x,y}`` a variable set, anything else a variable."""
    text = text.strip()
    if text.startswith('{') and text.endswith('}'):
        return tuple(v.strip() for v in text[1:-1].split(',') if v.strip())
    if text.isdigit():
        return int(text)
    return text


def parse_bindings(text):
    out = {}
    # Split on commas outside of braces.
    for part in re.findall(r'[^,{}]+(?:\{[^}]*\})?', text or ''):
        part = part.strip(' ,')
        if not part:
            continue
        name, eq, value = part.partition('=')
        if not eq:
            raise ValueError('binding %r has no "="' % part)
        out[name.strip()] = parse_binding_value(value)
    return out


def parse_justification(text):

    text = ' '.join(text.split())

    m = _axiom_re.match(text)
    if m:
        return Justification('axiom', name=m.group(1), bindings=parse_bindings(m.group(2)))

    m = _lemma_re.match(text)
    if m:
        return Justification('lemma', name=m.group(1))

    m = _rule_re.match(text)
    if not m or m.group(1) not in RULES or m.group(1) in ('axiom', 'lemma'):
        raise ValueError('unknown justification %r' % text)
    kind = m.group(1)
    premises = tuple(int(x) for x in m.group(2).split())
    arity = RULES[kind]
    if arity is not None and len(premises) != arity:
        raise ValueError('%s takes %d premise%s; got %d' % (kind, arity, '' if arity == 1 else 's', len(premises)))
    return Justification(kind, premises)


def parse_proof(text, name=None):
    """Parse proof text into a :class:`Derivation`.

    :raises ProofFormatError: with the offending line number.

    """
    steps = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0]
        if not line.strip():
            continue
        m = _line_re.match(line)
        if not m:
            raise ProofFormatError('expected "<n>. <formula> ; <justification>"', lineno)
        number = int(m.group(1))
        if number != len(steps) + 1:
            raise ProofFormatError('step %d out of sequence; expected %d' % (number, len(steps) + 1), lineno)
        try:
            formula = parse(m.group(2))
        except FormulaSyntaxError as e:
            raise ProofFormatError(str(e), lineno)
        try:
            just = parse_justification(m.group(3))
        except ValueError as e:
            raise ProofFormatError(str(e), lineno)
        steps.append(Step(formula, just))
    if not steps:
        raise ProofFormatError('no steps', None)
    return Derivation(steps, name)


def format_proof(d):
    width = len(str(len(d)))
    lines = []
    if d.name:
        lines.append('# %s' % d.name)
    for n, step in enumerate(d, 1):
        lines.append('%*d. %s' % (width, n, step))
    return '\n'.join(lines) + '\n'


def load_proof(path, name=None):
    with open(path, encoding='utf-8') as fh:
        return parse_proof(fh.read(), name)
