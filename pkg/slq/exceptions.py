

class SLQError(Exception):
    '''Base for everything this package raises on purpose.'''


class FormulaSyntaxError(SLQError, ValueError):
    '''Formula text that does not match the grammar.'''

    def __init__(self, message, line=None, column=None, pos=None):
        super(FormulaSyntaxError, self).__init__(message)
        self.message = message
        self.line = line
        self.column = column
        self.pos = pos

    def __str__(self):
        if self.line is None:
            return self.message
        return '%s (line %d, column %d)' % (self.message, self.line, self.column)


class MissingVariable(SLQError, KeyError):
    '''The store of a memory state does not cover a variable we need.'''

    def __str__(self):
        return 'store has no location for %r' % (self.args[0], )


class BoundsError(SLQError, ValueError):
    '''Enumeration bounds that break their own invariants.'''


class BasisViolation(SLQError, ValueError):
    '''A literal or core formula outside of Core(X, alpha).'''


class PreconditionViolation(SLQError, ValueError):
    '''Core type operations called on unsatisfiable or mismatched types.'''


class WitnessMismatch(SLQError, AssertionError):
    '''A constructed model did not satisfy the formula it was built for.'''


class UnknownSchema(SLQError, KeyError):
    '''No axiom schema by that name or code.'''


class BindingError(SLQError, TypeError):
    '''Schema bindings of the wrong kind, or missing.'''


class SideConditionFailed(SLQError, ValueError):
    '''Schema bindings that violate the schema's side condition.'''


class ProofFormatError(SLQError, ValueError):
    '''Proof text that cannot be read.'''

    def __init__(self, message, line=None):
        super(ProofFormatError, self).__init__(message)
        self.message = message
        self.line = line

    def __str__(self):
        if self.line is None:
            return self.message
        return 'line %d: %s' % (self.line, self.message)


class UnknownDerivation(SLQError, KeyError):
    '''No builtin derivation by that name.'''


class ConfigError(SLQError, ValueError):
    pass
