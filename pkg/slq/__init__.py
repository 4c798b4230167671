"""Decision procedure and proof checker for quantifier-free separation logic."""

__version__ = '0.1-dev'

from .core.decide import decide_sat, decide_valid, entails
from .core.normalize import compute_basis, normalize
from .formula import CoreBasis, free_vars, to_text
from .parser import parse
from .semantics import EnumerationBounds, MemoryState, brute_sat, satisfies
