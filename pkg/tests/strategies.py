from hypothesis import strategies as st

from slq.formula import (
    EMP, FALSE, TRUE, Alloc, And, Eq, Iff, Implies, Not, Or, PointsTo,
    Septraction, SizeGeq, Star, Wand, connective_count,
)
from slq.semantics import MemoryState


BOOLEAN = (And, Or, Implies, Iff)
SPATIAL = (Star, Wand, Septraction)


def core_atoms(vars_=('x', 'y'), max_k=2):
    sizes = st.builds(SizeGeq, st.integers(0, max_k))
    if not vars_:
        return sizes
    v = st.sampled_from(vars_)
    return st.one_of(
        st.builds(Eq, v, v),
        st.builds(PointsTo, v, v),
        st.builds(Alloc, v),
        sizes,
    )


def atoms(vars_=('x', 'y'), max_k=2):
    return st.one_of(st.sampled_from([EMP, TRUE, FALSE]), core_atoms(vars_, max_k))


def _connectives(binary):
    def extend(children):
        return st.one_of(
            st.builds(Not, children),
            st.builds(lambda cls, a, b: cls(a, b), st.sampled_from(binary), children, children),
        )
    return extend


def formulas(vars_=('x', 'y'), max_k=2, max_leaves=3, spatial=True):
    """Random formulas; ``max_leaves`` bounds the number of atoms."""
    binary = BOOLEAN + SPATIAL if spatial else BOOLEAN
    return st.recursive(atoms(vars_, max_k), _connectives(binary), max_leaves=max_leaves)


def core_combinations(vars_=('x', 'y'), max_k=3, max_leaves=5):
    """Boolean combinations of core formulae."""
    return st.recursive(core_atoms(vars_, max_k), _connectives(BOOLEAN), max_leaves=max_leaves)


def memory_states(vars_=('x', 'y'), locations=4, max_heap=3):
    locs = st.integers(0, locations - 1)
    return st.builds(
        MemoryState,
        st.fixed_dictionaries({v: locs for v in vars_}),
        st.dictionaries(locs, locs, max_size=max_heap),
    )


def oracle_formulas(config):
    """Random formulas shaped by ``ORACLE_VARS``, ``ORACLE_MAX_K`` and ``ORACLE_MAX_LEAVES``."""
    vars_ = ('x', 'y', 'z')[:int(config.ORACLE_VARS)]
    return formulas(vars_, max_k=int(config.ORACLE_MAX_K), max_leaves=int(config.ORACLE_MAX_LEAVES))


def acceptance_formulas(max_connectives=7):
    """Formulas over x, y and z with size indices up to 2."""
    return formulas(('x', 'y', 'z'), max_k=2, max_leaves=max_connectives + 1).filter(
        lambda f: connective_count(f) <= max_connectives)


def pure_formulas(vars_=('x', 'y'), max_leaves=4):
    """Boolean combinations of equalities, which ignore the heap."""
    v = st.sampled_from(vars_)
    return st.recursive(st.builds(Eq, v, v), _connectives(BOOLEAN), max_leaves=max_leaves)
