"""Core formulae, core types, and the decision procedure built on them."""

from .boxes import boxseptra, boxstar
from .decide import SatResult, ValidResult, decide_sat, decide_valid, entails
from .normalize import (
    ElimTrace, NormalizedForm, Normalizer, compute_basis, eliminate_septraction,
    eliminate_star, normalize, to_core_type_dnf,
)
from .types import (
    CoreLiteral, CoreType, all_core_types, complete, core_type_model, core_type_sat,
)
