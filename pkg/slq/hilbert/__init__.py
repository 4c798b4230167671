from .checker import CheckReport, Checker, StepError, check_derivation, check_step
from .fixtures import builtin, builtin_derivations, derivation_names, describe
from .proofs import Derivation, Justification, Step, format_proof, load_proof, parse_proof
from .schemas import AxiomSchema, axiom_instance, get_schema, schema_names
