# eigenform/utils/triples/__init__.py
from .exceptions import TripleError, TripleStructureError, InvalidTripleError, UnknownTripleError
from .triple import FractalTriple, PairIndex
from .validation import ConditionFailure, ValidationReport, validate_triple, parse_triple
from .catalog import BUILTIN_NAMES, builtin
from .io import dump_triple, load_triple, triple_to_json

__all__ = [
    "TripleError", "TripleStructureError", "InvalidTripleError", "UnknownTripleError",
    "FractalTriple", "PairIndex",
    "ConditionFailure", "ValidationReport", "validate_triple", "parse_triple",
    "BUILTIN_NAMES", "builtin",
    "dump_triple", "load_triple", "triple_to_json",
]
