import json
import os

from .exceptions import TripleStructureError
from .triple import FractalTriple
from .validation import parse_triple
from .catalog import builtin

BUILTIN_PREFIX = "builtin:"


def triple_to_json(triple: FractalTriple) -> str:
    """
    Canonical text of a triple: keys in the order n_boundary, n_total,
    cells, labels; no padding inside arrays; trailing newline.
    """
    return json.dumps(triple.to_dict(), separators=(",", ":"), ensure_ascii=False) + "\n"


def read_triple_json(path: str):
    """Reads the raw JSON object of a triple file."""
    with open(path, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise TripleStructureError(f"'{path}' is not valid JSON: {e}")


def load_triple(path: str) -> FractalTriple:
    """
    Loads and validates a triple file; 'builtin:<name>' selects a builtin.

    Raises:
        OSError: If the file cannot be read.
        TripleError: If the content is malformed or invalid.
    """
    if path.startswith(BUILTIN_PREFIX):
        return builtin(path[len(BUILTIN_PREFIX):])
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_triple(read_triple_json(path), name=name)


def dump_triple(triple: FractalTriple, path: str):
    """Writes the canonical form of a triple to a file."""
    with open(path, "w", encoding="utf-8") as f:
        f.write(triple_to_json(triple))
