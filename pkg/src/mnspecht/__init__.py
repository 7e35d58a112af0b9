"""Characters of symmetric groups by border strips and by Specht module traces."""

from . import characters, core, specht, tableaux, verify
from .characters import (
    CharacterTable,
    ClassFunction,
    char_table,
    inner_product,
    mn_char,
    pieri_multiplicity,
    restriction_check,
    skew_char,
    skew_char_ncycle,
    skew_char_trace,
    young_multiplicity,
)
from .core import (
    Box,
    Composition,
    ParseError,
    Partition,
    Permutation,
    SkewShape,
    border_strips,
    centralizer_order,
    conjugate,
    dominates,
    from_cycles,
    height,
    is_border_strip,
    partitions_of,
)
from .specht import SpechtVector, TabloidVector, dimension, expand, polytabloid, representing_matrix, straighten
from .tableaux import SkewTableau, parse_tableau
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "characters",
    "core",
    "specht",
    "tableaux",
    "verify",
    "CharacterTable",
    "ClassFunction",
    "char_table",
    "inner_product",
    "mn_char",
    "pieri_multiplicity",
    "restriction_check",
    "skew_char",
    "skew_char_ncycle",
    "skew_char_trace",
    "young_multiplicity",
    "Box",
    "Composition",
    "ParseError",
    "Partition",
    "Permutation",
    "SkewShape",
    "border_strips",
    "centralizer_order",
    "conjugate",
    "dominates",
    "from_cycles",
    "height",
    "is_border_strip",
    "partitions_of",
    "SpechtVector",
    "TabloidVector",
    "dimension",
    "expand",
    "polytabloid",
    "representing_matrix",
    "straighten",
    "SkewTableau",
    "parse_tableau",
    "run_suite",
    "clear_caches",
]


def clear_caches() -> None:
    """Drop every memo (straightening, characters, bases)."""
    specht.clear_caches()
    characters.clear_caches()
