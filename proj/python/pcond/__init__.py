"""Exact character-theoretic checks: conductors, generalised decomposition
numbers, blocks and perfect isometries."""

from ._pcond import (
    CycloNum,
    Dataset,
    InvariantError,
    ParseError,
    SchemaError,
    conductor,
    load_dataset,
    parse_cyclo,
    run,
    search_perfect_isometries,
)

__all__ = [
    "CycloNum",
    "Dataset",
    "InvariantError",
    "ParseError",
    "SchemaError",
    "conductor",
    "load_dataset",
    "parse_cyclo",
    "run",
    "search_perfect_isometries",
]
