from .registry import AlgebraEntry, Corpus, CorpusEntry, EndoEntry, ExpectedTable, TableRow
from .reproduce import (
    RowResult,
    RowStatus,
    TableReport,
    quiver_polynomial,
    reproduce_table,
    resolve_endos,
)

__all__ = [
    "AlgebraEntry",
    "Corpus",
    "CorpusEntry",
    "EndoEntry",
    "ExpectedTable",
    "RowResult",
    "RowStatus",
    "TableReport",
    "TableRow",
    "quiver_polynomial",
    "reproduce_table",
    "resolve_endos",
]
