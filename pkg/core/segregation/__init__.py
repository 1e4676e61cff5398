from .flows import (
    TABLE_COLUMNS,
    SegregationTable,
    build_flow_table,
    classify_segregated,
    conditional_table,
    null_expected,
)

__all__ = [
    "TABLE_COLUMNS",
    "SegregationTable",
    "build_flow_table",
    "classify_segregated",
    "conditional_table",
    "null_expected",
]
