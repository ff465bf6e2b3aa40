"""
Storage module: graph file ingestion and report persistence.
"""

from shiftcert.storage.graph_files import (
    GraphInput,
    GraphSource,
    ShiftKind,
    build_shift,
    parse_edge_list_text,
    parse_graph,
    parse_matrix_text,
    parse_vector,
    read_matrix,
    write_matrix,
)
from shiftcert.storage.reports import (
    digest_inputs,
    format_float,
    load_report,
    serialize_report,
    write_report,
)

__all__ = [
    'GraphInput',
    'GraphSource',
    'ShiftKind',
    'build_shift',
    'parse_edge_list_text',
    'parse_graph',
    'parse_matrix_text',
    'parse_vector',
    'read_matrix',
    'write_matrix',
    'digest_inputs',
    'format_float',
    'load_report',
    'serialize_report',
    'write_report',
]
