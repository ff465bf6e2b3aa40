"""
Command-line surface: argument parsing, report emission and the worked-example reproduction.
"""

from shiftcert.cli.app import build_parser, export_dot, main, run
from shiftcert.cli.reproduction import ItemResult, format_results, run_reproduction

__all__ = [
    'build_parser',
    'export_dot',
    'main',
    'run',
    'ItemResult',
    'format_results',
    'run_reproduction',
]
