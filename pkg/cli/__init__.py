"""
CLI Package
Subcommand handlers and the machine-readable records they emit
"""

from .commands import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    SWEEP_COLUMNS,
    cmd_config,
    cmd_construct,
    cmd_count,
    cmd_search,
    cmd_sweep,
    cmd_verify,
)
from .records import (
    Checkpoint,
    RecordWriter,
    format_coloring,
    parse_coloring,
    read_coloring,
    resolve_coloring,
    summary_record,
    write_coloring,
)

__version__ = "1.0.0"
__all__ = [
    "EXIT_FAILED",
    "EXIT_OK",
    "EXIT_USAGE",
    "SWEEP_COLUMNS",
    "Checkpoint",
    "RecordWriter",
    "cmd_config",
    "cmd_construct",
    "cmd_count",
    "cmd_search",
    "cmd_sweep",
    "cmd_verify",
    "format_coloring",
    "parse_coloring",
    "read_coloring",
    "resolve_coloring",
    "summary_record",
    "write_coloring",
]
