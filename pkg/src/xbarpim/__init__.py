"""In-crossbar stateful-logic simulator and matrix kernel library.

A cycle-accurate model of a partitioned memristive crossbar, microcode
emitters for bit-level arithmetic, balanced matrix-vector multiplication,
binary matrix-vector multiplication with a partition popcount tree, and
input-parallel 2D convolution, all verified against host oracles.
"""

from .engine import (
    CrossbarState,
    CycleBundle,
    CycleReport,
    Gate,
    MacroProgram,
    MicroOp,
    Orientation,
    PartitionTopology,
    dump_state,
    execute,
    host_read,
    host_write,
    new_crossbar,
    run_program,
    validate_cycle,
)
from .errors import ConfigError, ConflictError, DimensionError, LayoutError, XbarError

__version__ = "1.0.0"

__all__ = [
    "CrossbarState", "CycleBundle", "CycleReport", "Gate", "MacroProgram",
    "MicroOp", "Orientation", "PartitionTopology", "dump_state", "execute",
    "host_read", "host_write", "new_crossbar", "run_program", "validate_cycle",
    "ConfigError", "ConflictError", "DimensionError", "LayoutError", "XbarError",
    "__version__",
]
