"""Cycle-accurate model of a partitioned memristive crossbar running stateful logic.

The machine is a rows x cols grid of single-bit cells. One cycle executes a
validated bundle of gate operations. A gate is either column-wise (operands
are column indices, the gate repeats in every row of its span) or row-wise
(operands are row indices, the gate repeats in every column of its span).
Isolating transistors split the array into column groups and row groups;
which groups an operation touches decides what may share a cycle.

Legality rules enforced by :func:`validate_cycle`:

* all ops in a bundle have the same orientation;
* each op claims the contiguous range of partition groups covered by its
  operand lines, including any groups lying between them;
* two ops may overlap in claimed groups only when they are the same line
  activation (identical gate, input lines and output line) replicated over
  disjoint spans, which a single driver pulse realises with the free
  transistor masking;
* no two ops write the same cell.

Execution uses simultaneous-read semantics: every op reads the pre-cycle
cell values. Host reads and writes cost zero cycles. Transistor
reconfiguration is free and derived from the bundle itself.

A state instance is single-threaded; distinct instances are independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigError, ConflictError, XbarError


class Gate(IntEnum):
    """One-cycle stateful gates, output conditioning folded into the cycle."""

    INIT0 = 0
    INIT1 = 1
    NOT = 2
    NOR2 = 3
    OR2 = 4
    NAND2 = 5
    AND2 = 6
    XNOR2 = 7
    MIN3 = 8


GATE_ARITY = {
    Gate.INIT0: 0,
    Gate.INIT1: 0,
    Gate.NOT: 1,
    Gate.NOR2: 2,
    Gate.OR2: 2,
    Gate.NAND2: 2,
    Gate.AND2: 2,
    Gate.XNOR2: 2,
    Gate.MIN3: 3,
}


class Orientation(IntEnum):
    COLUMN = 0  # operands are columns, span is a row range
    ROW = 1     # operands are rows, span is a column range


@dataclass(frozen=True)
class MicroOp:
    """A single gate replicated over a span of rows (COLUMN) or columns (ROW).

    :param orientation: COLUMN or ROW
    :param gate: gate kind
    :param inputs: operand line indices (columns for COLUMN ops, rows for ROW)
    :param output: output line index
    :param span: half-open [lo, hi) range on the other axis
    """

    orientation: Orientation
    gate: Gate
    inputs: tuple[int, ...]
    output: int
    span: tuple[int, int]


@dataclass(frozen=True)
class CycleBundle:
    """A set of MicroOps claimed to execute in one cycle."""

    ops: tuple[MicroOp, ...]

    def __len__(self):
        return len(self.ops)


class MacroProgram:
    """An ordered sequence of cycle bundles with per-bundle phase labels.

    The length of a program is its latency in cycles. Emitters are pure:
    building a program touches no machine state.
    """

    __slots__ = ("bundles", "phases", "_compiled")

    def __init__(self):
        self.bundles: list[CycleBundle] = []
        self.phases: list[str] = []
        self._compiled = None

    def emit(self, ops: Iterable[MicroOp], phase: str) -> None:
        ops = tuple(ops)
        if not ops:
            raise XbarError("refusing to emit an empty bundle")
        self.bundles.append(CycleBundle(ops))
        self.phases.append(phase)
        self._compiled = None

    def extend(self, other: "MacroProgram", phase: str | None = None) -> None:
        self.bundles.extend(other.bundles)
        if phase is None:
            self.phases.extend(other.phases)
        else:
            self.phases.extend([phase] * len(other.bundles))
        self._compiled = None

    def __len__(self):
        return len(self.bundles)

    def compiled(self):
        """Pack the program into flat int32 arrays for the execution backends.

        Layout per op row: orient, gate, nin, i0, i1, i2, out, span_lo, span_hi.
        """
        if self._compiled is None:
            total = sum(len(b) for b in self.bundles)
            ops = np.zeros((total, 9), dtype=np.int32)
            bptr = np.zeros(len(self.bundles) + 1, dtype=np.int64)
            pos = 0
            for idx, bundle in enumerate(self.bundles):
                for op in bundle.ops:
                    row = ops[pos]
                    row[0] = int(op.orientation)
                    row[1] = int(op.gate)
                    row[2] = len(op.inputs)
                    for j, line in enumerate(op.inputs):
                        row[3 + j] = line
                    row[6] = op.output
                    row[7], row[8] = op.span
                    pos += 1
                bptr[idx + 1] = pos
            self._compiled = (ops, bptr)
        return self._compiled


@dataclass
class PartitionTopology:
    """Column and row group structure of the array.

    Boundaries are the strictly increasing interior cut positions; a cut at
    position b separates line b-1 from line b. Transistors sit on each cut
    and are set per cycle (for free) to whatever the bundle requires.
    """

    rows: int
    cols: int
    row_boundaries: np.ndarray
    col_boundaries: np.ndarray
    row_group: np.ndarray = field(repr=False, default=None)
    col_group: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        for bounds, extent, name in (
            (self.row_boundaries, self.rows, "row"),
            (self.col_boundaries, self.cols, "col"),
        ):
            if len(bounds) and (
                np.any(np.diff(bounds) <= 0) or bounds[0] <= 0 or bounds[-1] >= extent
            ):
                raise ConfigError(f"{name} boundaries must be strictly increasing interior cuts")
        self.row_group = np.searchsorted(self.row_boundaries, np.arange(self.rows), side="right")
        self.col_group = np.searchsorted(self.col_boundaries, np.arange(self.cols), side="right")

    @property
    def p_r(self) -> int:
        return len(self.row_boundaries) + 1

    @property
    def p_c(self) -> int:
        return len(self.col_boundaries) + 1

    @classmethod
    def uniform(cls, rows: int, cols: int, p_r: int, p_c: int) -> "PartitionTopology":
        if rows < 1 or cols < 1:
            raise ConfigError("crossbar must have at least one row and one column")
        if p_r < 1 or rows % p_r:
            raise ConfigError(f"row partition count {p_r} does not divide {rows}")
        if p_c < 1 or cols % p_c:
            raise ConfigError(f"col partition count {p_c} does not divide {cols}")
        rb = np.arange(1, p_r, dtype=np.int64) * (rows // p_r)
        cb = np.arange(1, p_c, dtype=np.int64) * (cols // p_c)
        return cls(rows, cols, rb, cb)


@dataclass
class CrossbarState:
    """The entire machine state: cell grid plus partition topology."""

    topology: PartitionTopology
    cells: np.ndarray

    @property
    def rows(self) -> int:
        return self.topology.rows

    @property
    def cols(self) -> int:
        return self.topology.cols


def new_crossbar(rows: int, cols: int, p_r: int, p_c: int) -> CrossbarState:
    """Create an all-zero crossbar with uniform partitions.

    :raises ConfigError: when a partition count does not divide its extent
    """
    topo = PartitionTopology.uniform(rows, cols, p_r, p_c)
    return CrossbarState(topo, np.zeros((rows, cols), dtype=np.uint8))


def host_write(state: CrossbarState, rows: tuple[int, int], cols: tuple[int, int],
               bits: np.ndarray) -> CrossbarState:
    """Store bits verbatim into a rectangular region. Costs zero cycles."""
    r0, r1 = rows
    c0, c1 = cols
    _check_region(state, r0, r1, c0, c1)
    block = np.asarray(bits, dtype=np.uint8).reshape(r1 - r0, c1 - c0)
    if block.size and (block.max() > 1):
        raise XbarError("host_write expects bits")
    state.cells[r0:r1, c0:c1] = block
    return state


def host_read(state: CrossbarState, rows: tuple[int, int], cols: tuple[int, int]) -> np.ndarray:
    """Return current cell values of a rectangular region. Costs zero cycles."""
    r0, r1 = rows
    c0, c1 = cols
    _check_region(state, r0, r1, c0, c1)
    return state.cells[r0:r1, c0:c1].copy()


def _check_region(state, r0, r1, c0, c1):
    if not (0 <= r0 <= r1 <= state.rows and 0 <= c0 <= c1 <= state.cols):
        raise XbarError(f"region rows [{r0},{r1}) cols [{c0},{c1}) outside array")


@dataclass
class CycleReport:
    """Cycle accounting for one executed program."""

    total_cycles: int
    phase_breakdown: dict[str, int]
    gate_histogram: dict[str, int]

    def phase(self, name: str) -> int:
        return self.phase_breakdown.get(name, 0)


def op_claim(topology: PartitionTopology, op: MicroOp) -> tuple[int, int]:
    """Inclusive [gmin, gmax] partition-group claim of an op.

    Column-wise ops claim column groups, row-wise ops claim row groups; the
    claim covers every group an operand touches plus all groups in between.
    """
    groups = topology.col_group if op.orientation == Orientation.COLUMN else topology.row_group
    lines = op.inputs + (op.output,)
    gs = [int(groups[line]) for line in lines]
    return min(gs), max(gs)


def _check_op(topology: PartitionTopology, op: MicroOp, index: int) -> None:
    n_lines = topology.cols if op.orientation == Orientation.COLUMN else topology.rows
    n_span = topology.rows if op.orientation == Orientation.COLUMN else topology.cols
    if len(op.inputs) != GATE_ARITY[op.gate]:
        raise ConflictError(f"op {index}: {op.gate.name} expects {GATE_ARITY[op.gate]} inputs",
                            op_a=index)
    for line in op.inputs + (op.output,):
        if not 0 <= line < n_lines:
            raise ConflictError(f"op {index}: line {line} outside array", op_a=index)
    lo, hi = op.span
    if not 0 <= lo < hi <= n_span:
        raise ConflictError(f"op {index}: span [{lo},{hi}) invalid", op_a=index)
    if op.output in op.inputs:
        raise ConflictError(f"op {index}: in-place gate (output is an input)", op_a=index)


def _same_activation(a: MicroOp, b: MicroOp) -> bool:
    return a.gate == b.gate and a.inputs == b.inputs and a.output == b.output


def validate_cycle(topology: PartitionTopology, bundle: CycleBundle) -> None:
    """Raise :class:`ConflictError` unless the bundle is a legal single cycle."""
    ops = bundle.ops
    if not ops:
        return
    orient = ops[0].orientation
    for idx, op in enumerate(ops):
        if op.orientation != orient:
            raise ConflictError("column-wise and row-wise ops may not share a cycle",
                                op_a=0, op_b=idx)
        _check_op(topology, op, idx)
    claims = [op_claim(topology, op) for op in ops]
    order = sorted(range(len(ops)), key=lambda i: claims[i])
    for pos in range(len(order)):
        i = order[pos]
        for pos_b in range(pos + 1, len(order)):
            j = order[pos_b]
            if claims[j][0] > claims[i][1]:
                break  # sorted by gmin: no later op can overlap i
            if _same_activation(ops[i], ops[j]):
                a0, a1 = ops[i].span
                b0, b1 = ops[j].span
                if a1 <= b0 or b1 <= a0:
                    continue  # one driver pulse, disjoint masked spans
                raise ConflictError(
                    f"ops {i} and {j} repeat one activation over overlapping spans",
                    op_a=i, op_b=j, group=claims[j][0])
            raise ConflictError(
                f"ops {i} and {j} both claim partition group {claims[j][0]}",
                op_a=i, op_b=j, group=claims[j][0])


def conducting_boundaries(topology: PartitionTopology, bundle: CycleBundle) -> np.ndarray:
    """Interior cuts that must conduct this cycle (free reconfiguration)."""
    if not bundle.ops:
        return np.zeros(0, dtype=np.int64)
    orient = bundle.ops[0].orientation
    bounds = topology.col_boundaries if orient == Orientation.COLUMN else topology.row_boundaries
    conduct = set()
    for op in bundle.ops:
        gmin, gmax = op_claim(topology, op)
        conduct.update(range(gmin, gmax))  # cut g separates group g from g+1
    return np.array(sorted(b for g, b in enumerate(bounds) if g in conduct), dtype=np.int64)


def _eval_gate(gate: int, args: list[np.ndarray], length: int) -> np.ndarray:
    if gate == Gate.INIT0:
        return np.zeros(length, dtype=np.uint8)
    if gate == Gate.INIT1:
        return np.ones(length, dtype=np.uint8)
    if gate == Gate.NOT:
        return 1 - args[0]
    if gate == Gate.NOR2:
        return 1 - (args[0] | args[1])
    if gate == Gate.OR2:
        return args[0] | args[1]
    if gate == Gate.NAND2:
        return 1 - (args[0] & args[1])
    if gate == Gate.AND2:
        return args[0] & args[1]
    if gate == Gate.XNOR2:
        return 1 - (args[0] ^ args[1])
    if gate == Gate.MIN3:
        total = args[0].astype(np.uint8) + args[1] + args[2]
        return (total <= 1).astype(np.uint8)
    raise XbarError(f"unknown gate {gate}")


def execute(state: CrossbarState, bundle: CycleBundle) -> CrossbarState:
    """Execute one validated bundle; on a conflict the state is unchanged.

    All ops read pre-cycle values (simultaneous-read semantics).
    """
    validate_cycle(state.topology, bundle)
    staged = []
    cells = state.cells
    for op in bundle.ops:
        lo, hi = op.span
        if op.orientation == Orientation.COLUMN:
            args = [cells[lo:hi, c].copy() for c in op.inputs]
        else:
            args = [cells[r, lo:hi].copy() for r in op.inputs]
        staged.append(_eval_gate(op.gate, args, hi - lo))
    for op, values in zip(bundle.ops, staged):
        lo, hi = op.span
        if op.orientation == Orientation.COLUMN:
            cells[lo:hi, op.output] = values
        else:
            cells[op.output, lo:hi] = values
    return state


def run_program(state: CrossbarState, program: MacroProgram,
                backend: str | None = None) -> tuple[CrossbarState, CycleReport]:
    """Execute a program bundle by bundle and account cycles.

    Every bundle is validated against the topology before it runs; the first
    invalid bundle aborts with its index and the state rolls back to the
    values it held before that bundle.

    :param backend: "compiled", "python", or None for the default selection
    """
    from . import _backend

    ops, bptr = program.compiled()
    status = _backend.run(state, ops, bptr, backend=backend)
    if status is not None:
        bundle_index, reason = status
        err = _diagnose(state.topology, program, bundle_index, reason)
        err.bundle_index = bundle_index
        raise err
    phase_breakdown: dict[str, int] = {}
    for phase in program.phases:
        phase_breakdown[phase] = phase_breakdown.get(phase, 0) + 1
    hist_raw = np.bincount(ops[:, 1], minlength=len(Gate)) if len(ops) else np.zeros(len(Gate))
    gate_histogram = {g.name: int(hist_raw[g]) for g in Gate if hist_raw[g]}
    report = CycleReport(len(program), phase_breakdown, gate_histogram)
    return state, report


def _diagnose(topology, program, bundle_index, reason):
    """Re-run the reference validator on the offending bundle for a rich error."""
    try:
        validate_cycle(topology, program.bundles[bundle_index])
    except ConflictError as err:
        return err
    return ConflictError(f"bundle {bundle_index}: {reason}")


def dump_state(state: CrossbarState) -> str:
    """Debug dump: '0'/'1' cells, '|' at column cuts, '-' rows at row cuts."""
    topo = state.topology
    col_cuts = set(int(b) for b in topo.col_boundaries)
    row_cuts = set(int(b) for b in topo.row_boundaries)
    width = state.cols + len(col_cuts)
    lines = []
    for r in range(state.rows):
        if r in row_cuts:
            lines.append("-" * width)
        chars = []
        for c in range(state.cols):
            if c in col_cuts:
                chars.append("|")
            chars.append("01"[state.cells[r, c]])
        lines.append("".join(chars))
    return "\n".join(lines)
