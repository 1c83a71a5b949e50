"""Operand placement: row slices, strided slots, scratch arenas, host I/O.

Full-precision operands are stored one per row in *strided slot* form: bit j
of the value in slot s lives at column ``j * w + s`` where w is the column
partition width. Bit j therefore sits in column group j, which is what lets
the arithmetic microcode drive all N bit positions concurrently. Binary
kernels use per-partition packed chunks instead (stride 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import CrossbarState, PartitionTopology
from .errors import LayoutError


@dataclass(frozen=True)
class RowSlice:
    """A horizontally stored operand: one value per row of ``rows``.

    :param rows: half-open row range holding one value per row
    :param base_col: column of bit 0
    :param width: number of bits
    :param stride: column distance between consecutive bits (1 = packed,
        partition width = strided slot form)
    """

    rows: tuple[int, int]
    base_col: int
    width: int
    stride: int = 1

    def col(self, j: int) -> int:
        return self.base_col + j * self.stride

    def cols(self) -> list[int]:
        return [self.col(j) for j in range(self.width)]

    def overlaps(self, other: "RowSlice") -> bool:
        if self.rows[1] <= other.rows[0] or other.rows[1] <= self.rows[0]:
            return False
        return bool(set(self.cols()) & set(other.cols()))


def partition_width(topo: PartitionTopology) -> int:
    if topo.p_c < 1 or topo.cols % topo.p_c:
        raise LayoutError("strided layout needs uniform column partitions")
    return topo.cols // topo.p_c


def lane_cell(topo: PartitionTopology, lane: int, offset: int) -> int:
    """Column index of cell ``offset`` inside column partition ``lane``."""
    w = partition_width(topo)
    if not (0 <= lane < topo.p_c and 0 <= offset < w):
        raise LayoutError(f"lane cell ({lane}, {offset}) outside array")
    return lane * w + offset


def slot_slice(topo: PartitionTopology, rows: tuple[int, int], slot: int, width: int) -> RowSlice:
    """Strided slot ``slot``: bit j in column group j at offset ``slot``."""
    w = partition_width(topo)
    if not 0 <= slot < w:
        raise LayoutError(f"slot {slot} exceeds partition width {w}")
    if width > topo.p_c:
        raise LayoutError(f"width {width} exceeds {topo.p_c} column groups")
    return RowSlice(rows, slot, width, w)


class SlotArena:
    """Allocator over the strided slot offsets of one row band."""

    def __init__(self, topo: PartitionTopology, reserved: int = 0):
        self._free = list(range(reserved, partition_width(topo)))

    def malloc(self, count: int = 1):
        if count > len(self._free):
            raise LayoutError("slot budget exceeded")
        taken, self._free = self._free[:count], self._free[count:]
        return taken[0] if count == 1 else taken

    def free(self, slots):
        if isinstance(slots, int):
            slots = [slots]
        self._free = sorted(set(self._free) | set(slots))

    def remaining(self) -> int:
        return len(self._free)


def write_slot_ints(state: CrossbarState, rows: tuple[int, int], slot: int,
                    values, N: int) -> None:
    """Host-store one N-bit integer per row into a strided slot (zero cycles)."""
    sl = slot_slice(state.topology, rows, slot, N)
    vals = np.asarray(values, dtype=np.uint64)
    if len(vals) != rows[1] - rows[0]:
        raise LayoutError("one value per row required")
    r = np.arange(rows[0], rows[1])
    for j in range(N):
        state.cells[r, sl.col(j)] = (vals >> np.uint64(j)) & np.uint64(1)


def read_slot_ints(state: CrossbarState, rows: tuple[int, int], slot: int, N: int) -> np.ndarray:
    sl = slot_slice(state.topology, rows, slot, N)
    r = np.arange(rows[0], rows[1])
    out = np.zeros(rows[1] - rows[0], dtype=np.uint64)
    for j in range(N):
        out |= state.cells[r, sl.col(j)].astype(np.uint64) << np.uint64(j)
    return out


def write_cells(state: CrossbarState, rows, cols, bits) -> None:
    """Host-store bits at scattered (row, column) positions (zero cycles)."""
    state.cells[np.asarray(rows), np.asarray(cols)] = np.asarray(bits, dtype=np.uint8)


def read_cells(state: CrossbarState, rows, cols) -> np.ndarray:
    return state.cells[np.asarray(rows), np.asarray(cols)].copy()
