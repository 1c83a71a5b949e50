"""Pure numpy execution backend.

Mirrors the compiled core in behaviour exactly; used when the extension is
unavailable and as the reference in backend-parity tests. Operates on the
flat op arrays produced by :meth:`MacroProgram.compiled`.
"""

from __future__ import annotations

import numpy as np

_ARITY = np.array([0, 0, 1, 2, 2, 2, 2, 2, 3], dtype=np.int32)

NAME = "python"


def _validate_bundle(o, n_rows, n_cols, col_group, row_group):
    orient = o[0, 0]
    if np.any(o[:, 0] != orient):
        return "mixed orientations"
    n_lines = n_cols if orient == 0 else n_rows
    n_span = n_rows if orient == 0 else n_cols
    group = col_group if orient == 0 else row_group
    k = len(o)
    gmin = np.empty(k, dtype=np.int64)
    gmax = np.empty(k, dtype=np.int64)
    for i in range(k):
        gate, nin = o[i, 1], o[i, 2]
        if nin != _ARITY[gate]:
            return f"op {i}: bad arity"
        out = o[i, 6]
        lines = [o[i, 3 + j] for j in range(nin)] + [out]
        for line in lines:
            if not 0 <= line < n_lines:
                return f"op {i}: line outside array"
        lo, hi = o[i, 7], o[i, 8]
        if not 0 <= lo < hi <= n_span:
            return f"op {i}: invalid span"
        for j in range(nin):
            if o[i, 3 + j] == out:
                return f"op {i}: in-place gate"
        gs = group[lines]
        gmin[i] = gs.min()
        gmax[i] = gs.max()
    order = np.lexsort((gmax, gmin))
    for a in range(k):
        i = order[a]
        for b in range(a + 1, k):
            j = order[b]
            if gmin[j] > gmax[i]:
                break
            same = (
                o[i, 1] == o[j, 1] and o[i, 2] == o[j, 2]
                and o[i, 3] == o[j, 3] and o[i, 4] == o[j, 4]
                and o[i, 5] == o[j, 5] and o[i, 6] == o[j, 6]
            )
            if same and (o[i, 8] <= o[j, 7] or o[j, 8] <= o[i, 7]):
                continue
            return "conflict"
    return None


def _apply_bundle(cells, o):
    staged = []
    for i in range(len(o)):
        gate = o[i, 1]
        lo, hi = o[i, 7], o[i, 8]
        length = hi - lo
        if o[i, 0] == 0:
            args = [cells[lo:hi, o[i, 3 + j]] for j in range(o[i, 2])]
        else:
            args = [cells[o[i, 3 + j], lo:hi] for j in range(o[i, 2])]
        if gate == 0:
            val = np.zeros(length, dtype=np.uint8)
        elif gate == 1:
            val = np.ones(length, dtype=np.uint8)
        elif gate == 2:
            val = 1 - args[0]
        elif gate == 3:
            val = 1 - (args[0] | args[1])
        elif gate == 4:
            val = args[0] | args[1]
        elif gate == 5:
            val = 1 - (args[0] & args[1])
        elif gate == 6:
            val = args[0] & args[1]
        elif gate == 7:
            val = 1 - (args[0] ^ args[1])
        else:
            val = ((args[0].astype(np.int8) + args[1] + args[2]) <= 1).astype(np.uint8)
        staged.append(val)
    for i in range(len(o)):
        lo, hi = o[i, 7], o[i, 8]
        if o[i, 0] == 0:
            cells[lo:hi, o[i, 6]] = staged[i]
        else:
            cells[o[i, 6], lo:hi] = staged[i]


def run_arrays(cells, ops, bptr, col_group, row_group):
    """Validate and execute every bundle; return None or (index, reason)."""
    n_rows, n_cols = cells.shape
    for b in range(len(bptr) - 1):
        o = ops[bptr[b]:bptr[b + 1]]
        reason = _validate_bundle(o, n_rows, n_cols, col_group, row_group)
        if reason is not None:
            return b, reason
        _apply_bundle(cells, o)
    return None
