# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled execution core: validate and apply cycle bundles.

Behaviour must stay bit-identical to ``_fallback``; the backend-parity test
runs every kernel on both and compares states and verdicts.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef int[9] ARITY
ARITY[0] = 0; ARITY[1] = 0; ARITY[2] = 1; ARITY[3] = 2; ARITY[4] = 2
ARITY[5] = 2; ARITY[6] = 2; ARITY[7] = 2; ARITY[8] = 3

_REASONS = {
    1: "mixed orientations",
    2: "bad arity",
    3: "line outside array",
    4: "invalid span",
    5: "in-place gate",
    6: "conflict",
}


def reason_text(int code):
    return _REASONS.get(code, "invalid bundle")


cdef inline cnp.uint8_t _gate_eval(int gate, cnp.uint8_t a, cnp.uint8_t b, cnp.uint8_t c) nogil:
    if gate == 0:
        return 0
    if gate == 1:
        return 1
    if gate == 2:
        return 1 - a
    if gate == 3:
        return 1 - (a | b)
    if gate == 4:
        return a | b
    if gate == 5:
        return 1 - (a & b)
    if gate == 6:
        return a & b
    if gate == 7:
        return 1 - (a ^ b)
    return 1 if (a + b + c) <= 1 else 0


def run_arrays(cnp.uint8_t[:, ::1] cells,
               cnp.int32_t[:, ::1] ops,
               cnp.int64_t[::1] bptr,
               cnp.int64_t[::1] col_group,
               cnp.int64_t[::1] row_group):
    """Validate and execute all bundles; return (err_bundle, reason_code).

    err_bundle is -1 on success. On error the state is left as of just
    before the offending bundle.
    """
    cdef Py_ssize_t n_rows = cells.shape[0]
    cdef Py_ssize_t n_cols = cells.shape[1]
    cdef Py_ssize_t n_bundles = bptr.shape[0] - 1
    cdef Py_ssize_t b, s, e, i, j, t, pos
    cdef int orient, gate, nin, out, lo, hi, line
    cdef long gmin_i, gmax_i, g
    cdef int n_lines, n_span
    cdef bint same

    cdef Py_ssize_t max_k = 0
    for b in range(n_bundles):
        if bptr[b + 1] - bptr[b] > max_k:
            max_k = bptr[b + 1] - bptr[b]
    if max_k == 0:
        return -1, 0

    gmin_arr = np.empty(max_k, dtype=np.int64)
    gmax_arr = np.empty(max_k, dtype=np.int64)
    cdef cnp.int64_t[::1] gmin = gmin_arr
    cdef cnp.int64_t[::1] gmax = gmax_arr
    span_max = n_rows if n_rows > n_cols else n_cols
    staged_arr = np.empty((max_k, span_max), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] staged = staged_arr
    cdef cnp.int64_t[::1] group
    cdef cnp.uint8_t a0, a1, a2

    for b in range(n_bundles):
        s = bptr[b]
        e = bptr[b + 1]
        orient = ops[s, 0]
        n_lines = n_cols if orient == 0 else n_rows
        n_span = n_rows if orient == 0 else n_cols
        group = col_group if orient == 0 else row_group
        # validate
        for i in range(s, e):
            if ops[i, 0] != orient:
                return b, 1
            gate = ops[i, 1]
            nin = ops[i, 2]
            if gate < 0 or gate > 8 or nin != ARITY[gate]:
                return b, 2
            out = ops[i, 6]
            if out < 0 or out >= n_lines:
                return b, 3
            lo = ops[i, 7]
            hi = ops[i, 8]
            if lo < 0 or hi <= lo or hi > n_span:
                return b, 4
            gmin_i = group[out]
            gmax_i = gmin_i
            for j in range(nin):
                line = ops[i, 3 + j]
                if line < 0 or line >= n_lines:
                    return b, 3
                if line == out:
                    return b, 5
                g = group[line]
                if g < gmin_i:
                    gmin_i = g
                if g > gmax_i:
                    gmax_i = g
            gmin[i - s] = gmin_i
            gmax[i - s] = gmax_i
        for i in range(s, e):
            for j in range(i + 1, e):
                if gmin[j - s] > gmax[i - s] or gmin[i - s] > gmax[j - s]:
                    continue
                same = (ops[i, 1] == ops[j, 1] and ops[i, 2] == ops[j, 2]
                        and ops[i, 3] == ops[j, 3] and ops[i, 4] == ops[j, 4]
                        and ops[i, 5] == ops[j, 5] and ops[i, 6] == ops[j, 6])
                if same and (ops[i, 8] <= ops[j, 7] or ops[j, 8] <= ops[i, 7]):
                    continue
                return b, 6
        # stage reads, then write (simultaneous-read semantics)
        for i in range(s, e):
            gate = ops[i, 1]
            nin = ops[i, 2]
            lo = ops[i, 7]
            hi = ops[i, 8]
            pos = i - s
            a0 = 0; a1 = 0; a2 = 0
            if orient == 0:
                for t in range(lo, hi):
                    if nin > 0:
                        a0 = cells[t, ops[i, 3]]
                    if nin > 1:
                        a1 = cells[t, ops[i, 4]]
                    if nin > 2:
                        a2 = cells[t, ops[i, 5]]
                    staged[pos, t - lo] = _gate_eval(gate, a0, a1, a2)
            else:
                for t in range(lo, hi):
                    if nin > 0:
                        a0 = cells[ops[i, 3], t]
                    if nin > 1:
                        a1 = cells[ops[i, 4], t]
                    if nin > 2:
                        a2 = cells[ops[i, 5], t]
                    staged[pos, t - lo] = _gate_eval(gate, a0, a1, a2)
        for i in range(s, e):
            out = ops[i, 6]
            lo = ops[i, 7]
            hi = ops[i, 8]
            pos = i - s
            if orient == 0:
                for t in range(lo, hi):
                    cells[t, out] = staged[pos, t - lo]
            else:
                for t in range(lo, hi):
                    cells[out, t] = staged[pos, t - lo]
    return -1, 0
