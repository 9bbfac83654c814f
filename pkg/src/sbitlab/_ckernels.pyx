# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled sweep kernels; see ``_pykernels`` for the reference semantics."""

import numpy as np


def extension_table(const unsigned char[:, ::1] basis, int n):
    cdef Py_ssize_t m = basis.shape[1]
    cdef Py_ssize_t nb = basis.shape[0]
    cdef Py_ssize_t total = 1
    cdef int p
    for p in range(n):
        total *= 3
    out = np.empty((total, m), dtype=np.uint8)
    cdef unsigned char[:, ::1] o = out
    cdef unsigned char* po = &o[0, 0]

    # scatter basis rows: binary index b -> ternary index with the same digits
    pos_arr = np.zeros(nb, dtype=np.intp)
    cdef Py_ssize_t[::1] pos = pos_arr
    cdef Py_ssize_t b, j
    for b in range(1, nb):
        pos[b] = 3 * pos[b >> 1] + (b & 1)
    for b in range(nb):
        for j in range(m):
            po[pos[b] * m + j] = basis[b, j]

    # axis by axis, lowest digit first: digit-s rows are the sum of their
    # digit-0 and digit-1 neighbours, which are final by the time we get here
    cdef Py_ssize_t stride = m, block, hi, lo, base, width
    cdef unsigned char x, y
    for p in range(n):
        block = 3 * stride
        width = stride
        for hi in range(0, total * m, block):
            base = hi + 2 * stride
            for lo in range(width):
                x = po[base + lo - 2 * stride]
                y = po[base + lo - stride]
                po[base + lo] = x if x == y else 2
        stride = block
    return out


def run_netlist(const unsigned char[:, ::1] inputs, int n_wires,
                const int[::1] codes, const int[:, ::1] ins, const int[:, ::1] outs,
                const unsigned char[:, :, ::1] tables,
                const int[::1] arity_in, const int[::1] arity_out):
    cdef Py_ssize_t N = inputs.shape[0]
    cdef Py_ssize_t n_in = inputs.shape[1]
    cdef Py_ssize_t K = codes.shape[0]
    # wire-major so each gate streams over contiguous rows
    wires = np.empty((n_wires, N), dtype=np.uint8)
    cdef unsigned char[:, ::1] v = wires
    cdef Py_ssize_t r, k, j
    cdef int g, a_in, a_out, idx
    cdef unsigned char *x0
    cdef unsigned char *x1
    cdef unsigned char *x2
    cdef unsigned char *y0
    cdef unsigned char *y1
    cdef const unsigned char *t
    v[0, :] = 0
    v[1, :] = 1
    v[2, :] = 2
    for r in range(N):
        for j in range(n_in):
            v[3 + j, r] = inputs[r, j]
    for k in range(K):
        g = codes[k]
        a_in = arity_in[g]
        a_out = arity_out[g]
        t = &tables[g, 0, 0]
        x0 = &v[ins[k, 0], 0]
        y0 = &v[outs[k, 0], 0]
        # tables[g] rows are pairs: t[2 * idx + j]
        if a_out == 2:  # FANOUT, the only two-output gate, reads one wire
            y1 = &v[outs[k, 1], 0]
            for r in range(N):
                idx = 2 * x0[r]
                y0[r] = t[idx]
                y1[r] = t[idx + 1]
        elif a_in == 1:
            for r in range(N):
                y0[r] = t[2 * x0[r]]
        elif a_in == 2:
            x1 = &v[ins[k, 1], 0]
            for r in range(N):
                y0[r] = t[2 * (3 * x0[r] + x1[r])]
        else:
            x1 = &v[ins[k, 1], 0]
            x2 = &v[ins[k, 2], 0]
            for r in range(N):
                y0[r] = t[2 * (9 * x0[r] + 3 * x1[r] + x2[r])]
    return np.ascontiguousarray(wires.T)
