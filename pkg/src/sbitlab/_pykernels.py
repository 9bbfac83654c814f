"""Pure-Python (numpy) implementations of the sweep kernels.

Same signatures as the compiled ``_ckernels`` module; used whenever the
extension is unavailable or ``SBITLAB_KERNELS=python`` is set.
"""

from __future__ import annotations

import numpy as np


def _add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.where(a == b, a, np.uint8(2))


def extension_table(basis: np.ndarray, n: int) -> np.ndarray:
    """W-additive extension of a basis table to all of K_n.

    ``basis`` has shape ``(2**n, m)`` in binary order; the result has shape
    ``(3**n, m)`` in ternary (lexicographic) order.  Each axis gets its ``s``
    slice as the sum of its ``0`` and ``1`` slices, one axis at a time.
    """
    basis = np.asarray(basis, dtype=np.uint8)
    m = basis.shape[1]
    t = basis.reshape((2,) * n + (m,))
    for axis in range(n):
        lo = np.take(t, 0, axis=axis)
        hi = np.take(t, 1, axis=axis)
        t = np.concatenate([t, np.expand_dims(_add(lo, hi), axis)], axis=axis)
    return np.ascontiguousarray(t.reshape(3 ** n, m))


def run_netlist(inputs, n_wires, codes, ins, outs, tables, arity_in, arity_out):
    """Evaluate a table-driven netlist on every row of ``inputs``.

    Wire slots 0, 1, 2 hold the constants ``0``, ``1``, ``s``; the circuit
    inputs follow.  Returns the value of every wire, shape ``(N, n_wires)``.
    """
    inputs = np.asarray(inputs, dtype=np.uint8)
    N, n_in = inputs.shape
    v = np.zeros((n_wires, N), dtype=np.uint8)
    v[1] = 1
    v[2] = 2
    v[3:3 + n_in] = inputs.T
    for k in range(len(codes)):
        g = codes[k]
        idx = np.zeros(N, dtype=np.intp)
        for j in range(arity_in[g]):
            idx = idx * 3 + v[ins[k, j]]
        for j in range(arity_out[g]):
            v[outs[k, j]] = tables[g, idx, j]
    return np.ascontiguousarray(v.T)
