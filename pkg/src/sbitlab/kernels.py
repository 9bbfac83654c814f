"""Kernel backend selection.

The compiled extension is used when it imports; ``SBITLAB_KERNELS=python``
forces the numpy fallback.  ``BACKEND`` names the active one.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if _ckernels is not None and os.environ.get("SBITLAB_KERNELS", "").lower() != "python":
    _impl = _ckernels
    BACKEND = "cython"
else:
    _impl = _pykernels
    BACKEND = "python"


def _resolve(impl):
    """``impl`` may be None (active backend), a backend name, or a module."""
    if impl is None:
        return _impl
    if isinstance(impl, str):
        backends = available_backends()
        if impl not in backends:
            raise ValueError(f"kernel backend {impl!r} is not available")
        return backends[impl]
    return impl


def extension_table(basis, n: int, impl=None) -> np.ndarray:
    basis = np.ascontiguousarray(basis, dtype=np.uint8)
    return _resolve(impl).extension_table(basis, n)


def run_netlist(inputs, program, impl=None) -> np.ndarray:
    """Evaluate a compiled :class:`~sbitlab.circuit.Program` on each input row."""
    inputs = np.ascontiguousarray(inputs, dtype=np.uint8)
    return _resolve(impl).run_netlist(
        inputs, program.n_wires, program.codes, program.ins, program.outs,
        program.tables, program.arity_in, program.arity_out,
    )


def available_backends() -> dict:
    out = {"python": _pykernels}
    if _ckernels is not None:
        out["cython"] = _ckernels
    return out
