"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over with the same interface.  Setting ``TOUGHCYCLES_PURE=1``
forces the pure-Python module.
"""

import os

from toughcycles import _pykernels

_impl = _pykernels
if os.environ.get("TOUGHCYCLES_PURE") != "1":
    try:
        from toughcycles import _ckernels as _impl
    except ImportError:  # extension not built
        pass

BACKEND = "cython" if _impl is not _pykernels else "python"

count_components = _impl.count_components
max_independent_set = _impl.max_independent_set
tough_violation = _impl.tough_violation
longest_cycle = _impl.longest_cycle
cycles_of_length = _impl.cycles_of_length
hamiltonian_paths = _impl.hamiltonian_paths
canonical_labeling = _impl.canonical_labeling


def backends():
    """Map of available backend name -> kernel module."""
    found = {"python": _pykernels}
    try:
        from toughcycles import _ckernels
    except ImportError:
        return found
    found["cython"] = _ckernels
    return found
