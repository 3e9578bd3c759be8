"""Kernel selection: compiled extension if it imports, else pure Python.

Set DBLCAT_PURE=1 to force the pure-Python kernels.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if not os.environ.get("DBLCAT_PURE"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

compose_idx = _impl.compose_idx
matching_pairs = _impl.matching_pairs
quotient_classes = _impl.quotient_classes
fibers_idx = _impl.fibers_idx
