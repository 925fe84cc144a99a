"""Kernel backend selection: compiled extension when available, pure
Python otherwise.  ``RAYWEAVE_PURE=1`` forces the pure kernel."""

from __future__ import annotations

import os

from . import _pykernel

_impl = _pykernel
_name = "pure"

if os.environ.get("RAYWEAVE_PURE", "") != "1":
    try:
        from . import _ckernel  # type: ignore[attr-defined]
        _impl = _ckernel
        _name = "compiled"
    except ImportError:
        pass


def backend_name() -> str:
    return _name


def realize_kernel(n_loc, strand_locs, strand_hemi0, strand_has_end):
    return _impl.realize_kernel(n_loc, strand_locs, strand_hemi0, strand_has_end)


def count_crossings(chords, n_strands, total):
    return _impl.count_crossings(chords, n_strands, total)


KernelError = _pykernel.KernelError
