"""Hot kernels: compiled extension when built, pure Python otherwise.

Set ``GVKIT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("GVKIT_PURE_PYTHON") == "1":
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
nf_ff = _impl.nf_ff
primitive = _impl.primitive
spoly_ff = _impl.spoly_ff
pair_lcms = _impl.pair_lcms
pair_status = _impl.pair_status
make_tables = _impl.make_tables
sumset = _impl.sumset
scalar_image = _impl.scalar_image
cyclic = _impl.cyclic
span = _impl.span
ann_module = _impl.ann_module
ann_ring = _impl.ann_ring
colon = _impl.colon
popcount = _impl.popcount


def load_backend(name: str):
    """Return the kernel module for ``"python"`` or ``"cython"``."""
    if name == "python":
        from . import _pykernels

        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
