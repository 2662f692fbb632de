"""Backend selection for the monomial-sum evaluation kernels.

At import time the compiled extension is preferred; the numpy fallback
keeps the package usable on hosts without a C toolchain.  Both expose
identical semantics, and tests assert they agree bit-for-bit on random
inputs.  Set BALLGEN_THREADS > 1 to chunk large batch evaluations over
a thread pool (results are reduced order-independently, so the output
is identical either way).
"""

import os

import numpy as np

try:
    from . import _poly_kernels as _impl

    COMPILED = True
except ImportError:  # pragma: no cover - depends on build host
    from . import _poly_numpy as _impl

    COMPILED = False

from . import _poly_numpy as _fallback

BACKEND = _impl.BACKEND

_MIN_CHUNKED = 4096


def thread_count():
    raw = os.environ.get("BALLGEN_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def eval_poly_batch(pts, coeffs, exps, backend=None):
    """Evaluate sum_t coeffs[t] * prod_j pts[:, j]**exps[t, j]."""
    impl = _pick(backend)
    workers = thread_count()
    m = pts.shape[0]
    if workers > 1 and m >= _MIN_CHUNKED:
        from concurrent.futures import ThreadPoolExecutor

        bounds = np.linspace(0, m, workers + 1, dtype=int)
        out = np.empty(m, dtype=np.complex128)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futs = {
                pool.submit(impl.eval_poly_batch, pts[a:b], coeffs, exps): (a, b)
                for a, b in zip(bounds[:-1], bounds[1:])
                if b > a
            }
            for fut, (a, b) in futs.items():
                out[a:b] = fut.result()
        return out
    return impl.eval_poly_batch(pts, coeffs, exps)


def eval_poly_point(pt, coeffs, exps, backend=None):
    return _pick(backend).eval_poly_point(pt, coeffs, exps)


def _pick(backend):
    if backend in (None, BACKEND):
        return _impl
    if backend == "numpy":
        return _fallback
    if backend == "cython" and COMPILED:
        return _impl
    raise ValueError(f"backend {backend!r} not available (have {BACKEND!r})")
