"""Pure-numpy evaluation kernels (fallback when the extension is absent).

Both backends expose the same two entry points:

    eval_poly_batch(pts, coeffs, exps)  -> complex values, one per point
    eval_poly_point(pt, coeffs, exps)   -> single complex value

`coeffs` is a complex128 vector of monomial coefficients and `exps` the
matching (terms x n) int64 exponent matrix.
"""

import numpy as np

BACKEND = "numpy"


def eval_poly_batch(pts, coeffs, exps):
    m = pts.shape[0]
    out = np.zeros(m, dtype=np.complex128)
    for t in range(coeffs.shape[0]):
        term = np.full(m, coeffs[t])
        for j in range(pts.shape[1]):
            e = exps[t, j]
            if e == 1:
                term = term * pts[:, j]
            elif e > 1:
                term = term * pts[:, j] ** e
        out += term
    return out


def eval_poly_point(pt, coeffs, exps):
    # Scalar path kept free of numpy per-call overhead; the ODE stepper
    # calls this once per stage.
    acc = 0j
    for t in range(len(coeffs)):
        term = coeffs[t]
        for j in range(len(pt)):
            e = exps[t, j]
            z = pt[j]
            while e > 0:
                if e & 1:
                    term = term * z
                z = z * z
                e >>= 1
        acc += term
    return acc
