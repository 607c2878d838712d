"""numpy implementation of dense elimination over F_p.

Mirrors the semantics of the compiled kernel in koszulext._gfkernel: rows
are permuted so pivot rows come first, the matrix ends up in reduced row
echelon form, and the pivot column list is returned.
"""

import numpy as np


def rref_pivots(a: np.ndarray, p: int) -> list[int]:
    """Reduce a (int64, C-contiguous, already in [0, p)) in place; return pivots."""
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        other = a[:, c].copy()
        other[r] = 0
        rows = np.nonzero(other)[0]
        if rows.size:
            a[rows] = (a[rows] - np.outer(other[rows], a[r])) % p
        pivots.append(c)
        r += 1
    return pivots
