"""Dense exact linear algebra over finite fields.

Two layers:
  * prime fields F_p: int64 numpy matrices, reduced by a compiled Cython
    kernel when available (koszulext._gfkernel), else by the numpy fallback
    in _gf_python.  Set KOSZULEXT_PURE=1 to force the fallback.
  * arbitrary FrobeniusFields: pure-Python elimination on FieldElement rows
    (used for extension fields, where sizes stay small).
"""

from __future__ import annotations

import os

import numpy as np

if os.environ.get("KOSZULEXT_PURE"):
    from ._gf_python import rref_pivots as _rref_pivots

    BACKEND = "python"
else:
    try:
        from koszulext._gfkernel import rref_pivots as _rref_pivots

        BACKEND = "cython"
    except ImportError:
        from ._gf_python import rref_pivots as _rref_pivots

        BACKEND = "python"


def backend_name() -> str:
    return BACKEND


def as_gf_array(a, p: int) -> np.ndarray:
    arr = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % p)
    if arr.ndim != 2:
        raise ValueError("expected a 2D matrix")
    return arr


def rref_mod(a, p: int):
    """Reduced row echelon form over F_p; returns (rref, pivot columns)."""
    arr = as_gf_array(a, p).copy()
    pivots = _rref_pivots(arr, p)
    return arr, list(pivots)


def rank_mod(a, p: int) -> int:
    arr = as_gf_array(a, p)
    if arr.size == 0:
        return 0
    work = arr.copy()
    return len(_rref_pivots(work, p))


def nullspace_mod(a, p: int) -> np.ndarray:
    """Rows span {x : a @ x = 0 mod p}; shape (nullity, ncols)."""
    arr = as_gf_array(a, p)
    m, n = arr.shape
    if m == 0:
        return np.eye(n, dtype=np.int64)
    r, pivots = rref_mod(arr, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, c]) % p
    return basis


def solve_mod(a, b, p: int):
    """One solution x of a @ x = b mod p, or None if inconsistent."""
    arr = as_gf_array(a, p)
    bv = np.asarray(b, dtype=np.int64).reshape(-1, 1) % p
    aug = np.hstack([arr, bv])
    r, pivots = rref_mod(aug, p)
    n = arr.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = r[i, n]
    return x


# ---------------------------------------------------------------------------
# generic elimination over an arbitrary FrobeniusField


def generic_rref(rows, field):
    """Row-reduce a list of FieldElement rows; returns (rows, pivots)."""
    rows = [list(row) for row in rows]
    if not rows:
        return rows, []
    n = len(rows[0])
    r = 0
    pivots = []
    for c in range(n):
        if r == len(rows):
            break
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def generic_rank(rows, field) -> int:
    return len(generic_rref(rows, field)[1])


def generic_nullspace(rows, field):
    rows = [list(r) for r in rows]
    if not rows:
        return []
    n = len(rows[0])
    red, pivots = generic_rref(rows, field)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for c in free:
        vec = [field.zero] * n
        vec[c] = field.one
        for i, pc in enumerate(pivots):
            vec[pc] = -red[i][c]
        basis.append(vec)
    return basis


def rank(matrix, field) -> int:
    """Rank over the field; dispatches on prime vs extension field.

    `matrix` is either a numpy int array (prime field) or a list of
    FieldElement rows.
    """
    if field.n == 1:
        if isinstance(matrix, np.ndarray):
            return rank_mod(matrix, field.p)
        arr = [[int(x) for x in row] for row in matrix]
        if not arr:
            return 0
        return rank_mod(np.array(arr, dtype=np.int64), field.p)
    return generic_rank(matrix, field)
