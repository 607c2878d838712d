"""The twisted polynomial ring k{xi}, its modules, and xi-adic completion.

Polynomials are written f = a_0 + a_1*xi + ... + a_d*xi^d with coefficients
on the left and the commutation rule xi * a = a^p * xi.  The degree function
makes k{xi} a left and right Euclidean domain, every one-sided ideal is
principal, and finitely presented left modules diagonalize to

    M ~ k{xi}^rho  (+)  k{xi}/(d_1)  (+) ... (+)  k{xi}/(d_k)

by two-sided row/column operations.  Completion data is only ever reported
through finite truncation towers dim M/xi^N M.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CompletionTruncationError
from .field import FieldElement, FrobeniusField
from . import linalg


class TwistedPoly:
    """Element of k{xi}; immutable coefficient tuple without trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FrobeniusField, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field: FrobeniusField, ints) -> "TwistedPoly":
        return cls(field, [field.element(c) for c in ints])

    @classmethod
    def zero(cls, field) -> "TwistedPoly":
        return cls(field, [])

    @classmethod
    def one(cls, field) -> "TwistedPoly":
        return cls(field, [field.one])

    @classmethod
    def xi_power(cls, field, r: int, coeff=None) -> "TwistedPoly":
        c = field.one if coeff is None else coeff
        return cls(field, [field.zero] * r + [c])

    @property
    def degree(self):
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def valuation(self):
        """Index of the lowest nonzero coefficient, or None for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, TwistedPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return TwistedPoly(self.field, [x + y for x, y in zip(a, b)])

    def __neg__(self):
        return TwistedPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Product with xi^i * a = phi^i(a) * xi^i."""
        self._check(other)
        if not self or not other:
            return TwistedPoly.zero(self.field)
        fld = self.field
        out = [fld.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * fld.frobenius(b, i)
        return TwistedPoly(self.field, out)

    def scale(self, c: FieldElement) -> "TwistedPoly":
        return TwistedPoly(self.field, [c * a for a in self.coeffs])

    def shift(self, r: int) -> "TwistedPoly":
        """Left-multiply by xi^r: coefficients get phi^r applied and shifted."""
        fld = self.field
        return TwistedPoly(
            fld, [fld.zero] * r + [fld.frobenius(a, r) for a in self.coeffs]
        )

    def truncate(self, n: int) -> tuple:
        """Coefficient vector of length n (classes modulo xi^n)."""
        z = self.field.zero
        c = self.coeffs[:n]
        return tuple(c) + (z,) * (n - len(c))

    def _check(self, other):
        if not isinstance(other, TwistedPoly) or other.field != self.field:
            raise ValueError("field mismatch between twisted polynomials")

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*xi^{i}" if i > 1 else f"({c})*xi")
        return " + ".join(parts)


def tp_mul(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    return f * g


def tp_divmod(f: TwistedPoly, g: TwistedPoly, side: str = "left"):
    """Euclidean division: side='left' gives f = q*g + r, side='right' f = g*q + r.

    In both cases r = 0 or deg(r) < deg(g).
    """
    if not g:
        raise ZeroDivisionError("division by the zero twisted polynomial")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    fld = f.field
    q = TwistedPoly.zero(fld)
    r = f
    dg = g.degree
    glead = g.coeffs[-1]
    while r and r.degree >= dg:
        k = r.degree - dg
        if side == "left":
            # leading coeff of (c xi^k) * g is c * phi^k(g_lead)
            c = r.coeffs[-1] * fld.frobenius(glead, k).inverse()
            term = TwistedPoly.xi_power(fld, k, c)
            q = q + term
            r = r - term * g
        else:
            # leading coeff of g * (c xi^k) is g_lead * phi^dg(c)
            c = fld.frobenius(glead.inverse() * r.coeffs[-1], -dg)
            term = TwistedPoly.xi_power(fld, k, c)
            q = q + term
            r = r - g * term
    return q, r


# ---------------------------------------------------------------------------
# finitely presented left modules


@dataclass
class NormalForm:
    """Diagonal presentation data: M ~ k{xi}^free_rank (+) sum_i k{xi}/(d_i)."""

    free_rank: int
    invariants: list  # nonzero TwistedPoly diagonal entries, monic

    @property
    def torsion_dim(self) -> int:
        return sum(d.degree for d in self.invariants)

    def quotient_dim(self, r: int) -> int:
        """dim_k M/xi^r M."""
        return self.free_rank * r + sum(min(r, d.valuation) for d in self.invariants)

    def kernel_dim(self, r: int) -> int:
        """dim_k ker(xi^r : M -> M)."""
        return sum(min(r, d.valuation) for d in self.invariants)


class FPModule:
    """Finitely presented left k{xi}-module given by a relations-by-generators matrix."""

    def __init__(self, field: FrobeniusField, rows, generators: int | None = None):
        self.field = field
        self.rows = [list(r) for r in rows]
        for r in self.rows:
            for e in r:
                if not isinstance(e, TwistedPoly) or e.field != field:
                    raise ValueError("presentation entries must live over the module's field")
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged presentation matrix")
            self.generators = widths.pop()
            if generators is not None and generators != self.generators:
                raise ValueError("generator count disagrees with matrix width")
        else:
            self.generators = generators or 0
        self._nf: NormalForm | None = None

    @classmethod
    def from_ints(cls, field, int_rows, generators=None) -> "FPModule":
        rows = [[TwistedPoly.from_ints(field, e) for e in row] for row in int_rows]
        return cls(field, rows, generators)

    @classmethod
    def free(cls, field, rank: int) -> "FPModule":
        return cls(field, [], generators=rank)

    @classmethod
    def cyclic(cls, field, d: TwistedPoly) -> "FPModule":
        return cls(field, [[d]])

    def max_entry_degree(self) -> int:
        degs = [e.degree for row in self.rows for e in row if e]
        return max(degs, default=0)

    # -- normal form ---------------------------------------------------

    def normal_form(self) -> NormalForm:
        """Two-sided diagonalization (cached, write-once)."""
        if self._nf is None:
            self._nf = _diagonalize(self.field, [row[:] for row in self.rows], self.generators)
        return self._nf

    # -- truncated linear algebra on the raw presentation ---------------

    def quotient_dims_raw(self, n_max: int) -> list[int]:
        """dim_k M/xi^j M for j = 1..n_max, straight from the presentation.

        Independent of normal_form: purely k-linear ranks on truncations.
        """
        return [self._trunc_dim(j) for j in range(1, n_max + 1)]

    def _relation_matrix(self, n: int):
        """k-linear matrix of (xi-shifts of relations) inside F_0/xi^n F_0."""
        fld = self.field
        cols = self.generators * n
        rows = []
        for rel in self.rows:
            for t in range(n):
                vec = []
                for entry in rel:
                    vec.extend(entry.shift(t).truncate(n))
                rows.append(vec)
        return rows, cols

    def _trunc_dim(self, n: int) -> int:
        if self.generators == 0:
            return 0
        rows, cols = self._relation_matrix(n)
        if not rows:
            return cols
        return cols - linalg.rank(rows, self.field)

    def kernel_transition_rank(self, n_from: int, n_to: int) -> int:
        """rank of im( ker(F_1/xi^a -> F_0/xi^a) -> ker(.../xi^b) ), a=n_from >= b=n_to.

        Used to certify L1 = 0 by Mittag-Leffler vanishing of the kernel tower.
        """
        fld = self.field
        if not self.rows:
            return 0
        rows_a, _ = self._relation_matrix(n_from)
        if fld.n == 1:
            mat = np.array([[int(x) for x in r] for r in rows_a], dtype=np.int64)
            basis = linalg.nullspace_mod(mat.T, fld.p)
            if basis.shape[0] == 0:
                return 0
            proj = _project_kernel_basis([list(map(int, b)) for b in basis], self, n_from, n_to)
            return linalg.rank_mod(np.array(proj, dtype=np.int64), fld.p) if proj else 0
        cols = [list(col) for col in zip(*rows_a)] if rows_a else []
        basis = linalg.generic_nullspace(cols, fld)
        proj = _project_kernel_basis(basis, self, n_from, n_to)
        return linalg.rank(proj, fld) if proj else 0


def _project_kernel_basis(basis, module: FPModule, n_from: int, n_to: int):
    """Truncate kernel vectors in F_1/xi^n_from down to F_1/xi^n_to coordinates."""
    nrel = len(module.rows)
    out = []
    for vec in basis:
        proj = []
        for i in range(nrel):
            block = vec[i * n_from : (i + 1) * n_from]
            proj.extend(block[:n_to])
        out.append(proj)
    return out


def _min_degree_entry(rows, i0, j0):
    best = None
    for i in range(i0, len(rows)):
        for j in range(j0, len(rows[i])):
            e = rows[i][j]
            if e and (best is None or e.degree < best[0]):
                best = (e.degree, i, j)
    return best


def _diagonalize(field, rows, generators) -> NormalForm:
    """Smith-style reduction over the two-sided Euclidean domain k{xi}.

    Row operations are left multiplications (relations form a left
    submodule), column operations are right multiplications (changes of the
    generator basis of F_0).
    """
    nrows = len(rows)
    invariants = []
    i0 = j0 = 0
    while i0 < nrows and j0 < generators:
        found = _min_degree_entry(rows, i0, j0)
        if found is None:
            break
        _, pi, pj = found
        rows[i0], rows[pi] = rows[pi], rows[i0]
        for r in rows:
            r[j0], r[pj] = r[pj], r[j0]
        while True:
            pivot = rows[i0][j0]
            # clear the pivot column with left-division row operations
            dirty = False
            for i in range(len(rows)):
                if i == i0 or not rows[i][j0]:
                    continue
                q, _ = tp_divmod(rows[i][j0], pivot, side="left")
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[i0])]
                if rows[i][j0]:
                    dirty = True
            if dirty:
                found = _min_degree_entry(rows, i0, j0)
                _, pi, pj = found
                rows[i0], rows[pi] = rows[pi], rows[i0]
                for r in rows:
                    r[j0], r[pj] = r[pj], r[j0]
                continue
            # clear the pivot row with right-division column operations
            dirty = False
            for j in range(generators):
                if j == j0 or not rows[i0][j]:
                    continue
                q, _ = tp_divmod(rows[i0][j], pivot, side="right")
                for r in rows:
                    r[j] = r[j] - r[j0] * q
                if rows[i0][j]:
                    dirty = True
            if not dirty and not any(
                rows[i][j0] for i in range(len(rows)) if i != i0
            ):
                break
        d = rows[i0][j0]
        lead_inv = d.coeffs[-1].inverse()
        invariants.append(TwistedPoly.xi_power(field, 0, lead_inv) * d)
        i0 += 1
        j0 += 1
    if any(rows[i][j] for i in range(i0, len(rows)) for j in range(len(rows[i]))):
        raise AssertionError("diagonalization left residue outside the pivot block")
    return NormalForm(free_rank=generators - len(invariants), invariants=invariants)


# ---------------------------------------------------------------------------
# completion


@dataclass
class CompletionResult:
    """L0/L1 of the xi-adic completion, reported through truncation towers.

    L0 = k{{xi}}^free_rank (+) sum_i k{xi}/xi^(torsion_i); L1 = 0 for every
    finitely presented module.  tower[j-1] = dim L0/xi^j L0 for j = 1..N.
    """

    free_rank: int
    torsion: list[int]
    l1_dims: list[int]
    tower: list[int]
    stabilization: int

    def quotient_dim(self, r: int) -> int:
        return self.free_rank * r + sum(min(r, m) for m in self.torsion)

    def kernel_dim(self, r: int) -> int:
        return sum(min(r, m) for m in self.torsion)

    @property
    def is_l1_zero(self) -> bool:
        return not any(self.l1_dims)

    def recomplete(self) -> "CompletionResult":
        """Derived completion applied to L0 itself (Prop-style idempotence).

        k{{xi}} and xi-power torsion are both derived complete, so the
        description and tower are unchanged and L1 stays zero.
        """
        n = len(self.tower)
        tower = [self.quotient_dim(j) for j in range(1, n + 1)]
        return CompletionResult(
            free_rank=self.free_rank,
            torsion=list(self.torsion),
            l1_dims=[0] * n,
            tower=tower,
            stabilization=self.stabilization,
        )


def module_normal_form(m: FPModule) -> NormalForm:
    return m.normal_form()


def torsion_and_quotient(m: FPModule, r: int) -> tuple[int, int]:
    """(dim_k ker(xi^r), dim_k M/xi^r M) from the normal form."""
    if r < 1:
        raise ValueError("r must be >= 1")
    nf = m.normal_form()
    return nf.kernel_dim(r), nf.quotient_dim(r)


def derived_completion(m: FPModule, truncation: int) -> CompletionResult:
    """L0 and L1 of the xi-completion, with stabilization detection.

    Requires truncation >= (stabilization level) + 2 so the tower visibly
    flattens; otherwise raises CompletionTruncationError.
    """
    nf = m.normal_form()
    torsion = [d.valuation for d in nf.invariants if d.valuation > 0]
    stab = max(torsion, default=0)
    if truncation < stab + 2:
        raise CompletionTruncationError(
            f"tower not stabilized at N={truncation}; increase N to at least {stab + 2}"
        )
    tower = [
        nf.free_rank * j + sum(min(j, t) for t in torsion)
        for j in range(1, truncation + 1)
    ]
    return CompletionResult(
        free_rank=nf.free_rank,
        torsion=sorted(torsion),
        l1_dims=[0] * truncation,
        tower=tower,
        stabilization=stab,
    )


def is_derived_complete(m: FPModule) -> bool:
    """True iff L1(M) = 0 and M -> L0(M) is an isomorphism.

    For finitely presented M: no free summand (M -> M-hat fails surjectivity)
    and every torsion invariant is exactly a xi-power up to a unit (a
    xi-coprime factor survives in M but dies in the completion).
    """
    nf = m.normal_form()
    if nf.free_rank != 0:
        return False
    return all(d.degree == d.valuation for d in nf.invariants)


def six_term_balance(parts: tuple[CompletionResult, CompletionResult, CompletionResult], r: int) -> int:
    """Snake-balanced alternating sum for 0 -> L0M' -> L0M -> L0M'' -> 0 at level r.

    For an exact sequence and the endomorphism xi^r the kernel and cokernel
    dimensions satisfy  kM' - kM + kM'' - qM' + qM - qM'' = 0.
    """
    a, b, c = parts
    return (
        a.kernel_dim(r)
        - b.kernel_dim(r)
        + c.kernel_dim(r)
        - a.quotient_dim(r)
        + b.quotient_dim(r)
        - c.quotient_dim(r)
    )
