"""Matrices over small finite fields: ranks, null spaces, standard forms.

Entries are stored as a dense uint8 array of field indices.  Row reduction
is vectorized with numpy; characteristic-2 fields get an XOR fast path.
Bit-packing (one word-bit per entry for GF(2), two planes for GF(4)) is
applied inside the distance engine where it matters; see codes.py.
"""

from __future__ import annotations

import numpy as np

from .fields import Field


class FieldMatrix:
    """Immutable-by-convention matrix over a Field."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data):
        data = np.ascontiguousarray(np.asarray(data, dtype=np.uint8))
        if data.ndim != 2:
            raise ValueError("matrix data must be 2-D")
        if data.size and int(data.max()) >= field.q:
            raise ValueError("entry out of field range")
        self.field = field
        self.data = data

    # -- constructors --------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, field, n):
        return cls(field, np.eye(n, dtype=np.uint8))

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, FieldMatrix)
            and self.field == other.field
            and np.array_equal(self.data, other.data)
        )

    def __hash__(self):
        return hash((self.field, self.data.tobytes()))

    # -- elimination core ---------------------------------------------

    def _rref(self):
        """Return (reduced data copy, pivot column list)."""
        f = self.field
        a = self.data.copy()
        nrows, ncols = a.shape
        pivots = []
        r = 0
        for c in range(ncols):
            if r >= nrows:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            p = r + int(nz[0])
            if p != r:
                a[[r, p]] = a[[p, r]]
            pv = int(a[r, c])
            if pv != 1:
                a[r] = f.mul_table[f.inv(pv)][a[r]]
            col = a[:, c].copy()
            col[r] = 0
            mask = col != 0
            if mask.any():
                factors = col[mask]
                if f.p != 2:
                    factors = f.mul_table[f.neg(1)][factors]  # subtract, not add
                prod = f.mul_table[factors[:, None], a[r][None, :]]
                if f.p == 2:
                    a[mask] ^= prod
                else:
                    a[mask] = f.add_table[a[mask], prod]
            pivots.append(c)
            r += 1
        return a, pivots

    def rank(self) -> int:
        if self.data.size == 0:
            return 0
        if self.field.q == 2:
            return _gf2_rank_packed(self.data)
        return len(self._rref()[1])

    def rref(self):
        a, pivots = self._rref()
        return FieldMatrix(self.field, a), pivots

    def row_basis(self) -> "FieldMatrix":
        """RREF rows with zero rows dropped."""
        a, pivots = self._rref()
        return FieldMatrix(self.field, a[: len(pivots)])

    def nullspace(self) -> "FieldMatrix":
        """Rows form a basis of {x : M x^T = 0}; cols - rank rows."""
        f = self.field
        a, pivots = self._rref()
        ncols = self.cols
        free = [c for c in range(ncols) if c not in set(pivots)]
        basis = np.zeros((len(free), ncols), dtype=np.uint8)
        for bi, fc in enumerate(free):
            basis[bi, fc] = 1
            for ri, pc in enumerate(pivots):
                basis[bi, pc] = f.neg(int(a[ri, fc]))
        return FieldMatrix(f, basis)

    def standard_form(self):
        """(RREF with pivot columns moved first, column permutation).

        The permutation is the identity when the pivots already lead.
        """
        a, pivots = self._rref()
        a = a[: len(pivots)]
        ncols = self.cols
        perm = pivots + [c for c in range(ncols) if c not in set(pivots)]
        if perm == list(range(ncols)):
            return FieldMatrix(self.field, a), perm
        return FieldMatrix(self.field, a[:, perm]), perm

    # -- products ------------------------------------------------------

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        f = self.field
        if f.q == 2:
            prod = (self.data.astype(np.int64) @ other.data.astype(np.int64)) & 1
            return FieldMatrix(f, prod.astype(np.uint8))
        out = np.zeros((self.rows, other.cols), dtype=np.uint8)
        for k in range(self.cols):
            colk = self.data[:, k]
            nz = colk != 0
            if not nz.any():
                continue
            prod = f.mul_table[colk[nz][:, None], other.data[k][None, :]]
            if f.p == 2:
                out[nz] ^= prod
            else:
                out[nz] = f.add_table[out[nz], prod]
        return FieldMatrix(f, out)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.data.T)

    def conj_transpose(self) -> "FieldMatrix":
        """Entrywise GF(4) conjugation composed with transposition."""
        if self.field.q != 4:
            raise ValueError("conjugate transpose requires GF(4)")
        conj = np.array([0, 1, 3, 2], dtype=np.uint8)
        return FieldMatrix(self.field, conj[self.data].T)

    def conj(self) -> "FieldMatrix":
        if self.field.q != 4:
            raise ValueError("conjugation requires GF(4)")
        conj = np.array([0, 1, 3, 2], dtype=np.uint8)
        return FieldMatrix(self.field, conj[self.data])

    def stack(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.field != other.field or self.cols != other.cols:
            raise ValueError("incompatible stack")
        return FieldMatrix(self.field, np.vstack([self.data, other.data]))

    def is_zero(self) -> bool:
        return not self.data.any()

    def rowspace_contains(self, other: "FieldMatrix") -> bool:
        """True iff every row of `other` lies in this matrix's row space."""
        if self.field != other.field or self.cols != other.cols:
            raise ValueError("incompatible matrices")
        return self.stack(other).rank() == self.rank()

    def take_rows(self, idx) -> "FieldMatrix":
        return FieldMatrix(self.field, self.data[list(idx)])

    def first_independent_rows(self, k: int) -> "FieldMatrix":
        """Greedy scan keeping the first k linearly independent rows."""
        f = self.field
        basis = []  # (pivot col, reduced row with pivot normalized to 1)
        picked = []
        for i in range(self.rows):
            r = self.data[i].copy()
            for pc, br in basis:
                c = int(r[pc])
                if c:
                    prod = f.mul_table[f.neg(c)][br]
                    r = r ^ prod if f.p == 2 else f.add_table[r, prod]
            nz = np.nonzero(r)[0]
            if nz.size:
                pc = int(nz[0])
                pv = int(r[pc])
                if pv != 1:
                    r = f.mul_table[f.inv(pv)][r]
                basis.append((pc, r))
                picked.append(i)
                if len(picked) == k:
                    return self.take_rows(picked)
        raise ValueError(f"matrix has rank {len(picked)} < {k}")

    def __repr__(self):
        return f"FieldMatrix({self.rows}x{self.cols} over {self.field!r})"


def _gf2_rank_packed(data: np.ndarray) -> int:
    """Rank over GF(2) using one big int bitset per row."""
    rows = [int.from_bytes(np.packbits(r, bitorder="little").tobytes(), "little")
            for r in data]
    rank = 0
    for col in range(data.shape[1]):
        bit = 1 << col
        piv = None
        for i in range(rank, len(rows)):
            if rows[i] & bit:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= pr
        rank += 1
        if rank == len(rows):
            break
    return rank
