"""Dense matrices on tensor powers of the two-dimensional space V.

A :class:`Mat` carries an ordered tuple of leg labels; its basis index is the
multi-index over those legs, flattened big-endian (first leg most
significant).  Entries are elements of a coefficient domain (Scalar or
GaussianRational).  A matrix-wide prefactor key (see :mod:`qreflect.prefactor`)
records a common formal factor such as ``r(u)``; it multiplies every entry.
"""

from __future__ import annotations

from itertools import product

from .errors import LegMismatch, SingularMatrix
from .field import Scalar, SymbolicDomain
from .prefactor import key_inv, key_mul, key_str

__all__ = ["Mat", "swap_matrix"]


def _zero_like(x):
    return x * 0


def _is_zero(x) -> bool:
    return not x


class Mat:
    __slots__ = ("legs", "n", "rows", "pf")

    def __init__(self, legs, rows, pf=()):
        self.legs = tuple(legs)
        if len(set(self.legs)) != len(self.legs):
            raise LegMismatch(f"repeated legs {self.legs}")
        self.n = 2 ** len(self.legs)
        rows = [list(r) for r in rows]
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise LegMismatch(f"matrix shape does not match {len(self.legs)} legs")
        self.rows = rows
        self.pf = pf

    # constructors -------------------------------------------------------
    @classmethod
    def identity(cls, legs, domain=None):
        domain = domain or SymbolicDomain()
        n = 2 ** len(tuple(legs))
        one, zero = domain.one, domain.zero
        return cls(legs, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, legs, domain=None):
        domain = domain or SymbolicDomain()
        n = 2 ** len(tuple(legs))
        return cls(legs, [[domain.zero] * n for _ in range(n)])

    def map(self, fn) -> "Mat":
        return Mat(self.legs, [[fn(x) for x in row] for row in self.rows], self.pf)

    def lift(self, domain) -> "Mat":
        """Move every entry into ``domain`` (e.g. evaluate at a point)."""
        return self.map(domain.lift)

    # access -------------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entry(self, row_multi, col_multi):
        return self.rows[_flat(row_multi)][_flat(col_multi)]

    # algebra ------------------------------------------------------------
    def _check_legs(self, other):
        if self.legs != other.legs:
            raise LegMismatch(f"legs {self.legs} and {other.legs} differ")

    def __add__(self, other):
        self._check_legs(other)
        if self.pf != other.pf:
            raise LegMismatch("cannot add matrices with different prefactors")
        return Mat(self.legs, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.pf)

    def __sub__(self, other):
        self._check_legs(other)
        if self.pf != other.pf:
            raise LegMismatch("cannot subtract matrices with different prefactors")
        return Mat(self.legs, [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.pf)

    def __neg__(self):
        return self.map(lambda x: -x)

    def scale(self, c) -> "Mat":
        return self.map(lambda x: x * c)

    def with_pf(self, pf) -> "Mat":
        return Mat(self.legs, self.rows, pf)

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_legs(other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            nz = [(k, a) for k, a in enumerate(row) if not _is_zero(a)]
            new = []
            for j in range(n):
                col = cols[j]
                acc = None
                for k, a in nz:
                    b = col[k]
                    if _is_zero(b):
                        continue
                    t = a * b
                    acc = t if acc is None else acc + t
                new.append(acc if acc is not None else _zero_like(row[0]))
            out.append(new)
        return Mat(self.legs, out, key_mul(self.pf, other.pf))

    __mul__ = __matmul__

    def is_zero(self) -> bool:
        return all(_is_zero(x) for row in self.rows for x in row)

    def __eq__(self, other):
        if not isinstance(other, Mat) or self.legs != other.legs or self.pf != other.pf:
            return False
        return all(_is_zero(a - b) for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))

    __hash__ = None

    def nonzero_entries(self):
        return [(i, j, x) for i, row in enumerate(self.rows) for j, x in enumerate(row) if not _is_zero(x)]

    def is_identity(self) -> bool:
        return not self.pf and all(
            _is_zero(x - 1) if i == j else _is_zero(x) for i, row in enumerate(self.rows) for j, x in enumerate(row)
        )

    # tensor structure ---------------------------------------------------
    def embed(self, all_legs) -> "Mat":
        """``self`` tensored with the identity on the legs of ``all_legs`` it does not carry."""
        all_legs = tuple(all_legs)
        if not set(self.legs) <= set(all_legs):
            raise LegMismatch(f"legs {self.legs} are not contained in {all_legs}")
        pos = [all_legs.index(l) for l in self.legs]
        rest = [i for i in range(len(all_legs)) if i not in pos]
        N = 2 ** len(all_legs)
        zero = _zero_like(self.rows[0][0])
        rows = [[zero] * N for _ in range(N)]
        for I in range(N):
            bi = _bits(I, len(all_legs))
            for J in range(N):
                bj = _bits(J, len(all_legs))
                if any(bi[r] != bj[r] for r in rest):
                    continue
                rows[I][J] = self.rows[_flat([bi[p] for p in pos])][_flat([bj[p] for p in pos])]
        return Mat(all_legs, rows, self.pf)

    def relabel(self, new_legs) -> "Mat":
        """Rename legs positionally (``R`` on (1,2) relabelled (2,1) is ``R_21`` as a map)."""
        new_legs = tuple(new_legs)
        if len(new_legs) != len(self.legs):
            raise LegMismatch("relabel needs the same number of legs")
        return Mat(new_legs, self.rows, self.pf)

    def reorder(self, order) -> "Mat":
        """Same operator, with basis legs listed in ``order``."""
        order = tuple(order)
        if len(order) != len(self.legs) or set(order) != set(self.legs):
            raise LegMismatch(f"{order} is not a permutation of {self.legs}")
        if order == self.legs:
            return self
        perm = [self.legs.index(l) for l in order]
        k = len(order)
        rows = [[None] * self.n for _ in range(self.n)]
        for I in range(self.n):
            bi = _bits(I, k)
            oi = _flat([bi[p] for p in perm])
            for J in range(self.n):
                bj = _bits(J, k)
                rows[oi][_flat([bj[p] for p in perm])] = self.rows[I][J]
        return Mat(order, rows, self.pf)

    def partial_transpose(self, leg) -> "Mat":
        if leg not in self.legs:
            raise LegMismatch(f"leg {leg!r} not in {self.legs}")
        p = self.legs.index(leg)
        k = len(self.legs)
        rows = [[None] * self.n for _ in range(self.n)]
        for I in range(self.n):
            bi = _bits(I, k)
            for J in range(self.n):
                bj = _bits(J, k)
                ni, nj = list(bi), list(bj)
                ni[p], nj[p] = bj[p], bi[p]
                rows[_flat(ni)][_flat(nj)] = self.rows[I][J]
        return Mat(self.legs, rows, self.pf)

    def transpose(self) -> "Mat":
        return Mat(self.legs, [list(c) for c in zip(*self.rows)], self.pf)

    def kron(self, other) -> "Mat":
        if set(self.legs) & set(other.legs):
            raise LegMismatch("kron needs disjoint legs")
        rows = []
        for r1 in self.rows:
            for r2 in other.rows:
                rows.append([a * b for a in r1 for b in r2])
        return Mat(self.legs + other.legs, rows, key_mul(self.pf, other.pf))

    # inversion ----------------------------------------------------------
    def determinant(self):
        m = [row[:] for row in self.rows]
        n = self.n
        det = None
        sign = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if not _is_zero(m[r][c])), None)
            if piv is None:
                return _zero_like(m[0][0])
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                sign = -sign
            p = m[c][c]
            det = p if det is None else det * p
            inv = 1 / p
            for r in range(c + 1, n):
                if _is_zero(m[r][c]):
                    continue
                f = m[r][c] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return det if sign == 1 else -det

    def inverse(self) -> "Mat":
        """Exact inverse by Gauss-Jordan elimination (first nonzero pivot)."""
        n = self.n
        zero = _zero_like(self.rows[0][0])
        one = zero + 1
        m = [row[:] + [one if i == j else zero for j in range(n)] for i, row in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if not _is_zero(m[r][c])), None)
            if piv is None:
                raise SingularMatrix(
                    f"matrix on legs {self.legs} is singular (column {c})", determinant=self.determinant()
                )
            m[c], m[piv] = m[piv], m[c]
            inv = 1 / m[c][c]
            m[c] = [x * inv for x in m[c]]
            for r in range(n):
                if r != c and not _is_zero(m[r][c]):
                    f = m[r][c]
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return Mat(self.legs, [row[n:] for row in m], key_inv(self.pf))

    # display ------------------------------------------------------------
    def __str__(self):
        body = "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)
        head = f"Mat legs={self.legs}"
        if self.pf:
            head += f" prefactor={key_str(self.pf)}"
        return head + "\n" + body

    __repr__ = __str__


def _bits(I, k):
    return [(I >> (k - 1 - p)) & 1 for p in range(k)]


def _flat(bits):
    I = 0
    for b in bits:
        I = (I << 1) | b
    return I


def swap_matrix(legs=(1, 2), domain=None) -> Mat:
    """The flip P on two legs: P(x tensor y) = y tensor x."""
    domain = domain or SymbolicDomain()
    rows = [[domain.zero] * 4 for _ in range(4)]
    for a, b in product((0, 1), repeat=2):
        rows[_flat([a, b])][_flat([b, a])] = domain.one
    return Mat(legs, rows)
