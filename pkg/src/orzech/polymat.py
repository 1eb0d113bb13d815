"""Dense exact matrices and univariate polynomials over a :class:`Ring`.

Entries are stored as canonical raw values (see :mod:`orzech.rings`);
indexing with ``m[i, j]`` wraps them as :class:`RingElement`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, NotSquare, RingMismatch
from .rings import Ring, RingElement


@dataclass(frozen=True)
class Matrix:
    ring: Ring
    rows: int
    cols: int
    data: tuple  # tuple of row tuples of raw values

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
        data = tuple(tuple(ring.canon(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise DimensionMismatch("ragged rows")
        return cls(ring, len(data), ncols, data)

    @classmethod
    def from_columns(cls, ring: Ring, columns: Sequence[Sequence], nrows: int) -> Matrix:
        cols = [[ring.canon(x) for x in c] for c in columns]
        if any(len(c) != nrows for c in cols):
            raise DimensionMismatch(f"every column must have length {nrows}")
        data = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(ring, nrows, len(cols), data)

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> Matrix:
        z = ring.zero
        return cls(ring, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def column(cls, ring: Ring, values: Sequence) -> Matrix:
        return cls.from_rows(ring, [[v] for v in values], ncols=1)

    def __getitem__(self, ij) -> RingElement:
        i, j = ij
        return RingElement(self.ring, self.data[i][j])

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def transpose(self) -> Matrix:
        return Matrix(self.ring, self.cols, self.rows,
                      tuple(tuple(r[j] for r in self.data) for j in range(self.cols)))

    def select_columns(self, idx: Sequence[int]) -> Matrix:
        return Matrix(self.ring, self.rows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.data))

    def select_rows(self, idx: Sequence[int]) -> Matrix:
        return Matrix(self.ring, len(idx), self.cols, tuple(self.data[i] for i in idx))

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product on raw values."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"{self.rows}x{self.cols} matrix applied to length-{len(v)} vector")
        canon = self.ring.canon
        return tuple(canon(sum(a * b for a, b in zip(r, v))) for r in self.data)

    def __add__(self, other: Matrix) -> Matrix:
        return mat_add(self, other)

    def __sub__(self, other: Matrix) -> Matrix:
        return mat_add(self, scalar_mul(-1, other))

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __neg__(self) -> Matrix:
        return scalar_mul(-1, self)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.data]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.data) + "]"


def _same_ring(*ms):
    r = ms[0].ring
    for m in ms[1:]:
        if m.ring != r:
            raise RingMismatch(f"{r} vs {m.ring}")
    return r


def identity(ring: Ring, n: int) -> Matrix:
    z, o = ring.zero, ring.one
    return Matrix(ring, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))


def mat_add(P: Matrix, Q: Matrix) -> Matrix:
    ring = _same_ring(P, Q)
    if P.shape != Q.shape:
        raise DimensionMismatch(f"{P.shape} + {Q.shape}")
    c = ring.canon
    return Matrix(ring, P.rows, P.cols,
                  tuple(tuple(c(a + b) for a, b in zip(r, s)) for r, s in zip(P.data, Q.data)))


def mat_mul(P: Matrix, Q: Matrix) -> Matrix:
    ring = _same_ring(P, Q)
    if P.cols != Q.rows:
        raise DimensionMismatch(f"{P.shape} @ {Q.shape}")
    c = ring.canon
    qcols = [Q.col(j) for j in range(Q.cols)]
    return Matrix(ring, P.rows, Q.cols,
                  tuple(tuple(c(sum(a * b for a, b in zip(r, qc))) for qc in qcols) for r in P.data))


def scalar_mul(s, P: Matrix) -> Matrix:
    ring = P.ring
    s = ring.canon(s)
    c = ring.canon
    return Matrix(ring, P.rows, P.cols, tuple(tuple(c(s * x) for x in r) for r in P.data))


def hstack(*ms: Matrix) -> Matrix:
    ring = _same_ring(*ms)
    rows = ms[0].rows
    if any(m.rows != rows for m in ms):
        raise DimensionMismatch("hstack needs equal row counts")
    data = tuple(sum((m.data[i] for m in ms), ()) for i in range(rows))
    return Matrix(ring, rows, sum(m.cols for m in ms), data)


@dataclass(frozen=True)
class Polynomial:
    """``coeffs[k]`` is the coefficient of X^k; no trailing zeros."""
    ring: Ring
    coeffs: tuple

    def __post_init__(self):
        cs = [self.ring.canon(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = self.ring.canon(acc * x + c)
        return acc

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms) or "0"


def _require_square(M: Matrix):
    if not M.is_square:
        raise NotSquare(f"expected a square matrix, got {M.rows}x{M.cols}")


def charpoly(M: Matrix) -> Polynomial:
    """det(X*I - M) via the Samuelson-Berkowitz recurrence.

    Uses only ring additions and multiplications, so it is valid over Z/n
    with composite n.  O(n^4) ring operations.
    """
    _require_square(M)
    ring, a, n = M.ring, M.data, M.rows
    c = ring.canon
    p = [ring.one]  # charpoly of the leading k x k block, highest degree first
    for k in range(n):
        row = a[k][:k]
        vec = [a[i][k] for i in range(k)]
        t = [ring.one, c(-a[k][k])]
        for _ in range(k):
            t.append(c(-sum(x * y for x, y in zip(row, vec))))
            vec = [c(sum(a[i][j] * vec[j] for j in range(k))) for i in range(k)]
        # lower-triangular Toeplitz matrix with first column t, times p
        p = [c(sum(t[i - j] * p[j] for j in range(max(0, i - len(t) + 1), min(i, k) + 1)))
             for i in range(k + 2)]
    return Polynomial(ring, tuple(reversed(p)))


def eval_poly_at_matrix(p: Polynomial, M: Matrix) -> Matrix:
    _require_square(M)
    _same_ring_poly(p, M)
    n = M.rows
    acc = Matrix.zeros(M.ring, n, n)
    I = identity(M.ring, n)
    for coeff in reversed(p.coeffs):
        acc = mat_add(mat_mul(acc, M), scalar_mul(coeff, I))
    return acc


def _same_ring_poly(p: Polynomial, M: Matrix):
    if p.ring != M.ring:
        raise RingMismatch(f"polynomial over {p.ring}, matrix over {M.ring}")


def cayley_hamilton_check(M: Matrix) -> bool:
    return eval_poly_at_matrix(charpoly(M), M).is_zero()


def monic_annihilator(M: Matrix) -> tuple:
    """Coefficients (c_0, ..., c_n) with c_n = 1 and sum c_k M^k = 0."""
    coeffs = charpoly(M).coeffs
    assert len(coeffs) == M.rows + 1 and coeffs[-1] == 1
    return coeffs


def determinant(M: Matrix) -> RingElement:
    p = charpoly(M)
    c0 = p.coeffs[0] if p.coeffs else M.ring.zero
    return M.ring(c0 if M.rows % 2 == 0 else -c0)
