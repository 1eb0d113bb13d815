"""Linear algebra over Z, Q and Z/n: normal forms, solving, kernels.

Over Z everything goes through the column Hermite normal form.  Fields
(Q, Z/p) use Gaussian elimination.  Composite Z/n is handled by lifting to
Z and appending an ``n*I`` block, so ``M x = b (mod n)`` becomes
``[M | n*I] (x, y) = b`` over Z.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionMismatch, UnsupportedRing
from .polymat import Matrix, hstack
from .rings import INTEGERS, ZZ, Ring


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


@dataclass(frozen=True)
class HnfResult:
    H: Matrix
    U: Matrix
    pivots: tuple  # (row, col) of each nonzero column of H


@dataclass(frozen=True)
class SnfResult:
    S: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self) -> tuple:
        return tuple(self.S.data[i][i] for i in range(min(self.S.rows, self.S.cols)))


@dataclass(frozen=True)
class MembershipWitness:
    """``G @ coeffs + R @ aux == v`` for the spans the witness was built against."""
    coeffs: tuple
    aux: tuple = ()


def _require_integers(M: Matrix):
    if M.ring.kind != INTEGERS:
        raise UnsupportedRing(f"integer matrix required, got {M.ring}")


def _hnf_raw(A: list[list[int]], ncols: int):
    """In-place column HNF of the row-list ``A``; returns (U rows, pivots)."""
    m = len(A)
    n = ncols
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(j, k, a, b, c, d):
        # (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + d*col_k)
        for M in (A, U):
            for r in M:
                x, y = r[j], r[k]
                r[j], r[k] = a * x + b * y, c * x + d * y

    pivots = []
    c = 0
    for i in range(m):
        if c == n:
            break
        for j in range(c + 1, n):
            b = A[i][j]
            if b == 0:
                continue
            a = A[i][c]
            g, s, t = xgcd(a, b)
            colop(c, j, s, t, -b // g, a // g)
        piv = A[i][c]
        if piv == 0:
            continue
        if piv < 0:
            for M in (A, U):
                for r in M:
                    r[c] = -r[c]
            piv = -piv
        for j in range(c):
            q = A[i][j] // piv
            if q:
                for M in (A, U):
                    for r in M:
                        r[j] -= q * r[c]
        pivots.append((i, c))
        c += 1
    return U, pivots


def hnf(M: Matrix) -> HnfResult:
    """Column Hermite normal form: ``M @ U == H`` with U unimodular."""
    _require_integers(M)
    A = [list(r) for r in M.data]
    U, pivots = _hnf_raw(A, M.cols)
    return HnfResult(Matrix.from_rows(ZZ, A, M.cols), Matrix.from_rows(ZZ, U, M.cols), tuple(pivots))


def snf(M: Matrix) -> SnfResult:
    """Smith normal form: ``U @ M @ V == S``, diagonal with d_1 | d_2 | ..."""
    _require_integers(M)
    m, n = M.rows, M.cols
    A = [list(r) for r in M.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for M_ in (A, V):
            for r in M_:
                r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for M_ in (A, U):
            M_[dst] = [x + q * y for x, y in zip(M_[dst], M_[src])]

    def add_col(dst, src, q):
        for M_ in (A, V):
            for r in M_:
                r[dst] += q * r[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        p = A[t][t]
        dirty = False
        for i in range(t + 1, m):
            if A[i][t]:
                add_row(i, t, -(A[i][t] // p))
                dirty = dirty or A[i][t] != 0
        for j in range(t + 1, n):
            if A[t][j]:
                add_col(j, t, -(A[t][j] // p))
                dirty = dirty or A[t][j] != 0
        if dirty:
            continue
        bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
        if bad is not None:
            add_row(t, bad, 1)
            continue
        if p < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return SnfResult(Matrix.from_rows(ZZ, A, n), Matrix.from_rows(ZZ, U, m), Matrix.from_rows(ZZ, V, n))


# ---- solving ----------------------------------------------------------------

def _solve_z(A: list[list[int]], ncols: int, b: Sequence[int]) -> Optional[list[int]]:
    A = [list(r) for r in A]
    U, pivots = _hnf_raw(A, ncols)
    res = list(b)
    y = [0] * ncols
    for (i, j) in pivots:
        if any(res[r] for r in range(i)):
            return None
        q, rem = divmod(res[i], A[i][j])
        if rem:
            return None
        y[j] = q
        if q:
            for r in range(len(A)):
                res[r] -= q * A[r][j]
    if any(res):
        return None
    return [sum(U[r][j] * y[j] for j in range(ncols)) for r in range(ncols)]


def _kernel_z(A: list[list[int]], ncols: int) -> list[list[int]]:
    A = [list(r) for r in A]
    U, pivots = _hnf_raw(A, ncols)
    used = {j for _, j in pivots}
    return [[U[r][j] for r in range(ncols)] for j in range(ncols) if j not in used]


def _rref(ring: Ring, A: list[list], ncols: int):
    """Reduced row echelon form over a field, in place; returns pivot columns."""
    c = ring.canon
    pivots = []
    r = 0
    for j in range(ncols):
        k = next((i for i in range(r, len(A)) if A[i][j] != 0), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = ring.inv(A[r][j])
        A[r] = [c(x * inv) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][j] != 0:
                f = A[i][j]
                A[i] = [c(x - f * y) for x, y in zip(A[i], A[r])]
        pivots.append(j)
        r += 1
        if r == len(A):
            break
    return pivots


def _solve_field(ring: Ring, A, ncols: int, b) -> Optional[list]:
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    pivots = _rref(ring, aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ring.zero] * ncols
    for r, j in enumerate(pivots):
        x[j] = aug[r][ncols]
    return x


def _kernel_field(ring: Ring, A, ncols: int) -> list[list]:
    A = [list(r) for r in A]
    pivots = _rref(ring, A, ncols)
    out = []
    for f in (j for j in range(ncols) if j not in pivots):
        v = [ring.zero] * ncols
        v[f] = ring.one
        for r, j in enumerate(pivots):
            v[j] = ring.canon(-A[r][f])
        out.append(v)
    return out


def _lifted(M: Matrix) -> list[list[int]]:
    n = M.ring.modulus
    return [list(r) + [n * int(i == k) for k in range(M.rows)] for i, r in enumerate(M.data)]


def solve(M: Matrix, b: Sequence) -> Optional[tuple]:
    """Some x with ``M @ x == b``, or None.  Never a parametrised family."""
    ring = M.ring
    b = [ring.canon(x) for x in b]
    if len(b) != M.rows:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, matrix has {M.rows} rows")
    if ring.kind == INTEGERS:
        x = _solve_z(M.data, M.cols, b)
    elif ring.is_field:
        x = _solve_field(ring, M.data, M.cols, b)
    else:
        x = _solve_z(_lifted(M), M.cols + M.rows, b)
        x = None if x is None else x[:M.cols]
    return None if x is None else tuple(ring.canon(v) for v in x)


def kernel_gens(M: Matrix) -> Matrix:
    """Columns generating {x : M x = 0}; zero columns are dropped."""
    ring = M.ring
    if ring.kind == INTEGERS:
        gens = _kernel_z(M.data, M.cols)
    elif ring.is_field:
        gens = _kernel_field(ring, M.data, M.cols)
    else:
        gens = [g[:M.cols] for g in _kernel_z(_lifted(M), M.cols + M.rows)]
    gens = [[ring.canon(x) for x in g] for g in gens]
    gens = [g for g in gens if any(g)]
    return Matrix.from_columns(ring, gens, M.cols)


def membership(v: Sequence, G: Matrix, R: Matrix | None = None) -> Optional[MembershipWitness]:
    """Witness that v lies in colspan(G) + colspan(R), or None."""
    if R is None:
        R = Matrix.zeros(G.ring, G.rows, 0)
    if G.rows != R.rows or len(v) != G.rows:
        raise DimensionMismatch("membership: row counts differ")
    x = solve(hstack(G, R), v)
    if x is None:
        return None
    return MembershipWitness(tuple(x[:G.cols]), tuple(x[G.cols:]))


def check_witness(w: MembershipWitness, v: Sequence, G: Matrix, R: Matrix | None = None) -> bool:
    """Re-multiply a witness; no solving."""
    if R is None:
        R = Matrix.zeros(G.ring, G.rows, 0)
    if len(w.coeffs) != G.cols or len(w.aux) != R.cols or len(v) != G.rows:
        return False
    ring = G.ring
    try:
        lhs = [ring.canon(a + b) for a, b in zip(G.apply(w.coeffs), R.apply(w.aux))]
        return lhs == [ring.canon(x) for x in v]
    except (TypeError, ValueError):
        return False
