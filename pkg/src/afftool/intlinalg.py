"""Exact integer matrices and lattices: HNF, SNF, kernels, saturation.

Column Hermite convention, fixed once: pivot rows strictly increase along
columns, entries above a pivot are zero, pivots are positive, and entries
left of a pivot (same row, earlier columns) are reduced into [0, pivot).
Nonzero columns come first. With this convention two lattices are equal
iff their stored bases are equal.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .intpoly import IntPoly


def _exgcd(a: int, b: int):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class IntMatrix:
    """Immutable arbitrary-precision integer matrix."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        r = tuple(tuple(int(x) for x in row) for row in rows)
        if not r or not r[0]:
            raise ValueError("matrix dimensions must be >= 1")
        w = len(r[0])
        if any(len(row) != w for row in r):
            raise ValueError("ragged rows")
        self.rows = r

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int) -> "IntMatrix":
        return cls([[0] * m for _ in range(n)])

    @classmethod
    def from_columns(cls, cols, n: int | None = None) -> "IntMatrix":
        cols = [list(c) for c in cols]
        if not cols:
            raise ValueError("need at least one column (use zeros for none)")
        n = len(cols[0]) if n is None else n
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @classmethod
    def companion(cls, p: IntPoly) -> "IntMatrix":
        """Companion matrix of a monic polynomial of degree >= 1."""
        if not p.is_monic() or p.degree < 1:
            raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
        n = p.degree
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = 1
        for i in range(n):
            rows[i][n - 1] = -p[i]
        return cls(rows)

    # -- shape / access ----------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        ocols = list(zip(*other.rows))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ocols] for row in self.rows]
        )

    def apply(self, vec):
        """Matrix times integer column vector."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.rows)

    def __pow__(self, k: int) -> "IntMatrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse_unimodular() ** (-k)
        out = IntMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.rows)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.nrows))

    def is_identity(self) -> bool:
        return self.is_square() and self == IntMatrix.identity(self.nrows)

    def is_zero(self) -> bool:
        return all(all(a == 0 for a in r) for r in self.rows)

    # -- exact invariants ----------------------------------------------------

    def charpoly(self) -> IntPoly:
        """Monic characteristic polynomial det(xI - A), Faddeev-LeVerrier.

        Fraction-free: every trace division is exact over Z.
        """
        if not self.is_square():
            raise ValueError("charpoly of a non-square matrix")
        n = self.nrows
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        m = IntMatrix.identity(n)
        for k in range(1, n + 1):
            nmat = self * m
            t = nmat.trace()
            if t % k != 0:
                raise ArithmeticError("Faddeev-LeVerrier trace division not exact")
            c = -(t // k)
            coeffs[n - k] = c
            if k < n:
                m = nmat + IntMatrix.identity(n).scale(c)
        return IntPoly(coeffs)

    def det(self) -> int:
        p = self.charpoly()
        n = self.nrows
        return (-1) ** n * p[0]

    def is_unimodular(self) -> bool:
        return self.is_square() and abs(self.det()) == 1

    def to_fractions(self):
        return [[Fraction(a) for a in row] for row in self.rows]

    def inverse_unimodular(self) -> "IntMatrix":
        """Exact integer inverse; requires |det| = 1."""
        inv = rat_inverse(self.to_fractions())
        out = []
        for row in inv:
            irow = []
            for a in row:
                if a.denominator != 1:
                    raise ValueError("matrix is not unimodular")
                irow.append(int(a))
            out.append(irow)
        return IntMatrix(out)

    def poly_eval(self, p: IntPoly) -> "IntMatrix":
        """p(A) by Horner."""
        if not self.is_square():
            raise ValueError("polynomial of a non-square matrix")
        n = self.nrows
        out = IntMatrix.zeros(n, n)
        for c in reversed(p.coeffs):
            out = out * self + IntMatrix.identity(n).scale(c)
        return out

    def stack_columns(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row-count mismatch")
        return IntMatrix([list(r1) + list(r2) for r1, r2 in zip(self.rows, other.rows)])

    def submatrix(self, rows, cols) -> "IntMatrix":
        return IntMatrix([[self.rows[i][j] for j in cols] for i in rows])


# -- rational helpers (list-of-list Fractions) -------------------------------


def rat_matmul(a, b):
    bc = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bc] for row in a]


def rat_identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def rat_inverse(a):
    """Gauss-Jordan inverse over Q; raises on singular input."""
    n = len(a)
    aug = [list(row) + list(ident) for row, ident in zip(a, rat_identity(n))]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def rat_rank(a):
    if not a:
        return 0
    m = [list(row) for row in a]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def rat_solve(a, b):
    """Solve a x = b over Q (a square, invertible). b is a list of Fractions."""
    inv = rat_inverse(a)
    return [sum(x * y for x, y in zip(row, b)) for row in inv]


def rat_nullspace(a):
    """Basis (list of Fraction column vectors) of the right kernel of a."""
    if not a:
        return []
    m = [list(row) for row in a]
    nrows, ncols = len(m), len(m[0])
    pivots = {}
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots[col] = row
        row += 1
        if row == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for pc, pr in pivots.items():
            v[pc] = -m[pr][fc]
        basis.append(v)
    return basis


# -- Hermite / Smith normal forms -------------------------------------------


def hnf(m: IntMatrix):
    """Column Hermite normal form: returns (H, U) with H = M*U, |det U| = 1.

    H follows the module convention; zero columns trail.
    """
    nrows, ncols = m.nrows, m.ncols
    h = [list(row) for row in m.rows]
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def colop2(c1, c2, a, b, c, d):
        # (col c1, col c2) <- (a*col c1 + c*col c2, b*col c1 + d*col c2)
        for mat, nr in ((h, nrows), (u, ncols)):
            for i in range(nr):
                x, y = mat[i][c1], mat[i][c2]
                mat[i][c1] = a * x + c * y
                mat[i][c2] = b * x + d * y

    def addmul(dst, src, q):
        # col dst -= q * col src
        for mat, nr in ((h, nrows), (u, ncols)):
            for i in range(nr):
                mat[i][dst] -= q * mat[i][src]

    c = 0
    for row in range(nrows):
        if c >= ncols:
            break
        for j in range(c + 1, ncols):
            if h[row][j] == 0:
                continue
            a, b = h[row][c], h[row][j]
            g, s, t = _exgcd(a, b)
            # unimodular: [[s, -b//g], [t, a//g]] sends (a, b) -> (g, 0)
            colop2(c, j, s, -b // g, t, a // g)
        if h[row][c] == 0:
            continue
        if h[row][c] < 0:
            for i in range(nrows):
                h[i][c] = -h[i][c]
            for i in range(ncols):
                u[i][c] = -u[i][c]
        piv = h[row][c]
        for j in range(c):
            q = h[row][j] // piv
            if q:
                addmul(j, c, q)
        c += 1
    return IntMatrix(h), IntMatrix(u)


def snf(m: IntMatrix):
    """Smith normal form: returns (D, P, Q) with P*M*Q = D, P and Q unimodular,
    D diagonal with nonnegative entries d_1 | d_2 | ..."""
    nrows, ncols = m.nrows, m.ncols
    d = [list(row) for row in m.rows]
    p = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    q = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def rowop2(r1, r2, a, b, c, dd):
        for mat in (d, p):
            x = mat[r1][:]
            y = mat[r2][:]
            mat[r1] = [a * xi + b * yi for xi, yi in zip(x, y)]
            mat[r2] = [c * xi + dd * yi for xi, yi in zip(x, y)]

    def colop2(c1, c2, a, b, c, dd):
        for mat, nr in ((d, nrows), (q, ncols)):
            for i in range(nr):
                x, y = mat[i][c1], mat[i][c2]
                mat[i][c1] = a * x + c * y
                mat[i][c2] = b * x + dd * y

    def swap_rows(r1, r2):
        for mat in (d, p):
            mat[r1], mat[r2] = mat[r2], mat[r1]

    def swap_cols(c1, c2):
        for mat, nr in ((d, nrows), (q, ncols)):
            for i in range(nr):
                mat[i][c1], mat[i][c2] = mat[i][c2], mat[i][c1]

    def negate_row(r):
        for mat in (d, p):
            mat[r] = [-x for x in mat[r]]

    for s in range(min(nrows, ncols)):
        while True:
            # locate a minimal-magnitude nonzero entry in the trailing block
            best = None
            for i in range(s, nrows):
                for j in range(s, ncols):
                    v = abs(d[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, bi, bj = best
            if bi != s:
                swap_rows(s, bi)
            if bj != s:
                swap_cols(s, bj)
            if d[s][s] < 0:
                negate_row(s)
            # clear column s
            for i in range(s + 1, nrows):
                if d[i][s]:
                    a, b = d[s][s], d[i][s]
                    g, x, y = _exgcd(a, b)
                    rowop2(s, i, x, y, -b // g, a // g)
            # clear row s
            for j in range(s + 1, ncols):
                if d[s][j]:
                    a, b = d[s][s], d[s][j]
                    g, x, y = _exgcd(a, b)
                    colop2(s, j, x, -b // g, y, a // g)
            if all(d[i][s] == 0 for i in range(s + 1, nrows)) and all(
                d[s][j] == 0 for j in range(s + 1, ncols)
            ):
                # enforce divisibility of the trailing block by the pivot
                piv = d[s][s]
                bad = None
                if piv:
                    for i in range(s + 1, nrows):
                        for j in range(s + 1, ncols):
                            if d[i][j] % piv:
                                bad = i
                                break
                        if bad is not None:
                            break
                if bad is None:
                    break
                rowop2(s, bad, 1, 1, 0, 1)  # row s += row bad, then re-clear
    return IntMatrix(d), IntMatrix(p), IntMatrix(q)


def int_rank(m: IntMatrix) -> int:
    h, _ = hnf(m)
    return sum(1 for j in range(h.ncols) if any(h[i, j] != 0 for i in range(h.nrows)))


# -- lattices ----------------------------------------------------------------


class IntLattice:
    """Sublattice of Z^n stored by its unique column-HNF basis (no zero columns).

    rank 0 is represented with basis None.
    """

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, basis: IntMatrix | None):
        if ambient < 1:
            raise ValueError("ambient dimension must be >= 1")
        self.ambient = ambient
        if basis is not None and basis.nrows != ambient:
            raise ValueError("basis row count does not match ambient dimension")
        self.basis = basis

    @classmethod
    def from_generators(cls, ambient: int, gens) -> "IntLattice":
        """Lattice generated by integer vectors (canonicalized via HNF)."""
        gens = [tuple(int(x) for x in g) for g in gens if any(g)]
        if not gens:
            return cls(ambient, None)
        m = IntMatrix.from_columns(gens, n=ambient)
        h, _ = hnf(m)
        cols = [h.column(j) for j in range(h.ncols) if any(h.column(j))]
        if not cols:
            return cls(ambient, None)
        return cls(ambient, IntMatrix.from_columns(cols, n=ambient))

    @classmethod
    def zero(cls, ambient: int) -> "IntLattice":
        return cls(ambient, None)

    @classmethod
    def full(cls, ambient: int) -> "IntLattice":
        return cls(ambient, IntMatrix.identity(ambient))

    @property
    def rank(self) -> int:
        return 0 if self.basis is None else self.basis.ncols

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntLattice)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        cols = [] if self.basis is None else self.basis.columns()
        return f"IntLattice(Z^{self.ambient}, cols={[list(c) for c in cols]})"

    def basis_vectors(self):
        return [] if self.basis is None else self.basis.columns()

    def coordinates_of(self, vec):
        """Integer coordinates of vec in the basis, or None if not in the lattice."""
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.ambient:
            raise ValueError("vector dimension mismatch")
        if self.basis is None:
            return () if all(x == 0 for x in vec) else None
        b = self.basis
        r = b.ncols
        coords = [0] * r
        rem = list(vec)
        # pivot rows strictly increase along columns in HNF
        for j in range(r):
            prow = next(i for i in range(b.nrows) if b[i, j] != 0)
            piv = b[prow, j]
            if rem[prow] % piv != 0:
                return None
            c = rem[prow] // piv
            coords[j] = c
            if c:
                for i in range(b.nrows):
                    rem[i] -= c * b[i, j]
        if any(rem):
            return None
        return tuple(coords)

    def contains(self, vec) -> bool:
        return self.coordinates_of(vec) is not None

    def contains_lattice(self, other: "IntLattice") -> bool:
        return all(self.contains(v) for v in other.basis_vectors())

    def saturate(self) -> "IntLattice":
        """(L tensor Q) intersected with Z^n; idempotent."""
        if self.basis is None:
            return self
        d, p, _ = snf(self.basis)
        r = self.rank
        pinv = p.inverse_unimodular()
        cols = [pinv.column(j) for j in range(r)]
        return IntLattice.from_generators(self.ambient, cols)

    def is_saturated(self) -> bool:
        return self == self.saturate()

    def sum(self, other: "IntLattice") -> "IntLattice":
        return IntLattice.from_generators(
            self.ambient, self.basis_vectors() + other.basis_vectors()
        )

    def intersect(self, other: "IntLattice") -> "IntLattice":
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        if self.basis is None or other.basis is None:
            return IntLattice.zero(self.ambient)
        stacked = self.basis.stack_columns(other.basis.scale(-1))
        ker = kernel_lattice(stacked)
        cols = []
        for v in ker.basis_vectors():
            x = v[: self.rank]
            cols.append(self.basis.apply(x))
        return IntLattice.from_generators(self.ambient, cols)

    def index_of_sublattice(self, sub: "IntLattice") -> int:
        """[self : sub] for a finite-index sublattice (equal ranks)."""
        if sub.rank != self.rank:
            raise ValueError("index only defined for equal-rank sublattices")
        if self.rank == 0:
            return 1
        coords = [self.coordinates_of(v) for v in sub.basis_vectors()]
        if any(c is None for c in coords):
            raise ValueError("not a sublattice")
        c = IntMatrix.from_columns(coords, n=self.rank)
        return abs(c.det())

    def restriction_matrix(self, a: IntMatrix) -> IntMatrix:
        """Matrix of A restricted to the lattice, in basis coordinates.

        Requires A * L within L.
        """
        if self.basis is None:
            raise ValueError("restriction to the zero lattice")
        cols = []
        for v in self.basis_vectors():
            w = a.apply(v)
            c = self.coordinates_of(w)
            if c is None:
                raise ValueError("lattice is not invariant under the matrix")
            cols.append(c)
        return IntMatrix.from_columns(cols, n=self.rank)

    def is_invariant_under(self, a: IntMatrix) -> bool:
        return all(self.contains(a.apply(v)) for v in self.basis_vectors())

    def scaled(self, c: int) -> "IntLattice":
        if self.basis is None:
            return self
        return IntLattice.from_generators(
            self.ambient, [tuple(c * x for x in v) for v in self.basis_vectors()]
        )


def kernel_lattice(m: IntMatrix) -> IntLattice:
    """Saturated lattice {k in Z^m : M k = 0} via the SNF transform."""
    d, _, q = snf(m)
    rank = sum(
        1 for i in range(min(m.nrows, m.ncols)) if d[i, i] != 0
    )
    cols = [q.column(j) for j in range(rank, m.ncols)]
    return IntLattice.from_generators(m.ncols, cols)


def image_lattice(m: IntMatrix) -> IntLattice:
    """Lattice generated by the columns of M (not saturated in general)."""
    return IntLattice.from_generators(m.nrows, m.columns())


def complete_basis(lat: IntLattice) -> IntMatrix:
    """Unimodular n x n matrix whose first r columns are the lattice basis.

    Requires a saturated lattice. Built from the column-HNF transform of the
    transposed basis: for saturated S, U^T S = [[I],[0]], so (U^T)^{-1} is a
    completion carrying S in its leading columns.
    """
    n = lat.ambient
    if lat.basis is None:
        return IntMatrix.identity(n)
    s = lat.basis
    r = s.ncols
    h, u = hnf(s.transpose())
    t = h.submatrix(range(r), range(r))
    if not t.is_identity():
        raise ValueError("basis completion requires a saturated lattice")
    w = u.transpose()
    v = w.inverse_unimodular()
    if v.submatrix(range(n), range(r)) != s:
        raise AssertionError("completion does not reproduce the basis")
    return v


def solve_congruence_lattice(g, n_mod):
    """Solution lattice of g . y = 0 (mod n_mod) in Z^len(g).

    g is an integer row; returns the full-rank lattice of solutions.
    """
    r = len(g)
    m = IntMatrix([list(g) + [int(n_mod)]])
    ker = kernel_lattice(m)
    cols = [v[:r] for v in ker.basis_vectors()]
    return IntLattice.from_generators(r, cols)


def gcd_vector(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    return g


def primitive_vector(v):
    g = gcd_vector(v)
    if g in (0, 1):
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)
