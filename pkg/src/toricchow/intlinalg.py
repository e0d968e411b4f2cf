"""
Exact integer linear algebra over arbitrary-precision Python ints.

Matrices are small (desk-scale fans), so everything is plain lists of ints;
there is no floating point anywhere in this module.

>>> snf([[2, 4], [6, 8]]).invariant_factors
(2, 4)
>>> str(cokernel([[1, 0, 1], [0, -1, 1], [-1, 0, 1], [0, 1, 1]]))
'Z/2 ⊕ Z'
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

INFINITE = math.inf

Vector = tuple  # tuple of ints


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        if not all(isinstance(x, int) for x in self.entries):
            raise TypeError("IntMatrix entries must be Python ints")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], rows: int) -> IntMatrix:
        return cls.from_rows(list(columns), cols=rows).transpose()

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls.from_rows(_eye(n), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def tolist(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

    T = property(transpose)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix.from_rows(
            [[_dot(self.row(i), c) for c in cols] for i in range(self.rows)],
            cols=other.cols,
        )

    def apply(self, v: Sequence[int]) -> Vector:
        return tuple(_dot(self.row(i), v) for i in range(self.rows))

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det(self.tolist())

    def rank(self) -> int:
        return rank(self)

    def __str__(self):
        return "\n".join("[" + " ".join(str(x) for x in self.row(i)) + "]" for i in range(self.rows))


def as_matrix(A, cols: int | None = None) -> IntMatrix:
    if isinstance(A, IntMatrix):
        return A
    return IntMatrix.from_rows(A, cols=cols)


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == S`` with U, V unimodular and S in Smith form."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    invariant_factors: tuple

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + sum of Z/t_i.

    Canonical form: torsion factors are all >= 2 and form a divisibility
    chain, so structural equality is isomorphism.
    """

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free_rank must be nonnegative")
        if any(t < 2 for t in self.torsion):
            raise ValueError(f"torsion factors must be >= 2: {self.torsion}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def from_factors(cls, free_rank: int, factors: Iterable[int]) -> AbelianGroup:
        """Canonicalize an arbitrary list of cyclic orders (0 means Z)."""
        factors = [abs(int(f)) for f in factors]
        free_rank += sum(1 for f in factors if f == 0)
        finite = [f for f in factors if f > 1]
        if not finite:
            return cls(free_rank, ())
        d = snf([[f if i == j else 0 for j in range(len(finite))] for i, f in enumerate(finite)])
        return cls(free_rank, tuple(t for t in d.invariant_factors if t > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order_of_torsion(self) -> int:
        return math.prod(self.torsion)

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " ⊕ ".join(parts) if parts else "0"


ZERO_GROUP = AbelianGroup(0, ())
Z = AbelianGroup(1, ())


def _eye(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _bareiss_det(M):
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _nearest_quotient(a: int, p: int) -> int:
    """q with |a - q*p| <= |p|/2."""
    q, r = divmod(a, p)
    if 2 * abs(r) > abs(p):
        q += 1
    return q


def snf(A) -> SmithDecomposition:
    """Smith normal form with transforms.

    Pivots are always the entry of least magnitude in the active block, and
    eliminations use nearest-integer quotients; both keep intermediate
    coefficients small.
    """
    A = as_matrix(A)
    m, n = A.shape
    S = A.tolist()
    U = _eye(m)
    V = _eye(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in S:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = S[i][j]
                if x and (best is None or abs(x) < abs(S[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = S[t][t]
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -_nearest_quotient(S[i][t], p))
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -_nearest_quotient(S[t][j], p))
            # remainders left behind are smaller than |p|: re-pivot on them
            best = None
            for i in range(t + 1, m):
                if S[i][t] and (best is None or abs(S[i][t]) < abs(best[2])):
                    best = ("r", i, S[i][t])
            for j in range(t + 1, n):
                if S[t][j] and (best is None or abs(S[t][j]) < abs(best[2])):
                    best = ("c", j, S[t][j])
            if best is not None:
                if best[0] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    factors = tuple(S[i][i] for i in range(t))
    return SmithDecomposition(
        U=IntMatrix.from_rows(U, cols=m),
        S=IntMatrix.from_rows(S, cols=n),
        V=IntMatrix.from_rows(V, cols=n),
        invariant_factors=factors,
    )


def hnf_with_transform(A) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form ``H = A @ V``.

    Convention: scanning rows top to bottom, each row that is independent of
    the rows above it gets a pivot in the next free column; pivots are
    positive, entries of the pivot row to the left of the pivot lie in
    ``[0, pivot)``, entries to the right are zero, and all columns past the
    rank are zero. The columns of H are the unique such basis of the lattice
    spanned by the columns of A.
    """
    A = as_matrix(A)
    m, n = A.shape
    H = A.tolist()
    V = _eye(n)

    def swap_cols(i, j):
        for M in (H, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_col(dst, src, q):
        for M in (H, V):
            for row in M:
                row[dst] += q * row[src]

    pc = 0
    for r in range(m):
        if pc == n:
            break
        while True:
            nz = [j for j in range(pc, n) if H[r][j]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(H[r][j]))
            swap_cols(pc, j0)
            if len(nz) == 1:
                break
            p = H[r][pc]
            for j in range(pc + 1, n):
                if H[r][j]:
                    add_col(j, pc, -_nearest_quotient(H[r][j], p))
        if H[r][pc] == 0:
            continue
        if H[r][pc] < 0:
            for M in (H, V):
                for row in M:
                    row[pc] = -row[pc]
        p = H[r][pc]
        for j in range(pc):
            q = H[r][j] // p
            if q:
                add_col(j, pc, -q)
        pc += 1
    return IntMatrix.from_rows(H, cols=n), IntMatrix.from_rows(V, cols=n)


def hnf(A) -> IntMatrix:
    return hnf_with_transform(A)[0]


def rank(A) -> int:
    A = as_matrix(A)
    if A.rows == 0 or A.cols == 0:
        return 0
    H = hnf(A)
    return sum(1 for j in range(H.cols) if any(H.column(j)))


def _canonical_basis(vectors: list, n: int) -> list:
    """HNF-canonical basis (as tuples) of the lattice spanned by ``vectors``."""
    if not vectors:
        return []
    H = hnf(IntMatrix.from_columns(vectors, rows=n))
    return [H.column(j) for j in range(H.cols) if any(H.column(j))]


def kernel_basis(A, cols: int | None = None) -> list:
    """Basis of the full integer kernel ``{w in Z^cols : A w = 0}``.

    The basis is the HNF-canonical one, so the output is deterministic.
    """
    A = as_matrix(A, cols=cols)
    H, V = hnf_with_transform(A)
    r = sum(1 for j in range(H.cols) if any(H.column(j)))
    return _canonical_basis([V.column(j) for j in range(r, A.cols)], A.cols)


def cokernel(A, cols: int | None = None) -> AbelianGroup:
    """``Z^rows / A(Z^cols)`` for the map given by the matrix A."""
    A = as_matrix(A, cols=cols)
    d = snf(A)
    return AbelianGroup(A.rows - d.rank, tuple(f for f in d.invariant_factors if f > 1))


def saturate(B: Sequence[Sequence[int]], n: int) -> list:
    """Basis of ``span_Q(B) ∩ Z^n``."""
    B = [tuple(v) for v in B]
    if not B:
        return []
    perp = kernel_basis(IntMatrix.from_rows(B, cols=n))
    return kernel_basis(IntMatrix.from_rows(perp, cols=n))


def lattice_index(vectors: Sequence[Sequence[int]], n: int):
    """``[Z^n : L]`` for the lattice L spanned by ``vectors``; INFINITE if rank < n."""
    vectors = [tuple(v) for v in vectors]
    if n == 0:
        return 1
    if not vectors:
        return INFINITE
    d = snf(IntMatrix.from_rows(vectors, cols=n))
    if d.rank < n:
        return INFINITE
    return math.prod(d.invariant_factors)


def is_unimodular(U: IntMatrix) -> bool:
    return U.rows == U.cols and abs(U.det()) == 1


def primitive(v: Sequence[int]) -> Vector:
    g = math.gcd(*v)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return tuple(x // g for x in v)


def xgcd_list(values: Sequence[int]) -> tuple[int, list]:
    """(g, c) with g = gcd(values) >= 0 and sum(c_i * values_i) = g."""
    g, coeffs = 0, []
    for i, a in enumerate(values):
        if i == 0:
            g, coeffs = abs(a), [1 if a >= 0 else -1]
            continue
        # extended Euclid on (g, a)
        old_r, r = g, a
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        g = old_r
        coeffs = [c * old_s for c in coeffs] + [old_t]
    return g, coeffs


def solve_in_lattice(basis: Sequence[Sequence[int]], target: Sequence[int]) -> tuple:
    """Integer coefficients c with ``sum(c_i * basis_i) == target``.

    ``basis`` must be linearly independent. Raises ValueError when target is
    outside the rational span or outside the lattice.
    """
    basis = [tuple(b) for b in basis]
    target = tuple(target)
    r, n = len(basis), len(target)
    # augmented system, one row per coordinate
    M = [[Fraction(basis[j][i]) for j in range(r)] + [Fraction(target[i])] for i in range(n)]
    pivots = []
    row = 0
    for col in range(r):
        piv = next((i for i in range(row, n) if M[i][col] != 0), None)
        if piv is None:
            raise ValueError("basis vectors are linearly dependent")
        M[row], M[piv] = M[piv], M[row]
        p = M[row][col]
        M[row] = [x / p for x in M[row]]
        for i in range(n):
            if i != row and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
    if any(M[i][r] != 0 for i in range(row, n)):
        raise ValueError("target is not in the span of the basis")
    coeffs = [M[i][r] for i in range(r)]
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("target is in the span but not in the lattice")
    return tuple(int(c) for c in coeffs)
