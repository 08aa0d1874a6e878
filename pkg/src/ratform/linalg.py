"""Dense exact matrices and vectors with Gaussian elimination.

Vectors are columns: ``A * v`` applies A on the left, so ``A * e_j``
reads off column j.  All operations return new objects; elimination
routines mutate only private working copies, so values are safe to
share across threads.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DimensionError, MixedFieldError, SingularMatrixError
from .field import Field
from .poly import Poly

__all__ = [
    "Vec",
    "Mat",
    "Rref",
    "SpanTracker",
    "rref",
    "rank",
    "inverse",
    "kernel_basis",
    "solve",
    "column_space_basis",
    "complete_to_basis",
    "companion",
    "block_diag",
    "eval_poly",
    "eval_poly_vec",
    "char_poly_oracle",
]


class Vec:
    """A column vector over an exact field."""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries):
        self.field = field
        self.entries = list(entries)

    @classmethod
    def zeros(cls, field: Field, n: int) -> "Vec":
        return cls(field, [field.zero] * n)

    @classmethod
    def basis(cls, field: Field, n: int, i: int) -> "Vec":
        e = [field.zero] * n
        e[i] = field.one
        return cls(field, e)

    @classmethod
    def from_ints(cls, field: Field, ints) -> "Vec":
        return cls(field, [field.from_int(k) for k in ints])

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def _require_compatible(self, other: "Vec") -> None:
        if self.field != other.field:
            raise MixedFieldError("vectors over different fields")
        if len(self.entries) != len(other.entries):
            raise DimensionError("vector lengths differ")

    def __add__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        self._require_compatible(other)
        K = self.field
        return Vec(K, [K.add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        self._require_compatible(other)
        K = self.field
        return Vec(K, [K.sub(a, b) for a, b in zip(self.entries, other.entries)])

    @property
    def is_zero(self) -> bool:
        K = self.field
        return all(K.is_zero(a) for a in self.entries)

    def __repr__(self):
        K = self.field
        return "Vec[" + " ".join(K.format(a) for a in self.entries) + "]"


class Mat:
    """A dense rows x cols matrix over an exact field."""

    __slots__ = ("field", "nrows", "ncols", "data")

    def __init__(self, field: Field, data):
        rows = [list(r) for r in data]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.data = rows

    # -- constructors --

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        return cls(
            field,
            [[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
        )

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Mat":
        return cls(field, [[field.zero] * ncols for _ in range(nrows)])

    @classmethod
    def from_ints(cls, field: Field, rows) -> "Mat":
        return cls(field, [[field.from_int(k) for k in row] for row in rows])

    @classmethod
    def from_cols(cls, field: Field, cols, nrows: int) -> "Mat":
        data = [[field.zero] * len(cols) for _ in range(nrows)]
        for j, col in enumerate(cols):
            entries = col.entries if isinstance(col, Vec) else list(col)
            if len(entries) != nrows:
                raise DimensionError("column of wrong length")
            for i, a in enumerate(entries):
                data[i][j] = a
        return cls(field, data)

    # -- structure --

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i: int) -> Vec:
        return Vec(self.field, self.data[i])

    def col(self, j: int) -> Vec:
        return Vec(self.field, [self.data[i][j] for i in range(self.nrows)])

    def block(self, r0: int, c0: int, nrows: int, ncols: int) -> "Mat":
        return Mat(
            self.field, [self.data[r0 + i][c0 : c0 + ncols] for i in range(nrows)]
        )

    def transpose(self) -> "Mat":
        return Mat(self.field, [list(col) for col in zip(*self.data)] if self.data else [])

    def _require_same_field(self, other) -> None:
        if self.field != other.field:
            raise MixedFieldError("operands over different fields")

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.data == other.data
        )

    # -- arithmetic --

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._require_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("matrix shapes differ")
        K = self.field
        return Mat(
            K,
            [
                [K.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._require_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("matrix shapes differ")
        K = self.field
        return Mat(
            K,
            [
                [K.sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __neg__(self):
        K = self.field
        return Mat(K, [[K.neg(a) for a in row] for row in self.data])

    def __mul__(self, other):
        K = self.field
        if isinstance(other, Mat):
            self._require_same_field(other)
            if self.ncols != other.nrows:
                raise DimensionError(
                    f"cannot multiply {self.nrows}x{self.ncols} by "
                    f"{other.nrows}x{other.ncols}"
                )
            bcols = [[other.data[i][j] for i in range(other.nrows)] for j in range(other.ncols)]
            return Mat(
                K, [[K.dot(row, bc) for bc in bcols] for row in self.data]
            )
        if isinstance(other, Vec):
            self._require_same_field(other)
            if self.ncols != len(other.entries):
                raise DimensionError("matrix-vector size mismatch")
            return Vec(K, [K.dot(row, other.entries) for row in self.data])
        return NotImplemented

    def __pow__(self, e: int):
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Mat.identity(self.field, self.nrows)
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    @property
    def is_zero(self) -> bool:
        K = self.field
        return all(K.is_zero(a) for row in self.data for a in row)

    def __str__(self):
        K = self.field
        return "\n".join(" ".join(K.format(a) for a in row) for row in self.data)

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols} over {self.field.describe()})"


def _require_square(a: Mat) -> None:
    if not a.is_square:
        raise DimensionError(f"matrix is {a.nrows}x{a.ncols}, not square")


class Rref(NamedTuple):
    matrix: Mat
    pivots: list
    rank: int


def _bit_size(x) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def rref(a: Mat, prefer_small_pivots: bool = False) -> Rref:
    """Reduced row echelon form with pivot column indices.

    Pivoting picks the first non-zero entry in column order; arithmetic
    is exact, so no magnitude-based pivoting is needed and the result is
    deterministic.  Over the rationals, `prefer_small_pivots` instead
    picks the candidate with the smallest bit size (first on ties) --
    a performance toggle only, since the reduced form is unique either
    way.
    """
    K = a.field
    small = prefer_small_pivots and K.kind == "rational"
    m = [list(row) for row in a.data]
    nrows, ncols = a.nrows, a.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not K.is_zero(m[i][c]):
                if pivot_row is None or (
                    small and _bit_size(m[i][c]) < _bit_size(m[pivot_row][c])
                ):
                    pivot_row = i
                if not small:
                    break
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        piv_inv = K.inv(m[r][c])
        m[r] = [K.mul(piv_inv, x) for x in m[r]]
        for i in range(nrows):
            if i == r or K.is_zero(m[i][c]):
                continue
            f = m[i][c]
            m[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Rref(Mat(K, m), pivots, len(pivots))


def rank(a: Mat) -> int:
    return rref(a).rank


def inverse(a: Mat) -> Mat:
    """Exact inverse via Gauss-Jordan on [A | I]."""
    _require_square(a)
    K = a.field
    n = a.nrows
    aug = Mat(
        K,
        [
            row + [K.one if i == j else K.zero for j in range(n)]
            for i, row in enumerate(a.data)
        ],
    )
    reduced, pivots, rk = rref(aug)
    if rk < n or pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return reduced.block(0, n, n, n)


def kernel_basis(a: Mat) -> list[Vec]:
    """Exact basis of the null space; empty iff the matrix is injective."""
    K = a.field
    reduced, pivots, _ = rref(a)
    pivot_set = set(pivots)
    basis = []
    for c in range(a.ncols):
        if c in pivot_set:
            continue
        v = [K.zero] * a.ncols
        v[c] = K.one
        for r, pc in enumerate(pivots):
            v[pc] = K.neg(reduced.data[r][c])
        basis.append(Vec(K, v))
    return basis


def solve(a: Mat, b: Vec):
    """One exact solution of A x = b, or None if the system is inconsistent.

    Free variables are set to zero, so the particular solution is
    deterministic.
    """
    if len(b.entries) != a.nrows:
        raise DimensionError("right-hand side has wrong length")
    K = a.field
    aug = Mat(K, [row + [b.entries[i]] for i, row in enumerate(a.data)])
    reduced, pivots, _ = rref(aug)
    if pivots and pivots[-1] == a.ncols:
        return None
    x = [K.zero] * a.ncols
    for r, pc in enumerate(pivots):
        x[pc] = reduced.data[r][a.ncols]
    return Vec(K, x)


def column_space_basis(a: Mat) -> list[Vec]:
    """The original columns at the pivot positions of the rref."""
    _, pivots, _ = rref(a)
    return [a.col(j) for j in pivots]


class SpanTracker:
    """Incrementally row-reduced set of vectors for independence tests.

    Rows are kept mutually reduced with unit pivots, so testing a new
    vector is a single pass costing O(dim * rank) field operations.
    """

    __slots__ = ("field", "dim", "rows")

    def __init__(self, field: Field, dim: int):
        self.field = field
        self.dim = dim
        self.rows: list[tuple[int, list]] = []  # (pivot index, reduced row)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def residual(self, entries) -> list:
        K = self.field
        v = list(entries)
        for piv, row in self.rows:
            c = v[piv]
            if K.is_zero(c):
                continue
            v = [K.sub(x, K.mul(c, y)) for x, y in zip(v, row)]
        return v

    def contains(self, entries) -> bool:
        K = self.field
        return all(K.is_zero(x) for x in self.residual(entries))

    def try_add(self, entries) -> bool:
        """Add the vector if it enlarges the span; report whether it did."""
        K = self.field
        v = self.residual(entries)
        pivot = None
        for i, x in enumerate(v):
            if not K.is_zero(x):
                pivot = i
                break
        if pivot is None:
            return False
        s = K.inv(v[pivot])
        v = [K.mul(s, x) for x in v]
        for k, (piv, row) in enumerate(self.rows):
            c = row[pivot]
            if not K.is_zero(c):
                self.rows[k] = (piv, [K.sub(x, K.mul(c, y)) for x, y in zip(row, v)])
        self.rows.append((pivot, v))
        return True


def complete_to_basis(field: Field, vectors: list[Vec], n: int) -> Mat:
    """Extend independent columns to a basis with canonical basis vectors.

    The inputs come first, in order; then e_1, e_2, ... are scanned in
    index order and appended whenever one enlarges the span, which makes
    the completion deterministic.
    """
    tracker = SpanTracker(field, n)
    cols: list[Vec] = []
    for v in vectors:
        if len(v.entries) != n:
            raise DimensionError("vector of wrong length")
        if not tracker.try_add(v.entries):
            raise ValueError("input vectors are linearly dependent")
        cols.append(v)
    for i in range(n):
        if len(cols) == n:
            break
        e = Vec.basis(field, n, i)
        if tracker.try_add(e.entries):
            cols.append(e)
    return Mat.from_cols(field, cols, n)


def companion(p: Poly) -> Mat:
    """Companion matrix of a monic polynomial, cyclic on e_1.

    Ones sit on the subdiagonal (B * e_j = e_{j+1} for j < deg p) and the
    last column holds the negated coefficients, so e_1 generates the full
    Krylov chain e_1, e_2, ..., e_deg.
    """
    K = p.field
    if p.is_zero or p.degree < 1:
        raise ValueError("companion matrix needs a non-constant polynomial")
    if not p.is_monic:
        raise ValueError("companion matrix needs a monic polynomial")
    d = p.degree
    m = [[K.zero] * d for _ in range(d)]
    for j in range(d - 1):
        m[j + 1][j] = K.one
    for i in range(d):
        m[i][d - 1] = K.neg(p.coeffs[i])
    return Mat(K, m)


def block_diag(blocks: list[Mat]) -> Mat:
    """Assemble square blocks along the diagonal."""
    if not blocks:
        raise ValueError("block_diag needs at least one block")
    K = blocks[0].field
    for b in blocks:
        if not b.is_square:
            raise DimensionError("blocks must be square")
        if b.field != K:
            raise MixedFieldError("blocks over different fields")
    n = sum(b.nrows for b in blocks)
    m = [[K.zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.nrows):
            m[off + i][off : off + b.nrows] = b.data[i]
        off += b.nrows
    return Mat(K, m)


def eval_poly(p: Poly, a: Mat) -> Mat:
    """Horner evaluation of a polynomial at a square matrix."""
    _require_square(a)
    if p.field != a.field:
        raise MixedFieldError("polynomial and matrix over different fields")
    K = a.field
    n = a.nrows
    result = Mat.zeros(K, n, n)
    first = True
    for c in reversed(p.coeffs):
        if not first:
            result = result * a
        first = False
        if not K.is_zero(c):
            result = Mat(
                K,
                [
                    [
                        K.add(result.data[i][j], c) if i == j else result.data[i][j]
                        for j in range(n)
                    ]
                    for i in range(n)
                ],
            )
    return result


def eval_poly_vec(p: Poly, a: Mat, v: Vec) -> Vec:
    """p(A) * v without forming p(A): Horner with matrix-vector products."""
    _require_square(a)
    if p.field != a.field or v.field != a.field:
        raise MixedFieldError("operands over different fields")
    if len(v.entries) != a.nrows:
        raise DimensionError("vector length does not match matrix size")
    K = a.field
    w = Vec.zeros(K, a.nrows)
    first = True
    for c in reversed(p.coeffs):
        if not first:
            w = a * w
        first = False
        if not K.is_zero(c):
            w = Vec(K, [K.add(x, K.mul(c, y)) for x, y in zip(w.entries, v.entries)])
    return w


def char_poly_oracle(a: Mat) -> Poly:
    """Characteristic polynomial det(X*I - A) by cofactor expansion.

    Test oracle only: factorial-flavored cost, capped at 8x8.  The
    expansion is memoized on the set of remaining columns, which keeps
    the 8x8 case fast while staying a straight determinant computation.
    """
    _require_square(a)
    n = a.nrows
    if n > 8:
        raise ValueError("cofactor oracle is limited to matrices up to 8x8")
    K = a.field
    if n == 0:
        return Poly.one(K)
    entries = [
        [
            Poly(K, [K.neg(a.data[i][j]), K.one])
            if i == j
            else Poly(K, [K.neg(a.data[i][j])])
            for j in range(n)
        ]
        for i in range(n)
    ]
    memo: dict[int, Poly] = {}

    def det(cols_mask: int) -> Poly:
        if cols_mask == 0:
            return Poly.one(K)
        cached = memo.get(cols_mask)
        if cached is not None:
            return cached
        r = n - bin(cols_mask).count("1")
        acc = Poly.zero(K)
        sign = 1
        mask = cols_mask
        while mask:
            low = mask & -mask
            j = low.bit_length() - 1
            term = entries[r][j] * det(cols_mask & ~low)
            acc = acc + term if sign > 0 else acc - term
            sign = -sign
            mask &= mask - 1
        memo[cols_mask] = acc
        return acc

    return det((1 << n) - 1)
