"""Rational normal form, similarity testing, nilpotent Jordan form.

Everything here uses field operations only: Krylov chains, Gaussian
elimination and polynomial gcds.  No factoring, no root finding, so the
results are exact over the rationals and over GF(p) alike.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionError,
    InternalInvariantError,
    MixedFieldError,
    NotNilpotentError,
)
from .linalg import (
    Mat,
    SpanTracker,
    Vec,
    block_diag,
    companion,
    column_space_basis,
    complete_to_basis,
    eval_poly_vec,
    inverse,
    kernel_basis,
    rank,
    solve,
)
from .minpoly import min_poly_vector
from .poly import Poly

__all__ = [
    "RnfResult",
    "JnfResult",
    "rnf",
    "invariant_factors",
    "char_poly",
    "is_similar",
    "nilpotent_jnf",
]


@dataclass
class RnfResult:
    """Invariant factors with the change of basis that exhibits them.

    factors[0] is the minimal polynomial; each later factor divides the
    previous one; the degrees sum to n.  rnf is the block-diagonal
    matrix of companion blocks and transform satisfies
    inverse(transform) * A * transform == rnf exactly.
    """

    factors: list[Poly]
    rnf: Mat
    transform: Mat

    @property
    def block_count(self) -> int:
        return len(self.factors)


@dataclass
class JnfResult:
    """Jordan data of a nilpotent matrix.

    partition lists the Jordan block sizes in descending order; jnf is
    the block-diagonal nilpotent Jordan matrix (ones on the subdiagonal,
    matching the companion-block convention); transform conjugates the
    input onto it.
    """

    partition: list[int]
    jnf: Mat
    transform: Mat


def _conjugate(work: Mat, step: Mat) -> Mat:
    return inverse(step) * work * step


def _embed(off: int, inner: Mat) -> Mat:
    if off == 0:
        return inner
    return block_diag([Mat.identity(inner.field, off), inner])


def _clear_couplings(sub: Mat, chain: list[Poly]) -> Mat:
    """Basis change killing the couplings above the leading companion block.

    `sub` is block upper triangular: companion(chain[0]) in the top-left
    corner, the exact companion-block diagonal for chain[1:] below, and
    junk only in the leading block row.  The returned matrix is unit
    upper triangular; conjugating by it makes `sub` block diagonal.

    Works because e_1 is cyclic for the leading block: its Krylov chain
    reads off coordinates, so the top segment of P_i(sub) * v_i *is* the
    coefficient vector of a polynomial h_i, and block i's own factor P_i
    divides h_i exactly; subtracting (h_i / P_i)(sub) * e_1 from v_i
    then decouples block i.
    """
    K = sub.field
    m = sub.nrows
    head = chain[0].degree
    cols: list[Vec] = []
    lead = Vec.basis(K, m, 0)
    w = lead
    for _ in range(head):
        cols.append(w)
        w = sub * w
    off = head
    for factor in chain[1:]:
        v = Vec.basis(K, m, off)
        image = eval_poly_vec(factor, sub, v)
        if not all(K.is_zero(x) for x in image.entries[head:]):
            raise InternalInvariantError("coupling image leaks past the leading block")
        carried = Poly(K, image.entries[:head])
        quotient, remainder = divmod(carried, factor)
        if not remainder.is_zero:
            raise InternalInvariantError("coupling polynomial is not divisible")
        w = v - eval_poly_vec(quotient, sub, lead)
        for _ in range(factor.degree):
            cols.append(w)
            w = sub * w
        off += factor.degree
    out = Mat.from_cols(K, cols, m)
    for i in range(m):
        if not K.eq(out.data[i][i], K.one):
            raise InternalInvariantError("basis change is not unit triangular")
        for j in range(i):
            if not K.is_zero(out.data[i][j]):
                raise InternalInvariantError("basis change is not upper triangular")
    return out


def rnf(a: Mat) -> RnfResult:
    """Rational normal form R plus a transform T with T^-1 A T = R.

    Peels one companion block at a time: find a vector realizing the
    minimal polynomial of the trailing submatrix, extend its Krylov
    chain to a basis, conjugate, and continue on what remains.  The
    trailing submatrix is then block diagonalized innermost-first by
    clearing the couplings above each leading block.
    """
    if not a.is_square:
        raise DimensionError("matrix must be square")
    n = a.nrows
    if n == 0:
        raise ValueError("empty matrix has no rational normal form")
    K = a.field
    total = Mat.identity(K, n)
    work = a
    factors: list[Poly] = []
    offsets: list[int] = []
    off = 0
    while off < n:
        sub = work.block(off, off, n - off, n - off)
        ann = min_poly_vector(sub)
        step = _embed(off, complete_to_basis(K, ann.krylov, n - off))
        work = _conjugate(work, step)
        total = total * step
        factors.append(ann.mu)
        offsets.append(off)
        off += ann.mu.degree
    for earlier, later in zip(factors, factors[1:]):
        if not later.divides(earlier):
            raise InternalInvariantError("invariant factor chain broken")
    for j in range(len(factors) - 2, -1, -1):
        o = offsets[j]
        sub = work.block(o, o, n - o, n - o)
        step = _embed(o, _clear_couplings(sub, factors[j:]))
        work = _conjugate(work, step)
        total = total * step
    form = block_diag([companion(f) for f in factors])
    if work != form:
        raise InternalInvariantError("conjugated matrix is not the expected form")
    return RnfResult(factors=factors, rnf=form, transform=total)


def invariant_factors(a: Mat) -> list[Poly]:
    """The invariant factor list -- a complete similarity invariant."""
    return rnf(a).factors


def char_poly(a: Mat) -> Poly:
    """Characteristic polynomial as the product of the invariant factors.

    Rational operations only; the cofactor determinant stays a test
    oracle.
    """
    result = rnf(a)
    out = Poly.one(a.field)
    for f in result.factors:
        out = out * f
    return out


def is_similar(a: Mat, b: Mat, *, witness: bool = False):
    """Decide similarity by comparing invariant factors.

    With witness=True returns (similar, S) where S is invertible with
    A S = S B when similar (None otherwise); the witness equation is
    checked exactly before returning.
    """
    if not a.is_square or not b.is_square:
        raise DimensionError("similarity is defined for square matrices")
    if a.nrows != b.nrows:
        raise DimensionError("matrices differ in size")
    if a.field != b.field:
        raise MixedFieldError("matrices over different fields")
    ra = rnf(a)
    rb = rnf(b)
    same = ra.factors == rb.factors
    if not witness:
        return same
    if not same:
        return False, None
    s = ra.transform * inverse(rb.transform)
    if a * s != s * b:
        raise InternalInvariantError("similarity witness fails A*S = S*B")
    return True, s


def _intersect_spans(u: list[Vec], w: list[Vec], K, n: int) -> list[Vec]:
    """Basis of span(u) n span(w) for independent input families.

    Each kernel relation of the stacked columns [u | w] pins one
    intersection vector through its u-part; independence of u and of w
    separately makes those vectors a basis.
    """
    if not u or not w:
        return []
    combined = Mat.from_cols(K, list(u) + list(w), n)
    out = []
    for rel in kernel_basis(combined):
        v = [K.zero] * n
        for j, c in enumerate(rel.entries[: len(u)]):
            if K.is_zero(c):
                continue
            for i in range(n):
                v[i] = K.add(v[i], K.mul(c, u[j].entries[i]))
        out.append(Vec(K, v))
    return out


def nilpotent_jnf(a: Mat) -> JnfResult:
    """Jordan normal form of a nilpotent matrix via the kernel staircase.

    Let r be the largest exponent with A^r != 0.  Inside ker A the chain
    ker A n im A^r c ... c ker A n im A c ker A is saturated level by
    level; each new kernel vector found at level i is pulled back
    through A^i and its chain y, Ay, ..., A^i y contributes one Jordan
    block of size i+1.  Longer chains come first, so the partition is
    descending.
    """
    if not a.is_square:
        raise DimensionError("matrix must be square")
    n = a.nrows
    if n == 0:
        raise ValueError("empty matrix has no Jordan form")
    K = a.field
    powers = [Mat.identity(K, n)]
    while not powers[-1].is_zero and len(powers) <= n:
        powers.append(powers[-1] * a)
    if not powers[-1].is_zero:
        raise NotNilpotentError("matrix is not nilpotent")
    index = len(powers) - 1  # smallest exponent with A^index = 0
    kernel = kernel_basis(a)
    levels: list[tuple[int, list[Vec]]] = []
    for i in range(index - 1, 0, -1):
        levels.append((i, _intersect_spans(kernel, column_space_basis(powers[i]), K, n)))
    levels.append((0, kernel))
    tracker = SpanTracker(K, n)
    chains: list[tuple[int, Vec]] = []
    for depth, basis in levels:
        for v in basis:
            if tracker.try_add(v.entries):
                chains.append((depth, v))
    partition: list[int] = []
    cols: list[Vec] = []
    for depth, bottom in chains:
        top = bottom if depth == 0 else solve(powers[depth], bottom)
        if top is None:
            raise InternalInvariantError("kernel vector has no preimage")
        partition.append(depth + 1)
        w = top
        for _ in range(depth + 1):
            cols.append(w)
            w = a * w
    if sum(partition) != n:
        raise InternalInvariantError("chain lengths do not fill the space")
    transform = Mat.from_cols(K, cols, n)
    jordan = block_diag([companion(Poly.monomial(K, s)) for s in partition])
    if a * transform != transform * jordan or rank(transform) != n:
        raise InternalInvariantError("staircase basis does not conjugate onto the form")
    return JnfResult(partition=partition, jnf=jordan, transform=transform)
