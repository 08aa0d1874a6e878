"""Minimal polynomials via Krylov sequences.

The minimal polynomial of a single vector x under A is found by growing
x, Ax, A^2 x, ... until the first linear dependence.  Vectors whose
minimal polynomials are P and Q can be combined into one whose minimal
polynomial is lcm(P, Q) using only gcd arithmetic, and iterating that
against canonical basis vectors produces a vector realizing the minimal
polynomial of the whole matrix -- no factoring, no eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, InternalInvariantError
from .linalg import Mat, SpanTracker, Vec, eval_poly_vec, solve
from .poly import Poly, poly_gcd, poly_lcm, split_gcd

__all__ = [
    "LocalAnnihilator",
    "local_min_poly",
    "combine_lcm_vector",
    "min_poly_vector",
    "min_poly",
]


@dataclass
class LocalAnnihilator:
    """A vector, its minimal polynomial under A, and its Krylov basis.

    mu is monic and non-constant, mu(A) * vector = 0, and the cached
    Krylov vectors vector, A*vector, ..., A^(deg mu - 1)*vector are
    linearly independent.
    """

    vector: Vec
    mu: Poly
    krylov: list[Vec]


def local_min_poly(a: Mat, x: Vec) -> LocalAnnihilator:
    """Minimal polynomial of the vector x under the matrix a.

    Grows the Krylov sequence one vector at a time against an
    incrementally reduced copy; at the first dependence
    A^m x = c_0 x + ... + c_{m-1} A^{m-1} x the result is
    X^m - c_{m-1} X^{m-1} - ... - c_0.
    """
    if not a.is_square:
        raise DimensionError("matrix must be square")
    if len(x.entries) != a.nrows:
        raise DimensionError("vector length does not match matrix size")
    if x.is_zero:
        raise ValueError("zero vector has no minimal polynomial")
    K = a.field
    tracker = SpanTracker(K, a.nrows)
    krylov: list[Vec] = []
    cur = x
    while tracker.try_add(cur.entries):
        krylov.append(cur)
        cur = a * cur
    m = len(krylov)
    coeffs = solve(Mat.from_cols(K, krylov, a.nrows), cur)
    if coeffs is None:
        raise InternalInvariantError("dependent Krylov vector has no representation")
    mu = Poly(K, [K.neg(c) for c in coeffs.entries] + [K.one])
    return LocalAnnihilator(vector=x, mu=mu, krylov=krylov)


def combine_lcm_vector(
    a: Mat, lx: LocalAnnihilator, ly: LocalAnnihilator
) -> LocalAnnihilator:
    """A vector whose minimal polynomial is lcm of the two inputs'.

    If one minimal polynomial divides the other, the dominating input is
    returned unchanged.  If they are coprime, the sum of the vectors
    works.  Otherwise gcd splitting gives G = h*k and the combination
    h(A)x + k(A)y realizes the lcm.  The result is recomputed from
    scratch and checked against lcm(P, Q); a mismatch means a bug, never
    bad input.
    """
    p, q = lx.mu, ly.mu
    if p.divides(q):
        return ly
    if q.divides(p):
        return lx
    g = poly_gcd(p, q)
    if g.degree == 0:
        z = lx.vector + ly.vector
    else:
        h, k, _, _ = split_gcd(p, q)
        z = eval_poly_vec(h, a, lx.vector) + eval_poly_vec(k, a, ly.vector)
    combined = local_min_poly(a, z)
    if combined.mu != poly_lcm(p, q):
        raise InternalInvariantError(
            "combined vector's minimal polynomial is not the lcm"
        )
    return combined


def min_poly_vector(a: Mat) -> LocalAnnihilator:
    """A vector whose minimal polynomial is the matrix's own.

    Starts from e_1 and repeatedly absorbs the smallest-index canonical
    basis vector not yet annihilated, so the result is deterministic.
    Each round strictly increases the degree, hence at most n rounds.
    """
    if not a.is_square:
        raise DimensionError("matrix must be square")
    n = a.nrows
    if n == 0:
        raise ValueError("empty matrix has no minimal polynomial")
    K = a.field
    acc = local_min_poly(a, Vec.basis(K, n, 0))
    for _ in range(n + 1):
        # A full Krylov chain means the candidate already annihilates A
        # (it divides the degree-n characteristic polynomial and has
        # degree n), so the column scan can be skipped.
        if acc.mu.degree == n:
            return acc
        escape = None
        for i in range(n):
            if not eval_poly_vec(acc.mu, a, Vec.basis(K, n, i)).is_zero:
                escape = i
                break
        if escape is None:
            return acc
        other = local_min_poly(a, Vec.basis(K, n, escape))
        grown = combine_lcm_vector(a, acc, other)
        if grown.mu.degree <= acc.mu.degree:
            raise InternalInvariantError("combination failed to grow the degree")
        acc = grown
    raise InternalInvariantError("minimal polynomial loop failed to terminate")


def min_poly(a: Mat) -> Poly:
    """The minimal polynomial of a square matrix."""
    return min_poly_vector(a).mu
