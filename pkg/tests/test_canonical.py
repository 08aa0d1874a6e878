import random

import pytest

from conftest import rand_invertible, rand_matrix, rand_nilpotent
from ratform import (
    Mat,
    Poly,
    PrimeField,
    Rationals,
    block_diag,
    char_poly,
    char_poly_oracle,
    companion,
    invariant_factors,
    inverse,
    is_similar,
    min_poly,
    nilpotent_jnf,
    rank,
    rnf,
)
from ratform.errors import DimensionError, MixedFieldError, NotNilpotentError


def P(K, *ints):
    return Poly.from_ints(K, ints)


def assert_rnf_contract(a, result):
    n = a.nrows
    assert sum(f.degree for f in result.factors) == n
    for f in result.factors:
        assert f.is_monic and f.degree >= 1
    for earlier, later in zip(result.factors, result.factors[1:]):
        assert later.divides(earlier)
    assert result.rnf == block_diag([companion(f) for f in result.factors])
    assert inverse(result.transform) * a * result.transform == result.rnf


def test_rnf_zero_matrix():
    K = Rationals()
    z = Mat.zeros(K, 2, 2)
    got = rnf(z)
    assert got.factors == [P(K, 0, 1), P(K, 0, 1)]
    assert got.rnf == z
    assert got.transform == Mat.identity(K, 2)


def test_rnf_single_nilpotent_block():
    K = Rationals()
    got = rnf(Mat.from_ints(K, [[0, 1], [0, 0]]))
    assert got.factors == [P(K, 0, 0, 1)]
    assert got.rnf == Mat.from_ints(K, [[0, 0], [1, 0]])


def test_rnf_diagonal_example_with_transform():
    K = Rationals()
    a = Mat.from_ints(K, [[1, 0], [0, 2]])
    got = rnf(a)
    assert got.factors == [P(K, 2, -3, 1)]
    assert got.rnf == Mat.from_ints(K, [[0, -2], [1, 3]])
    assert got.transform == Mat.from_ints(K, [[1, 1], [1, 2]])
    assert_rnf_contract(a, got)


def test_rnf_identity():
    K = Rationals()
    got = rnf(Mat.identity(K, 3))
    assert got.factors == [P(K, -1, 1)] * 3
    assert got.rnf == Mat.identity(K, 3)


def test_rnf_rejects_empty_matrix():
    K = Rationals()
    with pytest.raises(ValueError):
        rnf(Mat(K, []))


def test_rnf_round_trip_random():
    K = PrimeField(7)
    rng = random.Random(73)
    for _ in range(60):
        a = rand_matrix(K, rng, rng.randint(1, 8))
        assert_rnf_contract(a, rnf(a))
    Q = Rationals()
    rng = random.Random(79)
    for _ in range(15):
        a = rand_matrix(Q, rng, rng.randint(1, 5))
        assert_rnf_contract(a, rnf(a))


def test_rnf_first_factor_is_minimal_polynomial():
    K = PrimeField(7)
    rng = random.Random(83)
    for _ in range(30):
        a = rand_matrix(K, rng, rng.randint(1, 7))
        assert rnf(a).factors[0] == min_poly(a)


def test_rnf_idempotent_on_its_own_output():
    K = PrimeField(7)
    rng = random.Random(89)
    for _ in range(20):
        a = rand_matrix(K, rng, rng.randint(1, 7))
        got = rnf(a)
        assert invariant_factors(got.rnf) == got.factors


def _random_divisibility_chain(K, rng, max_total=8):
    """P_1, ..., P_r monic with P_{i+1} | P_i, degrees summing to <= max_total."""
    from conftest import rand_monic

    chain = [rand_monic(K, rng, rng.randint(1, 2))]
    while rng.random() < 0.6:
        step = rand_monic(K, rng, rng.randint(0, 1))
        bigger = chain[0] * step if step.degree >= 1 else chain[0]
        total = bigger.degree + sum(f.degree for f in chain)
        if total > max_total:
            break
        chain.insert(0, bigger)
    return chain


def test_rnf_recovers_prescribed_factors():
    """Known-answer oracle: conjugating a hand-built form must not change it."""
    for K, seed, count in ((PrimeField(7), 127, 50), (Rationals(), 131, 10)):
        rng = random.Random(seed)
        for _ in range(count):
            chain = _random_divisibility_chain(K, rng)
            form = block_diag([companion(f) for f in chain])
            s = rand_invertible(K, rng, form.nrows)
            scrambled = inverse(s) * form * s
            got = rnf(scrambled)
            assert got.factors == chain
            assert got.rnf == form
            assert_rnf_contract(scrambled, got)


def test_invariant_factors_examples():
    K = Rationals()
    assert invariant_factors(Mat.identity(K, 2)) == [P(K, -1, 1)] * 2
    p = P(K, 2, -3, 1)
    assert invariant_factors(companion(p)) == [p]
    assert invariant_factors(Mat.from_ints(K, [[1, 0], [0, 2]])) == [p]


def test_invariant_factors_conjugation_invariant():
    K = PrimeField(7)
    rng = random.Random(97)
    for _ in range(40):
        n = rng.randint(1, 8)
        a = rand_matrix(K, rng, n)
        s = rand_invertible(K, rng, n)
        assert invariant_factors(inverse(s) * a * s) == invariant_factors(a)


def test_char_poly_examples_and_oracle_agreement():
    K = Rationals()
    assert char_poly(Mat.identity(K, 2)) == P(K, 1, -2, 1)
    p = P(K, 1, 1, 0, 1)
    assert char_poly(companion(p)) == p
    assert char_poly(Mat.zeros(K, 3, 3)) == P(K, 0, 0, 0, 1)

    G = PrimeField(7)
    rng = random.Random(101)
    for _ in range(30):
        a = rand_matrix(G, rng, rng.randint(1, 6))
        assert char_poly(a) == char_poly_oracle(a)


def test_is_similar_examples():
    K = Rationals()
    rng = random.Random(103)
    a = rand_matrix(K, rng, 3)
    s = rand_invertible(K, rng, 3)
    same, witness = is_similar(a, inverse(s) * a * s, witness=True)
    assert same and a * witness == witness * (inverse(s) * a * s)

    assert not is_similar(Mat.identity(K, 2), Mat.zeros(K, 2, 2))
    # equal characteristic polynomials, different invariant factors
    shift = Mat.from_ints(K, [[0, 1], [0, 0]])
    zero = Mat.zeros(K, 2, 2)
    assert char_poly(shift) == char_poly(zero)
    assert not is_similar(shift, zero)


def test_is_similar_input_checks():
    K, G = Rationals(), PrimeField(7)
    with pytest.raises(DimensionError):
        is_similar(Mat.identity(K, 2), Mat.identity(K, 3))
    with pytest.raises(MixedFieldError):
        is_similar(Mat.identity(K, 2), Mat.identity(G, 2))


def test_is_similar_is_an_equivalence_on_samples():
    K = PrimeField(7)
    rng = random.Random(107)
    mats = [rand_matrix(K, rng, 3) for _ in range(6)]
    for a in mats:
        assert is_similar(a, a)
        for b in mats:
            assert is_similar(a, b) == is_similar(b, a)
            for c in mats:
                if is_similar(a, b) and is_similar(b, c):
                    assert is_similar(a, c)


def test_nilpotent_jnf_examples():
    K = Rationals()
    got = nilpotent_jnf(Mat.zeros(K, 2, 2))
    assert got.partition == [1, 1]
    assert got.jnf == Mat.zeros(K, 2, 2)
    assert got.transform == Mat.identity(K, 2)

    got = nilpotent_jnf(Mat.from_ints(K, [[0, 1], [0, 0]]))
    assert got.partition == [2]

    got = nilpotent_jnf(Mat.from_ints(K, [[0, 1, 0], [0, 0, 0], [0, 0, 0]]))
    assert got.partition == [2, 1]


def test_nilpotent_jnf_rejects_non_nilpotent():
    K = Rationals()
    with pytest.raises(NotNilpotentError):
        nilpotent_jnf(Mat.identity(K, 2))


def _rank_partition(a):
    """Block sizes from rank differences: #(blocks >= s) = rk A^(s-1) - rk A^s."""
    n = a.nrows
    sizes = []
    power = Mat.identity(a.field, n)
    ranks = [n]
    for _ in range(n):
        power = power * a
        ranks.append(rank(power))
    partition = []
    for s in range(1, n + 1):
        count_ge = ranks[s - 1] - ranks[s]
        sizes.append(count_ge)
    for s in range(n, 0, -1):
        exactly = sizes[s - 1] - (sizes[s] if s < n else 0)
        partition.extend([s] * exactly)
    return partition


def test_full_pipeline_across_fields():
    from fractions import Fraction

    rng = random.Random(137)
    for K in (PrimeField(2), PrimeField(3), PrimeField(101)):
        for _ in range(15):
            n = rng.randint(1, 6)
            a = rand_matrix(K, rng, n)
            got = rnf(a)
            assert_rnf_contract(a, got)
            assert got.factors[0] == min_poly(a)
    Q = Rationals()
    for _ in range(10):
        n = rng.randint(1, 4)
        a = Mat(
            Q,
            [
                [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]
                for _ in range(n)
            ],
        )
        got = rnf(a)
        assert_rnf_contract(a, got)
        assert char_poly(a) == char_poly_oracle(a)


def test_nilpotent_jnf_random_contract():
    K = PrimeField(7)
    rng = random.Random(109)
    for _ in range(40):
        n = rng.randint(1, 8)
        a = rand_nilpotent(K, rng, n)
        got = nilpotent_jnf(a)
        assert inverse(got.transform) * a * got.transform == got.jnf
        assert got.partition == sorted(got.partition, reverse=True)
        assert got.partition == _rank_partition(a)
        assert got.partition == [f.degree for f in invariant_factors(a)]
