import itertools
import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wcdim import _pure
from wcdim.linalg import (
    GF,
    QQ,
    FieldSpec,
    IntMatrix,
    bareiss_rank,
    fraction_rank,
    invariant_factors,
    is_prime,
    nullspace_basis,
    prime_factors,
    rank,
    rank_from_factors,
)

PRIMES = [p for p in range(2, 102) if is_prime(p)]


def random_matrix(rng, max_dim=12, lo=-3, hi=3):
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return IntMatrix.from_rows([[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)])


matrices = st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=7)
).map(IntMatrix.from_rows)


def det(rows):
    """Leibniz expansion; fine for the tiny minors used here."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def determinantal_factors(m: IntMatrix):
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}."""
    out = []
    prev = 1
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for rs in itertools.combinations(range(m.rows), k):
            for cs in itertools.combinations(range(m.cols), k):
                g = gcd(g, det([[m.entries[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


class TestFieldSpec:
    def test_rejects_composites(self):
        for c in (1, 4, 9, 15, -3):
            with pytest.raises(ValueError):
                FieldSpec(c)
        assert str(QQ) == "QQ" and str(GF(7)) == "GF(7)"
        with pytest.raises(ValueError):
            rank(IntMatrix.from_rows([[1]]), 6)

    def test_prime_factors(self):
        assert prime_factors(1) == []
        assert prime_factors(15) == [3, 5]
        assert prime_factors(-72) == [2, 3]
        assert prime_factors(97) == [97]


class TestRank:
    def test_identity(self):
        eye = IntMatrix.from_rows([[int(i == j) for j in range(3)] for i in range(3)])
        for f in (QQ, GF(2), GF(3), GF(101)):
            assert rank(eye, f) == 3

    def test_two(self):
        m = IntMatrix.from_rows([[2]])
        assert rank(m, GF(2)) == 0
        assert rank(m, QQ) == 1
        assert rank(m, 3) == 1

    def test_empty(self):
        assert rank(IntMatrix.zeros(0, 4)) == 0
        assert rank(IntMatrix.zeros(3, 4), GF(5)) == 0

    def test_bareiss_matches_fractions(self):
        rng = random.Random(11)
        for _ in range(1000):
            m = random_matrix(rng)
            assert bareiss_rank(m) == fraction_rank(m)

    def test_bareiss_with_large_entries(self):
        rng = random.Random(5)
        for _ in range(100):
            m = random_matrix(rng, 8, -(10**12), 10**12)
            assert bareiss_rank(m) == fraction_rank(m)

    @given(matrices)
    @settings(max_examples=300, deadline=None)
    def test_mod_p_never_exceeds_rational(self, m):
        r = rank(m, QQ)
        for p in (2, 3, 5, 7):
            assert rank(m, p) <= r


class TestInvariantFactors:
    def test_diag(self):
        assert invariant_factors(IntMatrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 0]])) == [1, 2]
        assert invariant_factors(IntMatrix.from_rows([[2, 0], [0, 3]])) == [1, 6]
        assert invariant_factors(IntMatrix.zeros(0, 3)) == []
        assert invariant_factors(IntMatrix.zeros(2, 2)) == []
        assert invariant_factors(IntMatrix.from_rows([[-4]])) == [4]

    def test_against_determinantal_divisors(self):
        rng = random.Random(2)
        for _ in range(300):
            r, c = rng.randint(1, 4), rng.randint(1, 4)
            m = IntMatrix.from_rows([[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)])
            assert invariant_factors(m) == determinantal_factors(m)

    @given(matrices)
    @settings(max_examples=300, deadline=None)
    def test_divisibility_chain_and_rank(self, m):
        d = invariant_factors(m)
        assert all(x > 0 for x in d)
        assert all(b % a == 0 for a, b in zip(d, d[1:]))
        assert len(d) == fraction_rank(m)

    def test_rank_mod_p_from_factors(self):
        rng = random.Random(7)
        for _ in range(300):
            m = random_matrix(rng, 9)
            d = invariant_factors(m)
            for p in PRIMES:
                assert rank(m, p) == rank_from_factors(d, p)
                assert _pure.rank_mod_p(m.entries, m.cols, p) == rank_from_factors(d, p)

    def test_entry_growth_is_exact(self):
        # a matrix whose invariant factors are large
        m = IntMatrix.from_rows([[2**40, 0], [0, 3**30]])
        assert invariant_factors(m) == [1, 2**40 * 3**30]


class TestNullspace:
    def test_zero_row(self):
        basis = nullspace_basis(IntMatrix.zeros(1, 3))
        assert sorted(basis) == sorted([(1, 0, 0), (0, 1, 0), (0, 0, 1)])

    def test_single_equation(self):
        m = IntMatrix.from_rows([[1, -1, 1]])
        basis = nullspace_basis(m)
        assert len(basis) == 2
        for v in basis:
            assert m @ v == [0]

    def test_rational_vectors_are_primitive(self):
        m = IntMatrix.from_rows([[2, 3, 0], [0, 4, 6]])
        (v,) = nullspace_basis(m)
        assert m @ v == [0, 0]
        g = 0
        for x in v:
            g = gcd(g, x)
        assert g == 1

    def test_random_nullspaces(self):
        rng = random.Random(9)
        for _ in range(300):
            m = random_matrix(rng, 8)
            for f in (QQ, GF(2), GF(3), GF(5), GF(13)):
                basis = nullspace_basis(m, f)
                assert len(basis) == m.cols - rank(m, f)
                p = f.characteristic
                for v in basis:
                    prod = m @ v
                    if p:
                        assert all(0 <= x < p for x in v)
                        assert all(x % p == 0 for x in prod)
                    else:
                        assert prod == [0] * m.rows
                # independence: the basis vectors have full rank over the field
                if basis:
                    assert rank(IntMatrix.from_rows(basis), f) == len(basis)

    def test_nullspace_over_rationals_matches_fraction_solution(self):
        m = IntMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
        basis = nullspace_basis(m)
        assert len(basis) == 2
        for v in basis:
            assert sum(Fraction(a) * b for a, b in zip(m.entries[0], v)) == 0
