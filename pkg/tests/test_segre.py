"""Residual degrees and the triangular Segre solve."""

import math
import random

import pytest

from charclass import (
    DomainError,
    GenericityError,
    Ideal,
    ResidualDegrees,
    dimension_and_degree,
    residual_degrees_symbolic,
    segre_degrees,
    segre_from_residuals,
)


class TestResidualsSymbolic:
    def test_twisted_cubic(self, twisted_cubic, rng):
        res = residual_degrees_symbolic(twisted_cubic, rng)
        assert res.degrees == {2: 1, 3: 0}
        assert res.m == 2

    def test_hyperplane(self, P2, rng):
        res = residual_degrees_symbolic(Ideal(P2, [P2.var(0)]), rng)
        assert res.degrees == {1: 0, 2: 0}

    def test_smooth_conic(self, P2, rng):
        # both random degree-2 elements of (f) are scalar multiples of f, so
        # every residual is empty; the relations then give s = (2, -4), the
        # classical hypersurface value
        x, y, z = P2.gens()
        I = Ideal(P2, [x * x + y * y + z * z])
        res = residual_degrees_symbolic(I, rng)
        assert res.degrees == {1: 0, 2: 0}
        assert segre_from_residuals(res).values == (2, -4)

    def test_empty_scheme_rejected(self, P2, rng):
        with pytest.raises(DomainError):
            residual_degrees_symbolic(Ideal(P2, [P2.one()]), rng)

    def test_degree_override(self, twisted_cubic, rng):
        res = residual_degrees_symbolic(twisted_cubic, rng, m=3)
        assert res.m == 3
        assert segre_from_residuals(res).values == (3, -10)

    def test_override_below_max_rejected(self, twisted_cubic, rng):
        with pytest.raises(DomainError):
            residual_degrees_symbolic(twisted_cubic, rng, m=1)


class TestTriangularSolve:
    def test_twisted_cubic_paper_values(self):
        res = ResidualDegrees(3, 1, 2, {2: 1, 3: 0})
        assert segre_from_residuals(res).values == (3, -10)

    def test_hyperplane_in_p2(self):
        res = ResidualDegrees(2, 1, 1, {1: 0, 2: 0})
        assert segre_from_residuals(res).values == (1, -1)

    def test_point_cut_by_lines(self):
        res = ResidualDegrees(2, 0, 1, {2: 0})
        assert segre_from_residuals(res).values == (1,)

    def test_round_trip_against_relation(self, rng):
        # plugging the solved Segre degrees back into the relations must
        # reproduce the residual degrees exactly (200 random instances)
        for _ in range(200):
            n = rng.randrange(1, 9)
            k = rng.randrange(0, n + 1)
            m = rng.randrange(1, 7)
            degrees = {d: rng.randrange(0, m**d + 1) for d in range(n - k, n + 1)}
            res = ResidualDegrees(n, k, m, degrees)
            segre = segre_from_residuals(res)
            for p in range(k + 1):
                d = p + (n - k)
                total = segre.values[p]
                for i in range(p):
                    total += math.comb(d, p - i) * m ** (p - i) * segre.values[i]
                assert total == m**d - degrees[d]


class TestSegreDegrees:
    def test_twisted_cubic_symbolic(self, twisted_cubic, rng):
        assert segre_degrees(twisted_cubic, rng=rng).values == (3, -10)

    def test_seed_invariance(self, twisted_cubic):
        results = {
            segre_degrees(twisted_cubic, rng=random.Random(seed)).values
            for seed in range(5)
        }
        assert results == {(3, -10)}

    def test_smooth_degree_matches_s0(self, twisted_cubic, P2, rng):
        # smooth X: deg s_0 = deg X
        for I in (twisted_cubic, Ideal(P2, [sum(P2.gens(), P2.zero())])):
            st = dimension_and_degree(I)
            assert segre_degrees(I, rng=rng).values[0] == st.degree

    def test_verification_mode(self, twisted_cubic, rng):
        assert segre_degrees(twisted_cubic, rng=rng, verify=True).values == (3, -10)

    def test_zero_ideal_whole_space(self, P2, rng):
        sd = segre_degrees(Ideal(P2, []), rng=rng)
        assert sd.values == (1, 0, 0)

    def test_unit_ideal_rejected(self, P2, rng):
        with pytest.raises(DomainError):
            segre_degrees(Ideal(P2, [P2.one()]), rng=rng)
