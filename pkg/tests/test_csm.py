"""Shadow conversions, CSM degrees, Euler characteristics, ML degrees."""

import math
import random

import pytest

from charclass import (
    ClassExpr,
    DomainError,
    Ideal,
    SegreProfile,
    affine_euler,
    csm_degrees_from_segre,
    csm_from_shadow,
    csm_hypersurface,
    csm_subscheme,
    euler_characteristic,
    ml_degree,
    poly_gcd,
    segre_from_shadow,
    shadow_from_segre,
)

from helpers import count_distinct_plane_points, smooth_hypersurface_pushforward


def random_profile(rng, nmax=8, rmax=10):
    n = rng.randrange(1, nmax + 1)
    k = rng.randrange(-1, n)
    r = rng.randrange(0, rmax + 1)
    st = [1] + [0] * n
    if k >= 0:
        for i in range(n - k, n + 1):
            st[i] = rng.randrange(-50, 51)
    return SegreProfile(n, k, r, tuple(st))


class TestBinomialIdentity:
    def test_exhaustive_up_to_25(self):
        # sum_{i=t}^{j} C(j,i) C(i,t) (-1)^(i-t) = delta_jt
        for j in range(26):
            for t in range(j + 1):
                total = sum(
                    math.comb(j, i) * math.comb(i, t) * (-1) ** (i - t)
                    for i in range(t, j + 1)
                )
                assert total == (1 if j == t else 0), (j, t)


class TestShadow:
    def test_nodal_cubic_profile(self):
        prof = SegreProfile(2, 0, 2, (1, 0, -1))
        assert shadow_from_segre(prof).coeffs == (1, 2, 3)

    def test_smooth_hypersurface_powers(self):
        prof = SegreProfile(3, -1, 4, (1, 0, 0, 0))
        assert shadow_from_segre(prof).coeffs == (1, 4, 16, 64)

    def test_r_zero_identity(self, rng):
        prof = random_profile(rng)
        prof = SegreProfile(prof.n, prof.k, 0, prof.stilde)
        assert shadow_from_segre(prof).coeffs == prof.stilde

    def test_inverse_example(self):
        G = ClassExpr(2, (1, 2, 3))
        prof = segre_from_shadow(G, 2, 2, 0)
        assert prof.stilde == (1, 0, -1)

    def test_round_trip_200(self, rng):
        for _ in range(200):
            prof = random_profile(rng)
            G = shadow_from_segre(prof)
            back = segre_from_shadow(G, prof.r, prof.n, prof.k)
            assert back.stilde == prof.stilde
            # and the other direction, starting from a random shadow
            coeffs = [1] + [rng.randrange(-50, 51) for _ in range(prof.n)]
            G2 = ClassExpr(prof.n, tuple(coeffs))
            prof2 = segre_from_shadow(G2, prof.r, prof.n, prof.k)
            assert shadow_from_segre(prof2).coeffs == G2.coeffs


class TestCsmFromShadow:
    def test_nodal_cubic(self):
        G = ClassExpr(2, (1, 2, 3))
        assert csm_from_shadow(G).coeffs == (0, 3, 1)

    def test_shadow_one(self):
        # G = 1: (1+H)^(n+1) - (1+H)^n = H (1+H)^n
        G = ClassExpr(3, (1, 0, 0, 0))
        assert csm_from_shadow(G).coeffs == (0, 1, 3, 3)

    def test_corollary_matches_composition_200(self, rng):
        for _ in range(200):
            prof = random_profile(rng)
            push = csm_from_shadow(shadow_from_segre(prof))
            assert tuple(push.coeffs[1:]) == csm_degrees_from_segre(prof)


class TestHypersurfaces:
    def test_nodal_cubic_golden(self, nodal_cubic, rng):
        res = csm_hypersurface(nodal_cubic, rng=rng)
        assert res.pushforward.coeffs == (0, 3, 1)
        assert res.degrees == (3, 1)
        assert res.euler == 1

    def test_smooth_oracle_suite(self, P2, P3, rng):
        # Fermat hypersurfaces against m*H*(1+H)^(n+1)/(1+m*H)
        cases = [(P2, m) for m in (2, 3, 4)] + [(P3, m) for m in (2, 3)]
        for ring, m in cases:
            f = sum((v**m for v in ring.gens()), ring.zero())
            res = csm_hypersurface(f, rng=rng)
            n = ring.nvars - 1
            assert res.pushforward.coeffs == smooth_hypersurface_pushforward(n, m), (n, m)

    def test_hyperplane(self, P2, rng):
        res = csm_hypersurface(P2.var(0), rng=rng)
        assert res.euler == 2  # chi(P^1)

    def test_two_lines(self, P2, rng):
        x, y, _ = P2.gens()
        assert csm_hypersurface(x * y, rng=rng).euler == 3

    def test_smooth_quadric_surface(self, P3, rng):
        x, y, z, w = P3.gens()
        assert csm_hypersurface(x * x + y * y + z * z + w * w, rng=rng).euler == 4

    def test_nonreduced_input_normalized(self, P2, rng):
        x, y, _ = P2.gens()
        # V(x^2 y) = V(xy) as sets, so the class data agree
        a = csm_hypersurface(x * x * y, rng=rng)
        b = csm_hypersurface(x * y, rng=rng)
        assert a.pushforward == b.pushforward

    def test_rejects_constant(self, P2, rng):
        with pytest.raises(DomainError):
            csm_hypersurface(P2.const(2), rng=rng)


class TestSubschemes:
    def test_twisted_cubic_euler(self, twisted_cubic, rng):
        res = csm_subscheme(twisted_cubic, rng=rng)
        assert res.euler == 2  # rational normal curve is a P^1
        assert res.dim == 1
        assert res.degrees[0] == 3  # deg (c_SM)_0 = deg X

    def test_point(self, P2, rng):
        x, y, _ = P2.gens()
        assert euler_characteristic(Ideal(P2, [x, y]), rng=rng) == 1

    def test_zero_ideal_gives_projective_space(self, P3, rng):
        res = csm_subscheme(Ideal(P3, []), rng=rng)
        assert res.euler == 4
        assert res.pushforward.coeffs == (1, 4, 6, 4)  # (1+H)^4 truncated

    def test_unit_ideal_rejected(self, P2, rng):
        with pytest.raises(DomainError):
            csm_subscheme(Ideal(P2, [P2.one()]), rng=rng)

    def test_reduced_degree_on_golden_examples(self, twisted_cubic, P2, rng):
        # coefficient of H^(n - dim X) equals deg(X_red)
        from charclass import dimension_and_degree

        for I in (twisted_cubic, Ideal(P2, [P2.var(0), P2.var(1)])):
            res = csm_subscheme(I, rng=rng)
            st = dimension_and_degree(I)
            n = I.ring.nvars - 1
            assert res.pushforward.coeffs[n - st.dim] == st.degree


class TestInclusionExclusion:
    def test_plane_curve_pairs_200(self, P2, rng):
        # euler(V(fg)) = euler(V(f)) + euler(V(g)) - #V(f,g), with the point
        # count from an independent resultant oracle
        done = 0
        while done < 200:
            f = P2.random_form(rng.randrange(1, 4), rng)
            g = P2.random_form(rng.randrange(1, 4), rng)
            if f.is_zero() or g.is_zero() or not poly_gcd(f, g).is_constant():
                continue
            chi_f = csm_hypersurface(f, rng=rng).euler
            chi_g = csm_hypersurface(g, rng=rng).euler
            chi_fg = csm_hypersurface(f * g, rng=rng).euler
            points = count_distinct_plane_points(f, g, rng)
            assert chi_fg == chi_f + chi_g - points, (str(f), str(g))
            # the subscheme route must agree with the point count
            assert euler_characteristic(Ideal(P2, [f, g]), rng=rng) == points
            done += 1


class TestAffineEuler:
    def test_affine_line(self, rng):
        from charclass import FieldSpec, Ring

        from helpers import PRIME

        RA = Ring(("x", "y"), FieldSpec(PRIME))
        _, y = RA.gens()
        assert affine_euler([y], rng=rng) == 1

    def test_hyperbola(self, rng):
        from charclass import FieldSpec, Ring

        from helpers import PRIME

        RA = Ring(("x", "y"), FieldSpec(PRIME))
        x, y = RA.gens()
        assert affine_euler([x * y - 1], rng=rng) == 0

    def test_affine_space(self, rng):
        from charclass import FieldSpec, Ring

        from helpers import PRIME

        for nv in (1, 2, 3):
            RA = Ring(tuple(f"x{i}" for i in range(nv)), FieldSpec(PRIME))
            assert affine_euler([], ring=RA, rng=rng) == 1

    def test_nodal_affine_cubic(self, rng):
        # y^2 = x^3 + x^2: projective closure is the nodal cubic (chi = 1)
        # minus its one smooth point at infinity
        from charclass import FieldSpec, Ring

        from helpers import PRIME

        RA = Ring(("x", "y"), FieldSpec(PRIME))
        x, y = RA.gens()
        assert affine_euler([y * y - x**3 - x * x], rng=rng) == 0


class TestMlDegree:
    def test_censoring_model(self, rng):
        from charclass import FieldSpec, Ring

        from helpers import PRIME

        Rp = Ring(("p0", "p1", "p2", "p12"), FieldSpec(PRIME))
        p0, p1, p2, p12 = Rp.gens()
        f = 2 * p0 * p1 * p2 + p1 * p1 * p2 + p1 * p2 * p2 - p0 * p0 * p12 + p1 * p2 * p12
        res = ml_degree(Ideal(Rp, [f]), rng=rng)
        assert res.chi_model == 5
        assert res.chi_cut == 2
        assert res.ml_degree == 3
        assert res.warnings

    def test_generic_line(self, rng):
        # ML degree of a generic hyperplane model in P^2 is 2 (= d + d^2 for
        # d = 1), confirmed by the critical-point oracle below
        from charclass import FieldSpec, Ring

        from helpers import PRIME

        Rp = Ring(("p0", "p1", "p2"), FieldSpec(PRIME))
        coeffs = [3, 5, 7]
        line = sum((c * v for c, v in zip(coeffs, Rp.gens())), Rp.zero())
        res = ml_degree(Ideal(Rp, [line]), rng=rng)
        assert res.ml_degree == self._line_critical_points(coeffs, (2, 3, 5))
        assert res.ml_degree == 2

    @staticmethod
    def _line_critical_points(line_coeffs, u):
        # critical points of prod p_i^{u_i} / (sum p)^{sum u} on the line,
        # counted via the numerator polynomial of dlog L
        import numpy as np

        c = np.array(line_coeffs, dtype=float)
        a = np.array([5.0, -1.0, (-5 * c[0] + 1 * c[1]) / c[2]])
        b = np.array([1.0, 3.0, (-1 * c[0] - 3 * c[1]) / c[2]])
        assert abs(np.dot(c, a)) < 1e-9 and abs(np.dot(c, b)) < 1e-9
        N = sum(u)
        # dlog L = sum u_i b_i/(a_i + t b_i) - N (sum b)/(sum a + t sum b)
        lines = [np.poly1d([b[i], a[i]]) for i in range(3)]
        sigma = np.poly1d([b.sum(), a.sum()])
        num = np.poly1d([0.0])
        for i in range(3):
            prod = np.poly1d([float(u[i]) * b[i]])
            for j in range(3):
                if j != i:
                    prod = prod * lines[j]
            num = num + prod * sigma
        allprod = lines[0] * lines[1] * lines[2]
        num = num - N * b.sum() * allprod
        # the degree-3 leading terms cancel exactly; trim float residue
        coeffs = num.coeffs.copy()
        scale = max(abs(coeffs))
        while len(coeffs) > 1 and abs(coeffs[0]) < 1e-9 * scale:
            coeffs = coeffs[1:]
        roots = np.roots(coeffs)
        # discard roots where the likelihood degenerates (punctures)
        good = [
            t
            for t in roots
            if all(abs(ln(t)) > 1e-8 for ln in lines) and abs(sigma(t)) > 1e-8
        ]
        return len(good)

    def test_empty_model_rejected(self, P2, rng):
        with pytest.raises(DomainError):
            ml_degree(Ideal(P2, [P2.one()]), rng=rng)


class TestFieldAndAmbientEdges:
    def test_rationals_mode_nodal_cubic(self, rng):
        from charclass import FieldSpec, Ring

        R = Ring(("x", "y", "z"), FieldSpec(0))
        x, y, z = R.gens()
        res = csm_hypersurface(x**3 + x * x * z - y * y * z, rng=rng)
        assert res.pushforward.coeffs == (0, 3, 1) and res.euler == 1

    def test_rationals_mode_twisted_cubic_segre(self, rng):
        from charclass import FieldSpec, Ring, segre_degrees

        R = Ring(("x", "y", "z", "w"), FieldSpec(0))
        x, y, z, w = R.gens()
        I = Ideal(R, [x * z - y * y, y * w - z * z, x * w - y * z])
        assert segre_degrees(I, rng=rng).values == (3, -10)

    def test_points_in_p1(self, rng):
        from charclass import FieldSpec, Ring

        from helpers import PRIME

        P1 = Ring(("x", "y"), FieldSpec(PRIME))
        u, v = P1.gens()
        assert csm_hypersurface(u * v, rng=rng).euler == 2
        assert csm_hypersurface(u * u, rng=rng).euler == 1  # support is one point
        assert euler_characteristic(Ideal(P1, []), rng=rng) == 2  # chi(P^1)
