from fractions import Fraction

import numpy as np
import pytest

from conftest import (
    SQUARE,
    TRIANGLE,
    UNIT_DISK,
    disk_family,
    in_scaled_oracle,
    random_cross_polytope,
    random_simplex,
    random_symmetric_polygon,
    random_triangle,
)
from homocover.asymmetry import minkowski_sigma
from homocover.covering import (
    ball_cover_slack,
    cover_balls,
    cover_general,
    cover_simplex_facet_parallel,
    cover_symmetric,
    minimal_cover,
    verify_cover,
)
from homocover.errors import WrongTheorem
from homocover.generators import gen_sharp_simplex, gen_touching_chain
from homocover.geometry import Ball, Family, Homothet, Polytope


def vertex_oracle(family, cover):
    """Every vertex of every member lies in the cover (half-space test)."""
    t, T = cover.translation_array, float(cover.scale)
    for p in family.member_vertices().reshape(-1, family.dimension):
        if not in_scaled_oracle(family.body, p - t, T, tol=1e-9):
            return False
    return True


class TestBalls:
    def test_two_touching(self):
        res = cover_balls(disk_family([(-1, 0), (1, 0)], [1, 1]))
        assert np.allclose(res.cover.translation_array, 0)
        assert res.scale == 2 and res.verified

    def test_single(self):
        res = cover_balls(disk_family([(3, 4)], [2]))
        assert np.allclose(res.cover.translation_array, (3, 4)) and res.scale == 2
        assert res.verified

    def test_three_collinear_is_tight(self):
        fam = disk_family([(0, 0), (2, 0), (4, 0)], [1, 1, 1])
        res = cover_balls(fam)
        assert np.allclose(res.cover.translation_array, (2, 0)) and res.scale == 3
        assert ball_cover_slack(fam, res.cover) == pytest.approx(0, abs=1e-12)

    def test_wrong_body(self):
        with pytest.raises(WrongTheorem):
            cover_balls(Family(SQUARE, [Homothet((0, 0), 1)]))

    def test_random_chains(self, rng):
        for i in range(60):
            d = 2 + i % 2
            n = int(rng.integers(1, 13))
            fam = gen_touching_chain(Ball([0] * d, 1), n, rng.uniform(0.1, 10, n).tolist(), seed=i)
            res = cover_balls(fam)
            assert res.verified
            assert ball_cover_slack(fam, res.cover) >= -1e-9

    def test_separable_pair_fails(self):
        fam = disk_family([(0, 0), (100, 0)], [1, 1])
        res = cover_balls(fam)
        assert np.allclose(res.cover.translation_array, (50, 0))
        assert not res.verified
        assert not verify_cover(fam, res.cover)
        assert res.warnings

    def test_similarity_equivariance(self, rng):
        for i in range(20):
            fam = gen_touching_chain(UNIT_DISK, 5, rng.uniform(0.5, 2, 5).tolist(), seed=i)
            lam = rng.uniform(0.2, 5)
            theta = rng.uniform(0, 2 * np.pi)
            R = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
            shift = rng.normal(size=2)
            moved = fam.with_members(
                [Homothet(lam * R @ m.translation_array + shift, lam * float(m.scale)) for m in fam.members]
            )
            a, b = cover_balls(fam).cover, cover_balls(moved).cover
            assert np.allclose(lam * R @ a.translation_array + shift, b.translation_array, atol=1e-9)
            assert float(b.scale) == pytest.approx(lam * float(a.scale), rel=1e-12)


class TestSymmetric:
    def test_disks_match_balls(self):
        fam = disk_family([(-1, 0), (1, 0)], [1, 1])
        a, b = cover_balls(fam).cover, cover_symmetric(fam).cover
        assert np.allclose(a.translation_array, b.translation_array) and a.scale == b.scale

    def test_touching_squares(self):
        fam = Family(SQUARE, [Homothet((0, 0), 1), Homothet((2, 0), 1)])
        res = cover_symmetric(fam, (0, 0))
        assert np.allclose(res.cover.translation_array, (1, 0)) and res.scale == 2
        assert res.verified and vertex_oracle(fam, res.cover)

    def test_single_member(self):
        fam = Family(SQUARE, [Homothet((5, -1), 3)])
        res = cover_symmetric(fam)
        assert np.allclose(res.cover.translation_array, (5, -1)) and res.scale == 3

    def test_off_center_body(self):
        body = Polytope([(1, 1), (3, 1), (3, 2), (1, 2)])
        fam = gen_touching_chain(body, 4, [1, 2, 0.5, 1], seed=1)
        res = cover_symmetric(fam)
        assert np.allclose(res.normalization, (2, 1.5))
        assert res.verified and vertex_oracle(fam, res.cover)

    def test_asymmetric_rejected(self):
        with pytest.raises(WrongTheorem):
            cover_symmetric(Family(TRIANGLE, [Homothet((0, 0), 1)]))
        with pytest.raises(WrongTheorem):
            cover_symmetric(Family(SQUARE, [Homothet((0, 0), 1)]), (0.5, 0))

    def test_random_chains(self, rng):
        for i in range(40):
            body = random_symmetric_polygon(rng, center=rng.normal(size=2)) if i % 2 else random_cross_polytope(rng)
            n = int(rng.integers(1, 9))
            fam = gen_touching_chain(body, n, rng.uniform(0.2, 3, n).tolist(), seed=i)
            res = cover_symmetric(fam)
            assert res.verified and vertex_oracle(fam, res.cover)


class TestGeneral:
    def test_symmetric_body_reduces(self):
        fam = gen_touching_chain(SQUARE, 3, seed=2)
        res = cover_general(fam)
        assert res.factor == pytest.approx(1, abs=1e-6)
        assert res.verified

    def test_two_triangles(self):
        fam = gen_touching_chain(TRIANGLE, 2, seed=5)
        res = cover_general(fam)
        assert res.sigma == pytest.approx(2, abs=1e-6)
        assert float(res.scale) == pytest.approx(3, abs=1e-5)
        assert res.verified and vertex_oracle(fam, res.cover)

    def test_sharp_family_small(self):
        inst = gen_sharp_simplex(2, 1)
        res = cover_general(inst.family)
        # (3/2) * (3/4) of K
        assert float(res.scale) == pytest.approx(9 / 8, abs=1e-6)
        assert res.verified
        assert minimal_cover(inst.family).scale == pytest.approx(1, abs=1e-9)

    def test_random_chains(self, rng):
        for i in range(40):
            body = random_triangle(rng) if i % 2 else random_simplex(rng, 3)
            n = int(rng.integers(1, 8))
            fam = gen_touching_chain(body, n, rng.uniform(0.2, 3, n).tolist(), seed=i)
            res = cover_general(fam)
            assert res.verified and vertex_oracle(fam, res.cover)
            simplex_cover = cover_simplex_facet_parallel(fam)
            assert simplex_cover.verified
            assert float(res.scale) <= float(simplex_cover.scale) * (1 + 1e-6)

    def test_factor_tracks_sigma(self, rng):
        body = Polytope([(0, 0), (2, 0), (3, 1), (1, 2)])
        fam = gen_touching_chain(body, 3, seed=0)
        sigma = minkowski_sigma(body).sigma
        assert cover_general(fam).factor == pytest.approx((sigma + 1) / 2, abs=1e-6)


class TestSimplex:
    def test_sharp_family(self):
        inst = gen_sharp_simplex(2, 5)
        res = cover_simplex_facet_parallel(inst.family)
        assert res.factor == Fraction(3, 2)
        assert res.scale == Fraction(3, 2) * Fraction(11, 16)
        assert res.verified and vertex_oracle(inst.family, res.cover)
        assert not res.warnings

    def test_single_member(self, rng):
        body = random_simplex(rng, 3)
        fam = Family(body, [Homothet((1, 2, 3), 2)])
        res = cover_simplex_facet_parallel(fam)
        assert res.verified and float(res.scale) == pytest.approx(4)

    def test_sharp_family_3d(self):
        res = cover_simplex_facet_parallel(gen_sharp_simplex(3, 1).family)
        assert res.factor == 2 and res.verified

    def test_not_a_simplex(self):
        with pytest.raises(WrongTheorem):
            cover_simplex_facet_parallel(Family(SQUARE, [Homothet((0, 0), 1)]))


class TestVerify:
    def test_member_itself(self, rng):
        body = random_triangle(rng)
        m = Homothet(tuple(rng.normal(size=2)), 0.7)
        assert verify_cover(Family(body, [m]), m)

    def test_too_small(self):
        fam = disk_family([(0, 0)], [2])
        assert not verify_cover(fam, Homothet((0, 0), 1.5))

    def test_agrees_with_vertex_oracle(self, rng):
        seen = {True: 0, False: 0}
        for i in range(80):
            body = random_triangle(rng)
            fam = gen_touching_chain(body, 3, seed=i)
            # perturb the minimal cover so both verdicts occur
            mc = minimal_cover(fam)
            cover = Homothet(mc.translation + rng.normal(scale=0.05, size=2), mc.scale * rng.uniform(0.95, 1.3))
            got = verify_cover(fam, cover)
            assert got == vertex_oracle(fam, cover)
            seen[got] += 1
        assert min(seen.values()) > 5


class TestMinimal:
    def test_two_disks(self):
        mc = minimal_cover(disk_family([(-1, 0), (1, 0)], [1, 1]))
        assert mc.scale == pytest.approx(2, abs=1e-7)
        assert np.allclose(mc.translation, 0, atol=1e-6)

    def test_single(self):
        mc = minimal_cover(Family(TRIANGLE, [Homothet((2, 3), 0.5)]))
        assert mc.scale == pytest.approx(0.5) and np.allclose(mc.translation, (2, 3))

    def test_sharp_family_is_covered_by_k(self):
        assert minimal_cover(gen_sharp_simplex(2, 1).family).scale == pytest.approx(1, abs=1e-9)

    def test_never_larger_than_constructions(self, rng):
        for i in range(20):
            fam = gen_touching_chain(random_triangle(rng), 4, seed=i)
            mc = minimal_cover(fam)
            assert verify_cover(fam, Homothet(mc.translation, mc.scale), tol=1e-7)
            assert mc.scale <= float(cover_general(fam).scale) + 1e-9

    def test_disk_chain_matches_three_point_oracle(self, rng):
        # for equal disks the minimal cover radius is the minimal enclosing
        # radius of the centers plus the common radius
        for i in range(10):
            fam = gen_touching_chain(UNIT_DISK, 4, seed=i)
            C = fam.translations
            grid = np.stack(np.meshgrid(np.linspace(C[:, 0].min(), C[:, 0].max(), 301),
                                        np.linspace(C[:, 1].min(), C[:, 1].max(), 301)), -1).reshape(-1, 2)
            coarse = np.linalg.norm(grid[:, None] - C[None], axis=2).max(1).min() + 1
            mc = minimal_cover(fam)
            assert mc.scale <= coarse + 1e-9
            assert mc.scale >= coarse - 0.05
