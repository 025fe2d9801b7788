import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gateforge.unitary import (
    DiagonalGate,
    UnitAngle,
    Unitary2,
    dagger,
    diag_gate_matrix,
    lambda_angle,
    make_lambda,
    max_abs_diff,
    mul,
    random_su2,
    su2_with_offdiag,
)

seeds = st.integers(min_value=0, max_value=2 ** 63 - 1)


def _lambda_direct(j, p):
    # lambda_j0 = w^((-1)^j j), lambda_j1 = (-1)^(j+1) w^((-1)^(j+1) j)
    w = cmath.exp(1j * math.pi / (2 * p))
    return w ** ((-1) ** j * j), (-1) ** (j + 1) * w ** ((-1) ** (j + 1) * j)


def valid_jp():
    return st.integers(1, 40).flatmap(
        lambda n: st.tuples(st.integers(1, n), st.just(2 * n + 1)))


class TestUnitAngle:
    def test_canonical(self):
        assert UnitAngle(4, 6) == UnitAngle(2, 3)
        assert UnitAngle(-1, 3) == UnitAngle(5, 3)
        assert UnitAngle(7, 1) == UnitAngle.minus_one()

    def test_mul_inverse(self):
        a = UnitAngle(3, 14)
        assert a * a.inverse() == UnitAngle.one()
        assert UnitAngle(1, 4) * UnitAngle(1, 6) == UnitAngle(5, 12)

    def test_axes_exact(self):
        assert UnitAngle(1, 1).to_complex() == -1
        assert UnitAngle(1, 2).to_complex() == 1j

    def test_sqrt(self):
        r = UnitAngle(3, 7).sqrt()
        assert r * r == UnitAngle(3, 7)

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            UnitAngle(1, 0)

    @given(st.integers(-500, 500), st.integers(1, 60), st.integers(-500, 500), st.integers(1, 60))
    def test_homomorphism(self, n1, m1, n2, m2):
        a, b = UnitAngle(n1, m1), UnitAngle(n2, m2)
        assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-12


class TestLambda:
    def test_p3(self):
        l0, l1 = make_lambda(1, 3)
        assert abs(l0.to_complex() - cmath.exp(-1j * math.pi / 6)) < 1e-15
        assert abs(l1.to_complex() - cmath.exp(1j * math.pi / 6)) < 1e-15

    def test_p5_j2(self):
        w = cmath.exp(1j * math.pi / 10)
        l0, l1 = make_lambda(2, 5)
        assert abs(l0.to_complex() - w ** 2) < 1e-15
        assert abs(l1.to_complex() + w ** -2) < 1e-15
        assert l0 * l1 == UnitAngle.minus_one()

    @given(valid_jp())
    def test_matches_direct_formula(self, jp):
        j, p = jp
        l0, l1 = make_lambda(j, p)
        d0, d1 = _lambda_direct(j, p)
        assert abs(l0.to_complex() - d0) < 1e-12
        assert abs(l1.to_complex() - d1) < 1e-12

    @given(valid_jp())
    def test_identities_exact(self, jp):
        j, p = jp
        l0, l1 = make_lambda(j, p)
        assert l0 * l1 == UnitAngle(j + 1, 1)
        assert (l0 ** 2).conjugate() * (l1 ** 2).inverse() == UnitAngle.one()
        DiagonalGate.make(j, p)

    def test_sentinel(self):
        assert lambda_angle(0, 0, 7) == lambda_angle(0, 1, 7) == UnitAngle.one()

    @pytest.mark.parametrize("j,p", [(1, 4), (0, 5), (3, 5), (1, 1)])
    def test_rejects(self, j, p):
        with pytest.raises(ValueError):
            make_lambda(j, p)

    def test_gate_rejects_bad_lambdas(self):
        with pytest.raises(ValueError):
            DiagonalGate(2, 5, UnitAngle.one(), UnitAngle.one())


class TestDiagonalGate:
    def test_p3_matrix(self):
        m = diag_gate_matrix(DiagonalGate.make(1, 3)).matrix()
        want = np.diag([cmath.exp(-1j * math.pi / 6), cmath.exp(1j * math.pi / 6)])
        np.testing.assert_allclose(m, want, atol=1e-15)

    @given(valid_jp())
    def test_offdiag_zero_and_det(self, jp):
        j, p = jp
        u = diag_gate_matrix(DiagonalGate.make(j, p))
        assert u.b == 0
        assert abs(np.linalg.det(u.matrix()) - (-1) ** (j + 1)) < 1e-12


class TestProducts:
    def test_identity_left(self):
        u = random_su2(np.random.default_rng(1))
        assert max_abs_diff(mul(Unitary2.identity(), u), u) < 1e-15

    def test_offdiag_square(self):
        u = Unitary2(0j, 1 + 0j)
        sq = mul(u, u)
        assert sq.a == -1 and sq.b == 0 and sq.phi == 0

    @settings(max_examples=200)
    @given(seeds, st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi))
    def test_mul_matches_numpy(self, seed, p1, p2):
        rng = np.random.default_rng(seed)
        u = Unitary2(*_ab(rng), p1)
        v = Unitary2(*_ab(rng), p2)
        np.testing.assert_allclose(mul(u, v).matrix(), u.matrix() @ v.matrix(), atol=1e-12)
        assert abs(mul(u, v).phi - (p1 + p2)) < 1e-15

    def test_mul_preserves_norm_many(self):
        rng = np.random.default_rng(7)
        worst = 0.0
        for _ in range(10_000):
            w = mul(random_su2(rng), random_su2(rng))
            worst = max(worst, w.norm_defect())
        assert worst <= 1e-12

    @given(seeds, st.floats(-10, 10))
    def test_dagger(self, seed, phi):
        u = Unitary2(*_ab(np.random.default_rng(seed)), phi)
        np.testing.assert_allclose(dagger(u).matrix(), u.matrix().conj().T, atol=1e-14)
        assert max_abs_diff(mul(u, dagger(u)), Unitary2.identity()) < 1e-12
        assert dagger(dagger(u)) == u

    def test_dagger_identity(self):
        assert dagger(Unitary2.identity()) == Unitary2(1, -0j, -0.0)

    @given(seeds, st.floats(0, 4 * math.pi))
    def test_round_trip(self, seed, phi):
        u = Unitary2(*_ab(np.random.default_rng(seed)), phi)
        back = Unitary2.from_matrix(u.matrix())
        # (a, b, phi) and (-a, -b, phi + 2 pi) realize the same matrix
        assert max_abs_diff(u, back) < 1e-12
        d = (back.phi - phi) % (4 * math.pi)
        if min(d, 4 * math.pi - d) < 1e-9:
            assert abs(back.a - u.a) < 1e-12 and abs(back.b - u.b) < 1e-12
        else:
            assert abs(min(d, 4 * math.pi - d) - 2 * math.pi) < 1e-9
            assert abs(back.a + u.a) < 1e-12 and abs(back.b + u.b) < 1e-12

    def test_det(self):
        u = Unitary2(*_ab(np.random.default_rng(3)), 1.25)
        assert abs(np.linalg.det(u.matrix()) - u.det()) < 1e-12

    def test_from_matrix_rejects(self):
        with pytest.raises(ValueError):
            Unitary2.from_matrix(np.ones((2, 2)))
        with pytest.raises(ValueError):
            Unitary2.from_matrix(np.eye(3))


def _ab(rng):
    u = random_su2(rng)
    return u.a, u.b


def test_su2_with_offdiag():
    u = su2_with_offdiag(np.random.default_rng(0), 0.3)
    assert abs(abs(u.b) - 0.3) < 1e-15 and u.is_valid()
    with pytest.raises(ValueError):
        su2_with_offdiag(np.random.default_rng(0), 1.5)
