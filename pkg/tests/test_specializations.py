from gmpy2 import mpq

from fglaw import specializations as sp
from fglaw.addition import build_bundle, build_logG_SN
from fglaw.buchstaber import build_canonical, build_F
from fglaw.params import K_RING, euler_jacobi, ochanine
from fglaw.series import UniSeries


def test_sine_oracle_coefficients():
    k = K_RING.gen("k")
    sn = sp.jacobi_sine_oracle(K_RING, k, 7)
    assert sn[1] == 1
    assert sn[3] == -(1 + k * k) / 6
    assert sn[5] == (1 + 14 * k * k + k**4) / 120
    assert all(sn[n] == 0 for n in (0, 2, 4, 6))


def test_sine_oracle_at_k0_is_sin():
    sn = sp.jacobi_sine_oracle(K_RING, K_RING.zero, 7)
    fact = [1, 1, 2, 6, 24, 120, 720, 5040]
    sin = [0 if n % 2 == 0 else mpq((-1) ** (n // 2), fact[n]) for n in range(8)]
    assert sn == UniSeries(K_RING, sin)


def test_euler():
    r = sp.check_euler_specialization(8)
    assert r.passed, r.line()


def test_cayley_identity_directly():
    params = euler_jacobi()
    G = build_bundle(6, params).G_via_exp
    R = build_canonical(6, params).R
    assert sp.cayley_residual(G, R).is_zero()


def test_cayley_fails_for_F():
    # the Buchstaber law is not Euler's law, so Cayley's form must not hold for it
    params = euler_jacobi()
    F = build_F(6, params)
    assert not sp.cayley_residual(F, build_canonical(6, params).R).is_zero()


def test_jacobi_fkh():
    r = sp.check_jacobi_FKH(12, 7)
    assert r.passed, r.line()


def test_ochanine():
    r = sp.check_ochanine_specialization(12)
    assert r.passed, r.line()
    delta = ochanine().ring.gen("delta")
    _, sn = build_logG_SN(8, ochanine())
    assert sn[3] == delta / 6
