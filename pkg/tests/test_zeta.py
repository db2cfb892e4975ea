"""Zeta evaluators: Euler-Maclaurin double/extended, w(s), prime zeta,
the sawtooth integral representation, and the first critical-line zero."""

import math
import random

import numpy as np
import pytest
from mpmath import mp

from shortmean.zeta import (
    first_zero,
    hardy_z,
    prime_zeta,
    prime_zeta_direct,
    prime_zeta_hp,
    w,
    w_hp,
    w_many,
    zeta,
    zeta_hp,
    zeta_integral_rep,
    zeta_many,
)


def test_zeta_two_is_pi_squared_over_six():
    assert abs(zeta(2.0 + 0j) - math.pi**2 / 6) < 1e-12


def test_zeta_matches_mpmath_on_strip_samples():
    rng = random.Random(7)
    for _ in range(25):
        s = complex(rng.uniform(0.5, 3.0), rng.uniform(-500, 500))
        ref = complex(mp.zeta(mp.mpc(s)))
        assert abs(zeta(s) - ref) <= 1e-10 * max(1.0, abs(ref)), s


def test_zeta_many_matches_scalar():
    pts = np.array([0.5 + 14j, 2.0 + 0j, 0.75 + 999.5j, 1.5 - 30j])
    vec = zeta_many(pts)
    for i, s in enumerate(pts):
        assert abs(vec[i] - zeta(complex(s))) < 1e-12


def test_conjugate_symmetry():
    rng = random.Random(11)
    for _ in range(10):
        s = complex(rng.uniform(0.5, 2.5), rng.uniform(1, 300))
        assert zeta(s.conjugate()) == pytest.approx(
            zeta(s).conjugate(), rel=1e-12
        )


def test_w_at_one_exact_and_continuous():
    assert w(1.0 + 0j) == 1.0
    assert abs(w(complex(1 + 1e-6)) - 1) <= 1e-5
    assert abs(w(complex(1 - 1e-6)) - 1) <= 1e-5


def test_w_matches_definition_away_from_pole():
    for s in (2.0 + 0j, 0.75 + 3j, 1.5 - 7j):
        assert w(s) == pytest.approx((s - 1) * zeta(s), rel=1e-12)
    arr = np.array([2.0 + 0j, 0.75 + 3j])
    assert np.allclose(w_many(arr), [w(2.0 + 0j), w(0.75 + 3j)])


def test_w_negative_real_segment_sign():
    # w(1-u) for u = 0.25: negative times negative is positive
    val = w(complex(0.75))
    assert val.real > 0 and abs(val.imag) < 1e-15


def test_zeta_hp_matches_mpmath():
    old = mp.dps
    mp.dps = 40
    try:
        for s in (mp.mpc(2), mp.mpc(0.75, 10), mp.mpc(3.3, -2.5)):
            assert abs(zeta_hp(s) - mp.zeta(s)) < mp.mpf(10) ** (-35)
        assert w_hp(mp.mpc(1)) == 1
    finally:
        mp.dps = old


def test_prime_zeta_against_direct_oracle():
    for s in (2.0, 3.0, 4.0, 6.0):
        direct, tail = prime_zeta_direct(s, 10**7)
        assert abs(prime_zeta(s).real - direct) <= tail + 1e-8


def test_prime_zeta_known_values():
    assert prime_zeta(2.0).real == pytest.approx(0.4522474200410654, abs=1e-12)
    assert prime_zeta(4.0).real == pytest.approx(0.0769931397643609, abs=1e-12)


def test_prime_zeta_hp_matches_mpmath():
    old = mp.dps
    mp.dps = 30
    try:
        for s in (mp.mpc(2), mp.mpc(3.5, 1.0)):
            assert abs(prime_zeta_hp(s) - mp.primezeta(s)) < mp.mpf(10) ** (-25)
    finally:
        mp.dps = old


def test_prime_zeta_domain_error():
    with pytest.raises(ValueError):
        prime_zeta(0.9)


def test_prime_zeta_dropping_two_shrinks_modulus():
    for s in (1.5, 2.0, 4.0):
        full = prime_zeta(s).real
        assert abs(full - 2.0**-s) < abs(full)


def test_integral_representation_cross_check():
    # sawtooth representation vs Euler-Maclaurin at seeded random points
    rng = random.Random(20240826)
    for _ in range(10):
        s = complex(rng.uniform(0.6, 2.5), rng.uniform(-20, 20))
        if abs(s - 1) < 0.1:
            continue
        val, bound = zeta_integral_rep(s, nodes=16)
        assert abs(val - zeta(s)) <= max(bound, 1e-6)


def test_first_zero_location():
    t0 = first_zero()
    assert t0 == pytest.approx(14.134725141734693, abs=1e-6)
    assert abs(zeta(complex(0.5, t0))) < 1e-5


def test_hardy_function_is_real_signed():
    assert hardy_z(14.0) * hardy_z(14.2) < 0
