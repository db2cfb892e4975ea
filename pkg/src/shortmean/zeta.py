"""Riemann zeta evaluation: Euler-Maclaurin in double and extended precision.

Two evaluators share one algorithm:

  * `zeta_many` - numpy-vectorized double precision for critical-line and
    vertical-line scans (t up to ~10^4);
  * `zeta_hp` - mpmath arbitrary precision for the constants pipeline
    (small |t|, 50+ significant digits).

`w(s) = (s-1) zeta(s)` is evaluated with the (s-1) factor distributed
through the Euler-Maclaurin terms, so the removable singularity at s = 1
costs nothing: w(1) = 1 without any limit-taking.

`zeta_integral_rep` implements the independent representation
zeta(s) = 1/2 + 1/(s-1) + s * int_1^oo (1/2 - {u}) u^{-s-1} du
by panel quadrature; it serves as a cross-check of the main evaluator.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from mpmath import mp, mpc, mpf

from .sieve import primes_up_to

_EM_K = 36  # Bernoulli correction depth (double precision)

# B_{2k} for k = 1.._EM_K+1 as floats; |B_72|/72! etc. handled via ratios.
def _bernoulli_floats(kmax):
    old = mp.dps
    mp.dps = 30
    try:
        return [float(mp.bernoulli(2 * k)) for k in range(1, kmax + 2)]
    finally:
        mp.dps = old


_B2K = _bernoulli_floats(_EM_K)


def _em_terms_double(s, N, K=_EM_K, sum_to_N=True):
    """Euler-Maclaurin pieces shared by zeta and w, vectorized over s.

    Returns (direct, boundary, corrections) with
      zeta(s) = direct + N^{1-s}/(s-1) + boundary + corrections.
    The N^{1-s}/(s-1) pole piece is left to the caller.
    """
    s = np.asarray(s, dtype=complex)
    direct = np.zeros_like(s)
    block = 2048
    for a in range(1, N + 1, block):
        n = np.arange(a, min(a + block, N + 1), dtype=float)
        direct += np.exp(-np.multiply.outer(s, np.log(n))).sum(axis=1)
    n_pow = np.exp(-s * math.log(N))  # N^{-s}
    boundary = -0.5 * n_pow
    term = (_B2K[0] / 2.0) * s * n_pow / N  # k = 1 term
    corr = term.copy()
    invN2 = 1.0 / (N * N)
    for k in range(1, K):
        ratio = _B2K[k] / _B2K[k - 1] / ((2 * k + 1) * (2 * k + 2))
        term = term * (s + (2 * k - 1)) * (s + 2 * k) * (ratio * invN2)
        corr += term
    return direct, n_pow, boundary, corr


def _em_N(tmax):
    return max(24, int(0.25 * tmax) + 8)


def zeta_em(s, N=None):
    """zeta at an array of points, one shared truncation length N."""
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    if N is None:
        N = _em_N(float(np.max(np.abs(s.imag))))
    direct, n_pow, boundary, corr = _em_terms_double(s, N)
    pole = n_pow * N / (s - 1.0)  # N^{1-s}/(s-1)
    return direct + pole + boundary + corr


def zeta_many(s):
    """Vectorized zeta for arbitrary batches; groups points by height.

    Accuracy ~1e-12 relative for 1/2 <= Re s, |Im s| <= ~2e4.
    """
    s = np.atleast_1d(np.asarray(s, dtype=complex)).ravel()
    if np.any(s == 1.0):
        raise ValueError("zeta pole at s = 1")
    out = np.empty_like(s)
    order = np.argsort(np.abs(s.imag), kind="stable")
    group = 1024
    for a in range(0, len(s), group):
        idx = order[a : a + group]
        sg = s[idx]
        out[idx] = zeta_em(sg)
    return out


def zeta(s):
    """Single-point double-precision zeta (Re s > 0, s != 1)."""
    return complex(zeta_many(np.array([s]))[0])


def w_many(s):
    """(s-1)*zeta(s), entire; removable singularity handled exactly."""
    s = np.atleast_1d(np.asarray(s, dtype=complex)).ravel()
    out = np.empty_like(s)
    order = np.argsort(np.abs(s.imag), kind="stable")
    group = 1024
    for a in range(0, len(s), group):
        idx = order[a : a + group]
        sg = s[idx]
        N = _em_N(float(np.max(np.abs(sg.imag))))
        direct, n_pow, boundary, corr = _em_terms_double(sg, N)
        out[idx] = (sg - 1.0) * (direct + boundary + corr) + n_pow * N
    return out


def w(s):
    return complex(w_many(np.array([s]))[0])


# ---------------------------------------------------------------------------
# high-precision evaluator (mpmath)

def zeta_hp(s):
    """Euler-Maclaurin zeta at working precision mp.dps; small |t| only."""
    s = mpc(s)
    if s == 1:
        raise ValueError("zeta pole at s = 1")
    if s.real > (mp.dps + 5) / 2.2:
        # plain Dirichlet sum needs only ~10^2.2 terms here
        nmax = max(2, int(10 ** ((mp.dps + 5) / float(s.real))) + 1)
        with mp.extradps(10):
            total = mp.fsum(mp.power(n, -s) for n in range(1, nmax + 1))
        return mpc(total)
    t = abs(s.imag)
    N = max(12, int(0.45 * mp.dps + 1.3 * t) + 4)
    # target accuracy is set by the caller's precision; the extra guard
    # digits below are working room, not a tighter goal (N is sized for
    # mp.dps, and asking for more would push past the series' minimum term)
    eps = mpf(10) ** (-(mp.dps + 5))
    with mp.extradps(10):
        direct = mp.fsum(mp.power(n, -s) for n in range(1, N + 1))
        n_pow = mp.power(N, -s)
        total = direct + n_pow * N / (s - 1) - n_pow / 2
        term = mp.bernoulli(2) / 2 * s * n_pow / N
        k = 1
        prev = abs(term)
        while True:
            total += term
            k += 1
            term = (
                term
                * (s + (2 * k - 3))
                * (s + (2 * k - 2))
                * (mp.bernoulli(2 * k) / mp.bernoulli(2 * k - 2))
                / ((2 * k - 1) * (2 * k))
                / (N * N)
            )
            mag = abs(term)
            if mag < eps:
                break
            if mag > prev:  # divergent regime; N was large enough not to reach it
                raise ArithmeticError("Euler-Maclaurin corrections diverging")
            prev = mag
    return mpc(total)


def w_hp(s):
    """(s-1)*zeta(s) at working precision; exact 1 at s = 1."""
    s = mpc(s)
    if s == 1:
        return mpc(1)
    return (s - 1) * zeta_hp(s)


# ---------------------------------------------------------------------------
# prime zeta function  P(s) = sum_p p^{-s}

def _mobius_upto(kmax):
    mu = np.ones(kmax + 1, dtype=np.int64)
    for p in primes_up_to(kmax):
        p = int(p)
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    return mu


def prime_zeta_hp(s):
    """P(s) via the Mobius-log series sum_k mu(k)/k * log zeta(ks)."""
    s = mpc(s)
    if s.real <= 1:
        raise ValueError("prime_zeta requires Re s > 1")
    eps = mpf(10) ** (-(mp.dps + 5))
    kmax = max(4, int((mp.dps + 6) * math.log(10) / (float(s.real) * math.log(2))) + 2)
    mu = _mobius_upto(kmax)
    with mp.extradps(10):
        total = mpf(0)
        for k in range(1, kmax + 1):
            if mu[k] == 0:
                continue
            term = mp.log(zeta_hp(k * s)) * mp.mpf(int(mu[k])) / k
            total += term
            if k > 1 and abs(term) < eps:
                break
    return mpc(total)


def prime_zeta(s):
    """Double-precision P(s) for Re s > 1 (scalar)."""
    s = complex(s)
    if s.real <= 1:
        raise ValueError("prime_zeta requires Re s > 1")
    kmax = max(4, int(60.0 / s.real) + 2)  # |log zeta(ks)| ~ 2^{-k Re s}
    mu = _mobius_upto(kmax)
    total = 0.0 + 0.0j
    for k in range(1, kmax + 1):
        if mu[k] == 0:
            continue
        zk = zeta(k * s)
        term = np.log(zk) * mu[k] / k
        total += term
        if k > 1 and abs(term) < 1e-17:
            break
    return complex(total)


def prime_zeta_direct(s, limit=10**7):
    """Oracle: direct sum over primes <= limit plus an integral tail estimate.

    Returns (value, tail_bound).  Real s only (the oracle role).
    """
    s = float(s)
    p = primes_up_to(limit).astype(float)
    val = float(np.sum(p**-s))
    # tail ~ int_limit^oo dt / (t^s ln t) <= limit^{1-s} / ((s-1) ln limit)
    tail = limit ** (1.0 - s) / ((s - 1.0) * math.log(limit))
    return val, tail


# ---------------------------------------------------------------------------
# independent integral representation (cross-check only)

def zeta_integral_rep(s, panels=10_000, nodes=8):
    """zeta via 1/2 + 1/(s-1) + s * int_1^oo (1/2 - {u}) u^{-s-1} du.

    Panel-per-integer Gauss-Legendre quadrature on [1, panels+1]; the
    dropped tail is bounded by |s(s+1)| / (8 (sigma+1) M^{sigma+1})
    (integration by parts; the sawtooth antiderivative is <= 1/8).
    Returns (value, tail_bound).
    """
    s = complex(s)
    if s.real <= 0 or s == 1:
        raise ValueError("representation requires Re s > 0, s != 1")
    xg, wg = np.polynomial.legendre.leggauss(nodes)
    m = np.arange(1, panels + 1, dtype=float)[:, None]
    u = m + 0.5 * (xg[None, :] + 1.0)
    rho = 0.5 - (u - m)
    integrand = rho * np.exp((-s - 1) * np.log(u))
    integral = 0.5 * np.sum(integrand * wg[None, :])
    M = panels + 1
    tail_bound = abs(s * (s + 1)) / (8 * (s.real + 1) * M ** (s.real + 1))
    val = 0.5 + 1.0 / (s - 1.0) + s * integral
    return complex(val), float(tail_bound)


# ---------------------------------------------------------------------------
# Hardy function sanity zero

def hardy_z(t):
    """Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t."""
    old = mp.dps
    mp.dps = 25
    try:
        theta = mp.im(mp.loggamma(mpf(0.25) + 0.5j * t)) - t / 2 * mp.log(mp.pi)
        theta = float(theta)
    finally:
        mp.dps = old
    z = zeta(0.5 + 1j * t)
    return (complex(math.cos(theta), math.sin(theta)) * z).real


def first_zero(lo=14.0, hi=14.2, tol=1e-9):
    """Locate the first critical-line zero by bisection on Hardy Z."""
    flo, fhi = hardy_z(lo), hardy_z(hi)
    if flo * fhi > 0:
        raise ValueError("no sign change in bracket")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = hardy_z(mid)
        if flo * fm <= 0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)
