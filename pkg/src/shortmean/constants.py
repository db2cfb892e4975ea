"""Euler-product constants: G(s), Pi(u), its Taylor coefficients, and the
leading constants of the asymptotic expansions.

ln G(s) is evaluated in hybrid form

    ln G(s) = sum_{p <= P0} ln G_p(s)  +  sum_{n=3}^{M} g_n * P_tail(n s),

where P_tail(z) = P(z) - sum_{p <= P0} p^{-z} is the prime zeta tail.
Splitting off the small primes makes the n-series tail decay like
P0^{-n Re s}, so the truncation at order M leaves a bound that is tiny
and is carried along explicitly as an error budget.

Pi(u) = G(1-u) * w(1-u)^a * zeta(2-2u)^b, and the expansion constants are

    K_n = (-1)^n Pi_n / Gamma(a - n) = sin(pi a)/pi * Gamma(n+1-a) * Pi_n,

computed both ways as a consistency check.  Taylor coefficients Pi_n are
extracted by trapezoid quadrature on a circle (node doubling until the
coefficients settle), not by repeated differentiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp, mpc, mpf

from .eulerform import EulerForm, euler_form, inv_tau_euler_form, local_series
from .functions import MultFnId, inv_tau_local_value
from .powerseries import log_one_minus_x
from .sieve import primes_up_to
from .zeta import prime_zeta, prime_zeta_hp, w_hp, zeta_hp

CONSTANTS_DPS = 30
DEFAULT_P0 = 100


class PrecisionError(Exception):
    """Quadrature failed to settle within the node cap."""


# ---------------------------------------------------------------------------
# local Euler factors F_p(s) in closed form

def _local_factor_hp(label, X):
    """F_p as a function of X = p^{-s}, mpmath scalar."""
    if label is MultFnId.INV_TAU_SQ:
        z = mp.sqrt(X)
        return mp.atanh(z) / z  # sum X^k/(2k+1)
    if label is MultFnId.INV_TAU_SQUARED:
        return mp.polylog(2, X) / X  # sum X^k/(k+1)^2
    if label is MultFnId.INV_TWO_OMEGA:
        return (1 - X / 2) / (1 - X)
    if label is MultFnId.INV_TWO_BIG_OMEGA:
        return 1 / (1 - X / 2)
    if label == "inv_tau":
        return -mp.log(1 - X) / X  # sum X^k/(k+1)
    raise ValueError(f"no closed-form local factor for {label!r}")


def _local_factor_np(label, X):
    """Same local factor, numpy-vectorized (complex arrays)."""
    if label is MultFnId.INV_TAU_SQ:
        z = np.sqrt(X)
        return np.arctanh(z) / z
    if label is MultFnId.INV_TAU_SQUARED:
        acc = np.zeros_like(X)
        term = np.ones_like(X)
        for k in range(1, 80):
            term = term * X
            acc = acc + term / (k + 1) ** 2
        return 1.0 + acc
    if label is MultFnId.INV_TWO_OMEGA:
        return (1 - X / 2) / (1 - X)
    if label is MultFnId.INV_TWO_BIG_OMEGA:
        return 1 / (1 - X / 2)
    if label == "inv_tau":
        return -np.log(1 - X) / X
    raise ValueError(f"no closed-form local factor for {label!r}")


def _ln_G_p_hp(ef: EulerForm, p, s):
    X = mp.power(p, -s)
    return (
        mp.log(_local_factor_hp(ef.fid, X))
        + mpf(ef.a.numerator) / ef.a.denominator * mp.log(1 - X)
        + mpf(ef.b.numerator) / ef.b.denominator * mp.log(1 - X * X)
    )


def _q(frac):
    return mpf(frac.numerator) / frac.denominator


def _g_bound(ef):
    return max(abs(g) for g in ef.g[2:]) if len(ef.g) > 2 else Fraction(1, 6)


def ln_G_hp(ef: EulerForm, s, P0=DEFAULT_P0):
    """ln G(s) at working precision; returns (value, truncation_bound).

    Requires Re s > 1/3 (in practice all callers have Re s >= 3/4).
    """
    s = mpc(s)
    sigma = float(s.real)
    if sigma <= 1 / 3:
        raise ValueError("ln_G requires Re s > 1/3")
    # closing the tail bound needs P0^{-(M+1) sigma} to be small
    tail_ratio = P0 ** (-sigma)
    if tail_ratio >= 0.5:
        raise ValueError("Re s too small for the truncation bound to close")
    # the series tail decays like P0^{-n sigma}; stop once it is below
    # working precision rather than always using the full stored order
    digits_per_term = sigma * math.log10(P0)
    M = min(ef.order, max(4, math.ceil((mp.dps + 2) / digits_per_term)))
    total = mpf(0)
    for p in primes_up_to(P0):
        total = total + _ln_G_p_hp(ef, int(p), s)
    small = [mp.power(int(p), -s) for p in primes_up_to(P0)]
    pows = [x * x * x for x in small]
    for n in range(3, M + 1):
        gn = ef.g_at(n)
        if gn != 0:
            ptail = prime_zeta_hp(n * s) - mp.fsum(pows)
            total = total + _q(gn) * ptail
        if n < M:
            pows = [x * y for x, y in zip(pows, small)]
    gmax = float(_g_bound(ef))
    tail_bound = gmax * tail_ratio ** (M + 1) / (1 - tail_ratio) * 2
    return total, tail_bound


def G_product_direct(ef: EulerForm, s, limit=10**6):
    """Oracle: direct product prod_{p <= limit} G_p(s), double precision.

    Returns (value, tail_bound); tail_bound covers the dropped p > limit.
    """
    s = complex(s)
    total = 0.0 + 0.0j
    a, b = float(ef.a), float(ef.b)
    for p_block in np.array_split(primes_up_to(limit), max(1, limit // 10**6)):
        X = np.exp(-s * np.log(p_block.astype(float)))
        lnGp = (
            np.log(_local_factor_np(ef.fid, X))
            + a * np.log(1 - X)
            + b * np.log(1 - X * X)
        )
        total += lnGp.sum()
    # |ln G_p| <~ gmax * p^{-3 sigma} / (1 - p^{-sigma})
    sigma = s.real
    gmax = float(_g_bound(ef))
    tail = (
        2 * gmax * limit ** (1 - 3 * sigma) / ((3 * sigma - 1) * math.log(limit))
    )
    return complex(np.exp(total)), float(tail)


# ---------------------------------------------------------------------------
# Pi(u) and its Taylor coefficients

def pi_function(ef: EulerForm, u, P0=DEFAULT_P0):
    """Pi(u) = G(1-u) * w(1-u)^a * zeta(2-2u)^b, principal branches."""
    u = mpc(u)
    if abs(u) > 0.25 + 1e-12:
        raise ValueError("pi_function requires |u| <= 1/4")
    s = 1 - u
    lng, _ = ln_G_hp(ef, s, P0=P0)
    wbase = w_hp(s)
    zbase = zeta_hp(2 - 2 * u)
    # all base points sit in a disc around the positive reals
    if wbase.real <= 0 or zbase.real <= 0:
        raise ArithmeticError("branch assertion failed: base left the right half-plane")
    return mp.exp(lng) * mp.power(wbase, _q(ef.a)) * mp.power(zbase, _q(ef.b))


@dataclass
class PiExpansion:
    fid: object
    a: Fraction
    Pi: list       # mpf, Pi_0..Pi_N
    K: list        # mpf, K_n = (-1)^n Pi_n / Gamma(a-n)
    radius: float
    nodes: int
    error_budget: float

    def to_json_dict(self):
        return {
            "fid": str(self.fid),
            "a": f"{self.a.numerator}/{self.a.denominator}",
            "Pi": [mp.nstr(v, 30) for v in self.Pi],
            "K": [mp.nstr(v, 30) for v in self.K],
            "radius": self.radius,
            "nodes": self.nodes,
            "errorBudget": self.error_budget,
        }


def reflection_K(a: Fraction, n: int, Pi_n):
    """K_n via sin(pi a)/pi * Gamma(n+1-a) * Pi_n."""
    return mp.sinpi(_q(a)) / mp.pi * mp.gamma(n + 1 - _q(a)) * Pi_n


def gamma_route_K(a: Fraction, n: int, Pi_n):
    """K_n via (-1)^n Pi_n / Gamma(a-n)."""
    return (-1) ** n * Pi_n / mp.gamma(_q(a) - n)


# Pi(u) is analytic in |u| < 1/2 (the nearest singularity is the pole of
# zeta(2-2u) at u = 1/2); using the conservative radius of analyticity
# below keeps the aliasing bound honest with room to spare.
_PI_ANALYTIC_RADIUS = 0.4


def _aliasing_nodes(radius, target=1e-21, sup_bound=4.0, N=4):
    """Node count Q so that trapezoid aliasing | c_{n+Q} r^Q | stays
    below `target` for every extracted coefficient n <= N."""
    ratio = radius / _PI_ANALYTIC_RADIUS
    amp = sup_bound * _PI_ANALYTIC_RADIUS ** (-N)
    Q = math.ceil(math.log(target / amp) / math.log(ratio)) + 2
    return Q + (Q % 2)  # even, so conjugate pairing covers every node


def pi_taylor(ef: EulerForm, N: int, radius=0.125, nodes=None,
              P0=DEFAULT_P0) -> PiExpansion:
    """Taylor coefficients Pi_0..Pi_N by circle quadrature at |u| = radius.

    The trapezoid rule on Q nodes recovers c_n up to aliasing terms
    c_{n+jQ} r^{jQ}; Q is sized from the analyticity radius so that the
    aliasing is below 1e-21 and carried in the error budget.  Pi has real
    Taylor coefficients, so nodes come in conjugate pairs and only the
    upper half circle is evaluated; the imaginary residue of the
    quadrature is folded into the error budget as well.
    """
    if not 0 <= N <= 8:
        raise ValueError("need 0 <= N <= 8")
    if not 0 < radius <= 0.25:
        raise ValueError("need 0 < radius <= 1/4")
    Q = nodes if nodes is not None else _aliasing_nodes(radius, N=N)
    if Q % 2:
        raise ValueError("node count must be even")
    # extraction divides by radius^n, amplifying node-level rounding noise
    # by up to radius^{-N}; pin the working precision so a low ambient
    # mp.dps cannot silently degrade the coefficients
    with mp.workdps(max(mp.dps, CONSTANTS_DPS)):
        half = [
            pi_function(ef, radius * mp.exp(2j * mp.pi * q / Q), P0=P0)
            for q in range(Q // 2 + 1)
        ]
        vals = half + [mp.conj(half[Q - q]) for q in range(Q // 2 + 1, Q)]
        cur = []
        for n in range(N + 1):
            acc = mp.fsum(
                vals[q] * mp.exp(-2j * mp.pi * n * q / Q) for q in range(Q)
            )
            cur.append(acc / (Q * mpf(radius) ** n))

        imag_resid = max(abs(c.imag) for c in cur)
        alias = float(
            4.0
            * _PI_ANALYTIC_RADIUS ** (-N)
            * (radius / _PI_ANALYTIC_RADIUS) ** Q
        )
        _, lng_tail = ln_G_hp(ef, mpc(1 - radius), P0=P0)
        Pi = [c.real for c in cur]
        K = [gamma_route_K(ef.a, n, Pi[n]) for n in range(N + 1)]
    return PiExpansion(
        fid=ef.fid,
        a=ef.a,
        Pi=Pi,
        K=K,
        radius=float(radius),
        nodes=Q,
        error_budget=float(alias + imag_resid + lng_tail),
    )


def constants_report(fid: MultFnId, N=4, order=None):
    """JSON-ready constants for one function id."""
    ef = euler_form(fid) if order is None else euler_form(fid, order)
    old = mp.dps
    mp.dps = CONSTANTS_DPS
    try:
        pe = pi_taylor(ef, N)
        d = pe.to_json_dict()
    finally:
        mp.dps = old
    d["b"] = f"{ef.b.numerator}/{ef.b.denominator}"
    d["flags"] = list(ef.flags)
    return d


# ---------------------------------------------------------------------------
# Ramanujan's leading constant for 1/tau

def _eq1_tail_coeffs(order=10):
    """Rational coefficients d_k of ln[sqrt(p(p-1)) ln(p/(p-1))] in 1/p.

    d_1 vanishes; the series starts at 1/p^2, which is what makes the
    direct product converge.
    """
    series = local_series(inv_tau_local_value, order)  # sum t^k/(k+1)
    lf = series.log() + log_one_minus_x(order).scale(Fraction(1, 2))
    assert lf[1] == 0
    return lf.coeffs


def ramanujan_A0_product(limit=10**6, tail_order=8):
    """A0 = (1/sqrt(pi)) prod_p sqrt(p(p-1)) ln(p/(p-1)), log-domain sum
    over p <= limit with a series tail correction.  Returns (value, bound).
    """
    p = primes_up_to(limit).astype(float)
    logf = 0.5 * (np.log(p) + np.log(p - 1)) + np.log(-np.log1p(-1.0 / p))
    total = float(np.sum(logf))
    d = _eq1_tail_coeffs(tail_order)
    partial_bound = 0.0
    for k in range(2, tail_order + 1):
        if d[k] == 0:
            continue
        pz = prime_zeta(float(k)).real
        ptail = pz - float(np.sum(p ** (-float(k))))
        total += float(d[k]) * ptail
    # next omitted coefficient bounds the remainder
    nxt = _eq1_tail_coeffs(tail_order + 1)[tail_order + 1]
    ptail_next = prime_zeta(float(tail_order + 1)).real - float(
        np.sum(p ** (-float(tail_order + 1)))
    )
    partial_bound = 2 * abs(float(nxt)) * abs(ptail_next) + 1e-12
    return math.exp(total) / math.sqrt(math.pi), partial_bound


def ramanujan_A0_eulerform(order=24):
    """Independent route: A0 = Pi_0 / Gamma(1/2) from the 1/tau Euler form."""
    ef = inv_tau_euler_form(order)
    old = mp.dps
    mp.dps = CONSTANTS_DPS
    try:
        pi0 = pi_function(ef, 0)
        return float(pi0.real / mp.sqrt(mp.pi))
    finally:
        mp.dps = old


def ramanujan_A0():
    """Best value with reported error bound: (value, bound, cross_delta)."""
    v1, bound = ramanujan_A0_product()
    v2 = ramanujan_A0_eulerform()
    return v2, bound, abs(v1 - v2)
