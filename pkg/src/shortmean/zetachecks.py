"""Desk-scale numerical checks of the zeta estimates used by the
short-interval machinery: the critical-line second moment, the incomplete
Gamma tail bound, the subconvex growth envelope with exponent constant
c = 64/205, and the small-arc bounds around s = 1/2.

All scans run in double precision over vectorized zeta evaluations;
quadrature is Gauss-Legendre on fixed panels with adaptive halving when
two estimates of a panel disagree by more than 1e-4 relative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .zeta import zeta_many

GROWTH_C = Fraction(64, 205)

# Gauss-Legendre nodes/weights on [-1, 1]
_GL8 = np.polynomial.legendre.leggauss(8)
_GL16 = np.polynomial.legendre.leggauss(16)


def _panel_values(lows, width, rule):
    """Critical-line |zeta|^2 at the mapped GL nodes of every panel.

    Returns (points shape (npanel, nnodes), weights) with the affine map
    onto [low, low+width] folded into the weights.
    """
    x, w = rule
    t = lows[:, None] + (x[None, :] + 1.0) * (width / 2.0)
    s = 0.5 + 1j * t.ravel()
    vals = np.abs(zeta_many(s)) ** 2
    return vals.reshape(t.shape), w * (width / 2.0)


def second_moment(T: float, panel_width=0.25, tol=1e-4, max_halvings=6) -> float:
    """int_0^T |zeta(1/2+it)|^2 dt by GL quadrature on panels <= 0.25 wide.

    Each panel is estimated with 8-node and 16-node rules; panels whose two
    estimates disagree by more than `tol` relative are halved (up to
    `max_halvings` rounds) and re-integrated.
    """
    if T < 10:
        raise ValueError("need T >= 10")
    npanel = int(math.ceil(T / panel_width))
    width = T / npanel
    lows = np.arange(npanel) * width

    def integrate(lows, width):
        v8, w8 = _panel_values(lows, width, _GL8)
        v16, w16 = _panel_values(lows, width, _GL16)
        est8 = v8 @ w8
        est16 = v16 @ w16
        bad = np.abs(est16 - est8) > tol * np.maximum(np.abs(est16), 1e-30)
        return est16, bad

    total = 0.0
    rounds = 0
    while True:
        est, bad = integrate(lows, width)
        total += float(np.sum(est[~bad]))
        if not bad.any():
            break
        rounds += 1
        if rounds > max_halvings:
            # accept the finer estimate on the stubborn panels
            total += float(np.sum(est[bad]))
            break
        lows = np.repeat(lows[bad], 2)
        lows[1::2] += width / 2.0
        width /= 2.0
    return total


def gamma_tail_check(lam: float, k: int, gamma: Fraction):
    """Check int_lam^inf w^{k-gamma} e^{-w} dw  <  e * k! * lam^{k-gamma} e^{-lam}.

    Returns (lhs, rhs, holds).  The integral is GL quadrature over
    [lam, lam+45] plus an analytic tail bound for the rest.
    """
    gamma = Fraction(gamma)
    if not (lam > 1 and 0 < gamma < 1 and k >= 1):
        raise ValueError("need lam > 1, 0 < gamma < 1, k >= 1")
    expo = k - float(gamma)
    cut = lam + 45.0
    x, w = _GL16
    npanel = 90  # half-unit panels over [lam, cut]
    width = (cut - lam) / npanel
    lows = lam + np.arange(npanel) * width
    t = lows[:, None] + (x[None, :] + 1.0) * (width / 2.0)
    lhs = float(np.sum(t**expo * np.exp(-t) @ (w * width / 2.0)))
    # beyond `cut`, w^{expo} <= cut^{expo} e^{(w-cut) expo/cut}, so the tail
    # is below cut^{expo} e^{-cut} / (1 - expo/cut)
    tail = cut**expo * math.exp(-cut) / (1.0 - expo / cut)
    lhs += tail
    rhs = math.e * math.factorial(k) * lam**expo * math.exp(-lam)
    return lhs, rhs, bool(lhs < rhs)


@dataclass
class GrowthEnvelopeReport:
    c: Fraction
    samples: list  # (sigma, t, abs_zeta, envelope, ratio)
    fittedK: float

    def csv_rows(self):
        yield ("sigma", "t", "abs_zeta", "envelope", "ratio")
        for row in self.samples:
            yield row


def growth_envelope(sigmas=None, ts=None) -> GrowthEnvelopeReport:
    """Fitted constant of |zeta(sigma+it)| <= K t^{c(1-sigma)} ln t over a grid.

    Defaults cover sigma in [1/2, 1] and t in [10, 1e4].
    """
    if sigmas is None:
        sigmas = [0.5 + 0.1 * i for i in range(6)]
    if ts is None:
        ts = [10.0 * 10 ** (0.25 * i) for i in range(13)]  # 10 .. 1e4
    sigmas = [float(s) for s in sigmas]
    ts = [float(t) for t in ts]
    if not sigmas or not ts:
        raise ValueError("empty grid")
    for s in sigmas:
        if not 0.5 <= s <= 1.0:
            raise ValueError("sigma outside [1/2, 1]")
    for t in ts:
        if not 10.0 <= t <= 1e4:
            raise ValueError("t outside [10, 1e4]")
    c = float(GROWTH_C)
    pts = np.array([complex(s, t) for s in sigmas for t in ts])
    vals = np.abs(zeta_many(pts))
    samples = []
    fittedK = 0.0
    i = 0
    for s in sigmas:
        for t in ts:
            env = t ** (c * (1.0 - s)) * math.log(t)
            ratio = float(vals[i]) / env
            samples.append((s, t, float(vals[i]), env, ratio))
            fittedK = max(fittedK, ratio)
            i += 1
    return GrowthEnvelopeReport(c=GROWTH_C, samples=samples, fittedK=fittedK)


def arc_bounds_check(delta: float, angles=64):
    """Samples s = 1/2 + delta e^{i phi}, phi in [-pi/2, pi/2].

    Returns (maxZeta, minZeta2) = (max |zeta(s)|, min |zeta(2s)| * delta).
    The interesting regime has max <= 3.2 and min >= 0.4; callers report
    rather than assert, since the underlying bound is asymptotic.
    """
    if not 0 < delta <= 0.05:
        raise ValueError("need 0 < delta <= 0.05")
    phi = np.linspace(-math.pi / 2, math.pi / 2, angles)
    s = 0.5 + delta * np.exp(1j * phi)
    max_zeta = float(np.max(np.abs(zeta_many(s))))
    min_zeta2 = float(np.min(np.abs(zeta_many(2 * s))) * delta)
    return max_zeta, min_zeta2
