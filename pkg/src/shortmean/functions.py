"""The four target multiplicative functions and factorization records.

Each function is determined by its value on prime powers p^k, which here
depends only on the exponent k:

    f1(p^k) = 1/(2k+1)      (reciprocal of tau(n^2))
    f2(p^k) = 1/(k+1)^2     (reciprocal of tau(n)^2)
    f3(p^k) = 1/2 for k>=1  (2^{-omega(n)})
    f4(p^k) = 2^{-k}        (2^{-Omega(n)})

The value at n = 1 is the empty product, 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class MultFnId(enum.Enum):
    """Selector for the four target functions."""

    INV_TAU_SQ = "f1"        # 1/tau(n^2)
    INV_TAU_SQUARED = "f2"   # 1/tau(n)^2
    INV_TWO_OMEGA = "f3"     # 2^{-omega(n)}
    INV_TWO_BIG_OMEGA = "f4" # 2^{-Omega(n)}

    def __str__(self):
        return self.value


ALL_FNS = tuple(MultFnId)

# Index of the 1/a denominator (the zeta-power k_j of each theorem).
ZETA_POWER_DENOM = {
    MultFnId.INV_TAU_SQ: 3,
    MultFnId.INV_TAU_SQUARED: 4,
    MultFnId.INV_TWO_OMEGA: 2,
    MultFnId.INV_TWO_BIG_OMEGA: 2,
}


def local_value(fid: MultFnId, k: int) -> Fraction:
    """f(p^k) as an exact rational; k = 0 gives 1."""
    if k < 0:
        raise ValueError("exponent must be >= 0")
    if k == 0:
        return Fraction(1)
    if fid is MultFnId.INV_TAU_SQ:
        return Fraction(1, 2 * k + 1)
    if fid is MultFnId.INV_TAU_SQUARED:
        return Fraction(1, (k + 1) ** 2)
    if fid is MultFnId.INV_TWO_OMEGA:
        return Fraction(1, 2)
    if fid is MultFnId.INV_TWO_BIG_OMEGA:
        return Fraction(1, 2**k)
    raise ValueError(f"unknown function id {fid!r}")


def inv_tau_local_value(k: int) -> Fraction:
    """Local rule of 1/tau(n), used by the Ramanujan constant cross-check."""
    if k < 0:
        raise ValueError("exponent must be >= 0")
    return Fraction(1, k + 1)


@dataclass(frozen=True)
class Factorization:
    """Complete factorization of n as ordered (prime, exponent) pairs."""

    n: int
    factors: tuple  # ((p1, r1), (p2, r2), ...) with p1 < p2 < ...

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        prod = 1
        last_p = 0
        for p, r in self.factors:
            if p <= last_p:
                raise ValueError("primes must be distinct and increasing")
            if r < 1:
                raise ValueError("exponents must be >= 1")
            last_p = p
            prod *= p**r
        if prod != self.n:
            raise ValueError(f"factor product {prod} != n = {self.n}")

    @property
    def omega(self) -> int:
        return len(self.factors)

    @property
    def big_omega(self) -> int:
        return sum(r for _, r in self.factors)


def factorize(n: int) -> Factorization:
    """Trial-division factorization; fine for small n and for test oracles."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            r = 0
            while m % d == 0:
                m //= d
                r += 1
            factors.append((d, r))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def f_value(fid: MultFnId, fac: Factorization) -> Fraction:
    """f(n) = product of local values over the prime-power factors."""
    out = Fraction(1)
    for _, r in fac.factors:
        out *= local_value(fid, r)
    return out
