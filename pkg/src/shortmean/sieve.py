"""Segmented factorization sieve and exact interval sums.

Ground truth for every asymptotic claim: S_j(x;h) = sum_{x < n <= x+h} f_j(n)
computed exactly.  The fast path never materializes factorizations; per
segment it tracks the four integer statistics

    tau(n^2), tau(n), omega(n), Omega(n)

by dividing out base primes level by level, then aggregates counts of the
(small, repetitive) statistic values.  The exact rational sum is a short
sum of count/value terms, so it stays cheap even over 10^8 integers.
"""

from __future__ import annotations

import os
import struct
import tempfile
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .functions import MultFnId, Factorization

SEGMENT_WIDTH = 1 << 20
SEGMENT_BUDGET = 1 << 22   # hard cap on a single sieve_segment request
MAX_N = (1 << 63) - 1
BASE_PRIME_BUDGET = 1 << 26          # largest base-prime table we will build
SIEVE_MAX_POINT = BASE_PRIME_BUDGET**2  # so endpoints stay within 2^52

CACHE_MAGIC = b"MVFP1"


class CapacityError(Exception):
    """Requested interval exceeds the configured sieve budget."""


# ---------------------------------------------------------------------------
# prime tables

_prime_cache = {}


def _cache_path(limit):
    d = os.environ.get("MVF_CACHE_DIR")
    if not d:
        return None
    return os.path.join(d, f"primes_{limit}.mvfp")


def _load_prime_file(path):
    with open(path, "rb") as fh:
        magic = fh.read(len(CACHE_MAGIC))
        if magic != CACHE_MAGIC:
            return None
        data = fh.read()
    if len(data) % 8:
        return None
    return np.frombuffer(data, dtype="<u8").astype(np.int64)


def _store_prime_file(path, primes):
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(CACHE_MAGIC)
            fh.write(primes.astype("<u8").tobytes())
        os.replace(tmp, path)  # atomic publish
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit, int64, cached in memory and optionally on disk."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    if limit in _prime_cache:
        return _prime_cache[limit]
    path = _cache_path(limit)
    if path and os.path.exists(path):
        primes = _load_prime_file(path)
        if primes is not None:
            _prime_cache[limit] = primes
            return primes
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    primes = np.nonzero(mask)[0].astype(np.int64)
    _prime_cache[limit] = primes
    if path:
        _store_prime_file(path, primes)
    return primes


# ---------------------------------------------------------------------------
# per-segment statistics

def _segment_stats(lo, hi, base_primes):
    """Arrays (tau_n2, tau, omega, big_omega) for n = lo..hi inclusive."""
    width = hi - lo + 1
    residual = np.arange(lo, hi + 1, dtype=np.int64)
    tau_n2 = np.ones(width, dtype=np.int64)
    tau = np.ones(width, dtype=np.int64)
    omega = np.zeros(width, dtype=np.int16)
    big_omega = np.zeros(width, dtype=np.int16)

    for p in base_primes:
        p = int(p)
        if p * p > hi:
            break
        start = (-lo) % p
        if start >= width:
            continue
        idx = np.arange(start, width, p)
        omega[idx] += 1
        big_omega[idx] += 1
        tau_n2[idx] *= 3
        tau[idx] *= 2
        residual[idx] //= p
        q = p * p
        e = 2
        while q <= hi:
            start_q = (-lo) % q
            if start_q >= width:
                break
            idx = np.arange(start_q, width, q)
            big_omega[idx] += 1
            # replace the level-(e-1) factor with the level-e one
            tau_n2[idx] = tau_n2[idx] // (2 * e - 1) * (2 * e + 1)
            tau[idx] = tau[idx] // e * (e + 1)
            residual[idx] //= p
            q *= p
            e += 1

    left = residual > 1  # exactly one prime factor > sqrt(hi) remains
    omega[left] += 1
    big_omega[left] += 1
    tau_n2[left] *= 3
    tau[left] *= 2
    return tau_n2, tau, omega, big_omega


_STAT_INDEX = {
    MultFnId.INV_TAU_SQ: 0,
    MultFnId.INV_TAU_SQUARED: 1,
    MultFnId.INV_TWO_OMEGA: 2,
    MultFnId.INV_TWO_BIG_OMEGA: 3,
}


def _denominator_counts(stats, fid):
    """Counter mapping f(n) = 1/d to the number of n with that denominator."""
    tau_n2, tau, omega, big_omega = stats
    if fid is MultFnId.INV_TAU_SQ:
        vals = tau_n2
    elif fid is MultFnId.INV_TAU_SQUARED:
        vals = tau.astype(object) ** 2 if tau.max() > 3_000_000 else tau**2
    elif fid is MultFnId.INV_TWO_OMEGA:
        vals = np.int64(1) << omega.astype(np.int64)
    else:
        vals = np.int64(1) << big_omega.astype(np.int64)
    uniq, counts = np.unique(vals, return_counts=True)
    return Counter(dict(zip((int(v) for v in uniq), (int(c) for c in counts))))


# ---------------------------------------------------------------------------
# public operations

def sieve_segment(lo: int, hi: int):
    """Complete factorizations of every n in [lo, hi], in increasing order."""
    if lo < 1 or hi < lo:
        raise ValueError(f"need 1 <= lo <= hi, got ({lo}, {hi})")
    if hi > MAX_N:
        raise CapacityError("interval endpoint beyond 2^63 - 1")
    if hi - lo + 1 > SEGMENT_BUDGET:
        raise CapacityError(
            f"segment of {hi - lo + 1} integers exceeds budget {SEGMENT_BUDGET}"
        )
    width = hi - lo + 1
    base = primes_up_to(isqrt(hi))
    residual = list(range(lo, hi + 1))
    factors = [[] for _ in range(width)]
    for p in base:
        p = int(p)
        start = (-lo) % p
        for i in range(start, width, p):
            r = 0
            while residual[i] % p == 0:
                residual[i] //= p
                r += 1
            factors[i].append((p, r))
    out = []
    for i in range(width):
        if residual[i] > 1:
            factors[i].append((residual[i], 1))
        out.append(Factorization(lo + i, tuple(factors[i])))
    return out


@dataclass(frozen=True)
class IntervalSum:
    fid: MultFnId
    x: int
    h: int
    exact: Fraction
    approx: float


def _neumaier_sum(terms):
    s = 0.0
    c = 0.0
    for t in terms:
        t = float(t)
        tmp = s + t
        if abs(s) >= abs(t):
            c += (s - tmp) + t
        else:
            c += (t - tmp) + s
        s = tmp
    return s + c


def _counts_to_sums(counts):
    exact = sum(
        (Fraction(c, d) for d, c in sorted(counts.items())), Fraction(0)
    )
    approx = _neumaier_sum(c / d for d, c in sorted(counts.items()))
    return exact, approx


def interval_counts(x: int, h: int, threads: int = 1):
    """Denominator counts of all four functions over x < n <= x+h."""
    if x < 0 or h < 1:
        raise ValueError("need x >= 0 and h >= 1")
    lo, hi = x + 1, x + h
    if hi > MAX_N:
        raise CapacityError("interval endpoint beyond 2^63 - 1")
    if hi > SIEVE_MAX_POINT:
        raise CapacityError(
            "interval endpoint beyond the sieve budget "
            f"(needs base primes above {BASE_PRIME_BUDGET})"
        )
    base = primes_up_to(isqrt(hi))
    seg_bounds = [
        (a, min(a + SEGMENT_WIDTH - 1, hi)) for a in range(lo, hi + 1, SEGMENT_WIDTH)
    ]

    def work(bounds):
        a, b = bounds
        stats = _segment_stats(a, b, base)
        return {fid: _denominator_counts(stats, fid) for fid in MultFnId}

    totals = {fid: Counter() for fid in MultFnId}
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, seg_bounds))
    else:
        results = [work(b) for b in seg_bounds]
    for res in results:  # ascending-segment order; merge is commutative anyway
        for fid in MultFnId:
            totals[fid].update(res[fid])
    return totals


def interval_sums_all(x: int, h: int, threads: int = 1):
    """IntervalSum for all four functions over the same interval (one sieve pass)."""
    totals = interval_counts(x, h, threads=threads)
    out = {}
    for fid in MultFnId:
        exact, approx = _counts_to_sums(totals[fid])
        out[fid] = IntervalSum(fid=fid, x=x, h=h, exact=exact, approx=approx)
    return out


def interval_sum(fid: MultFnId, x: int, h: int, threads: int = 1) -> IntervalSum:
    """Exact S_j(x;h) = sum over x < n <= x+h of f_j(n)."""
    return interval_sums_all(x, h, threads=threads)[fid]
