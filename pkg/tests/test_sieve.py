"""Segmented sieve: exact interval sums, thread invariance, caching."""

import os
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shortmean.functions import ALL_FNS, MultFnId, f_value, factorize
from shortmean.sieve import (
    CapacityError,
    MAX_N,
    interval_counts,
    interval_sum,
    interval_sums_all,
    primes_up_to,
    sieve_segment,
)


def brute_sum(fid, x, h):
    return sum(f_value(fid, factorize(n)) for n in range(x + 1, x + h + 1))


def test_primes_up_to_small():
    assert list(primes_up_to(30)) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_primes_cache_file_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("MVF_CACHE_DIR", str(tmp_path))
    import shortmean.sieve as sv

    sv._prime_cache.clear()
    first = primes_up_to(10**4)
    files = list(tmp_path.iterdir())
    assert files, "expected a cache file"
    sv._prime_cache.clear()
    second = primes_up_to(10**4)
    assert np.array_equal(first, second)


def test_sum_first_five_inv_tau_sq():
    s = interval_sum(MultFnId.INV_TAU_SQ, 0, 5)
    assert s.exact == Fraction(11, 5)
    assert s.approx == pytest.approx(2.2, rel=1e-15)


def test_exact_sums_match_brute_force_small():
    for fid in ALL_FNS:
        assert interval_sum(fid, 0, 300).exact == brute_sum(fid, 0, 300)


def test_exact_sums_match_brute_force_offset():
    x, h = 99991, 173
    for fid in ALL_FNS:
        assert interval_sum(fid, x, h).exact == brute_sum(fid, x, h)


def test_interval_sums_all_consistent_with_single():
    x, h = 10**6, 2000
    sums = interval_sums_all(x, h)
    for fid in ALL_FNS:
        assert sums[fid].exact == interval_sum(fid, x, h).exact


def test_thread_count_does_not_change_results():
    x, h = 10**7, 3 * 10**5
    a = interval_sums_all(x, h, threads=1)
    b = interval_sums_all(x, h, threads=4)
    for fid in ALL_FNS:
        assert a[fid].exact == b[fid].exact
        assert a[fid].approx == b[fid].approx  # bytes, not just close


def test_large_offset_sample():
    # frozen oracle: trial division at 1e10 over a short window
    x, h = 10**10, 60
    sums = interval_sums_all(x, h)
    for fid in ALL_FNS:
        assert sums[fid].exact == brute_sum(fid, x, h)


def test_sieve_segment_factorizations():
    for fac in sieve_segment(999980, 1000020):
        assert fac == factorize(fac.n)


def test_approx_tracks_exact():
    s = interval_sum(MultFnId.INV_TWO_OMEGA, 10**6, 10**4)
    assert s.approx == pytest.approx(float(s.exact), rel=1e-12)


def test_capacity_guard():
    with pytest.raises(CapacityError):
        interval_sum(MultFnId.INV_TAU_SQ, MAX_N - 5, 10)


def test_counts_sum_to_interval_length():
    counts = interval_counts(5000, 777)
    for fid in ALL_FNS:
        assert sum(counts[fid].values()) == 777


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**5), st.integers(1, 400))
def test_random_windows_match_brute_force(x, h):
    fid = MultFnId.INV_TWO_BIG_OMEGA
    assert interval_sum(fid, x, h).exact == brute_sum(fid, x, h)
