import math

import numpy as np
import pytest

from lattice_llt.convolve import (
    SupportOverflowError,
    convolve_fft,
    convolve_naive,
    convolve_sequence,
    iid_power,
)
from lattice_llt.pmf import delta, make_pmf, mean_and_std


def random_pmf(rng, max_support=64):
    n = rng.integers(1, max_support + 1)
    w = rng.random(n)
    w[0] += 1e-3
    w[-1] += 1e-3
    w /= w.sum()
    return make_pmf(int(rng.integers(-20, 20)), w)


def max_abs_diff(p, q):
    lo = min(p.min_support, q.min_support)
    hi = max(p.max_support, q.max_support)
    out = 0.0
    for m in range(lo, hi + 1):
        out = max(out, abs(p.prob(m) - q.prob(m)))
    return out


BERN = make_pmf(0, [0.5, 0.5])


class TestNaive:
    def test_delta_is_identity(self):
        p = make_pmf(2, [0.25, 0.5, 0.25])
        r = convolve_naive(delta(0), p)
        assert r.offset == p.offset
        assert np.allclose(r.weights, p.weights, atol=0)

    def test_bernoulli_pair_enumeration(self):
        # four equally likely outcome pairs: 00, 01, 10, 11
        r = convolve_naive(BERN, BERN)
        assert r.offset == 0
        assert list(r.weights) == [0.25, 0.5, 0.25]

    def test_offset_arithmetic(self):
        p = make_pmf(2, [0.25] * 4)
        q = make_pmf(-1, [0.2] * 5)
        assert convolve_naive(p, q).offset == 1

    def test_support_length(self):
        p = make_pmf(0, [0.5, 0.5])
        q = make_pmf(0, [0.25, 0.5, 0.25])
        assert len(convolve_naive(p, q)) == len(p) + len(q) - 1


class TestFft:
    def test_matches_naive_on_examples(self):
        cases = [
            (delta(0), make_pmf(2, [0.25, 0.5, 0.25])),
            (BERN, BERN),
            (make_pmf(2, [0.25] * 4), make_pmf(-1, [0.2] * 5)),
        ]
        for p, q in cases:
            assert max_abs_diff(convolve_fft(p, q), convolve_naive(p, q)) < 1e-12

    def test_matches_naive_randomized(self):
        rng = np.random.default_rng(42)
        for _ in range(50):
            p, q = random_pmf(rng), random_pmf(rng)
            assert max_abs_diff(convolve_fft(p, q), convolve_naive(p, q)) < 1e-12

    def test_point_masses(self):
        r = convolve_fft(delta(5), delta(7))
        assert r.offset == 12
        assert list(r.weights) == [1.0]

    def test_overflow_error(self, monkeypatch):
        monkeypatch.setenv("LLT_MAX_SUPPORT", "16")
        p = make_pmf(0, [0.1] * 10)
        with pytest.raises(SupportOverflowError):
            convolve_fft(p, p)

    def test_bad_cap_rejected(self, monkeypatch):
        monkeypatch.setenv("LLT_MAX_SUPPORT", "many")
        with pytest.raises(ValueError):
            convolve_fft(BERN, BERN)

    def test_commutative_and_associative(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            p, q, r = random_pmf(rng, 32), random_pmf(rng, 32), random_pmf(rng, 32)
            assert max_abs_diff(convolve_fft(p, q), convolve_fft(q, p)) < 1e-11
            left = convolve_fft(convolve_fft(p, q), r)
            right = convolve_fft(p, convolve_fft(q, r))
            assert max_abs_diff(left, right) < 1e-11

    def test_mass_conservation(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            p, q = random_pmf(rng), random_pmf(rng)
            r = convolve_fft(p, q)
            assert r.total_mass + r.trimmed_mass == pytest.approx(
                (p.total_mass + p.trimmed_mass) * (q.total_mass + q.trimmed_mass),
                abs=1e-11,
            )

    def test_moment_additivity(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            p, q = random_pmf(rng), random_pmf(rng)
            np_, nq = mean_and_std(p), mean_and_std(q)
            nr = mean_and_std(convolve_fft(p, q))
            assert nr.a == pytest.approx(np_.a + nq.a, abs=1e-9)
            assert nr.b**2 == pytest.approx(np_.b**2 + nq.b**2, abs=1e-9)


class TestIidPower:
    def test_power_one(self):
        p = make_pmf(-1, [0.25, 0.5, 0.25])
        r = iid_power(p, 1)
        assert r.offset == p.offset
        assert np.allclose(r.weights, p.weights, atol=0)

    def test_power_zero_is_delta(self):
        r = iid_power(BERN, 0)
        assert r.offset == 0
        assert list(r.weights) == [1.0]

    def test_bernoulli_fourth_power(self):
        r = iid_power(BERN, 4)
        assert r.offset == 0
        assert np.allclose(r.weights, np.array([1, 4, 6, 4, 1]) / 16, atol=1e-13)

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            iid_power(BERN, -1)

    def test_matches_sequential_naive_fold(self):
        rng = np.random.default_rng(17)
        for n in (2, 5, 13, 64):
            p = random_pmf(rng, 16)
            seq = p
            for _ in range(n - 1):
                seq = convolve_naive(seq, p)
            assert max_abs_diff(iid_power(p, n), seq) < 1e-10

    def test_power_addition(self):
        rng = np.random.default_rng(23)
        p = random_pmf(rng, 24)
        for m, n in ((1, 1), (2, 3), (7, 9)):
            lhs = iid_power(p, m + n)
            rhs = convolve_fft(iid_power(p, m), iid_power(p, n))
            assert max_abs_diff(lhs, rhs) < 1e-10


class TestSequence:
    def test_singleton(self):
        p = make_pmf(1, [0.3, 0.7])
        r = convolve_sequence([p])
        assert r.offset == p.offset
        assert np.allclose(r.weights, p.weights, atol=0)

    def test_three_bernoullis_is_binomial(self):
        r = convolve_sequence([BERN, BERN, BERN])
        assert max_abs_diff(r, iid_power(BERN, 3)) < 1e-12

    def test_order_independence(self):
        rng = np.random.default_rng(31)
        ps = [random_pmf(rng, 20) for _ in range(6)]
        a = convolve_sequence(ps)
        b = convolve_sequence(ps[::-1])
        assert max_abs_diff(a, b) < 1e-11

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            convolve_sequence([])


def test_trimming_accumulates_mass():
    # weights far below the 1e-15 boundary threshold disappear into
    # trimmed_mass after enough convolutions
    p = make_pmf(0, [0.5, 0.5])
    r = iid_power(p, 256)
    assert r.trimmed_mass > 0
    assert r.total_mass + r.trimmed_mass == pytest.approx(1.0, abs=1e-11)
    assert len(r) < 257
