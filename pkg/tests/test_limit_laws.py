import math

import numpy as np
import pytest

from lattice_llt.limit_laws import get_law, modulus_of_continuity, standard_normal

# High-precision CDF value frozen from an independent evaluation
PHI_196 = 0.9750021048517796
G0 = 0.3989422804014327
G1 = 0.24197072451914337  # max |g'| for the normal density


@pytest.fixture(scope="module")
def law():
    return standard_normal()


class TestStandardNormal:
    def test_density_peak(self, law):
        assert law.density(0.0) == pytest.approx(G0, abs=1e-16)
        assert law.density_sup == pytest.approx(G0, abs=1e-16)

    def test_cdf_center(self, law):
        assert law.cdf(0.0) == 0.5

    def test_cdf_quantile(self, law):
        assert law.cdf(1.96) == pytest.approx(PHI_196, abs=1e-12)

    def test_symmetry(self, law):
        for x in np.linspace(0.0, 6.0, 61):
            assert law.density(x) == pytest.approx(law.density(-x), abs=1e-14)
            assert law.cdf(-x) == pytest.approx(1.0 - law.cdf(x), abs=1e-14)

    def test_cdf_density_consistency(self, law):
        d = 1e-4
        for x in np.linspace(-6.0, 6.0, 121):
            diff = (law.cdf(x + d) - law.cdf(x - d)) / (2 * d)
            assert diff == pytest.approx(law.density(x), abs=1e-6)

    def test_density_nonnegative_cdf_monotone(self, law):
        x = np.linspace(-12.0, 12.0, 4001)
        g = law.density(x)
        G = law.cdf(x)
        assert np.all(g >= 0)
        assert np.all(np.diff(G) >= 0)
        assert G[0] < 1e-12 and G[-1] > 1 - 1e-12

    def test_effective_support_radius(self, law):
        for tol in (1e-6, 1e-12, 1e-15):
            r = law.effective_support_radius(tol)
            assert law.density(r * 1.000001) < tol
            assert law.density(r * 0.999999) >= tol

    def test_registry(self, law):
        assert get_law("normal").name == "normal"
        with pytest.raises(ValueError):
            get_law("cauchy")


class TestModulus:
    def test_lipschitz_bound(self, law):
        for h in (0.5, 0.1, 0.01, 1e-4):
            mod = modulus_of_continuity(law, h)
            assert mod <= h * G1 * 1.001
            # the bound is tight for small h
            if h <= 0.01:
                assert mod >= h * G1 * 0.95

    def test_vanishes_with_h(self, law):
        hs = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6]
        mods = [modulus_of_continuity(law, h) for h in hs]
        assert all(a > b for a, b in zip(mods, mods[1:]))
        assert mods[-1] < 1e-6

    def test_nondecreasing_in_h(self, law):
        hs = [0.01, 0.05, 0.2, 1.0, 3.0, 10.0]
        mods = [modulus_of_continuity(law, h) for h in hs]
        assert all(a <= b + 1e-15 for a, b in zip(mods, mods[1:]))

    def test_full_range_oscillation(self, law):
        assert modulus_of_continuity(law, 10.0) == pytest.approx(
            law.density_sup, abs=1e-14
        )

    def test_rejects_nonpositive_h(self, law):
        with pytest.raises(ValueError):
            modulus_of_continuity(law, 0.0)
