from __future__ import annotations

import pytest

from ternary_ecc.bounds import (
    sphere_packing_bound,
    sphere_volume_exact,
    sphere_volume_min,
)
from ternary_ecc.metric import min_dist_b

from oracles import brute_sphere_volume


class TestSphereVolumeExact:
    def test_small_values(self):
        assert sphere_volume_exact(3, 3, 1) == 4
        assert sphere_volume_exact(3, 0, 1) == 7

    def test_radius_zero_is_center_only(self):
        for n in range(0, 7):
            for w in range(n + 1):
                assert sphere_volume_exact(n, w, 0) == 1

    def test_matches_bruteforce(self):
        for n in range(1, 6):
            for w in range(n + 1):
                center = (1,) * w + (0,) * (n - w)
                for r in range(n + 1):
                    assert sphere_volume_exact(n, w, r) == brute_sphere_volume(
                        n, center, r
                    )

    def test_domain(self):
        with pytest.raises(ValueError):
            sphere_volume_exact(3, 4, 1)


class TestSphereVolumeMin:
    def test_reported_values(self):
        assert sphere_volume_min(8, 1) == 9
        assert sphere_volume_min(3, 1) == 4
        assert sphere_volume_min(5, 2) == 21

    def test_equals_recursion_at_full_weight(self):
        for n in range(0, 11):
            for r in range(n + 1):
                assert sphere_volume_min(n, r) == sphere_volume_exact(n, n, r)

    def test_volume_monotone_in_center_weight(self):
        for n in range(1, 9):
            for w in range(n):
                for r in range(n + 1):
                    assert sphere_volume_exact(n, w, r) >= sphere_volume_exact(
                        n, w + 1, r
                    )


class TestSpherePackingBound:
    def test_golden_values(self):
        assert sphere_packing_bound(8, 4) == 729
        assert sphere_packing_bound(8, 2) == 6561
        assert sphere_packing_bound(5, 3) == 40
        assert sphere_packing_bound(8, 8) == 41

    def test_sound_for_known_codes(self, code_5_21_3, code_5_27_3):
        for code in (code_5_21_3, code_5_27_3):
            assert code.size <= sphere_packing_bound(code.n, min_dist_b(code))

    def test_integer_exact(self):
        # 3^8 / 9 divides exactly; the general case floors
        assert 3**8 % sphere_volume_min(8, 1) == 0
        assert sphere_packing_bound(4, 3) == 81 // sphere_volume_min(4, 1)

    def test_domain(self):
        with pytest.raises(ValueError):
            sphere_packing_bound(0, 2)
        with pytest.raises(ValueError):
            sphere_packing_bound(5, 0)
