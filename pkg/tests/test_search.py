import math

import pytest

from utils.errors import ConvergenceError, DomainError
from utils.search import gs_iteration_bound, golden_section_max


def test_iteration_bound_values():
    # 0.618^43 > 1e-9 >= 0.618^44
    assert gs_iteration_bound(1.0, 1e-9) == 44
    assert gs_iteration_bound(1e-10, 1e-9) == 0
    with pytest.raises(DomainError):
        gs_iteration_bound(1.0, 0.0)


class TestGoldenSectionMax:

    def test_interior_maximum(self):
        result = golden_section_max(lambda x: -(x - 0.3) ** 2, 0.0, 1.0, 1e-9)
        assert result.x == pytest.approx(0.3, abs=1e-9)
        assert result.hi - result.lo <= 1e-9 * (1 + 1e-9)
        assert result.iterations <= gs_iteration_bound(1.0, 1e-9) + 2

    def test_pseudo_concave_ratio(self):
        # log(1 + x) / (1 + x) peaks at x = e - 1
        result = golden_section_max(lambda x: math.log1p(x) / (1.0 + x), 0.0, 10.0, 1e-10)
        assert result.x == pytest.approx(math.e - 1.0, abs=1e-6)

    def test_maximum_on_upper_edge(self):
        result = golden_section_max(lambda x: x, 0.0, 2.0, 1e-9)
        assert result.x == 2.0
        assert result.fx == 2.0

    def test_maximum_on_lower_edge(self):
        result = golden_section_max(lambda x: -x, 1.0, 2.0, 1e-9)
        assert result.x == 1.0

    def test_bracket_within_tolerance(self):
        result = golden_section_max(lambda x: x, 0.0, 1e-12, 1e-9)
        assert result.iterations == 0
        assert 0.0 <= result.x <= 1e-12

    def test_iteration_cap(self):
        with pytest.raises(ConvergenceError):
            golden_section_max(lambda x: -x * x, -1.0, 1.0, 1e-12, max_iter=10)

    def test_non_finite_objective(self):
        with pytest.raises(ConvergenceError):
            golden_section_max(lambda x: math.nan, 0.0, 1.0, 1e-6)

    @pytest.mark.parametrize('a, b, epsilon', [
        (1.0, 0.0, 1e-6),
        (0.0, math.inf, 1e-6),
        (0.0, 1.0, 0.0),
    ])
    def test_invalid_arguments(self, a, b, epsilon):
        with pytest.raises(DomainError):
            golden_section_max(lambda x: x, a, b, epsilon)
