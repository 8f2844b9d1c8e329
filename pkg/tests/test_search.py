from fractions import Fraction
from math import comb, factorial

import pytest

from certification import (
    PolytopePoint,
    certificate_from_search,
    certify,
    class_list,
    class_pools,
    odd_weights,
    even_weights,
    search_certificate,
    weighting_search,
)
from certification.search import (
    _Budget,
    _BudgetExhausted,
    _grid_values,
    _PoolSystem,
    _simplest_between,
)
from combinatorics import derangement_classes
from utils.errors import CertificationFailure, InvalidArgumentError


def test_class_pools_at_13():
    pools = class_pools(13)
    names = [name for name, _ in pools]
    assert names == ["parity", "other-parity", "union", "all"]
    assert pools[0][1] == class_list(13, "odd")
    assert pools[1][1] == class_list(13, "even")
    assert len(pools[2][1]) == len(set(pools[0][1]) | set(pools[1][1]))
    assert set(pools[3][1]) == {rho for rho, _ in derangement_classes(13, 3)}


def test_class_pools_below_the_lists():
    # neither five-class list exists at n = 7
    assert [name for name, _ in class_pools(7)] == ["all"]


@pytest.mark.parametrize("n, parity, weights", [(27, "odd", odd_weights), (20, "even", even_weights)])
def test_pool_system_recovers_the_two_parameter_family(n, parity, weights):
    system = _PoolSystem(n, class_list(n, parity))
    assert system.consistent
    assert len(system.basis) == 2
    point = PolytopePoint(600, -2800) if parity == "odd" else PolytopePoint(100, 50)
    assert system.accepts(list(weights(n, point).omegas))
    assert not system.accepts([Fraction(0)] * 5)


def test_simplest_between():
    assert _simplest_between(Fraction(1, 3), Fraction(1, 2)) == Fraction(3, 8)
    assert _simplest_between(Fraction(1, 2), Fraction(5, 2)) == 1
    assert _simplest_between(None, None) == 0
    assert _simplest_between(Fraction(7, 2), None) == 4
    assert _simplest_between(None, Fraction(-7, 2)) == -5


def test_grid_values_start_coarse():
    values = list(_grid_values(8, levels=1))
    assert values == [0, 8, -8, 4, -4]


def test_budget_counts_checks():
    budget = _Budget(2)
    budget.spend()
    budget.spend()
    with pytest.raises(_BudgetExhausted):
        budget.spend()


def test_search_with_no_budget_fails():
    with pytest.raises(CertificationFailure):
        weighting_search(13, budget=0)


def test_search_argument_checks():
    with pytest.raises(InvalidArgumentError):
        weighting_search(5)
    with pytest.raises(InvalidArgumentError):
        weighting_search(13, strategy="anneal")


def test_lp_search_at_27():
    result = weighting_search(27)
    assert result.pool == "parity"
    assert result.free_parameters == 2
    assert result.weighting.parity_case == "custom"
    certificate = certificate_from_search(result)
    assert certificate.verified
    assert certificate.strategy == "search"
    assert certificate.bound == 6 * factorial(24)


@pytest.mark.slow
def test_grid_search_at_27():
    result = weighting_search(27, strategy="grid")
    assert result.pool == "parity"
    assert certificate_from_search(result).verified


@pytest.mark.slow
@pytest.mark.parametrize("n", [11, 12, 13, 14, 15, 16, 17, 18, 19, 21, 23, 25])
def test_search_certifies_below_the_closed_form_range(n):
    certificate = search_certificate(n)
    assert certificate.verified
    assert certificate.bound == 6 * factorial(n - 3)
    assert certificate.chromatic_lower_bound == comb(n, 3)


@pytest.mark.slow
def test_certify_uses_the_search_below_twenty():
    assert certify(19).strategy == "search"
