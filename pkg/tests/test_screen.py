"""Arithmetic screening: quotient patterns, Mersenne condition, verdicts."""

import pytest

from bismash.errors import ConsistencyError
from bismash.numutil import divisors, is_power_of_two, is_prime
from bismash.screen import (
    DegreePattern,
    QuotientSolution,
    mersenne_condition,
    quotient_degree_solutions,
    screen_pattern,
)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 64])
def test_sum_of_squares_identity(q):
    pattern = DegreePattern.for_q(q)
    assert pattern.multiset.sum_of_squares() == q**3 - q


def test_pattern_rejects_non_prime_power():
    with pytest.raises(ValueError):
        DegreePattern.for_q(6)


def test_quotient_solutions_q4():
    rep = quotient_degree_solutions(4)
    assert not rep.degenerate
    assert rep.solutions == (QuotientSolution(12, 3, 1, 0),)


def test_quotient_solutions_q5():
    rep = quotient_degree_solutions(5)
    assert rep.solutions == (QuotientSolution(20, 4, 1, 0),)


def test_quotient_solutions_q2_degenerate():
    rep = quotient_degree_solutions(2)
    assert rep.degenerate and rep.solutions == ()


def test_quotient_solutions_unique_up_to_64():
    for q in range(3, 65):
        if not _is_prime_power(q):
            continue
        rep = quotient_degree_solutions(q)
        assert rep.solutions == (QuotientSolution(q * (q - 1), q - 1, 1, 0),)


def _is_prime_power(q):
    from bismash.numutil import prime_power

    return prime_power(q) is not None


def test_mersenne_basic():
    v = mersenne_condition(3, 1)
    assert v.power_of_two and v.n == 2 and v.value == 4
    v = mersenne_condition(3, 2)
    assert not v.power_of_two and v.value == 10
    v = mersenne_condition(7, 1)
    assert v.power_of_two and v.n == 3


def test_mersenne_rejects_even_prime():
    with pytest.raises(ValueError):
        mersenne_condition(2, 3)
    with pytest.raises(ValueError):
        mersenne_condition(9, 1)


def test_mersenne_sweep_small():
    # fuller sweep to 10^6 lives in the acceptance suite
    for p in range(3, 100, 2):
        if not is_prime(p):
            continue
        h = 2
        while p**h <= 10**4:
            assert not mersenne_condition(p, h).power_of_two
            h += 1


@pytest.mark.parametrize(
    "q,verdict,witness",
    [
        (2, "realizable", "S3"),
        (3, "realizable", "S4"),
        (4, "obstructed", None),
        (5, "obstructed", None),
        (7, "obstructed", None),
        (8, "obstructed", None),
        (9, "obstructed", None),
    ],
)
def test_screen_verdicts(q, verdict, witness):
    rep = screen_pattern(q)
    assert rep.verdict == verdict
    assert rep.witness == witness
    assert all(c.passed for c in rep.checks)


def test_screen_q7_uses_normalizer_branch():
    calls = []

    def fake_normalizer(n):
        calls.append(n)
        return n * (2**n - 1)

    rep = screen_pattern(7, normalizer_order=fake_normalizer)
    assert calls == [3]
    names = [c.name for c in rep.checks]
    assert "singer-normalizer" in names
    detail = next(c for c in rep.checks if c.name == "singer-normalizer").detail
    assert "21" in detail and "42" in detail


def test_screen_rejects_bogus_normalizer():
    with pytest.raises(ConsistencyError):
        screen_pattern(7, normalizer_order=lambda n: 999)


def test_screen_scope_distinguishes_obstruction_from_proof():
    rep = screen_pattern(5)
    assert "necessary conditions" in rep.scope


def test_every_degree_divides_group_order():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
        pattern = DegreePattern.for_q(q)
        assert all((q**3 - q) % d == 0 for d in pattern.multiset)


def test_divisor_helper_matches_definition():
    for n in (1, 2, 12, 60, 504):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]
    assert is_power_of_two(64) and not is_power_of_two(48)
