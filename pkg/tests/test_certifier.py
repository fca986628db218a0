import math
from fractions import Fraction

import pytest

from hamspec.certifier import (
    Outcome,
    Verdict,
    admissible_ks,
    best_verdict,
    bound_terms,
    certify,
    corollary_bounds,
    evaluate_conditions,
    theorem1_condition,
    theorem2_condition,
)
from hamspec.errors import PreconditionError
from hamspec.graph import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    degree_profile,
    disjoint_union,
    empty_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from hamspec.graph6 import parse_graph6
from hamspec.spectral import SpectralParams, SpectrumSummary, spectrum

ONE = SpectralParams(1, 1)


def test_k4_theorem1_part1():
    v = theorem1_condition(complete_graph(4), ONE, 2, 1)
    assert v.holds and v.outcome is Outcome.CERTIFIED_HAMILTONIAN
    assert v.rhs_sq == 63
    assert math.isclose(v.bound_value, math.sqrt(63))
    assert math.isclose(v.lambda_value, 6)


def test_petersen_theorem1_inconclusive():
    v = theorem1_condition(petersen_graph(), ONE, 3, 1)
    assert not v.holds and v.outcome is Outcome.INCONCLUSIVE
    assert v.rhs_sq == Fraction(147, 5)


def test_petersen_certify_meets_traceable_bound_with_equality():
    v = certify(petersen_graph(), ONE)
    assert (v.theorem, v.k) == ("T2.1", 3)
    assert v.outcome is Outcome.CERTIFIED_TRACEABLE
    assert v.rhs_sq == 36
    assert v.hamiltonian_reading is False


def test_k3_preconditions():
    verdicts = evaluate_conditions(parse_graph6("Bw"), ONE)
    assert all(v.outcome is Outcome.PRECONDITION_FAILED for v in verdicts)
    assert "n - k - 1 = 0" in verdicts[0].reason


@pytest.mark.parametrize("g,k,reason", [
    (disjoint_union(complete_graph(4), complete_graph(4)), 2, "disconnected"),
    (cycle_graph(6), 3, "only 2-connected"),
    (cycle_graph(6), 1, "k >= 2"),
])
def test_theorem1_guards(g, k, reason):
    v = theorem1_condition(g, ONE, k, 1)
    assert v.outcome is Outcome.PRECONDITION_FAILED and reason in v.reason


def test_theorem2_needs_nine_vertices():
    v = theorem2_condition(complete_graph(8), ONE, 1, 1)
    assert v.outcome is Outcome.PRECONDITION_FAILED and "n >= 9" in v.reason


def test_non_certifiable_params():
    for p in (SpectralParams(1, 2), SpectralParams(0, 1)):
        assert theorem1_condition(complete_graph(5), p, 2, 1).outcome is Outcome.PRECONDITION_FAILED
        assert certify(complete_graph(5), p).outcome is Outcome.PRECONDITION_FAILED
        with pytest.raises(PreconditionError):
            corollary_bounds(complete_graph(5), p)


def test_theorem2_bound_values():
    v = theorem2_condition(complete_graph(9), ONE, 1, 2)
    # j = 3: (9-3)*64/9 + 36^2/27 = 96, times 4
    assert v.rhs_sq == 4 * Fraction(6 * 64, 9) + 4 * Fraction(36 * 36, 27)
    v = theorem2_condition(cycle_graph(9), ONE, 1, 1)
    assert not v.holds
    assert math.isclose(v.bound_value, 2 * math.sqrt(Fraction(1 * 4 * 3, 9) + Fraction(81, 9 * 6)))


def _fake(values):
    values = sorted(values, reverse=True)
    return SpectrumSummary(values, values[0], values[-1], 0.0, 0)


def test_exceptional_complete_bipartite_is_labelled():
    g = complete_bipartite_graph(2, 3)
    v = theorem1_condition(g, ONE, 2, 1, spec=_fake([0.0] * 5))
    assert v.holds and v.outcome is Outcome.EXCEPTIONAL_COMPLETE_BIPARTITE
    h = complete_bipartite_graph(3, 6)
    v = theorem2_condition(h, ONE, 3, 1, spec=_fake([0.0] * 9))
    assert v.outcome is Outcome.CERTIFIED_TRACEABLE  # K_{3,6} is not K_{3,5}
    v = theorem2_condition(complete_bipartite_graph(4, 6), ONE, 4, 1, spec=_fake([0.0] * 10))
    assert v.outcome is Outcome.EXCEPTIONAL_COMPLETE_BIPARTITE


def test_part2_requires_nonnegative_lambda_n():
    g = complete_graph(5)
    v = theorem1_condition(g, ONE, 2, 2, spec=_fake([100.0, -1.0]))
    assert not v.holds
    v = theorem1_condition(g, ONE, 2, 2, spec=_fake([100.0, 100.0]))
    assert v.holds


def test_tolerance_is_relative():
    g = complete_graph(4)
    exact = math.sqrt(63)
    assert theorem1_condition(g, ONE, 2, 1, spec=_fake([exact * (1 + 1e-12)])).holds
    assert not theorem1_condition(g, ONE, 2, 1, spec=_fake([exact * (1 + 1e-6)])).holds


def test_corollary_values():
    lo, hi = corollary_bounds(star_graph(4), ONE)
    assert lo == 4.0 and hi == 4.0
    spec = spectrum(star_graph(4), ONE)
    assert spec.lambda1 >= lo and spec.lambda_n <= hi
    lo, _ = corollary_bounds(parse_graph6("Bw"), ONE)
    assert math.isclose(lo, 2 * math.sqrt(4 / 3 + 9 / 6))
    with pytest.raises(PreconditionError):
        corollary_bounds(empty_graph(3), ONE)


def test_bound_terms_guard():
    with pytest.raises(PreconditionError):
        bound_terms(degree_profile(path_graph(3)), ONE, 3)


def test_admissible_ks():
    assert list(admissible_ks(1, 10, 3)) == [2, 3]
    assert list(admissible_ks(1, 4, 3)) == [2]
    assert list(admissible_ks(2, 9, 8)) == list(range(1, 7))
    assert list(admissible_ks(2, 8, 7)) == []


def test_best_verdict_ordering():
    a = Verdict("T1.1", 3, True, Outcome.CERTIFIED_HAMILTONIAN)
    b = Verdict("T1.2", 2, True, Outcome.CERTIFIED_HAMILTONIAN)
    c = Verdict("T2.1", 1, True, Outcome.CERTIFIED_TRACEABLE)
    d = Verdict("T1.1", 2, True, Outcome.CERTIFIED_HAMILTONIAN)
    assert best_verdict([a, b, c]) is b
    assert best_verdict([b, d]) is d


def test_describe_mentions_outcome():
    text = certify(complete_graph(6), ONE).describe()
    assert "CertifiedHamiltonian" in text and "T1.1" in text
