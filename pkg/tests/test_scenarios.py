import pytest

from birburn.chars import FaithfulCharLabel
from birburn.classes import EquivCurveClass
from birburn.ledger import C_G, c_classical
from birburn.scenarios import (
    ScenarioError,
    dp6_patterns,
    lsh_maps,
    scenario_coarsening,
    scenario_dp6,
    scenario_lsh,
)
from birburn.symbols import FormalSum


@pytest.mark.parametrize("N,a,b", [(5, 1, 2), (5, 1, 3), (7, 1, 2), (7, 2, 3), (11, 1, 5),
                                   (6, 1, 3), (12, 5, 7)])
def test_dp6_checks_pass(N, a, b):
    r = scenario_dp6(N, a, b)
    assert r["checks"] == {"weights_before_match": True, "weights_after_match": True,
                           "relabel_minus_one": True}
    assert r["ok"] and r["ledger"]["C_G"]["is_zero"]


def test_dp6_patterns_example():
    before, after = dp6_patterns(5, 1, 2)
    assert sorted(before) == [(1, 2), (1, 4), (3, 4)]
    assert sorted(after) == [(1, 2), (1, 4), (3, 4)]
    assert scenario_dp6(5, 1, 2)["weights_before"] == [[1, 2], [1, 4], [3, 4]]


@pytest.mark.parametrize("N,a,b", [(5, 1, 1), (5, 0, 2), (6, 2, 4), (1, 1, 2)])
def test_dp6_rejects_bad_parameters(N, a, b):
    with pytest.raises(ScenarioError):
        scenario_dp6(N, a, b)


def test_lsh_distinct_labels():
    r = scenario_lsh(identify=False)
    assert r["C_G_nonzero"] and r["ok"]
    assert not r["C_G"]["is_zero"]
    assert r["c"]["is_zero"]


def test_lsh_identified_labels_cancel():
    r = scenario_lsh(identify=True)
    assert not r["C_G_nonzero"] and r["C_G"]["is_zero"] and r["ok"]


def test_lsh_factors():
    psi2_inv, psi1, phi = lsh_maps()
    assert C_G(psi2_inv) and C_G(psi1)
    assert C_G(psi2_inv) + C_G(psi1) == C_G(phi)
    assert c_classical(psi1) == 0


def test_coarsening_example():
    r = scenario_coarsening()
    assert r["ok"]
    assert r["word"] == ["up 0", "up 1", "up 4", "down 1 0", "down 1 1"]
    assert r["ledger"]["C_G"]["text"] == str(
        FormalSum.of(EquivCurveClass(5, FaithfulCharLabel(5, 1)))
        - FormalSum.of(EquivCurveClass(5, FaithfulCharLabel(5, 2))))
    assert r["ledger"]["C_orb"]["is_zero"]
