import random

import pytest

from asreg.catalog import catalog
from asreg.twisting import stabilizes
from asreg.verify import (CHECKS, CRITERIA, SEED, family_member, random_family_tau, run_check,
                          verify_paper, violating_tau)

BASES = {"b": "plalg_b", "c": "plalg_c", "d": "plalg_d", "e": "plalg_e"}


def test_every_criterion_has_checks():
    assert sorted(CRITERIA) == list(range(1, 11))


@pytest.mark.parametrize("fam", ["b", "c", "d", "e"])
def test_family_predicate_agrees_with_stabilizes(fam):
    rng = random.Random(SEED)
    P = catalog(BASES[fam]).P
    for _ in range(5):
        t = random_family_tau(fam, rng)
        assert family_member(fam, t) and stabilizes(P, t)
        v = violating_tau(fam, rng, identity_only=False)
        assert not family_member(fam, v)
        assert not (v.is_invertible() and stabilizes(P, v))


@pytest.mark.parametrize("check", ["sigma_commutes_tau", "ore_derivations", "sqrt_rescaling"])
def test_supporting_checks_pass(check):
    assert run_check(check).status == "pass"


def test_flipped_convention_is_caught():
    # reading relations with swapped tensor factors must break the sigma test
    assert run_check("sigma_direction").status == "pass"
    assert run_check("sigma_direction", flip_convention=True).status == "fail"


def test_report_json_shape():
    rep = verify_paper(["hilbert_sq", "omega_notnormal"], max_degree=4)
    js = rep.to_json()
    assert js["ok"] and js["counts"] == {"pass": 2, "fail": 0, "abstain": 0}
    assert [c["id"] for c in js["checks"]] == ["hilbert_sq", "omega_notnormal"]


def test_unknown_check():
    with pytest.raises(KeyError):
        verify_paper(["no_such_check"])


def test_check_is_deterministic():
    a, b = run_check("stabilizers"), run_check("stabilizers")
    assert a.evidence == b.evidence
