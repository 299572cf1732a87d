import json
from pathlib import Path

import pytest

import cech2

DATA = Path(__file__).resolve().parents[2] / "data"


def test_groups():
    s3 = cech2.group("S3")
    assert s3.order == 6 and not s3.is_abelian()
    assert sorted(len(c) for c in cech2.conjugacy_classes(s3)) == [1, 2, 3]


def test_h1_circle_and_sphere():
    assert cech2.h1(cech2.space("circle3"), cech2.coefficients("discrete:S3"))["classes"] == 3
    report = cech2.h1(cech2.space("sphere2"), cech2.coefficients("shift:Z2"))
    assert report["classes"] == 2
    assert report["base_class"] == 0
    assert sum(report["sizes"]) == report["cocycles"] == 16


def test_abelian_oracle_matches_classification():
    for name in ("sphere2", "rp2_6"):
        sp = cech2.space(name)
        z2 = cech2.group("Z2")
        assert cech2.h1(sp, cech2.coefficients("shift:Z2"))["classes"] == cech2.abelian_oracle_h2(sp, z2)


def test_peiffer_violation():
    with pytest.raises(cech2.Error, match="PeifferViolation"):
        cech2.coefficients("shift:S3")
    with pytest.raises(cech2.Error, match="PeifferViolation"):
        cech2.coefficients(str(DATA / "shift_s3.json"))


def test_crossed_module_round_trip():
    xm = cech2.coefficients(str(DATA / "z2_to_z4.json"))
    again = cech2.crossed_module_from_json(json.dumps(xm.to_json()))
    assert again.t == xm.t == [0, 2]


def test_lemmas_and_hat():
    assert cech2.verify_lemma2("z2-z4-z2", cech2.space("circle3"))["ok"]
    assert cech2.verify_lemma3("hat:z2-z4", cech2.space("circle3"))["ok"]
    assert cech2.hat_iso_check(cech2.coefficients("aut:Z3"))


def test_refine_and_nerve():
    assert cech2.refine_compare(cech2.space("circle3"), cech2.coefficients("discrete:S3")) == (3, 3)
    n = cech2.nerve(cech2.coefficients("z2-z4"), 3)
    assert n["level_orders"] == [4, 8, 16, 32]
    assert n["simplicial"]["ok"] and n["level_iso"]["ok"]


def test_budget_error():
    with pytest.raises(cech2.Error, match="BudgetExceeded"):
        cech2.h1(cech2.space("torus7"), cech2.coefficients("shift:Z3"), cocycle_budget=1000)
