import json
from fractions import Fraction as F

import pytest

from fusedhecke.verifier import SUBJECTS, CheckSpec, default_suite, run_check, run_suite


def test_documented_examples():
    r = run_check(CheckSpec("sum", "coefficient-sum", {"k": 3, "l": 4, "q": F(2, 5), "z": F(50)}))
    assert r.status == "pass"
    r = run_check(CheckSpec("ybe", "fused-ybe", {"k": 1, "N": 2, "q": F(1, 2), "u": F(2), "v": F(3)}))
    assert r.status == "pass"
    assert r.detail == {"orientation": "standard", "standard": True, "alternate": False}


def test_perturbation_caught_with_witness():
    spec = CheckSpec("bad", "base-ybe", {"N": 2, "q": F(1, 2), "u": F(2), "v": F(3), "perturb": F(1, 1000)})
    r = run_check(spec)
    assert r.status == "fail"
    w = r.witness
    assert set(w) == {"location", "expected", "actual"}
    assert F(w["expected"]) != F(w["actual"])
    assert r.detail["orientation"] == "none"


def test_empty_grid():
    rep = run_suite([])
    assert rep.results == [] and rep.ok and rep.to_jsonl() == ""


def test_guard_violation_is_error_not_fail():
    good = CheckSpec("ok", "coefficient-sum", {"k": 1, "l": 1, "q": F(1, 2), "z": F(2)})
    bad = CheckSpec("deg", "coefficient-sum", {"k": 1, "l": 1, "q": F(1, 2), "z": F(1, 4)})
    rep = run_suite([good, bad, good])
    assert [r.status for r in rep.results] == ["pass", "error", "pass"]
    assert rep.results[1].witness is None and "factor" in rep.results[1].detail
    assert not rep.ok


def test_unknown_subject_rejected():
    with pytest.raises(ValueError):
        CheckSpec("x", "nonsense")


def test_every_subject_in_default_suite():
    specs, _ = default_suite(quick=True)
    assert {s.subject for s in specs} == set(SUBJECTS)


def test_quick_suite_passes_and_is_deterministic():
    specs, _ = default_suite(seed=3, quick=True)
    a = run_suite(specs)
    assert a.ok, [r.to_dict() for r in a.results if r.status != "pass"]
    b = run_suite(default_suite(seed=3, quick=True)[0])
    assert a.to_jsonl() == b.to_jsonl()
    line = json.loads(a.to_jsonl().splitlines()[0])
    assert "wall_time" not in line
    assert "wall_time" in json.loads(a.to_jsonl(timing=True).splitlines()[0])


@pytest.mark.parametrize(
    "subject,params",
    [
        ("hecke-relations", {"N": 3, "n": 3, "q": F(5, 7)}),
        ("braid-relations", {"N": 2, "n": 4, "q": F(1, 3)}),
        ("projector-intertwine", {"k": 1, "l": 2, "q": F(1, 2), "u": F(3)}),
        ("symmetrizer-triad", {"N": 2, "n": 4, "i": 1, "j": 4, "q": F(2, 3)}),
        ("symmetrizer-absorption", {"N": 3, "n": 3, "i": 1, "j": 3, "q": F(2, 3)}),
        ("theorem-equality", {"k": 2, "l": 3, "q": F(1, 2), "u": F(7)}),
        ("closed-form-equality", {"k": 1, "l": 2, "q": F(1, 3), "z": F(-4)}),
        ("coefficient-recursion", {"k": 3, "l": 5, "q": F(3, 4), "z": F(11, 3)}),
        ("pascal", {"kmax": 5, "q": F(7, 9)}),
        ("chu-vandermonde", {"m": 3, "n": 4, "q": F(1, 5)}),
        ("row-stochastic", {"k": 2, "l": 2, "q": F(1, 2), "z": F(8)}),
        ("golden-9x9", {"q": F(1, 2), "z": F(8)}),
    ],
)
def test_single_subjects_pass(subject, params):
    r = run_check(CheckSpec(subject, subject, params))
    assert r.status == "pass", r.to_dict()


def test_string_params_accepted():
    r = run_check(CheckSpec("s", "coefficient-sum", {"k": 2, "l": 3, "q": "1/2", "z": "5"}))
    assert r.status == "pass"
