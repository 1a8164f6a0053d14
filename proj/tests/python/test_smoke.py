import math
import os
from pathlib import Path

import pytest

import endotransfer as et

ROOT = Path(os.environ.get("ENDO_SOURCE_DIR", Path(__file__).resolve().parents[2]))
SCENARIOS = ["sl2_endoscopy", "su2_trivial", "a1xa1_endoscopy", "c2_endoscopy"]


def problem(name):
    return et.build_problem(et.load_scenario(str(ROOT / "scenarios" / f"{name}.scn")))


@pytest.mark.parametrize("name", SCENARIOS)
def test_identity_holds(name):
    p = problem(name)
    report = et.run_verify(p, name, 20, 7)
    assert report.all_pass
    assert report.pass_count == len(report) == 20
    assert report.max_abs_error <= et.DEFAULT_TOLERANCE


def test_sl2_two_orbits_carry_opposite_signs():
    p = problem("sl2_endoscopy")
    orbits = et.stable_orbit_representatives(p, [0.7])
    assert len(orbits) == 2
    assert len(et.matching_h_orbits(p, [0.7])) == 2
    values = sorted(et.transfer_factor(p, [0.7], y).value.real for y in orbits)
    assert values == [-1.0, 1.0]


def test_verify_identity_dict():
    p = problem("c2_endoscopy")
    r = et.verify_identity(p, [1.3, -0.4], [0.2, 0.9])
    assert r["pass"]
    assert len(r["termwise"]) == p.weyl_order == 8
    assert abs(r["lhs"] - et.d_gh(p, [1.3, -0.4], [0.2, 0.9])) == 0.0


def test_base_value_scaling():
    p = problem("a1xa1_endoscopy")
    c = complex(0.3, -1.7)
    q = p.with_base_value(c)
    x_h, x_g = [0.9, 1.4], [-0.6, 2.1]
    assert abs(et.d_gh(q, x_h, x_g) - c * et.d_gh(p, x_h, x_g)) < 1e-12
    assert abs(et.d_tilde_gh(q, x_h, x_g) - c * et.d_tilde_gh(p, x_h, x_g)) < 1e-12


def test_kernel_is_unimodular_for_sl2():
    p = problem("sl2_endoscopy")
    assert math.isclose(abs(et.rossmann_kernel(p, [0.4], [-2.2])), 1.0, rel_tol=1e-14)


def test_report_round_trip():
    p = problem("su2_trivial")
    text = et.emit_report(et.run_verify(p, "su2_trivial", 3, 1), "machine")
    back = et.parse_report(text)
    assert back.scenario == "su2_trivial"
    assert back.version == et.REPORT_VERSION
    assert et.emit_report(back, "machine") == text


def test_errors_surface_as_value_errors():
    with pytest.raises(et.ScenarioError):
        et.parse_scenario("name = x\n")
    p = problem("sl2_endoscopy")
    with pytest.raises(et.NonRegularError):
        et.verify_identity(p, [0.0], [1.0])
    split = et.build_problem(et.load_scenario(str(ROOT / "scenarios" / "invalid" / "sl2_split_h.scn")))
    assert not split.elliptic
    with pytest.raises(et.EndoscopyError, match="non-elliptic"):
        et.run_verify(split, "split", 1, 1)


def test_small_helpers():
    assert et.weyl_order("G2") == 12
    assert et.h1_divisors([[-1, 0], [0, -1]]) == [2, 2]
    assert et.h1_divisors([[0, 1], [1, 0]]) == []
