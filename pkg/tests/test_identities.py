import math

import pytest

from gammerf import DomainError, EvalResult, catalog, get_identity, run_grid, run_identity
from gammerf.identities import Constraint, IdentitySpec


def test_catalog_has_nineteen_unique_ids():
    specs = catalog()
    ids = [s.id for s in specs]
    assert ids == [f"I{i}" for i in range(1, 20)]
    assert len(set(ids)) == 19


def test_every_spec_has_at_least_two_routes_and_a_grid():
    for spec in catalog():
        assert len(spec.routes) >= 2
        assert set(spec.default_grid) == set(spec.param_names)
        assert spec.tol_rel > 0 and spec.tol_abs > 0


def test_i7_parameters_and_domain():
    spec = get_identity("I7")
    assert spec.param_names == ("a", "b", "t")
    assert spec.violated_constraint({"a": 1.0, "b": 1.0, "t": 0.0}) is None
    assert spec.violated_constraint({"a": -1.0, "b": 1.0, "t": 0.0}) is not None
    assert spec.violated_constraint({"a": 1.0, "b": 1.0, "t": -1.0}) is not None


def test_i4_cross_parameter_constraint():
    spec = get_identity("I4")
    assert spec.violated_constraint({"a": -0.5, "b": 1.0}) is None
    assert "a + b" in spec.violated_constraint({"a": -0.75, "b": 0.5})


def test_i10_domain_is_negative_unit_interval():
    spec = get_identity("I10")
    assert spec.violated_constraint({"a": -0.5}) is None
    assert spec.violated_constraint({"a": 0.5}) is not None


class TestRunIdentity:
    def test_i2_passes_tightly(self):
        rec = run_identity("I2", {"x": 1.0})
        assert rec.passed
        assert rec.abs_diff <= 1e-12
        assert rec.lhs_value == pytest.approx(1.0 - math.exp(-1.0), rel=1e-12)

    def test_i8_at_half_half_is_pi(self):
        rec = run_identity("I8", {"a": 0.5, "b": 0.5})
        assert rec.passed
        assert rec.lhs_value == pytest.approx(math.pi, rel=1e-12)

    def test_i17_unit_point(self):
        rec = run_identity("I17", {"a": 1.0, "b": 1.0})
        assert rec.passed
        assert rec.rel_diff <= 1e-9
        # (pi/2) erfc(1), frozen from the kernel oracle
        assert rec.rhs_value == pytest.approx(0.24708501664233778, rel=1e-10)

    def test_out_of_domain_raises_with_constraint_named(self):
        with pytest.raises(DomainError, match="open interval"):
            run_identity("I4", {"a": 0.5, "b": 1.0})

    def test_missing_parameter(self):
        with pytest.raises(ValueError, match="missing"):
            run_identity("I2", {})

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            get_identity("I99")

    def test_deterministic_modulo_wall_time(self):
        a = run_identity("I12", {"a": 1.0, "t": 0.3})
        b = run_identity("I12", {"a": 1.0, "t": 0.3})
        da, db = a.to_dict(), b.to_dict()
        da.pop("wall_time")
        db.pop("wall_time")
        assert da == db

    def test_tolerance_override_can_force_failure(self):
        rec = run_identity("I8", {"a": 0.5, "b": 1.0},
                           tol_rel=1e-30, tol_abs=1e-300)
        assert not rec.passed
        assert rec.abs_diff > 0

    def test_route_failure_is_embedded_not_raised(self):
        def fine(p):
            return EvalResult(1.0, 0.0, "closed-form", 0)

        def broken(p):
            raise DomainError("deliberately broken route")

        spec = IdentitySpec(
            id="X1", description="failure embedding check",
            param_names=("a",),
            constraints=(Constraint("a must be > 0", lambda p: p["a"] > 0),),
            routes=(("good", fine), ("bad", broken)),
            tol_rel=1e-9, tol_abs=1e-12,
            default_grid={"a": (1.0,)},
        )
        rec = run_identity(spec, {"a": 1.0})
        assert not rec.passed
        assert "deliberately broken" in rec.reason
        assert rec.lhs_value is None

    @pytest.mark.parametrize("identity_id", ["I7", "I9", "I11", "I12"])
    def test_zero_argument_smoke_points(self, identity_id):
        spec = get_identity(identity_id)
        point = {n: 0.5 for n in spec.param_names}
        point["t"] = 0.0
        rec = run_identity(spec, point)
        assert rec.passed


class TestRunGrid:
    def test_i1_default_grid_is_75_points_all_passing(self):
        result = run_grid("I1")
        assert len(result.records) == 75
        assert result.failed == 0
        assert all(r.rel_diff <= 1e-10 for r in result.records)

    def test_i14_default_grid_passes(self):
        result = run_grid("I14")
        assert len(result.records) == 30
        assert result.failed == 0
        assert all(r.rel_diff <= 1e-8 for r in result.records)

    def test_i16_grid_respects_the_convergent_window(self):
        result = run_grid("I16")
        assert result.records, "window should admit points"
        for rec in result.records:
            assert -1.0 < rec.params["r"] < -0.5
        assert result.skipped, "wider r values must be skipped with a notation"
        for skip in result.skipped:
            assert skip.params["r"] >= -0.5
            assert "diverges" in skip.reason

    def test_i15_skips_power_pairs_with_reason(self):
        result = run_grid("I15")
        assert len(result.records) == 9
        assert len(result.skipped) == 9
        assert all("theta-form" in s.reason for s in result.skipped)

    def test_grid_override_merges_with_default(self):
        result = run_grid("I19", {"a": [0.5]})
        assert len(result.records) == 1
        assert result.records[0].params == {"a": 0.5}

    def test_override_of_one_param_keeps_other_defaults(self):
        result = run_grid("I12", {"t": [1.0]})
        assert len(result.records) == 5  # five default a values
        assert {r.params["t"] for r in result.records} == {1.0}

    def test_empty_admissible_set_is_reported_not_raised(self):
        result = run_grid("I10", {"a": [0.5, 0.9]})
        assert result.records == []
        assert len(result.skipped) == 2
