import math

import pytest

from gammerf import (
    DomainError,
    QuadConfig,
    UnsupportedPairKindError,
    default_registry,
    half_line,
    integrate,
    make_dirac,
    make_exponential,
    make_power,
    parse_pair,
    verify_pair,
)

TIGHT = QuadConfig(rel_tol=1e-13, abs_tol=1e-300, max_level=12, max_evals=1_000_000)
SQRT_PI = math.sqrt(math.pi)


class TestMakePower:
    def test_constant(self):
        p = make_power(0.0)
        assert p.F(2.0) == pytest.approx(0.5, rel=1e-14)
        assert p.sigma0 == 0.0
        assert p.time_kind == "ordinary"
        assert not p.singular_at_zero

    def test_linear(self):
        assert make_power(1.0).F(1.0) == pytest.approx(1.0, rel=1e-13)

    def test_inverse_sqrt_against_quadrature_oracle(self):
        p = make_power(-0.5)
        oracle = integrate(lambda t: math.exp(-0.5 * math.log(t) - 4.0 * t),
                           half_line(0.0, singular_lower=True), TIGHT)
        assert p.F(4.0) == pytest.approx(oracle.value, rel=1e-12)
        assert p.F(4.0) == pytest.approx(SQRT_PI / 2.0, rel=1e-13)
        assert p.singular_at_zero

    def test_domain(self):
        with pytest.raises(DomainError):
            make_power(-1.0)
        with pytest.raises(DomainError):
            make_power(math.nan)


class TestMakeDirac:
    def test_values(self):
        p = make_dirac(1.0)
        assert p.F(0.0) == 1.0
        assert p.F(1.0) == pytest.approx(math.exp(-1.0), rel=1e-15)
        assert make_dirac(2.0).F(0.5) == pytest.approx(math.exp(-1.0), rel=1e-15)

    def test_shape(self):
        p = make_dirac(0.25)
        assert p.time_kind == "dirac"
        assert p.f is None
        assert p.impulse_location == 0.25
        assert p.sigma0 == -math.inf

    def test_domain(self):
        with pytest.raises(DomainError):
            make_dirac(0.0)
        with pytest.raises(DomainError):
            make_dirac(-1.0)


class TestMakeExponential:
    def test_values(self):
        assert make_exponential(0.0).F(3.0) == pytest.approx(1.0 / 3.0, rel=1e-15)
        assert make_exponential(-1.0).F(1.0) == pytest.approx(0.5, rel=1e-15)
        assert make_exponential(2.0).F(2.5) == pytest.approx(2.0, rel=1e-15)

    def test_direct_quadrature_cross_check(self):
        # e^t against e^(-1.5 t) integrates to 2
        r = integrate(lambda t: math.exp(t - 1.5 * t), half_line(0.0), TIGHT)
        assert abs(r.value - 2.0) <= 2e-8

    def test_domain(self):
        with pytest.raises(DomainError):
            make_exponential(math.inf)


class TestSigma0Guard:
    def test_power_at_and_below_zero(self):
        p = make_power(0.5)
        with pytest.raises(DomainError, match="sigma0"):
            p.F(0.0)
        with pytest.raises(DomainError, match="sigma0"):
            p.F(-1.0)

    def test_exponential_below_abscissa(self):
        p = make_exponential(2.0)
        with pytest.raises(DomainError, match="sigma0"):
            p.F(2.0)
        assert math.isfinite(p.F(2.0000001))


class TestVerifyPair:
    @pytest.mark.parametrize("pair", [make_power(0.0), make_power(-0.5),
                                      make_power(1.0), make_exponential(1.0)])
    def test_passes_on_its_grid(self, pair):
        records = verify_pair(pair)
        assert len(records) == 5
        assert all(r.passed for r in records)
        assert all(r.rel_diff <= 1e-8 for r in records)

    def test_grid_respects_abscissa(self):
        records = verify_pair(make_exponential(1.0))
        ss = [r.params["s"] for r in records]
        assert min(ss) == pytest.approx(2.0)
        assert max(ss) == pytest.approx(101.0)

    def test_dirac_rejected(self):
        with pytest.raises(UnsupportedPairKindError):
            verify_pair(make_dirac(1.0))


class TestRegistry:
    def test_contents(self):
        reg = default_registry()
        assert [p.label() for p in reg] == [
            "power(r=0)", "power(r=1)", "power(r=-0.5)",
            "exp(c=-1)", "dirac(b=1)", "dirac(b=0.25)",
        ]

    def test_is_cached_and_immutable(self):
        assert default_registry() is default_registry()
        assert isinstance(default_registry(), tuple)


class TestParsePair:
    def test_round_trips(self):
        for text in ("power(r=-0.5)", "dirac(b=1)", "exp(c=-1)"):
            assert parse_pair(text).label() == text

    def test_whitespace_tolerant(self):
        assert parse_pair(" power( r = 2.5 ) ").params == {"r": 2.5}

    @pytest.mark.parametrize("bad", ["power", "power()", "power(x=1)",
                                     "nosuch(r=1)", "power(r=abc)",
                                     "power(r=1,b=2)"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_pair(bad)
