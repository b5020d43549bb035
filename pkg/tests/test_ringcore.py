import pytest

from tsat.ring import (DVR, Q, QT, DomainError, Ideal, Poly, RingSpec, euler_combination, eval_t0, format_poly,
                       partial_derivative, t_shift, t_valuation, to_regular)
from tsat.scalars import TRat, is_regular, rat, reduce_mod_t, tp, trat_normalize
from tsat.syntax import ParseError, parse_poly, parse_poly_list

from conftest import Ring

t = TRat.t_power(1)


def trat(num, den=(1,)):
    return trat_normalize(tp(num), tp(den))


class TestNormalize:
    def test_factor_t_and_cancel(self):
        a = trat([0, 0, 1, -1], [0, 1])
        assert (a.v, a.num, a.den) == (1, tp([1, -1]), tp([1]))

    def test_identity(self):
        a = trat([1], [1])
        assert (a.v, a.num, a.den) == (0, tp([1]), tp([1]))

    def test_coprime(self):
        a = trat([0, 1], [1, 1])
        assert (a.v, a.num, a.den) == (1, tp([1]), tp([1, 1]))

    def test_den_normalized_at_zero(self):
        a = trat([2], [2, 4])  # 2/(2+4t) = 1/(1+2t)
        assert a.num == tp([1]) and a.den == tp([1, 2])

    def test_zero_den_rejected(self):
        with pytest.raises(ZeroDivisionError):
            trat([1], [0])


class TestArith:
    def test_cancellation(self):
        assert not (t + (-t))

    def test_valuation_addition(self):
        a = trat([0, 0, 1], [1, 1]) * TRat.t_power(-1)
        assert (a.v, a.num, a.den) == (1, tp([1]), tp([1, 1]))

    def test_unit_inverse(self):
        a = trat([1, 1]).inverse()
        assert (a.v, a.num, a.den) == (0, tp([1]), tp([1, 1]))

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            TRat.from_rat(0).inverse()


class TestRegular:
    def test_unit_denominator(self):
        a = trat([1], [1, 1])
        assert is_regular(a) and reduce_mod_t(a) == 1

    def test_pole(self):
        a = TRat.t_power(-1)
        assert not is_regular(a)
        with pytest.raises(ValueError):
            reduce_mod_t(a)

    def test_positive_valuation(self):
        a = trat([0, 0, 1], [1, -1])
        assert is_regular(a) and reduce_mod_t(a) == 0


class TestPoly:
    def test_product_degree(self):
        R = Ring(2)
        f = R("x1") * R("x2")
        assert f == R("x1*x2") and f.degree == 2

    def test_cancellation_prunes(self):
        R = Ring(2, DVR)
        f = R("x1 + t*x2") + R("-x1")
        assert f == R("t*x2") and len(f) == 1

    def test_weighted_degree(self):
        R = Ring(2, Q, (1, 2))
        assert (R("x1^2") * R("x2")).degree == 4

    def test_ring_mismatch(self):
        with pytest.raises(ValueError):
            Ring(2)("x1") + Ring(3)("x1")

    def test_bad_exponent(self):
        with pytest.raises(ValueError):
            Poly(RingSpec(2), {(1,): 1})

    def test_q_ring_rejects_t(self):
        with pytest.raises(DomainError):
            RingSpec(1, (), Q).coerce(t)

    def test_dvr_rejects_pole(self):
        with pytest.raises(DomainError):
            RingSpec(1, (), DVR).coerce(TRat.t_power(-1))

    def test_zero_variables(self):
        R = RingSpec(0, (), Q)
        assert R.const(3) * R.const(2) == R.const(6)


class TestPartials:
    def test_quadric(self):
        R = Ring(4)
        assert partial_derivative(R("x1*x2 + x3*x4"), 0) == R("x2")

    def test_absent_variable(self):
        R = Ring(3)
        assert not partial_derivative(R("x1*x2"), 2)

    def test_t_coefficient(self):
        R = Ring(1, DVR)
        assert partial_derivative(R("t*x1^2"), 0) == R("2*t*x1")


class TestEuler:
    def test_quadric(self):
        R = Ring(2)
        assert euler_combination(R("x1*x2")) == R("2*x1*x2")

    def test_cube(self):
        R = Ring(1)
        assert euler_combination(R("x1^3")) == R("3*x1^3")

    def test_weighted(self):
        R = Ring(2, Q, (1, 2))
        assert euler_combination(R("x1^2*x2")) == R("4*x1^2*x2")

    def test_inhomogeneous(self):
        with pytest.raises(ValueError):
            euler_combination(Ring(1)("x1 + x1^2"))


class TestValuation:
    def test_shift_to_regular(self):
        R = Ring(2, QT)
        f = R("1/t*x1 + x2")
        assert t_valuation(f) == -1
        g = t_shift(f, 1)
        assert g == R("x1 + t*x2") and g.is_regular()
        assert to_regular(f) == (g.change_domain(DVR), 1)

    def test_eval_t0(self):
        R = Ring(2, DVR)
        assert eval_t0(R("x1 + t*x2")) == Ring(2)("x1")

    def test_eval_t0_positive_valuation(self):
        R = Ring(1, DVR)
        assert not eval_t0(R("t^2*x1/(1 + t)"))

    def test_eval_t0_pole(self):
        with pytest.raises(DomainError):
            eval_t0(Ring(1, QT)("1/t*x1"))

    def test_zero_valuation(self):
        with pytest.raises(ValueError):
            t_valuation(RingSpec(1, (), DVR).zero())


class TestSyntax:
    def test_example(self):
        R = Ring(3, QT)
        f = R("(3/2 + t^2)*x1^2*x2 - (1/(1+t))*x3^3")
        assert f.terms[(2, 1, 0)] == trat([rat("3/2"), 0, 1])
        assert f.terms[(0, 0, 3)] == -trat([1], [1, 1])

    def test_round_trip(self):
        R = Ring(3, QT)
        for s in ["x1 - 2*x2", "(1 + t)*x1*x2 - 1/2*x3^2", "(1/(1 + t))*x1^3", "t^-2*x1"]:
            f = R(s)
            assert R(format_poly(f)) == f
            assert format_poly(R(format_poly(f))) == format_poly(f)

    def test_sorted_terms(self):
        R = Ring(2)
        assert format_poly(R("x2^2 + x1*x2 + x1^2")) == "x1^2 + x1*x2 + x2^2"

    def test_undeclared_variable(self):
        with pytest.raises(ParseError) as e:
            parse_poly("x1 + x3", RingSpec(2, (), Q))
        assert e.value.col == 6

    def test_pole_in_dvr(self):
        with pytest.raises(ParseError):
            parse_poly("1/t*x1", RingSpec(2, (), DVR))

    def test_division_by_x(self):
        with pytest.raises(ParseError):
            parse_poly("1/x1", RingSpec(2, (), QT))

    def test_list(self):
        R = RingSpec(2, (), DVR)
        assert len(parse_poly_list("x1, x1 + t^2*x2", R)) == 2

    def test_ideal_str(self):
        R = Ring(2)
        assert "x1" in str(Ideal(R.spec, [R("x1")]))
