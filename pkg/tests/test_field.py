"""Exact arithmetic in Q[t]/(t^4 - t^2 - 1) and certified numerics."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apollonian.field import (
    ComplexFieldElement,
    FieldElement,
    OMEGA,
    ONE,
    PHI,
    RHO,
    RHO_BAR,
    RHO_OMEGA,
    SQRT5,
    SQRT_PHI,
    SQRT_TAU,
    T,
    TAU,
    ZERO,
    decimal_str,
    fibonacci,
    golden_power,
    interval,
    sqrt_in_field,
)

coeffs = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
elements = st.builds(FieldElement, coeffs, coeffs, coeffs, coeffs)


class TestRingStructure:
    def test_defining_relation(self):
        assert T**4 == T * T + 1

    def test_reduction_of_high_powers(self):
        # t^5 = t^3 + t and t^6 = 2t^2 + 1 follow from the relation
        assert T**5 == T**3 + T
        assert T**6 == 2 * T * T + 1

    @given(elements, elements, elements)
    @settings(max_examples=60, deadline=None)
    def test_mul_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(elements, elements)
    @settings(max_examples=60, deadline=None)
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(elements)
    @settings(max_examples=60, deadline=None)
    def test_inverse(self, a):
        if not a:
            with pytest.raises(ZeroDivisionError):
                a.inverse()
        else:
            assert a * a.inverse() == ONE

    def test_pow_negative(self):
        assert PHI**-3 == TAU**3
        assert (T**-2) * (T * T) == ONE

    def test_mixed_rational_arithmetic(self):
        assert PHI + Fraction(1, 2) == FieldElement(Fraction(1, 2), 0, 1)
        assert 2 * TAU == FieldElement(-2, 0, 2)
        assert 1 / PHI == TAU


class TestConstants:
    def test_phi_tau_inverse_pair(self):
        assert PHI * TAU == 1
        assert PHI - TAU == 1

    def test_sqrt5(self):
        assert SQRT5 * SQRT5 == 5
        assert SQRT5 == 2 * PHI - 1

    def test_sqrt_phi_squares_to_phi(self):
        assert SQRT_PHI * SQRT_PHI == PHI

    def test_sqrt_tau_squares_to_tau(self):
        assert SQRT_TAU * SQRT_TAU == TAU

    def test_rho_quadratic(self):
        # rho and its conjugate are the roots of p^2 - 2 phi p + 1
        assert RHO * RHO == 2 * PHI * RHO - 1
        assert RHO * RHO_BAR == 1
        assert RHO + RHO_BAR == 2 * PHI

    def test_omega_unit_modulus(self):
        assert OMEGA * OMEGA.conjugate() == ComplexFieldElement(ONE, ZERO)
        assert OMEGA.re == -TAU
        assert OMEGA.im == SQRT_TAU

    def test_rho_omega_product(self):
        assert RHO_OMEGA == ComplexFieldElement(RHO, ZERO) * OMEGA
        assert RHO_OMEGA.re == -(1 + SQRT_TAU)
        assert RHO_OMEGA.im == 1 + SQRT_PHI

    def test_one_plus_rho_omega_norm(self):
        one = ComplexFieldElement(ONE, ZERO)
        assert (one + RHO_OMEGA).abs2() == 2 * RHO


class TestOrdering:
    def test_signs(self):
        assert PHI.sign() == 1
        assert (-SQRT_TAU).sign() == -1
        assert ZERO.sign() == 0

    def test_comparisons(self):
        assert TAU < ONE < PHI < RHO
        assert RHO_BAR > ZERO

    def test_tight_ordering(self):
        # 1 + 4 phi^3 and phi^6 coincide; nearby values must separate
        assert 1 + 4 * PHI**3 == PHI**6
        assert (1 + 4 * PHI**3 - Fraction(1, 10**12)) < PHI**6


class TestCertifiedNumerics:
    def test_interval_encloses_tightly(self):
        lo, hi = interval(SQRT5, Fraction(1, 10**30))
        assert hi - lo <= Fraction(1, 10**30)
        assert lo * lo < 5 < hi * hi

    @pytest.mark.parametrize(
        "value,digits,expected",
        [
            (PHI, 10, "1.6180339887"),
            (TAU, 10, "0.6180339887"),
            (SQRT5, 10, "2.2360679775"),
            (RHO, 9, "2.890053638"),
            (RHO, 5, "2.89005"),
            (RHO_BAR, 9, "0.346014339"),
            (SQRT_TAU, 9, "0.786151378"),
        ],
    )
    def test_decimal_digits(self, value, digits, expected):
        assert decimal_str(value, digits) == expected

    def test_decimal_rational_fast_path(self):
        assert decimal_str(FieldElement(Fraction(1, 8)), 3) == "0.125"
        assert decimal_str(FieldElement(-3), 2) == "-3.00"

    def test_float_conversion(self):
        assert abs(float(PHI) - 1.618033988749895) < 1e-15


class TestFibonacci:
    @pytest.mark.parametrize(
        "n,expected",
        [(-4, -3), (-3, 2), (-2, -1), (-1, 1), (0, 0), (1, 1), (2, 1), (6, 8), (10, 55)],
    )
    def test_bilateral_values(self, n, expected):
        assert fibonacci(n) == expected

    def test_recurrence_both_directions(self):
        for n in range(-15, 15):
            assert fibonacci(n + 1) == fibonacci(n) + fibonacci(n - 1)

    def test_golden_power_closed_form(self):
        for n in range(-20, 21):
            assert golden_power(n) == PHI**n
            assert golden_power(n) == fibonacci(n) * PHI + fibonacci(n - 1)

    def test_tau_power_closed_form(self):
        # the sign alternates; without (-1)^n the identity fails for odd n
        for n in range(0, 11):
            assert TAU**n == (-1) ** n * (FieldElement(fibonacci(n + 1)) - fibonacci(n) * PHI)
        assert TAU != FieldElement(fibonacci(2)) - fibonacci(1) * PHI


class TestSquareRoots:
    @pytest.mark.parametrize("square", ["5", "16", "phi", "tau", "4*phi^2", "2*rho"])
    def test_recovers_root(self, square):
        table = {
            "5": FieldElement(5),
            "16": FieldElement(16),
            "phi": PHI,
            "tau": TAU,
            "4*phi^2": 4 * PHI**2,
            "2*rho": 2 * RHO,
        }
        x = table[square]
        root = sqrt_in_field(x)
        assert root is not None
        assert root * root == x

    @pytest.mark.parametrize("nonsquare", [3, 2, 7])
    def test_rejects_rational_nonsquares(self, nonsquare):
        assert sqrt_in_field(FieldElement(nonsquare)) is None

    def test_rejects_negative(self):
        assert sqrt_in_field(-PHI) is None

    @given(elements)
    @settings(max_examples=40, deadline=None)
    def test_square_then_root(self, a):
        if not a:
            return
        root = sqrt_in_field(a * a)
        assert root is not None
        assert root * root == a * a


class TestSerialization:
    def test_to_string_canonical(self):
        assert PHI.to_string() == "0 + 0*t + 1*t^2 + 0*t^3"
        assert SQRT_TAU.to_string() == "0 + -1*t + 0*t^2 + 1*t^3"

    @given(elements)
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, a):
        assert FieldElement.from_string(a.to_string()) == a

    def test_from_string_fractions(self):
        parsed = FieldElement.from_string("1/2 + -2/3*t + 0*t^2 + 4*t^3")
        assert parsed == FieldElement(Fraction(1, 2), Fraction(-2, 3), 0, 4)

    def test_from_string_rejects_garbage(self):
        with pytest.raises(ValueError):
            FieldElement.from_string("1 + 2*t")
        with pytest.raises(ValueError):
            FieldElement.from_string("x + 0*t + 0*t^2 + 0*t^3")


class TestComplex:
    def test_inverse(self):
        z = ComplexFieldElement(PHI, -SQRT_TAU)
        w = z.inverse()
        assert z * w == ComplexFieldElement(ONE, ZERO)

    def test_powers(self):
        assert OMEGA**0 == ComplexFieldElement(ONE, ZERO)
        assert OMEGA**3 == OMEGA * OMEGA * OMEGA
        assert OMEGA**-2 == (OMEGA * OMEGA).inverse()

    def test_abs2_matches_components(self):
        z = ComplexFieldElement(RHO, SQRT5)
        assert z.abs2() == RHO * RHO + 5
