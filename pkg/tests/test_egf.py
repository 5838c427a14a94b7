from fractions import Fraction as F

from papkit.egf import (
    EGF_BUILDERS,
    bivariate_diff_egf,
    check_pap_even_ode,
    check_pap_functional_equations,
    fdiff_egf,
    pap_egf,
    pap_parity_egfs,
    reference_egfs,
)
from papkit.series import Series, poly_text


class TestPapEgf:
    def test_low_coefficients(self):
        p = pap_egf(20)
        assert p[0] == 1 and p[1] == 1
        assert p.egf_value(5) == 12
        assert p.egf_value(10) == 14400

    def test_parity_split(self):
        even, odd = pap_parity_egfs(20)
        assert [odd[n] for n in range(3)] == [0, 0, 0]
        assert even.egf_value(3) == 1
        x = Series.x(20)
        assert even - odd == 1 + x + x ** 2 / 2

    def test_functional_equations(self):
        check_pap_functional_equations(20)

    def test_ode(self):
        check_pap_even_ode(20)


class TestFdiffEgf:
    def test_values(self):
        series = fdiff_egf(20)
        assert series[0] == 1
        assert series.egf_value(5) == -2
        assert series.egf_value(12) == 25
        assert series.egf_value(20) == 81  # (-1)^20 * 9 * 9


class TestReferenceEgfs:
    def test_reference_values(self):
        refs = reference_egfs(12)
        assert refs["derangement"].egf_value(4) == 9
        assert refs["perm-even"].egf_value(4) == 12
        assert refs["perm-odd"].egf_value(2) == 1
        assert refs["der-even"].egf_value(4) == 3
        assert refs["der-odd"].egf_value(4) == 6

    def test_even_plus_odd(self):
        refs = reference_egfs(12)
        assert refs["perm-even"] + refs["perm-odd"] == refs["perm"]
        assert refs["der-even"] + refs["der-odd"] == refs["derangement"]


class TestBivariate:
    def test_first_rows(self):
        bi = bivariate_diff_egf(14)
        assert bi.egf_poly(3) == ()
        assert bi.egf_poly(4) == (F(0), F(0), F(1))
        assert bi.egf_poly(5) == (F(0), F(0), F(-1), F(-1))
        assert poly_text(bi.egf_poly(10)) == (
            "u^2 + 2*u^3 + 3*u^4 + 4*u^5 + 3*u^6 + 2*u^7 + u^8"
        )

    def test_row_matches_closed_form_to_14(self):
        from papkit.sequences import signed_pad_excedance_diff

        bi = bivariate_diff_egf(14)
        for n in range(4, 15):
            poly = bi.egf_poly(n)
            for k in range(2, n - 1):
                assert poly[k] == signed_pad_excedance_diff(n, k)


def test_builders_registry():
    assert set(EGF_BUILDERS) == {
        "pap", "pap-even", "pap-odd", "diff",
        "perm", "perm-even", "perm-odd",
        "derangement", "der-even", "der-odd",
    }
    for name, builder in EGF_BUILDERS.items():
        series = builder(6)
        assert series.order == 6, name
