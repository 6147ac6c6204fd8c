import pytest
from hypothesis import given, strategies as st

from charvar.mirror import (
    MirrorCoeffs,
    differences,
    differences_binomial,
    sl_coeffs,
    sl_repspace_epoly,
    stringy_difference_minus_id,
    verify_mirror,
)
from charvar.moduli import HolonomyClass, repspace_epoly
from charvar.polyring import Poly, Q, exact_div
from charvar.recursion import closed_form

from conftest import from_sympy, q

H = HolonomyClass


def test_a_and_d_match_pgl():
    for g in range(1, 31):
        m, v = sl_coeffs(g), closed_form(g)
        assert m.a == v.a
        assert m.d == v.b


def test_genus_one_coefficients():
    m = sl_coeffs(1)
    assert m.b + m.c == 3 * (Q**2 - Q)
    assert differences(1).d4 == 3 * (Q**2 - Q)
    assert differences(1).d0 == Q * m.c + m.b


@pytest.mark.parametrize("g", [1, 2, 3, 8])
def test_two_presentations_agree(g):
    assert differences(g) == differences_binomial(g)


def test_b_plus_c_at_genus_three():
    m = sl_coeffs(3)
    assert m.b + m.c == 63 * (Q**2 - Q) ** 5


def test_stringy_difference_at_genus_two():
    expected = from_sympy(15 * q**2 * ((q - 1) ** 2 - (q + 1) ** 2) / 2)
    assert stringy_difference_minus_id(2) == expected
    assert exact_div(differences(2).d1, Q**3 - Q) == expected


def test_swap_exchanges_lines():
    d = differences(2)
    s = differences(sl_coeffs(2).swapped())
    assert (s.d0, s.d1, s.d2, s.d3, s.d4) == (d.d1, d.d0, d.d3, d.d2, d.d4)


small = st.lists(st.integers(-9, 9), max_size=4).map(Poly)


@given(small, small, small, small)
def test_difference_relations_for_any_b_c(a, b, c, d):
    diff = differences(MirrorCoeffs(a, b, c, d, 1))
    assert diff.d0 + (Q - 1) * diff.d2 == Q * diff.d4
    assert diff.d1 + (Q - 1) * diff.d3 == Q * diff.d4


def test_reconstructed_sl_values():
    m = sl_coeffs(1)
    assert sl_repspace_epoly(1, H.MinusId) == (Q**3 - Q) + Q * m.b + m.c
    for g in (1, 2, 4):
        gap = sl_repspace_epoly(g, H.Parabolic) - repspace_epoly(g, H.Parabolic)
        assert gap == (2 ** (2 * g) - 1) * (Q**2 - Q) ** (2 * g - 1)


def test_verify_mirror_passes():
    report = verify_mirror(8)
    assert report.passed, [(c.name, c.detail) for c in report.failures]
