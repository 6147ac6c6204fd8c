import pytest
import sympy as sp

from charvar.moduli import (
    CLASSES,
    HolonomyClass,
    dimension_and_components,
    euler_characteristic,
    euler_characteristic_closed_form,
    moduli_epoly,
    parabolic_hodge_monodromy,
    reducible_locus,
    moduli_closed_form,
    verify_hausel_relation,
    verify_moduli,
)
from charvar.polyring import Poly, Q, ZERO
from charvar.recursion import genus_vector

from conftest import from_sympy, q, to_sympy

H = HolonomyClass

# genus 2, expanded with sympy directly from the closed forms
MODULI_G2 = {
    H.Id: Poly([1, 0, 1, 0, 2, 0, 1]),
    H.MinusId: Poly([1, 0, -2, 0, -2, 0, 1]),
    H.JPlus: Poly([0, 0, 0, -4, 6, -4, -3, 0, 1]),
    H.JMinus: Poly([0, 0, 0, 0, 6, 0, -3, 0, 1]),
    H.Parabolic: Poly([1, 1, -2, -2, 4, -2, -2, 1, 1]),
}


def test_genus_one_values():
    assert moduli_epoly(1, H.MinusId) == Poly.const(1)
    assert moduli_epoly(1, H.Parabolic) == Q**2 + Q + 1
    assert moduli_epoly(1, H.JMinus) == Q**2
    assert moduli_epoly(1, H.Id) == Q**2 + 1


@pytest.mark.parametrize("c", CLASSES, ids=lambda c: c.value)
def test_genus_two_frozen(c):
    assert moduli_epoly(2, c) == MODULI_G2[c]
    assert moduli_closed_form(2, c) == MODULI_G2[c]


@pytest.mark.parametrize("g", range(1, 9))
def test_id_pipeline_with_sympy_division(g):
    red = reducible_locus(g)
    num = to_sympy(genus_vector(g).e0 - red.total)
    quotient, remainder = divmod_sympy(num, q**3 - q)
    assert remainder == 0
    assert moduli_epoly(g, H.Id) == from_sympy(quotient + to_sympy(red.mred))


def divmod_sympy(a, b):
    quotient, remainder = sp.div(sp.Poly(a, q), sp.Poly(b, q))
    return quotient.as_expr(), remainder.as_expr()


def test_reducible_locus_components():
    assert reducible_locus(5).r3 == Poly.const(1)
    assert reducible_locus(1).r4 == (Q**2 - 1) * (Q + 1)
    assert reducible_locus(1).mred == Q**2 + 1
    assert reducible_locus(1).r2 == ZERO


@pytest.mark.parametrize(
    "g,expected",
    [(2, (5, -2, -4, 4, 0)), (3, (23, -8, -16, 16, 0)), (4, (95, -32, -64, 64, 0))],
)
def test_euler_characteristics(g, expected):
    assert tuple(euler_characteristic(g, c) for c in CLASSES) == expected
    assert tuple(euler_characteristic_closed_form(g, c) for c in CLASSES) == expected


def test_dimension_and_components():
    assert dimension_and_components(2, H.MinusId) == (6, 1)
    assert dimension_and_components(2, H.JPlus) == (8, 1)
    assert dimension_and_components(3, H.Parabolic) == (14, 1)
    assert dimension_and_components(4, H.Id) == (18, 1)


def test_topology_needs_genus_two():
    with pytest.raises(ValueError):
        euler_characteristic(1, H.Id)
    with pytest.raises(ValueError):
        moduli_epoly(0, H.Id)


@pytest.mark.parametrize("g", [1, 2, 5])
def test_hausel_relation(g):
    assert verify_hausel_relation(g).passed


def test_hausel_relation_at_genus_one_by_hand():
    lhs = moduli_epoly(1, H.JMinus) + (Q + 1) * moduli_epoly(1, H.MinusId)
    assert lhs == Q**2 + Q + 1 == moduli_epoly(1, H.Parabolic)


def test_parabolic_monodromy_is_trivial():
    r = parabolic_hodge_monodromy(1)
    assert r.t == Q**2 + Q + 1
    assert r.n == ZERO
    assert parabolic_hodge_monodromy(3).t == moduli_epoly(3, H.Parabolic)


def test_verify_moduli_passes():
    report = verify_moduli(6)
    assert report.passed, [(c.name, c.detail) for c in report.failures]
