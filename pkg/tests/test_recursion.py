import itertools

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from charvar.polyring import ONE, Q, ZERO, Poly
from charvar.recursion import (
    GLUE_SPACES,
    GenusVector,
    InvariantViolation,
    PolyMatrix,
    closed_form,
    genus_vector,
    gluing_epoly,
    iterate,
    matrices_P_D,
    matrix_M,
    step,
    verify_recursion,
)

from conftest import from_sympy, half, q, to_sympy

V1 = (Q**4 + Q**3 - Q**2 - Q, Q**3 - Q, Q**3 - 2 * Q**2, Q**3, Q**3, -ONE)
# genus 2, expanded independently from the closed forms with sympy
V2 = (
    Poly([0, -1, 0, 3, -3, 0, 2, -3, 1, 1]),
    Poly([0, -1, 0, 3, 0, 0, 0, -3, 0, 1]),
    Poly([0, 0, 0, 0, -4, 6, -4, -3, 0, 1]),
    Poly([0, 0, 0, 0, 0, 6, 0, -3, 0, 1]),
    Poly([0, 0, 0, 0, 0, 6, 0, -3, 0, 1]),
    Poly([-1, 0, 3, 0, -6]),
)


def sympy_closed_form(g):
    n = 2 * g - 1
    x, y = (q**2 - q) ** n, (q**2 + q) ** n
    c, s = (q**3 - q) ** n, (q**2 - 1) ** n
    return (
        c + q * s + half * (q * (q - 1) * y + (q - 2) * (q + 1) * x),
        c + q * s - half * ((q - 1) * y + (q + 1) * x),
        c + half * (-q * y + (q - 2) * x),
        c + half * (y - x),
        c + half * (y - x),
        s - half * (y + x),
    )


def to_sympy_matrix(m: PolyMatrix):
    return sp.Matrix([[to_sympy(x) for x in row] for row in m.entries])


def test_matrix_entries():
    m = matrix_M()
    assert m[0, 0] == Q**4 + Q**3 - Q**2 - Q
    assert m[5, 5] == Q**4 - 2 * Q**2 + 2 * Q + 1
    assert m[4, 5] == -2 * Q**4
    assert m[0, 2] == Q**5 - 2 * Q**4 - Q**3 + 2 * Q**2


def test_P_and_D_entries():
    p, d = matrices_P_D()
    assert p[0, 0] == -(Q**2 - 2 * Q - 3)
    assert p[5, 4] == ONE
    assert d[5, 5] == (Q**3 - Q) ** 2
    assert d[0, 1] == ZERO


def test_diagonalization_with_sympy():
    m = to_sympy_matrix(matrix_M())
    p, d = (to_sympy_matrix(x) for x in matrices_P_D())
    assert (m * p - p * d).expand() == sp.zeros(6, 6)


def test_det_P_matches_sympy():
    p, _ = matrices_P_D()
    expected = from_sympy(to_sympy_matrix(p).det(method="berkowitz"))
    assert p.det() == expected
    assert p.det() == 4 * Q**2 * (Q - 1) * (Q + 1)


def leibniz_det(m: PolyMatrix) -> Poly:
    n = m.size
    total = ZERO
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for i, j in enumerate(perm):
            term = term * m[i, j]
        total = total + (term if inversions % 2 == 0 else -term)
    return total


entry = st.lists(st.integers(-3, 3), max_size=3).map(Poly)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(rows):
    m = PolyMatrix(rows)
    assert m.det() == leibniz_det(m)


def test_step_from_seed():
    v1 = step(GenusVector.seed())
    assert v1.as_tuple() == V1
    assert v1.genus == 1


def test_second_step_against_frozen_values():
    v2 = genus_vector(2)
    assert v2.as_tuple() == V2
    # b at q = 1 from the closed form: (q^2-1)^3 - ((q^2+q)^3 + (q^2-q)^3)/2 = -4
    assert v2.b(1) == -4


def test_closed_form_two_b_full_expansion():
    assert closed_form(2).b == -6 * Q**4 + 3 * Q**2 - 1


@pytest.mark.parametrize("g", [1, 2, 3, 7, 12])
def test_closed_form_matches_sympy(g):
    expected = tuple(from_sympy(e) for e in sympy_closed_form(g))
    assert closed_form(g).as_tuple() == expected


def test_iteration_equals_closed_form():
    vectors = iterate(20)
    for g in range(1, 21):
        assert vectors[g] == closed_form(g)


def test_e3_equals_a():
    for g in range(1, 31):
        v = closed_form(g)
        assert v.e3 == v.a


def test_grand_sum_corrected_weights_hold():
    for g in range(0, 15):
        assert genus_vector(g).grand_sum() == (Q**3 - Q) ** (2 * g)


def test_grand_sum_with_literal_weights_does_not_hold():
    v = genus_vector(1)
    literal = v.e0 + v.e1 + (Q**2 - 1) * (v.e2 + v.e3) + (Q - 2) * v.a - v.b
    assert literal != (Q**3 - Q) ** 2
    assert literal == 2 * Q**5 - 2 * Q**3 + Q**2 - 2 * Q + 1


def test_corrected_weights_are_a_left_eigenvector():
    from charvar.recursion import GRAND_SUM_WEIGHTS

    m = matrix_M()
    lhs = tuple(sum((GRAND_SUM_WEIGHTS[i] * m[i, j] for i in range(6)), ZERO) for j in range(6))
    assert lhs == tuple((Q**3 - Q) ** 2 * w for w in GRAND_SUM_WEIGHTS)


def test_step_raises_on_broken_invariants():
    bad = matrix_M((1, 0))
    with pytest.raises(InvariantViolation):
        step(GenusVector.seed(), bad)


@pytest.mark.parametrize("which", GLUE_SPACES)
def test_gluing_all_splits(which):
    vectors = iterate(7)
    for g in range(2, 8):
        for k in range(1, g):
            got = gluing_epoly(vectors[k], vectors[g - k], which)
            v = vectors[g]
            want = v.a + v.b if which == "Z4" else getattr(v, "e" + which[1])
            assert got == want, (which, g, k)


def test_gluing_with_trivial_side():
    v0, v1 = iterate(1)
    assert gluing_epoly(v0, v1, "Z0") == v1.e0
    assert gluing_epoly(v1, v1, "Z1") == closed_form(2).e1


def test_gluing_against_sympy_expansion():
    v1 = sympy_closed_form(1)
    e0, e1, e2, e3, a, b = v1
    big_a, big_b = a * a + b * b, 2 * a * b
    z0 = e0 * e0 + e1 * e1 + (q**2 - 1) * (e2 * e2 + e3 * e3) + (q**3 - 2 * q**2 - q) * big_a - 2 * q * big_b
    assert gluing_epoly(genus_vector(1), genus_vector(1), "Z0") == from_sympy(z0)
    assert from_sympy(z0) == from_sympy(sympy_closed_form(2)[0])


def test_gluing_rejects_unknown_space():
    with pytest.raises(ValueError):
        gluing_epoly(genus_vector(1), genus_vector(1), "Z9")


def test_verify_recursion_passes():
    report = verify_recursion(6)
    assert report.passed, [(c.name, c.detail) for c in report.failures]


def test_verify_recursion_parallel_is_identical():
    serial = verify_recursion(5)
    parallel = verify_recursion(5, workers=4)
    assert [c.to_json() for c in serial] == [c.to_json() for c in parallel]


@pytest.mark.parametrize("ij", [(0, 0), (2, 4), (5, 5), (3, 1)])
def test_verify_recursion_detects_perturbation(ij):
    report = verify_recursion(3, M=matrix_M(ij))
    assert not report.passed
    assert all(c.anchor for c in report.failures)
