"""Comparison of SL(2,C) and PGL(2,C) representation spaces.

The SL side enters only through the coefficients ``a, b, c, d`` of its
Hodge monodromy ``aT + bS2 + cS-2 + dS0`` over ``C - {2, -2}``.  The
differences ``e_i - e~_i`` follow from ``b`` and ``c``.  SL-side
representation-space polynomials are *reconstructed* as PGL value plus
difference; they are not computed from an SL recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

from .moduli import HolonomyClass, repspace_epoly
from .polyring import Q, Poly, RatPoly, exact_div, halve
from .recursion import InvariantViolation, closed_form
from .report import Report

PGL = Q**3 - Q
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class MirrorCoeffs:
    a: Poly
    b: Poly
    c: Poly
    d: Poly
    genus: int

    def swapped(self) -> "MirrorCoeffs":
        """The involution exchanging the two nontrivial characters ``S2`` and ``S-2``."""
        return replace(self, b=self.c, c=self.b)


@dataclass(frozen=True)
class MirrorDifferences:
    d0: Poly
    d1: Poly
    d2: Poly
    d3: Poly
    d4: Poly

    def as_tuple(self) -> tuple[Poly, ...]:
        return (self.d0, self.d1, self.d2, self.d3, self.d4)

    def for_class(self, c: HolonomyClass) -> Poly:
        return {
            HolonomyClass.Id: self.d0,
            HolonomyClass.MinusId: self.d1,
            HolonomyClass.JPlus: self.d2,
            HolonomyClass.JMinus: self.d3,
            HolonomyClass.Parabolic: self.d4,
        }[c]


def _rat(p: Poly) -> RatPoly:
    return RatPoly.from_poly(p)


def sl_coeffs(g: int) -> MirrorCoeffs:
    if g < 1:
        raise ValueError("genus must be >= 1")
    n = 2 * g - 1
    two = 2 ** (2 * g - 1)
    qn = _rat(Q**n)
    plus, minus = _rat((Q + 1) ** n), _rat((Q - 1) ** n)
    a = halve(_rat(PGL**n) + qn * (plus - minus) * HALF)
    b = halve(_rat(two * (Q**2 - Q) ** n - two * (Q**2 + Q) ** n) + qn * (plus - minus) * HALF)
    c = halve(_rat(two * (Q**2 - Q) ** n + two * (Q**2 + Q) ** n) - qn * (plus + minus) * HALF)
    d = halve(_rat((Q**2 - 1) ** n) - qn * (plus + minus) * HALF)
    pgl = closed_form(g)
    if a != pgl.a or d != pgl.b:
        raise InvariantViolation(f"genus {g}: SL coefficients a, d differ from the PGL monodromy")
    return MirrorCoeffs(a, b, c, d, g)


def differences(source: Union[int, MirrorCoeffs]) -> MirrorDifferences:
    """``e_i - e~_i`` expressed through ``b`` and ``c``."""
    m = sl_coeffs(source) if isinstance(source, int) else source
    return MirrorDifferences(Q * m.c + m.b, Q * m.b + m.c, m.b, m.c, m.b + m.c)


def differences_binomial(g: int) -> MirrorDifferences:
    """The same differences written with ``2^(2g) - 1`` and powers of ``q^2 -+ q``."""
    k = 2 ** (2 * g) - 1
    lo, hi = (Q**2 - Q) ** (2 * g - 1), (Q**2 + Q) ** (2 * g - 1)
    lo2, hi2 = (Q**2 - Q) ** (2 * g - 2), (Q**2 + Q) ** (2 * g - 2)
    d0 = halve(_rat(PGL * k) * _rat(lo2 + hi2) * HALF)
    d1 = halve(_rat(PGL * k) * _rat(lo2 - hi2) * HALF)
    d2 = halve(_rat(k * (lo - hi)) * HALF)
    d3 = halve(_rat(k * (lo + hi)) * HALF)
    return MirrorDifferences(d0, d1, d2, d3, k * lo)


def sl_repspace_epoly(g: int, c: HolonomyClass) -> Poly:
    """Reconstructed SL-side representation-space polynomial: PGL value plus difference."""
    return repspace_epoly(g, c) + differences(g).for_class(c)


def stringy_difference_minus_id(g: int) -> Poly:
    k = 2 ** (2 * g) - 1
    return halve(_rat(k * Q ** (2 * g - 2)) * _rat((Q - 1) ** (2 * g - 2) - (Q + 1) ** (2 * g - 2)) * HALF)


def verify_mirror(g_max: int) -> Report:
    report = Report()
    for g in range(1, g_max + 1):
        pgl = closed_form(g)
        try:
            m = sl_coeffs(g)
        except ArithmeticError as exc:
            report.add(f"mirror: SL coefficients (g={g})", "a^g = a~^g, d^g = b~^g", False, str(exc))
            continue
        report.add(f"mirror: a = a~, d = b~ (g={g})", "a^g = a~^g, d^g = b~^g", m.a == pgl.a and m.d == pgl.b)
        report.expect_equal(
            f"mirror: b + c (g={g})",
            "b^g + c^g = (2^(2g)-1)(q^2-q)^(2g-1)",
            m.b + m.c,
            (2 ** (2 * g) - 1) * (Q**2 - Q) ** (2 * g - 1),
        )
        diff = differences(m)
        binom = differences_binomial(g)
        for i, (x, y) in enumerate(zip(diff.as_tuple(), binom.as_tuple())):
            report.expect_equal(
                f"mirror: difference line {i}, both forms (g={g})",
                ("E0 = qc+b", "E1 = qb+c", "E2 = b", "E3 = c", "E4,lambda = b+c")[i],
                x,
                y,
            )
        report.expect_equal(
            f"mirror: E0 + (q-1)E2 = qE4,lambda (g={g})",
            "E0 + (q-1)E2 = qE4,lambda",
            diff.d0 + (Q - 1) * diff.d2,
            Q * diff.d4,
        )
        report.expect_equal(
            f"mirror: E1 + (q-1)E3 = qE4,lambda (g={g})",
            "E1 + (q-1)E3 = qE4,lambda",
            diff.d1 + (Q - 1) * diff.d3,
            Q * diff.d4,
        )
        report.guarded(
            f"mirror: stringy -Id difference (g={g})",
            "(2^(2g)-1) q^(2g-2) ((q-1)^(2g-2) - (q+1)^(2g-2))/2 = E1/(q^3-q)",
            lambda: exact_div(diff.d1, PGL) == stringy_difference_minus_id(g),
        )
        sw = differences(m.swapped())
        report.add(
            f"mirror: b <-> c swaps E0 <-> E1 and E2 <-> E3 (g={g})",
            "b^g <-> c^g",
            (sw.d0, sw.d1, sw.d2, sw.d3, sw.d4) == (diff.d1, diff.d0, diff.d3, diff.d2, diff.d4),
        )
    return report
