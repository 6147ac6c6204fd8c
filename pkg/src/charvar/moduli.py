"""E-polynomials of the PGL(2,C) character varieties ``M_C`` of a once-punctured genus-g surface.

Each class other than ``Id`` acts freely modulo its stabilizer, so the moduli
polynomial is the representation-space polynomial divided by the stabilizer.
``C = Id`` needs the reducible locus removed first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .polyring import ONE, Q, ZERO, Poly, RatPoly, exact_div, halve
from .recursion import PolyMatrix, genus_vector, iterate
from .repring import Z2Rep
from .report import Report

PGL = Q**3 - Q
HALF = Fraction(1, 2)


class HolonomyClass(enum.Enum):
    Id = "Id"
    MinusId = "MinusId"
    JPlus = "JPlus"
    JMinus = "JMinus"
    Parabolic = "Parabolic"

    @classmethod
    def parse(cls, s: str) -> "HolonomyClass":
        return cls(s)


CLASSES = tuple(HolonomyClass)


@dataclass(frozen=True)
class ReducibleLocusBreakdown:
    r1: Poly
    r2: Poly
    r3: Poly
    r4: Poly
    mred: Poly

    @property
    def total(self) -> Poly:
        return self.r1 + self.r2 + self.r3 + self.r4


def _rat(p: Poly) -> RatPoly:
    return RatPoly.from_poly(p)


def reducible_locus(g: int) -> ReducibleLocusBreakdown:
    """Strata of reducible representations with trivial holonomy: four pieces plus their quotient."""
    _check_genus(g)
    r1 = halve(_rat(PGL) * (_rat((Q - 1) ** (2 * g - 1)) + _rat((Q + 1) ** (2 * g - 1))) * HALF - _rat(Q**2))
    r2 = (Q + 1) * (Q ** (2 * g - 1) - Q) * ((Q - 1) ** (2 * g) - 1)
    r3 = ONE
    r4 = (Q ** (2 * g) - 1) * (Q + 1)
    mred = halve((_rat((Q - 1) ** (2 * g)) + _rat((Q + 1) ** (2 * g))) * HALF)
    return ReducibleLocusBreakdown(r1, r2, r3, r4, mred)


def reducible_total_closed_form(g: int) -> Poly:
    inner = (_rat((Q + 1) ** (2 * g - 1)) - _rat((Q - 1) ** (2 * g - 1))) * HALF
    return halve(_rat(PGL) * (inner + _rat(Q ** (2 * g - 2) + (Q - 1) * (Q**2 - Q) ** (2 * g - 2))))


def repspace_epoly(g: int, c: HolonomyClass, M: Optional[PolyMatrix] = None) -> Poly:
    """Representation-space polynomial before quotienting (commutator fixed, not up to conjugacy)."""
    _check_genus(g)
    v = genus_vector(g) if M is None else iterate(g, M)[g]
    if c is HolonomyClass.Id:
        return v.e0
    if c is HolonomyClass.MinusId:
        return v.e1
    if c is HolonomyClass.JPlus:
        return v.e2
    if c is HolonomyClass.JMinus:
        return v.e3
    return v.a + v.b


def moduli_epoly(g: int, c: HolonomyClass, M: Optional[PolyMatrix] = None) -> Poly:
    """Quotient by the stabilizer of ``C``; raises :class:`NotDivisible` if an identity is off."""
    rep = repspace_epoly(g, c, M)
    if c is HolonomyClass.Id:
        red = reducible_locus(g)
        return exact_div(rep - red.total, PGL) + red.mred
    stabilizer = {
        HolonomyClass.MinusId: PGL,
        HolonomyClass.JPlus: Q,
        HolonomyClass.JMinus: Q,
        HolonomyClass.Parabolic: Q - 1,
    }[c]
    return exact_div(rep, stabilizer)


def moduli_closed_form(g: int, c: HolonomyClass) -> Poly:
    _check_genus(g)
    m = 2 * g - 2
    if c is HolonomyClass.Id:
        body = PGL**m + (Q**2 - 1) ** m - Q * (Q**2 - Q) ** m - Q**m
        half = _rat(Q ** (2 * g - 1) * ((Q - 1) ** m + (Q + 1) ** m) + Q * ((Q + 1) ** (m + 1) + (Q - 1) ** (m + 1)))
        return body + halve(half * HALF)
    if c is HolonomyClass.MinusId:
        half = _rat((Q**2 + Q) ** m + (Q**2 - Q) ** m)
        return PGL**m + (Q**2 - 1) ** m - halve(half * HALF)
    if c is HolonomyClass.JPlus:
        half = _rat(-Q * (Q + 1) * (Q**2 + Q) ** m + (Q - 2) * (Q - 1) * (Q**2 - Q) ** m)
        return (Q**2 - 1) * PGL**m + halve(half * HALF)
    if c is HolonomyClass.JMinus:
        half = _rat((Q + 1) * (Q**2 + Q) ** m - (Q - 1) * (Q**2 - Q) ** m)
        return (Q**2 - 1) * PGL**m + halve(half * HALF)
    return (Q**2 + Q) * PGL**m + (Q + 1) * (Q**2 - 1) ** m - Q * (Q**2 - Q) ** m


def euler_characteristic(g: int, c: HolonomyClass) -> int:
    _check_genus(g, minimum=2)
    return moduli_epoly(g, c)(1)


def euler_characteristic_closed_form(g: int, c: HolonomyClass) -> int:
    _check_genus(g, minimum=2)
    return {
        HolonomyClass.Id: 3 * 2 ** (2 * g - 3) - 1,
        HolonomyClass.MinusId: -(2 ** (2 * g - 3)),
        HolonomyClass.JPlus: -(2 ** (2 * g - 2)),
        HolonomyClass.JMinus: 2 ** (2 * g - 2),
        HolonomyClass.Parabolic: 0,
    }[c]


def expected_dimension(g: int, c: HolonomyClass) -> int:
    return 6 * g - 6 if c in (HolonomyClass.Id, HolonomyClass.MinusId) else 6 * g - 4


def dimension_and_components(g: int, c: HolonomyClass) -> tuple[int, int]:
    """Degree and leading coefficient: complex dimension and number of top-dimensional components."""
    _check_genus(g, minimum=2)
    p = moduli_epoly(g, c)
    return p.degree, p.leading_coefficient


def parabolic_hodge_monodromy(g: int) -> Z2Rep:
    """Monodromy of the parabolic moduli over the eigenvalue line; it is trivial."""
    _check_genus(g)
    return Z2Rep(moduli_epoly(g, HolonomyClass.Parabolic), ZERO)


def verify_hausel_relation(g: int) -> Report:
    report = Report()
    report.guarded(
        f"moduli: e(M_J-) + (q+1) e(M_-Id) = e(M_lambda) (g={g})",
        "e(M_J-) + (q+1) e(M_-Id) = e(M_lambda)",
        lambda: moduli_epoly(g, HolonomyClass.JMinus) + (Q + 1) * moduli_epoly(g, HolonomyClass.MinusId)
        == moduli_epoly(g, HolonomyClass.Parabolic),
    )
    return report


def verify_moduli(g_max: int) -> Report:
    """Stabilizer divisions, closed forms and topology for every class and ``g <= g_max``."""
    report = Report()
    for g in range(1, g_max + 1):
        v = genus_vector(g)
        lam = v.a + v.b
        report.expect_equal(
            f"moduli: e0 + (q-1)e2 = q(a+b) + (q^2-q)^(2g) (g={g})",
            "e0 + (q-1)e2 = q e(Z4,lambda) + (q^2-q)^(2g)",
            v.e0 + (Q - 1) * v.e2,
            Q * lam + (Q**2 - Q) ** (2 * g),
        )
        report.expect_equal(
            f"moduli: e1 + (q-1)e3 = q(a+b) (g={g})",
            "e1 + (q-1)e3 = q e(Z4,lambda)",
            v.e1 + (Q - 1) * v.e3,
            Q * lam,
        )
        red = reducible_locus(g)
        report.expect_equal(
            f"moduli: reducible locus total (g={g})",
            "e(R) = (q^3-q)(((q+1)^(2g-1) - (q-1)^(2g-1))/2 + q^(2g-2) + (q-1)(q^2-q)^(2g-2))",
            red.total,
            reducible_total_closed_form(g),
        )
        for c in CLASSES:
            report.guarded(
                f"moduli: e(M_{c.value}) matches closed form (g={g})",
                f"e(M_{c.value}) = closed form",
                lambda c=c: moduli_epoly(g, c) == moduli_closed_form(g, c),
            )
        report.extend(verify_hausel_relation(g))
        mono = parabolic_hodge_monodromy(g)
        report.add(
            f"moduli: parabolic monodromy is trivial (g={g})",
            "R(M_lambda) = e(M_lambda) T",
            mono.n.is_zero() and mono.t == moduli_closed_form(g, HolonomyClass.Parabolic),
        )
        if g >= 2:
            for c in CLASSES:
                chi = euler_characteristic(g, c)
                want = euler_characteristic_closed_form(g, c)
                report.add(
                    f"moduli: chi(M_{c.value}) (g={g})",
                    "chi(M_Id) = 3 2^(2g-3) - 1, chi(M_-Id) = -2^(2g-3), chi(M_J+-) = -+2^(2g-2), chi(M_lambda) = 0",
                    chi == want,
                    "" if chi == want else f"got {chi}, expected {want}",
                )
                dim = dimension_and_components(g, c)
                want_dim = (expected_dimension(g, c), 1)
                report.add(
                    f"moduli: dimension and components of M_{c.value} (g={g})",
                    "dim M_(+-Id) = 6g-6, dim M_(J+-, lambda) = 6g-4, one top component",
                    dim == want_dim,
                    "" if dim == want_dim else f"got {dim}, expected {want_dim}",
                )
    return report


def _check_genus(g: int, minimum: int = 1) -> None:
    if not isinstance(g, int) or g < minimum:
        raise ValueError(f"genus must be an integer >= {minimum}, got {g!r}")
