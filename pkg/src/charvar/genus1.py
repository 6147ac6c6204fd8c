"""Genus-one building blocks.

Every stratum polynomial below is a closed-form constant.  The tables keep the
inclusion-exclusion signs explicit so an audit dump shows the same shape as the
hand computation, and :func:`verify_genus1` checks the web of sum identities
tying them together.

Spaces (all for pairs ``(A, B)`` in ``PGL(2,C)^2``):

* ``Z0``: ``[A,B] = Id``
* ``Z1``: ``[A,B] = -Id``
* ``Z2``: ``[A,B] = J+`` (fixed representative)
* ``Z3``: ``[A,B] = J-`` (fixed representative)
* ``Z4``: ``[A,B]`` conjugate to ``diag(l, 1/l)``, ``l != 0, 1, -1``
* ``Z4bar``: the fibres ``[A,B] = diag(l, 1/l)`` over ``C - {0, 1, -1}``
* ``Z4barQuot``: the quotient of ``Z4bar`` by ``l -> 1/l``, over ``C - {2, -2}``
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .polyring import ONE, Q, ZERO, Poly, exact_div
from .repring import Z2Rep, e_over_three_punctures, e_over_two_punctures
from .report import Report

PGL = Q**3 - Q  # e(PGL(2,C))
# Inclusion-exclusion signs for the nine strata of Z4 and of its fibres.
Z4_SIGNS = (1, 1, 1, 1, -1, 1, 1, -1, -1)

Value = Union[Poly, Z2Rep]


@dataclass(frozen=True)
class Stratum:
    label: str
    sign: int
    value: Value
    anchor: str


@dataclass(frozen=True)
class StrataTable:
    space_label: str
    entries: tuple[Stratum, ...]
    stated_total: Value
    anchor: str

    def total(self) -> Value:
        acc = Z2Rep() if isinstance(self.entries[0].value, Z2Rep) else ZERO
        for s in self.entries:
            acc = acc + s.value if s.sign > 0 else acc - s.value
        return acc

    def entry(self, label: str) -> Stratum:
        for s in self.entries:
            if s.label == label:
                return s
        raise KeyError(label)

    def to_json(self) -> dict:
        def enc(v):
            return v.to_json()

        return {
            "space": self.space_label,
            "anchor": self.anchor,
            "stated_total": enc(self.stated_total),
            "entries": [
                {"label": s.label, "sign": s.sign, "value": enc(s.value), "anchor": s.anchor} for s in self.entries
            ],
        }


def build_z0_strata() -> StrataTable:
    return StrataTable(
        "Z0",
        (
            Stratum("PGLx{Id} u {Id}xPGL", 1, 2 * PGL - 1, "2e(PGL(2,C)) - 1"),
            Stratum("Z0''a", 1, Q**4 - 3 * Q**3 + Q**2 + 3 * Q, "e(Z0''a) = q^4 - 3q^3 + q^2 + 3q"),
            Stratum("Z0'''a", 1, Q**3 - 2 * Q**2 - Q, "e(Z0'''a) = q^3 - 2q^2 - q"),
            Stratum("Z0''''a", 1, Q**2, "e(Z0''''a) = e(PGL/D)^+ = q^2"),
            Stratum("Z0'b", 1, (Q**2 - 1) * (Q - 1), "e(Z0'b) = (q^2-1)(q-1)"),
        ),
        PGL * (Q + 1),
        "e(Z0) = (q^3-q)(q+1)",
    )


def build_z1_strata() -> StrataTable:
    return StrataTable(
        "Z1",
        (Stratum("PGL/H", 1, PGL, "e(Z1) = e(PGL(2,C)/H) = q^3 - q"),),
        Q**3 - Q,
        "e(Z1) = q^3 - q",
    )


def build_z2_strata() -> StrataTable:
    """Strata of ``Zbar2``: a line bundle over ``(C*)^2 - {(+-1,+-1)}`` mod ``Z2 x Z2``."""
    return StrataTable(
        "Z2",
        (Stratum("C x ((C*)^2 - 4pts)/Z2^2", 1, Q * ((Q - 1) ** 2 - 1), "e(Zbar2) = q((q-1)^2 - 1)"),),
        Q**3 - 2 * Q**2,
        "e(Zbar2) = q^3 - 2q^2",
    )


def build_z3_strata() -> StrataTable:
    """Strata of ``Zbar3``: case ``tr B = 0`` and the three slices of case ``tr B != 0``.

    The three slice entries carry the factor ``e(Stab(J+)) = q``.
    """
    return StrataTable(
        "Z3",
        (
            Stratum("Zbar3' (tr B = 0)", 1, (Q - 1) * Q, "e(Zbar3') = (q-1)q"),
            Stratum("Zbar3'' S^a", 1, Q * (Q - 1), "e(S^a) = q - 1"),
            Stratum("Zbar3'' S^b", 1, Q * 2 * (Q - 1), "e(S^b) = 2(q-1)"),
            Stratum("Zbar3'' S^c", 1, Q * (Q - 2) ** 2, "e(S^c) = (q-2)^2"),
        ),
        Q**3,
        "e(Zbar3) = q^3",
    )


def build_z4_strata() -> StrataTable:
    values = (
        PGL * (Q - 2),
        PGL * (Q - 2),
        PGL * (Q - 1) * (Q - 3),
        PGL * (Q - 1) * (Q - 3),
        PGL * (Q - 3),
        PGL * ((Q - 1) * (Q - 2) + 1),
        PGL * (Q + 1) * (Q - 2) ** 2,
        ((Q - 3) ** 2 + (Q - 2)) * PGL,
        PGL * ((Q - 2) * (Q - 2) - (Q - 3)),
    )
    anchors = (
        "e(Z4^0) = (q^3-q)(q-2)",
        "e(Z4^1) = (q^3-q)(q-2)",
        "e(Z4^2) = (q^3-q)(q-1)(q-3)",
        "e(Z4^3) = (q^3-q)(q-1)(q-3)",
        "e(Z4^4) = (q^3-q)(q-3)",
        "e(Z4^5) = (q^3-q)((q-1)(q-2)+1)",
        "e(Z4^6) = (q^3-q)(q+1)(q-2)^2",
        "e(Z4^7) = ((q-3)^2 + (q-2))(q^3-q)",
        "e(Z4^8) = (q^3-q)((q-2)(q-2)-(q-3))",
    )
    return StrataTable(
        "Z4",
        tuple(Stratum(f"Z4^{i}", s, v, a) for i, (s, v, a) in enumerate(zip(Z4_SIGNS, values, anchors))),
        PGL * (Q**3 - 2 * Q**2 - 2),
        "e(Z4) = (q^3-q)(q^3-2q^2-2)",
    )


# Hodge monodromy of each slice S^i of Zbar4 over C - {0, 1, -1}; all trivial.
_Z4_SLICES = (ONE, ONE, 2 * (Q - 1), 2 * (Q - 1), Poly.const(2), Q - 2, (Q + 1) * (Q - 2), 2 * Q - 5, Q - 4)
_Z4_SLICE_ANCHORS = (
    "R(S^0) = T",
    "R(S^1) = T",
    "R(S^2) = 2(q-1)T",
    "R(S^3) = 2(q-1)T",
    "R(S^4) = 2T",
    "R(S^5) = (q-2)T",
    "R(S^6) = (q+1)(q-2)T",
    "R(S^7) = (2q-5)T",
    "R(S^8) = (q-4)T",
)


def build_z4bar_strata() -> StrataTable:
    """Hodge monodromy ``R(Zbar4^i) = (q-1) R(S^i)`` per stratum (C* stabilizer)."""
    return StrataTable(
        "Z4bar",
        tuple(
            Stratum(f"Zbar4^{i}", s, Z2Rep((Q - 1) * v, ZERO), a)
            for i, (s, v, a) in enumerate(zip(Z4_SIGNS, _Z4_SLICES, _Z4_SLICE_ANCHORS))
        ),
        Z2Rep(Q**3 - 1, ZERO),
        "R(Zbar4) = (q^3-1)T",
    )


def build_z4bar_quot_strata() -> StrataTable:
    reps = (
        Z2Rep(Q, -ONE),
        Z2Rep(Q, -ONE),
        Z2Rep((Q - 1) ** 2, (Q - 1) ** 2),
        Z2Rep((Q - 1) ** 2, (Q - 1) ** 2),
        Z2Rep(Q - 1, Q - 1),
        Z2Rep(Q**2 - Q + 1, -2 * Q + 1),
        Z2Rep((Q + 1) * (Q - 2) * Q, -(Q + 1) * (Q - 2)),
        Z2Rep(Q**2 - 3 * Q + 3, Q**2 - 4 * Q + 2),
        Z2Rep(Q**2 - 3 * Q + 1, -2 * Q + 3),
    )
    anchors = (
        "R(Zbar4^0/Z2) = qT - N",
        "R(Zbar4^1/Z2) = qT - N",
        "R(Zbar4^2/Z2) = (q-1)^2 T + (q-1)^2 N",
        "R(Zbar4^3/Z2) = (q-1)^2 T + (q-1)^2 N",
        "R(Zbar4^4/Z2) = (q-1)T + (q-1)N",
        "R(Zbar4^5/Z2) = (q^2-q+1)T + (-2q+1)N",
        "R(Zbar4^6/Z2) = (q+1)(q-2)qT - (q+1)(q-2)N",
        "R(Zbar4^7/Z2) = (q^2-3q+3)T + (q^2-4q+2)N",
        "R(Zbar4^8/Z2) = (q^2-3q+1)T + (-2q+3)N",
    )
    return StrataTable(
        "Z4barQuot",
        tuple(Stratum(f"Zbar4^{i}/Z2", s, r, a) for i, (s, r, a) in enumerate(zip(Z4_SIGNS, reps, anchors))),
        Z2Rep(Q**3, -ONE),
        "R(Zbar4/Z2) = q^3 T - N",
    )


def all_tables() -> tuple[StrataTable, ...]:
    return (
        build_z0_strata(),
        build_z1_strata(),
        build_z2_strata(),
        build_z3_strata(),
        build_z4_strata(),
        build_z4bar_strata(),
        build_z4bar_quot_strata(),
    )


@dataclass(frozen=True)
class Genus1Blocks:
    e0: Poly
    e1: Poly
    e2: Poly
    e3: Poly
    hm_z4bar: Z2Rep
    hm_z4bar_quot: Z2Rep


@lru_cache(maxsize=None)
def blocks() -> Genus1Blocks:
    """The genus-one blocks, each read off the signed total of its table."""
    return Genus1Blocks(
        e0=build_z0_strata().total(),
        e1=build_z1_strata().total(),
        e2=build_z2_strata().total(),
        e3=build_z3_strata().total(),
        hm_z4bar=build_z4bar_strata().total(),
        hm_z4bar_quot=build_z4bar_quot_strata().total(),
    )


def verify_genus1() -> Report:
    report = Report()
    tables = all_tables()
    for table in tables:
        got = table.total()
        ok = got == table.stated_total
        report.add(
            f"genus1: {table.space_label} strata total",
            table.anchor,
            ok,
            "" if ok else f"signed sum {got}; stated {table.stated_total}",
        )

    z0, z1, z2, z3, z4, z4bar, z4quot = tables
    b = blocks()

    # unbarred spaces: conjugation orbit of the fixed representative
    e_z2 = (Q**2 - 1) * b.e2
    e_z3 = (Q**2 - 1) * b.e3
    report.expect_equal("genus1: e(Z2) = e(GL/U) e(Zbar2)", "e(Z2) = (q^3-q)(q^2-2q)", e_z2, PGL * (Q**2 - 2 * Q))
    z3_primed = (Q - 1) * PGL
    z3_doubleprimed = Q * (Q**2 - 1) * (Q**2 - Q + 1)
    report.expect_equal(
        "genus1: e(Z3) = e(Z3') + e(Z3'')", "e(Z3) = e(Z3') + e(Z3'') = (q^3-q)q^2", z3_primed + z3_doubleprimed, e_z3
    )
    slice_sum = sum((s.value for s in z3.entries[1:]), ZERO)
    report.guarded(
        "genus1: Z3 slice e(S)",
        "e(S) = e(S^a) + e(S^b) + e(S^c) = q^2 - q + 1",
        lambda: exact_div(slice_sum, Q) == Q**2 - Q + 1,
    )
    z0_a = sum((z0.entry(lbl).value for lbl in ("Z0''a", "Z0'''a", "Z0''''a")), ZERO)
    report.expect_equal("genus1: e(Z0'a)", "e(Z0'a) = q^4 - 2q^3 + 2q", z0_a, Q**4 - 2 * Q**3 + 2 * Q)
    # Z0''a from the Z2-quotient fibration rule e = e(F)^+ e(B)^+ + e(F)^- e(B)^-
    y_plus = Q**2 * (Q - 2) + Q * (-1)
    y_minus = (Q - 3) * (Q**2 + Q) - y_plus  # e(C-{0,1,-1}) e(GL/D) minus the invariant part
    report.expect_equal(
        "genus1: Z0''a from the Z2-quotient rule",
        "e(Z0''a) = e(Y)^+ (q-1) + e(Y)^- (-1)",
        y_plus * (Q - 1) + y_minus * (-1),
        z0.entry("Z0''a").value,
    )

    full = b.e0 + b.e1 + e_z2 + e_z3 + z4.total()
    report.expect_equal(
        "genus1: e(Z0)+...+e(Z4) = e(PGL(2,C)^2)",
        "e(Z0)+e(Z1)+e(Z2)+e(Z3)+e(Z4) = e(PGL(2,C)^2) = (q^3-q)^2",
        full,
        PGL**2,
    )

    quot = b.hm_z4bar_quot
    report.add(
        "genus1: R(Zbar4) = (c+d)T from R(Zbar4/Z2) = cT + dN",
        "R(Zbar4) = (c+d)T = (q^3-1)T",
        b.hm_z4bar == Z2Rep(quot.t + quot.n, ZERO),
        "" if b.hm_z4bar == Z2Rep(quot.t + quot.n, ZERO) else f"R(Zbar4) = {b.hm_z4bar}; R(Zbar4/Z2) = {quot}",
    )
    per_stratum = all(
        a.value.dimension == bq.value.dimension and bq.value.dimension == a.value.t
        for a, bq in zip(z4bar.entries, z4quot.entries)
    )
    report.add(
        "genus1: per-stratum fibre of Zbar4/Z2 matches Zbar4",
        "R(Zbar4^i/Z2) = aT + bN with a + b = e(F^i)",
        per_stratum,
    )
    report.expect_equal(
        "genus1: e(Zbar4,lambda)",
        "e(Zbar4,lambda) = (q-1)(q^2+q+1) = q^3 - 1",
        b.hm_z4bar.dimension,
        (Q - 1) * (Q**2 + Q + 1),
    )
    e_z4bar = e_over_three_punctures(b.hm_z4bar)
    report.expect_equal("genus1: e(Zbar4)", "e(Zbar4) = q^4 - 3q^3 - q + 3", e_z4bar, Q**4 - 3 * Q**3 - Q + 3)
    e_quot = e_over_two_punctures(quot)
    report.expect_equal("genus1: e(Zbar4/Z2)", "e(Zbar4/Z2) = (q-2)a - b = q^4 - 2q^3 + 1", e_quot, Q**4 - 2 * Q**3 + 1)
    report.expect_equal(
        "genus1: e(Z4) from the quotient fibration",
        "e(Z4) = e(PGL/D)^+ e(Zbar4/Z2) + e(PGL/D)^- e(Zbar4)^-",
        (Q**2 - Q) * e_quot + Q * e_z4bar,
        z4.total(),
    )
    return report
