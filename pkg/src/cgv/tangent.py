"""Tangent-form machinery on the affine chart T = 1.

Chart coordinates are carried by the X, Y, Z variables themselves, so a
symbolic tangent row is a triple of polynomials in (X, Y, Z, m) over Q(r).
The printed tangent displays are replayed componentwise, the printed
lambda-elimination is reproduced down to its obstruction element, and a
deterministic integer-point survey measures the exact rank of the three
stacked rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .nf import NFElem, nf_invert
from .mpoly import MPoly
from .parsing import parse_poly
from .linalg import nf_rank
from .geometry import eval_at_point

CHART_VARS = ("X", "Y", "Z")


@dataclass(frozen=True)
class ChartPoint:
    """A point of the chart T = 1; coordinates are exact scalars, or None to
    stay symbolic in that coordinate."""

    x: NFElem | None = None
    y: NFElem | None = None
    z: NFElem | None = None

    @classmethod
    def symbolic(cls):
        return cls()

    @classmethod
    def of(cls, x, y, z):
        return cls(NFElem.coerce(x), NFElem.coerce(y), NFElem.coerce(z))

    def substitution(self):
        out = {}
        for v, c in zip(CHART_VARS, (self.x, self.y, self.z)):
            if c is not None:
                out[v] = MPoly.constant(c)
        return out


def tangent_form(family, i: int, point: ChartPoint | None = None, m_value=None):
    """Gradient row of C_i at the chart point; symbolic entries are
    polynomials in the remaining chart coordinates (and m)."""
    row = chart_gradient(family, i, m_value)
    if point is None:
        return row
    sub = point.substitution()
    return tuple(g.substitute(sub) for g in row)


def chart_gradient(family, i: int, m_value=None):
    """Gradient row of C_i on the chart T = 1, symbolic in the coordinates."""
    c = family.cubics[i]
    row = []
    for v in CHART_VARS:
        g = c.partial(v).substitute({"T": MPoly.constant(1)})
        if m_value is not None:
            g = g.specialize_m(m_value)
        row.append(g)
    return tuple(row)


def gradient_at(family, i: int, point, m_value=None):
    """Exact gradient row at a chart point (x, y, z)."""
    row = chart_gradient(family, i, m_value)
    sub = {v: MPoly.coerce(c) for v, c in zip(CHART_VARS, point)}
    return tuple(g.substitute(sub) for g in row)


def projective_gradient(family, i: int, pt):
    """The 4-component gradient of C_i at a point of P^3 (m stays symbolic)."""
    out = []
    for v in ("X", "Y", "Z", "T"):
        out.append(eval_at_point(family.cubics[i].partial(v), pt))
    return tuple(out)


# The printed tangent displays, written in chart coordinates.
CLAIMED_TANGENT_ROWS = {
    0: ("(3*r-2)+(r+1)*(3*r-2)*Y+(-6*r^2+2*r+2)*Z",
        "(3*r-2)*m+(3*r-2)*(r+1)*X+(-2*r^2-5*r+5)*Z",
        "(3*r-2)*r^2+(-6*r^2+2*r+2)*X+(-2*r^2-5*r+5)*Y"),
    1: ("(3*r-2)*(Y+m*Z+r^2)*(1+X)+(r+1)*(3*r-2)*Y*Z+(-6*r^2+2*r+2)*Y+(-2*r^2-5*r+5)*Z",
        "(3*r-2)*X^2+(3*r-2)*(r+1)*X*Z+(-6*r^2+2*r+2)*X",
        "(3*r-2)*m*X^2+(r+1)*(3*r-2)*X*Y+(-2*r^2-5*r+5)*X"),
    2: ("(3*r-2)*r^2*Y^2+(-6*r^2+2*r+2)*Y*Z+(-2*r^2-5*r+5)*Y",
        "(3*r-2)*(Z+m+r^2*X)*(1+Y)+(3*r-2)*(r+1)*Z+(-6*r^2+2*r+2)*Z*X+(-2*r^2-5*r+5)*X",
        "(3*r-2)*Y^2+(3*r-2)*(r+1)*Y+(-6*r^2+2*r+2)*X*Y"),
}


def display_agreement(family, i: int):
    """Componentwise comparison of the computed gradient with the printed row."""
    computed = chart_gradient(family, i)
    claimed = tuple(parse_poly(t) for t in CLAIMED_TANGENT_ROWS[i])
    flags = tuple(c == p for c, p in zip(computed, claimed))
    diffs = tuple(c - p for c, p in zip(computed, claimed))
    return flags, computed, claimed, diffs


@dataclass(frozen=True)
class LambdaReplay:
    a: NFElem
    b: NFElem
    obstruction: NFElem
    obstruction_inverse: NFElem
    steps: tuple


def lambda_replay(family) -> LambdaReplay:
    """Replay the printed elimination: no polynomial lambda = a*x + b*z + c
    can carry the Y-partial of C_0 onto the Y-partial of C_1.

    Matching the x^2, z^2 and xz coefficients gives a = 1/(r+1), b = 0 and
    then demands (r+1)^2 (3r-2) = -2r^2-5r+5, which fails by the unit
    3r^2+4r-4; its inverse is the certificate.
    """
    row0 = chart_gradient(family, 0)
    row1 = chart_gradient(family, 1)
    e0, e1 = row0[1], row1[1]
    # e0 is linear in (x, z); e1 is quadratic
    cx = e0.coefficient((1, 0, 0, 0, 0))          # (3r-2)(r+1)
    cz = e0.coefficient((0, 0, 1, 0, 0))          # -2r^2-5r+5
    d_xx = e1.coefficient((2, 0, 0, 0, 0))        # 3r-2
    d_zz = e1.coefficient((0, 0, 2, 0, 0))        # 0
    d_xz = e1.coefficient((1, 0, 1, 0, 0))        # (3r-2)(r+1)
    a = d_xx / cx
    if not d_zz.is_zero() or cz.is_zero():
        raise ArithmeticError("z^2 matching does not force b = 0")
    b = NFElem(0)
    residual = b * cx + a * cz - d_xz
    # clear the unit denominator (r+1): obstruction = (r+1)^2(3r-2) - (-2r^2-5r+5)
    obstruction = -(residual * cx / d_xx)
    inv = nf_invert(obstruction)
    steps = (
        f"x^2 coefficients force a * ({cx}) = {d_xx}, so a = {a}",
        f"z^2 coefficients force b * ({cz}) = 0, so b = 0",
        f"x*z coefficients then demand a * ({cz}) = {d_xz}, off by the unit {obstruction}",
        f"certificate: ({obstruction}) * ({inv}) = 1",
    )
    return LambdaReplay(a=a, b=b, obstruction=obstruction, obstruction_inverse=inv, steps=steps)


@dataclass(frozen=True)
class PairwiseResult:
    i: int
    j: int
    minors: tuple
    generically_independent: bool


def pairwise_independence(family, i: int, j: int) -> PairwiseResult:
    """All 2x2 minors of the stacked symbolic rows; independent generically
    iff some minor is a nonzero polynomial in (x, y, z, m)."""
    ri = chart_gradient(family, i)
    rj = chart_gradient(family, j)
    minors = []
    for c1 in range(3):
        for c2 in range(c1 + 1, 3):
            minors.append(ri[c1] * rj[c2] - ri[c2] * rj[c1])
    return PairwiseResult(
        i=i, j=j, minors=tuple(minors),
        generically_independent=any(not m.is_zero() for m in minors),
    )


# -- deterministic sampling ---------------------------------------------------

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MASK = (1 << 64) - 1


class SampleStream:
    """64-bit LCG; each draw advances the state, then maps to [-20, 20] \\ {0}."""

    def __init__(self, seed: int):
        self.state = seed & LCG_MASK

    def next_coordinate(self) -> int:
        while True:
            self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & LCG_MASK
            v = (self.state % 41) - 20
            if v != 0:
                return v

    def next_point(self):
        return (self.next_coordinate(), self.next_coordinate(), self.next_coordinate())


@dataclass(frozen=True)
class SurveyResult:
    n: int
    seed: int
    histogram: tuple   # ((rank, count), ...) sorted by rank
    skipped: int


def rank_survey(family, n: int, seed: int, m_value) -> SurveyResult:
    """Exact rank of the stacked C_0, C_1, C_2 tangent rows at n sampled points.

    Points on a degeneracy locus (a zero gradient row) are skipped.  Sampled
    coordinates are never 0, so no sample is a reference point.
    """
    if n < 1:
        raise ValueError("survey size must be >= 1")
    rows_sym = [chart_gradient(family, i, m_value) for i in range(3)]
    stream = SampleStream(seed)
    hist = {}
    skipped = 0
    for _ in range(n):
        x, y, z = stream.next_point()
        sub = {"X": MPoly.constant(x), "Y": MPoly.constant(y), "Z": MPoly.constant(z)}
        rows = []
        for row in rows_sym:
            rows.append([g.substitute(sub).as_nfelem() for g in row])
        if any(all(c.is_zero() for c in row) for row in rows):
            skipped += 1
            continue
        rank, _ = nf_rank(rows)
        hist[rank] = hist.get(rank, 0) + 1
    return SurveyResult(
        n=n, seed=seed,
        histogram=tuple(sorted(hist.items())),
        skipped=skipped,
    )


def reference_point_rows(family):
    """Projective gradient rows of C_1, C_2, C_3 at [0:0:0:1]."""
    pt = (NFElem(0), NFElem(0), NFElem(0), NFElem(1))
    return tuple(projective_gradient(family, i, pt) for i in (1, 2, 3))
