"""Planar harmonic polynomials and the lifted gradient fields they generate.

Re((x+Iy)^i) and Im((x+Iy)^i) span the degree-i homogeneous harmonic
polynomials in the plane; lifting p(x,y) to grad(p*z) produces the explicit
kernel family of the resonant degree-i obstruction system at spectrum
(1, 1, -i).  The cos/sin factors of the binomial expansions are evaluated
exactly by case analysis mod 4, never through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polynomials import (
    HomogeneousPolynomial,
    PolynomialVectorField,
    grad,
)

_COS_QUARTER = (1, 0, -1, 0)  # cos(n*pi/2) for n mod 4
_SIN_QUARTER = (0, 1, 0, -1)  # sin(n*pi/2) for n mod 4


@dataclass(frozen=True)
class PlanarHarmonicPair:
    """Re and Im parts of (x+Iy)^i, as polynomials in x and y only."""

    degree: int
    re_part: HomogeneousPolynomial
    im_part: HomogeneousPolynomial

    def part(self, which: int) -> HomogeneousPolynomial:
        if which == 1:
            return self.re_part
        if which == 2:
            return self.im_part
        raise ValueError("which must be 1 (Re) or 2 (Im)")


def planar_harmonics(i: int) -> PlanarHarmonicPair:
    """Binomial expansion of (x+Iy)^i with exact integer cos/sin values."""
    if i < 1:
        raise ValueError("degree must be at least 1")
    re_coeffs = {}
    im_coeffs = {}
    for k in range(i + 1):
        n = (i - k) % 4
        binom = comb(i, k)
        if _COS_QUARTER[n]:
            re_coeffs[(k, i - k, 0)] = binom * _COS_QUARTER[n]
        if _SIN_QUARTER[n]:
            im_coeffs[(k, i - k, 0)] = binom * _SIN_QUARTER[n]
    return PlanarHarmonicPair(
        degree=i,
        re_part=HomogeneousPolynomial(i, re_coeffs),
        im_part=HomogeneousPolynomial(i, im_coeffs),
    )


def lifted_field(i: int, which: int) -> PolynomialVectorField:
    """grad(p(x,y) * z) for the chosen planar harmonic p of degree i.

    The third component equals p itself; the field is curl- and
    divergence-free by construction.
    """
    p = planar_harmonics(i).part(which)
    z = HomogeneousPolynomial.monomial((0, 0, 1))
    return grad(p * z)
