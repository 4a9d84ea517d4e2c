"""Row builders for the degree-graded coefficient-matching systems.

Rows are produced directly from exponent arithmetic (derivative shifts and
convolution with known factor polynomials), independently of the operator
implementations in `polynomials`; kernel vectors are later re-verified with
those operators, so the two derivations cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .polynomials import (
    AXES,
    CoefficientIndex,
    HomogeneousPolynomial,
    Monomial,
    PolynomialVectorField,
    coefficient_indices,
    monomials_of_degree,
)

RowLabel = tuple[str, Monomial]
Row = tuple[RowLabel, dict[int, Fraction]]

# coupling: (known polynomial or field, degree of the unknown block it multiplies,
#            scalar applied to every produced entry)
PolyCoupling = tuple[HomogeneousPolynomial, int, Fraction]
FieldCoupling = tuple[PolynomialVectorField, int, Fraction]


@dataclass(frozen=True)
class ColumnSpace:
    """Ordered coefficient labels for the unknown blocks X_d, d in `degrees`."""

    labels: tuple[CoefficientIndex, ...]

    @classmethod
    def for_degrees(cls, degrees: Iterable[int]) -> "ColumnSpace":
        labels: list[CoefficientIndex] = []
        for d in sorted(set(degrees)):
            labels.extend(coefficient_indices(d))
        return cls(labels=tuple(labels))

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {label: i for i, label in enumerate(self.labels)}
        )

    def position(self, label: CoefficientIndex) -> int:
        return self._index[label]

    def __len__(self) -> int:
        return len(self.labels)


def _sub(m: Monomial, n: Monomial) -> Monomial | None:
    out = (m[0] - n[0], m[1] - n[1], m[2] - n[2])
    return out if min(out) >= 0 else None


def _add_entry(row: dict[int, Fraction], cs: ColumnSpace, label: CoefficientIndex, value) -> None:
    pos = cs.position(label)
    new = row.get(pos, Fraction(0)) + value
    if new == 0:
        row.pop(pos, None)
    else:
        row[pos] = new


def _coupling_entries(
    row: dict[int, Fraction],
    cs: ColumnSpace,
    mu: Monomial,
    poly: HomogeneousPolynomial,
    axis: str,
    src_degree: int,
    scale: Fraction,
) -> None:
    """Entries of coefficient(mu) in poly * X_src^axis, scaled."""
    for nu, c in poly.coeffs.items():
        target = _sub(mu, nu)
        if target is not None:
            _add_entry(row, cs, CoefficientIndex(axis, target, src_degree), scale * c)


def curl_rows(
    m_degree: int, couplings: Sequence[PolyCoupling], cs: ColumnSpace
) -> list[Row]:
    """Rows of curl(X_m) - sum(scale * f * X_src) = 0, matched at degree m-1.

    Emitted in component order (curl_x, curl_y, curl_z), monomials in
    descending lex within each component.
    """
    if m_degree < 1:
        return []
    monos = monomials_of_degree(m_degree - 1)
    # curl components as (positive axis, shift axis index, negative axis, shift axis index)
    parts = (
        ("curl_x", "z", 1, "y", 2),
        ("curl_y", "x", 2, "z", 0),
        ("curl_z", "y", 0, "x", 1),
    )
    rows: list[Row] = []
    for tag, plus_axis, plus_idx, minus_axis, minus_idx in parts:
        comp = tag[-1]
        for mu in monos:
            row: dict[int, Fraction] = {}
            up = list(mu)
            up[plus_idx] += 1
            _add_entry(
                row, cs,
                CoefficientIndex(plus_axis, tuple(up), m_degree),
                Fraction(mu[plus_idx] + 1),
            )
            up = list(mu)
            up[minus_idx] += 1
            _add_entry(
                row, cs,
                CoefficientIndex(minus_axis, tuple(up), m_degree),
                Fraction(-(mu[minus_idx] + 1)),
            )
            for poly, src, scale in couplings:
                _coupling_entries(row, cs, mu, poly, comp, src, -scale)
            if row:
                rows.append(((f"{tag}@{m_degree}", mu), row))
    return rows


def div_rows(m_degree: int, cs: ColumnSpace) -> list[Row]:
    """Rows of div(X_m) = 0, matched at degree m-1."""
    if m_degree < 1:
        return []
    rows: list[Row] = []
    for mu in monomials_of_degree(m_degree - 1):
        row: dict[int, Fraction] = {}
        for idx, axis in enumerate(AXES):
            up = list(mu)
            up[idx] += 1
            _add_entry(
                row, cs,
                CoefficientIndex(axis, tuple(up), m_degree),
                Fraction(mu[idx] + 1),
            )
        if row:
            rows.append(((f"div@{m_degree}", mu), row))
    return rows


def first_integral_rows(
    t_degree: int, couplings: Sequence[FieldCoupling], cs: ColumnSpace
) -> list[Row]:
    """Rows of sum(scale * <G, X_src>) = 0 matched at degree t.

    G is the halved gradient field of a factor component, so the stored
    rows carry sigma-coefficients rather than 2*sigma.
    """
    rows: list[Row] = []
    for mu in monomials_of_degree(t_degree):
        row: dict[int, Fraction] = {}
        for field, src, scale in couplings:
            for axis in AXES:
                _coupling_entries(row, cs, mu, field.component(axis), axis, src, scale)
        if row:
            rows.append(((f"fi@{t_degree}", mu), row))
    return rows
