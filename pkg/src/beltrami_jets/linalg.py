"""Exact rational linear algebra on sparse labeled constraint matrices.

Everything here is computed over the rationals with no rounding: the
elimination core works fraction-free on integer rows (each row cleared of
denominators and kept primitive via gcd reduction), and results are exposed
as `fractions.Fraction` values.  Pivoting is deterministic: rows are
processed in order and each row pivots on its smallest remaining column
label, so ranks and kernel bases are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Sequence


def coerce_rational(value) -> Fraction:
    """Coerce int/str/Fraction to Fraction, rejecting floats (no rounding)."""
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float coefficient {value!r}")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Canonical string form: "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


@dataclass(frozen=True)
class ConstraintMatrix:
    """Sparse exact matrix with labeled rows and columns.

    Only nonzero entries are stored, keyed by (row, col) position.  Row
    labels identify (equation tag, monomial); column labels identify the
    unknown coefficient each column stands for.
    """

    rows: int
    cols: int
    entries: dict[tuple[int, int], Fraction]
    col_labels: tuple[Hashable, ...]
    row_labels: tuple[Hashable, ...]

    def __post_init__(self):
        if len(self.col_labels) != self.cols or len(self.row_labels) != self.rows:
            raise ValueError("label lists must match matrix dimensions")
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry position {(r, c)} out of range")
            if v == 0:
                raise ValueError(f"zero entry stored at {(r, c)}")

    @classmethod
    def from_rows(
        cls,
        col_labels: Sequence[Hashable],
        labeled_rows: Iterable[tuple[Hashable, dict[int, Fraction]]],
    ) -> "ConstraintMatrix":
        """Build from (row_label, {col_position: value}) pairs."""
        row_labels = []
        entries: dict[tuple[int, int], Fraction] = {}
        for r, (label, row) in enumerate(labeled_rows):
            row_labels.append(label)
            for c, v in row.items():
                v = coerce_rational(v)
                if v != 0:
                    entries[(r, c)] = v
        return cls(
            rows=len(row_labels),
            cols=len(col_labels),
            entries=entries,
            col_labels=tuple(col_labels),
            row_labels=tuple(row_labels),
        )

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def labeled_rows(self) -> list[tuple[Hashable, dict[Hashable, Fraction]]]:
        """Rows with entries re-keyed by column label (for golden comparisons)."""
        rows = self.row_dicts()
        return [
            (label, {self.col_labels[c]: v for c, v in row.items()})
            for label, row in zip(self.row_labels, rows)
        ]

    def multiply(self, vector: Sequence[Fraction]) -> list[Fraction]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [Fraction(0)] * self.rows
        for (r, c), v in self.entries.items():
            out[r] += v * vector[c]
        return out


@dataclass(frozen=True)
class KernelBasis:
    """Basis of the exact nullspace, column labels carried from the source.

    Each vector is normalized so its first nonzero entry (in column-label
    order) equals 1; vectors are indexed by the free column they activate,
    so they are linearly independent by construction.
    """

    vectors: tuple[tuple[Fraction, ...], ...]
    col_labels: tuple[Hashable, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def _primitive(row: dict[int, int]) -> None:
    """Divide an integer row by the gcd of its entries, in place."""
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def _integer_rows(m: ConstraintMatrix) -> list[dict[int, int]]:
    rows: list[dict[int, int]] = []
    for row in m.row_dicts():
        if not row:
            continue
        lcm = 1
        for v in row.values():
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
        irow = {c: int(v * lcm) for c, v in row.items()}
        _primitive(irow)
        rows.append(irow)
    return rows


def _echelon(rows: Iterable[dict[int, int]]) -> dict[int, dict[int, int]]:
    """Fraction-free forward elimination; returns {pivot_col: row}.

    Rows are consumed in order; each surviving row pivots on its smallest
    column, and every stored row's minimum key is its pivot column.
    """
    pivots: dict[int, dict[int, int]] = {}
    for incoming in rows:
        row = dict(incoming)
        while row:
            lead = min(row)
            pivot_row = pivots.get(lead)
            if pivot_row is None:
                _primitive(row)
                pivots[lead] = row
                break
            a = row[lead]
            b = pivot_row[lead]
            reduced = {c: b * v for c, v in row.items()}
            for c, pv in pivot_row.items():
                v = reduced.get(c, 0) - a * pv
                if v:
                    reduced[c] = v
                else:
                    reduced.pop(c, None)
            _primitive(reduced)
            row = reduced
    return pivots


def rank(m: ConstraintMatrix) -> int:
    """Exact rank over the rationals."""
    return len(_echelon(_integer_rows(m)))


def rank_of_vectors(vectors: Iterable[Sequence[Fraction]]) -> int:
    """Rank of a list of dense rational vectors (stacked as rows)."""
    rows = []
    for vec in vectors:
        lcm = 1
        for v in vec:
            d = Fraction(v).denominator
            lcm = lcm // gcd(lcm, d) * d
        row = {c: int(v * lcm) for c, v in enumerate(vec) if v != 0}
        if row:
            rows.append(row)
    return len(_echelon(rows))


def kernel_basis(m: ConstraintMatrix) -> KernelBasis:
    """Basis of {v : M v = 0}, dimension cols - rank, possibly empty.

    Every returned vector is re-multiplied against the matrix as a guard;
    a nonzero residual would be an internal error.
    """
    pivots = _echelon(_integer_rows(m))
    free_cols = [c for c in range(m.cols) if c not in pivots]
    vectors: list[tuple[Fraction, ...]] = []
    pivot_cols_desc = sorted(pivots, reverse=True)
    for f in free_cols:
        values: dict[int, Fraction] = {f: Fraction(1)}
        for p in pivot_cols_desc:
            if p > f:
                continue
            row = pivots[p]
            acc = Fraction(0)
            for c, v in row.items():
                if c != p:
                    acc += v * values.get(c, Fraction(0))
            if acc:
                values[p] = -acc / row[p]
        vec = [values.get(c, Fraction(0)) for c in range(m.cols)]
        first = next(v for v in vec if v != 0)
        if first != 1:
            vec = [v / first for v in vec]
        vectors.append(tuple(vec))
    for vec in vectors:
        if any(r != 0 for r in m.multiply(vec)):
            raise AssertionError("kernel vector fails re-multiplication check")
    return KernelBasis(vectors=tuple(vectors), col_labels=m.col_labels)


def is_consistent(m: ConstraintMatrix, rhs: Sequence[Fraction]) -> bool:
    """Whether M x = rhs has a solution, by rank of [M | rhs] vs rank of M."""
    if len(rhs) != m.rows:
        raise ValueError("rhs length does not match row count")
    b_col = m.cols  # one past the last column, so it is never a preferred pivot
    rows = []
    for r, row in enumerate(m.row_dicts()):
        full = dict(row)
        if rhs[r] != 0:
            full[b_col] = Fraction(rhs[r])
        if not full:
            continue
        lcm = 1
        for v in full.values():
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
        irow = {c: int(v * lcm) for c, v in full.items()}
        _primitive(irow)
        rows.append(irow)
    return b_col not in _echelon(rows)


def rank_dense(m: ConstraintMatrix) -> int:
    """Independent oracle: dense Gaussian elimination over Fraction."""
    grid = [[Fraction(0)] * m.cols for _ in range(m.rows)]
    for (r, c), v in m.entries.items():
        grid[r][c] = v
    return _dense_rref(grid)[0]


def kernel_dimension_dense(m: ConstraintMatrix) -> int:
    return m.cols - rank_dense(m)


def kernel_basis_dense(m: ConstraintMatrix) -> list[tuple[Fraction, ...]]:
    """Independent oracle kernel: dense RREF back-substitution over Fraction."""
    grid = [[Fraction(0)] * m.cols for _ in range(m.rows)]
    for (r, c), v in m.entries.items():
        grid[r][c] = v
    nrank, pivot_cols = _dense_rref(grid)
    free_cols = [c for c in range(m.cols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        vec = [Fraction(0)] * m.cols
        vec[f] = Fraction(1)
        for i in range(nrank - 1, -1, -1):
            p = pivot_cols[i]
            acc = Fraction(0)
            for c in range(p + 1, m.cols):
                if grid[i][c]:
                    acc += grid[i][c] * vec[c]
            vec[p] = -acc / grid[i][p]
        first = next(v for v in vec if v != 0)
        if first != 1:
            vec = [v / first for v in vec]
        basis.append(tuple(vec))
    return basis


def _dense_rref(grid: list[list[Fraction]]) -> tuple[int, list[int]]:
    nrows = len(grid)
    ncols = len(grid[0]) if grid else 0
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if grid[i][c] != 0), None)
        if pivot is None:
            continue
        grid[r], grid[pivot] = grid[pivot], grid[r]
        pv = grid[r][c]
        grid[r] = [v / pv for v in grid[r]]
        for i in range(nrows):
            if i != r and grid[i][c] != 0:
                factor = grid[i][c]
                grid[i] = [v - factor * w for v, w in zip(grid[i], grid[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivot_cols
