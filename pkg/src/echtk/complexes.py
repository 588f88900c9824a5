"""The Z/2 chain complex of admissible currents below a degree cutoff.

The differential sends h*gamma to p^p*gamma + q^q*gamma for every gamma
without the hyperbolic orbit and vanishes elsewhere; it preserves degree
and drops the index by exactly one.  Homology is computed by the standard
left-to-right column reduction over GF(2) with columns kept as int
bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .currents import KnotParams, ReebCurrent, degree, knot_filtration
from .exact import InfRat, coerce
from .indices import ech_index
from .nseq import nk, repeat_count


@dataclass(frozen=True)
class ComplexSpec:
    kp: KnotParams
    max_degree: int

    def __post_init__(self) -> None:
        if self.max_degree < 0:
            raise ValueError("degree cutoff must be nonnegative")


def enumerate_currents(spec: ComplexSpec) -> list[ReebCurrent]:
    """All admissible currents of degree at most the cutoff, sorted by
    (ech_index, canonical name)."""
    kp, max_d = spec.kp, spec.max_degree
    p, q, pq = kp.p, kp.q, kp.pq
    out: list[ReebCurrent] = []
    for bh in range(max_d // pq + 1):
        for h in (0, 1):
            b = bh - h
            if b < 0:
                continue
            rem_bh = max_d - pq * bh
            for P in range(rem_bh // q + 1):
                rem = rem_bh - q * P
                for Q in range(rem // p + 1):
                    out.append(ReebCurrent(B=b, H=h, P=P, Q=Q))
    out.sort(key=lambda c: (ech_index(c, kp), c.name()))
    return out


class WindowError(ValueError):
    """Raised when a requested index range is not certified by the cutoff."""

    def __init__(self, max_index: int, required_degree: int):
        self.required_degree = required_degree
        super().__init__(
            f"index window up to {max_index} needs max_degree >= {required_degree}"
        )


def required_degree(kp: KnotParams, max_index: int) -> int:
    """Degree cutoff needed so every generator of index <= max_index + 1
    is enumerated: generators at indices 2k and 2k+1 live in degree N_k."""
    return nk(kp.p, kp.q, (max_index + 1) // 2)


@dataclass
class BoundaryMatrix:
    """Sparse GF(2) boundary matrix with generator gradings attached."""

    spec: ComplexSpec
    generators: list[ReebCurrent]
    grading: list[int]
    columns: list[int]  # int bitsets over row positions
    position: dict[ReebCurrent, int] = field(repr=False, default_factory=dict)
    boundary_incomplete: set[int] = field(default_factory=set)

    def d_squared_is_zero(self) -> bool:
        for col in self.columns:
            acc = 0
            rows = col
            while rows:
                low = rows & -rows
                acc ^= self.columns[low.bit_length() - 1]
                rows ^= low
            if acc:
                return False
        return True


def differential(spec: ComplexSpec) -> BoundaryMatrix:
    gens = enumerate_currents(spec)
    position = {c: i for i, c in enumerate(gens)}
    grading = [ech_index(c, spec.kp) for c in gens]
    columns = [0] * len(gens)
    incomplete: set[int] = set()
    p, q = spec.kp.p, spec.kp.q
    for j, c in enumerate(gens):
        if c.H != 1:
            continue
        targets = (
            ReebCurrent(B=c.B, H=0, P=c.P + p, Q=c.Q),
            ReebCurrent(B=c.B, H=0, P=c.P, Q=c.Q + q),
        )
        col = 0
        for t in targets:
            pos = position.get(t)
            if pos is None:
                # cannot happen for this differential (degree is preserved)
                incomplete.add(j)
            else:
                col |= 1 << pos
        columns[j] = col
    return BoundaryMatrix(
        spec=spec,
        generators=gens,
        grading=grading,
        columns=columns,
        position=position,
        boundary_incomplete=incomplete,
    )


def _reduce_ranks(grading: list[int], columns: list[int]) -> dict[int, int]:
    """Persistence-style column reduction; returns rank of homology per
    grading.  Columns must be ordered compatibly with the grading (the
    enumeration order is)."""
    columns = list(columns)
    pivot_of: dict[int, int] = {}
    n_cols_by_grade: dict[int, int] = {}
    pivots_by_grade: dict[int, int] = {}
    kills_by_grade: dict[int, int] = {}
    for j, col in enumerate(columns):
        g = grading[j]
        n_cols_by_grade[g] = n_cols_by_grade.get(g, 0) + 1
        while col:
            low = col.bit_length() - 1
            other = pivot_of.get(low)
            if other is None:
                break
            col ^= columns[other]
        columns[j] = col
        if col:
            low = col.bit_length() - 1
            pivot_of[low] = j
            pivots_by_grade[g] = pivots_by_grade.get(g, 0) + 1
            kills_by_grade[grading[low]] = kills_by_grade.get(grading[low], 0) + 1
    ranks: dict[int, int] = {}
    for g, n in n_cols_by_grade.items():
        cycles = n - pivots_by_grade.get(g, 0)
        ranks[g] = cycles - kills_by_grade.get(g, 0)
    return ranks


def homology(spec: ComplexSpec, max_index: int) -> dict[int, int]:
    """Homology rank in each index 0..max_index.

    Refuses when the degree cutoff does not certify the window, reporting
    the cutoff that would.
    """
    if max_index < 0:
        raise ValueError("max index must be nonnegative")
    need = required_degree(spec.kp, max_index)
    if spec.max_degree < need:
        raise WindowError(max_index, need)
    matrix = differential(spec)
    if matrix.boundary_incomplete:
        raise WindowError(max_index, need)
    ranks = _reduce_ranks(matrix.grading, matrix.columns)
    return {g: ranks.get(g, 0) for g in range(max_index + 1)}


def knot_filtered_homology(
    spec: ComplexSpec, filtration: InfRat | int, max_index: int
) -> dict[int, int]:
    """Homology of the subcomplex of currents with knot filtration <= K."""
    if max_index < 0:
        raise ValueError("max index must be nonnegative")
    need = required_degree(spec.kp, max_index)
    if spec.max_degree < need:
        raise WindowError(max_index, need)
    cutoff = coerce(filtration)
    matrix = differential(spec)
    keep = [
        knot_filtration(c, spec.kp) <= cutoff for c in matrix.generators
    ]
    old_to_new = {}
    grading: list[int] = []
    for j, flag in enumerate(keep):
        if flag:
            old_to_new[j] = len(grading)
            grading.append(matrix.grading[j])
    columns: list[int] = []
    for j, flag in enumerate(keep):
        if not flag:
            continue
        col = matrix.columns[j]
        new_col = 0
        rows = col
        while rows:
            low = rows & -rows
            row = low.bit_length() - 1
            if not keep[row]:
                # the differential never raises the filtration, so a kept
                # source cannot hit a dropped target
                raise AssertionError("filtration is not respected by the differential")
            new_col |= 1 << old_to_new[row]
            rows ^= low
        columns.append(new_col)
    ranks = _reduce_ranks(grading, columns)
    return {g: ranks.get(g, 0) for g in range(max_index + 1)}


def linking_threshold(kp: KnotParams, k: int) -> InfRat:
    """Filtration level at which the index-2k class first appears."""
    return InfRat(nk(kp.p, kp.q, k), repeat_count(kp.p, kp.q, k) - 1)


def homology_representative(spec: ComplexSpec, index: int) -> ReebCurrent:
    """Canonical cycle b^B p^P q^Q with P < p generating homology at an
    even index; its degree is N_k for index 2k."""
    if index < 0 or index % 2:
        raise ValueError("homology is supported in nonnegative even indices")
    k = index // 2
    p, q = spec.kp.p, spec.kp.q
    value = nk(p, q, k)
    if value > spec.max_degree:
        raise WindowError(index, value)
    repeats = repeat_count(p, q, k)
    # lattice point on px + qy = value closest to the x-axis
    y0 = next(y for y in range(p) if (value - q * y) % p == 0 and value - q * y >= 0)
    x0 = (value - q * y0) // p
    b = repeats - 1
    rep = ReebCurrent(B=b, H=0, P=y0, Q=x0 - b * q)
    assert degree(rep, spec.kp) == value
    assert ech_index(rep, spec.kp) == index
    return rep
