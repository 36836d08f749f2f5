"""Extremal regular graphs with a cut vertex, and their eigenvalue thresholds.

For degree ``d`` and branch degree ``c`` (the number of edges a cut vertex
sends into one side) there is a unique-minimizer family of connected
d-regular graphs built as a sequential join of cliques, matching
complements, and cycle complements.  The second-largest adjacency eigenvalue
of each family member is the largest root of a small closed-form
polynomial; the minimum over admissible ``c`` is the sharp threshold below
which a d-regular graph cannot have a cut vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import (
    Graph,
    complete,
    cycles_union_complement,
    matching_complement,
    sequential_join,
)
from .spectra import (
    Polynomial,
    QuotientMatrix,
    VertexPartition,
    largest_root,
    tridiagonal_eigenvalues,
    tridiagonal_reduce,
)


def f0_poly(d: int) -> Polynomial:
    """Cubic whose largest root is lambda2 of the bridge-case graph (odd d)."""
    if d < 3 or d % 2 == 0:
        raise ValueError("the bridge-case polynomial needs odd d >= 3")
    return Polynomial((1.0, -(d - 3), -(3 * d - 2), -2.0))


def f1_poly(d: int, c: int) -> Polynomial:
    """Quartic for even d and even branch degree 2 <= c <= d-2."""
    if d < 4 or d % 2:
        raise ValueError("f1 needs even d >= 4")
    if c % 2 or not 2 <= c <= d - 2:
        raise ValueError("f1 needs even c with 2 <= c <= d-2")
    return Polynomial(
        (1.0, -(d - 4), -(4 * d - 4), 2 * c * d - 2 * c * c - 4 * d, 3 * c * (d - c))
    )


def f2_poly(d: int, c: int) -> Polynomial:
    """Quartic for odd d >= 5 and branch degree 2 <= c <= d-2 (either parity)."""
    if d < 5 or d % 2 == 0:
        raise ValueError("f2 needs odd d >= 5")
    if not 2 <= c <= d - 2:
        raise ValueError("f2 needs 2 <= c <= d-2")
    return Polynomial(
        (1.0, -(d - 5), -(5 * d - 6), 2 * c * d - 2 * c * c - 6 * d, 4 * c * (d - c))
    )


def lambda2_polynomial(d: int, c: int) -> Polynomial:
    """The polynomial whose largest root is lambda2 of the (d, c) family graph."""
    if not 1 <= c <= d - 1:
        raise ValueError("need 1 <= c <= d-1")
    if d % 2:
        if c in (1, d - 1):
            return f0_poly(d)
        return f2_poly(d, c)
    return f1_poly(d, c)


@lru_cache(maxsize=None)
def lambda2_value(d: int, c: int) -> float:
    """Largest root of :func:`lambda2_polynomial`; always in (d-1, d)."""
    return largest_root(lambda2_polynomial(d, c), d - 1.0, float(d))


@dataclass(frozen=True)
class ExtremalSpec:
    """Parameters selecting one extremal construction.

    ``composition`` lists the cycle lengths of the cycle-complement block;
    it must be empty exactly when the construction has no such block.  Parity
    bookkeeping (matching complements need even order):

    * odd d, c in {1, d-1}: no cycle block,
    * odd d, odd c in [3, d-2]: composition sums to c,
    * odd d, even c in [2, d-3]: composition sums to d-c,
    * even d: c even in [2, d-2], no cycle block.
    """

    d: int
    c: int
    composition: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "composition", tuple(self.composition))
        d, c = self.d, self.c
        if d < 3:
            raise ValueError("degree must be at least 3")
        if not 1 <= c <= d - 1:
            raise ValueError("branch degree must satisfy 1 <= c <= d-1")
        if any(k < 3 for k in self.composition):
            raise ValueError("cycle lengths must be at least 3")
        if d % 2 == 0:
            if c % 2:
                raise ValueError("c must be even for even d")
            if self.composition:
                raise ValueError("even-degree construction takes no cycle composition")
        elif c in (1, d - 1):
            if self.composition:
                raise ValueError("bridge construction takes no cycle composition")
        else:
            total = c if c % 2 else d - c
            if sum(self.composition) != total:
                raise ValueError(f"cycle composition must sum to {total}")

    @staticmethod
    def with_default_composition(d: int, c: int) -> "ExtremalSpec":
        """Single-cycle composition where one is required."""
        if d % 2 and c not in (1, d - 1):
            total = c if c % 2 else d - c
            return ExtremalSpec(d, c, (total,))
        return ExtremalSpec(d, c)

    def blocks(self) -> list[Graph]:
        d, c = self.d, self.c
        if d % 2 == 0:
            return [
                complete(d + 1 - c),
                matching_complement(c),
                complete(1),
                matching_complement(d - c),
                complete(c + 1),
            ]
        if c in (1, d - 1):
            return [
                complete(2),
                matching_complement(d - 1),
                complete(1),
                complete(1),
                matching_complement(d - 1),
                complete(2),
            ]
        if c % 2:
            return [
                matching_complement(d + 2 - c),
                cycles_union_complement(self.composition),
                complete(1),
                matching_complement(d - c),
                complete(c + 1),
            ]
        return [
            complete(d + 1 - c),
            matching_complement(c),
            complete(1),
            cycles_union_complement(self.composition),
            matching_complement(c + 2),
        ]


def build_extremal(d: int, c: int, composition=None) -> Graph:
    """The extremal d-regular cut-vertex graph at branch degree ``c``.

    Order is 2d+4 for odd d and 2d+3 for even d; the single-vertex block is a
    cut vertex with branch degrees {c, d-c}.  ``composition=None`` selects
    the single-cycle default.
    """
    if composition is None:
        spec = ExtremalSpec.with_default_composition(d, c)
    else:
        spec = ExtremalSpec(d, c, tuple(composition))
    return sequential_join(spec.blocks())


def construction_partition(d: int, c: int, composition=None) -> VertexPartition:
    """Block partition matching :func:`build_extremal`'s vertex labelling."""
    if composition is None:
        spec = ExtremalSpec.with_default_composition(d, c)
    else:
        spec = ExtremalSpec(d, c, tuple(composition))
    blocks = []
    offset = 0
    for part in spec.blocks():
        blocks.append(tuple(range(offset, offset + part.n)))
        offset += part.n
    return VertexPartition(tuple(blocks))


@dataclass(frozen=True)
class ThresholdResult:
    """Sharp lambda2 threshold for degree d, with its defining data."""

    d: int
    c_star: int
    value: float
    poly: Polynomial
    extremal_graph: Graph


def optimal_branch(d: int) -> int:
    """Branch degree minimizing lambda2 over the admissible range."""
    if d < 3:
        raise ValueError("degree must be at least 3")
    if d == 3:
        return 1
    if d % 2 == 0:
        return 2 * (d // 4)
    return (d - 1) // 2


def threshold(d: int) -> ThresholdResult:
    """Largest lambda2 still forcing 2-connectedness (up to the one extremal graph)."""
    c_star = optimal_branch(d)
    poly = lambda2_polynomial(d, c_star)
    return ThresholdResult(d, c_star, lambda2_value(d, c_star), poly, build_extremal(d, c_star))


def monotonicity_chain(d: int) -> list[tuple[int, float]]:
    """lambda2 of the family graphs for increasing branch degree.

    Strictly decreasing: c runs over 2, 4, ..., 2*floor(d/4) for even d and
    1, 2, ..., (d-1)/2 for odd d.
    """
    if d < 3:
        raise ValueError("degree must be at least 3")
    if d % 2 == 0:
        cs = list(range(2, 2 * (d // 4) + 1, 2))
    else:
        cs = list(range(1, (d - 1) // 2 + 1))
    return [(c, lambda2_value(d, c)) for c in cs]


# ---------------------------------------------------------------------------
# closed-form quotient matrices of the construction partitions


def quotient_even_degree(d: int, c: int) -> QuotientMatrix:
    """5x5 quotient of the even-degree construction partition; rows sum to d."""
    f1_poly(d, c)  # validates the parameter range
    entries = np.array(
        [
            [d - c, c, 0, 0, 0],
            [d + 1 - c, c - 2, 1, 0, 0],
            [0, c, 0, d - c, 0],
            [0, 0, 1, d - c - 2, c + 1],
            [0, 0, 0, d - c, c],
        ],
        dtype=float,
    )
    return QuotientMatrix(entries, (d + 1 - c, c, 1, d - c, c + 1))


def quotient_odd_degree(d: int, c: int) -> QuotientMatrix:
    """5x5 quotient for the odd-degree construction (odd branch form).

    Defined for any 2 <= c <= d-2; for even c it is the matrix of the
    mirrored construction at branch degree d-c, whose reduction still has
    characteristic polynomial f2(d, c).
    """
    f2_poly(d, c)  # validates the parameter range
    entries = np.array(
        [
            [d - c, c, 0, 0, 0],
            [d + 2 - c, c - 3, 1, 0, 0],
            [0, c, 0, d - c, 0],
            [0, 0, 1, d - c - 2, c + 1],
            [0, 0, 0, d - c, c],
        ],
        dtype=float,
    )
    return QuotientMatrix(entries, (d + 2 - c, c, 1, d - c, c + 1))


@dataclass(frozen=True)
class BranchParams:
    """Block orders and cross-edge counts for a general cut-vertex partition.

    ``p``/``q`` are the orders of the two outer blocks (component minus the
    cut vertex's neighbours); ``r``/``t`` count edges from the outer blocks
    into the neighbour sets.
    """

    p: int
    q: int
    r: int
    t: int

    def validate(self, d: int, c: int) -> None:
        if not 1 <= c <= d - 1:
            raise ValueError("need 1 <= c <= d-1")
        if self.p < d + 1 - c:
            raise ValueError("p must be at least d+1-c")
        if self.q < c + 1:
            raise ValueError("q must be at least c+1")
        if not 1 <= self.r <= min(c * self.p, c * (d - 1)):
            raise ValueError("r out of range")
        if not 1 <= self.t <= min((d - c) * self.q, (d - c) * (d - 1)):
            raise ValueError("t out of range")


def cut_partition_quotient(d: int, c: int, bp: BranchParams) -> QuotientMatrix:
    """5x5 quotient of the five-set partition around an arbitrary cut vertex."""
    bp.validate(d, c)
    p, q, r, t = bp.p, bp.q, bp.r, bp.t
    entries = np.array(
        [
            [d - r / p, r / p, 0, 0, 0],
            [r / c, d - 1 - r / c, 1, 0, 0],
            [0, c, 0, d - c, 0],
            [0, 0, 1, d - 1 - t / (d - c), t / (d - c)],
            [0, 0, 0, t / q, d - t / q],
        ]
    )
    return QuotientMatrix(entries, (p, c, 1, d - c, q))


def saturated_cut_reduction(d: int, c: int, p: int, q: int) -> np.ndarray:
    """Deflated cut-partition quotient at saturated cross edges (r=cp, t=(d-c)q).

    Equals the tridiagonal reduction of :func:`cut_partition_quotient` at
    those cross-edge counts; at p = d+1-c, q = c+1 it coincides with the
    reduction of the even-degree construction quotient.
    """
    if not 1 <= c <= d - 1:
        raise ValueError("need 1 <= c <= d-1")
    return np.array(
        [
            [d - c - p, 1, 0, 0],
            [p, d - c - 1, d - c, 0],
            [0, c, c - 1, q],
            [0, 0, 1, c - q],
        ],
        dtype=float,
    )


def _top_eigenvalue(tridiag: np.ndarray) -> float:
    return float(tridiagonal_eigenvalues(tridiag)[0])


@dataclass(frozen=True)
class SweepReport:
    """Outcome of the cut-parameter monotonicity sweep."""

    d: int
    c: int
    comparisons: int
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def cut_parameter_sweep(d: int, c: int, tol: float = 1e-9) -> SweepReport:
    """Check the top-eigenvalue response over the admissible parameter grid.

    The top eigenvalue of the deflated cut-partition quotient must strictly
    decrease as either cross-edge count (r, t) grows, and the saturated
    reduction's top eigenvalue must strictly increase with either outer block
    order (p, q).  For odd d the branch degree is normalized to its odd form
    first (the even form is the mirror image).
    """
    if d < 3 or not 1 <= c <= d - 1:
        raise ValueError("invalid (d, c)")
    if d % 2 and c % 2 == 0 and c not in (1, d - 1):
        c = d - c
    p_lo = d + 2 - c if d % 2 else d + 1 - c
    p_range = range(p_lo, d)
    q_range = range(c + 1, d)
    r_range = lambda p: range(c * (d - c), min(c * p, c * (d - 1)) + 1)
    t_range = lambda q: range((d - c) * c, min((d - c) * q, (d - c) * (d - 1)) + 1)

    comparisons = 0
    violations = []

    def check(kind, params, prev, cur, increasing):
        nonlocal comparisons
        comparisons += 1
        gap = (cur - prev) if increasing else (prev - cur)
        if gap <= tol:
            violations.append(f"{kind} not strictly monotone at {params}: gap={gap:.3e}")

    for p in p_range:
        for q in q_range:
            for t in t_range(q):
                prev = None
                for r in r_range(p):
                    top = _top_eigenvalue(
                        tridiagonal_reduce(
                            cut_partition_quotient(d, c, BranchParams(p, q, r, t)).entries, d
                        )
                    )
                    if prev is not None:
                        check("r", (p, q, r, t), prev, top, increasing=False)
                    prev = top
            for r in r_range(p):
                prev = None
                for t in t_range(q):
                    top = _top_eigenvalue(
                        tridiagonal_reduce(
                            cut_partition_quotient(d, c, BranchParams(p, q, r, t)).entries, d
                        )
                    )
                    if prev is not None:
                        check("t", (p, q, r, t), prev, top, increasing=False)
                    prev = top

    for q in q_range:
        prev = None
        for p in p_range:
            top = _top_eigenvalue(saturated_cut_reduction(d, c, p, q))
            if prev is not None:
                check("p", (p, q), prev, top, increasing=True)
            prev = top
    for p in p_range:
        prev = None
        for q in q_range:
            top = _top_eigenvalue(saturated_cut_reduction(d, c, p, q))
            if prev is not None:
                check("q", (p, q), prev, top, increasing=True)
            prev = top

    return SweepReport(d, c, comparisons, tuple(violations))
