"""Desk-scale verification: sweep generated regular graphs against the
cut-vertex eigenvalue thresholds, expansion bounds, and prior bounds.

The central check: every connected d-regular graph with a cut vertex has
lambda2 at least the degree-d threshold, with equality only for the one
extremal graph.  Exhaustive mode walks every isomorphism class up to a
given order; random mode samples the pairing model and asserts only the
strict side of the bound (a sample that happens to tie the threshold is
recorded, not judged).
"""

from __future__ import annotations

import io
import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .enumeration import enumerate_connected_regular, random_connected_regular
from .extremal import lambda2_value, threshold
from .graphs import Graph, articulation_points, is_connected, is_isomorphic, is_regular, to_graph6
from .spectra import spectrum

EIG_TOL = 1e-8


class VerificationError(Exception):
    """A generated graph violated a bound that the theory guarantees."""


@dataclass(frozen=True)
class VerificationRecord:
    """Per-graph outcome of a threshold sweep."""

    graph6: str
    n: int
    d: int
    witnesses: tuple[tuple[int, int], ...]  # (cut vertex, normalized branch degree)
    lambda2: float
    threshold_cmp: str  # below / equal / above
    iso_extremal: bool


@dataclass(frozen=True)
class TheoremReport:
    d: int
    n_max: int
    mode: str
    passed: bool
    equality_cases: tuple[str, ...]
    counterexamples: tuple[str, ...]
    graphs_checked: int
    cut_vertex_graphs: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "d": self.d,
                "n_max": self.n_max,
                "mode": self.mode,
                "pass": self.passed,
                "equality_cases": list(self.equality_cases),
                "counterexamples": list(self.counterexamples),
                "graphs_checked": self.graphs_checked,
                "cut_vertex_graphs": self.cut_vertex_graphs,
            }
        )


def cut_branch_values(g: Graph, d: int) -> tuple[tuple[int, int], ...]:
    """Normalized (cut vertex, branch degree) pairs for every witness split.

    For each cut vertex and each component of ``G - u`` the branch degree c
    is taken as min(edges into the component, d minus that), so c <= d/2.
    For even d every branch degree must be even (a handshake consequence);
    a violation would falsify the classification and raises.
    """
    pairs = set()
    for w in articulation_points(g):
        for b in w.branch_degrees:
            if d % 2 == 0 and b % 2:
                raise VerificationError(
                    f"odd branch degree {b} at cut vertex {w.u} of an even-degree graph"
                )
            pairs.add((w.u, min(b, d - b)))
    return tuple(sorted(pairs))


def _generate(d: int, n_max: int, mode: str, samples: int | None, seed: int | None):
    if mode == "exhaustive":
        for n in range(d + 1, n_max + 1):
            if n * d % 2:
                continue
            yield from enumerate_connected_regular(n, d)
    elif mode == "random":
        if samples is None or seed is None:
            raise ValueError("random mode needs samples and seed")
        orders = [n for n in range(d + 1, n_max + 1) if n * d % 2 == 0]
        if not orders:
            raise ValueError("no admissible order at or below n_max")
        rng = random.Random(seed)
        for _ in range(samples):
            n = rng.choice(orders)
            yield random_connected_regular(n, d, rng.randrange(1 << 32))
    else:
        raise ValueError(f"unknown mode {mode!r}")


def _examine(g: Graph, d: int, thr_value: float, extremal: Graph) -> VerificationRecord:
    witnesses = cut_branch_values(g, d)
    lam2 = spectrum(g).lambda2
    if lam2 > thr_value + EIG_TOL:
        cmp = "above"
    elif lam2 < thr_value - EIG_TOL:
        cmp = "below"
    else:
        cmp = "equal"
    iso = cmp == "equal" and g.n == extremal.n and is_isomorphic(g, extremal)
    return VerificationRecord(to_graph6(g), g.n, d, witnesses, lam2, cmp, iso)


def _records_for(
    d: int,
    n_max: int,
    mode: str = "exhaustive",
    samples: int | None = None,
    seed: int | None = None,
    workers: int = 1,
) -> list[VerificationRecord]:
    if d < 3:
        raise ValueError("degree must be at least 3")
    thr = threshold(d)
    graphs = list(_generate(d, n_max, mode, samples, seed))
    if workers <= 1:
        records = [_examine(g, d, thr.value, thr.extremal_graph) for g in graphs]
    else:
        shards = [graphs[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                lambda shard: [_examine(g, d, thr.value, thr.extremal_graph) for g in shard],
                shards,
            )
            records = [rec for part in parts for rec in part]
    # deterministic report order regardless of worker count
    records.sort(key=lambda r: r.graph6)
    return records


def verify_cut_lemmas(
    d: int,
    n_max: int,
    mode: str = "exhaustive",
    samples: int | None = None,
    seed: int | None = None,
    workers: int = 1,
) -> list[VerificationRecord]:
    """Check the per-branch-degree bound for every generated graph.

    Every witness (u, c) puts the graph in the class whose minimizer has
    lambda2 equal to the largest root of the degree-(d, c) polynomial, so
    lambda2(G) must be at least that root (up to 1e-8).  Raises
    VerificationError on any violation; returns the records.
    """
    records = _records_for(d, n_max, mode, samples, seed, workers)
    for rec in records:
        for _, c in rec.witnesses:
            bound = lambda2_value(d, c)
            if rec.lambda2 < bound - EIG_TOL:
                raise VerificationError(
                    f"{rec.graph6}: lambda2={rec.lambda2:.12f} below the "
                    f"branch-degree-{c} bound {bound:.12f}"
                )
    return records


def verify_theorem(
    d: int,
    n_max: int,
    mode: str = "exhaustive",
    samples: int | None = None,
    seed: int | None = None,
    workers: int = 1,
) -> tuple[TheoremReport, list[VerificationRecord]]:
    """Sweep generated graphs against the sharp threshold.

    A counterexample is a cut-vertex graph strictly below the threshold, or
    an equality case not isomorphic to the extremal graph (equality is only
    asserted in exhaustive mode).
    """
    records = _records_for(d, n_max, mode, samples, seed, workers)
    equality = []
    counterexamples = []
    cut_graphs = 0
    for rec in records:
        if not rec.witnesses:
            continue
        cut_graphs += 1
        if rec.threshold_cmp == "below":
            counterexamples.append(rec.graph6)
        elif rec.threshold_cmp == "equal":
            equality.append(rec.graph6)
            if mode == "exhaustive" and not rec.iso_extremal:
                counterexamples.append(rec.graph6)
    report = TheoremReport(
        d=d,
        n_max=n_max,
        mode=mode,
        passed=not counterexamples,
        equality_cases=tuple(equality),
        counterexamples=tuple(counterexamples),
        graphs_checked=len(records),
        cut_vertex_graphs=cut_graphs,
    )
    return report, records


CSV_HEADER = "graph6,n,d,witnesses,lambda2,threshold_cmp,iso_extremal"


def records_to_csv(records) -> str:
    """Fixed-layout CSV; witnesses serialize as 'u:c' pairs joined by ';'."""
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in records:
        wit = ";".join(f"{u}:{c}" for u, c in r.witnesses)
        buf.write(
            f"{r.graph6},{r.n},{r.d},{wit},{r.lambda2:.10g},"
            f"{r.threshold_cmp},{str(r.iso_extremal).lower()}\n"
        )
    return buf.getvalue()


# ---------------------------------------------------------------------------
# edge expansion


@dataclass(frozen=True)
class CheegerCheck:
    h: float
    lower: float
    upper: float
    passed: bool


def edge_expansion(g: Graph) -> float:
    """Exact edge expansion by subset search (Gray-code incremental cuts)."""
    if g.n > 20:
        raise ValueError("exact edge expansion is limited to n <= 20")
    if g.n < 2:
        raise ValueError("edge expansion needs at least two vertices")
    n = g.n
    half = n // 2
    best = float("inf")
    cut = 0
    size = 0
    prev_gray = 0
    for i in range(1, 1 << n):
        gray = i ^ (i >> 1)
        v = (gray ^ prev_gray).bit_length() - 1
        if (gray >> v) & 1:
            cut += g.degree(v) - 2 * (g.rows[v] & prev_gray).bit_count()
            size += 1
        else:
            cut -= g.degree(v) - 2 * (g.rows[v] & gray).bit_count()
            size -= 1
        prev_gray = gray
        if 1 <= size <= half:
            ratio = cut / size
            if ratio < best:
                best = ratio
    return best


def cheeger_check(g: Graph) -> CheegerCheck:
    """Sandwich the exact edge expansion between the spectral-gap bounds.

    Uses lambda2 (not the largest eigenvalue modulus) in both bounds; with
    the modulus the upper bound already fails on bipartite examples like the
    4-cycle.
    """
    d = is_regular(g)
    if d is None or not is_connected(g):
        raise ValueError("edge expansion bounds need a connected regular graph")
    h = edge_expansion(g)
    lam2 = spectrum(g).lambda2
    lower = (d - lam2) / 2
    upper = (2 * d * (d - lam2)) ** 0.5
    passed = lower <= h + EIG_TOL and h <= upper + EIG_TOL
    return CheegerCheck(h, lower, upper, passed)


# ---------------------------------------------------------------------------
# earlier published bounds, instantiated for 2-connectedness


@dataclass(frozen=True)
class PriorBoundTable:
    """Earlier lambda2 bounds forcing 2-connectedness, next to the sharp one."""

    d: int
    n: int
    bounds: dict[str, float]
    new_threshold: float


def prior_bounds(d: int, n: int) -> PriorBoundTable:
    """The four published bounds at connectivity target 2, for an order-n graph.

    Requires n > d+1 (several denominators vanish at n = d+1).
    """
    if d < 3:
        raise ValueError("degree must be at least 3")
    if n <= d + 1:
        raise ValueError("need n > d+1 (degenerate denominator)")
    if d % 2 == 0:
        cioaba_gu = (d - 2 + (d * d + 12) ** 0.5) / 2
    else:
        cioaba_gu = (d - 2 + (d * d + 8) ** 0.5) / 2
    abiad = d - d * n / (2 * (d + 1) * (n - d - 1))
    liu = d - (d - 1) * n * d / (2 * (d + 1) * (n - d - 1))
    hong = d - n * d / ((n - 1) + 4 * d * (n - d - 1))
    return PriorBoundTable(
        d,
        n,
        {
            "cioaba_gu": cioaba_gu,
            "abiad_et_al": abiad,
            "liu": liu,
            "hong_et_al": hong,
        },
        threshold(d).value,
    )
