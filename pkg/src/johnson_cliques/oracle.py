"""Brute-force ground truth for the closed-form results.

Materializes J_n(m, m-1) as an explicit dense graph, enumerates all maximal
cliques with pivoted Bron-Kerbosch, and compares what it finds against the
closed-form enumerations, clique number, and edge partition. The clique
search knows nothing about Johnson structure; it only sees adjacency bits.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations
from typing import Iterable

from .combinat import MAX_GROUND_SET, Label, binomial, unrank
from .cliques import (
    clique_number,
    clique_partition,
    clique_partition_number,
    enumerate_max_cliques,
    enumerate_min_cliques,
)
from .errors import InternalConsistencyError, RangeError, ValidationError
from .graph import JohnsonParams, are_adjacent, edge_count, vertex_count

#: Largest graph verify()/materialize() will build by default.
DEFAULT_MATERIALIZE_CAP = 2000


@dataclass(frozen=True)
class DenseGraph:
    """Adjacency as one bit-set row per vertex: bit j of rows[i] means edge ij."""

    vertex_count: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.vertex_count:
            raise ValidationError(
                f"expected {self.vertex_count} adjacency rows, got {len(self.rows)}"
            )
        for i, row in enumerate(self.rows):
            if row >> self.vertex_count:
                raise ValidationError(f"row {i} has bits beyond vertex {self.vertex_count - 1}")
            if (row >> i) & 1:
                raise ValidationError(f"self-loop at vertex {i}")
            rest = row
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if not (self.rows[j] >> i) & 1:
                    raise ValidationError(f"adjacency not symmetric at ({i}, {j})")

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def edge_total(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2


def materialize(p: JohnsonParams, max_vertices: int = DEFAULT_MATERIALIZE_CAP) -> DenseGraph:
    """Build the explicit graph; vertex i carries the label of colex rank i."""
    nv = vertex_count(p)
    if nv > max_vertices:
        raise RangeError(f"graph has {nv} vertices, above the materialization cap {max_vertices}")
    labels = [unrank(r, p.n, p.m) for r in range(nv)]
    rows = [0] * nv
    for i in range(nv):
        for j in range(i + 1, nv):
            if are_adjacent(labels[i], labels[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return DenseGraph(nv, tuple(rows))


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


def maximal_cliques(g: DenseGraph) -> list[tuple[int, ...]]:
    """All maximal cliques of ``g``, each once, members ascending, cliques
    sorted; pivoted Bron-Kerbosch, deterministic across runs."""
    if g.vertex_count == 0:
        return []
    rows = g.rows
    found: list[tuple[int, ...]] = []

    def pick_pivot(cand: int) -> int:
        best_v, best_score = -1, -1
        rest = cand
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            score = (rows[v] & cand).bit_count()
            if score > best_score:
                best_v, best_score = v, score
        return best_v

    def expand(base: int, cand: int, excl: int) -> None:
        if not cand:
            if not excl:
                found.append(_mask_vertices(base))
            return
        pivot = pick_pivot(cand)
        todo = cand & ~rows[pivot]
        while todo:
            bit = todo & -todo
            todo &= todo - 1
            v = bit.bit_length() - 1
            expand(base | bit, cand & rows[v], excl & rows[v])
            cand &= ~bit
            excl |= bit

    expand(0, (1 << g.vertex_count) - 1, 0)
    found.sort()
    return found


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one (n, m) pair against the brute-force oracle.

    All checks are reported, never raised. ``notes`` carries explanations,
    in particular the degenerate-regime discrepancy between the partition
    formula value and the actual minimum (a single clique).
    """

    params: JohnsonParams
    degenerate: bool
    oracle_clique_count: int
    closed_form_count: int
    sets_equal: bool
    intersection_sizes_ok: bool
    size_laws_ok: bool
    clique_number_ok: bool
    edge_law_ok: bool
    partition_ok: bool
    max_clique_size_observed: int
    elapsed_seconds: float
    notes: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return (
            self.sets_equal
            and self.intersection_sizes_ok
            and self.size_laws_ok
            and self.clique_number_ok
            and self.edge_law_ok
            and self.partition_ok
        )

    def to_dict(self) -> dict:
        # elapsed_seconds is deliberately left out: report lines must be
        # byte-identical across runs.
        return {
            "n": self.params.n,
            "m": self.params.m,
            "degenerate": self.degenerate,
            "oracle_clique_count": self.oracle_clique_count,
            "closed_form_count": self.closed_form_count,
            "sets_equal": self.sets_equal,
            "intersection_sizes_ok": self.intersection_sizes_ok,
            "size_laws_ok": self.size_laws_ok,
            "clique_number_ok": self.clique_number_ok,
            "edge_law_ok": self.edge_law_ok,
            "partition_ok": self.partition_ok,
            "max_clique_size_observed": self.max_clique_size_observed,
            "passed": self.passed,
            "notes": list(self.notes),
        }


def _family_covers_each_edge_once(family, edge_keys: set[frozenset[Label]]) -> bool:
    seen: set[frozenset[Label]] = set()
    for h in family:
        for a, b in combinations(h.members(), 2):
            key = frozenset((a, b))
            if key in seen:
                return False
            seen.add(key)
    return seen == edge_keys


def verify(p: JohnsonParams, max_vertices: int = DEFAULT_MATERIALIZE_CAP) -> VerificationReport:
    """Run every closed-form claim for one (n, m) against the oracle."""
    t0 = time.perf_counter()
    g = materialize(p, max_vertices)
    labels = [unrank(r, p.n, p.m) for r in range(g.vertex_count)]
    notes: list[str] = []
    n, m = p.n, p.m

    oracle = maximal_cliques(g)
    oracle_sets = [frozenset(labels[i] for i in cl) for cl in oracle]
    max_size = max(len(cl) for cl in oracle)

    intersection_sizes_ok = True
    size_laws_ok = True
    for cl in oracle_sets:
        inter = set.intersection(*(set(lab) for lab in cl))
        if len(inter) not in (0, m - 1):
            intersection_sizes_ok = False
            notes.append(f"clique {sorted(cl)} has intersection size {len(inter)}")
            continue
        expected = m + 1 if len(inter) == 0 else n - m + 1
        if len(cl) != expected:
            size_laws_ok = False
            notes.append(
                f"clique with intersection size {len(inter)} has {len(cl)} members, expected {expected}"
            )

    min_family = list(enumerate_min_cliques(p))
    closed_min = {frozenset(h.members()) for h in min_family}
    if p.degenerate:
        max_family = []
        closed_max: set[frozenset[Label]] = set()
        notes.append(
            "degenerate regime (n == m+1): the graph is complete, the sole maximal "
            "clique is the class-min one, and the class-max family is inapplicable"
        )
    else:
        max_family = list(enumerate_max_cliques(p))
        closed_max = {frozenset(h.members()) for h in max_family}
    if closed_min & closed_max:
        notes.append("class-min and class-max families overlap; they must be disjoint")
    closed = closed_min | closed_max
    closed_form_count = len(closed)
    sets_equal = set(oracle_sets) == closed and len(oracle_sets) == closed_form_count
    if len(closed_min) != binomial(n, m + 1):
        sets_equal = False
        notes.append(f"class-min family has {len(closed_min)} cliques, expected C({n},{m + 1})")
    if not p.degenerate and len(closed_max) != binomial(n, m - 1):
        sets_equal = False
        notes.append(f"class-max family has {len(closed_max)} cliques, expected C({n},{m - 1})")

    clique_number_ok = max_size == clique_number(p)
    if not clique_number_ok:
        notes.append(f"observed maximum clique size {max_size}, formula gives {clique_number(p)}")

    edge_keys = {
        frozenset((labels[i], labels[j]))
        for i in range(g.vertex_count)
        for j in range(i + 1, g.vertex_count)
        if g.adjacent(i, j)
    }
    identity_ok = (
        binomial(n, m + 1) * binomial(m + 1, 2)
        == edge_count(p)
        == binomial(n, m - 1) * binomial(n - m + 1, 2)
    )
    edge_law_ok = identity_ok and _family_covers_each_edge_once(min_family, edge_keys)
    if not p.degenerate:
        edge_law_ok = edge_law_ok and _family_covers_each_edge_once(max_family, edge_keys)
    if not edge_law_ok:
        notes.append("edge law failed: some edge is not in exactly one clique per class")

    if p.degenerate:
        cp_formula = clique_partition_number(p)
        whole = tuple(range(g.vertex_count))
        partition_ok = oracle == [whole] and g.edge_total() == edge_count(p)
        notes.append(
            f"degenerate regime: the partition formula gives {cp_formula} (one part per edge) "
            f"but the whole graph is a single clique covering every edge, so the true minimum is 1"
        )
    else:
        try:
            part = clique_partition(p)
            partition_ok = (
                len(part.parts) == clique_partition_number(p)
                and part.covered_edge_count == edge_count(p)
            )
        except InternalConsistencyError as exc:
            partition_ok = False
            notes.append(f"partition failed: {exc}")

    return VerificationReport(
        params=p,
        degenerate=p.degenerate,
        oracle_clique_count=len(oracle),
        closed_form_count=closed_form_count,
        sets_equal=sets_equal,
        intersection_sizes_ok=intersection_sizes_ok,
        size_laws_ok=size_laws_ok,
        clique_number_ok=clique_number_ok,
        edge_law_ok=edge_law_ok,
        partition_ok=partition_ok,
        max_clique_size_observed=max_size,
        elapsed_seconds=time.perf_counter() - t0,
        notes=tuple(notes),
    )


def verify_range(
    m_values: Iterable[int],
    n_values: Iterable[int],
    jobs: int = 1,
    max_vertices: int = DEFAULT_MATERIALIZE_CAP,
) -> list[VerificationReport]:
    """One report per valid (n, m) pair, ordered by (m, n) regardless of jobs."""
    pairs = [
        JohnsonParams(n, m)
        for m in sorted(set(m_values))
        for n in sorted(set(n_values))
        if m >= 2 and m + 1 <= n <= MAX_GROUND_SET
    ]
    if jobs <= 1 or len(pairs) <= 1:
        return [verify(p, max_vertices) for p in pairs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(partial(verify, max_vertices=max_vertices), pairs))
