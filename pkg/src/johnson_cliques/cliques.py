"""Closed-form clique structure of J_n(m, m-1).

Every maximal clique of the graph belongs to exactly one of two classes,
told apart by the intersection of all member labels:

* class ``min`` -- the members are all m-subsets of a fixed (m+1)-element
  set B; the total intersection is empty; there are m+1 members. There is
  one such clique per (m+1)-subset B of {1..n}.
* class ``max`` -- the members are A plus one extra element, for a fixed
  (m-1)-element core A and every choice of extra element outside A; the
  total intersection is A; there are n-m+1 members. There is one such
  clique per (m-1)-subset A, provided n >= m+2. When n == m+1 those
  candidates have only two members inside the complete graph K_{m+1} and
  are not maximal, so the class is rejected as a regime error.

Maximal cliques are stored by defining set only (B or A); member lists are
expanded on demand. A clique with more than two members extends to exactly
one maximal clique, an edge to one of each class, which is what makes the
closed-form edge partitions below work.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator

from .combinat import (
    Label,
    binomial,
    colex_key,
    iter_subsets_colex,
    make_label,
    validate_label,
)
from .errors import InternalConsistencyError, RegimeError, ValidationError
from .graph import Edge, JohnsonParams, are_adjacent, edge_count


class CliqueClass(str, Enum):
    """The two maximal-clique classes."""

    MIN = "min"  # empty total intersection; members are the m-subsets of B
    MAX = "max"  # total intersection is the (m-1)-element core A


class ClassificationKind(str, Enum):
    SINGLETON = "singleton"
    EDGE_BOTH = "edge_both"
    UNIQUE_MIN = "unique_min"
    UNIQUE_MAX = "unique_max"
    ALREADY_MAXIMAL = "already_maximal"


@dataclass(frozen=True)
class MaximalClique:
    """A maximal clique, stored by its defining set.

    ``defining_set`` is B (size m+1) for class ``min`` and A (size m-1) for
    class ``max``. Class ``max`` requires the non-degenerate regime n >= m+2.
    """

    params: JohnsonParams
    kind: CliqueClass
    defining_set: Label

    def __post_init__(self) -> None:
        validate_label(self.defining_set, self.params.n)
        if self.kind is CliqueClass.MIN:
            if len(self.defining_set) != self.params.m + 1:
                raise ValidationError(
                    f"class min defining set {self.defining_set} must have size m+1={self.params.m + 1}"
                )
        else:
            if self.params.degenerate:
                raise RegimeError(
                    f"class max cliques are not maximal in the degenerate regime n == m+1 "
                    f"(n={self.params.n}, m={self.params.m})"
                )
            if len(self.defining_set) != self.params.m - 1:
                raise ValidationError(
                    f"class max defining set {self.defining_set} must have size m-1={self.params.m - 1}"
                )

    @property
    def size(self) -> int:
        """Number of members: m+1 for class min, n-m+1 for class max."""
        if self.kind is CliqueClass.MIN:
            return self.params.m + 1
        return self.params.n - self.params.m + 1

    def members(self) -> tuple[Label, ...]:
        """The member labels, in colex order."""
        if self.kind is CliqueClass.MIN:
            return tuple(sorted(combinations(self.defining_set, self.params.m), key=colex_key))
        core = set(self.defining_set)
        return tuple(
            tuple(sorted(core | {x}))
            for x in range(1, self.params.n + 1)
            if x not in core
        )

    def contains(self, label: Label) -> bool:
        """True when ``label`` is a member of this clique."""
        s = set(label)
        if len(label) != self.params.m:
            return False
        if self.kind is CliqueClass.MIN:
            return s <= set(self.defining_set)
        return set(self.defining_set) <= s and max(label) <= self.params.n

    def to_dict(self) -> dict:
        return {
            "class": self.kind.value,
            "set": list(self.defining_set),
            "n": self.params.n,
            "m": self.params.m,
            "size": self.size,
        }


@dataclass(frozen=True)
class Clique:
    """A validated clique: pairwise-adjacent labels plus cached set algebra.

    Construction re-derives and checks everything; callers cannot smuggle in
    a non-clique or stale cached sets.
    """

    params: JohnsonParams
    members: tuple[Label, ...]
    intersection_set: Label
    union_set: Label

    def __post_init__(self) -> None:
        if not self.members:
            raise ValidationError("a clique needs at least one member")
        for lab in self.members:
            validate_label(lab, self.params.n, self.params.m)
        if len(set(self.members)) != len(self.members):
            raise ValidationError("clique members must be distinct")
        for a, b in combinations(self.members, 2):
            if not are_adjacent(a, b):
                raise ValidationError(f"labels {a} and {b} are not adjacent; not a clique")
        if self.intersection_set != intersection_of(self.members):
            raise ValidationError("cached intersection_set does not match members")
        if self.union_set != union_of(self.members):
            raise ValidationError("cached union_set does not match members")

    @classmethod
    def from_labels(cls, labels: Iterable[Label], params: JohnsonParams) -> "Clique":
        members = tuple(sorted((make_label(lab) for lab in labels), key=colex_key))
        if not members:
            raise ValidationError("a clique needs at least one member")
        return cls(params, members, intersection_of(members), union_of(members))

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Classification:
    """How a clique sits inside the maximal cliques containing it.

    ``extensions`` holds the containing maximal cliques: empty for a
    singleton, (min, max) for an edge in the non-degenerate regime, and a
    single clique otherwise.
    """

    kind: ClassificationKind
    extensions: tuple[MaximalClique, ...]


@dataclass(frozen=True)
class CliquePartition:
    """A family of maximal cliques whose edge sets partition the graph's edges."""

    parts: tuple[MaximalClique, ...]
    covered_edge_count: int

    def to_dict(self) -> dict:
        return {"cp": len(self.parts), "parts": [h.to_dict() for h in self.parts]}


@dataclass(frozen=True)
class FamilyDescription:
    """A maximal clique read as an intersecting family of m-sets.

    For class ``min``: the total intersection is empty, every pairwise union
    equals the defining set, and there are m+1 sets. For class ``max``: the
    total intersection equals the defining core, every pairwise intersection
    equals it too, and there are n-m+1 sets.
    """

    kind: CliqueClass
    defining_set: Label
    member_size: int
    element_count: int
    total_intersection: Label
    pairwise_union: Label | None
    pairwise_intersection: Label | None


def _normalized_members(labels: Iterable[Label]) -> tuple[Label, ...]:
    members = tuple(make_label(lab) for lab in labels)
    if not members:
        raise ValidationError("need at least one label")
    size = len(members[0])
    for lab in members[1:]:
        if len(lab) != size:
            raise ValidationError(f"labels {members[0]} and {lab} differ in size")
    return members


def is_clique(labels: Iterable[Label]) -> bool:
    """True when the labels are pairwise adjacent (all same size, distinct)."""
    members = _normalized_members(labels)
    if len(set(members)) != len(members):
        raise ValidationError("labels must be distinct")
    return all(are_adjacent(a, b) for a, b in combinations(members, 2))


def intersection_of(labels: Iterable[Label]) -> Label:
    """Sorted intersection of all labels; input must be non-empty."""
    members = _normalized_members(labels)
    return tuple(sorted(set.intersection(*(set(lab) for lab in members))))


def union_of(labels: Iterable[Label]) -> Label:
    """Sorted union of all labels; input must be non-empty."""
    members = _normalized_members(labels)
    return tuple(sorted(set.union(*(set(lab) for lab in members))))


def classify(c: Clique) -> Classification:
    """Determine which maximal cliques contain ``c``.

    A single vertex lies in many maximal cliques and gets no extension. An
    edge lies in exactly one clique of each class (class min defined by the
    union of its endpoints, class max by their intersection); in the
    degenerate regime only the class-min extension exists. A clique with
    r > 2 members satisfies exactly one of |union| == m+1 (class min) or
    |intersection| == m-1 (class max) and extends to exactly one maximal
    clique; if it already equals that clique's full member set it is
    reported as already maximal.
    """
    p = c.params
    m = p.m
    r = c.size
    if r == 1:
        return Classification(ClassificationKind.SINGLETON, ())
    if r == 2:
        h_min = MaximalClique(p, CliqueClass.MIN, c.union_set)
        if p.degenerate:
            return Classification(ClassificationKind.UNIQUE_MIN, (h_min,))
        h_max = MaximalClique(p, CliqueClass.MAX, c.intersection_set)
        return Classification(ClassificationKind.EDGE_BOTH, (h_min, h_max))

    union_size = len(c.union_set)
    inter_size = len(c.intersection_set)
    if union_size == m + 1:
        if inter_size != m + 1 - r:
            raise InternalConsistencyError(
                f"clique with |union|={union_size} has |intersection|={inter_size}, expected {m + 1 - r}"
            )
        ext = MaximalClique(p, CliqueClass.MIN, c.union_set)
        kind = ClassificationKind.UNIQUE_MIN
    elif inter_size == m - 1:
        if union_size != m - 1 + r:
            raise InternalConsistencyError(
                f"clique with |intersection|={inter_size} has |union|={union_size}, expected {m - 1 + r}"
            )
        ext = MaximalClique(p, CliqueClass.MAX, c.intersection_set)
        kind = ClassificationKind.UNIQUE_MAX
    else:
        raise InternalConsistencyError(
            f"clique of size {r} with |union|={union_size}, |intersection|={inter_size} "
            f"matches neither maximal class; this cannot happen for a genuine clique"
        )
    if r == ext.size:
        return Classification(ClassificationKind.ALREADY_MAXIMAL, (ext,))
    return Classification(kind, (ext,))


def extend_to_maximal(c: Clique) -> tuple[MaximalClique, ...]:
    """The maximal cliques containing ``c``: two for an edge (one per class,
    class min first), one for anything larger. Requires at least two members."""
    result = classify(c)
    if result.kind is ClassificationKind.SINGLETON:
        raise ValidationError("extension requires a clique with at least two members")
    return result.extensions


def enumerate_min_cliques(p: JohnsonParams) -> Iterator[MaximalClique]:
    """One class-min clique per (m+1)-subset B of {1..n}, in colex order of B."""
    return (MaximalClique(p, CliqueClass.MIN, b) for b in iter_subsets_colex(p.n, p.m + 1))


def enumerate_max_cliques(p: JohnsonParams) -> Iterator[MaximalClique]:
    """One class-max clique per (m-1)-subset A of {1..n}, in colex order of A.

    Rejects the degenerate regime n == m+1, where these candidates are not
    maximal.
    """
    if p.degenerate:
        raise RegimeError(
            f"n={p.n} equals m+1: the graph is complete and the class-max family "
            f"is not maximal; only the single class-min clique exists"
        )
    return (MaximalClique(p, CliqueClass.MAX, a) for a in iter_subsets_colex(p.n, p.m - 1))


def clique_number(p: JohnsonParams) -> int:
    """Size of a largest clique: max(m+1, n-m+1)."""
    return max(p.m + 1, p.n - p.m + 1)


def clique_partition_number(p: JohnsonParams) -> int:
    """Number of parts in the edge partition built by clique_partition:
    C(n, m-1) when n < 2m, else C(n, m+1).

    In the degenerate regime n == m+1 the value equals the edge count
    (each part would be a single edge), while one clique, the whole graph,
    already covers every edge; callers should check ``p.degenerate`` and
    surface that discrepancy rather than treat the value as attained.
    """
    if p.n < 2 * p.m:
        return binomial(p.n, p.m - 1)
    return binomial(p.n, p.m + 1)


def clique_partition(p: JohnsonParams) -> CliquePartition:
    """Partition the edge set into maximal cliques of a single class.

    Uses the class-max family when n < 2m and the class-min family when
    n >= 2m (at n == 2m both families have the same size and class min is
    returned), so that the part count equals clique_partition_number. Every
    edge is verified to be covered exactly once. Requires n >= m+2.
    """
    if p.degenerate:
        raise RegimeError(
            f"no class partition in the degenerate regime n == m+1: the whole graph "
            f"is one clique (n={p.n}, m={p.m})"
        )
    if p.n < 2 * p.m:
        parts = tuple(enumerate_max_cliques(p))
    else:
        parts = tuple(enumerate_min_cliques(p))

    covered: set[tuple[Label, Label]] = set()
    for h in parts:
        for a, b in combinations(h.members(), 2):
            e = Edge(a, b)
            key = (e.u, e.v)
            if key in covered:
                raise InternalConsistencyError(f"edge {key} covered by two parts")
            covered.add(key)
    total = edge_count(p)
    if len(covered) != total:
        raise InternalConsistencyError(
            f"partition covers {len(covered)} edges, graph has {total}"
        )
    if len(parts) != clique_partition_number(p):
        raise InternalConsistencyError(
            f"partition has {len(parts)} parts, formula gives {clique_partition_number(p)}"
        )
    return CliquePartition(parts=parts, covered_edge_count=total)


def members_of(h: MaximalClique) -> tuple[Label, ...]:
    """Member labels of a maximal clique, in colex order."""
    return h.members()


def family_view(h: MaximalClique) -> FamilyDescription:
    """Read a maximal clique as a maximally intersecting family of m-sets."""
    if h.kind is CliqueClass.MIN:
        return FamilyDescription(
            kind=h.kind,
            defining_set=h.defining_set,
            member_size=h.params.m,
            element_count=h.size,
            total_intersection=(),
            pairwise_union=h.defining_set,
            pairwise_intersection=None,
        )
    return FamilyDescription(
        kind=h.kind,
        defining_set=h.defining_set,
        member_size=h.params.m,
        element_count=h.size,
        total_intersection=h.defining_set,
        pairwise_union=None,
        pairwise_intersection=h.defining_set,
    )
