"""Exposure sequences and their tree/Dyck-path views.

A breadth-first exploration of a k-vertex tree exposes, at step i, the
pi_i children of the i-th discovered vertex.  The child counts
(pi_1, ..., pi_{k-1}) determine the tree shape and satisfy

    pi_1 + ... + pi_{k-1} = k - 1,
    pi_1 + ... + pi_j    >= j   for every j < k,

the ballot condition that keeps the frontier nonempty until the last vertex.
There are catalan(k-1) such sequences.  The k-th discovered vertex never gets
an entry; it is always a leaf.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError

ENUMERATE_MAX_K = 14
CATALAN_MAX = 30


def catalan(j: int) -> int:
    """j-th Catalan number, exact."""
    if not 0 <= j <= CATALAN_MAX:
        raise DomainError(f"catalan index must lie in [0, {CATALAN_MAX}]")
    return math.comb(2 * j, j) // (j + 1)


@dataclass(frozen=True)
class ExposureSequence:
    """Validated child-count sequence of a k-vertex breadth-first exploration."""

    k: int
    pi: tuple[int, ...]

    def __post_init__(self):
        if self.k < 2:
            raise DomainError("exposure sequence needs k >= 2")
        if len(self.pi) != self.k - 1:
            raise DomainError(
                f"expected {self.k - 1} child counts, got {len(self.pi)}"
            )
        total = 0
        for j, c in enumerate(self.pi, start=1):
            if c < 0:
                raise DomainError("child counts must be nonnegative")
            total += c
            if total < j:
                raise DomainError(
                    f"ballot condition fails at position {j}: {total} < {j}"
                )
        if total != self.k - 1:
            raise DomainError(
                f"child counts must sum to {self.k - 1}, got {total}"
            )

    @property
    def leaves(self) -> int:
        """Leaf count: zero entries plus the final vertex."""
        return sum(1 for c in self.pi if c == 0) + 1

    @property
    def ones(self) -> int:
        """Number of vertices with exactly one child."""
        return sum(1 for c in self.pi if c == 1)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "pi": list(self.pi),
            "leaves": self.leaves,
            "ones": self.ones,
        }


def enumerate_exposure_sequences(k: int) -> list[ExposureSequence]:
    """All exposure sequences for k vertices, lexicographically ascending."""
    if not 2 <= k <= ENUMERATE_MAX_K:
        raise DomainError(f"enumeration needs 2 <= k <= {ENUMERATE_MAX_K}")
    out: list[ExposureSequence] = []
    target = k - 1

    def extend(prefix: list[int], total: int):
        j = len(prefix)
        if j == target:
            out.append(ExposureSequence(k, tuple(prefix)))
            return
        # remaining entries can add at most target - total, and the ballot
        # condition needs total + c >= j + 1
        low = max(0, j + 1 - total)
        for c in range(low, target - total + 1):
            prefix.append(c)
            extend(prefix, total + c)
            prefix.pop()

    extend([], 0)
    return out


def count_exposure_sequences(k: int) -> int:
    if k < 2:
        raise DomainError("exposure sequence needs k >= 2")
    return catalan(k - 1)


@dataclass(frozen=True)
class RootedTreeShape:
    """Rooted tree on vertices 0..k-1 given by each vertex's parent.

    parents[0] is -1 for the root; children are ordered by label.
    """

    parents: tuple[int, ...]

    def __post_init__(self):
        k = len(self.parents)
        if k < 1:
            raise DomainError("tree needs at least one vertex")
        if self.parents[0] != -1:
            raise DomainError("vertex 0 must be the root (parent -1)")
        for v in range(1, k):
            p = self.parents[v]
            if not 0 <= p < k:
                raise DomainError(f"vertex {v} has invalid parent {p}")
        # acyclicity: walk each vertex to the root
        for v in range(1, k):
            seen = 0
            u = v
            while u != 0:
                u = self.parents[u]
                seen += 1
                if seen > k:
                    raise DomainError("parent array contains a cycle")

    @property
    def k(self) -> int:
        return len(self.parents)

    def children(self, v: int) -> list[int]:
        return [u for u in range(1, self.k) if self.parents[u] == v]

    def leaf_count(self) -> int:
        internal = set(self.parents[1:])
        return self.k - len(internal)

    def to_json_dict(self) -> dict:
        return {"k": self.k, "parents": list(self.parents)}


def sequence_to_shape(seq: ExposureSequence) -> RootedTreeShape:
    """Rebuild the tree: vertex i in discovery order gets pi_i children."""
    parents = [-1] * seq.k
    next_label = 1
    for v, c in enumerate(seq.pi):
        for _ in range(c):
            parents[next_label] = v
            next_label += 1
    return RootedTreeShape(tuple(parents))


def tree_to_sequence(shape: RootedTreeShape) -> ExposureSequence:
    """Child counts in breadth-first discovery order (ties by label)."""
    k = shape.k
    if k < 2:
        raise DomainError("exposure sequence needs k >= 2")
    kids: list[list[int]] = [[] for _ in range(k)]
    for v in range(1, k):
        kids[shape.parents[v]].append(v)
    order = []
    queue = deque([0])
    while queue:
        v = queue.popleft()
        order.append(v)
        for u in sorted(kids[v]):
            queue.append(u)
    pi = tuple(len(kids[v]) for v in order[: k - 1])
    return ExposureSequence(k, pi)


def sequence_to_dyck(seq: ExposureSequence) -> str:
    """Staircase word: pi_i east steps then one north step, per vertex."""
    parts = []
    for c in seq.pi:
        parts.append("E" * c)
        parts.append("N")
    return "".join(parts)


def dyck_to_sequence(word: str, k: int) -> ExposureSequence:
    """Inverse of sequence_to_dyck."""
    if len(word) != 2 * (k - 1):
        raise DomainError(
            f"staircase word for k={k} must have {2 * (k - 1)} steps"
        )
    pi = []
    run = 0
    for ch in word:
        if ch == "E":
            run += 1
        elif ch == "N":
            pi.append(run)
            run = 0
        else:
            raise DomainError(f"staircase word may only contain E/N, got '{ch}'")
    if run:
        raise DomainError("staircase word must end with N")
    return ExposureSequence(k, tuple(pi))


def lemma_checks(seq: ExposureSequence) -> dict:
    """Leaf/unary structure facts used by the regime-2 counting argument.

    sum_big is the total number of children at vertices with two or more;
    it always equals k - 1 - p where p counts unary vertices.  The checks:
    p + leaves >= k/2, and sum_big < k - p.
    """
    p = seq.ones
    ell = seq.leaves
    sum_big = sum(c for c in seq.pi if c >= 2)
    return {
        "k": seq.k,
        "p": p,
        "leaves": ell,
        "sum_big": sum_big,
        "ok1": 2 * (p + ell) >= seq.k,
        "ok2": sum_big < seq.k - p,
    }


def iter_exposure_sequences(k: int) -> Iterator[ExposureSequence]:
    """Generator form of enumerate_exposure_sequences."""
    yield from enumerate_exposure_sequences(k)
