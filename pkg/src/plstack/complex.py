"""Abstract simplicial complexes stored by their facet list.

A face is a strictly increasing tuple of non-negative vertex ids.  The empty
tuple is the empty face (dimension -1).  Two complexes are distinguished at the
bottom of the lattice: the *void* complex has no faces at all, while
``SimplicialComplex([()])`` contains only the empty face.  Links of facets are
of the second kind.

Only facets are stored.  The full face lattice is derived on first use and then
cached; the cache is filled under a lock so concurrent readers see one
consistent table.
"""
from __future__ import annotations

import itertools
import threading
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    FaceNotPresent,
    NotPseudomanifold,
    NotPure,
    VertexClash,
    VertexSubdivisionRejected,
)

Face = tuple  # tuple[int, ...], strictly increasing


def make_face(vertices: Iterable[int]) -> Face:
    """Normalize ``vertices`` to a sorted tuple, rejecting repeats and bad ids."""
    vs = tuple(sorted(vertices))
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")
    if len(set(vs)) != len(vs):
        raise ValueError(f"repeated vertex in face {vs}")
    return vs


def face_dim(face: Sequence[int]) -> int:
    return len(face) - 1


def _is_subface(small: Sequence[int], big: Sequence[int]) -> bool:
    return len(small) <= len(big) and set(small).issubset(big)


def _maximal(faces: Iterable[Face]) -> frozenset:
    """Drop every face contained in another one."""
    cands = sorted(set(faces), key=len, reverse=True)
    if not cands:
        return frozenset()
    if len(cands[0]) == len(cands[-1]):
        return frozenset(cands)
    kept: list[Face] = []
    kept_sets: list[frozenset] = []
    for c in cands:
        cs = frozenset(c)
        if not any(cs <= k for k in kept_sets):
            kept.append(c)
            kept_sets.append(cs)
    return frozenset(kept)


class SimplicialComplex:
    """Immutable simplicial complex generated by a set of faces.

    The constructor accepts any generating set; non-maximal generators are
    discarded so ``facets`` is always an antichain.
    """

    def __init__(self, facets: Iterable[Iterable[int]] = (), name: str | None = None):
        self._facets = _maximal(make_face(f) for f in facets)
        self.name = name
        self._lock = threading.Lock()
        self._table: tuple[frozenset, ...] | None = None
        self._pure: bool | None = None

    def __reduce__(self):
        return (SimplicialComplex, (sorted(self._facets), self.name))

    # -- basic data -------------------------------------------------------

    @property
    def facets(self) -> frozenset:
        return self._facets

    def sorted_facets(self) -> list[Face]:
        return sorted(self._facets)

    @property
    def dim(self) -> int:
        if not self._facets:
            return -1
        return max(len(f) for f in self._facets) - 1

    @property
    def is_void(self) -> bool:
        return not self._facets

    @property
    def is_pure(self) -> bool:
        if self._pure is None:
            self._pure = len({len(f) for f in self._facets}) <= 1
        return self._pure

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for f in self._facets for v in f)

    def _face_table(self) -> tuple[frozenset, ...]:
        if self._table is None:
            with self._lock:
                if self._table is None:
                    levels: list[set] = [set() for _ in range(self.dim + 2)]
                    for f in self._facets:
                        for size in range(len(f) + 1):
                            levels[size].update(itertools.combinations(f, size))
                    self._table = tuple(frozenset(s) for s in levels)
        return self._table

    def faces(self, k: int | None = None) -> frozenset:
        """Faces of dimension ``k``; all nonempty faces when ``k`` is None.

        Out-of-range ``k`` yields the empty set.
        """
        table = self._face_table()
        if k is None:
            return frozenset().union(*table[1:])
        if k < -1 or k + 1 >= len(table):
            return frozenset()
        return table[k + 1]

    def sorted_faces(self, k: int) -> list[Face]:
        return sorted(self.faces(k))

    def f_counts(self) -> list[int]:
        """Number of faces per dimension, starting at the empty face."""
        return [len(level) for level in self._face_table()]

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * n for i, n in enumerate(self.f_counts()[1:]))

    def __contains__(self, face) -> bool:
        f = tuple(sorted(face))
        return any(_is_subface(f, g) for g in self._facets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __len__(self) -> int:
        return len(self._facets)

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"SimplicialComplex({label}facets={self.sorted_facets()})"


# -- constructors ---------------------------------------------------------


def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex([tuple(vertices)])


def simplex_boundary(vertices: Iterable[int]) -> SimplicialComplex:
    """Boundary of the simplex on ``vertices``; a two-vertex face gives S^0."""
    vs = make_face(vertices)
    return SimplicialComplex(itertools.combinations(vs, len(vs) - 1))


def fresh_vertex(*complexes: SimplicialComplex) -> int:
    """Smallest id above every vertex of the given complexes."""
    used = [v for X in complexes for v in X.vertices]
    return max(used) + 1 if used else 0


# -- local structure ------------------------------------------------------


def _require_face(X: SimplicialComplex, F) -> Face:
    F = make_face(F)
    if F not in X:
        raise FaceNotPresent(f"face {list(F)} is not in the complex")
    return F


def star(X: SimplicialComplex, F) -> SimplicialComplex:
    """Closed star: the subcomplex generated by the facets containing ``F``."""
    F = _require_face(X, F)
    return SimplicialComplex(g for g in X.facets if _is_subface(F, g))


def link(X: SimplicialComplex, F) -> SimplicialComplex:
    F = _require_face(X, F)
    fs = set(F)
    return SimplicialComplex(
        tuple(v for v in g if v not in fs) for g in X.facets if fs.issubset(g)
    )


def join(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    """Join of complexes on disjoint vertex sets."""
    if A.vertices & B.vertices:
        raise VertexClash(f"join of complexes sharing vertices {sorted(A.vertices & B.vertices)}")
    return SimplicialComplex(a + b for a in A.facets for b in B.facets)


def cone(apex: int, X: SimplicialComplex) -> SimplicialComplex:
    """Cone with the given apex; the cone over the void complex is the point."""
    if apex in X.vertices:
        raise VertexClash(f"apex {apex} is already a vertex")
    if X.is_void:
        return SimplicialComplex([(apex,)])
    return SimplicialComplex(f + (apex,) for f in X.facets)


def stellar_subdivide(X: SimplicialComplex, F, v: int) -> SimplicialComplex:
    """Stellar subdivision of ``X`` at the face ``F`` with new vertex ``v``.

    The open star of ``F`` is replaced by ``v * boundary(F) * link(F)``.
    Vertex faces are rejected instead of being treated as the identity.
    """
    F = make_face(F)
    if len(F) <= 1:
        raise VertexSubdivisionRejected(f"cannot subdivide face {list(F)} of dimension {len(F) - 1}")
    F = _require_face(X, F)
    if v in X.vertices:
        raise VertexClash(f"vertex {v} is not fresh")
    fs = set(F)
    kept = [g for g in X.facets if not fs.issubset(g)]
    lk = [tuple(u for u in g if u not in fs) for g in X.facets if fs.issubset(g)]
    added = [
        (v,) + tuple(u for u in F if u != x) + tau for x in F for tau in lk
    ]
    return SimplicialComplex(kept + added)


# -- boundary and pseudomanifold gates ------------------------------------


@dataclass(frozen=True)
class BoundaryDecomposition:
    """Split of the nonempty faces of a complex into boundary and interior.

    The empty face is never listed as interior.
    """

    boundary: SimplicialComplex
    interior_faces: frozenset

    def sorted_interior(self) -> list[Face]:
        return sorted(self.interior_faces, key=lambda f: (len(f), f))


def ridge_counts(X: SimplicialComplex) -> Mapping[Face, int]:
    counts: Counter = Counter()
    for f in X.facets:
        for r in itertools.combinations(f, len(f) - 1):
            counts[r] += 1
    return counts


def boundary_decomposition(X: SimplicialComplex) -> BoundaryDecomposition:
    if X.is_void:
        return BoundaryDecomposition(SimplicialComplex(), frozenset())
    if not X.is_pure:
        raise NotPure("boundary is only defined here for pure complexes")
    counts = ridge_counts(X)
    crowded = sorted(r for r, c in counts.items() if c > 2)
    if crowded:
        raise NotPseudomanifold(f"ridge {list(crowded[0])} lies in more than two facets")
    boundary = SimplicialComplex(r for r, c in counts.items() if c == 1)
    interior = X.faces() - boundary.faces()
    return BoundaryDecomposition(boundary, frozenset(interior))


def boundary(X: SimplicialComplex) -> SimplicialComplex:
    return boundary_decomposition(X).boundary


def is_closed_pseudomanifold(X: SimplicialComplex) -> bool:
    if X.is_void or not X.is_pure:
        return False
    return all(c == 2 for c in ridge_counts(X).values())


def is_strongly_connected(X: SimplicialComplex) -> bool:
    """Whether the facet-ridge adjacency graph of a pure complex is connected."""
    if X.is_void or not X.is_pure:
        return False
    by_ridge: dict[Face, list[Face]] = {}
    for f in X.facets:
        for r in itertools.combinations(f, len(f) - 1):
            by_ridge.setdefault(r, []).append(f)
    start = next(iter(X.facets))
    seen = {start}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for r in itertools.combinations(f, len(f) - 1):
            for g in by_ridge[r]:
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
    return len(seen) == len(X.facets)
