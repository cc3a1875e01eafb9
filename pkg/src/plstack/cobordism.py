"""Stellar subdivisions of the boundary realized as cobordisms.

Subdividing the boundary of ``S`` at a face ``F`` is achieved by gluing the
cone ``apex * star(boundary(S), F)`` onto ``S``.  The boundary of the result is
the stellar subdivision, and the faces that become interior are exactly the
faces containing ``F``.  This module performs that gluing, keeps the ledger of
newly interior faces, and folds it over schedules of subdivisions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import (
    Face,
    SimplicialComplex,
    boundary_decomposition,
    cone,
    fresh_vertex,
    is_closed_pseudomanifold,
    make_face,
    star,
    stellar_subdivide,
)
from .errors import (
    FaceNotOnBoundary,
    NoBoundary,
    NoBoundaryExpected,
    NotPure,
    PLStackError,
    ScheduleError,
    VertexClash,
    VertexSubdivisionRejected,
)


def _by_dim(faces: Iterable[Face]) -> list[Face]:
    return sorted(faces, key=lambda f: (len(f), f))


@dataclass(frozen=True)
class PyramidAttachment:
    base: Face
    apex: int
    added_facets: frozenset
    ledger_delta: frozenset

    def as_dict(self) -> dict:
        return {
            "apex": self.apex,
            "base": list(self.base),
            "added_facets": [list(f) for f in sorted(self.added_facets)],
            "newly_interior": [list(f) for f in _by_dim(self.ledger_delta)],
        }


def attach_pyramid(S: SimplicialComplex, F, apex: int | None = None):
    """Glue ``apex * star(boundary(S), F)`` onto ``S``.

    Returns ``(S_new, attachment)``.  ``apex`` defaults to a freshly minted id.
    """
    F = make_face(F)
    if len(F) <= 1:
        raise VertexSubdivisionRejected(f"face {list(F)} has dimension {len(F) - 1} < 1")
    if not S.is_pure:
        raise NotPure("pyramid attachment needs a pure complex")
    dec = boundary_decomposition(S)
    bd = dec.boundary
    if bd.is_void:
        raise NoBoundary("complex has empty boundary")
    if F not in bd:
        if F in S:
            raise FaceNotOnBoundary(f"face {list(F)} is interior")
        raise FaceNotOnBoundary(f"face {list(F)} is not in the complex")
    if apex is None:
        apex = fresh_vertex(S)
    elif apex in S.vertices:
        raise VertexClash(f"apex {apex} is already a vertex")

    added = frozenset(g + (apex,) for g in star(bd, F).facets)
    S_new = SimplicialComplex(S.facets | added, name=S.name)
    fs = set(F)
    containing = {g for g in S_new.faces() if fs.issubset(g)}
    delta = frozenset(containing - dec.interior_faces)
    return S_new, PyramidAttachment(F, apex, added, delta)


def predicted_interior(S: SimplicialComplex, S_new: SimplicialComplex, F) -> frozenset:
    """Interior of ``S`` plus every face of ``S_new`` containing ``F``."""
    fs = set(make_face(F))
    old = boundary_decomposition(S).interior_faces
    return frozenset(old | {g for g in S_new.faces() if fs.issubset(g)})


@dataclass(frozen=True)
class StackLemmaReport:
    base: Face
    apex: int
    boundary_matches: bool
    missing: tuple  # predicted interior but found on the boundary
    unexpected: tuple  # interior but not predicted

    @property
    def match(self) -> bool:
        return self.boundary_matches and not self.missing and not self.unexpected

    def as_dict(self) -> dict:
        return {
            "apex": self.apex,
            "base": list(self.base),
            "boundary_matches": self.boundary_matches,
            "match": self.match,
            "missing": [list(f) for f in self.missing],
            "unexpected": [list(f) for f in self.unexpected],
        }


def verify_stack_lemma(S: SimplicialComplex, F, apex: int | None = None) -> StackLemmaReport:
    """Recompute interior and boundary of the attached complex from scratch.

    Compares them with the ledger prediction and with the stellar subdivision
    of the old boundary.  Discrepancies are reported, never raised.
    """
    S_new, att = attach_pyramid(S, F, apex)
    predicted = predicted_interior(S, S_new, att.base)
    found = boundary_decomposition(S_new)
    expected_bd = stellar_subdivide(boundary_decomposition(S).boundary, att.base, att.apex)
    return StackLemmaReport(
        att.base,
        att.apex,
        found.boundary == expected_bd,
        tuple(_by_dim(predicted - found.interior_faces)),
        tuple(_by_dim(found.interior_faces - predicted)),
    )


# -- schedules ------------------------------------------------------------


@dataclass(frozen=True)
class SubdivisionSchedule:
    """Ordered ``(face, apex)`` steps; ``apex`` may be None for auto-minting."""

    steps: tuple
    floor_dim: int = 1

    def __post_init__(self):
        steps = tuple((make_face(f), a) for f, a in self.steps)
        object.__setattr__(self, "steps", steps)
        if self.floor_dim < 1:
            raise ValueError("floor_dim must be at least 1")

    @classmethod
    def from_dict(cls, data: dict) -> "SubdivisionSchedule":
        return cls(
            tuple((s["face"], s.get("apex")) for s in data["steps"]),
            data.get("floor_dim", 1),
        )

    def as_dict(self) -> dict:
        return {
            "floor_dim": self.floor_dim,
            "steps": [{"apex": a, "face": list(f)} for f, a in self.steps],
        }


@dataclass(frozen=True)
class ScheduleResult:
    complex: SimplicialComplex
    ledger: frozenset
    attachments: tuple = field(default=())

    def as_dict(self) -> dict:
        return {
            "facets": [list(f) for f in self.complex.sorted_facets()],
            "ledger": [list(f) for f in _by_dim(self.ledger)],
            "steps": [a.as_dict() for a in self.attachments],
        }


def run_schedule(S: SimplicialComplex, schedule: SubdivisionSchedule) -> ScheduleResult:
    """Apply the schedule step by step; faces refer to the current boundary.

    Any failure aborts with :class:`ScheduleError` naming the step.
    """
    current = S
    ledger: set = set()
    attachments = []
    for i, (face, apex) in enumerate(schedule.steps):
        if len(face) - 1 < schedule.floor_dim:
            raise ScheduleError(i, f"face {list(face)} has dimension {len(face) - 1} below floor {schedule.floor_dim}")
        try:
            current, att = attach_pyramid(current, face, apex)
        except PLStackError as exc:
            raise ScheduleError(i, f"{type(exc).__name__}: {exc}") from exc
        low = min(len(g) - 1 for g in att.ledger_delta)
        if low < schedule.floor_dim:
            raise ScheduleError(i, f"face of dimension {low} became interior")
        ledger |= att.ledger_delta
        attachments.append(att)
    return ScheduleResult(current, frozenset(ledger), tuple(attachments))


def disk_extension_by_cone(X: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """Fill a closed pseudomanifold (assumed a sphere) by coning."""
    if not is_closed_pseudomanifold(X):
        raise NoBoundaryExpected("input must be a closed pseudomanifold")
    if apex is None:
        apex = fresh_vertex(X)
    return cone(apex, X)


def random_boundary_face(S: SimplicialComplex, rng, min_dim: int = 1) -> Face:
    """A uniformly chosen boundary face of dimension at least ``min_dim``."""
    bd = boundary_decomposition(S).boundary
    pool = sorted(f for f in bd.faces() if len(f) - 1 >= min_dim)
    if not pool:
        raise NoBoundary(f"no boundary face of dimension >= {min_dim}")
    return pool[rng.randrange(len(pool))]


def random_schedule_run(S: SimplicialComplex, steps: int, rng, min_dim: int = 1) -> ScheduleResult:
    """Run ``steps`` random pyramid attachments at boundary faces of dimension >= ``min_dim``."""
    current = S
    planned: list[tuple[Sequence[int], int]] = []
    for _ in range(steps):
        F = random_boundary_face(current, rng, min_dim)
        apex = fresh_vertex(current)
        current, _ = attach_pyramid(current, F, apex)
        planned.append((F, apex))
    return run_schedule(S, SubdivisionSchedule(tuple(planned), min_dim))
