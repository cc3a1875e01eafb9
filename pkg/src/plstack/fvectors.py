"""f-, h- and g-vectors, and k-stackedness of triangulated manifolds with boundary.

Conventions.  For a complex of dimension ``d`` the f-vector is
``(f_{-1}, f_0, ..., f_d)`` with ``f_{-1} = 1``.  The h-vector uses ``d + 1``
(the facet cardinality) in the binomials, so the boundary of a simplex has the
all-ones h-vector.  The g-vector is reported twice: truncated at index
``(d + 1) // 2`` and as the full first-difference sequence.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import comb

from .complex import Face, SimplicialComplex, boundary_decomposition, is_closed_pseudomanifold
from .errors import BadVector, NoBoundary, NotPseudomanifold, NotPure


def f_vector(X: SimplicialComplex) -> tuple[int, ...]:
    """Face counts ``(1, f_0, ..., f_d)``; the void complex gives ``(1,)``."""
    if X.is_void:
        return (1,)
    return tuple(X.f_counts())


def h_vector(f, d: int) -> tuple[int, ...]:
    f = tuple(int(x) for x in f)
    if len(f) != d + 2:
        raise BadVector(f"f-vector of a {d}-dimensional complex needs {d + 2} entries, got {len(f)}")
    if f[0] != 1:
        raise BadVector(f"f_(-1) must be 1, got {f[0]}")
    return tuple(
        sum((-1) ** (j - i) * comb(d + 1 - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 2)
    )


def g_full(h) -> tuple[int, ...]:
    """``(h_0, h_1 - h_0, ..., h_{d+1} - h_d)``."""
    h = tuple(h)
    if not h:
        raise BadVector("empty h-vector")
    return (h[0],) + tuple(h[i] - h[i - 1] for i in range(1, len(h)))


def g_vector(h) -> tuple[int, ...]:
    """g-vector truncated at index ``(d + 1) // 2`` where ``d = len(h) - 2``."""
    full = g_full(h)
    d = len(full) - 2
    return full[: (d + 1) // 2 + 1]


@dataclass(frozen=True)
class FaceVectorBundle:
    complex_dim: int
    f: tuple
    h: tuple
    g: tuple
    g_full: tuple

    def as_dict(self) -> dict:
        return {
            "dim": self.complex_dim,
            "f": list(self.f),
            "h": list(self.h),
            "g": list(self.g),
            "g_full": list(self.g_full),
        }


def face_vectors(X: SimplicialComplex) -> FaceVectorBundle:
    d = X.dim
    f = f_vector(X)
    h = h_vector(f, d)
    return FaceVectorBundle(d, f, h, g_vector(h), g_full(h))


# -- stackedness ----------------------------------------------------------


@dataclass(frozen=True)
class StackednessReport:
    """Answer to "are all (d-k-1)-faces on the boundary?" for one ``k``.

    ``witnesses`` are the interior faces of dimension exactly ``d - k - 1``.
    ``k_min`` is the least ``k`` for which the property holds.
    """

    dim: int
    k: int
    stacked: bool
    witnesses: tuple
    k_min: int | None
    interior_faces: frozenset = field(repr=False, compare=False)

    def offending_faces(self, k: int | None = None) -> list[Face]:
        """Interior faces of dimension at most ``d - k - 1`` (diagnostics)."""
        k = self.k if k is None else k
        top = self.dim - k - 1
        return sorted((f for f in self.interior_faces if len(f) - 1 <= top), key=lambda f: (len(f), f))

    def __bool__(self) -> bool:
        return self.stacked

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "k": self.k,
            "k_min": self.k_min,
            "stacked": self.stacked,
            "witnesses": [list(w) for w in self.witnesses],
        }


def _interior_by_dim(interior, d):
    levels = [[] for _ in range(d + 1)]
    for f in interior:
        levels[len(f) - 1].append(f)
    return levels


def is_k_stacked(S: SimplicialComplex, k: int) -> StackednessReport:
    if not S.is_pure:
        raise NotPure("stackedness needs a pure complex")
    d = S.dim
    if not 0 <= k <= d:
        raise ValueError(f"k must lie in [0, {d}], got {k}")
    dec = boundary_decomposition(S)
    if dec.boundary.is_void:
        raise NoBoundary("complex has empty boundary")
    levels = _interior_by_dim(dec.interior_faces, d)

    def offending(kk):
        t = d - kk - 1
        return levels[t] if t >= 0 else []

    k_min = next((kk for kk in range(d + 1) if not offending(kk)), None)
    witnesses = tuple(sorted(offending(k)))
    return StackednessReport(d, k, not witnesses, witnesses, k_min, dec.interior_faces)


@dataclass(frozen=True)
class G3Report:
    """g-vector of the boundary together with the 2-stackedness flag."""

    dim: int
    g: tuple
    g_full: tuple
    stacked2: bool

    @property
    def g3(self) -> int | None:
        return self.g_full[3] if len(self.g_full) > 3 else None

    def __iter__(self):
        return iter((self.g, self.stacked2))

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "g": list(self.g),
            "g3": self.g3,
            "g_full": list(self.g_full),
            "stacked2": self.stacked2,
        }


def g3_boundary_check(S: SimplicialComplex) -> G3Report:
    """g-vector of the boundary of ``S`` and whether ``S`` is 2-stacked.

    Below dimension 6 a ``UserWarning`` is issued; the computation proceeds.
    """
    if not S.is_pure:
        raise NotPure("g3 check needs a pure complex")
    d = S.dim
    if d < 6:
        warnings.warn(f"dimension {d} < 6 is outside the regime of the g3 statement", stacklevel=2)
    if d < 2:
        raise ValueError("2-stackedness needs dimension at least 2")
    bd = boundary_decomposition(S).boundary
    if bd.is_void:
        raise NoBoundary("complex has empty boundary")
    if not is_closed_pseudomanifold(bd):
        raise NotPseudomanifold("boundary is not a closed pseudomanifold")
    fv = face_vectors(bd)
    return G3Report(d, fv.g, fv.g_full, is_k_stacked(S, 2).stacked)
