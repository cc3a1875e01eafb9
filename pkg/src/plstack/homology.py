"""Integral simplicial homology through Smith normal form.

Everything is exact: Python integers, no floating point, no modular shortcuts.
Boundary operators use the sorted-position sign convention, i.e. omitting the
vertex in position ``i`` of a face contributes ``(-1) ** i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Sequence

from .complex import SimplicialComplex, is_closed_pseudomanifold
from .errors import NoBoundaryExpected, NotPure


class IntegerMatrix:
    """Sparse integer matrix; reading outside the shape raises ``IndexError``."""

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple, int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        self._entries: dict[tuple, int] = {}
        for (i, j), v in (entries or {}).items():
            self._check(i, j)
            if v:
                self._entries[(i, j)] = int(v)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged rows")
        return cls(rows, cols, {(i, j): v for i, r in enumerate(data) for j, v in enumerate(r) if v})

    def _check(self, i, j):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols} matrix")

    def __getitem__(self, key) -> int:
        i, j = key
        self._check(i, j)
        return self._entries.get((i, j), 0)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def items(self):
        return self._entries.items()

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()})

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list] = {}
        for (k, j), v in other._entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc: dict[tuple, int] = {}
        for (i, k), a in self._entries.items():
            for j, b in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return IntegerMatrix(self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


# -- Smith normal form ----------------------------------------------------


@dataclass(frozen=True)
class SNFResult:
    invariant_factors: tuple

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.invariant_factors if d > 1)


class _SparseEliminator:
    """Row/column elimination on a dict-of-rows with a column index."""

    def __init__(self, M: IntegerMatrix):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set] = {}
        for (i, j), v in M.items():
            self.rows.setdefault(i, {})[j] = v
            self.cols.setdefault(j, set()).add(i)

    def _set(self, i, j, v):
        if v:
            self.rows.setdefault(i, {})[j] = v
            self.cols.setdefault(j, set()).add(i)
        else:
            row = self.rows.get(i)
            if row is not None and j in row:
                del row[j]
                if not row:
                    del self.rows[i]
                col = self.cols[j]
                col.discard(i)
                if not col:
                    del self.cols[j]

    def add_row(self, dst, src, mult):
        """row[dst] += mult * row[src]"""
        dst_row = self.rows.get(dst, {})
        for j, v in list(self.rows[src].items()):
            self._set(dst, j, dst_row.get(j, 0) + mult * v)
            dst_row = self.rows.get(dst, {})

    def add_col(self, dst, src, mult):
        """col[dst] += mult * col[src]"""
        for i in list(self.cols[src]):
            v = self.rows[i][src]
            self._set(i, dst, self.rows.get(i, {}).get(dst, 0) + mult * v)

    def remove(self, i, j):
        for jj in list(self.rows.get(i, {})):
            self._set(i, jj, 0)
        for ii in list(self.cols.get(j, ())):
            self._set(ii, j, 0)

    def pick_pivot(self):
        best = None
        best_key = None
        for i, row in self.rows.items():
            ri = len(row)
            for j, v in row.items():
                key = (abs(v), (ri - 1) * (len(self.cols[j]) - 1), i, j)
                if best_key is None or key < best_key:
                    best_key, best = key, (i, j)
                    if key[0] == 1 and key[1] == 0:
                        return best
        return best

    def diagonalize(self) -> list[int]:
        diag = []
        while self.rows:
            r, c = self.pick_pivot()
            while True:
                p = self.rows[r][c]
                clean = True
                for r2 in sorted(self.cols[c] - {r}):
                    q = self.rows[r2][c] // p
                    self.add_row(r2, r, -q)
                    if self.rows.get(r2, {}).get(c):
                        clean = False
                for c2 in sorted(set(self.rows[r]) - {c}):
                    q = self.rows[r][c2] // p
                    self.add_col(c2, c, -q)
                    if self.rows.get(r, {}).get(c2):
                        clean = False
                if clean:
                    break
                # a remainder strictly smaller than |p| survived; pivot on it
                cand = [(abs(self.rows[r2][c]), r2, c) for r2 in self.cols[c] if r2 != r]
                cand += [(abs(v), r, c2) for c2, v in self.rows[r].items() if c2 != c]
                _, r, c = min(cand)
            diag.append(abs(self.rows[r][c]))
            self.remove(r, c)
        return diag


def _diagonal_to_chain(diag: Iterable[int]) -> tuple:
    """Invariant factors of a diagonal matrix with the given nonzero entries."""
    ones = 0
    rest = []
    for d in diag:
        if d == 1:
            ones += 1
        else:
            rest.append(d)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            g = gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    return (1,) * ones + tuple(rest)


def smith_normal_form(M: IntegerMatrix) -> SNFResult:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of ``M``."""
    if isinstance(M, (list, tuple)):
        M = IntegerMatrix.from_dense(M)
    return SNFResult(_diagonal_to_chain(_SparseEliminator(M).diagonalize()))


# -- simplicial homology --------------------------------------------------


def boundary_matrix(X: SimplicialComplex, k: int) -> IntegerMatrix:
    """Boundary operator from k-chains to (k-1)-chains, faces in sorted order."""
    if not 1 <= k <= X.dim:
        raise ValueError(f"k must lie in [1, {X.dim}], got {k}")
    lower = {f: i for i, f in enumerate(X.sorted_faces(k - 1))}
    entries = {}
    for j, f in enumerate(X.sorted_faces(k)):
        for pos in range(len(f)):
            entries[(lower[f[:pos] + f[pos + 1:]], j)] = -1 if pos % 2 else 1
    return IntegerMatrix(len(lower), len(X.faces(k)), entries)


@dataclass(frozen=True)
class HomologyProfile:
    """Unreduced integral homology: Betti number and torsion factors per degree."""

    betti: tuple
    torsion: tuple

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def as_dict(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}


def homology(X: SimplicialComplex) -> HomologyProfile:
    if X.is_void:
        raise ValueError("homology of the void complex is not reported")
    d = X.dim
    snf = {k: smith_normal_form(boundary_matrix(X, k)) for k in range(1, d + 1)}
    ranks = {k: s.rank for k, s in snf.items()}
    betti = []
    torsion = []
    for i in range(d + 1):
        betti.append(len(X.faces(i)) - ranks.get(i, 0) - ranks.get(i + 1, 0))
        torsion.append(snf[i + 1].torsion if i + 1 in snf else ())
    return HomologyProfile(tuple(betti), tuple(torsion))


def sphere_profile(n: int) -> HomologyProfile:
    if n == 0:
        return HomologyProfile((2,), ((),))
    return HomologyProfile((1,) + (0,) * (n - 1) + (1,), ((),) * (n + 1))


@dataclass(frozen=True)
class SphereCheck:
    is_sphere: bool
    profile: HomologyProfile

    def __bool__(self) -> bool:
        return self.is_sphere


def is_homology_sphere(X: SimplicialComplex, n: int) -> SphereCheck:
    """Compare the homology of a closed pure n-complex with that of the n-sphere."""
    if not X.is_pure:
        raise NotPure("homology sphere test needs a pure complex")
    if X.dim != n:
        raise ValueError(f"complex has dimension {X.dim}, expected {n}")
    if not is_closed_pseudomanifold(X):
        raise NoBoundaryExpected("complex is not a closed pseudomanifold")
    profile = homology(X)
    return SphereCheck(profile == sphere_profile(n), profile)
