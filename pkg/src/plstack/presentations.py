"""Finite group presentations and the perfect-group pipeline.

Generators are single lowercase letters.  A word is stored as a tuple of
``(generator, +1 | -1)`` pairs; in strings an uppercase letter is the inverse
of its lowercase generator, so ``"abAB"`` is the commutator of ``a`` and ``b``.
"""
from __future__ import annotations

import itertools
import os
import string
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import SimplicialComplex
from .errors import BudgetExceeded, EmptyRelator, ParseError, UnknownGenerator
from .homology import IntegerMatrix, homology, smith_normal_form

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "PLSTACK_BUDGET"

Word = tuple  # tuple[tuple[str, int], ...]


def free_reduce(word: Iterable[tuple]) -> Word:
    out: list[tuple] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def parse_word(text: str) -> Word:
    word = []
    for ch in text:
        if ch in string.ascii_lowercase:
            word.append((ch, 1))
        elif ch in string.ascii_uppercase:
            word.append((ch.lower(), -1))
        else:
            raise ParseError(f"invalid character {ch!r} in relator {text!r}")
    return tuple(word)


def format_word(word: Word) -> str:
    return "".join(g if e > 0 else g.upper() for g, e in word)


def inverse(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def commutator(x: str, y: str) -> Word:
    return ((x, 1), (y, 1), (x, -1), (y, -1))


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if not (isinstance(g, str) and len(g) == 1 and g in string.ascii_lowercase):
                raise ParseError(f"generator {g!r} is not a single lowercase letter")
        if len(set(gens)) != len(gens):
            raise ParseError(f"repeated generator in {list(gens)}")
        rels = []
        for r in self.relators:
            w = parse_word(r) if isinstance(r, str) else tuple((g, int(e)) for g, e in r)
            for g, e in w:
                if g not in gens:
                    raise UnknownGenerator(f"relator {format_word(w)!r} uses undeclared generator {g!r}")
                if e not in (1, -1):
                    raise ParseError(f"exponent {e} is not +-1")
            rels.append(free_reduce(w))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def from_dict(cls, data: dict) -> "GroupPresentation":
        return cls(tuple(data.get("generators", ())), tuple(data.get("relators", ())))

    def as_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [format_word(r) for r in self.relators],
        }

    def __str__(self) -> str:
        return f"< {', '.join(self.generators)} | {', '.join(format_word(r) for r in self.relators)} >"


def a5_presentation() -> GroupPresentation:
    """The alternating group A5 as the (2,3,5) triangle group."""
    return GroupPresentation(("a", "b"), ("aa", "bbb", "ababababab"))


def exponent_matrix(P: GroupPresentation) -> IntegerMatrix:
    """Relator-by-generator matrix of exponent sums."""
    col = {g: j for j, g in enumerate(P.generators)}
    entries: dict[tuple, int] = {}
    for i, r in enumerate(P.relators):
        for g, e in r:
            if g not in col:
                raise UnknownGenerator(g)
            entries[(i, col[g])] = entries.get((i, col[g]), 0) + e
    return IntegerMatrix(len(P.relators), len(P.generators), entries)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + sum Z/t``."""

    free_rank: int
    torsion: tuple = ()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


AbelianizationResult = AbelianGroup


def abelianization(P: GroupPresentation) -> AbelianGroup:
    snf = smith_normal_form(exponent_matrix(P))
    return AbelianGroup(len(P.generators) - snf.rank, snf.torsion)


def is_perfect(P: GroupPresentation) -> bool:
    return abelianization(P).is_trivial


def is_balanced(P: GroupPresentation) -> bool:
    return len(P.generators) == len(P.relators)


def product_presentation(P: GroupPresentation, Q: GroupPresentation) -> GroupPresentation:
    """Presentation of the direct product; ``Q`` is renamed if alphabets clash."""
    if set(P.generators) & set(Q.generators):
        pool = [c for c in string.ascii_lowercase if c not in P.generators]
        if len(pool) < len(Q.generators):
            raise ValueError("not enough single-letter generators for the product")
        rename = dict(zip(Q.generators, pool))
    else:
        rename = {g: g for g in Q.generators}
    q_gens = tuple(rename[g] for g in Q.generators)
    q_rels = tuple(tuple((rename[g], e) for g, e in r) for r in Q.relators)
    comms = tuple(commutator(x, y) for x in P.generators for y in q_gens)
    return GroupPresentation(P.generators + q_gens, P.relators + q_rels + comms)


def power_presentation(P: GroupPresentation, n: int) -> GroupPresentation:
    """n-fold direct product of ``P`` with itself."""
    if n < 1:
        raise ValueError("power must be at least 1")
    out = P
    for _ in range(n - 1):
        out = product_presentation(out, P)
    return out


# -- presentation complex -------------------------------------------------


@dataclass(frozen=True)
class CellularHomology:
    h0: AbelianGroup
    h1: AbelianGroup
    h2: AbelianGroup

    def as_profile(self):
        from .homology import HomologyProfile

        return HomologyProfile(
            (self.h0.free_rank, self.h1.free_rank, self.h2.free_rank),
            (self.h0.torsion, self.h1.torsion, self.h2.torsion),
        )

    def as_dict(self) -> dict:
        return {"H0": self.h0.as_dict(), "H1": self.h1.as_dict(), "H2": self.h2.as_dict()}


def presentation_cellular_homology(P: GroupPresentation) -> CellularHomology:
    """Homology of the one-vertex presentation 2-complex.

    The chain complex is ``Z^r -> Z^g -> Z`` with the first map the transposed
    exponent matrix and the second map zero.
    """
    snf = smith_normal_form(exponent_matrix(P))
    g, r = len(P.generators), len(P.relators)
    return CellularHomology(
        AbelianGroup(1),
        AbelianGroup(g - snf.rank, snf.torsion),
        AbelianGroup(r - snf.rank),
    )


def presentation_complex_simplicial(P: GroupPresentation) -> SimplicialComplex:
    """A simplicial complex realizing the presentation complex of ``P``.

    Vertex 0 is the base point.  Generator number ``t`` is a triangle loop
    ``0, 2t+1, 2t+2``.  Each relator spells a closed edge walk ``w_0 ... w_{m-1}``
    in that graph; its disk is a collar of triangles ``{w_p, w_p+1, r_p}`` and
    ``{w_p+1, r_p, r_p+1}`` on a fresh ring ``r_0 ... r_{m-1}``, with the ring
    coned off from a fresh centre.  The fresh ring keeps all simplices distinct
    even when the walk repeats edges.
    """
    index = {g: t for t, g in enumerate(P.generators)}
    facets: list[tuple] = []
    for t in range(len(P.generators)):
        a, b = 2 * t + 1, 2 * t + 2
        facets += [(0, a), (a, b), (0, b)]
    if not facets:
        facets.append((0,))
    nxt = 2 * len(P.generators) + 1
    for r in P.relators:
        if not r:
            raise EmptyRelator("relators must be nonempty after free reduction")
        walk: list[int] = []
        for g, e in r:
            t = index[g]
            loop = [0, 2 * t + 1, 2 * t + 2] if e > 0 else [0, 2 * t + 2, 2 * t + 1]
            walk += loop
        m = len(walk)
        ring = list(range(nxt, nxt + m))
        centre = nxt + m
        nxt = centre + 1
        for p in range(m):
            q = (p + 1) % m
            facets.append((walk[p], walk[q], ring[p]))
            facets.append((walk[q], ring[p], ring[q]))
            facets.append((centre, ring[p], ring[q]))
    return SimplicialComplex(facets)


def presentation_complex_homology(P: GroupPresentation):
    return homology(presentation_complex_simplicial(P))


# -- homomorphism counting ------------------------------------------------


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple:
    """``(p q)(x) = p(q(x))``"""
    return tuple(p[x] for x in q)


class PermutationGroupTable:
    """Finite permutation group with explicit elements and multiplication table.

    Permutations are tuples over ``range(n)``.  Closure and the presence of the
    identity are verified on construction.
    """

    def __init__(self, elements: Iterable[Sequence[int]]):
        elems = [tuple(p) for p in elements]
        if not elems:
            raise ValueError("a group needs at least the identity")
        n = len(elems[0])
        for p in elems:
            if len(p) != n or sorted(p) != list(range(n)):
                raise ValueError(f"{p} is not a permutation of range({n})")
        if len(set(elems)) != len(elems):
            raise ValueError("repeated group element")
        ident = tuple(range(n))
        pos = {p: i for i, p in enumerate(elems)}
        if ident not in pos:
            raise ValueError("identity missing")
        table = []
        for p in elems:
            row = []
            for q in elems:
                pq = _compose(p, q)
                if pq not in pos:
                    raise ValueError(f"not closed: {p} * {q} = {pq}")
                row.append(pos[pq])
            table.append(row)
        self.elements = elems
        self.degree = n
        self.identity = pos[ident]
        self.table = table
        self.inverse = [row.index(self.identity) for row in table]

    def __len__(self) -> int:
        return len(self.elements)

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], degree: int | None = None) -> "PermutationGroupTable":
        gens = [tuple(g) for g in gens]
        if degree is None:
            degree = len(gens[0]) if gens else 1
        ident = tuple(range(degree))
        seen = {ident}
        order = [ident]
        frontier = [ident]
        while frontier:
            new = []
            for p in frontier:
                for g in gens:
                    q = _compose(p, g)
                    if q not in seen:
                        seen.add(q)
                        order.append(q)
                        new.append(q)
            frontier = new
        return cls(sorted(order))

    @classmethod
    def trivial(cls) -> "PermutationGroupTable":
        return cls([(0,)])

    @classmethod
    def cyclic(cls, n: int) -> "PermutationGroupTable":
        return cls.from_generators([tuple((i + 1) % n for i in range(n))], n)

    @classmethod
    def symmetric(cls, n: int) -> "PermutationGroupTable":
        return cls(sorted(itertools.permutations(range(n))))

    @classmethod
    def alternating(cls, n: int) -> "PermutationGroupTable":
        def even(p):
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
            return inv % 2 == 0

        return cls(sorted(p for p in itertools.permutations(range(n)) if even(p)))

    @classmethod
    def direct_product(cls, A: "PermutationGroupTable", B: "PermutationGroupTable") -> "PermutationGroupTable":
        shift = A.degree
        return cls(p + tuple(x + shift for x in q) for p in A.elements for q in B.elements)

    @classmethod
    def from_name(cls, name: str) -> "PermutationGroupTable":
        """``"A5"``, ``"S4"``, ``"C6"`` or ``"trivial"``."""
        name = name.strip()
        if name.lower() in ("1", "trivial"):
            return cls.trivial()
        kind, digits = name[:1].upper(), name[1:]
        if not digits.isdigit():
            raise ValueError(f"unknown group name {name!r}")
        n = int(digits)
        if kind == "A":
            return cls.alternating(n)
        if kind == "S":
            return cls.symmetric(n)
        if kind == "C":
            return cls.cyclic(n)
        raise ValueError(f"unknown group name {name!r}")


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def count_homomorphisms(P: GroupPresentation, T: PermutationGroupTable, budget: int | None = None) -> int:
    """Number of generator assignments in ``T`` satisfying every relator.

    Backtracks over generators in declaration order and checks each relator as
    soon as all of its generators have images.  The budget caps the number of
    relator evaluations; exceeding it raises :class:`BudgetExceeded` carrying the
    worst-case evaluation count.
    """
    if budget is None:
        budget = default_budget()
    gens = P.generators
    index = {g: i for i, g in enumerate(gens)}
    order = len(T)
    buckets: list[list] = [[] for _ in gens]
    for r in P.relators:
        if not r:
            continue
        compiled = tuple((index[g], e) for g, e in r)
        buckets[max(i for i, _ in compiled)].append(compiled)
    for b in buckets:
        b.sort(key=len)
    required = sum(order ** (i + 1) * len(b) for i, b in enumerate(buckets))

    mul, inv, ident = T.table, T.inverse, T.identity
    images = [ident] * len(gens)
    spent = 0

    def holds(word) -> bool:
        x = ident
        for i, e in word:
            y = images[i]
            x = mul[x][y if e > 0 else inv[y]]
        return x == ident

    def search(depth: int) -> int:
        nonlocal spent
        if depth == len(gens):
            return 1
        total = 0
        rels = buckets[depth]
        for img in range(order):
            images[depth] = img
            ok = True
            for w in rels:
                spent += 1
                if spent > budget:
                    raise BudgetExceeded(required, budget)
                if not holds(w):
                    ok = False
                    break
            if ok:
                total += search(depth + 1)
        return total

    return search(0)
