"""Finitely generated commutative monoids in coordinate form.

A :class:`CanonicalMonoid` ``(n, J, L)`` denotes the image of
``{v in Z^n : v_i >= 0 for i not in J}`` in ``Z^n / L``, where every vector of
``L`` is supported on the inverted coordinates ``J``. Such a monoid splits as
``(Z^J / L) + N^(complement of J)``, and quotients, faces, localizations and
group completions all have coordinate closed forms.

Coordinate index sets (``J``, face coordinates) are 1-based; vectors are plain
0-indexed tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidInput, UnsupportedMonoid
from .lattice import (
    AbGroupPresentation,
    IntLattice,
    coordinate_lattice,
    hnf,
    lattice_member,
    lattice_sum,
    normal_form,
    quotient_presentation,
    rational_point,
    solve_integer,
    zero_lattice,
)


def normalize(rank: int, inverted: Iterable[int], relations: IntLattice):
    """Close ``inverted`` under the units witnessed by the relation lattice.

    Coordinate ``i`` outside ``J`` is a unit exactly when some lattice vector is
    non-negative off ``J`` and positive at ``i``. Basis vectors are tried first;
    if the lattice still reaches outside ``J`` an exact feasibility test over
    all lattice vectors settles the remaining coordinates. Returns the enlarged
    inverted set; the lattice itself is unchanged.
    """
    J = set(inverted)
    B = relations.basis
    changed = True
    while changed:
        changed = False
        for g in B:
            for h in (g, tuple(-x for x in g)):
                off = [(i + 1, x) for i, x in enumerate(h) if i + 1 not in J]
                if all(x >= 0 for _, x in off) and any(x > 0 for _, x in off):
                    J.update(i for i, x in off if x > 0)
                    changed = True
        if changed or _supported(relations, J):
            continue
        off = [i for i in range(rank) if i + 1 not in J]
        base = [(tuple(row[j] for row in B), 0) for j in off]
        for i in off:
            target = (tuple(row[i] for row in B), 1)
            if rational_point(base + [target], len(B)) is not None:
                J.add(i + 1)
                changed = True
    return frozenset(J)


def _supported(relations: IntLattice, J) -> bool:
    return all(x == 0 for g in relations.basis for i, x in enumerate(g) if i + 1 not in J)


@dataclass(frozen=True)
class CanonicalMonoid:
    rank: int
    inverted: frozenset
    relations: IntLattice

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidInput("monoid rank must be at least 1")
        if not self.inverted <= set(range(1, self.rank + 1)):
            raise InvalidInput(f"inverted coordinates {sorted(self.inverted)} out of range")
        if self.relations.ambient_rank != self.rank:
            raise InvalidInput("relation lattice has the wrong ambient rank")
        if not _supported(self.relations, self.inverted):
            raise UnsupportedMonoid(
                "relation lattice has support outside the inverted coordinates: "
                f"{[list(g) for g in self.relations.basis]}, J={sorted(self.inverted)}"
            )

    @property
    def free_coords(self) -> tuple:
        """Non-inverted coordinates, ascending."""
        return tuple(i for i in range(1, self.rank + 1) if i not in self.inverted)

    def elem(self, coords: Sequence[int]) -> "MonoidElem":
        return MonoidElem(self, tuple(int(x) for x in coords))

    def zero(self) -> "MonoidElem":
        return MonoidElem(self, (0,) * self.rank)

    def basis_elem(self, i: int) -> "MonoidElem":
        return self.elem(tuple(int(j == i - 1) for j in range(self.rank)))

    def is_group(self) -> bool:
        return len(self.inverted) == self.rank

    def is_free(self) -> bool:
        return not self.inverted

    def is_trivial(self) -> bool:
        return self.is_group() and units(self).is_trivial()

    def describe(self) -> str:
        """Human-readable isomorphism type, e.g. ``Z + Z + N``."""
        parts = []
        if self.inverted and not units(self).is_trivial():
            parts.append(str(units(self)))
        k = len(self.free_coords)
        if k:
            parts.append("N" if k == 1 else f"N^{k}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "inverted": sorted(self.inverted),
            "relations": {"basis": [list(g) for g in self.relations.basis]},
        }

    @classmethod
    def from_json(cls, data: dict) -> "CanonicalMonoid":
        basis = data.get("relations", {}).get("basis", [])
        return make(data["rank"], data.get("inverted", []), basis)


@dataclass(frozen=True, eq=False)
class MonoidElem:
    owner: CanonicalMonoid
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.owner.rank:
            raise InvalidInput(f"element {self.coords} has wrong length for rank {self.owner.rank}")
        for i in self.owner.free_coords:
            if self.coords[i - 1] < 0:
                raise InvalidInput(f"element {self.coords} is negative on free coordinate {i}")

    @property
    def normal(self) -> tuple:
        return normal_form(self.coords, self.owner.relations)

    def __add__(self, other: "MonoidElem") -> "MonoidElem":
        return add(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonoidElem):
            return NotImplemented
        return elem_eq(self, other)

    def __hash__(self) -> int:
        return hash((self.owner, self.normal))

    def is_unit(self) -> bool:
        return all(self.coords[i - 1] == 0 for i in self.owner.free_coords)

    def support(self) -> frozenset:
        """Free coordinates on which the element is positive."""
        return frozenset(i for i in self.owner.free_coords if self.coords[i - 1] > 0)

    def to_json(self) -> dict:
        return {"coords": list(self.coords)}

    def __repr__(self) -> str:
        return f"MonoidElem{self.coords}"


@dataclass(frozen=True)
class SubmonoidGens:
    owner: CanonicalMonoid
    gens: tuple = ()

    def __post_init__(self):
        for g in self.gens:
            if g.owner != self.owner:
                raise InvalidInput("submonoid generator belongs to another monoid")

    def coords(self) -> list:
        return [g.coords for g in self.gens]

    def support(self) -> frozenset:
        return frozenset().union(*(g.support() for g in self.gens))


@dataclass(frozen=True)
class FaceDesc:
    owner: CanonicalMonoid
    coords: frozenset

    def __post_init__(self):
        if not self.coords <= set(self.owner.free_coords):
            raise InvalidInput(f"face coordinates {sorted(self.coords)} are not free coordinates")

    def contains(self, x: MonoidElem) -> bool:
        return x.support() <= self.coords

    def to_json(self) -> dict:
        return {"coords": sorted(self.coords)}


def submonoid(M: CanonicalMonoid, vectors: Iterable[Sequence[int]]) -> SubmonoidGens:
    return SubmonoidGens(M, tuple(M.elem(v) for v in vectors))


# -- construction ---------------------------------------------------------------

def make_free(n: int) -> CanonicalMonoid:
    if n < 1:
        raise InvalidInput("rank must be at least 1")
    return CanonicalMonoid(n, frozenset(), zero_lattice(n))


def make(n: int, inverted: Iterable[int] = (), relation_gens: Iterable[Sequence[int]] = ()) -> CanonicalMonoid:
    if n < 1:
        raise InvalidInput("rank must be at least 1")
    L = hnf(relation_gens, n)
    J = normalize(n, inverted, L)
    return CanonicalMonoid(n, J, L)


def trivial_monoid() -> CanonicalMonoid:
    return CanonicalMonoid(1, frozenset({1}), coordinate_lattice(1, [1]))


def project(M: CanonicalMonoid):
    """Drop coordinates ``j`` with ``e_j`` in the relation lattice.

    Returns ``(monoid, kept)`` where ``kept`` lists the surviving original
    coordinates ascending; the induced isomorphism restricts representatives to
    ``kept``. A monoid with nothing left is the trivial monoid with ``kept=()``.
    """
    killed = [j for j in sorted(M.inverted)
              if lattice_member(tuple(int(i == j - 1) for i in range(M.rank)), M.relations)]
    kept = tuple(i for i in range(1, M.rank + 1) if i not in killed)
    if not kept:
        return trivial_monoid(), ()
    if not killed:
        return M, kept
    idx = [i - 1 for i in kept]
    L = hnf([tuple(g[i] for i in idx) for g in M.relations.basis], len(kept))
    J = frozenset(kept.index(j) + 1 for j in M.inverted if j in kept)
    return CanonicalMonoid(len(kept), J, L), kept


def restrict(x: MonoidElem, target: CanonicalMonoid, kept: Sequence[int]) -> MonoidElem:
    """Image of ``x`` under the coordinate projection returned by :func:`project`."""
    if not kept:
        return target.zero()
    return target.elem(tuple(x.coords[i - 1] for i in kept))


def is_isomorphic(M1: CanonicalMonoid, M2: CanonicalMonoid) -> bool:
    """Same units group and same free rank; complete for the coordinate class."""
    return (units(M1) == units(M2)
            and len(M1.free_coords) == len(M2.free_coords))


# -- elements -------------------------------------------------------------------

def _same_owner(a: MonoidElem, b: MonoidElem):
    if a.owner != b.owner:
        raise InvalidInput("elements belong to different monoids")


def elem_eq(a: MonoidElem, b: MonoidElem) -> bool:
    _same_owner(a, b)
    return lattice_member(tuple(x - y for x, y in zip(a.coords, b.coords)), a.owner.relations)


def add(a: MonoidElem, b: MonoidElem) -> MonoidElem:
    _same_owner(a, b)
    return MonoidElem(a.owner, tuple(x + y for x, y in zip(a.coords, b.coords)))


# -- units, faces ---------------------------------------------------------------

def units(M: CanonicalMonoid) -> AbGroupPresentation:
    J = sorted(M.inverted)
    if not J:
        return AbGroupPresentation(0, ())
    idx = [j - 1 for j in J]
    L = hnf([tuple(g[i] for i in idx) for g in M.relations.basis], len(J))
    return quotient_presentation(len(J), L)


def is_reduced(M: CanonicalMonoid) -> bool:
    return not M.inverted


def reduced_quotient(M: CanonicalMonoid) -> CanonicalMonoid:
    k = len(M.free_coords)
    return make_free(k) if k else trivial_monoid()


def face_generated(M: CanonicalMonoid, S: Iterable[MonoidElem]) -> FaceDesc:
    K = set()
    for s in S:
        if s.owner != M:
            raise InvalidInput("element belongs to another monoid")
        K |= s.support()
    return FaceDesc(M, frozenset(K))


def faces(M: CanonicalMonoid) -> list:
    free = M.free_coords
    out = []
    for r in range(len(free) + 1):
        for K in itertools.combinations(free, r):
            out.append(FaceDesc(M, frozenset(K)))
    return out


def face_to_submonoid(F: FaceDesc) -> SubmonoidGens:
    M = F.owner
    gens = []
    for j in sorted(M.inverted):
        e = M.basis_elem(j)
        gens += [e, M.elem(tuple(-x for x in e.coords))]
    gens += [M.basis_elem(k) for k in sorted(F.coords)]
    return SubmonoidGens(M, tuple(gens))


# -- quotients, localization ----------------------------------------------------

def quotient_by_submonoid(M: CanonicalMonoid, N: SubmonoidGens, project_result: bool = True) -> CanonicalMonoid:
    """``M / N``.

    With ``project_result=False`` the result keeps ambient rank ``M.rank`` and
    the quotient map is the identity on coordinates; otherwise coordinates that
    became zero are dropped (see :func:`project`).
    """
    if N.owner != M:
        raise InvalidInput("submonoid belongs to another monoid")
    L = lattice_sum(M.relations, hnf(N.coords(), M.rank))
    J = normalize(M.rank, M.inverted, L)
    Q = CanonicalMonoid(M.rank, J, L)
    return project(Q)[0] if project_result else Q


def quotient_by_face(M: CanonicalMonoid, F: FaceDesc) -> CanonicalMonoid:
    if F.owner != M:
        raise InvalidInput("face belongs to another monoid")
    k = len(M.free_coords) - len(F.coords)
    return make_free(k) if k else trivial_monoid()


def localize(M: CanonicalMonoid, S: Iterable[MonoidElem]) -> CanonicalMonoid:
    F = face_generated(M, S)
    return CanonicalMonoid(M.rank, M.inverted | F.coords, M.relations)


def localization_map(x: MonoidElem, target: CanonicalMonoid) -> MonoidElem:
    return target.elem(x.coords)


def group_completion(M: CanonicalMonoid) -> AbGroupPresentation:
    return quotient_presentation(M.rank, M.relations)


def quotient_witness(x: MonoidElem, y: MonoidElem, N: SubmonoidGens):
    """Elements ``n, n'`` of ``<N>`` with ``x + n == y + n'`` in ``M``, or None.

    Returned as coefficient tuples over ``N.gens``: ``(c_n, c_n_prime)``.
    """
    M = N.owner
    _same_owner(x, y)
    gens = N.coords() + list(M.relations.basis)
    diff = tuple(a - b for a, b in zip(x.coords, y.coords))
    c = solve_integer(diff, gens, M.rank) if gens else (() if not any(diff) else None)
    if c is None:
        return None
    c = c[: len(N.gens)]
    # x - y = sum c_g g (mod L), so x + sum_{c<0} |c| g = y + sum_{c>0} c g
    return tuple(max(-k, 0) for k in c), tuple(max(k, 0) for k in c)


def combine(N: SubmonoidGens, coefs: Sequence[int]) -> MonoidElem:
    M = N.owner
    v = [0] * M.rank
    for k, g in zip(coefs, N.gens):
        v = [a + k * b for a, b in zip(v, g.coords)]
    return M.elem(v)


# -- cofinal / subtractive ------------------------------------------------------

def is_cofinal(N: SubmonoidGens) -> bool:
    return set(N.owner.free_coords) <= N.support()


@dataclass(frozen=True)
class SubtractiveResult:
    holds: bool
    bound: int
    counterexample: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return f"subtractive (verified up to bound {self.bound})"
        x, y = self.counterexample
        return f"not subtractive: x={x}, x+y in N, y={y} not in N"


def _require_free(M: CanonicalMonoid, what: str):
    if not M.is_free():
        raise UnsupportedMonoid(f"{what} requires a free monoid, got inverted {sorted(M.inverted)}")


def submonoid_member(N: SubmonoidGens, v: Sequence[int]) -> bool:
    """Membership of ``v`` in ``<N>`` for a free ambient monoid."""
    _require_free(N.owner, "submonoid membership")
    gens = tuple(sorted({g.coords for g in N.gens if any(g.coords)}))
    return _reachable(gens, tuple(v))


@lru_cache(maxsize=None)
def _reachable(gens: tuple, v: tuple) -> bool:
    if not any(v):
        return True
    if any(x < 0 for x in v):
        return False
    for g in gens:
        w = tuple(a - b for a, b in zip(v, g))
        if all(x >= 0 for x in w) and _reachable(gens, w):
            return True
    return False


def is_subtractive(N: SubmonoidGens, bound: int = 6) -> SubtractiveResult:
    """Exhaustive check of ``x, x+y in N => y in N`` over the box ``[0, bound]^n``."""
    if bound < 1:
        raise InvalidInput("bound must be at least 1")
    M = N.owner
    _require_free(M, "is_subtractive")
    box = list(itertools.product(range(bound + 1), repeat=M.rank))
    members = [x for x in box if submonoid_member(N, x)]
    for y in box:
        if submonoid_member(N, y):
            continue
        for x in members:
            if submonoid_member(N, tuple(a + b for a, b in zip(x, y))):
                return SubtractiveResult(False, bound, (x, y))
    return SubtractiveResult(True, bound)


def phi_subgroup(N: SubmonoidGens) -> IntLattice:
    """Subgroup of ``gp M = Z^n`` generated by ``N``."""
    _require_free(N.owner, "phi_subgroup")
    return hnf(N.coords(), N.owner.rank)


def psi_member(H: IntLattice, v: MonoidElem) -> bool:
    """Whether ``v`` lies in the preimage of ``H`` under ``M -> gp M``."""
    _require_free(v.owner, "psi_member")
    return lattice_member(v.coords, H)
