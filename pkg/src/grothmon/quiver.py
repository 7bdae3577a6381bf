"""The length category mod kA_n for the linear quiver 1 <- 2 <- ... <- n.

Indecomposables are interval modules ``[lo, hi]`` with socle ``S_lo`` and top
``S_hi``; submodules are left-closed subintervals and quotients right-closed
ones. Hom and Ext between intervals are given by closed-form interval rules,
all of which are cross-checked against explicit F_2 linear algebra in
:mod:`grothmon.oracle`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import InvalidInput, NoExtension
from .lattice import IntLattice, hnf, lattice_member, rational_point
from .monoid import CanonicalMonoid, SubmonoidGens, make_free

MAX_VERTICES = 8


@dataclass(frozen=True)
class LinearAQuiver:
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise InvalidInput(f"n must lie in 1..{MAX_VERTICES}, got {self.n}")

    def intervals(self) -> list:
        return all_intervals(self.n)

    def arrows(self) -> list:
        """Arrows as (source, target) pairs."""
        return [(i + 1, i) for i in range(1, self.n)]


@dataclass(frozen=True, order=True)
class Interval:
    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise InvalidInput(f"invalid interval [{self.lo},{self.hi}]")

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    @property
    def support(self) -> frozenset:
        return frozenset(range(self.lo, self.hi + 1))

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"

    def to_json(self) -> list:
        return [self.lo, self.hi]


def all_intervals(n: int) -> list:
    return [Interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


@dataclass(frozen=True, order=True)
class ModuleObj:
    """A finite direct sum of interval modules, stored as a sorted tuple."""

    summands: tuple = ()

    @classmethod
    def of(cls, *intervals: Interval) -> "ModuleObj":
        return cls(tuple(sorted(intervals)))

    def __add__(self, other: "ModuleObj") -> "ModuleObj":
        return ModuleObj(tuple(sorted(self.summands + other.summands)))

    def __bool__(self) -> bool:
        return bool(self.summands)

    @property
    def total_dim(self) -> int:
        return sum(I.length for I in self.summands)

    def multiplicities(self) -> Counter:
        return Counter(self.summands)

    def __str__(self) -> str:
        return " + ".join(map(str, self.summands)) if self.summands else "0"

    def to_json(self) -> list:
        return [I.to_json() for I in self.summands]

    @classmethod
    def from_json(cls, data) -> "ModuleObj":
        return cls.of(*(Interval(*p) for p in data))


ZERO = ModuleObj()


def dim_vector(X: ModuleObj | Interval, n: int) -> tuple:
    items = [X] if isinstance(X, Interval) else X.summands
    v = [0] * n
    for I in items:
        if I.hi > n:
            raise InvalidInput(f"interval {I} exceeds n={n}")
        for k in range(I.lo, I.hi + 1):
            v[k - 1] += 1
    return tuple(v)


def modules_up_to(n: int, dim_bound: int) -> list:
    """All modules of total dimension at most ``dim_bound``, sorted."""
    ivs = all_intervals(n)
    out = []

    def rec(start, chosen, budget):
        out.append(ModuleObj(tuple(chosen)))
        for k in range(start, len(ivs)):
            if ivs[k].length <= budget:
                rec(k, chosen + [ivs[k]], budget - ivs[k].length)

    rec(0, [], dim_bound)
    return sorted(out, key=lambda X: (X.total_dim, X.summands))


# -- interval rules -------------------------------------------------------------

def submodules_of(I: Interval) -> list:
    """Submodules of ``I``: ``None`` (zero) then ``[lo, k]`` for ``k = lo..hi``."""
    return [None] + [Interval(I.lo, k) for k in range(I.lo, I.hi + 1)]


def quotients_of(I: Interval) -> list:
    """Quotients of ``I``: ``None`` (zero) then ``[k, hi]`` for ``k = hi..lo``."""
    return [None] + [Interval(k, I.hi) for k in range(I.hi, I.lo - 1, -1)]


def hom_nonzero(A: Interval, B: Interval) -> bool:
    return A.lo <= B.lo <= A.hi <= B.hi


def ext_dim(C: Interval, A: Interval) -> int:
    """dim Ext^1(C, A) for intervals (0 or 1)."""
    return int(A.lo < C.lo <= A.hi + 1 and A.hi < C.hi)


def ext_middle(C: Interval, A: Interval) -> ModuleObj:
    """Middle term of the non-split extension ``0 -> A -> E -> C -> 0``."""
    if not ext_dim(C, A):
        raise NoExtension(f"Ext^1({C}, {A}) = 0")
    parts = [Interval(A.lo, C.hi)]
    if C.lo <= A.hi:
        parts.append(Interval(C.lo, A.hi))
    return ModuleObj.of(*parts)


# -- torsionfree classes --------------------------------------------------------

def closure_violation(T: Iterable[Interval]):
    """First witness that ``T`` is not a torsionfree class, or None.

    Witnesses are ``("sub", I, J)`` (``J`` a missing submodule of ``I``) or
    ``("ext", C, A, J)`` (``J`` a missing summand of the non-split middle).
    """
    T = set(T)
    for I in sorted(T):
        for J in submodules_of(I)[1:]:
            if J not in T:
                return ("sub", I, J)
    for C in sorted(T):
        for A in sorted(T):
            if ext_dim(C, A):
                for J in ext_middle(C, A).summands:
                    if J not in T:
                        return ("ext", C, A, J)
    return None


def is_torsionfree_class(T: Iterable[Interval]) -> bool:
    return closure_violation(T) is None


def torsionfree_closure(T: Iterable[Interval]) -> frozenset:
    """Smallest torsionfree class containing ``T``."""
    cur = set(T)
    while True:
        w = closure_violation(cur)
        if w is None:
            return frozenset(cur)
        cur.add(w[-1])


def _class_key(T):
    return (len(T), sorted(T))


def enumerate_torsionfree_classes(n: int) -> list:
    """All torsionfree classes of mod kA_n, sorted by size then content.

    Every class is reached from the empty class by repeatedly adjoining one
    interval and closing, so a breadth-first search over closures is complete.
    """
    LinearAQuiver(n)
    ivs = all_intervals(n)
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for T in frontier:
            for I in ivs:
                if I in T:
                    continue
                U = torsionfree_closure(T | {I})
                if U not in seen:
                    seen.add(U)
                    nxt.append(U)
        frontier = nxt
    return sorted(seen, key=_class_key)


@dataclass(frozen=True)
class TorsionfreeClass:
    n: int
    intervals: frozenset

    def __post_init__(self):
        LinearAQuiver(self.n)
        for I in self.intervals:
            if I.hi > self.n:
                raise InvalidInput(f"interval {I} exceeds n={self.n}")

    def is_valid(self) -> bool:
        return is_torsionfree_class(self.intervals)

    def sorted(self) -> list:
        return sorted(self.intervals)

    def to_json(self) -> list:
        return [I.to_json() for I in self.sorted()]

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.sorted())) + "}"


# -- Serre subcategories --------------------------------------------------------

@dataclass(frozen=True)
class SerreSub:
    n: int
    simples: frozenset

    def intervals(self) -> frozenset:
        return serre_from_face(self.n, self.simples)

    def contains(self, X: ModuleObj) -> bool:
        return all(I.support <= self.simples for I in X.summands)

    def to_json(self) -> dict:
        return {"simples": sorted(self.simples), "intervals": [I.to_json() for I in sorted(self.intervals())]}


def serre_from_face(n: int, K: Iterable[int]) -> frozenset:
    K = frozenset(K)
    return frozenset(I for I in all_intervals(n) if I.support <= K)


def face_from_serre(T: Iterable[Interval]) -> frozenset:
    return frozenset().union(*(I.support for I in T))


def is_serre(T: Iterable[Interval]) -> bool:
    T = set(T)
    for I in T:
        if any(J is not None and J not in T for J in submodules_of(I) + quotients_of(I)):
            return False
    return is_torsionfree_class(T)


def serre_subcategories(n: int) -> list:
    return [SerreSub(n, frozenset(K))
            for r in range(n + 1) for K in itertools.combinations(range(1, n + 1), r)]


# -- Grothendieck monoid and dense subcategories --------------------------------

def grothendieck_monoid(n: int) -> CanonicalMonoid:
    return make_free(n)


def image_submonoid(n: int, T: Iterable[Interval]) -> SubmonoidGens:
    M = grothendieck_monoid(n)
    return SubmonoidGens(M, tuple(M.elem(dim_vector(I, n)) for I in sorted(T)))


@dataclass(frozen=True)
class DenseSubgroup:
    H: IntLattice

    @property
    def n(self) -> int:
        return self.H.ambient_rank


def strictly_positive_element(H: DenseSubgroup | IntLattice):
    """An integer vector of ``H`` with every coordinate positive, or None."""
    L = H.H if isinstance(H, DenseSubgroup) else H
    B = L.basis
    n = L.ambient_rank
    ineqs = [(tuple(Fraction(row[i]) for row in B), Fraction(1)) for i in range(n)]
    c = rational_point(ineqs, len(B))
    if c is None:
        return None
    scale = lcm(*(f.denominator for f in c)) if c else 1
    ci = [int(f * scale) for f in c]
    v = tuple(sum(ci[k] * B[k][i] for k in range(len(B))) for i in range(n))
    assert all(x > 0 for x in v) and lattice_member(v, L)
    return v


def subgroup_has_strictly_positive(H: DenseSubgroup | IntLattice) -> bool:
    return strictly_positive_element(H) is not None


def dense_membership(H: DenseSubgroup | IntLattice, X: ModuleObj) -> bool:
    L = H.H if isinstance(H, DenseSubgroup) else H
    return lattice_member(dim_vector(X, L.ambient_rank), L)


def subgroup_from_objects(objs: Iterable[ModuleObj], n: int) -> DenseSubgroup:
    return DenseSubgroup(hnf([dim_vector(X, n) for X in objs], n))


# -- AR quiver (DOT) ------------------------------------------------------------

def _node_id(I: Interval, shift: int) -> str:
    return f"i{I.lo}_{I.hi}_s{shift}"


def _node_label(I: Interval, shift: int) -> str:
    return f"{I}[1]" if shift else str(I)


def ar_quiver_dot(n: int, highlight: Iterable = (), shifts: Sequence[int] = (0, 1)) -> str:
    """DOT source for the AR quiver of mod kA_n and its shift by [1].

    ``highlight`` holds ``(Interval, shift)`` pairs drawn filled gray.
    Irreducible maps: ``[a,b] -> [a,b+1]`` and ``[a,b] -> [a+1,b]``; the
    connecting maps ``[i,n] -> [1,i-1][1]`` join degree 0 to degree -1.
    """
    marked = set(highlight)
    ivs = all_intervals(n)
    lines = ["digraph AR {", "  rankdir=LR;", "  node [shape=box, style=rounded];"]
    for s in shifts:
        for I in ivs:
            attrs = f'label="{_node_label(I, s)}"'
            if (I, s) in marked:
                attrs += ', style="rounded,filled", fillcolor=gray80'
            lines.append(f"  {_node_id(I, s)} [{attrs}];")
    for s in shifts:
        for I in ivs:
            if I.hi < n:
                lines.append(f"  {_node_id(I, s)} -> {_node_id(Interval(I.lo, I.hi + 1), s)};")
            if I.lo < I.hi:
                lines.append(f"  {_node_id(I, s)} -> {_node_id(Interval(I.lo + 1, I.hi), s)};")
    if 0 in shifts and 1 in shifts:
        for i in range(2, n + 1):
            lines.append(f"  {_node_id(Interval(i, n), 0)} -> {_node_id(Interval(1, i - 1), 1)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_torf(spec: str, n: int) -> frozenset:
    """Parse ``"[1,1];[1,2]"``, ``"all"`` or ``""`` into a set of intervals."""
    spec = spec.strip()
    if spec == "all":
        return frozenset(all_intervals(n))
    out = set()
    for part in filter(None, (p.strip() for p in spec.split(";"))):
        body = part.strip("[] ")
        try:
            lo, hi = (int(x) for x in body.split(","))
        except ValueError:
            raise InvalidInput(f"cannot parse interval {part!r}") from None
        I = Interval(lo, hi)
        if hi > n:
            raise InvalidInput(f"interval {I} exceeds n={n}")
        out.add(I)
    return frozenset(out)
