"""Intermediate subcategories F[1] * A of D^b(mod kA_n).

An object of A[1] * A is stored by its two cohomologies, ``neg`` (the H^-1
part) and ``zero`` (the H^0 part). Over a hereditary algebra every such complex
is the direct sum ``neg[1] + zero``, so the pair determines the object.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from . import monoid as mon
from .errors import InvalidInput, NotContaining, NotInCategory, NotTorsionfree
from .lattice import coordinate_lattice, hnf, lattice_member, quotient_presentation
from .quiver import (
    Interval,
    LinearAQuiver,
    ModuleObj,
    SerreSub,
    all_intervals,
    ar_quiver_dot,
    closure_violation,
    dim_vector,
    modules_up_to,
)


@dataclass(frozen=True, order=True)
class DObj:
    neg: ModuleObj = ModuleObj()
    zero: ModuleObj = ModuleObj()

    def __add__(self, other: "DObj") -> "DObj":
        return DObj(self.neg + other.neg, self.zero + other.zero)

    @property
    def total_dim(self) -> int:
        return self.neg.total_dim + self.zero.total_dim

    def __str__(self) -> str:
        parts = [f"{I}[1]" for I in self.neg.summands] + [str(I) for I in self.zero.summands]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"neg": self.neg.to_json(), "zero": self.zero.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "DObj":
        return cls(ModuleObj.from_json(data.get("neg", [])), ModuleObj.from_json(data.get("zero", [])))


def shifted(X: ModuleObj) -> DObj:
    """``X[1]`` as an object of A[1] * A."""
    return DObj(neg=X)


def in_degree_zero(X: ModuleObj) -> DObj:
    return DObj(zero=X)


@dataclass(frozen=True)
class Conflation:
    sub: DObj
    mid: DObj
    quot: DObj

    def as_tuple(self) -> tuple:
        return (self.sub, self.mid, self.quot)


@dataclass(frozen=True)
class IntermediateCat:
    quiver: LinearAQuiver
    torf: frozenset

    @property
    def n(self) -> int:
        return self.quiver.n


def from_torsionfree(n: int, F: Iterable[Interval]) -> IntermediateCat:
    F = frozenset(F)
    Q = LinearAQuiver(n)
    for I in F:
        if I.hi > n:
            raise InvalidInput(f"interval {I} exceeds n={n}")
    w = closure_violation(F)
    if w is not None:
        raise NotTorsionfree(f"not a torsionfree class: {_describe_violation(w)}", witness=w)
    return IntermediateCat(Q, F)


def _describe_violation(w) -> str:
    if w[0] == "sub":
        return f"submodule {w[2]} of {w[1]} is missing"
    return f"summand {w[3]} of the extension of {w[1]} by {w[2]} is missing"


def torsionfree_from(C: IntermediateCat) -> frozenset:
    return C.torf


def contains(C: IntermediateCat, X: DObj) -> bool:
    for I in X.neg.summands + X.zero.summands:
        if I.hi > C.n:
            raise InvalidInput(f"interval {I} exceeds n={C.n}")
    return all(I in C.torf for I in X.neg.summands)


def h_decomposition(X: DObj) -> Conflation:
    """The conflation ``neg[1] -> X -> zero``."""
    return Conflation(shifted(X.neg), X, in_degree_zero(X.zero))


def simp_F(C: IntermediateCat) -> frozenset:
    """Simples occurring as composition factors of objects of F."""
    return frozenset().union(*(I.support for I in C.torf))


def monoid_of(C: IntermediateCat) -> mon.CanonicalMonoid:
    """M(F[1] * A): localize N^n at the classes of F."""
    M = mon.make_free(C.n)
    return mon.localize(M, [M.elem(dim_vector(I, C.n)) for I in sorted(C.torf)])


def class_of(C: IntermediateCat, X: DObj) -> mon.MonoidElem:
    if not contains(C, X):
        raise NotInCategory(f"{X} is not in F[1] * A: H^-1 has summands outside F")
    pos = dim_vector(X.zero, C.n)
    neg = dim_vector(X.neg, C.n)
    return monoid_of(C).elem(tuple(a - b for a, b in zip(pos, neg)))


def serre_subcats_of(C: IntermediateCat) -> list:
    """Serre subcategories F[1] * S_J, one per simple set J containing simp_F."""
    base = simp_F(C)
    rest = [i for i in range(1, C.n + 1) if i not in base]
    out = []
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            out.append(SerreSub(C.n, base | frozenset(extra)))
    return out


def smallest_serre(C: IntermediateCat) -> SerreSub:
    return SerreSub(C.n, simp_F(C))


def in_serre(C: IntermediateCat, S: SerreSub, X: DObj) -> bool:
    """Membership of ``X`` in F[1] * S."""
    return contains(C, X) and S.contains(X.zero)


def serre_face(C: IntermediateCat, S: SerreSub) -> mon.FaceDesc:
    """Face of M(C) attached to F[1] * S: the free coordinates of S."""
    M = monoid_of(C)
    return mon.FaceDesc(M, frozenset(S.simples) - M.inverted)


def serre_from_monoid_face(C: IntermediateCat, F: mon.FaceDesc) -> SerreSub:
    return SerreSub(C.n, F.coords | F.owner.inverted)


@dataclass(frozen=True)
class SerreLocalization:
    serre: SerreSub
    m_quotient: mon.CanonicalMonoid
    a_quotient: mon.CanonicalMonoid
    m_kept: tuple
    a_kept: tuple
    iso: bool

    def to_json(self) -> dict:
        return {
            "serre": sorted(self.serre.simples),
            "m_quotient": self.m_quotient.to_json(),
            "a_quotient": self.a_quotient.to_json(),
            "m_quotient_type": self.m_quotient.describe(),
            "a_quotient_type": self.a_quotient.describe(),
            "iso": self.iso,
        }


def serre_localization(C: IntermediateCat, S: SerreSub) -> SerreLocalization:
    """M(C) / M_(F[1]*S) against M(A) / M_S, compared after projection."""
    if not simp_F(C) <= S.simples:
        raise NotContaining(f"Serre subcategory {sorted(S.simples)} does not contain F "
                            f"(needs simples {sorted(simp_F(C))})")
    n = C.n
    MC = monoid_of(C)
    gens = [MC.basis_elem(k) for k in sorted(S.simples)]
    gens += [MC.elem(tuple(-x for x in MC.basis_elem(j).coords)) for j in sorted(simp_F(C))]
    m_q, m_kept = mon.project(mon.quotient_by_submonoid(MC, mon.SubmonoidGens(MC, tuple(gens)),
                                                        project_result=False))
    MA = mon.make_free(n)
    a_gens = [MA.basis_elem(k) for k in sorted(S.simples)]
    a_q, a_kept = mon.project(mon.quotient_by_submonoid(MA, mon.SubmonoidGens(MA, tuple(a_gens)),
                                                        project_result=False))
    iso = m_q == a_q and m_kept == a_kept
    return SerreLocalization(S, m_q, a_q, m_kept, a_kept, iso)


def commuting_square_check(C: IntermediateCat, S: SerreSub, box: int = 3) -> bool:
    """N^n -> M(C) -> M(C)/M_(F[1]*S) equals N^n -> M(A)/M_S -> (iso), on a box."""
    loc = serre_localization(C, S)
    if not loc.iso:
        return False
    for x in itertools.product(range(box + 1), repeat=C.n):
        X = ModuleObj.of(*[Interval(i + 1, i + 1) for i, k in enumerate(x) for _ in range(k)])
        top = mon.restrict(class_of(C, in_degree_zero(X)), loc.m_quotient, loc.m_kept)
        a = mon.make_free(C.n).elem(x)
        left = mon.restrict(a, loc.a_quotient, loc.a_kept)
        if top != loc.m_quotient.elem(left.coords):
            return False
    return True


def k0_right_exact_check(n: int, S: SerreSub | Iterable[int]) -> bool:
    """Exactness of Z^S -> Z^n -> K_0(A/S) -> 0 at the presentation level."""
    simples = sorted(S.simples if isinstance(S, SerreSub) else S)
    image = coordinate_lattice(n, simples) if simples else hnf([], n)
    coker = quotient_presentation(n, image)
    MA = mon.make_free(n)
    a_q = mon.quotient_by_submonoid(MA, mon.submonoid(MA, [MA.basis_elem(k).coords for k in simples]))
    third = mon.group_completion(a_q)
    composite_zero = all(lattice_member(MA.basis_elem(k).coords, image) for k in simples)
    return composite_zero and coker == third


def serre_monoid_injectivity_check(n: int, S: SerreSub | Iterable[int], box: int = 3) -> bool:
    """M(S) = N^|S| -> N^n is injective: distinct elements stay distinct on a box."""
    simples = sorted(S.simples if isinstance(S, SerreSub) else S)
    MA = mon.make_free(n)
    images = {}
    for x in itertools.product(range(box + 1), repeat=len(simples)):
        v = [0] * n
        for k, c in zip(simples, x):
            v[k - 1] = c
        e = MA.elem(v)
        if e in images and images[e] != x:
            return False
        images[e] = x
    return True


def window(C: IntermediateCat, dim_bound: int) -> list:
    """Objects of C with total dimension at most ``dim_bound``, sorted."""
    mods = modules_up_to(C.n, dim_bound)
    fmods = [X for X in mods if all(I in C.torf for I in X.summands)]
    out = [DObj(N, Z) for N in fmods for Z in mods if N.total_dim + Z.total_dim <= dim_bound]
    return sorted(out, key=lambda X: (X.total_dim, X))


def dot(C: IntermediateCat) -> str:
    """AR quiver with the indecomposables of C highlighted."""
    marks = [(I, 0) for I in all_intervals(C.n)] + [(I, 1) for I in C.torf]
    return ar_quiver_dot(C.n, marks)
