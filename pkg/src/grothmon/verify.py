"""Named cross-checks between the closed-form layers and the brute-force oracle.

Each check returns a :class:`CheckResult`; :func:`run_suite` groups them for
the ``verify`` command.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import intermediate as inter
from . import monoid as mon
from . import oracle
from . import quiver as qv
from .errors import NoExtension, UnsupportedMonoid
from .lattice import hnf, lattice_member


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _timed(name: str, fn: Callable[[], tuple]) -> CheckResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, bool(ok), detail, time.perf_counter() - t0)


# -- monoid -------------------------------------------------------------------

def check_hnf_determinism(rank: int = 2, entries: int = 2) -> tuple:
    vals = range(-entries, entries + 1)
    vecs = list(itertools.product(vals, repeat=rank))
    tried = 0
    for a, b in itertools.combinations(vecs, 2):
        gens = [a, b, tuple(x + y for x, y in zip(a, b))]
        ref = hnf(gens, rank)
        for perm in itertools.permutations(gens):
            if hnf(perm, rank) != ref:
                return False, f"order dependence for {gens}"
        if hnf(ref.basis, rank) != ref:
            return False, f"not idempotent on {ref.basis}"
        tried += 1
    return True, f"{tried} generator sets"


def pipeline_monoids(max_rank: int = 3):
    """Small free -> localize -> quotient pipelines, as ``(n, S, Q)`` tuples.

    ``S`` lists localizing vectors in N^n; ``Q`` lists quotient generators as
    pairs ``(a, p)`` standing for ``a - p`` with ``p`` in the span of ``S``.
    """
    for n in range(1, max_rank + 1):
        units = [tuple(int(i == k) for i in range(n)) for k in range(n)]
        zero = (0,) * n
        loc_choices = [[]] + [[u] for u in units] + [[tuple(1 for _ in range(n))]]
        if n >= 2:
            loc_choices.append(units[:2])
        for S in loc_choices:
            quot_choices = [[]] + [[(u, zero)] for u in units]
            quot_choices.append([(tuple(2 * x for x in units[0]), zero)])
            if n >= 2:
                quot_choices.append([(tuple(a + b for a, b in zip(units[0], units[1])), zero)])
            if S:
                s = S[0]
                quot_choices.append([(units[-1], s)])
            for Q in quot_choices:
                yield n, S, Q


def _pipeline_window(n: int, S, box: int):
    """Window pairs ``(x, s)`` whose values fill the box, shifted on inverted coords."""
    M = mon.make_free(n)
    L = mon.localize(M, [M.elem(s) for s in S])
    total = tuple(sum(col) for col in zip(*S)) if S else (0,) * n
    out = []
    for v in itertools.product(*[range(-box if i + 1 in L.inverted else 0, box + 1) for i in range(n)]):
        k = 0
        while any(a + k * t < 0 for a, t in zip(v, total)):
            k += 1
        s = tuple(k * t for t in total)
        out.append((tuple(a + b for a, b in zip(v, s)), s))
    return L, out


def check_pipeline_congruence(box: int = 4, max_rank: int = 3) -> tuple:
    count = 0
    for n, S, Q in pipeline_monoids(max_rank):
        b = box if n <= 2 else min(box, 2)
        L, win = _pipeline_window(n, S, b)
        gens = [L.elem(tuple(a - p for a, p in zip(a_, p_))) for a_, p_ in Q]
        try:
            R = mon.quotient_by_submonoid(L, mon.SubmonoidGens(L, tuple(gens)), project_result=False)
        except UnsupportedMonoid:
            continue
        lib = oracle.partition_of(win, lambda w: R.elem(tuple(x - s for x, s in zip(*w))))
        ref = oracle.pipeline_partition(n, S, Q, win, coef_bound=2 * b + 2)
        if not oracle.same_partition(lib, ref):
            return False, f"partition mismatch for n={n}, S={S}, Q={Q}"
        count += 1
    return True, f"{count} pipelines"


def _box_elems(M: mon.CanonicalMonoid, box: int):
    ranges = [range(-box, box + 1) if i in M.inverted else range(box + 1) for i in range(1, M.rank + 1)]
    return [M.elem(v) for v in itertools.product(*ranges)]


def sample_monoids(max_rank: int = 3) -> list:
    out = []
    for n in range(1, max_rank + 1):
        for r in range(n + 1):
            for J in itertools.combinations(range(1, n + 1), r):
                out.append(mon.make(n, J))
        out.append(mon.make(n, (), [tuple(2 if i == 0 else 0 for i in range(n))]))
    return out


def check_face_axiom(box: int = 4, max_rank: int = 3) -> tuple:
    """``x + y`` lies in a face iff both ``x`` and ``y`` do, over a full box."""
    tried = 0
    for M in sample_monoids(max_rank):
        elems = _box_elems(M, box)
        sums = [(x, y, x + y) for x in elems for y in elems]
        for F in mon.faces(M):
            inside = {x.coords: F.contains(x) for x in elems}
            for x, y, s in sums:
                if F.contains(s) != (inside[x.coords] and inside[y.coords]):
                    return False, f"face {sorted(F.coords)} of {M.describe()} fails at {x}, {y}"
            tried += 1
    return True, f"{tried} faces"


def check_coordinate_faces_complete(max_rank: int = 2) -> tuple:
    """Subsets of a small box obeying the face axiom are exactly coordinate faces."""
    for n, box in ((1, 3), (2, 2))[:max_rank]:
        M = mon.make_free(n)
        elems = [e.coords for e in _box_elems(M, box)]
        present = set(elems)
        sums = [(x, y, tuple(a + b for a, b in zip(x, y))) for x in elems for y in elems]
        sums = [(x, y, s) for x, y, s in sums if s in present]
        found = set()
        for mask in range(1 << len(elems)):
            S = {v for k, v in enumerate(elems) if mask >> k & 1}
            if (0,) * n not in S:
                continue
            if all((s in S) == (x in S and y in S) for x, y, s in sums):
                found.add(frozenset(S))
        expected = {frozenset(v for v in elems if all(i + 1 in F.coords or v[i] == 0 for i in range(n)))
                    for F in mon.faces(M)}
        if found != expected:
            return False, f"n={n}: {len(found)} face-like subsets, {len(expected)} coordinate faces"
    return True, "every face of a box is a coordinate face"


def check_coequalizer(box: int = 3) -> tuple:
    cases = 0
    for n, S, Q in pipeline_monoids(2):
        M = mon.make_free(n)
        L = mon.localize(M, [M.elem(s) for s in S])
        N = mon.SubmonoidGens(L, tuple(L.elem(tuple(a - p for a, p in zip(a_, p_))) for a_, p_ in Q))
        try:
            R = mon.quotient_by_submonoid(L, N, project_result=False)
        except UnsupportedMonoid:
            continue
        elems = _box_elems(L, box)
        for x in elems:
            for g in N.gens:
                if R.elem(x.coords) != R.elem((x + g).coords):
                    return False, f"q(x + n) != q(x) for x={x}, n={g}"
        for x in elems:
            for y in elems:
                if R.elem(x.coords) != R.elem(y.coords):
                    continue
                w = mon.quotient_witness(x, y, N)
                if w is None:
                    return False, f"no witness for {x} ~ {y}"
                lhs = x + mon.combine(N, w[0])
                rhs = y + mon.combine(N, w[1])
                if lhs != rhs:
                    return False, f"witness fails for {x} ~ {y}"
                cases += 1
    return True, f"{cases} identified pairs"


def check_witness_extraction(cases: int = 1000, seed: int = 3) -> tuple:
    """Random quotients: identified pairs come with explicit witnesses n, n'."""
    rnd = random.Random(seed)
    done = tries = 0
    while done < cases:
        tries += 1
        n = rnd.randint(1, 3)
        M = mon.make(n, [i for i in range(1, n + 1) if rnd.random() < 0.3])
        gens = []
        for _ in range(rnd.randint(1, 2)):
            gens.append(M.elem([rnd.randint(-2, 2) if i + 1 in M.inverted else rnd.randint(0, 2)
                                for i in range(n)]))
        N = mon.SubmonoidGens(M, tuple(gens))
        R = mon.quotient_by_submonoid(M, N, project_result=False)
        rng = [range(-3, 4) if i + 1 in M.inverted else range(4) for i in range(n)]
        x = M.elem([rnd.choice(r) for r in rng])
        if rnd.random() < 0.5:
            # x + n is always identified with x
            y = x + mon.combine(N, [rnd.randint(0, 2) for _ in gens])
        else:
            y = M.elem([rnd.choice(r) for r in rng])
        if R.elem(x.coords) != R.elem(y.coords):
            continue
        wit = mon.quotient_witness(x, y, N)
        if wit is None:
            return False, f"no witness for {x} ~ {y} modulo {N.coords()}"
        c, c2 = wit
        if any(k < 0 for k in c + c2) or x + mon.combine(N, c) != y + mon.combine(N, c2):
            return False, f"bad witness for {x} ~ {y} modulo {N.coords()}"
        done += 1
    return True, f"{done} identified pairs from {tries} draws"


def check_localization_dichotomy(box: int = 3, max_rank: int = 3) -> tuple:
    tried = 0
    for n in range(1, max_rank + 1):
        M = mon.make_free(n)
        elems = _box_elems(M, box if n <= 2 else 2)
        for s in elems:
            L = mon.localize(M, [s])
            F = mon.face_generated(M, [s])
            if not mon.localization_map(s, L).is_unit():
                return False, f"{s} not inverted"
            for x in elems:
                if mon.localization_map(x, L).is_unit() != F.contains(x):
                    return False, f"unit status of {x} wrong after inverting {s}"
            if mon.group_completion(L) != mon.group_completion(M):
                return False, "localization changed the group completion"
            tried += 1
    return True, f"{tried} localizations"


def _small_submonoids(entries: int = 2, max_gens: int = 2):
    M = mon.make_free(2)
    vecs = [v for v in itertools.product(range(entries + 1), repeat=2) if any(v)]
    for r in range(max_gens + 1):
        for gens in itertools.combinations(vecs, r):
            yield mon.submonoid(M, gens)


def check_phi_psi(box: int = 6) -> tuple:
    """Psi Phi(N) contains N; equality when N is cofinal and subtractive."""
    tried = strict = 0
    pts = list(itertools.product(range(box + 1), repeat=2))
    for N in _small_submonoids():
        H = mon.phi_subgroup(N)
        M = N.owner
        in_N = {p for p in pts if mon.submonoid_member(N, p)}
        in_psi = {p for p in pts if mon.psi_member(H, M.elem(p))}
        if not in_N <= in_psi:
            return False, f"Psi Phi(N) misses part of N for {N.coords()}"
        if mon.is_cofinal(N) and mon.is_subtractive(N, bound=box):
            if in_N != in_psi:
                return False, f"Psi Phi(N) != N for cofinal subtractive {N.coords()}"
        if in_N != in_psi:
            strict += 1
        # Phi Psi(H) = H: points of Psi(H) span H back
        if hnf(sorted(in_psi), 2) != H and mon.is_cofinal(N):
            return False, f"Phi Psi(H) != H for H={H.basis}"
        tried += 1
    return True, f"{tried} submonoids, {strict} with strict containment"


# -- quiver -------------------------------------------------------------------

def check_interval_rules(max_n: int = 4) -> tuple:
    pairs = 0
    for n in range(1, max_n + 1):
        ivs = qv.all_intervals(n)
        reps = {I: oracle.interval_rep(n, I) for I in ivs}
        for I in ivs:
            subs = sorted({oracle.decompose(R) for _, R in oracle.all_subreps(reps[I])})
            want = sorted({qv.ModuleObj.of(J) if J else qv.ModuleObj() for J in qv.submodules_of(I)})
            if subs != want:
                return False, f"submodules of {I}: oracle {list(map(str, subs))}"
            quots = sorted(set(oracle.all_quotients(reps[I])))
            want = sorted({qv.ModuleObj.of(J) if J else qv.ModuleObj() for J in qv.quotients_of(I)})
            if quots != want:
                return False, f"quotients of {I}: oracle {list(map(str, quots))}"
        for A in ivs:
            for B in ivs:
                pairs += 1
                h = oracle.hom_dim(reps[A], reps[B])
                if (h > 0) != qv.hom_nonzero(A, B):
                    return False, f"hom({A},{B}) oracle dim {h}"
                recs = oracle.all_ses(reps[A], reps[B])
                nonsplit = [r.mid_obj for r in recs if not r.is_split()]
                if (1 if nonsplit else 0) != qv.ext_dim(B, A):
                    return False, f"ext({B},{A}) disagrees with oracle"
                if nonsplit:
                    if nonsplit != [qv.ext_middle(B, A)]:
                        return False, f"middle of ext({B},{A}): oracle {list(map(str, nonsplit))}"
                else:
                    try:
                        qv.ext_middle(B, A)
                        return False, f"ext_middle({B},{A}) should raise"
                    except NoExtension:
                        pass
    return True, f"{pairs} interval pairs"


def check_ses_additivity(max_n: int = 3, dim_bound: int = 5) -> tuple:
    count = 0
    for n in range(1, max_n + 1):
        mods = [X for X in qv.modules_up_to(n, dim_bound) if X]
        for A in mods:
            for C in mods:
                if A.total_dim + C.total_dim > dim_bound:
                    continue
                for rec in oracle.all_ses(oracle.rep_of(A, n), oracle.rep_of(C, n)):
                    if not rec.check():
                        return False, f"bad sequence record {rec.to_json()}"
                    dA, dB, dC = (qv.dim_vector(X, n) for X in (A, rec.mid_obj, C))
                    if dB != tuple(a + c for a, c in zip(dA, dC)):
                        return False, f"dimension vectors not additive: {rec.to_json()}"
                    count += 1
    return True, f"{count} sequences"


class _OracleClosure:
    """Definitional closure data for add T over a dimension window."""

    def __init__(self, n: int, dim_bound: int):
        self.n = n
        self.mods = [X for X in qv.modules_up_to(n, dim_bound) if X]
        self.subs = {X: {oracle.decompose(R) for _, R in oracle.all_subreps(oracle.rep_of(X, n))}
                     for X in self.mods}
        self.exts = []
        for A in self.mods:
            for C in self.mods:
                if A.total_dim + C.total_dim <= dim_bound:
                    self.exts.append((A, C, oracle.ses_middles(A, C, n)))

    def is_torsionfree(self, T) -> bool:
        def inside(X):
            return all(I in T for I in X.summands)
        for X in self.mods:
            if inside(X) and not all(inside(Y) for Y in self.subs[X]):
                return False
        for A, C, mids in self.exts:
            if inside(A) and inside(C) and not all(inside(B) for B in mids):
                return False
        return True


def check_torsionfree_enumeration(max_n: int = 3, dim_bound: int = 4) -> tuple:
    counts = []
    for n in range(1, max_n + 1):
        oc = _OracleClosure(n, dim_bound)
        ivs = qv.all_intervals(n)
        passing = set()
        for r in range(len(ivs) + 1):
            for T in itertools.combinations(ivs, r):
                if oc.is_torsionfree(frozenset(T)):
                    passing.add(frozenset(T))
        enumerated = set(qv.enumerate_torsionfree_classes(n))
        if passing != enumerated:
            return False, f"n={n}: oracle finds {len(passing)}, enumeration {len(enumerated)}"
        counts.append(len(enumerated))
    return True, f"counts {counts}"


def check_serre_roundtrip(max_n: int = 4) -> tuple:
    for n in range(1, max_n + 1):
        for S in qv.serre_subcategories(n):
            T = S.intervals()
            if not qv.is_torsionfree_class(T) or not qv.is_serre(T):
                return False, f"Serre set {sorted(S.simples)} fails closure"
            if qv.face_from_serre(T) != S.simples and T:
                return False, f"face roundtrip fails for {sorted(S.simples)}"
        serre_sets = [T for T in qv.enumerate_torsionfree_classes(n) if qv.is_serre(T)]
        if len(serre_sets) != 2 ** n:
            return False, f"n={n}: {len(serre_sets)} Serre sets"
        for T in serre_sets:
            if qv.serre_from_face(n, qv.face_from_serre(T)) != T:
                return False, f"Serre roundtrip fails for {sorted(map(str, T))}"
    return True, "Serre sets match coordinate faces"


def check_abelian_c_equivalence(max_n: int = 3, dim_bound: int = 4) -> tuple:
    for n in range(1, max_n + 1):
        win = qv.modules_up_to(n, dim_bound)
        parts = oracle.c_equiv_closure(win, oracle.abelian_conflations(n, dim_bound))
        fibers = oracle.partition_of(win, lambda X: qv.dim_vector(X, n))
        if not oracle.same_partition(parts, fibers):
            return False, f"n={n}: c-equivalence differs from dimension-vector fibers"
    return True, f"n<={max_n}, dim<={dim_bound}"


def check_quasi_split_boundary(max_n: int = 3, dim_bound: int = 2) -> tuple:
    ok1, _ = oracle.is_quasi_split_window(1, dim_bound)
    if not ok1:
        return False, "n=1 should be quasi-split"
    for n in range(2, max_n + 1):
        ok, w = oracle.is_quasi_split_window(n, dim_bound)
        if ok or w is None or w.is_split() or not w.check():
            return False, f"n={n}: expected a nonsplit witness"
    return True, "n=1 split; nonsplit witnesses for n>=2"


def index_le3_subgroups() -> list:
    """Subgroups of Z^2 of index at most 3, in Hermite form."""
    out = []
    for a in range(1, 4):
        for d in range(1, 4):
            if a * d <= 3:
                for b in range(d):
                    out.append(hnf([(a, b), (0, d)], 2))
    return sorted(set(out), key=lambda L: L.basis)


def degenerate_subgroups(entries: int = 2) -> list:
    """The zero subgroup and the cyclic subgroups with small generators."""
    out = {hnf([], 2)}
    for v in itertools.product(range(-entries, entries + 1), repeat=2):
        if any(v):
            out.add(hnf([v], 2))
    return sorted(out, key=lambda L: L.basis)


def dense_window_checks(H, n: int = 2, dim_bound: int = 4, witness_bound: int = 8) -> tuple:
    """``(two_of_three, dense)`` for the membership class of ``H`` on a window."""
    inside = lambda X: qv.dense_membership(H, X)  # noqa: E731
    two_of_three = True
    for A, B, C in oracle.abelian_conflations(n, dim_bound):
        flags = (inside(A), inside(B), inside(C))
        if sum(flags) == 2:
            two_of_three = False
            break
    dense = True
    for X in qv.modules_up_to(n, dim_bound):
        d = qv.dim_vector(X, n)
        found = any(lattice_member(tuple(a + b for a, b in zip(d, e)), H)
                    for e in itertools.product(range(witness_bound + 1), repeat=n))
        if not found:
            dense = False
            break
    return two_of_three, dense


def check_dense_classification(dim_bound: int = 4) -> tuple:
    n = 2
    window = qv.modules_up_to(n, dim_bound)
    tested = 0
    for H in index_le3_subgroups() + degenerate_subgroups():
        positive = qv.subgroup_has_strictly_positive(H)
        two, dense = dense_window_checks(H, n, dim_bound)
        if positive != (two and dense):
            return False, f"H={H.basis}: positive={positive}, oracle 2-of-3={two}, dense={dense}"
        if positive:
            p = qv.strictly_positive_element(H)
            for X in window:
                d = qv.dim_vector(X, n)
                k = max(-(-a // b) for a, b in zip(d, p))
                comp = tuple(k * b - a for a, b in zip(d, p))
                Y = qv.ModuleObj.of(*[qv.Interval(i + 1, i + 1) for i, c in enumerate(comp) for _ in range(c)])
                if not qv.dense_membership(H, X + Y):
                    return False, f"constructive completion fails for {X} in H={H.basis}"
            members = [X for X in window if qv.dense_membership(H, X)]
            if qv.subgroup_from_objects(members, n).H != H:
                return False, f"subgroup_from_objects does not recover H={H.basis}"
        tested += 1
    return True, f"{tested} subgroups"


# -- intermediate -------------------------------------------------------------

def check_intermediate_c_equivalence(max_n: int = 3, dim_bound: int = 4) -> tuple:
    tried = 0
    for n in range(1, max_n + 1):
        for F in qv.enumerate_torsionfree_classes(n):
            C = inter.from_torsionfree(n, F)
            win = inter.window(C, dim_bound)
            parts = oracle.c_equiv_closure(win, oracle.intermediate_conflations(n, F, dim_bound))
            fibers = oracle.partition_of(win, lambda X: inter.class_of(C, X))
            if not oracle.same_partition(parts, fibers):
                return False, f"n={n}, F={sorted(map(str, F))}: partition differs from class fibers"
            tried += 1
    return True, f"{tried} intermediate categories"


def check_intermediate_membership(max_n: int = 3, dim_bound: int = 4) -> tuple:
    """Conflation terms stay in C, and class_of is additive along them."""
    for n in range(1, max_n + 1):
        for F in qv.enumerate_torsionfree_classes(n):
            C = inter.from_torsionfree(n, F)
            for sub, mid, quot in oracle.intermediate_conflations(n, F, dim_bound):
                if not all(inter.contains(C, X) for X in (sub, mid, quot)):
                    return False, f"conflation term outside C for F={sorted(map(str, F))}"
                if inter.class_of(C, mid) != inter.class_of(C, sub) + inter.class_of(C, quot):
                    return False, f"class_of not additive on {sub} -> {mid} -> {quot}"
            for I in F:
                if not inter.class_of(C, inter.in_degree_zero(qv.ModuleObj.of(I))).is_unit():
                    return False, f"[{I}] is not a unit"
    return True, "terms inside, classes additive, F inverted"


def check_intermediate_serre(max_n: int = 4, box: int = 2) -> tuple:
    tried = 0
    for n in range(1, max_n + 1):
        for F in qv.enumerate_torsionfree_classes(n):
            C = inter.from_torsionfree(n, F)
            subs = inter.serre_subcats_of(C)
            if len(subs) != 2 ** (n - len(inter.simp_F(C))):
                return False, f"wrong Serre count for F={sorted(map(str, F))}"
            for S in subs:
                face = inter.serre_face(C, S)
                if inter.serre_from_monoid_face(C, face) != S:
                    return False, "Serre -> face -> Serre is not the identity"
                if n <= 3 and not inter.commuting_square_check(C, S, box=box):
                    return False, f"square fails for F={sorted(map(str, F))}, S={sorted(S.simples)}"
                tried += 1
    return True, f"{tried} Serre subcategories"


def check_k0_right_exact(max_n: int = 5) -> tuple:
    tried = 0
    for n in range(1, max_n + 1):
        for S in qv.serre_subcategories(n):
            if not inter.k0_right_exact_check(n, S) or not inter.serre_monoid_injectivity_check(n, S, box=2):
                return False, f"n={n}, S={sorted(S.simples)}"
            tried += 1
    return True, f"{tried} Serre subsets"


SUITES = {
    "monoid": lambda o: [
        ("hnf_normal_form", lambda: check_hnf_determinism()),
        ("pipeline_congruence", lambda: check_pipeline_congruence(box=o["box"])),
        ("face_axiom", lambda: check_face_axiom(box=o["box"])),
        ("coordinate_faces", lambda: check_coordinate_faces_complete()),
        ("coequalizer_witness", lambda: check_coequalizer(box=min(o["box"], 3))),
        ("random_witnesses", lambda: check_witness_extraction()),
        ("localization_units", lambda: check_localization_dichotomy(box=min(o["box"], 3))),
        ("phi_psi", lambda: check_phi_psi()),
    ],
    "quiver": lambda o: [
        ("interval_rules", lambda: check_interval_rules(max_n=min(o["n"], 4))),
        ("ses_additivity", lambda: check_ses_additivity(max_n=min(o["n"], 3), dim_bound=min(o["dim_bound"] + 1, 5))),
        ("torsionfree_enumeration", lambda: check_torsionfree_enumeration(max_n=min(o["n"], 3), dim_bound=o["dim_bound"])),
        ("serre_faces", lambda: check_serre_roundtrip(max_n=o["n"])),
        ("abelian_c_equivalence", lambda: check_abelian_c_equivalence(max_n=min(o["n"], 3), dim_bound=o["dim_bound"])),
        ("quasi_split_boundary", lambda: check_quasi_split_boundary()),
        ("dense_classification", lambda: check_dense_classification(dim_bound=o["dim_bound"])),
    ],
    "intermediate": lambda o: [
        ("c_equivalence_fibers", lambda: check_intermediate_c_equivalence(max_n=min(o["n"], 3), dim_bound=o["dim_bound"])),
        ("conflation_closure", lambda: check_intermediate_membership(max_n=min(o["n"], 3), dim_bound=o["dim_bound"])),
        ("serre_classification", lambda: check_intermediate_serre(max_n=o["n"])),
        ("k0_right_exact", lambda: check_k0_right_exact(max_n=max(o["n"], 1))),
    ],
}


def run_suite(suite: str, n: int = 3, box: int = 4, dim_bound: int = 4) -> list:
    names = list(SUITES) if suite == "all" else [suite]
    opts = {"n": n, "box": box, "dim_bound": dim_bound}
    results = []
    for s in names:
        for name, fn in SUITES[s](opts):
            results.append(_timed(f"{s}.{name}", fn))
    return results
