"""Brute-force verification layer.

Explicit representations of the linear A_n quiver over F_2, with Hom spaces,
subrepresentations and short exact sequences found by exhaustive linear
algebra, plus definitional congruence / c-equivalence closures on finite
windows. Nothing here uses the closed-form interval rules of
:mod:`grothmon.quiver` or the lattice criterion of :mod:`grothmon.monoid`;
those are what this module checks.

F_2 vectors are int bitmasks (bit j = coordinate j). A matrix with r rows is a
tuple of r row bitmasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import DecompositionFailed, InvalidInput, WindowNotClosed
from .quiver import Interval, ModuleObj, modules_up_to

MAX_TOTAL_DIM = 12


# -- F_2 linear algebra ---------------------------------------------------------

def _parity(x: int) -> int:
    return bin(x).count("1") & 1


def gf2_rank(rows: Iterable[int]) -> int:
    basis = []  # distinct leading bits, kept descending
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def mat_vec(M: Sequence[int], v: int) -> int:
    return sum(_parity(row & v) << i for i, row in enumerate(M))


def mat_mul(A: Sequence[int], B: Sequence[int]) -> tuple:
    """``A @ B`` where rows of ``A`` index into rows of ``B``."""
    out = []
    for row in A:
        acc = 0
        j = 0
        while row >> j:
            if row >> j & 1:
                acc ^= B[j]
            j += 1
        out.append(acc)
    return tuple(out)


def identity(d: int) -> tuple:
    return tuple(1 << i for i in range(d))


def _columns_to_rows(cols: Sequence[int], nrows: int) -> tuple:
    return tuple(sum((c >> i & 1) << j for j, c in enumerate(cols)) for i in range(nrows))


def subspaces(d: int) -> list:
    """All subspaces of F_2^d, each as a tuple of reduced basis vectors."""
    found = {(): None}
    frontier = [()]
    while frontier:
        nxt = []
        for basis in frontier:
            span = _span(basis)
            for v in range(1, 1 << d):
                if v in span:
                    continue
                key = _reduced_basis(basis + (v,))
                if key not in found:
                    found[key] = None
                    nxt.append(key)
        frontier = nxt
    return list(found)


def _span(basis: Sequence[int]) -> set:
    out = {0}
    for b in basis:
        out |= {x ^ b for x in out}
    return out


def _reduced_basis(vectors: Sequence[int]) -> tuple:
    """Reduced row-echelon basis of the span; canonical per subspace."""
    rows = []
    for v in vectors:
        for r in rows:
            if v >> (r.bit_length() - 1) & 1:
                v ^= r
        if v:
            top = v.bit_length() - 1
            rows = [r ^ v if r >> top & 1 else r for r in rows]
            rows.append(v)
    return tuple(sorted(rows, reverse=True))


def _coords_in(basis: Sequence[int], w: int) -> int:
    """Coordinates of ``w`` in a reduced basis (as a bitmask over basis index)."""
    c = 0
    for k, b in enumerate(basis):
        if w >> (b.bit_length() - 1) & 1:
            w ^= b
            c |= 1 << k
    if w:
        raise ValueError("vector not in span")
    return c


# -- representations ------------------------------------------------------------

@dataclass(frozen=True)
class Rep:
    """Representation of 1 <- 2 <- ... <- n over F_2.

    ``maps[v]`` is the matrix of the arrow from vertex v+2 to v+1 (1-based),
    with ``dims[v]`` rows acting on bitmasks of length ``dims[v+1]``.
    """

    dims: tuple
    maps: tuple

    def __post_init__(self):
        if len(self.maps) != max(len(self.dims) - 1, 0):
            raise InvalidInput("one map per arrow required")
        if sum(self.dims) > MAX_TOTAL_DIM:
            raise InvalidInput(f"total dimension {sum(self.dims)} exceeds {MAX_TOTAL_DIM}")
        for v, M in enumerate(self.maps):
            if len(M) != self.dims[v] or any(r >> self.dims[v + 1] for r in M):
                raise InvalidInput(f"map {v} has the wrong shape")

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def path_map(self, i: int, j: int) -> tuple:
        """Composite map from vertex j to vertex i (0-based, i <= j)."""
        M = identity(self.dims[j])
        for v in range(j - 1, i - 1, -1):
            M = mat_mul(self.maps[v], M)
        return M


def zero_rep(n: int) -> Rep:
    return Rep((0,) * n, ((),) * (n - 1))


def interval_rep(n: int, I: Interval) -> Rep:
    dims = tuple(int(I.lo <= v + 1 <= I.hi) for v in range(n))
    maps = tuple((1,) if dims[v] and dims[v + 1] else (0,) * dims[v] for v in range(n - 1))
    return Rep(dims, maps)


def direct_sum(*reps: Rep) -> Rep:
    n = reps[0].n
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(n))
    maps = []
    for v in range(n - 1):
        rows = []
        shift = 0
        for r in reps:
            rows += [row << shift for row in r.maps[v]]
            shift += r.dims[v + 1]
        maps.append(tuple(rows))
    return Rep(dims, tuple(maps))


def rep_of(X: ModuleObj | Interval, n: int) -> Rep:
    if isinstance(X, Interval):
        return interval_rep(n, X)
    if not X.summands:
        return zero_rep(n)
    return direct_sum(*(interval_rep(n, I) for I in X.summands))


def hom_dim(X: Rep, Y: Rep) -> int:
    """dim_F2 Hom(X, Y), by solving the intertwining equations."""
    n = X.n
    offs, k = [], 0
    for v in range(n):
        offs.append(k)
        k += Y.dims[v] * X.dims[v]
    nvars = k

    def var(v, i, j):  # entry (i, j) of f_v : X_v -> Y_v
        return offs[v] + i * X.dims[v] + j

    eqs = []
    for v in range(n - 1):
        # Y.maps[v] f_{v+1} = f_v X.maps[v]
        for i in range(Y.dims[v]):
            for j in range(X.dims[v + 1]):
                eq = 0
                for m in range(Y.dims[v + 1]):
                    if Y.maps[v][i] >> m & 1:
                        eq ^= 1 << var(v + 1, m, j)
                for m in range(X.dims[v]):
                    if X.maps[v][m] >> j & 1:
                        eq ^= 1 << var(v, i, m)
                eqs.append(eq)
    return nvars - gf2_rank(eqs)


def decompose(X: Rep) -> ModuleObj:
    """Krull-Schmidt decomposition via ranks of composite path maps.

    The multiplicity of ``[i, j]`` is r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1)
    where r(i, j) is the rank of the map from vertex j to vertex i.
    """
    n = X.n

    def r(i, j):
        if i < 0 or j >= n:
            return 0
        return gf2_rank(X.path_map(i, j))

    parts = []
    for i in range(n):
        for j in range(i, n):
            m = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1)
            if m < 0:
                raise DecompositionFailed(f"negative multiplicity for [{i + 1},{j + 1}]")
            parts += [Interval(i + 1, j + 1)] * m
    out = ModuleObj.of(*parts)
    dims = tuple(sum(1 for I in parts if I.lo <= v + 1 <= I.hi) for v in range(n))
    if dims != X.dims:
        raise DecompositionFailed(f"decomposition {out} has dims {dims}, expected {X.dims}")
    return out


def all_subreps(X: Rep) -> list:
    """Every subrepresentation, as ``(subspace bases per vertex, Rep)``."""
    if X.total_dim > 6:
        raise InvalidInput("all_subreps is limited to total dimension 6")
    n = X.n
    choices = [subspaces(d) for d in X.dims]
    out = []
    for combo in itertools.product(*choices):
        ok = True
        for v in range(n - 1):
            span = _span(combo[v])
            if any(mat_vec(X.maps[v], u) not in span for u in combo[v + 1]):
                ok = False
                break
        if not ok:
            continue
        dims = tuple(len(b) for b in combo)
        maps = []
        for v in range(n - 1):
            cols = [_coords_in(combo[v], mat_vec(X.maps[v], u)) for u in combo[v + 1]]
            maps.append(_columns_to_rows(cols, dims[v]))
        out.append((combo, Rep(dims, tuple(maps))))
    return out


def all_quotients(X: Rep) -> list:
    """Decomposed quotient modules X/U for every subrepresentation U."""
    out = []
    for combo, _ in all_subreps(X):
        dims, maps = [], []
        comps = []
        for v in range(X.n):
            # complement basis: extend the subspace basis by unit vectors
            span_basis = list(combo[v])
            comp = []
            for e in range(X.dims[v]):
                trial = _reduced_basis(span_basis + comp + [1 << e])
                if len(trial) > len(span_basis) + len(comp):
                    comp.append(1 << e)
            comps.append((span_basis, comp))
            dims.append(len(comp))
        for v in range(X.n - 1):
            sub_b, comp_b = comps[v]
            cols = []
            for u in comps[v + 1][1]:
                w = mat_vec(X.maps[v], u)
                cols.append(_quotient_coords(w, sub_b, comp_b))
            maps.append(_columns_to_rows(cols, dims[v]))
        out.append(decompose(Rep(tuple(dims), tuple(maps))))
    return out


def _quotient_coords(w: int, sub_b, comp_b) -> int:
    """Coordinates of ``w`` modulo span(sub_b) in the basis comp_b."""
    vecs = list(sub_b) + list(comp_b)
    k = len(vecs)
    # brute force over coefficient vectors (dimensions are tiny)
    for c in range(1 << k):
        acc = 0
        for t in range(k):
            if c >> t & 1:
                acc ^= vecs[t]
        if acc == w:
            return c >> len(sub_b)
    raise ValueError("vector outside the ambient space")


# -- short exact sequences ------------------------------------------------------

@dataclass(frozen=True)
class SESRecord:
    sub: Rep
    mid: Rep
    quot: Rep
    inclusion: tuple  # per vertex, matrix sub -> mid
    projection: tuple  # per vertex, matrix mid -> quot
    sub_obj: ModuleObj = field(default=ModuleObj())
    mid_obj: ModuleObj = field(default=ModuleObj())
    quot_obj: ModuleObj = field(default=ModuleObj())

    def is_split(self) -> bool:
        return self.mid_obj == self.sub_obj + self.quot_obj

    def check(self) -> bool:
        """Injective, surjective, exact in the middle, dimensions add up."""
        for v in range(self.mid.n):
            i, p = self.inclusion[v], self.projection[v]
            ds, dm, dq = self.sub.dims[v], self.mid.dims[v], self.quot.dims[v]
            if dm != ds + dq:
                return False
            cols_i = [mat_vec(i, 1 << k) for k in range(ds)]
            if gf2_rank(cols_i) != ds or gf2_rank(p) != dq:
                return False
            if any(mat_vec(p, c) for c in cols_i):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "sub": self.sub_obj.to_json(),
            "mid": self.mid_obj.to_json(),
            "quot": self.quot_obj.to_json(),
            "split": self.is_split(),
        }


def all_ses(A: Rep, C: Rep) -> list:
    """All short exact sequences 0 -> A -> E -> C -> 0 up to the middle term.

    Middles are block upper-triangular twists ``[[A, T], [0, C]]`` over every
    F_2 off-diagonal block ``T``; one record per distinct decomposition.
    """
    n = A.n
    dA, dC = A.dims, C.dims
    blocks = [(dA[v], dC[v + 1]) for v in range(n - 1)]
    nbits = sum(r * c for r, c in blocks)
    sub_obj, quot_obj = decompose(A), decompose(C)
    inclusion = tuple(_columns_to_rows([1 << k for k in range(dA[v])], dA[v] + dC[v]) for v in range(n))
    projection = tuple(tuple(1 << (dA[v] + k) for k in range(dC[v])) for v in range(n))
    seen = {}
    for code in range(1 << nbits):
        maps = []
        pos = 0
        for v, (r, c) in enumerate(blocks):
            rows = []
            for i in range(r):
                t = (code >> pos) & ((1 << c) - 1)
                pos += c
                rows.append(A.maps[v][i] | (t << dA[v + 1]))
            rows += [row << dA[v + 1] for row in C.maps[v]]
            maps.append(tuple(rows))
        mid = Rep(tuple(a + c for a, c in zip(dA, dC)), tuple(maps))
        mid_obj = decompose(mid)
        if mid_obj not in seen:
            seen[mid_obj] = SESRecord(A, mid, C, inclusion, projection, sub_obj, mid_obj, quot_obj)
    return [seen[k] for k in sorted(seen)]


def ses_middles(A: ModuleObj, C: ModuleObj, n: int) -> list:
    return [rec.mid_obj for rec in all_ses(rep_of(A, n), rep_of(C, n))]


def is_quasi_split_window(n: int, dim_bound: int):
    """``(True, None)`` if every enumerated sequence splits, else ``(False, witness)``."""
    mods = [X for X in modules_up_to(n, dim_bound) if X]
    for A in mods:
        for C in mods:
            if A.total_dim + C.total_dim > dim_bound:
                continue
            for rec in all_ses(rep_of(A, n), rep_of(C, n)):
                if not rec.is_split():
                    return False, rec
    return True, None


# -- closures on finite windows -------------------------------------------------

class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb, key=repr)] = min(ra, rb, key=repr)

    def classes(self, order):
        groups = {}
        for x in order:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


def c_equiv_closure(window: Sequence[Hashable], conflations: Iterable[tuple]) -> list:
    """Partition of ``window`` generated by conflations ``(sub, mid, quot)``.

    Each conflation identifies ``mid`` with ``sub + quot``; identifications are
    then propagated by adding any common summand ``Z`` that keeps both sides in
    the window. Objects must support ``+`` (direct sum).
    """
    win = list(window)
    members = set(win)
    uf = _UnionFind(win)
    pairs = []
    for sub, mid, quot in conflations:
        other = sub + quot
        if mid not in members or other not in members:
            raise WindowNotClosed(f"conflation {sub} -> {mid} -> {quot} leaves the window")
        if mid != other:
            pairs.append((mid, other))
    pairs = list(dict.fromkeys(pairs))
    for X, Y in pairs:
        for Z in win:
            XZ, YZ = X + Z, Y + Z
            if XZ in members and YZ in members:
                uf.union(XZ, YZ)
    return uf.classes(win)


def partition_of(window: Sequence[Hashable], key: Callable) -> list:
    groups = {}
    for x in window:
        groups.setdefault(key(x), []).append(x)
    return list(groups.values())


def same_partition(p: Iterable[Iterable], q: Iterable[Iterable]) -> bool:
    return {frozenset(c) for c in p} == {frozenset(c) for c in q}


def abelian_conflations(n: int, dim_bound: int) -> list:
    """Every enumerated short exact sequence with total dimension in bound."""
    mods = [X for X in modules_up_to(n, dim_bound) if X]
    out = []
    for A in mods:
        for C in mods:
            if A.total_dim + C.total_dim <= dim_bound:
                for mid in ses_middles(A, C, n):
                    out.append((A, mid, C))
    return out


def is_c_closed_window(subset: Callable, window: Sequence, conflations: Iterable[tuple]) -> bool:
    """Whether ``{X in window : subset(X)}`` is a union of c-equivalence classes."""
    parts = c_equiv_closure(window, conflations)
    return all(len({bool(subset(X)) for X in cls}) == 1 for cls in parts)


def is_serre_window(subset: Callable, window: Sequence, conflations: Iterable[tuple]) -> bool:
    """Closed under sums and summands within the window, and c-closed."""
    win = list(window)
    members = set(win)
    inside = [X for X in win if subset(X)]
    for X in inside:
        for Y in inside:
            S = X + Y
            if S in members and not subset(S):
                return False
    for X in win:
        for Y in win:
            S = X + Y
            if S in members and subset(S) and not (subset(X) and subset(Y)):
                return False
    return is_c_closed_window(subset, win, conflations)


# -- definitional congruence for monoid pipelines -------------------------------

def submonoid_elements(gens: Sequence[Sequence[int]], coef_bound: int) -> set:
    """All sums of generators with each coefficient at most ``coef_bound``."""
    if not gens:
        return {()}
    n = len(gens[0])
    out = set()
    for coefs in itertools.product(range(coef_bound + 1), repeat=len(gens)):
        out.add(tuple(sum(c * g[i] for c, g in zip(coefs, gens)) for i in range(n)))
    return out


def pipeline_partition(rank: int, loc_gens, quot_gens, window, coef_bound: int = 4) -> list:
    """Definitional congruence of ``(N^rank)_S / Q`` restricted to ``window``.

    Elements are pairs ``(x, s)`` standing for ``x - s`` with ``s`` in the
    submonoid generated by ``loc_gens``; ``quot_gens`` are pairs ``(a, p)`` in
    the same form. Two window pairs are identified when

        [x, s] + [a, p] = [y, t] + [a', p']   in the localization,

    i.e. ``x + a + t + p' + u = y + a' + s + p + u`` in N^rank (free, so ``u``
    cancels), for ``[a, p]``, ``[a', p']`` bounded sums of ``quot_gens``.
    The result is the transitive closure of these identifications.
    """
    Q = {(tuple(0 for _ in range(rank)), tuple(0 for _ in range(rank)))}
    for coefs in itertools.product(range(coef_bound + 1), repeat=len(quot_gens)):
        a = tuple(sum(c * g[0][i] for c, g in zip(coefs, quot_gens)) for i in range(rank))
        p = tuple(sum(c * g[1][i] for c, g in zip(coefs, quot_gens)) for i in range(rank))
        Q.add((a, p))
    # [x,s] + [a,p] has "value" x + a - s - p; equality in the free localization
    # is equality of values, so index window pairs by value shifted by each q.
    win = list(window)
    uf = _UnionFind(win)
    by_value = {}
    for w in win:
        (x, s) = w
        for a, p in Q:
            val = tuple(xi + ai - si - pi for xi, ai, si, pi in zip(x, a, s, p))
            by_value.setdefault(val, []).append(w)
    for group in by_value.values():
        for w in group[1:]:
            uf.union(group[0], w)
    return uf.classes(win)


def intermediate_conflations(n: int, F: Iterable[Interval], dim_bound: int) -> list:
    """Conflations of F[1] * A whose terms fit in total dimension ``dim_bound``.

    Families, for enumerated sequences 0 -> A -> B -> C -> 0 of modules:
      (i)   A -> B -> C in degree zero;
      (ii)  neg[1] -> X -> zero for every window object X;
      (iii) G -> 0 -> G[1] for G in add F;
      (iv)  A[1] -> B[1] -> C[1] when A, B, C lie in add F;
      (v)   B -> C -> A[1] (rotated triangle) when A lies in add F;
      (vi)  C -> A[1] -> B[1] when A and B lie in add F.
    """
    from .intermediate import DObj

    F = frozenset(F)

    def in_F(X):
        return all(I in F for I in X.summands)

    mods = [X for X in modules_up_to(n, dim_bound) if X]
    out = []
    for A in mods:
        for C in mods:
            if A.total_dim + C.total_dim > dim_bound:
                continue
            for B in ses_middles(A, C, n):
                out.append((DObj(zero=A), DObj(zero=B), DObj(zero=C)))
                if in_F(A) and in_F(B) and in_F(C):
                    out.append((DObj(neg=A), DObj(neg=B), DObj(neg=C)))
                if in_F(A) and B.total_dim + A.total_dim <= dim_bound:
                    out.append((DObj(zero=B), DObj(zero=C), DObj(neg=A)))
                if in_F(A) and in_F(B) and C.total_dim + B.total_dim <= dim_bound:
                    out.append((DObj(zero=C), DObj(neg=A), DObj(neg=B)))
    for G in mods:
        if in_F(G) and 2 * G.total_dim <= dim_bound:
            out.append((DObj(zero=G), DObj(), DObj(neg=G)))
    for N in [DObj()] + [DObj(neg=X) for X in mods if in_F(X)]:
        for Z in [ModuleObj()] + mods:
            if N.total_dim + Z.total_dim <= dim_bound:
                out.append((DObj(neg=N.neg), DObj(N.neg, Z), DObj(zero=Z)))
    return out
