"""Exact integer lattices: Hermite and Smith normal forms.

Vectors are tuples of Python ints. A lattice is stored by its row-style
Hermite basis, so two lattices are equal exactly when their bases are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInput

Vector = tuple


def _check_dims(vectors, rank):
    for v in vectors:
        if len(v) != rank:
            raise InvalidInput(f"vector {tuple(v)} has length {len(v)}, expected {rank}")


def _hnf_with_transform(gens: Sequence[Sequence[int]], rank: int):
    """Row-reduce ``gens`` to Hermite form.

    Returns ``(basis, transform, pivots)`` where ``transform`` is a
    unimodular matrix with ``transform @ gens`` equal to ``basis`` followed
    by zero rows.
    """
    A = [list(g) for g in gens]
    m = len(A)
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(rank):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[p] = A[p], A[r]
            U[r], U[p] = U[p], U[r]
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
            U[r] = [-x for x in U[r]]
        piv = A[r][c]
        for i in range(r):
            q = A[i][c] // piv
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in A[:r]], U, pivots


@dataclass(frozen=True)
class IntLattice:
    """A sublattice of Z^rank, held in canonical Hermite form."""

    ambient_rank: int
    basis: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def __contains__(self, v) -> bool:
        return lattice_member(v, self)

    def to_json(self) -> dict:
        return {"rank": self.ambient_rank, "basis": [list(row) for row in self.basis]}

    @classmethod
    def from_json(cls, data: dict) -> "IntLattice":
        return hnf(data.get("basis", []), data["rank"])


@dataclass(frozen=True)
class AbGroupPresentation:
    """Finitely generated abelian group Z^free_rank + sum of Z/t."""

    free_rank: int
    torsion: tuple = ()

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def hnf(generators: Iterable[Sequence[int]], ambient_rank: int) -> IntLattice:
    """Canonical Hermite basis of the lattice spanned by ``generators``."""
    if ambient_rank < 1:
        raise InvalidInput("ambient rank must be positive")
    gens = [tuple(int(x) for x in g) for g in generators]
    _check_dims(gens, ambient_rank)
    basis, _, _ = _hnf_with_transform([g for g in gens if any(g)], ambient_rank)
    return IntLattice(ambient_rank, tuple(basis))


def zero_lattice(rank: int) -> IntLattice:
    return IntLattice(rank, ())


def coordinate_lattice(rank: int, coords: Iterable[int]) -> IntLattice:
    """Span of e_i for the given 1-based coordinates."""
    return hnf([tuple(int(j == i - 1) for j in range(rank)) for i in coords], rank)


def _reduce(v, L: IntLattice, exact: bool):
    w = list(v)
    for row, c in zip(L.basis, L.pivots):
        if exact and w[c] % row[c]:
            return None
        q = w[c] // row[c]
        if q:
            w = [x - q * y for x, y in zip(w, row)]
    return tuple(w)


def lattice_member(v: Sequence[int], L: IntLattice) -> bool:
    _check_dims([v], L.ambient_rank)
    w = _reduce(v, L, exact=True)
    return w is not None and not any(w)


def normal_form(v: Sequence[int], L: IntLattice) -> tuple:
    """Canonical representative of the coset v + L."""
    _check_dims([v], L.ambient_rank)
    return _reduce(v, L, exact=False)


def lattice_sum(L1: IntLattice, L2: IntLattice) -> IntLattice:
    if L1.ambient_rank != L2.ambient_rank:
        raise InvalidInput("lattices live in different ambient ranks")
    return hnf(L1.basis + L2.basis, L1.ambient_rank)


def solve_integer(v: Sequence[int], generators: Sequence[Sequence[int]], rank: int):
    """Integer coefficients c with sum c_i * generators[i] == v, or None."""
    gens = [tuple(g) for g in generators]
    _check_dims(gens + [tuple(v)], rank)
    if not gens:
        return () if not any(v) else None
    basis, U, pivots = _hnf_with_transform(gens, rank)
    w = list(v)
    coef = []
    for row, c in zip(basis, pivots):
        if w[c] % row[c]:
            return None
        q = w[c] // row[c]
        coef.append(q)
        w = [x - q * y for x, y in zip(w, row)]
    if any(w):
        return None
    m = len(gens)
    return tuple(sum(coef[k] * U[k][j] for k in range(len(coef))) for j in range(m))


def smith_diagonal(rows: Sequence[Sequence[int]]) -> list:
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    m, n = len(A), len(A[0])
    diag = []
    for t in range(min(m, n)):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        while True:
            _, i0, j0 = min(entries)
            A[t], A[i0] = A[i0], A[t]
            for row in A:
                row[t], row[j0] = row[j0], row[t]
            piv = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // piv
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
            for j in range(t + 1, n):
                q = A[t][j] // piv
                if q:
                    for row in A:
                        row[j] -= q * row[t]
            # remainders smaller than the pivot restart the sweep
            entries = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            entries += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            if entries:
                entries.append((abs(piv), t, t))
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % piv), None)
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad[0]])]
            entries = [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
        diag.append(abs(A[t][t]))
    return diag


def quotient_presentation(ambient_rank: int, L: IntLattice) -> AbGroupPresentation:
    """Invariant-factor presentation of Z^ambient_rank / L."""
    if L.ambient_rank != ambient_rank:
        raise InvalidInput("lattice rank does not match ambient rank")
    d = smith_diagonal(L.basis)
    return AbGroupPresentation(ambient_rank - len(d), tuple(x for x in d if x > 1))


def rational_point(ineqs: list, nvars: int):
    """A rational point with ``a . x >= b`` for all ``(a, b)``, or None.

    Exact Fourier-Motzkin elimination followed by back-substitution.
    """
    stages = []
    cur = list(dict.fromkeys(ineqs))
    for k in range(nvars):
        stages.append(cur)
        pos = [q for q in cur if q[0][k] > 0]
        neg = [q for q in cur if q[0][k] < 0]
        new = [q for q in cur if q[0][k] == 0]
        for a, b in pos:
            for c, d in neg:
                s, t = -c[k], a[k]
                new.append((tuple(s * x + t * y for x, y in zip(a, c)), s * b + t * d))
        cur = list(dict.fromkeys(new))
    if any(b > 0 for _, b in cur):
        return None
    x = [Fraction(0)] * nvars
    for k in reversed(range(nvars)):
        lo, hi = [], []
        for a, b in stages[k]:
            if a[k] == 0:
                continue
            rest = b - sum(a[j] * x[j] for j in range(k + 1, nvars))
            (lo if a[k] > 0 else hi).append(Fraction(rest) / a[k])
        x[k] = max(lo) if lo else (min(hi) if hi else Fraction(0))
    return x
