"""Command-line interface: ``grothmon <group> <command> [options]``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import intermediate as inter
from . import monoid as mon
from . import quiver as qv
from .errors import GrothmonError, InvalidInput
from .lattice import hnf
from .verify import degenerate_subgroups, run_suite


# -- argument parsing helpers ---------------------------------------------------

def _quiver_size(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 1 <= n <= 8:
        raise argparse.ArgumentTypeError("n must be between 1 and 8")
    return n


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return k


def parse_vectors(text: str) -> list:
    """``"1,0;0,2"`` -> ``[(1, 0), (0, 2)]``; empty text gives no vectors."""
    out = []
    for part in filter(None, (p.strip() for p in text.split(";"))):
        try:
            out.append(tuple(int(x) for x in part.strip("()[] ").split(",")))
        except ValueError:
            raise InvalidInput(f"cannot parse vector {part!r}") from None
    return out


def parse_index_set(text: str) -> list:
    try:
        return sorted({int(x) for x in text.replace(";", ",").split(",") if x.strip()})
    except ValueError:
        raise InvalidInput(f"cannot parse index set {text!r}") from None


def parse_module(text: str, n: int) -> qv.ModuleObj:
    """Module syntax matches torsionfree syntax but keeps multiplicities."""
    parts = []
    for part in filter(None, (p.strip() for p in text.split(";"))):
        try:
            lo, hi = (int(x) for x in part.strip("[] ").split(","))
        except ValueError:
            raise InvalidInput(f"cannot parse interval {part!r}") from None
        I = qv.Interval(lo, hi)
        if hi > n:
            raise InvalidInput(f"interval {I} exceeds n={n}")
        parts.append(I)
    return qv.ModuleObj.of(*parts)


def _monoid_from_args(args) -> mon.CanonicalMonoid:
    if args.input:
        with open(args.input) as fh:
            return mon.CanonicalMonoid.from_json(json.load(fh))
    if args.rank is None:
        raise InvalidInput("give --rank or --input")
    if args.rank < 1:
        raise InvalidInput("rank must be positive")
    return mon.make(args.rank, parse_index_set(args.inverted), parse_vectors(args.relations))


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _monoid_report(M: mon.CanonicalMonoid) -> dict:
    return {
        "monoid": M.to_json(),
        "type": M.describe(),
        "units": str(mon.units(M)),
        "group_completion": str(mon.group_completion(M)),
    }


def _monoid_text(M: mon.CanonicalMonoid) -> str:
    r = _monoid_report(M)
    rel = [list(g) for g in M.relations.basis]
    return (f"monoid: rank {M.rank}, inverted {sorted(M.inverted)}, relations {rel}\n"
            f"type: {r['type']}\nunits: {r['units']}\ngroup completion: {r['group_completion']}")


# -- monoid ---------------------------------------------------------------------

def cmd_monoid(args) -> int:
    M = _monoid_from_args(args)
    if args.action == "make":
        _emit(args, _monoid_text(M), _monoid_report(M))
    elif args.action in ("quotient", "localize"):
        gens = [M.elem(v) for v in parse_vectors(args.gens)]
        if args.action == "quotient":
            R = mon.quotient_by_submonoid(M, mon.SubmonoidGens(M, tuple(gens)))
        else:
            R = mon.localize(M, gens)
        _emit(args, _monoid_text(R), _monoid_report(R))
    elif args.action == "gp":
        G = mon.group_completion(M)
        _emit(args, str(G), G.to_json())
    elif args.action == "faces":
        fs = mon.faces(M)
        lines = [f"{len(fs)} faces"] + [str(sorted(F.coords)) for F in fs]
        _emit(args, "\n".join(lines), {"count": len(fs), "faces": [sorted(F.coords) for F in fs]})
    return 0


# -- torsionfree classes and Serre subcategories --------------------------------

def _torf_dot(n: int, T) -> str:
    return qv.ar_quiver_dot(n, [(I, 0) for I in T], shifts=(0,))


def cmd_torf(args) -> int:
    n = args.n
    if args.action == "list":
        classes = qv.enumerate_torsionfree_classes(n)
        if args.format == "json":
            print(json.dumps([{"intervals": [I.to_json() for I in sorted(T)]} for T in classes], indent=2))
        else:
            print(f"{len(classes)} torsionfree classes for n={n}")
            for T in classes:
                print(qv.TorsionfreeClass(n, T))
        return 0
    T = qv.parse_torf(args.torf, n)
    w = qv.closure_violation(T)
    if args.format == "dot":
        print(_torf_dot(n, T), end="")
        return 0 if w is None else 1
    data = {"intervals": [I.to_json() for I in sorted(T)], "torsionfree": w is None}
    text = f"{qv.TorsionfreeClass(n, T)}: " + ("torsionfree" if w is None else "not torsionfree")
    if w is not None:
        data["witness"] = [x.to_json() if hasattr(x, "to_json") else x for x in w]
        text += f" ({inter._describe_violation(w)})"
    _emit(args, text, data)
    return 0 if w is None else 1


def cmd_serre(args) -> int:
    n = args.n
    if args.action == "list":
        subs = qv.serre_subcategories(n)
        if args.format == "json":
            print(json.dumps([S.to_json() for S in subs], indent=2))
        else:
            print(f"{len(subs)} Serre subcategories for n={n}")
            for S in subs:
                print(f"simples {sorted(S.simples)}: {qv.TorsionfreeClass(n, S.intervals())}")
        return 0
    if args.face is not None:
        K = parse_index_set(args.face)
        if any(not 1 <= k <= n for k in K):
            raise InvalidInput(f"face coordinates must lie in 1..{n}")
        S = qv.SerreSub(n, frozenset(K))
    elif args.torf is not None:
        T = qv.parse_torf(args.torf, n)
        if not qv.is_serre(T):
            raise InvalidInput(f"{qv.TorsionfreeClass(n, T)} is not a Serre subcategory")
        S = qv.SerreSub(n, qv.face_from_serre(T))
    else:
        raise InvalidInput("give --face or --torf")
    if args.format == "dot":
        print(_torf_dot(n, S.intervals()), end="")
        return 0
    _emit(args, f"face {sorted(S.simples)} <-> {qv.TorsionfreeClass(n, S.intervals())}", S.to_json())
    return 0


# -- dense 2-out-of-3 subcategories ---------------------------------------------

def _subgroups_of_index(n: int, max_index: int) -> list:
    """Full-rank subgroups of Z^n of index at most ``max_index`` (Hermite bases)."""
    out = []
    for diag in itertools.product(range(1, max_index + 1), repeat=n):
        prod = 1
        for d in diag:
            prod *= d
        if prod > max_index:
            continue
        slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for fill in itertools.product(*[range(diag[j]) for _, j in slots]):
            rows = [[0] * n for _ in range(n)]
            for i in range(n):
                rows[i][i] = diag[i]
            for (i, j), v in zip(slots, fill):
                rows[i][j] = v
            out.append(hnf(rows, n))
    return sorted(set(out), key=lambda L: L.basis)


def _dense_record(H) -> dict:
    p = qv.strictly_positive_element(H)
    return {"basis": [list(r) for r in H.basis], "strictly_positive": p is not None,
            "witness": list(p) if p else None}


def cmd_dense(args) -> int:
    n = args.n
    if args.action == "check":
        H = hnf(parse_vectors(args.subgroup), n)
        rec = _dense_record(H)
        text = (f"H = {[list(r) for r in H.basis]}: "
                + (f"dense 2-out-of-3 (strictly positive element {tuple(rec['witness'])})"
                   if rec["strictly_positive"] else "no strictly positive element"))
        if args.object is not None:
            X = parse_module(args.object, n)
            rec["object"] = X.to_json()
            rec["member"] = qv.dense_membership(H, X)
            text += f"\n{X} in class: {rec['member']}"
        _emit(args, text, rec)
        return 0
    groups = _subgroups_of_index(n, args.max_index)
    if args.degenerate and n == 2:
        groups += degenerate_subgroups()
    recs = [_dense_record(H) for H in groups]
    if args.format == "json":
        print(json.dumps(recs, indent=2))
    else:
        print(f"{len(recs)} subgroups")
        for r in recs:
            flag = "dense" if r["strictly_positive"] else "not dense"
            print(f"{r['basis']}: {flag}")
    return 0


# -- intermediate subcategories ---------------------------------------------------

def _category(args) -> inter.IntermediateCat:
    return inter.from_torsionfree(args.n, qv.parse_torf(args.torf, args.n))


def cmd_inter(args) -> int:
    C = _category(args)
    n = C.n
    if args.format == "dot":
        print(inter.dot(C), end="")
        return 0
    if args.action == "monoid":
        M = inter.monoid_of(C)
        subs = inter.serre_subcats_of(C)
        data = _monoid_report(M)
        data["torf"] = [I.to_json() for I in sorted(C.torf)]
        data["serre"] = [sorted(S.simples) for S in subs]
        lines = [f"C = F[1] * A with F = {qv.TorsionfreeClass(n, C.torf)}", _monoid_text(M),
                 f"{len(subs)} Serre subcategories:"]
        lines += [f"  F[1] * S{sorted(S.simples)}" for S in subs]
        _emit(args, "\n".join(lines), data)
    elif args.action == "serre":
        subs = inter.serre_subcats_of(C)
        data = [{"simples": sorted(S.simples), "face": sorted(inter.serre_face(C, S).coords)} for S in subs]
        lines = [f"{len(subs)} Serre subcategories (smallest {sorted(inter.smallest_serre(C).simples)})"]
        lines += [f"simples {d['simples']} <-> face {d['face']}" for d in data]
        _emit(args, "\n".join(lines), data)
    elif args.action == "localize":
        S = qv.SerreSub(n, frozenset(parse_index_set(args.serre)))
        loc = inter.serre_localization(C, S)
        text = (f"M(C)/M_S: {loc.m_quotient.describe()}\nM(A)/M_S: {loc.a_quotient.describe()}\n"
                f"isomorphic: {loc.iso}")
        _emit(args, text, loc.to_json())
    elif args.action == "class":
        X = inter.DObj(parse_module(args.neg, n), parse_module(args.zero, n))
        c = inter.class_of(C, X)
        _emit(args, f"[{X}] = {c.normal}", {"object": X.to_json(), "class": c.to_json()})
    return 0


# -- verify ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    results = run_suite(args.suite, n=args.n, box=args.box, dim_bound=args.dim_bound)
    for r in results:
        print(f"{r.seconds:8.3f}s  {r.name}", file=sys.stderr)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    return 0 if all(r.passed for r in results) else 1


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grothmon", description="Grothendieck monoids of type-A categories.")
    sub = p.add_subparsers(dest="group", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default="text")

    m = sub.add_parser("monoid", help="canonical monoid arithmetic")
    m.add_argument("action", choices=["make", "quotient", "localize", "gp", "faces"])
    m.add_argument("--rank", type=int)
    m.add_argument("--inverted", default="", help="comma-separated 1-based coordinates")
    m.add_argument("--relations", default="", help='relation vectors, e.g. "2,0;1,1"')
    m.add_argument("--gens", default="", help="generator vectors for quotient/localize")
    m.add_argument("--input", help="monoid JSON file")
    common(m)
    m.set_defaults(func=cmd_monoid)

    t = sub.add_parser("torf", help="torsionfree classes of mod kA_n")
    t.add_argument("action", choices=["list", "check"])
    t.add_argument("--n", type=_quiver_size, required=True)
    t.add_argument("--torf", default="", help='e.g. "[1,1];[1,2]", "all" or ""')
    common(t, ("text", "json", "dot"))
    t.set_defaults(func=cmd_torf)

    s = sub.add_parser("serre", help="Serre subcategories and faces")
    s.add_argument("action", choices=["list", "map"])
    s.add_argument("--n", type=_quiver_size, required=True)
    s.add_argument("--face")
    s.add_argument("--torf")
    common(s, ("text", "json", "dot"))
    s.set_defaults(func=cmd_serre)

    d = sub.add_parser("dense", help="dense 2-out-of-3 subgroups")
    d.add_argument("action", choices=["check", "enumerate"])
    d.add_argument("--n", type=_quiver_size, required=True)
    d.add_argument("--subgroup", default="", help='generators, e.g. "1,1;0,3"')
    d.add_argument("--object", help="module to test for membership")
    d.add_argument("--max-index", type=_positive, default=3)
    d.add_argument("--degenerate", action="store_true", help="also list zero and cyclic subgroups (n=2)")
    common(d)
    d.set_defaults(func=cmd_dense)

    i = sub.add_parser("inter", help="intermediate subcategories F[1] * A")
    i.add_argument("action", choices=["monoid", "serre", "localize", "class"])
    i.add_argument("--n", type=_quiver_size, required=True)
    i.add_argument("--torf", default="")
    i.add_argument("--serre", default="", help="simple set of the Serre subcategory")
    i.add_argument("--neg", default="", help="H^-1 part of the object")
    i.add_argument("--zero", default="", help="H^0 part of the object")
    common(i, ("text", "json", "dot"))
    i.set_defaults(func=cmd_inter)

    v = sub.add_parser("verify", help="oracle cross-checks")
    v.add_argument("--suite", choices=["monoid", "quiver", "intermediate", "all"], default="all")
    v.add_argument("--n", type=_quiver_size, default=3)
    v.add_argument("--box", type=_positive, default=4)
    v.add_argument("--dim-bound", type=_positive, default=4)
    common(v)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GrothmonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
