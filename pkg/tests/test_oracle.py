import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grothmon import oracle
from grothmon import quiver as qv
from grothmon.errors import InvalidInput, WindowNotClosed
from grothmon.quiver import Interval, ModuleObj


def S(i):
    return Interval(i, i)


def rep(n, *ivs):
    return oracle.rep_of(ModuleObj.of(*ivs), n)


class TestLinearAlgebra:
    def test_rank(self):
        assert oracle.gf2_rank([0b11, 0b01, 0b10]) == 2
        assert oracle.gf2_rank([0b110, 0b011, 0b101]) == 2
        assert oracle.gf2_rank([]) == 0

    @settings(max_examples=300, deadline=None)
    @given(st.lists(st.integers(0, 63), max_size=6))
    def test_rank_matches_span_size(self, rows):
        assert len(oracle._span(rows)) == 2 ** oracle.gf2_rank(rows)

    @pytest.mark.parametrize("d,count", [(0, 1), (1, 2), (2, 5), (3, 16), (4, 67)])
    def test_subspace_counts(self, d, count):
        # Gaussian binomial sums over F_2
        assert len(oracle.subspaces(d)) == count

    def test_rep_shape_checked(self):
        with pytest.raises(InvalidInput):
            oracle.Rep((1, 1), ((0b11,),))
        with pytest.raises(InvalidInput):
            oracle.Rep((7, 6), (tuple([0] * 7),))


class TestHom:
    def test_endomorphisms_of_interval(self):
        X = oracle.interval_rep(2, Interval(1, 2))
        assert oracle.hom_dim(X, X) == 1

    def test_no_maps_between_simples(self):
        assert oracle.hom_dim(oracle.interval_rep(2, S(2)), oracle.interval_rep(2, S(1))) == 0

    def test_zero(self):
        assert oracle.hom_dim(oracle.zero_rep(3), oracle.interval_rep(3, Interval(1, 3))) == 0

    def test_additive(self):
        ivs = qv.all_intervals(3)
        reps = {I: oracle.interval_rep(3, I) for I in ivs}
        for A, B, C in itertools.product(ivs, repeat=3):
            s = oracle.direct_sum(reps[A], reps[B])
            assert oracle.hom_dim(s, reps[C]) == oracle.hom_dim(reps[A], reps[C]) + oracle.hom_dim(reps[B], reps[C])
            assert oracle.hom_dim(reps[C], s) == oracle.hom_dim(reps[C], reps[A]) + oracle.hom_dim(reps[C], reps[B])


class TestSubrepsAndDecomposition:
    def test_subreps_of_interval(self):
        subs = oracle.all_subreps(oracle.interval_rep(2, Interval(1, 2)))
        assert sorted(oracle.decompose(R) for _, R in subs) == sorted(
            [ModuleObj(), ModuleObj.of(S(1)), ModuleObj.of(Interval(1, 2))])

    def test_decompose_sum(self):
        assert oracle.decompose(rep(2, S(1), S(2))) == ModuleObj.of(S(1), S(2))

    def test_decompose_nonsplit_middle(self):
        recs = oracle.all_ses(oracle.interval_rep(2, S(1)), oracle.interval_rep(2, S(2)))
        assert [r.mid_obj for r in recs if not r.is_split()] == [ModuleObj.of(Interval(1, 2))]

    def test_decompose_twisted_basis(self):
        # [1,2] + S_1 presented with a non-diagonal arrow matrix
        X = oracle.Rep((2, 1), ((0b1, 0b1),))
        assert oracle.decompose(X) == ModuleObj.of(S(1), Interval(1, 2))

    def test_subrep_limit(self):
        with pytest.raises(InvalidInput):
            oracle.all_subreps(rep(1, *[S(1)] * 7))


class TestSequences:
    def test_two_classes(self):
        mids = oracle.ses_middles(ModuleObj.of(S(1)), ModuleObj.of(S(2)), 2)
        assert mids == sorted([ModuleObj.of(S(1), S(2)), ModuleObj.of(Interval(1, 2))])

    def test_disconnected_supports(self):
        assert oracle.ses_middles(ModuleObj.of(S(1)), ModuleObj.of(S(3)), 3) == [ModuleObj.of(S(1), S(3))]

    def test_zero_sub(self):
        recs = oracle.all_ses(oracle.zero_rep(2), oracle.interval_rep(2, Interval(1, 2)))
        assert len(recs) == 1 and recs[0].is_split()

    def test_records_are_exact(self):
        n = 3
        mods = [X for X in qv.modules_up_to(n, 3) if X]
        for A in mods:
            for C in mods:
                if A.total_dim + C.total_dim <= 4:
                    recs = oracle.all_ses(oracle.rep_of(A, n), oracle.rep_of(C, n))
                    assert any(r.is_split() for r in recs)
                    assert all(r.check() for r in recs)

    def test_ext_rule_middle(self):
        mids = oracle.ses_middles(ModuleObj.of(Interval(1, 2)), ModuleObj.of(Interval(2, 3)), 3)
        assert ModuleObj.of(Interval(1, 3), S(2)) in mids

    def test_record_json(self):
        rec = oracle.all_ses(oracle.interval_rep(2, S(1)), oracle.interval_rep(2, S(2)))[0]
        data = rec.to_json()
        assert set(data) == {"sub", "mid", "quot", "split"}


class TestQuasiSplit:
    def test_semisimple(self):
        assert oracle.is_quasi_split_window(1, 3) == (True, None)

    @pytest.mark.parametrize("n", [2, 3])
    def test_nonsplit_witness(self, n):
        ok, w = oracle.is_quasi_split_window(n, 2)
        assert not ok
        assert w.to_json() == {"sub": [[1, 1]], "mid": [[1, 2]], "quot": [[2, 2]], "split": False}


class TestClosure:
    def test_abelian_type_a2(self):
        win = qv.modules_up_to(2, 2)
        parts = oracle.c_equiv_closure(win, oracle.abelian_conflations(2, 2))
        assert oracle.same_partition(parts, oracle.partition_of(win, lambda X: qv.dim_vector(X, 2)))
        block = next(p for p in parts if ModuleObj.of(Interval(1, 2)) in p)
        assert ModuleObj.of(S(1), S(2)) in block

    def test_no_conflations_is_discrete(self):
        win = qv.modules_up_to(2, 2)
        assert len(oracle.c_equiv_closure(win, [])) == len(win)

    def test_window_escape_is_loud(self):
        win = [ModuleObj(), ModuleObj.of(S(1))]
        with pytest.raises(WindowNotClosed):
            oracle.c_equiv_closure(win, [(ModuleObj.of(S(1)), ModuleObj.of(S(1), S(1)), ModuleObj.of(S(1)))])

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_abelian_windows_are_dimension_fibers(self, n):
        win = qv.modules_up_to(n, 4)
        parts = oracle.c_equiv_closure(win, oracle.abelian_conflations(n, 4))
        assert oracle.same_partition(parts, oracle.partition_of(win, lambda X: qv.dim_vector(X, n)))

    def test_c_closed_subsets(self):
        win = qv.modules_up_to(2, 2)
        conf = oracle.abelian_conflations(2, 2)
        fiber = lambda X: qv.dim_vector(X, 2) == (1, 1)  # noqa: E731
        assert oracle.is_c_closed_window(fiber, win, conf)
        assert not oracle.is_c_closed_window(lambda X: X == ModuleObj.of(Interval(1, 2)), win, conf)
        everything = lambda X: True  # noqa: E731
        assert oracle.is_c_closed_window(everything, win, conf)
        assert oracle.is_serre_window(everything, win, conf)

    def test_serre_window(self):
        win = qv.modules_up_to(2, 3)
        conf = oracle.abelian_conflations(2, 3)
        only_s1 = lambda X: all(I == S(1) for I in X.summands)  # noqa: E731
        assert oracle.is_serre_window(only_s1, win, conf)
        not_serre = lambda X: all(I in (S(1), Interval(1, 2)) for I in X.summands)  # noqa: E731
        assert not oracle.is_serre_window(not_serre, win, conf)
