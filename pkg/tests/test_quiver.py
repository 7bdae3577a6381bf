import pytest

from grothmon import oracle, verify
from grothmon import quiver as qv
from grothmon.errors import InvalidInput, NoExtension
from grothmon.lattice import hnf
from grothmon.quiver import Interval, ModuleObj


def I(a, b):
    return Interval(a, b)


class TestObjects:
    def test_quiver_bounds(self):
        qv.LinearAQuiver(8)
        with pytest.raises(InvalidInput):
            qv.LinearAQuiver(9)
        with pytest.raises(InvalidInput):
            qv.LinearAQuiver(0)

    def test_bad_interval(self):
        with pytest.raises(InvalidInput):
            Interval(2, 1)

    def test_dim_vector(self):
        assert qv.dim_vector(ModuleObj.of(I(1, 2)), 3) == (1, 1, 0)
        assert qv.dim_vector(ModuleObj(), 3) == (0, 0, 0)
        assert qv.dim_vector(ModuleObj.of(I(1, 3), I(2, 2)), 3) == (1, 2, 1)

    def test_dim_vector_matches_representation(self):
        X = ModuleObj.of(I(1, 3), I(2, 2))
        assert oracle.rep_of(X, 3).dims == (1, 2, 1)

    def test_module_json(self):
        X = ModuleObj.of(I(2, 3), I(1, 1))
        assert X.to_json() == [[1, 1], [2, 3]]
        assert ModuleObj.from_json(X.to_json()) == X
        assert I(1, 2).to_json() == [1, 2]

    def test_modules_up_to(self):
        assert len(qv.modules_up_to(3, 4)) == 62
        assert qv.modules_up_to(1, 2) == [ModuleObj(), ModuleObj.of(I(1, 1)), ModuleObj.of(I(1, 1), I(1, 1))]


class TestIntervalRules:
    def test_submodules(self):
        assert qv.submodules_of(I(1, 3)) == [None, I(1, 1), I(1, 2), I(1, 3)]
        assert qv.submodules_of(I(2, 2)) == [None, I(2, 2)]
        assert qv.submodules_of(I(2, 3)) == [None, I(2, 2), I(2, 3)]

    def test_quotients(self):
        assert qv.quotients_of(I(1, 2)) == [None, I(2, 2), I(1, 2)]

    def test_ext_examples(self):
        assert qv.ext_dim(I(2, 2), I(1, 1)) == 1
        assert qv.ext_middle(I(2, 2), I(1, 1)) == ModuleObj.of(I(1, 2))
        assert qv.ext_dim(I(1, 1), I(2, 2)) == 0
        assert qv.ext_dim(I(2, 3), I(1, 2)) == 1
        assert qv.ext_middle(I(2, 3), I(1, 2)) == ModuleObj.of(I(1, 3), I(2, 2))

    def test_no_extension(self):
        with pytest.raises(NoExtension):
            qv.ext_middle(I(1, 1), I(2, 2))

    def test_hom(self):
        assert qv.hom_nonzero(I(1, 2), I(1, 2))
        assert not qv.hom_nonzero(I(2, 2), I(1, 1))
        assert qv.hom_nonzero(I(1, 2), I(2, 3))

    def test_rules_agree_with_linear_algebra(self):
        ok, detail = verify.check_interval_rules(max_n=4)
        assert ok, detail

    def test_dimension_vectors_additive(self):
        ok, detail = verify.check_ses_additivity(max_n=3, dim_bound=5)
        assert ok, detail


class TestTorsionfree:
    def test_example_class(self):
        assert qv.is_torsionfree_class({I(1, 1), I(1, 2)})

    def test_missing_middle(self):
        assert not qv.is_torsionfree_class({I(1, 1), I(2, 2)})
        w = qv.closure_violation({I(1, 1), I(2, 2)})
        assert w[0] == "ext" and w[-1] == I(1, 2)

    def test_missing_submodule(self):
        w = qv.closure_violation({I(1, 2)})
        assert w == ("sub", I(1, 2), I(1, 1))

    @pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 14), (4, 42), (5, 132)])
    def test_counts(self, n, count):
        assert len(qv.enumerate_torsionfree_classes(n)) == count

    def test_enumeration_matches_definition(self):
        ok, detail = verify.check_torsionfree_enumeration(max_n=3, dim_bound=4)
        assert ok, detail

    def test_class_record(self):
        T = qv.TorsionfreeClass(3, frozenset({I(1, 2), I(1, 1)}))
        assert T.is_valid()
        assert T.to_json() == [[1, 1], [1, 2]]
        assert str(T) == "{[1,1], [1,2]}"
        with pytest.raises(InvalidInput):
            qv.TorsionfreeClass(2, frozenset({I(1, 3)}))

    def test_parse(self):
        assert qv.parse_torf("[1,1];[1,2]", 3) == {I(1, 1), I(1, 2)}
        assert qv.parse_torf("", 3) == frozenset()
        assert len(qv.parse_torf("all", 3)) == 6
        with pytest.raises(InvalidInput):
            qv.parse_torf("[1,4]", 3)
        with pytest.raises(InvalidInput):
            qv.parse_torf("[x]", 3)


class TestSerre:
    def test_from_face(self):
        assert qv.serre_from_face(3, {1, 2}) == {I(1, 1), I(1, 2), I(2, 2)}
        assert qv.serre_from_face(3, set()) == frozenset()

    def test_is_serre(self):
        assert not qv.is_serre({I(1, 1), I(1, 2)})
        assert qv.is_serre({I(1, 1), I(1, 2), I(2, 2)})

    def test_serre_quotient_rule_matches_oracle(self):
        # the quotient S_2 of [1,2] found by linear algebra is what breaks {[1,1],[1,2]}
        quots = oracle.all_quotients(oracle.interval_rep(2, I(1, 2)))
        assert ModuleObj.of(I(2, 2)) in quots

    def test_roundtrips(self):
        ok, detail = verify.check_serre_roundtrip(max_n=4)
        assert ok, detail

    def test_serre_sets_are_torsionfree(self):
        for n in range(1, 5):
            for S in qv.serre_subcategories(n):
                assert qv.is_torsionfree_class(S.intervals())


class TestDense:
    def test_grothendieck_monoid(self):
        M = qv.grothendieck_monoid(3)
        assert M.is_free() and M.rank == 3

    def test_image_submonoid(self):
        N = qv.image_submonoid(3, {I(1, 1), I(1, 2)})
        assert N.coords() == [(1, 0, 0), (1, 1, 0)]
        assert qv.image_submonoid(3, set()).gens == ()

    def test_strictly_positive(self):
        assert qv.subgroup_has_strictly_positive(hnf([(1, 1, 1)], 3))
        assert not qv.subgroup_has_strictly_positive(hnf([(1, -1, 0), (0, 0, 1)], 3))
        full = hnf([(1, 0), (0, 1)], 2)
        assert qv.subgroup_has_strictly_positive(full)
        assert all(qv.dense_membership(full, X) for X in qv.modules_up_to(2, 3))

    def test_strictly_positive_witness_needs_combination(self):
        H = hnf([(2, -1), (-1, 2)], 2)
        p = qv.strictly_positive_element(H)
        assert p is not None and all(x > 0 for x in p) and p in H

    def test_strictly_positive_brute_force(self):
        import itertools

        for a, b in itertools.product(itertools.product(range(-2, 3), repeat=3), repeat=2):
            H = hnf([a, b], 3)
            found = any(all(x > 0 for x in (s * u + t * v for u, v in zip(a, b)))
                        for s in range(-6, 7) for t in range(-6, 7))
            assert found == qv.subgroup_has_strictly_positive(H), (a, b)

    def test_subgroup_from_objects(self):
        D = qv.subgroup_from_objects([ModuleObj.of(I(1, 2)), ModuleObj.of(I(1, 1), I(1, 1))], 2)
        assert D.H.basis == ((1, 1), (0, 2))

    def test_classification(self):
        ok, detail = verify.check_dense_classification(dim_bound=4)
        assert ok, detail


class TestDot:
    def test_ar_quiver(self):
        dot = qv.ar_quiver_dot(3, [(I(1, 1), 1)])
        assert dot.startswith("digraph AR {")
        assert "i1_1_s1" in dot and "fillcolor=gray80" in dot
        assert "i2_3_s0 -> i1_1_s1" in dot
        assert dot.count("->") == 2 * 6 + 2
