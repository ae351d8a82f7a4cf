import pytest

from nnrepr.core.types import ModelKind, Output
from nnrepr.models import DecisionList, LinearForm, MpPTF
from nnrepr.oracle import equiv_check
from nnrepr.passes import eldl_to_kstat, mpptf_to_ldl

X1 = LinearForm.of([1], 0)
NOT_X1 = LinearForm.of([-1], 1)


class TestMpptfToLdl:
    def test_single_bit(self):
        m = MpPTF(arity=1, left=(X1,), right=(NOT_X1,))
        d = mpptf_to_ldl(m)
        assert d.model == "ldl"
        assert [(e.form, e.output) for e in d.entries] == [
            (LinearForm.of([-4], 0), 1),
            (LinearForm.of([4], -4), 0),
            (LinearForm.of([-4], 4), 1),
        ]
        assert d((0,)) == Output.ONE
        assert d((1,)) == Output.ZERO

    def test_random_corpus(self, rng, random_mpptf):
        for _ in range(50):
            m = random_mpptf(rng)
            d = mpptf_to_ldl(m)
            values = sum(len(f.attainable_values()) for f in (*m.left, *m.right))
            assert d.length <= values
            assert equiv_check(d, m, m.arity).equal

    def test_no_trailing_zero_entries(self, rng, random_mpptf):
        for _ in range(30):
            d = mpptf_to_ldl(random_mpptf(rng))
            if d.entries:
                assert d.entries[-1].output == 1


class TestEldlToKstat:
    def test_single_query(self):
        d = DecisionList.build(ModelKind.ELDL, 1, [(LinearForm.of([1], -1), 1)])
        s = eldl_to_kstat(d)
        assert s.k == 3
        assert s.forms == (
            LinearForm.of([5], -5),
            LinearForm.of([-5], 5),
            LinearForm.constant(1, 1),
            LinearForm.constant(1, -1),
        )
        assert s.labels == (1, 0, 0, 0)
        assert s((1,)) == Output.ONE
        assert s((0,)) == Output.ZERO

    def test_empty_list_is_constant_zero(self):
        d = DecisionList.build(ModelKind.ELDL, 2, [])
        s = eldl_to_kstat(d)
        assert all(s(x) == Output.ZERO for x in [(0, 0), (1, 0), (0, 1), (1, 1)])

    def test_random_corpus(self, rng, random_eldl):
        for _ in range(60):
            d = random_eldl(rng)
            s = eldl_to_kstat(d)
            assert len(s.forms) == 2 * (d.length + 1)
            assert s.k == d.length + 2
            assert equiv_check(s, d, d.arity).equal

    def test_threshold_list_rejected(self):
        d = DecisionList.build(ModelKind.LDL, 1, [(X1, 1)])
        with pytest.raises(ValueError):
            eldl_to_kstat(d)
