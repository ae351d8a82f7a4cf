import pytest

from nnrepr.boolfn import FamilySpec, Substitution, all_inputs, family, from_callable, from_truth_table
from nnrepr.constructions import disj_hnn, xor_mpptf
from nnrepr.core.errors import ArityError, RepresentationError
from nnrepr.core.types import EquivStatus
from nnrepr.models import MpPTF, NNRep, well_defined
from nnrepr.oracle import component_bound_check, equiv_check, equiv_check_async, min_hnn_search
from nnrepr.passes import mpptf_to_hnn

XOR2 = from_truth_table([0, 1, 1, 0], 2)
AND2 = from_truth_table([0, 0, 0, 1], 2)


class TestEquivCheck:
    def test_equal(self):
        report = equiv_check(XOR2, family(FamilySpec.parse("xor", 2)), 2)
        assert report.status == EquivStatus.EQUAL
        assert report.witness is None
        assert report.inputs_checked == 4

    def test_mismatch_reports_lowest_index(self):
        report = equiv_check(XOR2, AND2, 2)
        assert report.status == EquivStatus.MISMATCH
        assert report.witness == (1, 0)

    def test_ill_defined(self):
        r = NNRep(embedding=Substitution.identity(2), positive=((1, 1),), negative=((0, 0),))
        report = equiv_check(r, AND2, 2)
        assert report.status == EquivStatus.ILL_DEFINED
        assert report.witness == (1, 0)

    def test_swapped_xor_orientation(self):
        m = xor_mpptf(3)
        swapped = MpPTF(arity=3, left=m.right, right=m.left)
        report = equiv_check(swapped, family(FamilySpec.parse("xor", 3)), 3)
        assert report.status == EquivStatus.MISMATCH
        assert report.witness == (0, 0, 0)

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            equiv_check(XOR2, family(FamilySpec.parse("xor", 3)), 2)

    def test_parallel_agrees(self):
        f = family(FamilySpec.parse("maj", 8))
        g = family(FamilySpec.parse("xor", 8))
        serial = equiv_check(f, g, 8)
        parallel = equiv_check(f, g, 8, jobs=2)
        assert parallel.status == serial.status
        assert parallel.witness == serial.witness

    async def test_async(self):
        report = await equiv_check_async(XOR2, AND2, 2)
        assert report.witness == (1, 0)


class TestComponentBound:
    def test_violation(self):
        r = NNRep(embedding=Substitution.identity(3), positive=((1, 1, 1),), negative=((0, 0, 0),))
        assert component_bound_check(family(FamilySpec.parse("xor", 3)), r)

    def test_disj_is_fine(self):
        assert not component_bound_check(family(FamilySpec.parse("disj", 2)), disj_hnn(2))

    def test_rational_anchors_rejected(self):
        r = NNRep(embedding=Substitution.identity(1), positive=(("1/2",),), negative=((0,),))
        with pytest.raises(RepresentationError):
            component_bound_check(family(FamilySpec.parse("xor", 1)), r)

    def test_embedded_anchors_rejected(self):
        r = mpptf_to_hnn(xor_mpptf(2))
        with pytest.raises(RepresentationError):
            component_bound_check(family(FamilySpec.parse("xor", 2)), r)

    def test_holds_on_verified_representations(self, rng):
        verified = [(family(FamilySpec.parse("disj", n)), disj_hnn(n)) for n in (1, 2, 3)]
        for name, n in [("maj", 3), ("xor", 2), ("maj", 4)]:
            f = family(FamilySpec.parse(name, n))
            verified.append((f, min_hnn_search(f).witness))
        while len(verified) < 40:
            n = rng.randint(1, 4)
            cube = list(all_inputs(n))
            anchors = rng.sample(cube, rng.randint(2, len(cube)))
            split = rng.randint(1, len(anchors) - 1)
            r = NNRep(
                embedding=Substitution.identity(n),
                positive=tuple(anchors[:split]),
                negative=tuple(anchors[split:]),
            )
            if well_defined(r).defined:
                verified.append((from_callable(r, n), r))
        for f, r in verified:
            assert equiv_check(r, f, f.arity).equal
            assert not component_bound_check(f, r)
