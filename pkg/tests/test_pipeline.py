import pytest

from nnrepr.checkpoint import JsonCheckpointStore
from nnrepr.constructions import xor_mpptf
from nnrepr.core.errors import ConversionError
from nnrepr.core.pipeline import Pipeline, PipelineConfig
from nnrepr.core.types import ModelKind, PipelineState
from nnrepr.models import MpPTF, ThresholdCircuit
from nnrepr.passes import ConversionPass


def swap_sides(m: MpPTF, **_) -> MpPTF:
    return MpPTF(arity=m.arity, left=m.right, right=m.left)


class TestPipeline:
    async def test_mpptf_to_circuit(self):
        pipeline = Pipeline()
        out, reports = await pipeline.execute(xor_mpptf(3), ["mpptf-to-hnn", "hnn-to-depth3"])
        assert isinstance(out, ThresholdCircuit)
        assert out.size == 7
        assert [r.name for r in reports] == ["mpptf-to-hnn", "hnn-to-depth3"]
        assert all(r.met for r in reports)
        assert len(pipeline.traces) == 2
        assert pipeline.state == PipelineState.COMPLETED

    async def test_traces_written_to_store(self, tmp_path):
        store = JsonCheckpointStore(str(tmp_path))
        pipeline = Pipeline(PipelineConfig(metadata={"seed": 3}), store=store)
        await pipeline.execute(xor_mpptf(2), ["mpptf-to-hnn", "hnn-to-depth3"])
        files = sorted(p.name for p in tmp_path.glob("nnrepr-trace_*.json"))
        assert len(files) == 2
        assert files[0].endswith("_1.json")
        assert pipeline.traces[0].metadata["seed"] == 3

    async def test_broken_pass_is_caught(self):
        pipeline = Pipeline()
        await pipeline.add_pass(ConversionPass(
            "broken", "Swaps the two sides", ModelKind.MPPTF, ModelKind.MPPTF, convert=swap_sides
        ))
        with pytest.raises(ConversionError) as info:
            await pipeline.execute(xor_mpptf(3), ["broken"])
        assert info.value.witness == (0, 0, 0)
        assert pipeline.state == PipelineState.ERROR

    async def test_verification_can_be_disabled(self):
        pipeline = Pipeline(PipelineConfig(verify=False, trace_enabled=False))
        await pipeline.add_pass(ConversionPass(
            "broken", "Swaps the two sides", ModelKind.MPPTF, ModelKind.MPPTF, convert=swap_sides
        ))
        out, _ = await pipeline.execute(xor_mpptf(2), ["broken"])
        assert out.left == xor_mpptf(2).right
        assert pipeline.traces == []

    async def test_duplicate_pass(self):
        pipeline = Pipeline()
        p = ConversionPass("broken", "", ModelKind.MPPTF, ModelKind.MPPTF, convert=swap_sides)
        await pipeline.add_pass(p)
        with pytest.raises(ValueError):
            await pipeline.add_pass(p)
        await pipeline.remove_pass("broken")
        assert "broken" not in pipeline.passes

    async def test_wrong_source_kind(self):
        pipeline = Pipeline()
        with pytest.raises(ValueError):
            await pipeline.execute(xor_mpptf(2), ["hnn-to-depth3"])
        assert pipeline.state == PipelineState.ERROR

    async def test_pass_options(self):
        pipeline = Pipeline()
        out, reports = await pipeline.execute(
            xor_mpptf(2),
            ["mpptf-to-hnn", "hnn-to-depth3"],
            options={"hnn-to-depth3": {"variant": None}},
        )
        assert reports[-1].met

    async def test_too_many_passes(self):
        pipeline = Pipeline(PipelineConfig(max_passes=1))
        with pytest.raises(ValueError):
            await pipeline.execute(xor_mpptf(2), ["mpptf-to-kstat", "kstat-to-kstat"])
