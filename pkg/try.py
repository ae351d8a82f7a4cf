import asyncio
import json
from typing import Any

from dotenv import load_dotenv

from nnrepr import (
    JsonCheckpointStore,
    Pipeline,
    PipelineConfig,
    construct,
    equiv_check,
    min_hnn_search,
    xor_mpptf,
)
from nnrepr.core.config import Settings, configure_logging
from nnrepr.emit import circuit_to_dot

# Load environment variables
load_dotenv()


def print_json(obj: Any) -> None:
    """Pretty print JSON objects"""
    print(json.dumps(obj, indent=2, default=str))


async def main():
    settings = Settings.from_env(dotenv=False)
    configure_logging(settings.log_level)
    store = JsonCheckpointStore(settings.checkpoint_dir) if settings.checkpoint_dir else None

    try:
        pipeline = Pipeline(
            config=PipelineConfig(jobs=settings.jobs, metadata={"seed": settings.seed}),
            store=store
        )

        print("\n🎯 nnrepr Conversion Demo")
        print("=" * 50)

        source = xor_mpptf(4)
        print("\n📝 Source: mpPTF for XOR_4")
        print_json(source.model_dump(mode="json"))

        print("\n⚙️ Converting...")
        circuit, reports = await pipeline.execute(
            source,
            ["mpptf-to-hnn", "hnn-to-depth3"]
        )

        print("\n📊 Pass Reports:")
        for report in reports:
            print_json(report.model_dump(mode="json"))

        print("\n🔍 Pipeline Steps:")
        for trace in pipeline.traces:
            print("\n---")
            print(f"Step: {trace.action}")
            print(f"Timestamp: {trace.timestamp}")

        verdict = equiv_check(circuit, construct("xor", 4), 4, settings.jobs)
        print(f"\n✅ Circuit against XOR_4: {verdict.status.value}")
        print(circuit_to_dot(circuit, name="xor4"))

        print("\n🔎 Smallest Boolean-anchor representation of MAJ_4:")
        result = min_hnn_search(construct("maj", 4), jobs=settings.jobs, store=store)
        print_json({"m": result.m, "counts": result.counts})

    except Exception as e:
        print(f"\n❌ Error: {str(e)}")
        raise


if __name__ == "__main__":
    asyncio.run(main())
