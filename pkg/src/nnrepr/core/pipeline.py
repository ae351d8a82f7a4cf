from typing import Any, Dict, List, Optional, Tuple
import logging
import uuid

from pydantic import BaseModel, ConfigDict, Field

from ..oracle.equiv import equiv_check_async
from ..passes.registry import get_pass
from .base import BaseCheckpointStore, BasePass, BaseRepresentation, PassReport, PassTrace
from .config import MAX_ARITY
from .errors import ConversionError
from .types import PipelineState

logger = logging.getLogger(__name__)


class PipelineConfig(BaseModel):
    """Configuration for pipeline runs"""
    verify: bool = True
    jobs: int = Field(default=1, ge=1)
    trace_enabled: bool = True
    max_passes: int = Field(default=16, ge=1)
    metadata: Dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(arbitrary_types_allowed=True)


class Pipeline:
    """Runs a chain of conversion passes, checking each output against the source"""

    def __init__(
        self,
        config: Optional[PipelineConfig] = None,
        passes: Optional[Dict[str, BasePass]] = None,
        store: Optional[BaseCheckpointStore[Any]] = None
    ):
        self.config = config or PipelineConfig()
        self.passes = dict(passes) if passes is not None else {}
        self.store = store
        self.state = PipelineState.IDLE
        self._session_id = str(uuid.uuid4())
        self._step = 0
        self._traces: List[PassTrace] = []

    async def execute(
        self,
        source: BaseRepresentation,
        pass_names: List[str],
        options: Optional[Dict[str, Dict[str, Any]]] = None
    ) -> Tuple[BaseRepresentation, List[PassReport]]:
        """Apply the named passes in order"""
        if len(pass_names) > self.config.max_passes:
            raise ValueError(f"Pipeline allows at most {self.config.max_passes} passes, got {len(pass_names)}")
        options = options or {}
        current = source
        reports: List[PassReport] = []
        self._step = 0
        try:
            for name in pass_names:
                self._step += 1
                self.state = PipelineState.CONVERTING
                conversion = self._resolve(name)
                logger.info("step %d: %s", self._step, conversion.name)
                current, report = await conversion.execute(current, **options.get(name, {}))
                reports.append(report)

                arity = getattr(source, "arity")
                if self.config.verify and arity <= MAX_ARITY:
                    self.state = PipelineState.VERIFYING
                    verdict = await equiv_check_async(source, current, arity, self.config.jobs)
                    if not verdict.equal:
                        raise ConversionError(
                            f"{conversion.name} output is {verdict.status.value} against the source",
                            witness=verdict.witness,
                        )

                if self.config.trace_enabled:
                    await self._store_trace(conversion.name, report)

            self.state = PipelineState.COMPLETED
            return current, reports

        except Exception as e:
            self.state = PipelineState.ERROR
            raise e

    async def add_pass(self, conversion: BasePass) -> None:
        """Register a pass for this pipeline only"""
        if conversion.name in self.passes:
            raise ValueError(f"Pass {conversion.name} already exists")
        self.passes[conversion.name] = conversion

    async def remove_pass(self, name: str) -> None:
        """Remove a pass by name"""
        if name in self.passes:
            del self.passes[name]

    def _resolve(self, name: str) -> BasePass:
        if name in self.passes:
            return self.passes[name]
        return get_pass(name)

    async def _store_trace(self, action: str, report: PassReport) -> None:
        """Store execution trace"""
        trace = PassTrace(
            session_id=self._session_id,
            step=self._step,
            action=action,
            report=report,
            metadata={
                "state": self.state.value,
                **self.config.metadata
            }
        )
        self._traces.append(trace)

        # Store in the checkpoint store if available
        if self.store:
            await self.store.store(
                f"trace:{self._session_id}:{self._step}",
                trace.model_dump(mode="json")
            )

    @property
    def traces(self) -> List[PassTrace]:
        """Get all traces for the current session"""
        return self._traces.copy()


# Re-export
__all__ = ['Pipeline', 'PipelineConfig']
