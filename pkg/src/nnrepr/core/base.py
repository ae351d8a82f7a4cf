from abc import ABC, abstractmethod
from datetime import datetime, timezone
from typing import Any, Dict, Generic, List, Optional, Sequence, Tuple, TypeVar

from pydantic import BaseModel, ConfigDict, Field

from .errors import ArityError
from .types import ModelKind, Output

T = TypeVar('T')


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


class BaseRepresentation(BaseModel, ABC):
    """Base class for every representation model"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @abstractmethod
    def evaluate(self, x: Sequence[int]) -> Output:
        """Value at a Boolean point of the source arity"""
        pass

    @property
    def kind(self) -> ModelKind:
        return ModelKind(getattr(self, "model"))

    def check_input(self, x: Sequence[int]) -> Tuple[int, ...]:
        """Validate a Boolean input vector against the arity"""
        arity = getattr(self, "arity")
        if len(x) != arity:
            raise ArityError(f"expected {arity} inputs, got {len(x)}")
        bits = tuple(int(b) for b in x)
        if any(b not in (0, 1) for b in bits):
            raise ArityError(f"input is not Boolean: {bits}")
        return bits

    def __call__(self, x: Sequence[int]) -> Output:
        return self.evaluate(x)

    def dumps(self) -> str:
        """Canonical JSON document"""
        return self.model_dump_json(indent=2)


class BoundCheck(BaseModel):
    """A size or weight bound compared against the measured value"""
    metric: str
    relation: str  # "==" or "<="
    value: int
    actual: int

    model_config = ConfigDict(frozen=True)

    @property
    def met(self) -> bool:
        if self.relation == "==":
            return self.actual == self.value
        return self.actual <= self.value


class PassReport(BaseModel):
    """Size and weight metrics of a pass output, measured from the output itself"""
    name: str
    source: ModelKind
    target: ModelKind
    metrics: Dict[str, int] = Field(default_factory=dict)
    max_weight: int = 0
    dimension: Optional[int] = None
    bounds: List[BoundCheck] = Field(default_factory=list)
    notes: Dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)

    @property
    def met(self) -> bool:
        return all(b.met for b in self.bounds)


class BasePass(ABC):
    """Abstract base class for conversion passes"""
    name: str
    description: str
    source: ModelKind
    target: ModelKind
    version: str = "1.0.0"

    @abstractmethod
    def run(self, source: BaseRepresentation, **kwargs: Any) -> BaseRepresentation:
        """Convert the source representation"""
        pass

    @abstractmethod
    def report(
        self,
        source: BaseRepresentation,
        output: BaseRepresentation
    ) -> PassReport:
        """Measure the output and check it against the construction's bounds"""
        pass

    def validate_input(self, source: BaseRepresentation) -> bool:
        """Validate that the source matches the pass requirements"""
        return isinstance(source, BaseRepresentation) and source.kind == self.source

    async def execute(
        self,
        source: BaseRepresentation,
        **kwargs: Any
    ) -> Tuple[BaseRepresentation, PassReport]:
        """Run the pass and measure its output"""
        if not self.validate_input(source):
            raise ValueError(
                f"Pass {self.name} expects {self.source.value}, got {getattr(source, 'model', type(source).__name__)}"
            )
        output = self.run(source, **kwargs)
        return output, self.report(source, output)


class BaseCheckpointStore(ABC, Generic[T]):
    """Abstract base class for checkpoint stores"""
    @abstractmethod
    async def store(
        self,
        key: str,
        data: T,
        metadata: Optional[Dict[str, Any]] = None
    ) -> None:
        """Store data under a key"""
        pass

    @abstractmethod
    async def retrieve(
        self,
        key: str,
        **kwargs: Any
    ) -> Optional[T]:
        """Retrieve data for a key"""
        pass

    @abstractmethod
    async def delete(
        self,
        key: str
    ) -> bool:
        """Delete data for a key"""
        pass

    @abstractmethod
    async def clear(self) -> None:
        """Clear all data in the store"""
        pass


class PassTrace(BaseModel):
    """One executed pipeline step"""
    session_id: str
    step: int
    timestamp: datetime = Field(default_factory=_utcnow)
    action: str
    report: PassReport
    metadata: Dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


# Re-export base classes
__all__ = [
    'BaseRepresentation',
    'BoundCheck',
    'PassReport',
    'BasePass',
    'BaseCheckpointStore',
    'PassTrace',
]
