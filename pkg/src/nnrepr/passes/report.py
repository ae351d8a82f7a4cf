from typing import Any, Dict, Optional, Sequence

from ..core.base import BaseRepresentation, BoundCheck, PassReport
from ..core.types import ModelKind
from ..models.metrics import measure


def bound(metric: str, relation: str, value: int, actual: int) -> BoundCheck:
    return BoundCheck(metric=metric, relation=relation, value=value, actual=actual)


def build_report(
    name: str,
    source: ModelKind,
    output: BaseRepresentation,
    bounds: Sequence[BoundCheck] = (),
    notes: Optional[Dict[str, Any]] = None
) -> PassReport:
    """PassReport whose metrics are measured on the output itself"""
    metrics, max_weight, dimension = measure(output)
    return PassReport(
        name=name,
        source=source,
        target=output.kind,
        metrics=metrics,
        max_weight=max_weight,
        dimension=dimension,
        bounds=list(bounds),
        notes=notes or {},
    )


__all__ = ['bound', 'build_report']
