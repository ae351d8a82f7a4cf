import logging

from ..boolfn.components import components
from ..boolfn.truthtable import BoolFn
from ..core.errors import RepresentationError
from ..models.nn import NNRep

logger = logging.getLogger(__name__)


def component_bound_check(f: BoolFn, r: NNRep) -> bool:
    """True when r uses fewer distinct anchors than f has components (a violation).

    Every component of f^-1(1) needs its own nearest positive anchor in a
    Boolean-anchor representation, so a correct r never violates this.
    """
    if not r.boolean:
        raise RepresentationError("the component bound applies to Boolean anchors")
    if not r.embedding.is_identity:
        raise RepresentationError("the component bound needs anchors in the input cube itself")
    anchors = len(set(r.positive) | set(r.negative))
    needed = components(f)
    violated = anchors < needed
    if violated:
        logger.warning("representation has %d anchors but f has %d components", anchors, needed)
    return violated


__all__ = ['component_bound_check']
