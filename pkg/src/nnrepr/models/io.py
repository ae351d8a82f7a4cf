from pathlib import Path
from typing import Any, Union

from pydantic import Field, TypeAdapter, ValidationError
from typing_extensions import Annotated

from ..boolfn.cnf import CnfDnf
from ..boolfn.truthtable import BoolFn
from .circuit import ThresholdCircuit
from .dlist import DecisionList
from .nn import KNNRep, NNRep
from .symmetric import SymAndCircuit, SymMajCircuit
from .threshold import KStat, LabeledKStat, MpPTF

Document = Annotated[
    Union[NNRep, KNNRep, MpPTF, KStat, LabeledKStat, DecisionList, ThresholdCircuit, BoolFn, CnfDnf,
          SymMajCircuit, SymAndCircuit],
    Field(discriminator="model"),
]

_DOCUMENT = TypeAdapter(Document)


def serialize(obj: Any) -> str:
    """Canonical JSON: field order fixed by the model, two-space indent"""
    return obj.model_dump_json(indent=2)


def parse(text: str) -> Any:
    """Parse any representation document by its "model" tag"""
    return _DOCUMENT.validate_json(text)


def load(path: Union[str, Path]) -> Any:
    """Read and parse a document, wrapping I/O failures"""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise RuntimeError(f"Document read error: {str(e)}")
    return parse(text)


def dump(obj: Any, path: Union[str, Path]) -> None:
    try:
        Path(path).write_text(serialize(obj) + "\n")
    except OSError as e:
        raise RuntimeError(f"Document write error: {str(e)}")


__all__ = [
    'Document',
    'serialize',
    'parse',
    'load',
    'dump',
    'ValidationError',
]
