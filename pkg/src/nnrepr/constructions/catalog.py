"""Named construction presets behind the `construct` command."""
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from ..boolfn.cnf import exact_half_cnf
from ..boolfn.families import FamilySpec
from ..boolfn.truthtable import family
from ..passes.nn_mpptf import mpptf_to_hnn, mpptf_to_nn
from ..passes.symmetric import ip_clauses, sym_and_to_knn
from .gadgets import cnf_to_nn, disj_hnn, omb_and2_mpptf, xor_mpptf

Builder = Callable[[int, Optional[int]], BaseModel]


def _needs_k(k: Optional[int]) -> int:
    if k is None:
        raise ValueError("this construction needs --k")
    return k


_PRESETS: Dict[Tuple[str, str], Builder] = {
    ("xor", "mpptf"): lambda n, k: xor_mpptf(n),
    ("xor", "nn"): lambda n, k: mpptf_to_nn(xor_mpptf(n)),
    ("xor", "hnn"): lambda n, k: mpptf_to_hnn(xor_mpptf(n)),
    ("omb-and2", "mpptf"): lambda n, k: omb_and2_mpptf(n),
    ("omb-and2", "hnn"): lambda n, k: mpptf_to_hnn(omb_and2_mpptf(n)),
    ("disj", "hnn"): lambda n, k: disj_hnn(n),
    ("disj", "nn"): lambda n, k: disj_hnn(n),
    ("ip", "sym_and"): lambda n, k: ip_clauses(n),
    ("ip", "knn"): lambda n, k: sym_and_to_knn(ip_clauses(n)),
    ("exact-half-cnf", "cnf"): lambda n, k: exact_half_cnf(n, _needs_k(k)),
    ("exact-half-cnf", "nn"): lambda n, k: cnf_to_nn(exact_half_cnf(n, _needs_k(k))),
}


def normalise_family(name: str) -> str:
    return name.strip().lower().replace("_", "-")


def presets() -> List[Tuple[str, str]]:
    return sorted(_PRESETS)


def construct(name: str, n: int, k: Optional[int] = None, model: str = "boolfn") -> BaseModel:
    """Build the named family in the requested model.

    `boolfn` works for every family; other models need a preset.
    """
    key = (normalise_family(name), model.lower())
    if key[1] == "boolfn":
        params = (n,) if k is None else (n, k)
        return family(FamilySpec.parse(key[0], *params))
    if key not in _PRESETS:
        known = ", ".join(f"{f}/{m}" for f, m in presets())
        raise ValueError(f"no {key[1]} construction for family {key[0]}; known: {known}")
    return _PRESETS[key](n, k)


__all__ = ['construct', 'presets', 'normalise_family']
