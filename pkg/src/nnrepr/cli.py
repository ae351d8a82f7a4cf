"""Command-line driver.

Inputs are document files or literals: ``family:<name>:<n>[:<k>]`` for a
named family and ``table:n=<arity>:<hex>`` for a truth table. Results go to
stdout (or ``--out``) as canonical JSON; logs go to stderr.

Exit codes: 0 success or EQUAL, 1 MISMATCH / ILL_DEFINED (witness printed),
2 parse, validation and usage errors.
"""
import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from .boolfn.components import components
from .boolfn.truthtable import BoolFn, from_callable
from .checkpoint.store import JsonCheckpointStore
from .constructions.catalog import construct
from .core.config import Settings, configure_logging
from .core.errors import ConversionError, SearchBudgetExceeded
from .core.pipeline import Pipeline, PipelineConfig
from .core.types import CircuitVariant, ModelKind
from .emit.dot import circuit_to_dot
from .models.io import load
from .models.nn import AnchorRepresentation, NNRep, bit_complexity
from .oracle.equiv import equiv_check
from .oracle.search import min_hnn_search
from .passes.circuits import hnn_to_circuit
from .passes.registry import available_passes, get_pass

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def load_input(text: str) -> Any:
    """A family literal, a table literal or a document path"""
    if text.startswith("family:"):
        parts = text.split(":")[1:]
        if len(parts) not in (2, 3):
            raise ValueError(f"expected family:<name>:<n>[:<k>], got {text!r}")
        k = int(parts[2]) if len(parts) == 3 else None
        return construct(parts[0], int(parts[1]), k)
    if text.startswith("table:"):
        return BoolFn.parse_hex(text[len("table:"):])
    return load(text)


def _document(obj: BaseModel) -> Dict[str, Any]:
    return obj.model_dump(mode="json")


def _render(data: Any) -> str:
    if isinstance(data, BaseModel):
        return data.model_dump_json(indent=2)
    return json.dumps(data, indent=2)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        print(text)
        return
    try:
        Path(out).write_text(text + "\n")
    except OSError as e:
        raise RuntimeError(f"Output write error: {str(e)}")


def _variant(value: Optional[str]) -> Optional[CircuitVariant]:
    return CircuitVariant(value) if value is not None else None


# Subcommands

def cmd_construct(args: argparse.Namespace, settings: Settings) -> int:
    obj = construct(args.family, args.n, args.k, args.model)
    _emit(_render(obj), args.out)
    return EXIT_OK


def cmd_convert(args: argparse.Namespace, settings: Settings) -> int:
    conversion = get_pass(args.pass_name)
    source = load_input(args.input)
    options: Dict[str, Any] = {}
    if args.variant is not None:
        options["variant"] = _variant(args.variant)
    if conversion.source == ModelKind.KNN:
        options["jobs"] = settings.jobs
    output, report = asyncio.run(conversion.execute(source, **options))
    if args.out is not None:
        _emit(_render(output), args.out)
        print(_render(report))
    else:
        print(_render({"output": _document(output), "report": _document(report)}))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    a = load_input(args.a)
    b = load_input(args.b)
    verdict = equiv_check(a, b, a.arity, settings.jobs)
    print(verdict.model_dump_json(indent=2, exclude={"wall_time"}))
    return EXIT_OK if verdict.equal else EXIT_MISMATCH


def cmd_components(args: argparse.Namespace, settings: Settings) -> int:
    f = load_input(args.input)
    if not isinstance(f, BoolFn):
        f = from_callable(f, f.arity)
    _emit(_render({"arity": f.arity, "components": components(f)}), args.out)
    return EXIT_OK


def cmd_search(args: argparse.Namespace, settings: Settings) -> int:
    f = load_input(args.input)
    if not isinstance(f, BoolFn):
        f = from_callable(f, f.arity)
    store = JsonCheckpointStore(settings.checkpoint_dir) if settings.checkpoint_dir else None
    try:
        result = min_hnn_search(f, jobs=settings.jobs, budget=settings.budget, store=store)
    except SearchBudgetExceeded as e:
        print(f"error: {e}; resume with a larger --budget (m={e.m}, cursor={e.cursor})", file=sys.stderr)
        return EXIT_USAGE
    payload = {
        "m": result.m,
        "counts": {str(m): c for m, c in sorted(result.counts.items())},
        "witness": _document(result.witness),
    }
    _emit(_render(payload), args.out)
    return EXIT_OK


def cmd_emit_circuit(args: argparse.Namespace, settings: Settings) -> int:
    r = load_input(args.input)
    if not isinstance(r, NNRep):
        raise ValueError(f"emit-circuit needs an nn document, got {getattr(r, 'model', type(r).__name__)}")
    circuit = hnn_to_circuit(r, _variant(args.variant))
    text = circuit_to_dot(circuit) if args.format == "dot" else _render(circuit)
    _emit(text, args.out)
    return EXIT_OK


def cmd_bitcomplexity(args: argparse.Namespace, settings: Settings) -> int:
    r = load_input(args.input)
    if not isinstance(r, AnchorRepresentation):
        raise ValueError("bitcomplexity needs an nn or knn document")
    print(_render({"model": r.model, "bit_complexity": bit_complexity(r)}))
    return EXIT_OK


def cmd_report(args: argparse.Namespace, settings: Settings) -> int:
    source = load_input(args.input)
    store = JsonCheckpointStore(settings.checkpoint_dir) if settings.checkpoint_dir else None
    config = PipelineConfig(jobs=settings.jobs, metadata={"seed": settings.seed})
    pipeline = Pipeline(config=config, store=store)
    output, reports = asyncio.run(pipeline.execute(source, args.passes))
    logger.info("pipeline recorded %d traces", len(pipeline.traces))
    payload = {
        "output": _document(output),
        "reports": [_document(r) for r in reports],
    }
    _emit(_render(payload), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nnrepr",
        description="Exact nearest-neighbor and threshold representations of Boolean functions",
    )
    parser.add_argument("--log-level", default=None, help="logging level (default: NNREPR_LOG_LEVEL or WARNING)")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes for exhaustive scans")
    parser.add_argument("--seed", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named family in a model")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--model", default="boolfn")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("convert", help="run one conversion pass")
    p.add_argument("--pass", dest="pass_name", required=True, help=", ".join(available_passes()))
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--variant", choices=[v.value for v in CircuitVariant], default=None)
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("verify", help="exhaustive equivalence of two inputs")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("components", help="connected components of f^-1(1)")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_components)

    p = sub.add_parser("search-min-hnn", help="smallest Boolean-anchor representation")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--checkpoint-dir", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("emit-circuit", help="threshold circuit for a Boolean-anchor representation")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--variant", choices=[v.value for v in CircuitVariant], default=None)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_emit_circuit)

    p = sub.add_parser("bitcomplexity", help="bit-complexity of an anchor representation")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(handler=cmd_bitcomplexity)

    p = sub.add_parser("report", help="run a verified chain of passes")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--pass", dest="passes", action="append", required=True)
    p.add_argument("--checkpoint-dir", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_report)
    return parser


def _settings(args: argparse.Namespace) -> Settings:
    overrides = {
        "jobs": args.jobs,
        "seed": args.seed,
        "log_level": args.log_level,
        "budget": getattr(args, "budget", None),
        "checkpoint_dir": getattr(args, "checkpoint_dir", None),
    }
    base = Settings.from_env()
    return Settings(**{**base.model_dump(), **{k: v for k, v in overrides.items() if v is not None}})


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        settings = _settings(args)
        configure_logging(settings.log_level)
        return args.handler(args, settings)
    except ConversionError as e:
        if e.witness is not None:
            print(_render({"witness": list(e.witness), "message": str(e)}))
            return EXIT_MISMATCH
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, RuntimeError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


__all__ = ['main', 'build_parser', 'load_input']
