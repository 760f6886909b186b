"""Command line front end.

Subcommands:

* ``classify`` - read a 2-3 relation and print its classification.
* ``inverse-check`` - read a recurrence and a relation, run both
  orthogonality checkers, and report their verdicts.
* ``constants`` - read a recurrence and a relation, print the functional
  identity constants from the closed forms and from the constancy checker.
* ``example`` - run one of the built-in worked cases end to end.

Exit codes: 0 success, 1 a checked property genuinely fails (not
orthogonal, inadmissible parameters), 2 malformed or out-of-domain input,
3 internal inconsistency (independent computations disagree).

Output is deterministic: the payload contains no timestamps or
environment data, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from typing import Optional

from .casebook import chebyshev_case, jacobi_chain
from .errors import ContractError, DepthError, DomainError, FormatError
from .families import JacobiParams
from .functional import RecurrencePair
from .rational import RATIONAL_PATTERN, parse_rational
from .relation23 import (
    Relation23,
    check_by_constants,
    check_by_equations,
    classify,
    relation_constants,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    depth: int
    fmt: str
    mode: str
    out: Optional[str]
    sources: tuple = ()
    case: Optional[str] = None
    alpha: Optional[str] = None
    beta: Optional[str] = None
    a1: Optional[str] = None
    c1: Optional[str] = None


def _float_value(node):
    if isinstance(node, str) and RATIONAL_PATTERN.match(node):
        return float(Fraction(node))
    if isinstance(node, list):
        return [_float_value(v) for v in node]
    if isinstance(node, dict):
        return {k: _float_value(v) for k, v in node.items()}
    return node


def _float_csv(text: str) -> str:
    # only true fractions need help; integer cells (indices included) are
    # already consumable as numbers
    lines = []
    for line in text.rstrip("\n").split("\n"):
        cells = [
            str(float(Fraction(cell)))
            if "/" in cell and RATIONAL_PATTERN.match(cell)
            else cell
            for cell in line.split(",")
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _emit(payload, config: RunConfig) -> None:
    if config.fmt == "csv":
        if isinstance(payload, str):
            text = payload
        else:
            rows = ["key,value"]
            flat = _flatten("", payload)
            rows.extend(f"{k},{v}" for k, v in flat)
            text = "\n".join(rows) + "\n"
        if config.mode == "float":
            text = _float_csv(text)
    else:
        if isinstance(payload, str):
            raise ContractError("csv-only payload requested as json")
        if config.mode == "float":
            payload = _float_value(payload)
        text = json.dumps(payload, indent=2) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _flatten(prefix: str, node):
    if isinstance(node, dict):
        out = []
        for key, value in node.items():
            path = f"{prefix}.{key}" if prefix else str(key)
            out.extend(_flatten(path, value))
        return out
    if isinstance(node, list):
        out = []
        for i, value in enumerate(node):
            out.extend(_flatten(f"{prefix}[{i}]", value))
        return out
    return [(prefix, "" if node is None else node)]


def _load_document(source: str) -> dict:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise FormatError(f"cannot read {source}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"input is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("input document must be a JSON object")
    return doc


def _relation_from(doc: dict) -> Relation23:
    data = doc.get("relation", doc)
    return Relation23.from_json(data)


def _recurrence_from(doc: dict) -> RecurrencePair:
    data = doc.get("recurrence", doc)
    return RecurrencePair.from_json(data)


def _load_pair(config: RunConfig) -> tuple[RecurrencePair, Relation23]:
    """One combined document, or a recurrence file then a relation file."""
    if len(config.sources) == 2:
        rec = _recurrence_from(_load_document(config.sources[0]))
        rel = _relation_from(_load_document(config.sources[1]))
        return rec, rel
    doc = _load_document(config.sources[0])
    return _recurrence_from(doc), _relation_from(doc)


def _require_regular(rec: RecurrencePair, depth: int) -> None:
    zero = rec.first_zero_gamma()
    if zero is not None and zero <= depth + 1:
        raise DomainError(f"recurrence gamma_{zero} is zero inside the working range")


def _cmd_classify(config: RunConfig) -> int:
    doc = _load_document(config.sources[0])
    rel = _relation_from(doc)
    case = classify(rel)
    _emit(case.to_json(), config)
    return EXIT_OK


def _cmd_inverse_check(config: RunConfig) -> int:
    rec, rel = _load_pair(config)
    _require_regular(rec, config.depth)
    verdict_eq = check_by_equations(rec, rel, config.depth)
    verdict_ct = check_by_constants(rec, rel, config.depth)
    agree = verdict_eq.is_mops == verdict_ct.is_mops
    payload = {
        "depth": config.depth,
        "classification": classify(rel).to_json(),
        "verdict_equations": verdict_eq.to_json(),
        "verdict_constants": verdict_ct.to_json(),
        "agree": agree,
        "is_mops": verdict_eq.is_mops if agree else None,
    }
    if agree and verdict_eq.is_mops:
        fr = relation_constants(rec, rel)
        payload["functional_relation"] = fr.to_json()
        triple = verdict_ct.constants
        if triple != (fr.a, fr.b, fr.c):
            _emit(payload, config)
            print(
                "inverse-check: closed-form constants disagree with the constancy triple",
                file=sys.stderr,
            )
            return EXIT_INTERNAL
    _emit(payload, config)
    if not agree:
        print("inverse-check: the two checkers disagree", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK if verdict_eq.is_mops else EXIT_NEGATIVE


def _cmd_constants(config: RunConfig) -> int:
    rec, rel = _load_pair(config)
    _require_regular(rec, config.depth)
    fr = relation_constants(rec, rel)
    verdict = check_by_constants(rec, rel, config.depth)
    payload = {
        "depth": config.depth,
        "functional_relation": fr.to_json(),
        "verdict_constants": verdict.to_json(),
    }
    if not verdict.is_mops:
        _emit(payload, config)
        return EXIT_NEGATIVE
    if verdict.constants != (fr.a, fr.b, fr.c):
        _emit(payload, config)
        print(
            "constants: closed-form constants disagree with the constancy triple",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    payload["agree"] = True
    _emit(payload, config)
    return EXIT_OK


def _cmd_example(config: RunConfig) -> int:
    if config.case == "chebyshev":
        report = chebyshev_case(config.depth)
        payload = report.to_csv() if config.fmt == "csv" else report.to_json()
        _emit(payload, config)
        return EXIT_OK
    params = JacobiParams(parse_rational(config.alpha), parse_rational(config.beta))
    report = jacobi_chain(
        params, parse_rational(config.a1), parse_rational(config.c1), config.depth
    )
    payload = report.to_csv() if config.fmt == "csv" else report.to_json()
    _emit(payload, config)
    if not report.ok:
        print(f"example: {report.failure.condition}", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mopsrel",
        description="classify 2-3 relations between monic orthogonal "
        "polynomial sequences and solve the associated inverse problem "
        "in exact rational arithmetic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input: bool) -> None:
        p.add_argument("--depth", type=int, default=20,
                       help="largest index checked (default 20)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--mode", choices=("exact", "float"), default="exact",
                       help="render rationals exactly or as floats")
        p.add_argument("--out", default=None, help="write output to a file")
        if with_input:
            p.add_argument(
                "input", nargs="*", default=["-"],
                help="one combined JSON file ('-' for stdin), or a "
                "recurrence file followed by a relation file",
            )

    common(sub.add_parser("classify", help="classify a 2-3 relation"), True)
    common(sub.add_parser(
        "inverse-check",
        help="decide whether the relation output is again orthogonal",
    ), True)
    common(sub.add_parser(
        "constants",
        help="compute the functional identity constants (lambda, c, a, b)",
    ), True)
    ex = sub.add_parser("example", help="run a built-in worked case")
    ex.add_argument("case", choices=("chebyshev", "jacobi-chain"))
    ex.add_argument("--alpha", default="1/2")
    ex.add_argument("--beta", default="1/2")
    ex.add_argument("--a1", default="2")
    ex.add_argument("--c1", default="-2")
    common(ex, False)
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    sources = getattr(args, "input", None)
    return RunConfig(
        command=args.command,
        depth=args.depth,
        fmt=args.format,
        mode=args.mode,
        out=args.out,
        sources=tuple(sources) if sources else (),
        case=getattr(args, "case", None),
        alpha=getattr(args, "alpha", None),
        beta=getattr(args, "beta", None),
        a1=getattr(args, "a1", None),
        c1=getattr(args, "c1", None),
    )


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    config = _config_from(args)
    code = _dispatch(config)
    # run metadata goes to stderr so the payload stays byte-reproducible
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    print(
        f"# mopsrel {config.command} depth={config.depth} exit={code} time={stamp}",
        file=sys.stderr,
    )
    return code


def _dispatch(config: RunConfig) -> int:
    if config.command != "classify" and config.depth < 5:
        print("mopsrel: --depth must be at least 5", file=sys.stderr)
        return EXIT_INPUT
    if config.command in ("classify", "inverse-check", "constants"):
        n = len(config.sources)
        if n > 2 or (config.command == "classify" and n != 1):
            print("mopsrel: expected one combined input file, or a recurrence "
                  "file and a relation file", file=sys.stderr)
            return EXIT_INPUT
    try:
        if config.command == "classify":
            return _cmd_classify(config)
        if config.command == "inverse-check":
            return _cmd_inverse_check(config)
        if config.command == "constants":
            return _cmd_constants(config)
        return _cmd_example(config)
    except (FormatError, DepthError, DomainError) as exc:
        print(f"mopsrel: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ContractError as exc:
        if config.command == "example":
            print(f"mopsrel: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
        hint = (
            " (run the classify command to inspect the relation shape)"
            if "classifies as" in str(exc)
            else ""
        )
        print(f"mopsrel: {exc}{hint}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
