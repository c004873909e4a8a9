"""
ZIGZAGTWIST - Main Entry Point

Usage:
    python -m zigzagtwist.main twist --n 2 --mode tilde --word "s1" --target P2
    python -m zigzagtwist.main metric --n 3 --mode path --alpha "s2 s1" --beta "s1 s3 s1^-1"
    python -m zigzagtwist.main hom --n 2 --source P1 --target "s1 @ P2"
    python -m zigzagtwist.main hurwitz --n 3 --depth 2
    python -m zigzagtwist.main simples --n 3 --bound 3
    python -m zigzagtwist.main verify --n 2 --suite metric1 --maxlen 6

Exit codes: 0 success, 1 failed verification, 2 usage error, 3 undecided
within the enumeration bound.
"""

import argparse
import re
import sys
from pathlib import Path
from typing import Any

from .config import load_config
from .core.complexes import Complex, projective, projective_sum, shift
from .core.homotopy import hom_table
from .core.minimize import minimize
from .core.spherical import base_tuple, hurwitz_spherical
from .core.twists import psi
from .freegroup.bessis import UnknownWithinBound, simple_certificates
from .freegroup.reflections import braid_orbit, is_factorization
from .freegroup.words import Word
from .gradings.base import BaseGrading
from .gradings.factory import GRADING_MODES, create_grading
from .metrics.factory import METRIC_MODES, METRICS, create_metric
from .utils.logger import get_logger, setup_logger
from .utils.serialize import ResultLog, complex_to_document, dumps, load_complex
from .utils.workers import worker_count
from .verify.suites import SUITES, VerifyContext, format_suite_result, run_suites

logger = get_logger("cli")

_PROJECTIVE_RE = re.compile(r"^P(\d+)(?:<(-?\d+)>)?(?:\[(-?\d+)\])?$")


def parse_object(text: str, rank: int, grading: BaseGrading) -> Complex:
    """
    Read an object of the homotopy category from the command line:
    "P2", "P1<1>[-1]", "G" (the generator P_1 + ... + P_n), a complex file,
    or any of these preceded by a word and "@" ("s1 s2^-1 @ P2").

    Raises:
        ValueError: On an unreadable description
    """
    text = text.strip()
    if "@" in text:
        word_text, _, rest = text.partition("@")
        word = parse_word(word_text, rank)
        return psi(word, parse_object(rest, rank, grading))

    if text == "G":
        return projective_sum(rank, grading)
    match = _PROJECTIVE_RE.match(text)
    if match:
        vertex, internal, hom = (int(g) if g is not None else 0 for g in match.groups())
        return shift(projective(vertex, internal, 0, rank, grading), hom, 0)

    path = Path(text)
    if path.suffix in (".json", ".yaml", ".yml"):
        complex_ = load_complex(path)
        if complex_.rank != rank or complex_.grading != grading:
            raise ValueError(f"{path} holds a complex over rank {complex_.rank} in mode {complex_.grading.name}")
        return complex_
    raise ValueError(f"Cannot read object {text!r}: expected P<i>, G, a complex file or 'word @ object'")


def parse_word(text: str, rank: int) -> Word:
    word = Word.parse(text)
    if word.max_generator() > rank:
        raise ValueError(f"Word {word} uses generators beyond n={rank}")
    return word


def _emit(document: Any, text: str, fmt: str) -> None:
    print(text if fmt == "text" else dumps(document, fmt))


def run_twist(args, config: dict[str, Any]) -> int:
    grading = _grading(args, config)
    word = parse_word(args.word, args.n)
    target = parse_object(args.target, args.n, grading)
    result = minimize(psi(word, target))
    logger.info(f"Psi_{word} on {args.target}: {len(result)} summands")
    _emit(complex_to_document(result), str(result), args.format)
    return 0


def run_metric(args, config: dict[str, Any]) -> int:
    name = args.metric or METRIC_MODES.get(args.mode, "standard")
    params = {"bound": args.bound, "cox_bound": config.get("cox_bound"), **(config.get("metric") or {})}
    metric = create_metric(name, args.n, params)
    alpha = parse_word(args.alpha, args.n)
    beta = parse_word(args.beta, args.n)
    report = metric.compare(alpha, beta)
    text = "\n".join([
        "=" * 50,
        f"METRIC: {report.metric} ({report.mode})",
        "=" * 50,
        f"alpha: {report.alpha}",
        f"beta:  {report.beta}",
        f"phi:   {report.phi}",
        *([f"phi*:  {report.phi_clamped}"] if report.phi_clamped is not None else []),
        f"homological:   {report.homological}",
        f"combinatorial: {report.combinatorial} ({report.provenance}{'' if report.exact else ', not certified'})",
        f"agree: {report.agrees}",
        "=" * 50,
    ])
    _emit(report.to_dict(), text, args.format)
    return 0


def run_hom(args, config: dict[str, Any]) -> int:
    grading = _grading(args, config)
    source = parse_object(args.source, args.n, grading)
    target = parse_object(args.target, args.n, grading)
    table = hom_table(source, target)
    document = {"source": args.source, "target": args.target, "total": table.total(), "dims": table.to_records()}
    _emit(document, str(table), args.format)
    return 0


def run_hurwitz(args, config: dict[str, Any]) -> int:
    grading = _grading(args, config) if args.complexes else None
    start = base_tuple(args.n, grading) if grading else None

    records, lines = [], []
    for braid, factors in braid_orbit(args.n, args.depth):
        braid_text = " ".join(f"t{m}" if m > 0 else f"t{-m}^-1" for m in braid) or "1"
        record: dict[str, Any] = {
            "braid": list(braid),
            "tuple": [t.format() for t in factors],
            "factorization": is_factorization(factors, args.n),
        }
        line = f"{braid_text:<24} ({', '.join(t.format() for t in factors)})"
        if start is not None:
            collection = start
            for move in braid:
                collection = hurwitz_spherical(move, collection)
            record["complexes"] = [complex_to_document(c) for _, c in collection]
            line += "\n" + "\n".join(f"    {t}: {c}" for t, c in collection)
        records.append(record)
        lines.append(line)

    logger.info(f"Hurwitz orbit to depth {args.depth}: {len(records)} braid words")
    _emit({"n": args.n, "depth": args.depth, "orbit": records}, "\n".join(lines), args.format)
    return 0


def run_simples(args, config: dict[str, Any]) -> int:
    certificates = simple_certificates(args.n, args.bound)
    records = [
        {
            "element": c.element.format(),
            "length": c.length,
            "factorization": [t.format() for t in c.factorization],
        }
        for c in certificates
    ]
    lines = [f"{len(certificates)} simple elements (n={args.n}, bound={args.bound})"]
    lines += [f"  [{c.length}] {c.element}   from ({', '.join(t.format() for t in c.factorization)})" for c in certificates]
    _emit({"n": args.n, "bound": args.bound, "simples": records}, "\n".join(lines), args.format)
    return 0


def run_verify(args, config: dict[str, Any]) -> int:
    ctx = VerifyContext.from_config(
        config,
        n=args.n,
        bound=args.bound,
        seed=args.seed,
        maxlen=args.maxlen,
        samples=args.samples,
        braid_depth=args.depth,
        workers=worker_count(args.workers) if args.workers is not None else None,
    )

    logger.info("=" * 60)
    logger.info(f"Verification: suite={args.suite} n={ctx.n} bound={ctx.bound} seed={ctx.seed}")
    logger.info("=" * 60)

    results = run_suites(args.suite, ctx)

    if args.log:
        log = ResultLog(args.log)
        for result in results:
            log.append({"n": ctx.n, "bound": ctx.bound, "seed": ctx.seed, **result.to_dict()})

    if args.format == "text":
        print("\n\n".join(format_suite_result(r) for r in results))
    else:
        print(dumps({"ok": all(r.ok for r in results), "suites": [r.to_dict() for r in results]}, args.format))
    return 0 if all(r.ok for r in results) else 1


COMMANDS = {
    "twist": run_twist,
    "metric": run_metric,
    "hom": run_hom,
    "hurwitz": run_hurwitz,
    "simples": run_simples,
    "verify": run_verify,
}


def _grading(args, config: dict[str, Any]) -> BaseGrading:
    return create_grading(args.mode, config.get("orientation"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", "-c", help="Path to config file")
    common.add_argument("--n", type=int, help="Rank (number of vertices / generators)")
    common.add_argument("--mode", choices=GRADING_MODES, help="Grading mode")
    common.add_argument("--bound", type=int, help="Reflection length bound for Bessis enumerations")
    common.add_argument("--seed", type=int, help="Seed for randomized samples")
    common.add_argument("--format", choices=["text", "json", "yaml"], help="Output format")

    parser = argparse.ArgumentParser(
        prog="zigzagtwist",
        description="Spherical twists on zigzag algebras and metrics on free groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("twist", parents=[common], help="Apply Psi_w to an object and minimize")
    p.add_argument("--word", "-w", default="", help='Word such as "s1 s2^-1"')
    p.add_argument("--target", "-t", default="G", help="P<i>, G, a complex file, or 'word @ object'")

    p = sub.add_parser("metric", parents=[common], help="Homological and combinatorial distance")
    p.add_argument("--alpha", "-a", required=True)
    p.add_argument("--beta", "-b", default="")
    p.add_argument("--metric", choices=sorted(METRICS), help="Metric (defaults to the one read in --mode)")

    p = sub.add_parser("hom", parents=[common], help="Table of Hom(X, Y[h]<m>) dimensions")
    p.add_argument("--source", "-s", required=True)
    p.add_argument("--target", "-t", required=True)

    p = sub.add_parser("hurwitz", parents=[common], help="Hurwitz orbit of the standard factorization")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--complexes", action="store_true", help="Carry the spherical objects along")

    sub.add_parser("simples", parents=[common], help="Enumerate simple elements with certificates")

    p = sub.add_parser("verify", parents=[common], help="Run verification suites")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--maxlen", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--depth", type=int, help="Braid depth for the hurwitz suite")
    p.add_argument("--workers", type=int, help="Worker processes (default ZZT_THREADS)")
    p.add_argument("--log", help="Append results to this JSONL file")

    return parser


def _apply_defaults(args, config: dict[str, Any]) -> None:
    for key in ("n", "mode", "bound", "seed", "format"):
        if getattr(args, key) is None:
            setattr(args, key, config[key])
    if args.n < 1:
        raise ValueError(f"--n must be at least 1, got {args.n}")
    if args.bound < 1:
        raise ValueError(f"--bound must be at least 1, got {args.bound}")


def cli(argv: list[str] | None = None) -> int:
    """Command line interface."""
    parser = build_parser()
    args = parser.parse_args(argv)

    fmt = args.format or "text"
    try:
        config = load_config(args.config)
        _apply_defaults(args, config)
        fmt = args.format
        setup_logger(config.get("log_level", "INFO"), config.get("log_file"), structured=fmt == "json")
        return COMMANDS[args.command](args, config)
    except UnknownWithinBound as e:
        return _fail(fmt, "undecided", str(e), 3)
    except ValueError as e:
        return _fail(fmt, "usage", str(e), 2)


def _fail(fmt: str, kind: str, message: str, code: int) -> int:
    if fmt == "text":
        print(f"error: {message}", file=sys.stderr)
    else:
        print(dumps({"error": kind, "message": message, "exit_code": code}, fmt))
    return code


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
