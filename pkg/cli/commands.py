"""
CLI Commands
One function per subcommand; each returns the process exit code
"""

import os
import sys
from argparse import Namespace
from fractions import Fraction
from typing import Any, Dict

import pandas as pd
from tqdm import tqdm

# Add parent directory to path to import config
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import config
from coloring import CheckpointError, DomainError, GroundKind, GroundSet, LinearEquation
from counting import count_classes, count_total, time_counting
from search import ChunkResult, Objective, RestartResult, exhaustive_search, local_search
from verify import decimal_text, fraction_text, run_suite

from .records import (
    CONSTRUCTION_KINDS,
    Checkpoint,
    RecordWriter,
    format_coloring,
    resolve_coloring,
    summary_record,
    write_coloring,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SWEEP_COLUMNS = ["n", "total", "rainbow", "mono", "dichromatic", "rb_decimal", "rb_fraction"]


def equation_from_args(args: Namespace) -> LinearEquation:
    """
    Parse --eq, warning when a common factor is divided out over Z_n

    Over [n] the reduced equation has the same solutions; over Z_n it may not.
    """
    eq = LinearEquation.parse(args.eq)
    given = tuple(int(p) for p in args.eq.split(","))
    if args.kind == GroundKind.CYCLIC.value and given != eq.coefficients:
        print(f"⚠️  --eq {args.eq} has common factor {given[0] // eq.a}; counting {eq.describe()} over Z_n, "
              "whose solutions can differ from the unreduced congruence", file=sys.stderr)
    return eq


def ground_from_args(args: Namespace) -> GroundSet:
    if args.kind is None:
        raise DomainError("Choose a ground set with --interval or --cyclic")
    if args.n is None:
        raise DomainError("Ground set size -n is required")
    return GroundSet(args.kind, args.n)


def cmd_count(args: Namespace, writer: RecordWriter) -> int:
    """Classify every solution under one coloring and emit a count record"""
    eq = equation_from_args(args)
    ground = ground_from_args(args)
    if not args.coloring:
        raise DomainError("count needs --coloring")
    coloring = resolve_coloring(args.coloring, ground)
    counts = count_classes(eq, coloring)
    payload = summary_record(eq, coloring, counts, args.coloring)
    if args.timing:
        oracle_seconds, fast_seconds = time_counting(eq, coloring)
        payload["oracle_seconds"] = round(oracle_seconds, 6)
        payload["fast_seconds"] = round(fast_seconds, 6)
    writer.emit("count", payload)
    return EXIT_OK


def _search_header(args: Namespace, eq: LinearEquation, ground: GroundSet, objective: Objective,
                   seed: int, budget: int, restarts: int) -> Dict[str, Any]:
    header = {
        "mode": args.mode,
        "objective": objective.value,
        "eq": str(eq),
        "kind": ground.kind.value,
        "n": ground.n,
    }
    if args.mode == "exhaustive":
        header.update(quotient=not args.no_quotient, symmetries=args.symmetries)
    else:
        header.update(seed=seed, budget=budget, restarts=restarts)
    return header


def cmd_search(args: Namespace, writer: RecordWriter) -> int:
    """
    Run an exhaustive or local extremal search

    Streams an improvement record whenever the best value improves (in
    deterministic chunk or restart order) and a final search record. With
    --checkpoint, finished units are logged and skipped on resume.
    """
    eq = equation_from_args(args)
    ground = ground_from_args(args)
    objective = Objective(args.objective)
    seed = config.DEFAULT_SEED if args.seed is None else args.seed
    budget = config.DEFAULT_BUDGET if args.budget is None else args.budget
    restarts = config.DEFAULT_RESTARTS if args.restarts is None else args.restarts
    if min(seed, budget, restarts) < 0:
        raise DomainError("--seed, --budget and --restarts must be non-negative")
    unit_type = ChunkResult if args.mode == "exhaustive" else RestartResult

    checkpoint = None
    completed = {}
    if args.checkpoint:
        checkpoint = Checkpoint(args.checkpoint, _search_header(args, eq, ground, objective, seed, budget, restarts))
        for line_no, unit in enumerate(checkpoint.load(), start=2):
            try:
                restored = unit_type.from_dict(unit)
            except (KeyError, TypeError, ValueError) as e:
                raise CheckpointError(
                    f"Checkpoint {args.checkpoint} is corrupt: entry on line {line_no} is incomplete ({e!r}); "
                    "delete it or pass a new --checkpoint path"
                ) from None
            completed[restored.index] = restored
        if completed:
            print(f"🔧 Resuming from {args.checkpoint}: {len(completed)} units already done", file=sys.stderr)

    def on_unit(unit):
        if checkpoint is not None:
            checkpoint.append(unit.to_dict())

    def on_improvement(value, colors):
        writer.emit("improvement", {
            "objective": objective.value,
            "eq": str(eq),
            "kind": ground.kind.value,
            "n": ground.n,
            "best_value": value,
            "witness": "".join(map(str, colors)),
        })

    if args.mode == "exhaustive":
        record = exhaustive_search(
            objective, eq, ground,
            quotient=not args.no_quotient,
            symmetries=args.symmetries,
            override=args.override,
            threads=args.threads,
            completed=completed,
            on_chunk=on_unit,
            on_improvement=on_improvement,
            progress=args.progress,
        )
    else:
        record = local_search(
            objective, eq, ground,
            seed=seed,
            budget=budget,
            restarts=restarts,
            threads=args.threads,
            completed=completed,
            on_restart=on_unit,
            on_improvement=on_improvement,
        )

    payload = record.to_dict()
    payload["mode"] = args.mode
    payload["reverified"] = record.reverify()
    total = count_total(eq, ground)
    payload["total"] = total
    payload["proportion"] = Fraction(record.best_value, total) if total else None
    writer.emit("search", payload)
    return EXIT_OK if payload["reverified"] else EXIT_FAILED


def cmd_verify(args: Namespace, writer: RecordWriter) -> int:
    """Run a verification suite; exit 0 iff every check passes"""
    reports = run_suite(args.suite, args.max_n, progress=args.progress)
    for report in reports:
        writer.emit("check", report.to_dict())
    failed = [r.name for r in reports if not r.passed]
    if failed:
        print(f"❌ {len(failed)} of {len(reports)} checks failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAILED
    print(f"✅ All {len(reports)} checks passed", file=sys.stderr)
    return EXIT_OK


def cmd_sweep(args: Namespace, writer: RecordWriter) -> int:
    """Write one CSV row of exact counts per n in [n-min, n-max]"""
    eq = equation_from_args(args)
    if args.kind is None:
        raise DomainError("Choose a ground set with --interval or --cyclic")
    if not args.coloring:
        raise DomainError("sweep needs --coloring")
    if not args.output:
        raise DomainError("sweep needs --output for the CSV file")

    rows = []
    for n in tqdm(range(args.n_min, args.n_max + 1), desc="Sweeping", disable=not args.progress):
        ground = GroundSet(args.kind, n)
        summary = count_classes(eq, resolve_coloring(args.coloring, ground)).summary
        rb = summary.rb if summary.total else None
        rows.append({
            "n": n,
            "total": summary.total,
            "rainbow": summary.rainbow,
            "mono": summary.mono,
            "dichromatic": summary.dichromatic,
            "rb_decimal": decimal_text(rb) if rb is not None else "",
            "rb_fraction": fraction_text(rb) if rb is not None else "",
        })

    df = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    df.to_csv(args.output, index=False)
    writer.emit("sweep", {"output": args.output, "rows": len(df), "eq": str(eq), "kind": args.kind,
                          "coloring": args.coloring})
    print(f"📊 Wrote {len(df)} rows to {args.output}", file=sys.stderr)
    return EXIT_OK


def cmd_construct(args: Namespace, writer: RecordWriter) -> int:
    """Dump a named construction in the coloring file format"""
    name = args.name
    if name not in CONSTRUCTION_KINDS:
        raise DomainError(f"Unknown construction {name!r}; choose one of {', '.join(CONSTRUCTION_KINDS)}")
    kind = args.kind or CONSTRUCTION_KINDS[name].value
    if args.n is None:
        raise DomainError("Ground set size -n is required")
    coloring = resolve_coloring(name, GroundSet(kind, args.n))
    if args.output:
        write_coloring(args.output, coloring)
        writer.emit("construct", {"name": name, "kind": kind, "n": args.n, "output": args.output})
    else:
        sys.stdout.write(format_coloring(coloring))
    return EXIT_OK


def cmd_config(args: Namespace, writer: RecordWriter) -> int:
    config.display_config_status()
    return EXIT_OK
