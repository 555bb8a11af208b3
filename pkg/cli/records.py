"""
Machine Records and Files
JSON-lines output, coloring files, checkpoints and coloring specs
"""

import json
import sys
import threading
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

from coloring import (
    CheckpointError,
    Coloring,
    DomainError,
    GroundKind,
    GroundSet,
    LinearEquation,
)
from constructions import CONSTRUCTIONS, parse_pattern, periodic, seeded_random_coloring
from counting import ClassCountMatrix
from verify import jsonable, render_fraction
from verify.report import baselines

RECORD_VERSION = 1

# construction name -> ground kind it is defined on
CONSTRUCTION_KINDS = {
    "mod3-interval": GroundKind.INTERVAL,
    "mod3-cyclic": GroundKind.CYCLIC,
    "mod5-schur": GroundKind.CYCLIC,
}


class RecordWriter:
    """
    Serializes records as sorted-key JSON lines through one lock

    Every record carries its schema name and the record version.
    """

    def __init__(self, stream: Optional[TextIO] = None):
        self.stream = stream or sys.stdout
        self._lock = threading.Lock()

    def emit(self, schema: str, payload: Dict[str, Any]) -> str:
        record = dict(jsonable(payload))
        record["schema"] = schema
        record["version"] = RECORD_VERSION
        line = json.dumps(record, sort_keys=True)
        with self._lock:
            self.stream.write(line + "\n")
            self.stream.flush()
        return line


def summary_record(eq: LinearEquation, coloring: Coloring, counts: ClassCountMatrix,
                   source: str) -> Dict[str, Any]:
    """Payload of a count record; proportions are null when there are no solutions"""
    summary = counts.summary
    has_solutions = summary.total > 0
    return {
        "eq": str(eq),
        "kind": coloring.ground.kind.value,
        "n": coloring.n,
        "coloring": source,
        "total": summary.total,
        "rainbow": summary.rainbow,
        "mono": summary.mono,
        "dichromatic": summary.dichromatic,
        "mono_by_color": list(counts.mono_by_color()),
        "rb": render_fraction(summary.rb) if has_solutions else None,
        "mono_prop": render_fraction(summary.mono_prop) if has_solutions else None,
        "baselines": baselines(),
    }


# Coloring files

def format_coloring(coloring: Coloring) -> str:
    return f"{coloring.ground.kind.value} {coloring.n}\n{' '.join(map(str, coloring.colors))}\n"


def write_coloring(path: str, coloring: Coloring):
    Path(path).write_text(format_coloring(coloring), encoding="utf-8")


def parse_coloring(text: str) -> Coloring:
    """
    Read the two-line coloring format: '<kind> <n>' then n colors

    Raises:
        DomainError: if the text is not a valid coloring
    """
    lines = [line.strip() for line in text.strip().splitlines()]
    if len(lines) != 2:
        raise DomainError(f"Coloring file needs exactly 2 lines, got {len(lines)}")
    header = lines[0].split()
    if len(header) != 2 or header[0] not in (k.value for k in GroundKind) or not header[1].isdigit():
        raise DomainError(f"Coloring header must read '<interval|cyclic> <n>', got {lines[0]!r}")
    ground = GroundSet(GroundKind(header[0]), int(header[1]))
    try:
        colors = [int(c) for c in lines[1].split()]
    except ValueError:
        raise DomainError(f"Coloring line must hold integers, got {lines[1]!r}")
    return Coloring(ground, tuple(colors))


def read_coloring(path: str) -> Coloring:
    return parse_coloring(Path(path).read_text(encoding="utf-8"))


def resolve_coloring(spec: str, ground: GroundSet) -> Coloring:
    """
    Build the coloring named by a CLI spec

    Args:
        spec (str): mod3-interval | mod3-cyclic | mod5-schur | periodic:<pattern>
            | file:<path> | random:<seed>
        ground (GroundSet): Universe the coloring must live on

    Raises:
        DomainError: if the spec is unknown or does not fit the ground set
    """
    kind, _, arg = spec.partition(":")
    if kind in CONSTRUCTIONS and not arg:
        if CONSTRUCTION_KINDS[kind] is not ground.kind:
            raise DomainError(f"{kind} is defined on {CONSTRUCTION_KINDS[kind].value} ground sets only")
        return CONSTRUCTIONS[kind](ground.n)
    if kind == "periodic" and arg:
        return periodic(ground.n, parse_pattern(arg), ground)
    if kind == "random" and arg:
        try:
            seed = int(arg)
        except ValueError:
            raise DomainError(f"Random coloring seed must be an integer, got {arg!r}")
        return seeded_random_coloring(ground, seed % 2 ** 64)
    if kind == "file" and arg:
        coloring = read_coloring(arg)
        if coloring.ground != ground:
            raise DomainError(
                f"Coloring file {arg} colors {coloring.ground.describe()}, expected {ground.describe()}"
            )
        return coloring
    raise DomainError(
        f"Unknown coloring spec {spec!r}; use mod3-interval, mod3-cyclic, mod5-schur, "
        "periodic:<pattern>, file:<path> or random:<seed>"
    )


# Checkpoints

class Checkpoint:
    """
    Append-only JSON-lines log of finished search units

    Line 1 is a header with the search parameters; every further line holds
    one finished chunk or restart. A truncated final line is dropped.
    """

    def __init__(self, path: str, header: Dict[str, Any]):
        self.path = Path(path)
        self.header = dict(header, schema="checkpoint", version=RECORD_VERSION)
        self._lock = threading.Lock()

    def load(self) -> List[Dict[str, Any]]:
        """
        Read finished units, creating the file if it does not exist

        Raises:
            CheckpointError: if the file is corrupt or belongs to another search
        """
        if not self.path.exists() or self.path.stat().st_size == 0:
            self.path.write_text(json.dumps(self.header, sort_keys=True) + "\n", encoding="utf-8")
            return []

        text = self.path.read_text(encoding="utf-8")
        complete, _, _ = text.rpartition("\n")
        lines = complete.split("\n") if complete else []
        if len(complete) + 1 != len(text):
            # drop the partial tail so later appends start on a fresh line
            self.path.write_text(complete + "\n" if complete else "", encoding="utf-8")
        if not lines:
            self.path.write_text(json.dumps(self.header, sort_keys=True) + "\n", encoding="utf-8")
            return []

        entries = []
        for number, line in enumerate(lines, start=1):
            try:
                entries.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise CheckpointError(f"Checkpoint {self.path} is corrupt at line {number}: {e.msg}")
        if entries[0] != self.header:
            raise CheckpointError(
                f"Checkpoint {self.path} was written for different search parameters; "
                "use a fresh checkpoint path"
            )
        units = entries[1:]
        for number, unit in enumerate(units, start=2):
            if not isinstance(unit, dict) or "index" not in unit:
                raise CheckpointError(f"Checkpoint {self.path} has a malformed entry at line {number}")
        return units

    def append(self, unit: Dict[str, Any]):
        line = json.dumps(unit, sort_keys=True)
        with self._lock:
            with self.path.open("a", encoding="utf-8") as f:
                f.write(line + "\n")
                f.flush()
