"""Reading and writing instances, results, and iteration traces.

Instance text format: a header line ``name N`` followed by N lines of
``radius mass``. The JSON alternative mirrors it as
``{"name": ..., "circles": [{"radius": ..., "mass": ...}, ...]}``. Result
JSON captures everything needed to re-render or re-run a layout. All float
formatting round-trips exactly (shortest repr), and writers emit keys in
sorted order so identical runs serialize to identical bytes.
"""

from __future__ import annotations

import csv
import json
import math
from typing import IO, Optional

import numpy as np

from .model import (
    Hyperparameters,
    IterationRecord,
    ProblemInstance,
    SolveResult,
    validate_instance,
)
from .solver import MILESTONE_THRESHOLDS, convergence_milestones


class ParseError(ValueError):
    """Malformed instance or result data; the message points at the spot."""


def _format_number(x: float) -> str:
    # Integral values print bare (20, not 20.0); everything else uses the
    # shortest representation that parses back to the same float.
    value = float(x)
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def _parse_number(token: str, what: str, line_no: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"line {line_no}: {what} {token!r} is not a number") from None
    if not math.isfinite(value) or value <= 0.0:
        raise ParseError(f"line {line_no}: {what} must be positive and finite, got {token}")
    return value


def parse_instance(text: str) -> ProblemInstance:
    """Parse the ``name N`` + ``radius mass`` text format."""
    lines = text.splitlines()
    header_no = None
    header = None
    for idx, raw in enumerate(lines, start=1):
        if raw.strip():
            header_no, header = idx, raw.split()
            break
    if header is None:
        raise ParseError("line 1: empty input, expected a 'name N' header")
    if len(header) != 2:
        raise ParseError(f"line {header_no}: header must be 'name N', got {' '.join(header)!r}")
    name, count_token = header
    try:
        count = int(count_token)
    except ValueError:
        raise ParseError(f"line {header_no}: circle count {count_token!r} is not an integer") from None
    if count < 1:
        raise ParseError(f"line {header_no}: circle count must be at least 1, got {count}")

    radii = []
    masses = []
    for idx in range(header_no, len(lines)):
        raw = lines[idx]
        line_no = idx + 1
        fields = raw.split()
        if not fields:
            continue
        if len(radii) == count:
            raise ParseError(f"line {line_no}: expected {count} circle lines, found more")
        if len(fields) != 2:
            raise ParseError(f"line {line_no}: expected 'radius mass', got {raw.strip()!r}")
        radii.append(_parse_number(fields[0], "radius", line_no))
        masses.append(_parse_number(fields[1], "mass", line_no))
    if len(radii) != count:
        raise ParseError(f"header declares {count} circles but {len(radii)} lines follow")

    instance = ProblemInstance(name=name, radii=radii, masses=masses)
    problems = validate_instance(instance)
    if problems:
        raise ParseError("; ".join(problems))
    return instance


def format_instance(instance: ProblemInstance) -> str:
    lines = [f"{instance.name} {instance.n}"]
    for radius, mass in instance.circles():
        lines.append(f"{_format_number(radius)} {_format_number(mass)}")
    return "\n".join(lines) + "\n"


def parse_instance_json(text: str) -> ProblemInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "name" not in data or "circles" not in data:
        raise ParseError("instance JSON must be an object with 'name' and 'circles'")
    circles = data["circles"]
    if not isinstance(circles, list) or not circles:
        raise ParseError("'circles' must be a non-empty list")
    radii = []
    masses = []
    for pos, entry in enumerate(circles):
        if not isinstance(entry, dict) or "radius" not in entry or "mass" not in entry:
            raise ParseError(f"circle {pos}: expected an object with 'radius' and 'mass'")
        radii.append(entry["radius"])
        masses.append(entry["mass"])
    instance = ProblemInstance(name=str(data["name"]), radii=radii, masses=masses)
    problems = validate_instance(instance)
    if problems:
        raise ParseError("; ".join(problems))
    return instance


def format_instance_json(instance: ProblemInstance) -> str:
    payload = {
        "name": instance.name,
        "circles": [{"radius": r, "mass": m} for r, m in instance.circles()],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def load_instance(path: str) -> ProblemInstance:
    """Parse a file, dispatching on the .json suffix."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return parse_instance_json(text)
    return parse_instance(text)


def result_to_dict(result: SolveResult) -> dict:
    hp = result.hyperparameters
    instance = result.instance
    milestones: Optional[dict] = None
    if result.feasible:
        pairs = convergence_milestones(result.history, result.best_radius, MILESTONE_THRESHOLDS)
        milestones = {str(p): it for p, it in pairs}
    return {
        "instance": instance.name,
        "radii": instance.radii.tolist(),
        "masses": instance.masses.tolist(),
        "seed": hp.seed,
        "hyperparameters": {
            "f_max": hp.f_max,
            "v_max": hp.v_max,
            "alpha": hp.alpha,
            "s_max": hp.s_max,
            "s_min": hp.s_min,
            "c": hp.c,
            "n_it": hp.n_it,
            "dt": hp.dt,
            "epsilon": hp.epsilon,
            "overlap_tol": hp.resolved_overlap_tol(instance),
        },
        "feasible": result.feasible,
        "best_radius": result.best_radius,
        "best_iteration": result.best_iteration,
        "positions": None if result.best_positions is None else result.best_positions.tolist(),
        "milestones": milestones,
    }


def format_result_json(result: SolveResult) -> str:
    return json.dumps(result_to_dict(result), sort_keys=True, indent=2) + "\n"


def parse_result_dict(text: str) -> dict:
    """Light validation of a result JSON document, for re-rendering."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("result JSON must be an object")
    for key in ("instance", "radii", "masses", "feasible", "best_radius", "positions"):
        if key not in data:
            raise ParseError(f"result JSON is missing {key!r}")
    radii = data["radii"]
    masses = data["masses"]
    if not isinstance(radii, list) or not isinstance(masses, list) or len(radii) != len(masses):
        raise ParseError("radii and masses must be lists of equal length")
    if data["feasible"]:
        positions = data["positions"]
        if not isinstance(positions, list) or len(positions) != len(radii):
            raise ParseError("positions must list one [x, y] per circle")
    return data


TRACE_COLUMNS = ("iteration", "target_radius", "actual_radius", "overlap", "cg_violation", "feasible")


class TraceCsvWriter:
    """Streams IterationRecords to CSV; one row per iteration.

    ``actual_radius`` is left empty on infeasible rows.
    """

    def __init__(self, fh: IO[str]):
        self._writer = csv.writer(fh, lineterminator="\n")
        self._writer.writerow(TRACE_COLUMNS)

    def __call__(self, record: IterationRecord) -> None:
        self._writer.writerow(
            (
                record.iteration,
                repr(record.target_radius),
                "" if record.actual_radius is None else repr(record.actual_radius),
                repr(record.overlap),
                repr(record.cg_violation),
                "true" if record.feasible else "false",
            )
        )


def write_trace_csv(fh: IO[str], history) -> None:
    writer = TraceCsvWriter(fh)
    for record in history:
        writer(record)
