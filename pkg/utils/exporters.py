# utils/exporters.py
"""Deterministic file writers: JSON reports, trajectory and sweep CSV."""

import csv
import json
import logging
import os
from typing import Any, Dict, Iterable, List, Sequence

from pydantic import BaseModel

from models.portrait import PhasePortrait
from models.report import SweepRow
from models.trajectory import Trajectory

logger = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = ".17g"


def ensure_directory(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path


def _number(value: float) -> str:
    return format(float(value), CSV_FLOAT_FORMAT)


# ==============================
# JSON
# ==============================
def to_jsonable(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    return value


def dumps_json(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), indent=2, sort_keys=True) + "\n"


def write_json(path: str, payload: Any) -> str:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps_json(payload))
    logger.info("wrote %s", path)
    return path


def write_text(path: str, text: str) -> str:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text if text.endswith("\n") else text + "\n")
    logger.info("wrote %s", path)
    return path


def trajectory_payload(trajectory: Trajectory) -> Dict[str, Any]:
    return {
        "tier": trajectory.tier.value,
        "method": trajectory.method.value,
        "direction": trajectory.direction,
        "columns": ["t", *trajectory.columns],
        "samples": [[float(t), *(float(v) for v in row)]
                    for t, row in zip(trajectory.times, trajectory.states)],
        "terminal_reason": trajectory.terminal_reason.value,
        "stats": trajectory.stats.model_dump(),
        "message": trajectory.message,
    }


def portrait_payload(portrait: PhasePortrait) -> Dict[str, Any]:
    """Every PhasePortrait field; trajectories are flattened to sample lists."""
    payload = portrait.model_dump(mode="json", exclude={"trajectories"})
    payload["trajectories"] = [trajectory_payload(t) for t in portrait.trajectories]
    return payload


# ==============================
# CSV
# ==============================
def write_trajectory_csv(path: str, trajectory: Trajectory) -> str:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["t", *trajectory.columns])
        for t, row in zip(trajectory.times, trajectory.states):
            writer.writerow([_number(t), *(_number(v) for v in row)])
    logger.info("wrote %s (%d samples)", path, len(trajectory.times))
    return path


def _point_cells(point) -> List[str]:
    if point is None:
        return ["", ""]
    return [_number(point[0]), _number(point[1])]


SWEEP_TAIL_COLUMNS = [
    "regime", "origin_case", "stable_kinds", "feasible_count",
    "axis1_d1", "axis1_d2", "axis2_d1", "axis2_d2",
    "interior_d1", "interior_d2", "interior_feasible", "degenerate",
]


def sweep_table(parameters: Sequence[str], rows: Iterable[SweepRow]) -> List[List[str]]:
    table = [[*parameters, *SWEEP_TAIL_COLUMNS]]
    for row in rows:
        feasible = "" if row.interior_feasible is None else str(row.interior_feasible).lower()
        table.append([
            *(_number(row.values[name]) for name in parameters),
            row.regime.value,
            row.origin_case,
            ";".join(row.stable_kinds),
            str(row.feasible_count),
            *_point_cells(row.axis1),
            *_point_cells(row.axis2),
            *_point_cells(row.interior),
            feasible,
            str(row.degenerate).lower(),
        ])
    return table


def write_sweep_csv(path: str, parameters: Sequence[str], rows: Sequence[SweepRow]) -> str:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerows(sweep_table(parameters, rows))
    logger.info("wrote %s (%d cells)", path, len(rows))
    return path
