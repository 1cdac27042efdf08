"""Repeated-seed benchmark harness with milestone and robustness statistics.

Runs one instance (or a whole suite) over seeds 0..reps-1, then aggregates:
best/median radius, how many runs landed within 10/5/1/0.5 percent of the
best run, and the mean iteration at which each convergence milestone fell.
Everything except wall times is deterministic in (instances, reps, hp).
"""

from __future__ import annotations

import csv
import json
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import IO, Optional, Sequence

from .model import Hyperparameters, ProblemInstance
from .solver import MILESTONE_THRESHOLDS, convergence_milestones, solve

ROBUSTNESS_THRESHOLDS = (0.10, 0.05, 0.01, 0.005)


@dataclass(frozen=True)
class RunSummary:
    instance: str
    seed: int
    feasible: bool
    best_radius: Optional[float]
    best_iteration: Optional[int]
    milestones: Optional[dict]
    wall_time: float


def run_single(instance: ProblemInstance, hp: Hyperparameters) -> RunSummary:
    started = time.perf_counter()
    result = solve(instance, hp)
    wall = time.perf_counter() - started
    milestones = None
    if result.feasible:
        pairs = convergence_milestones(result.history, result.best_radius, MILESTONE_THRESHOLDS)
        milestones = {str(p): it for p, it in pairs}
    return RunSummary(
        instance=instance.name,
        seed=hp.seed,
        feasible=result.feasible,
        best_radius=result.best_radius,
        best_iteration=result.best_iteration,
        milestones=milestones,
        wall_time=wall,
    )


def _worker(task):
    instance, hp = task
    return run_single(instance, hp)


def run_bench(
    instances: Sequence[ProblemInstance],
    reps: int,
    hp: Hyperparameters,
    jobs: int = 1,
    reference_radii: Optional[dict] = None,
) -> tuple[list[RunSummary], dict]:
    """All (instance, seed) runs plus an aggregate report.

    Tasks are dispatched to a process pool when jobs > 1; summaries come
    back in (instance, seed) order either way.
    """
    tasks = [(inst, replace(hp, seed=seed)) for inst in instances for seed in range(reps)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            summaries = list(pool.map(_worker, tasks))
    else:
        summaries = [_worker(task) for task in tasks]

    references = reference_radii or {}
    report: dict = {"repetitions": reps, "hyperparameters": _hp_dict(hp), "instances": {}}
    for inst in instances:
        rows = [s for s in summaries if s.instance == inst.name]
        feasible = [s for s in rows if s.feasible]
        radii = [s.best_radius for s in feasible]
        entry: dict = {
            "circles": inst.n,
            "reference_radius": references.get(inst.name),
            "feasible_runs": len(feasible),
            "best_radius": min(radii) if radii else None,
            "median_radius": statistics.median(radii) if radii else None,
            "robustness": None,
            "milestone_mean_iterations": None,
            "runs": [
                {
                    "seed": s.seed,
                    "feasible": s.feasible,
                    "best_radius": s.best_radius,
                    "best_iteration": s.best_iteration,
                    "milestones": s.milestones,
                    "wall_time": s.wall_time,
                }
                for s in rows
            ],
        }
        if radii:
            best = min(radii)
            entry["robustness"] = {
                str(p): sum(1 for value in radii if value <= (1.0 + p) * best)
                for p in ROBUSTNESS_THRESHOLDS
            }
            entry["milestone_mean_iterations"] = {
                str(p): statistics.fmean(s.milestones[str(p)] for s in feasible)
                for p in MILESTONE_THRESHOLDS
            }
        report["instances"][inst.name] = entry
    return summaries, report


def _hp_dict(hp: Hyperparameters) -> dict:
    return {
        "f_max": hp.f_max,
        "v_max": hp.v_max,
        "alpha": hp.alpha,
        "s_max": hp.s_max,
        "s_min": hp.s_min,
        "c": hp.c,
        "n_it": hp.n_it,
        "dt": hp.dt,
        "epsilon": hp.epsilon,
        "overlap_tol": hp.overlap_tol,
    }


def format_report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


CSV_COLUMNS = (
    "instance",
    "seed",
    "feasible",
    "best_radius",
    "best_iteration",
    "milestone_0.1",
    "milestone_0.05",
    "milestone_0.01",
    "milestone_0.005",
    "milestone_0.001",
    "wall_time",
)


def write_runs_csv(fh: IO[str], summaries: Sequence[RunSummary]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for s in summaries:
        milestones = s.milestones or {}
        writer.writerow(
            (
                s.instance,
                s.seed,
                "true" if s.feasible else "false",
                "" if s.best_radius is None else repr(s.best_radius),
                "" if s.best_iteration is None else s.best_iteration,
                *(milestones.get(str(p), "") for p in MILESTONE_THRESHOLDS),
                f"{s.wall_time:.3f}",
            )
        )
