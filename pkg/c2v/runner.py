"""Plan and execute (check, k) tasks and collect ordered results."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from c2v.checks import CATALOG, Check, CheckContext, CheckSkipped, TableRow, get_check
from c2v.config import ConfigError, RunConfig
from c2v.corpus import Corpus, Mutation
from c2v.weyl.engine import ResourceLimitError

logger = logging.getLogger(__name__)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


class UnknownCheckError(ConfigError):
    """Raised for a check id that is not in the catalogue."""


class InadmissibleLevelError(ValueError):
    """Raised when a check is asked to run below its minimum level."""


@dataclass
class CheckResult:
    check_id: str
    k: Optional[int]
    status: str
    witness: str
    elapsed_ms: int
    mode: str = "concrete"
    rows: List[TableRow] = field(default_factory=list)
    resource_limited: bool = False

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "k": self.k,
            "status": self.status,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
            "mode": self.mode,
        }


def _lookup(check_id: str) -> Check:
    try:
        return get_check(check_id)
    except KeyError:
        raise UnknownCheckError(f"unknown check id: {check_id}") from None


def resolve_mode(check: Check, config: RunConfig) -> str:
    """Scalar mode a check runs in under the configured preference."""
    if check.kind == "symbolic" and config.mode == "concrete":
        return "concrete"
    return check.kind


def run_check(check_id: str, k: Optional[int], config: RunConfig) -> CheckResult:
    """Run one catalogue entry; ``k`` is ignored for symbolic and k-free runs."""
    check = _lookup(check_id)
    mode = resolve_mode(check, config)
    level = k if mode == "concrete" else None
    if mode == "concrete":
        if k is None:
            raise InadmissibleLevelError(f"{check.check_id} needs a concrete level")
        reason = check.admits(k)
        if reason:
            raise InadmissibleLevelError(reason)

    weight_cap = None if config.weight_cap == "auto" else int(config.weight_cap)
    levels = (k,) if k is not None else config.k_values
    ctx = CheckContext(level, config.limits, weight_cap, config.mutations, levels)
    label = f"{check.check_id} ({ctx.mode.label() if mode != 'k-free' else 'k-free'})"
    logger.info(f"running {label}")
    start = time.perf_counter()
    rows: List[TableRow] = []
    limited = False
    try:
        outcome = check.run(ctx)
        status = PASS if outcome.passed else FAIL
        witness = outcome.witness
        rows = outcome.rows
    except ResourceLimitError as exc:
        status, witness, limited = SKIPPED, f"resource limit: {exc}", True
        logger.warning(f"{label} skipped: {exc}")
    except CheckSkipped as exc:
        status, witness = SKIPPED, exc.reason
        logger.warning(f"{label} skipped: {exc.reason}")
    except Exception as exc:
        status, witness = FAIL, f"{type(exc).__name__}: {exc}"
        logger.exception(f"{label} raised")
    elapsed = int((time.perf_counter() - start) * 1000)
    logger.info(f"{label}: {status} in {elapsed} ms")
    return CheckResult(check.check_id, level, status, witness, elapsed, mode, rows, limited)


Task = Tuple[str, Optional[int]]


def plan_tasks(config: RunConfig) -> Tuple[List[Task], List[CheckResult]]:
    """Expand a configuration into tasks; inadmissible pairs become skipped results."""
    ids = list(CATALOG) if config.check_ids == "all" else list(config.check_ids)
    for check_id in ids:
        _lookup(check_id)
    for text in config.mutations:
        try:
            mutation = Mutation.parse(text)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if not Corpus.is_known(mutation.name):
            raise ConfigError(f"unknown corpus name in mutation: {mutation.name}")

    tasks: List[Task] = []
    skipped: List[CheckResult] = []
    for check_id in ids:
        check = _lookup(check_id)
        mode = resolve_mode(check, config)
        if mode != "concrete":
            tasks.append((check.check_id, None))
            continue
        for k in config.k_values:
            reason = check.admits(k)
            if reason:
                skipped.append(CheckResult(check.check_id, k, SKIPPED, reason, 0, mode))
            else:
                tasks.append((check.check_id, k))
    return tasks, skipped


def _run_task(task: Task, config: RunConfig) -> CheckResult:
    return run_check(task[0], task[1], config)


def run_suite(config: RunConfig) -> List[CheckResult]:
    """Run every requested (check, k) pair; results follow catalogue order, then k."""
    tasks, results = plan_tasks(config)
    logger.info(f"{len(tasks)} tasks, {len(results)} skipped at planning, {config.jobs} worker(s)")
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results += list(pool.map(_run_task, tasks, [config] * len(tasks)))
    else:
        results += [_run_task(task, config) for task in tasks]
    order = {check_id: i for i, check_id in enumerate(CATALOG)}
    results.sort(key=lambda r: (order[r.check_id], -1 if r.k is None else r.k))
    return results


def summarize(results: List[CheckResult]) -> Dict[str, int]:
    counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
    for r in results:
        counts[r.status] += 1
    return counts


def exit_code(results: List[CheckResult], strict: bool = False) -> int:
    if any(r.status == FAIL for r in results):
        return 1
    if strict and any(r.resource_limited for r in results):
        return 3
    return 0


__all__ = [
    "CheckResult",
    "FAIL",
    "InadmissibleLevelError",
    "PASS",
    "SKIPPED",
    "UnknownCheckError",
    "exit_code",
    "plan_tasks",
    "resolve_mode",
    "run_check",
    "run_suite",
    "summarize",
]
