"""Text, JSON and CSV renderings of a list of check results."""

from __future__ import annotations

import json
import logging
from itertools import groupby
from pathlib import Path
from typing import Iterable, List, Optional

import pandas as pd

from c2v.checks import CATALOG
from c2v.config import RunConfig
from c2v.runner import CheckResult, summarize

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
TABLE_COLUMNS = ["k", "n", "space", "dim_computed", "dim_formula", "match", "check_id"]


class ReportError(OSError):
    """Raised when a report cannot be written."""


def run_meta(results: List[CheckResult], config: Optional[RunConfig] = None) -> dict:
    meta = {"summary": summarize(results)}
    if config is not None:
        meta.update(
            {
                "k_values": list(config.k_values),
                "checks": "all" if config.check_ids == "all" else list(config.check_ids),
                "weight_cap": config.weight_cap,
                "mode": config.mode,
                "mutations": list(config.mutations),
                "limits": config.limits.to_dict(),
            }
        )
    return meta


def table_frame(results: Iterable[CheckResult]) -> pd.DataFrame:
    records = []
    for r in results:
        for row in r.rows:
            records.append({**row.as_dict(), "check_id": r.check_id})
    return pd.DataFrame.from_records(records, columns=TABLE_COLUMNS)


def render_json(results: List[CheckResult], config: Optional[RunConfig] = None) -> str:
    document = {
        "schema_version": SCHEMA_VERSION,
        "run_meta": run_meta(results, config),
        "results": [r.as_dict() for r in results],
    }
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_csv(results: List[CheckResult]) -> str:
    return table_frame(results).to_csv(index=False)


def render_text(results: List[CheckResult]) -> str:
    lines: List[str] = []
    for check_id, group in groupby(results, key=lambda r: r.check_id):
        check = CATALOG.get(check_id)
        lines.append(f"{check_id}  {check.claim if check else ''}".rstrip())
        for r in group:
            level = "k-free" if r.mode == "k-free" else ("symbolic" if r.k is None else f"k={r.k}")
            lines.append(f"  {level:<9} {r.status.upper():<7} {r.witness} ({r.elapsed_ms} ms)")
            mismatches = [row.as_dict() for row in r.rows if not row.match]
            if mismatches:
                frame = pd.DataFrame.from_records(mismatches, columns=TABLE_COLUMNS[:-1])
                lines.extend("    " + line for line in frame.to_string(index=False).splitlines())
    counts = summarize(results)
    lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    return "\n".join(lines) + "\n"


def render_report(
    results: List[CheckResult], format: str = "text", config: Optional[RunConfig] = None
) -> str:
    if format == "json":
        return render_json(results, config)
    if format == "csv":
        return render_csv(results)
    if format == "text":
        return render_text(results)
    raise ValueError(f"unknown report format: {format}")


def write_report(document: str, path: Path) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(document, encoding="utf-8")
    except OSError as exc:
        raise ReportError(f"cannot write report to {path}: {exc.strerror or exc}") from exc
    logger.info(f"report written to {path}")


__all__ = [
    "ReportError",
    "SCHEMA_VERSION",
    "render_csv",
    "render_json",
    "render_report",
    "render_text",
    "run_meta",
    "table_frame",
    "write_report",
]
