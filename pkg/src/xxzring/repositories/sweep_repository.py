"""Sweep File Repository.

Flat-file data access for the CLI: JSON plan and spec documents in, CSV and
JSON results out. CSV output is byte-deterministic: fixed significant
digits, ``.`` decimal separator and ``\\n`` line endings.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any

import orjson
import structlog
from pydantic import ValidationError as PydanticValidationError

from ..core.config import get_settings
from ..core.exceptions import NotFoundError, ValidationError
from ..schemas.ring import RingSpec
from ..schemas.sweep import SweepPlan, SweepResult
from ..services.ring_service import load_ring_spec

log = structlog.get_logger(__name__)

CSV_HEADER = ("axis1", "axis2", "pair", "concurrence")


class SweepRepository:
    """Reads plans/specs and writes sweep results."""

    def __init__(self, significant_digits: int | None = None) -> None:
        self.significant_digits = significant_digits or get_settings().CSV_SIGNIFICANT_DIGITS

    # ------------------------------------------------------------------
    # Input documents
    # ------------------------------------------------------------------

    @staticmethod
    def _read_json(path: Path, kind: str) -> Any:
        if not path.is_file():
            raise NotFoundError(
                message=f"{kind} file not found: {path}",
                resource_type=kind,
                resource_id=str(path),
            )
        try:
            return orjson.loads(path.read_bytes())
        except orjson.JSONDecodeError as e:
            raise ValidationError(
                message=f"{kind} file {path} is not valid JSON: {e}",
                details={"path": str(path)},
            )

    def load_plan(self, path: Path) -> SweepPlan:
        data = self._read_json(path, "plan")
        try:
            plan = SweepPlan.model_validate(data)
        except PydanticValidationError as e:
            raise ValidationError.from_pydantic(e, f"Invalid sweep plan {path}")
        log.debug("plan_loaded", path=str(path), rows=plan.expected_rows())
        return plan

    def load_spec(self, path: Path) -> RingSpec:
        return load_ring_spec(self._read_json(path, "spec"))

    # ------------------------------------------------------------------
    # Results
    # ------------------------------------------------------------------

    def _format(self, value: float | None) -> str:
        if value is None:
            return ""
        text = format(value, f".{self.significant_digits}g")
        return "0" if text == "-0" else text

    def render_csv(self, result: SweepResult) -> str:
        lines = [",".join(CSV_HEADER)]
        for row in result.rows:
            lines.append(
                ",".join(
                    (self._format(row.axis1), self._format(row.axis2), row.pair, self._format(row.concurrence))
                )
            )
        return "\n".join(lines) + "\n"

    def write_csv(self, result: SweepResult, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(self.render_csv(result))
        log.info("csv_written", path=str(path), rows=len(result.rows))

    def write_json(self, result: SweepResult, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(
            orjson.dumps(result.model_dump(mode="json"), option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS)
        )
        log.info("json_written", path=str(path))

