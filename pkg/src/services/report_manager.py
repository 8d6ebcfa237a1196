"""ReportManager service for rendering command results"""

import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from src import __version__
from src.config import Config
from src.invariants.models import InvariantReport
from src.serialization.json_codec import dumps, to_jsonable
from src.verification.models import SuiteResult

logger = logging.getLogger(__name__)

REPORT_FORMATS = ("json", "csv")


@dataclass
class Report:
    """One command run: what was asked, what came out, and how to redo it"""
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    outputs: Any = None
    seed: Optional[int] = None
    version: str = __version__

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": dict(sorted(self.inputs.items())),
            "outputs": to_jsonable(self.outputs),
            "seed": self.seed,
            "version": self.version,
        }


class ReportManager:
    """Builds reports and writes them as JSON or CSV"""

    @staticmethod
    def build(command: str, inputs: Dict[str, Any], outputs: Any, seed: Optional[int] = None) -> Report:
        return Report(command, {k: v for k, v in inputs.items() if v is not None}, outputs, seed)

    @staticmethod
    def _rows(outputs: Any) -> List[Dict[str, Any]]:
        if isinstance(outputs, SuiteResult):
            return [{"suite": outputs.suite, **case.to_dict()} for case in outputs.cases]
        if isinstance(outputs, InvariantReport):
            return [{"invariant": name, **entry.to_dict()} for name, entry in sorted(outputs.values.items())]
        data = to_jsonable(outputs)
        return data if isinstance(data, list) else [data]

    @classmethod
    def to_frame(cls, outputs: Any) -> pd.DataFrame:
        """Flat table of a result; nested keys become dotted columns, sorted"""
        df = pd.json_normalize(cls._rows(outputs))
        return df.reindex(sorted(df.columns), axis=1)

    @classmethod
    def render(cls, report: Report, format: str = "json") -> str:
        if format == "json":
            return dumps(report)
        if format == "csv":
            return cls.to_frame(report.outputs).to_csv(index=False)
        raise ValueError(f"unknown report format '{format}'; use one of {', '.join(REPORT_FORMATS)}")

    @classmethod
    def write(cls, report: Report, format: str = "json", output: Optional[Union[str, Path]] = None) -> Optional[Path]:
        """
        Write to output, or to standard output when no path is given.

        A bare file name goes under Config.REPORTS_OUTPUT_DIR.
        """
        text = cls.render(report, format)
        if output is None:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
            return None

        path = Path(output)
        if not path.is_absolute() and path.parent == Path("."):
            path = Config.ensure_reports_dir() / path
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            f.write(text)
        logger.info(f"Report written to {path}")
        return path
