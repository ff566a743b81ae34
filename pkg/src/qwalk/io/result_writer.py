"""
Writes walk results as CSV or JSON files.
"""

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

FORMATS = ("csv", "json")
SIGNIFICANT_DIGITS = 12


@dataclass
class ResultTable:
    """
    Tabular result of one CLI run.

    Attributes:
        header: Column names.
        rows: One tuple per record, in output order.
        meta: Run description, written to JSON output only.
        summary: Scalar results, written as trailing ``# key=value`` lines in
            CSV and under ``meta["summary"]`` in JSON.
    """

    header: Sequence[str]
    rows: list[tuple] = field(default_factory=list)
    meta: dict[str, Any] = field(default_factory=dict)
    summary: dict[str, Any] = field(default_factory=dict)


def format_number(value: Any) -> Any:
    """Integers unchanged; reals rounded to 12 significant digits."""
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if not math.isfinite(v):
            return repr(v)
        return float(f"{v:.{SIGNIFICANT_DIGITS}g}") + 0.0
    if isinstance(value, dict):
        return {k: format_number(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [format_number(v) for v in value]
    return value


def _csv_cell(value: Any) -> str:
    value = format_number(value)
    if isinstance(value, float):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    return str(value)


class ResultWriter:
    """
    Renders a ResultTable and saves it to a file or standard output.
    """

    def __init__(self, table: ResultTable):
        """
        Initializes the ResultWriter with a ResultTable instance.

        Args:
            table: The ResultTable to be written.
        """
        if not isinstance(table, ResultTable):
            raise TypeError("table must be an instance of ResultTable")
        self._table = table

    def render_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(self._table.header)
        for row in self._table.rows:
            writer.writerow([_csv_cell(v) for v in row])
        for key, value in self._table.summary.items():
            out.write(f"# {key}={_csv_cell(value)}\n")
        return out.getvalue()

    def render_json(self) -> str:
        meta = format_number(dict(self._table.meta))
        if self._table.summary:
            meta["summary"] = format_number(dict(self._table.summary))
        data = [dict(zip(self._table.header, format_number(list(row)))) for row in self._table.rows]
        return json.dumps({"meta": meta, "data": data}, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.render_csv()
        if fmt == "json":
            return self.render_json()
        raise ValueError(f"unknown output format {fmt!r}; expected one of: {', '.join(FORMATS)}")

    def save(self, filepath: Optional[str], fmt: str = "csv") -> bool:
        """
        Writes the rendered table to ``filepath``, or to standard output when
        ``filepath`` is None or "-".

        If the file cannot be written, an error message is printed to stderr
        and False is returned.

        Args:
            filepath: Destination path.
            fmt: "csv" or "json".
        """
        content = self.render(fmt)
        if filepath in (None, "-"):
            sys.stdout.write(content)
            sys.stdout.flush()
            return True
        try:
            with open(filepath, "w", encoding="utf-8", newline="") as f:
                f.write(content)
        except (IOError, OSError) as e:
            print(f"Error saving results to {filepath}: {e}", file=sys.stderr)
            return False
        return True
