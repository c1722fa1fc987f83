#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Built-in modules
from typing import Any, Iterable

# Third-party modules
import pandas

# Internal modules
from spexlab.common import format_cell
from spexlab.errors import InvalidParameters

FORMATS = ("json", "csv", "text", "markdown")


###############################################################################
def rows_frame(rows: Iterable[Any]) -> pandas.DataFrame:
    """Rows may be dicts or objects with a `to_row` method."""
    records = [r.to_row() if hasattr(r, "to_row") else dict(r) for r in rows]
    if not records:
        raise InvalidParameters("cannot build a table without rows")
    return pandas.DataFrame.from_records(records)


def emit_table(rows: Iterable[Any], fmt: str = "text") -> str:
    """
    Render rows as aligned text, CSV, markdown or JSON records. Missing
    values show as "-" in the text formats and as null in JSON.

        n   ex  spex         rho_H_lower  ...
        8   19  6.162277660  6.162277660  ...
    """
    if fmt not in FORMATS:
        raise InvalidParameters(
            f"unknown table format {fmt!r}, expected one of {FORMATS}"
        )
    df = rows_frame(rows)
    if fmt == "json":
        return df.to_json(orient="records", double_precision=12)
    cells = df.astype(object).map(format_cell)
    if fmt == "csv":
        return cells.to_csv(index=False)
    if fmt == "markdown":
        return cells.to_markdown(index=False) + "\n"
    return cells.to_string(index=False) + "\n"


def key_value_rows(result: dict, prefix: str = "") -> list[dict]:
    """Flatten a nested result into (key, value) rows for the text formats."""
    rows = []
    for key in sorted(result):
        value = result[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(key_value_rows(value, prefix=f"{name}."))
        elif isinstance(value, (list, tuple)):
            rows.append({"key": name, "value": " ".join(str(v) for v in value) or None})
        else:
            rows.append({"key": name, "value": value})
    return rows
