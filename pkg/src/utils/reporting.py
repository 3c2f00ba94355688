import os
import sys
from typing import Dict, List, Sequence

import pandas as pd

from src.utils.errors import InputError


def table(rows: Sequence[Dict], columns: Sequence[str]) -> pd.DataFrame:
    """DataFrame with a fixed column order, also for an empty row list."""
    df = pd.DataFrame(list(rows), columns=list(columns))
    return df.reset_index(drop=True)


def render_table(df: pd.DataFrame) -> str:
    if df.empty:
        return "(no rows)\n"
    return df.to_string(index=False) + "\n"


def table_records(df: pd.DataFrame) -> List[Dict]:
    """Rows as plain dicts for JSON output; numpy scalars become Python values."""
    records = []
    for row in df.to_dict(orient="records"):
        records.append({k: (v.item() if hasattr(v, "item") else v) for k, v in row.items()})
    return records


def save_table(df: pd.DataFrame, output_path: str):
    """Writes a report table as CSV, creating the parent directory."""
    parent = os.path.dirname(output_path)
    try:
        if parent:
            os.makedirs(parent, exist_ok=True)
        df.to_csv(output_path, index=False)
    except OSError as e:
        raise InputError(f"cannot write '{output_path}': {e}")
    print(f"[INFO] report table written: {output_path}", file=sys.stderr)


def failed_rows(df: pd.DataFrame, column: str = "ok") -> pd.DataFrame:
    if column not in df.columns:
        return df.iloc[0:0]
    return df[~df[column].astype(bool)]


def summarize(df: pd.DataFrame, by: str, column: str = "ok") -> pd.DataFrame:
    """Per-group row counts and failures, groups in sorted order."""
    if df.empty:
        return table([], [by, "rows", "failed"])
    grouped = df.groupby(by, sort=True)[column]
    out = pd.DataFrame({
        "rows": grouped.size(),
        "failed": grouped.apply(lambda s: int((~s.astype(bool)).sum())),
    }).reset_index()
    return out
