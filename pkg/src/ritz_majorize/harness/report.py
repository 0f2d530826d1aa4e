"""Deterministic JSON/CSV serialization of bound reports."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Literal

import numpy as np

from ..bounds import BoundReport
from ..errors import InvalidInput, IoError

Format = Literal["json", "csv"]
CSV_FIELDS = ("bound_id", "status", "precondition_ok", "relation", "holds",
              "seed", "n", "dim_x", "dim_y", "lhs", "rhs", "prefix_margins")


@dataclass(frozen=True)
class ReportRecord:
    """A bound report together with the instance it was evaluated on."""

    report: BoundReport
    seed: int | None
    n: int
    dim_x: int
    dim_y: int


def _num(v: float):
    v = float(v)
    return v if math.isfinite(v) else None


def _vec(a: np.ndarray) -> list:
    return [_num(v) for v in np.asarray(a, dtype=float).ravel()]


def record_to_dict(rec: ReportRecord) -> dict:
    r = rec.report
    return {
        "bound_id": r.bound_id,
        "status": r.status,
        "precondition_ok": r.precondition_ok,
        "lhs": _vec(r.lhs),
        "rhs": _vec(r.rhs),
        "relation": r.relation,
        "holds": r.holds,
        "prefix_margins": _vec(r.margins),
        "instance": {"seed": rec.seed, "n": rec.n, "dim_x": rec.dim_x, "dim_y": rec.dim_y},
    }


def _csv_vec(values: list) -> str:
    return ";".join("" if v is None else repr(v) for v in values)


def dumps(records: Iterable[ReportRecord], fmt: Format = "json") -> str:
    rows = [record_to_dict(r) for r in records]
    if fmt == "json":
        return json.dumps(rows, indent=2, allow_nan=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for d in rows:
            inst = d["instance"]
            writer.writerow({
                "bound_id": d["bound_id"], "status": d["status"],
                "precondition_ok": str(d["precondition_ok"]).lower(), "relation": d["relation"],
                "holds": str(d["holds"]).lower(),
                "seed": "" if inst["seed"] is None else inst["seed"],
                "n": inst["n"], "dim_x": inst["dim_x"], "dim_y": inst["dim_y"],
                "lhs": _csv_vec(d["lhs"]), "rhs": _csv_vec(d["rhs"]),
                "prefix_margins": _csv_vec(d["prefix_margins"]),
            })
        return buf.getvalue()
    raise InvalidInput(f"unknown format {fmt!r}; use json or csv")


def write_text(text: str, path: str | Path) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def emit(records: Iterable[ReportRecord], fmt: Format, path: str | Path) -> None:
    """Write ``records`` to ``path`` as JSON or CSV; the same input gives identical bytes."""
    write_text(dumps(records, fmt), path)
