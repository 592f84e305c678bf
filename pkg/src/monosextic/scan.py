"""Exhaustive classification over rectangular (A, B) grids."""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .classify import ClassificationReport, Trinomial, classify

CSV_COLUMNS = ("A", "B", "irreducible", "discriminant", "delta", "gamma", "galois", "monogenic", "family")


@dataclass(frozen=True)
class ScanRow:
    A: int
    B: int
    irreducible: bool
    discriminant: int
    delta: int
    gamma: int | None
    galois: str | None
    monogenic: bool | None
    family: str | None

    @classmethod
    def from_report(cls, rep: ClassificationReport) -> ScanRow:
        return cls(
            rep.trinomial.A,
            rep.trinomial.B,
            rep.irreducible,
            rep.discriminant,
            rep.delta,
            rep.gamma,
            rep.galois.value if rep.galois else None,
            rep.monogenic.verdict if rep.monogenic else None,
            rep.family,
        )

    def csv_fields(self) -> list[str]:
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            return str(v)

        return [fmt(getattr(self, c)) for c in CSV_COLUMNS]

    def as_dict(self) -> dict:
        return {c: getattr(self, c) for c in CSV_COLUMNS}


@dataclass
class ScanResult:
    a_range: tuple[int, int]
    b_range: tuple[int, int]
    rows: list[ScanRow] = field(default_factory=list)
    cells: int = 0
    irreducible_cells: int = 0
    counts: dict[tuple[str, bool], int] = field(default_factory=dict)
    family_counts: dict[str, int] = field(default_factory=dict)

    def summary(self) -> dict:
        return {
            "a_range": list(self.a_range),
            "b_range": list(self.b_range),
            "cells": self.cells,
            "irreducible_cells": self.irreducible_cells,
            "row_count": len(self.rows),
            "counts": [
                {"galois": g, "monogenic": m, "count": n} for (g, m), n in sorted(self.counts.items())
            ],
            "family_counts": dict(sorted(self.family_counts.items())),
        }


def _classify_column(args) -> list[ScanRow]:
    A, b_lo, b_hi = args
    if A == 0:
        return []
    return [ScanRow.from_report(classify(Trinomial(A, B))) for B in range(b_lo, b_hi + 1) if B != 0]


def classify_grid(a_range: tuple[int, int], b_range: tuple[int, int], jobs: int = 1) -> list[ScanRow]:
    """Rows for every cell with AB != 0, ordered by (A, B) whatever ``jobs`` is."""
    (a_lo, a_hi), (b_lo, b_hi) = a_range, b_range
    if a_lo > a_hi or b_lo > b_hi:
        raise ValueError("empty range")
    tasks = [(A, b_lo, b_hi) for A in range(a_lo, a_hi + 1)]
    if jobs <= 1:
        columns = map(_classify_column, tasks)
        return [row for col in columns for row in col]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        columns = pool.map(_classify_column, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
        return [row for col in columns for row in col]


def scan(
    a_range: tuple[int, int],
    b_range: tuple[int, int],
    group: str | None = None,
    monogenic_only: bool = False,
    family: str | None = None,
    jobs: int | None = None,
) -> ScanResult:
    jobs = jobs if jobs is not None else (os.cpu_count() or 1)
    rows = classify_grid(a_range, b_range, jobs)
    irreducible = [r for r in rows if r.irreducible]
    result = ScanResult(a_range, b_range, cells=len(rows), irreducible_cells=len(irreducible))
    result.counts = dict(Counter((r.galois, bool(r.monogenic)) for r in irreducible))
    result.family_counts = dict(Counter(r.family for r in irreducible if r.family))
    result.rows = [
        r
        for r in irreducible
        if (group is None or r.galois == group)
        and (not monogenic_only or r.monogenic)
        and (family is None or r.family == family)
    ]
    return result


def parse_range(text: str) -> tuple[int, int]:
    """'LO:HI' (inclusive) or a single integer."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"malformed range {text!r}, expected LO:HI") from None
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi
