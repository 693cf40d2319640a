"""
Output models and their JSON / CSV emission.
"""

import json
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import pandas as pd
from pydantic import BaseModel, Field

from constants import CSV_COLUMNS


def _joined(values: Iterable[int]) -> str:
    return ";".join(str(v) for v in values)


class AnalysisReport(BaseModel):
    graph6: str
    n: int
    m: int
    Z: int
    pt: int
    PT: int
    pd: int
    realized_times: list[int]
    min_zfs: list[list[int]]
    times: list[int] = Field(description="pt(G, B) for each entry of min_zfs")
    eff: list[list[int]]
    eff_intersection: list[int]

    def eff_sets(self) -> list[frozenset[int]]:
        return [frozenset(b) for b in self.eff]

    def min_zfs_sets(self) -> list[frozenset[int]]:
        return [frozenset(b) for b in self.min_zfs]

    def time_of(self, b: Iterable[int]) -> int:
        return self.times[self.min_zfs.index(sorted(b))]

    def csv_record(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "Z": self.Z,
            "pt": self.pt,
            "PT": self.PT,
            "pd": self.pd,
            "realized_times": _joined(self.realized_times),
            "eff_count": len(self.eff),
            "eff_intersection": _joined(self.eff_intersection),
        }


class FamilyRow(BaseModel):
    zero_forcing_set: list[str]
    pt: int
    predicted: Optional[int] = None


class FamilyTable(BaseModel):
    family: str
    params: list[int]
    analysis: AnalysisReport
    rows: list[FamilyRow]
    facts: dict = Field(default_factory=dict, description="family-specific checks, e.g. comb diameter")


class Certificate(BaseModel):
    family: str
    order: int
    steps: int
    graph6: str
    M_lower: int
    Z: Optional[int] = Field(None, description="exact Z when the search was in budget")
    Z_upper: int = Field(description="order / 2, the zero forcing set of one matching side")
    expected: int
    pt: int
    square_is_2I: bool
    symmetric: bool
    witness: list[list[str]] = Field(description="unscaled [[L, I], [I, -L]] entries as p/q strings")
    note: str = "L-hat = M / sqrt(2); M^2 = 2I is checked in place of L-hat^2 = I"


class SuiteResult(BaseModel):
    suite: str
    checked: int = 0
    passed: int = 0
    violations: int = 0
    skipped: int = 0
    failures: list[dict] = Field(default_factory=list)


class SuiteSummary(BaseModel):
    corpus: str
    graphs: int
    suites: list[SuiteResult]
    exception_records: list[dict] = Field(default_factory=list,
                                          description="{graph6, n, structural_pass, brute_pt} per zigzag exception")

    @property
    def exceptions(self) -> list[str]:
        return [e["graph6"] for e in self.exception_records]

    @property
    def violations(self) -> int:
        return sum(s.violations for s in self.suites)


Emittable = Union[BaseModel, Sequence[BaseModel]]


def to_json(payload: Emittable) -> str:
    if isinstance(payload, BaseModel):
        return payload.model_dump_json(indent=2)
    return json.dumps([p.model_dump(mode="json") for p in payload], indent=2)


def analysis_frame(reports: Sequence[AnalysisReport]) -> pd.DataFrame:
    return pd.DataFrame([r.csv_record() for r in reports], columns=CSV_COLUMNS)


def to_csv(reports: Sequence[AnalysisReport]) -> str:
    return analysis_frame(reports).to_csv(index=False, lineterminator="\n")


def emit(text: str, output: Optional[str]) -> None:
    """Write to `output`, or to stdout when no path is given."""
    if output:
        Path(output).write_text(text)
    else:
        print(text)
