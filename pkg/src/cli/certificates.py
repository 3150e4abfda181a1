"""Versioned JSON certificates emitted by the command line."""

from __future__ import annotations

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1


class InputSummary(BaseModel):
    n: int
    m: int
    directed: bool


class BoundsJson(BaseModel):
    lower_log: int
    upper: int


class CheckJson(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    passed: bool = Field(alias="pass")


class CertificateJson(BaseModel):
    """Result of ``mu``, ``construct``, ``verify`` or ``bounds``.

    ``vectors`` is present exactly when a resolving set was produced.
    ``resolving`` and ``witness`` are only filled in by ``verify``.
    """

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    mode: str
    input_summary: InputSummary
    mu: int | None = None
    landmarks: list[str] = Field(default_factory=list)
    vectors: dict[str, list[int]] | None = None
    bounds: BoundsJson | None = None
    checks: list[CheckJson] = Field(default_factory=list)
    resolving: bool | None = None
    witness: list[str] | None = None

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    def to_text(self) -> str:
        """Human-readable rendering; tables via pandas."""
        s = self.input_summary
        kind = "digraph" if s.directed else "graph"
        lines = [f"mode: {self.mode}", f"input: {kind}, n={s.n}, m={s.m}"]
        if self.mu is not None:
            lines.append(f"mu: {self.mu}")
        if self.bounds is not None:
            lines.append(f"bounds: {self.bounds.lower_log} <= mu(L) <= {self.bounds.upper}")
        if self.resolving is not None:
            lines.append(f"resolving: {'yes' if self.resolving else 'no'}")
        if self.witness is not None:
            lines.append(f"witness: {self.witness[0]} / {self.witness[1]}")
        if self.landmarks:
            lines.append(f"landmarks ({len(self.landmarks)}): {', '.join(self.landmarks)}")
        if self.vectors:
            vec = pd.DataFrame(
                {"vertex": list(self.vectors), "D(u|W)": [tuple(v) for v in self.vectors.values()]}
            )
            lines += ["", vec.to_string(index=False)]
        if self.checks:
            chk = pd.DataFrame([{"check": c.name, "pass": c.passed} for c in self.checks])
            lines += ["", chk.to_string(index=False)]
        return "\n".join(lines)


class RecursionCheckJson(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    direct: str
    recursive: str
    passed: bool = Field(alias="pass")


class RecursionReportJson(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    mode: str = "crosscheck"
    family: str
    d: int
    n: int
    passed: bool
    note: str
    checks: list[RecursionCheckJson]

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)
