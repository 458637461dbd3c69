"""Verification reports shared by all checking suites.

A report records a pass/fail verdict, how many individual identities were
checked, which checking mode was used (exhaustive over a finite basis, or
sampled), and on failure the first counterexample in deterministic order.
Reports serialize to the JSON shape consumed by the CLI.
"""

from __future__ import annotations

import dataclasses
from typing import Any, Optional


@dataclasses.dataclass(frozen=True)
class Witness:
    description: str
    data: dict

    def to_json(self) -> dict:
        return {"description": self.description, **_jsonable(self.data)}


@dataclasses.dataclass(frozen=True)
class CheckReport:
    status: str  # "pass" | "fail"
    checked_count: int
    mode: str = "exhaustive"  # "exhaustive" | "sampled"
    witness: Optional[Witness] = None
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "status": self.status,
            "checked_count": self.checked_count,
            "mode": self.mode,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def passed(checked: int, mode: str = "exhaustive", notes: tuple[str, ...] = ()) -> CheckReport:
    return CheckReport("pass", checked, mode, None, notes)


def failed(
    checked: int, description: str, data: dict, mode: str = "exhaustive"
) -> CheckReport:
    return CheckReport("fail", checked, mode, Witness(description, data))


def _jsonable(data: dict) -> dict:
    return {k: repr(v) if not isinstance(v, (int, str, bool, type(None))) else v for k, v in data.items()}
