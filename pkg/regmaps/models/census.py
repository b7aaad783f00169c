from __future__ import annotations

from datetime import datetime
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator


class CensusMapRecord(BaseModel):
    """One proper map in a census level file.

    Field order is the on-disk order of the JSON lines.
    """

    order_exp: int
    s_exp: int
    t_exp: int
    orientable: bool
    euler_characteristic: int
    genus: int
    canonical_key_digest: str
    parent_digest: Optional[str] = None
    vertices: int
    edges: int
    faces: int
    simple_underlying: bool

    model_config = {
        "extra": "ignore",
    }


class LevelSummary(BaseModel):
    order_exp: int
    nodes: int
    proper: int
    types: Dict[str, int] = Field(default_factory=dict)

    @field_validator("types", mode="before")
    @classmethod
    def _parse_types(cls, v):
        # Accept {(s, t): count} as well as {"s,t": count}
        if v is None:
            return {}
        if isinstance(v, dict):
            return {(f"{k[0]},{k[1]}" if isinstance(k, tuple) else str(k)): int(c) for k, c in v.items()}
        return v


class CensusManifest(BaseModel):
    """State of a census directory; rewritten after every completed level."""

    max_exp: int
    complete_through: int = 0
    complete: bool = False
    incomplete_reason: Optional[str] = None
    levels: List[LevelSummary] = Field(default_factory=list)
    updated_at: Optional[datetime] = None

    def level(self, order_exp: int) -> Optional[LevelSummary]:
        for summary in self.levels:
            if summary.order_exp == order_exp:
                return summary
        return None

    def proper_counts(self) -> Dict[int, int]:
        return {summary.order_exp: summary.proper for summary in self.levels}

    model_config = {
        "extra": "ignore",
    }
