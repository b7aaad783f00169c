from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, PositiveInt

from ..settings import settings


class EnumerationLimits(BaseModel):
    """Resource limits and strategy for a single coset enumeration."""

    max_cosets: PositiveInt = Field(default_factory=lambda: settings.max_cosets)
    strategy: Literal["felsch", "hlt"] = Field(default_factory=lambda: settings.strategy)

    model_config = {
        "extra": "ignore",
        "frozen": True,
    }
