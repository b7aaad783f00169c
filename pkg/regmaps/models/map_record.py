from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, model_validator


class RegularMapRecord(BaseModel):
    """Map-theoretic data of one regular map."""

    flags: int
    order_exp: Optional[int] = None
    face_length: int
    valency: int
    s_exp: Optional[int] = None
    t_exp: Optional[int] = None
    vertices: int
    edges: int
    faces: int
    euler_characteristic: int
    orientable: bool
    genus: int
    simple_underlying: bool
    frattini_rank: Optional[int] = None
    canonical_key_digest: str

    @model_validator(mode="after")
    def _check_euler(self) -> "RegularMapRecord":
        if self.vertices - self.edges + self.faces != self.euler_characteristic:
            raise ValueError("euler characteristic must equal V - E + F")
        if self.flags != 4 * self.edges:
            raise ValueError("a proper map has four flags per edge")
        if self.orientable and self.euler_characteristic % 2:
            raise ValueError("orientable surfaces have even euler characteristic")
        return self

    @property
    def type_exponents(self) -> tuple[Optional[int], Optional[int]]:
        return self.s_exp, self.t_exp

    model_config = {
        "extra": "ignore",
        "frozen": True,
    }
