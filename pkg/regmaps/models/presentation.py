from __future__ import annotations

import re
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator

from ..core.relators import flatten, parse_relator, top_level_power
from ..core.words import Word, format_word, free_reduce

INVOLUTION_RELATORS: Tuple[str, ...] = ("r0^2", "r1^2", "r2^2")

_FAMILY_RE = re.compile(r"^#\s*family:\s*([A-Za-z0-9_]+)\s*(?:\((.*)\))?\s*$")


class FamilyTag(BaseModel):
    """Symbolic origin of a presentation, e.g. G3(n=12)."""

    name: str
    params: Dict[str, int] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({args})"

    @classmethod
    def parse(cls, text: str) -> "FamilyTag":
        m = re.match(r"^\s*([A-Za-z0-9_]+)\s*(?:\((.*)\))?\s*$", text)
        if m is None:
            raise ValueError(f"cannot read family tag {text!r}")
        params: Dict[str, int] = {}
        if m.group(2):
            for part in m.group(2).split(","):
                if not part.strip():
                    continue
                key, _, value = part.partition("=")
                params[key.strip()] = int(value)
        return cls(name=m.group(1), params=params)


class Presentation(BaseModel):
    """Three involutory generators plus relators in the relator language.

    The three involution relators r0^2, r1^2, r2^2 are always present. Every
    other relator must be nonempty after free reduction.
    """

    relators: Tuple[str, ...]
    family: Optional[FamilyTag] = None

    _words: Tuple[Word, ...] = PrivateAttr(default=())
    _powers: Tuple[Tuple[Word, int], ...] = PrivateAttr(default=())

    model_config = ConfigDict(frozen=True)

    @field_validator("relators", mode="before")
    @classmethod
    def _parse_relators(cls, v: Any) -> Tuple[str, ...]:
        # Accept a newline-separated string or any iterable of relator strings
        if isinstance(v, str):
            v = [line for line in v.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        texts = []
        for r in v:
            text = " ".join(str(r).split())
            word = flatten(parse_relator(text))
            if len(word) == 2 and word[0] == word[1]:
                text = INVOLUTION_RELATORS[word[0]]
            elif not free_reduce(word):
                raise ValueError(f"relator {text!r} reduces to the identity")
            texts.append(text)
        for inv in reversed(INVOLUTION_RELATORS):
            if inv not in texts:
                texts.insert(0, inv)
        return tuple(dict.fromkeys(texts))

    def model_post_init(self, __context: Any) -> None:
        words: List[Word] = []
        powers: List[Tuple[Word, int]] = []
        for text in self.relators:
            expr = parse_relator(text)
            if text in INVOLUTION_RELATORS:
                words.append(flatten(expr))
            else:
                words.append(flatten(expr, reduce=True))
            listed = top_level_power(expr)
            if listed is not None:
                powers.append(listed)
        self._words = tuple(words)
        self._powers = tuple(powers)

    @property
    def words(self) -> Tuple[Word, ...]:
        return self._words

    @property
    def nontrivial_words(self) -> Tuple[Word, ...]:
        """Relator words other than the involution relators."""
        return tuple(w for t, w in zip(self.relators, self._words) if t not in INVOLUTION_RELATORS)

    @property
    def listed_exponents(self) -> Tuple[Tuple[Word, int], ...]:
        """(base, k) for every relator written as base^k with k >= 2."""
        return self._powers

    def with_relators(self, *extra: str) -> "Presentation":
        return Presentation(relators=self.relators + tuple(extra), family=None)

    def to_text(self) -> str:
        lines = []
        if self.family is not None:
            lines.append(f"# family: {self.family}")
        lines.extend(self.relators)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        family = None
        for line in text.splitlines():
            m = _FAMILY_RE.match(line.strip())
            if m is not None:
                family = FamilyTag.parse(f"{m.group(1)}({m.group(2) or ''})")
                break
        return cls(relators=text, family=family)

    @classmethod
    def from_words(cls, words: List[Word], family: Optional[FamilyTag] = None) -> "Presentation":
        return cls(relators=[format_word(w) for w in words], family=family)
