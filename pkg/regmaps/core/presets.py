"""Preset presentation families.

Every family is a quotient of the extended triangle group
Delta = <r0, r1, r2 | r0^2, r1^2, r2^2, (r0 r2)^2>. Builders take keyword
parameters (``n``, ``s``, ``t``), validate their ranges and return a
:class:`Presentation` tagged with its origin.
"""

from typing import Callable, Dict, Optional, Tuple

from ..errors import ParameterRangeError, UnknownFamilyError
from ..models.presentation import FamilyTag, Presentation
from ..utils.logging import get_logger
from .relators import parse_word
from .words import Word

logger = get_logger(__name__)

DELTA_RELATORS: Tuple[str, ...] = ("r0^2", "r1^2", "r2^2", "(r0 r2)^2")

# Words generating the derived subgroup of any quotient of Delta
DERIVED_GENERATORS: Tuple[str, ...] = ("[r0, r1]", "[r1, r2]", "[r0, r1]^r2")


def _pow(k: int) -> int:
    return 2 ** k


def _need(condition: bool, family: str, message: str) -> None:
    if not condition:
        raise ParameterRangeError(f"{family}: {message}")


def _threshold(family: str, n: int, minimum: int) -> None:
    if n < minimum:
        logger.warning(f"{family}(n={n}) is below the stated range n >= {minimum}; results are a desk-scale analog")


def delta() -> Tuple[str, ...]:
    return DELTA_RELATORS


def dihedral(n: int) -> Tuple[str, ...]:
    """D_{2^n}: type {2, 2^(n-1)}, r0 the central involution of <r1, r2>."""
    _need(n >= 2, "dihedral", "n must be at least 2")
    return DELTA_RELATORS + (
        "(r0 r1)^2",
        f"(r1 r2)^{_pow(n - 1)}",
        f"r0 (r1 r2)^{_pow(n - 2)}",
    )


def c2xd(n: int) -> Tuple[str, ...]:
    """C2 x D_{2^(n-1)}: type {2, 2^(n-2)}."""
    _need(n >= 3, "c2xd", "n must be at least 3")
    return DELTA_RELATORS + ("(r0 r1)^2", f"(r1 r2)^{_pow(n - 2)}")


def _prop28_base(s: int, t: int) -> Tuple[str, ...]:
    return (
        "r0^2", "r1^2", "r2^2",
        f"(r0 r1)^{_pow(s)}",
        f"(r1 r2)^{_pow(t)}",
        "(r0 r2)^2",
        "[(r0 r1)^4, r2]",
        "[r0, (r1 r2)^4]",
    )


def _r2_base(s: int, t: int) -> Tuple[str, ...]:
    return DELTA_RELATORS + (f"(r0 r1)^{_pow(s)}", f"(r1 r2)^{_pow(t)}")


def thm32_case1(n: int, s: int, t: int) -> Tuple[str, ...]:
    """Type {2^s, 2^t} with s + t <= n - 1; the last relator depends on the parity of n - s - t."""
    family = "thm32_case1"
    _need(2 <= s <= n - 2 and 2 <= t <= n - 2, family, "need 2 <= s, t <= n - 2")
    _need(s + t <= n - 1, family, "need s + t <= n - 1")
    _threshold(family, n, 10)
    gap = n - s - t
    if gap % 2 == 1:
        last = f"[(r0 r1)^2, r2]^{_pow((gap - 1) // 2)}"
    else:
        last = f"[(r0 r1)^2, (r1 r2)^2]^{_pow((gap - 2) // 2)}"
    return _prop28_base(s, t) + (last,)


def thm32_case2(n: int, s: int, t: int) -> Tuple[str, ...]:
    """Type {2^s, 2^t} with s + t = n."""
    family = "thm32_case2"
    _need(2 <= s <= n - 2 and 2 <= t <= n - 2, family, "need 2 <= s, t <= n - 2")
    _need(s + t == n, family, "need s + t = n")
    _threshold(family, n, 12)
    return _r2_base(s, t) + (
        "[(r0 r1)^2, r2]",
        f"(r0 r1)^{_pow(s - 1)} (r1 r2)^{_pow(t - 1)}",
    )


def thm32_case3(n: int, t: int) -> Tuple[str, ...]:
    """Type {2^t, 2^t} with 2t > n."""
    family = "thm32_case3"
    _need(2 <= t <= n - 2, family, "need 2 <= t <= n - 2")
    _need(2 * t > n, family, "need 2t > n")
    _threshold(family, n, 12)
    k = _pow(n - t - 1)
    return _r2_base(t, t) + (
        f"(r0 r1)^{k} (r1 r2)^{k}",
        "[(r0 r1)^2, r2] (r2 r1)^4",
    )


def prop28_L(n: int) -> Tuple[str, ...]:
    """Type {4, 2^(n-3)}."""
    _need(n >= 6, "prop28_L", "n must be at least 6")
    _threshold("prop28_L", n, 10)
    return (
        "r0^2", "r1^2", "r2^2",
        "(r0 r1)^4",
        f"(r1 r2)^{_pow(n - 3)}",
        "(r0 r2)^2",
        f"[(r0 r1)^2, r2] (r1 r2)^{_pow(n - 4)}",
    )


def _g_r2(n: int) -> Tuple[str, ...]:
    return _r2_base(n - 3, n - 3)


def _check_g(family: str, n: int) -> None:
    _need(n >= 7, family, "n must be at least 7")
    _threshold(family, n, 12)


def g1(n: int) -> Tuple[str, ...]:
    _check_g("G1", n)
    return DELTA_RELATORS + (
        f"(r0 r1)^{_pow(n - 2)}",
        f"(r1 r2)^{_pow(n - 2)}",
        "(r0 r1)^2 (r1 r2)^2",
    )


def g2(n: int) -> Tuple[str, ...]:
    _check_g("G2", n)
    return DELTA_RELATORS + (
        f"(r0 r1)^{_pow(n - 2)}",
        f"(r1 r2)^{_pow(n - 2)}",
        f"(r0 r1)^2 (r1 r2)^2 (r1 r2)^{_pow(n - 3)}",
    )


def g3(n: int) -> Tuple[str, ...]:
    _check_g("G3", n)
    return _g_r2(n) + (
        "(r0 r1)^4 (r1 r2)^4",
        "[(r0 r1)^2, r2] (r0 r1)^4",
    )


def g4(n: int) -> Tuple[str, ...]:
    _check_g("G4", n)
    return _g_r2(n) + (
        "(r0 r1)^4 (r1 r2)^4",
        f"[(r0 r1)^2, r2] (r0 r1)^4 (r1 r2)^{_pow(n - 4)}",
    )


def g5(n: int) -> Tuple[str, ...]:
    _check_g("G5", n)
    return _g_r2(n) + (
        f"(r0 r1)^4 (r1 r2)^4 (r1 r2)^{_pow(n - 4)}",
        f"[(r0 r1)^2, r2] (r0 r1)^4 (r1 r2)^{_pow(n - 4)}",
    )


def g6(n: int) -> Tuple[str, ...]:
    _check_g("G6", n)
    return _g_r2(n) + (
        f"(r0 r1)^4 (r1 r2)^4 (r1 r2)^{_pow(n - 4)}",
        "[(r0 r1)^2, r2] (r0 r1)^4",
    )


def h1(n: int) -> Tuple[str, ...]:
    _check_g("H1", n)
    return DELTA_RELATORS + (
        f"(r0 r1)^{_pow(n - 2)}",
        f"(r1 r2)^{_pow(n - 2)}",
        "(r0 r1)^2 (r1 r2)^2",
        "[(r0 r1)^2, r2] (r2 r1)^4",
    )


def h2(n: int) -> Tuple[str, ...]:
    _check_g("H2", n)
    return DELTA_RELATORS + (
        "(r0 r1)^4",
        f"(r1 r2)^{_pow(n - 2)}",
        f"(r0 r1)^2 (r1 r2)^{_pow(n - 3)}",
        "[(r0 r1)^2, r2]",
    )


def h3(n: int) -> Tuple[str, ...]:
    _check_g("H3", n)
    return _g_r2(n) + (
        "(r0 r1)^4 (r1 r2)^4",
        "[(r0 r1)^2, r2] (r2 r1)^4",
    )


def h4(n: int) -> Tuple[str, ...]:
    _check_g("H4", n)
    return DELTA_RELATORS + (
        "(r0 r1)^4",
        f"(r1 r2)^{_pow(n - 3)}",
        f"[(r0 r1)^2, r2] (r2 r1)^{_pow(n - 4)}",
    )


def h5(n: int) -> Tuple[str, ...]:
    _check_g("H5", n)
    return DELTA_RELATORS + (
        "(r0 r1)^8",
        f"(r1 r2)^{_pow(n - 3)}",
        "[(r0 r1)^2, r2]",
        f"(r0 r1)^4 (r1 r2)^{_pow(n - 4)}",
    )


def h6(n: int) -> Tuple[str, ...]:
    _check_g("H6", n)
    return DELTA_RELATORS + (
        "(r0 r1)^8",
        f"(r1 r2)^{_pow(n - 3)}",
        f"(r0 r1)^4 (r1 r2)^{_pow(n - 4)}",
        "[(r0 r1)^2, r2] (r0 r1)^4",
    )


def l6(n: int) -> Tuple[str, ...]:
    """Order-2^(n-1) quotient used to bound the order of H6."""
    _check_g("L6", n)
    return DELTA_RELATORS + (
        "(r0 r1)^4",
        f"(r1 r2)^{_pow(n - 4)}",
        "[(r0 r1)^2, r2]",
    )


_FAMILIES: Dict[str, Tuple[Callable[..., Tuple[str, ...]], Tuple[str, ...]]] = {
    "delta": (delta, ()),
    "dihedral": (dihedral, ("n",)),
    "c2xd": (c2xd, ("n",)),
    "thm32_case1": (thm32_case1, ("n", "s", "t")),
    "prop28_H": (thm32_case1, ("n", "s", "t")),
    "thm32_case2": (thm32_case2, ("n", "s", "t")),
    "thm32_case3": (thm32_case3, ("n", "t")),
    "prop28_L": (prop28_L, ("n",)),
    "G1": (g1, ("n",)),
    "G2": (g2, ("n",)),
    "G3": (g3, ("n",)),
    "G4": (g4, ("n",)),
    "G5": (g5, ("n",)),
    "G6": (g6, ("n",)),
    "H1": (h1, ("n",)),
    "H2": (h2, ("n",)),
    "H3": (h3, ("n",)),
    "H4": (h4, ("n",)),
    "H5": (h5, ("n",)),
    "H6": (h6, ("n",)),
    "L6": (l6, ("n",)),
}

CLASSIFICATION_FAMILIES = {
    "top": ("G1", "G2"),
    "next": ("G3", "G4", "G5", "G6"),
}


def family_names() -> list[str]:
    return list(_FAMILIES)


def _lookup(family: str) -> Tuple[str, Tuple[Callable[..., Tuple[str, ...]], Tuple[str, ...]]]:
    if family in _FAMILIES:
        return family, _FAMILIES[family]
    for name, entry in _FAMILIES.items():
        if name.lower() == family.lower():
            return name, entry
    raise UnknownFamilyError(f"unknown presentation family {family!r}")


def family_parameters(family: str) -> Tuple[str, ...]:
    return _lookup(family)[1][1]


def preset(family: str, **params: Optional[int]) -> Presentation:
    """Build the presentation of ``family`` at the given parameters."""
    name, (builder, needed) = _lookup(family)
    missing = [p for p in needed if params.get(p) is None]
    if missing:
        raise ParameterRangeError(f"{name}: missing parameter(s) {', '.join(missing)}")
    args = {p: int(params[p]) for p in needed}
    relators = builder(**args)
    return Presentation(relators=relators, family=FamilyTag(name=name, params=args))


def thm32_preset(n: int, s: int, t: int) -> Presentation:
    """Route (n, s, t) to the existence construction for its case."""
    if s + t <= n - 1:
        return preset("thm32_case1", n=n, s=s, t=t)
    if s + t == n:
        return preset("thm32_case2", n=n, s=s, t=t)
    if s == t:
        return preset("thm32_case3", n=n, t=t)
    raise ParameterRangeError(f"no existence construction for s + t > n with s != t (n={n}, s={s}, t={t})")


def derived_generator_words() -> list[Word]:
    return [parse_word(text) for text in DERIVED_GENERATORS]
