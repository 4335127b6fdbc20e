"""Ground-set caps.

Products and coproducts are cheap and allow up to 10 elements. Anything that
sums over all set compositions (Takeuchi, face enumeration, invariants) is
capped at 7, where there are 47293 compositions. ``HOPFCALC_MAX_N`` overrides
the enumeration cap; the structural cap is raised to match if needed.
"""

import json
import os

from .errors import GroundSetTooLarge

STRUCTURE_CAP = 10
ENUMERATION_CAP = 7

_overrides: dict[str, int] = {}


def enumeration_cap() -> int:
    if "enumeration" in _overrides:
        return _overrides["enumeration"]
    env = os.environ.get("HOPFCALC_MAX_N")
    if env:
        return int(env)
    return ENUMERATION_CAP


def structure_cap() -> int:
    if "structure" in _overrides:
        return _overrides["structure"]
    return max(STRUCTURE_CAP, enumeration_cap())


def set_caps(enumeration: int | None = None, structure: int | None = None) -> None:
    if enumeration is not None:
        _overrides["enumeration"] = enumeration
    if structure is not None:
        _overrides["structure"] = structure


def reset_caps() -> None:
    _overrides.clear()


def load_config(path: str) -> None:
    with open(path) as fh:
        data = json.load(fh)
    set_caps(data.get("max_n"), data.get("max_structure_n"))


def check_enumerable(n: int, what: str = "ground set") -> None:
    cap = enumeration_cap()
    if n > cap:
        raise GroundSetTooLarge(n, cap, what)


def check_structure(n: int) -> None:
    cap = structure_cap()
    if n > cap:
        raise GroundSetTooLarge(n, cap)
