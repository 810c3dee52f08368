"""The shipped catalog of chain contexts.

Chosen to cover the hypothesis spectrum: abelian A (cyclic fixtures, the
dihedral model of X^6, the affine group), nonabelian Dedekind A (Q8),
quasi-Hamiltonian-but-not-Dedekind A (M16), and one context with no
distinguished subgroup at all (S4 over a point stabilizer).
"""

from __future__ import annotations

from importlib import resources

from .chains import ChainContext
from .formats import parse_context_file

FIXTURE_NAMES = (
    "s3_natural",
    "s4_point",
    "d6_x6",
    "c6_regular",
    "q8_regular",
    "m16_regular",
    "c2_regular",
    "c3_regular",
    "c5_regular",
    "c7_regular",
    "agl1_5",
)


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {FIXTURE_NAMES}")
    return (resources.files("rittlab") / "data" / f"{name}.ctx").read_text()


def load_fixture(name: str) -> ChainContext:
    return parse_context_file(fixture_text(name), name=name)


def all_fixtures() -> list[ChainContext]:
    return [load_fixture(name) for name in FIXTURE_NAMES]
