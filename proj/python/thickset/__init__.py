"""Exact arithmetic for thick and generic subsets of groups.

Thin wrapper over the C++ core: eventually periodic integer sets, Bohr sets
of surd rotations, coverings with exact arc certificates, and power subgroups
of the integer Heisenberg group.
"""

from ._core import (
    bohr_member,
    bohr_thickness,
    build_covering,
    decide_generic,
    decide_thick,
    heisenberg_power_index,
    lattice_in_double,
    malcev_root,
    normalize,
    rotation_position,
    run_cli,
    set_contains,
    set_equal,
    verify_product_identity,
)

__all__ = [
    "bohr_member",
    "bohr_thickness",
    "build_covering",
    "decide_generic",
    "decide_thick",
    "heisenberg_power_index",
    "lattice_in_double",
    "malcev_root",
    "normalize",
    "rotation_position",
    "run_cli",
    "set_contains",
    "set_equal",
    "verify_product_identity",
]
