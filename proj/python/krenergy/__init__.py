"""Energy of tensor products of single-row Kirillov-Reshetikhin crystals.

Crystal elements are lists of letter counts (letter 1 first); a tensor is a
list of such lists. Rational points are nested lists of Fractions, one row
per tensor factor and one column per color.
"""

import json
from fractions import Fraction

from . import _krenergy
from ._krenergy import (
    GuardExceeded,
    InputError,
    apply_s,
    coenergy,
    energy_staircase,
    from_row,
    intrinsic_energy,
    ok,
    r_matrix,
    r_matrix_oracle,
    staircase_objective,
    to_row,
)

__all__ = [
    "GuardExceeded",
    "InputError",
    "apply_s",
    "coenergy",
    "energy_staircase",
    "from_row",
    "identity_suite",
    "intrinsic_energy",
    "loop_schur",
    "ok",
    "r_matrix",
    "r_matrix_oracle",
    "rational_energy_global",
    "rational_energy_product",
    "s_action",
    "staircase_objective",
    "to_row",
    "verify",
]


def _to_strings(point):
    return [[str(Fraction(v)) for v in row] for row in point]


def _to_fractions(rows):
    return [[Fraction(v) for v in row] for row in rows]


def s_action(j, point):
    return _to_fractions(_krenergy.s_action(j, _to_strings(point)))


def rational_energy_global(point):
    return Fraction(_krenergy.rational_energy_global(_to_strings(point)))


def rational_energy_product(point):
    return Fraction(_krenergy.rational_energy_product(_to_strings(point)))


def loop_schur(outer, inner=(), *, n, m, r=0):
    """Loop Schur polynomial of outer/inner in the JSON polynomial format."""
    return json.loads(_krenergy.loop_schur_json(list(outer), list(inner), n, m, r))


def identity_suite(n, m, *, symbolic=True, seed=1, points=50):
    return json.loads(_krenergy.identity_suite_json(n, m, symbolic, seed, points))


def verify(suites=(), *, n=(2, 3), m=(1, 3), capacity_cap=3, trials=100, seed=1, mode="exhaustive"):
    report = _krenergy.verify_json(list(suites), n[0], n[1], m[0], m[1], capacity_cap, trials, seed, mode)
    return json.loads(report)
