"""Renderers for the reference tables shipped under ``tables/``.

Each function returns the full text of one golden file.  The files are
committed to the repository and the test suite compares these renderings
against them byte-for-byte, so every formatting choice here is frozen:

* ``named_codes.txt`` -- one line per named example code:
  ``name;dim;even;autOrder;swe;EW``.
* ``hexacode_markings.txt`` -- one line per marking class of the hexacode,
  sorted by orbit size: ``orbitSize;autOrder;E0,...,E12`` where ``E_w`` is
  the number of codewords of Euclidean weight ``w`` in the lifted code.
* ``selfdual_enumerators.txt`` -- one line per self-dual class (lengths 1-3)
  and per even self-dual class (length 4), sorted by length then symmetrized
  enumerator: ``n;swe;EW``.
"""

from __future__ import annotations

from fractions import Fraction

from .catalog import named
from .classify import classify_self_dual
from .enumerators import euclid_we, swe
from .maps import marking_classes, phi_inv_marked
from .symmetry import aut_group

_NAMED_ROWS = (
    "Gamma1",
    "Xi1",
    "Delta_2",
    "Delta_3",
    "Delta_4",
    "Delta_5",
    "Delta_6",
    "Upsilon2",
    "Upsilon3",
)


def render_named_code_table() -> str:
    lines = []
    for name in _NAMED_ROWS:
        code = named(name)
        dim = Fraction(code.rank, 2)
        even = "Y" if code.is_even() else "N"
        order = aut_group(code).order
        lines.append(f"{name};{dim};{even};{order};{swe(code)};{euclid_we(code)}")
    return "\n".join(lines) + "\n"


def euclid_coefficients(code) -> list:
    """Coefficients ``E_0..E_{2n}`` of the Euclidean weight enumerator."""
    poly = euclid_we(code)
    return [
        int(poly.coefficient((2 * code.n - w, w))) for w in range(2 * code.n + 1)
    ]


def render_hexacode_marking_table() -> str:
    hexa = named("Hexacode")
    rows = []
    for cls in marking_classes(hexa):
        lifted = phi_inv_marked(hexa, cls.representative)
        rows.append((cls.orbit_size, cls.stabilizer_order, euclid_coefficients(lifted)))
    rows.sort()
    return "".join(
        f"{orbit};{stab};{','.join(str(c) for c in coeffs)}\n"
        for orbit, stab, coeffs in rows
    )


def render_self_dual_enumerator_table() -> str:
    lines = []
    for n, even_only in ((1, False), (2, False), (3, False), (4, True)):
        records = classify_self_dual(n, even_only=even_only)
        rows = sorted((rec.swe, rec.ew) for rec in records)
        lines.extend(f"{n};{s};{e}" for s, e in rows)
    return "\n".join(lines) + "\n"
