"""Maps connecting L-flavor codes, K-flavor codes and binary codes.

* ``phi`` reinterprets an L-code over the K alphabet (1 -> a, w -> b,
  W -> c); the bit patterns are unchanged.  It preserves scalar products,
  Hamming data and self-duality, but not Euclidean evenness.
* A *marking* assigns a nonzero symbol to every coordinate.  ``mu_marking``
  multiplies each coordinate by its mark in the field structure carried by
  the four symbols (a acts as identity, b*b = c, c*c = b, b*c = a);
  ``phi_inv_marked`` composes this with the inverse reinterpretation, giving
  the family of L-codes sitting over one K-code.
* ``sigma`` doubles the length: it sends a K-code of length n to a K-code
  of length 2n via 0 -> 00, a -> 0a, b -> bb, c -> bc plus the even
  {0,a}-words on all pairs.
* ``psi`` is the L-flavor counterpart (0 -> 00, 1 -> 01, w -> ww, W -> wW
  plus the even {0,1}-words on all pairs); reinterpreting psi over K gives
  sigma.
* ``beta`` expands each symbol to three bits (0 -> 000, 1 -> 011,
  w -> 101, W -> 110), turning a code of size 2^r into a binary code of
  dimension r and triple length, preserving scalar products.
"""

from __future__ import annotations

from dataclasses import dataclass

from .klein import (
    LcodeError,
    SignedPermutation,
    format_word,
    parse_word,
    symbols_of,
    word_from_symbols,
)
from .codes import LinearCode, _kernel, reduce_mod, rref
from .symmetry import aut_group

__all__ = [
    "phi",
    "phi_inv",
    "mu_marking",
    "phi_inv_marked",
    "MarkingClass",
    "marking_classes",
    "sigma",
    "psi",
    "beta",
    "beta_word",
    "BinaryCode",
    "parse_marking",
    "format_marking",
]

# Multiplication of symbols with a = 1 as identity; b and c are the two
# elements of order 3 under multiplication (b*b = c, b*c = a, c*c = b).
_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)


def phi(code: LinearCode) -> LinearCode:
    """Forget the Euclidean structure: view an L-code as a K-code."""
    if code.flavor != "L":
        raise LcodeError("phi expects an L-flavor code")
    return LinearCode("K", code.n, code.basis, _reduced=True)


def phi_inv(code: LinearCode) -> LinearCode:
    """View a K-code as an L-code (inverse reinterpretation)."""
    if code.flavor != "K":
        raise LcodeError("phi_inv expects a K-flavor code")
    return LinearCode("L", code.n, code.basis, _reduced=True)


def parse_marking(text: str, n: int) -> tuple[int, ...]:
    """Parse a marking like 'abc' into symbol values, checking length."""
    word = parse_word(text, "K")
    marks = symbols_of(word, len(text))
    if len(text) != n:
        raise LcodeError(f"marking length {len(text)} != code length {n}")
    if any(m == 0 for m in marks):
        raise LcodeError("marking symbols must be nonzero")
    return marks


def format_marking(marks) -> str:
    return format_word(word_from_symbols(marks), len(tuple(marks)), "K")


def mu_marking(code: LinearCode, marks) -> LinearCode:
    """Multiply each coordinate of a K-code by its (nonzero) mark."""
    if code.flavor != "K":
        raise LcodeError("mu_marking expects a K-flavor code")
    marks = tuple(marks)
    if len(marks) != code.n or any(not 1 <= m <= 3 for m in marks):
        raise LcodeError("marking must assign a nonzero symbol per coordinate")
    n = code.n
    rows = [
        word_from_symbols(
            _MUL[m][s] for m, s in zip(marks, symbols_of(b, n))
        )
        for b in code.basis
    ]
    return LinearCode("K", n, rows)


def phi_inv_marked(code: LinearCode, marks) -> LinearCode:
    """L-code over a K-code determined by a marking."""
    return phi_inv(mu_marking(code, marks))


@dataclass(frozen=True)
class MarkingClass:
    """An orbit of markings under the automorphism group of a K-code."""

    representative: tuple[int, ...]
    orbit_size: int
    stabilizer_order: int


# Multiplicative inverse per symbol (identity element first): b and c swap.
_F4_INV = (0, 1, 3, 2)


def _act_on_marking(g: SignedPermutation, marks) -> tuple[int, ...]:
    """Transport a marking along a symmetry of the marked code.

    Lifting coordinate i through mark m rescales the symbol by m, so a
    symmetry with local table h at target position p carries mark m to
    (h(m^-1))^-1; the inversions conjugate h by the swap of the two
    non-identity symbols.  This is exactly the action under which lifts of
    markings in one orbit stay equivalent.
    """
    n = len(marks)
    out = [0] * n
    for j in range(n):
        p = g.perm[j]
        out[p] = _F4_INV[g.local[p][_F4_INV[marks[j]]]]
    return tuple(out)


def marking_classes(code: LinearCode) -> list[MarkingClass]:
    """Orbits of all 3^n markings under Aut of the K-code.

    The orbit sizes sum to 3^n; stabilizer orders multiply back to the
    automorphism group order.  Classes are returned sorted by their
    smallest representative.
    """
    if code.flavor != "K":
        raise LcodeError("marking_classes expects a K-flavor code")
    n = code.n
    aut = aut_group(code)
    gens = aut.generators or ()
    all_marks = []

    def build(prefix):
        if len(prefix) == n:
            all_marks.append(tuple(prefix))
            return
        for s in (1, 2, 3):
            build(prefix + [s])

    build([])
    unseen = set(all_marks)
    classes = []
    for start in all_marks:
        if start not in unseen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            m = frontier.pop()
            for g in gens:
                im = _act_on_marking(g, m)
                if im not in orbit:
                    orbit.add(im)
                    frontier.append(im)
        unseen -= orbit
        if aut.order % len(orbit):
            raise AssertionError("orbit size does not divide the group order")
        classes.append(
            MarkingClass(min(orbit), len(orbit), aut.order // len(orbit))
        )
    classes.sort(key=lambda c: c.representative)
    return classes


# ---------------------------------------------------------------------------
# Length-doubling and binary expansion.
# ---------------------------------------------------------------------------

_PSI_SYM = ((0, 0), (0, 1), (2, 2), (2, 3))


def _doubled_rows(code: LinearCode) -> list[int]:
    n = code.n
    rows = []
    for b in code.basis:
        rows.append(
            word_from_symbols(
                t for s in symbols_of(b, n) for t in _PSI_SYM[s]
            )
        )
    # adjoin the even {0, symbol-1} words on every coordinate pair
    pair = word_from_symbols((1, 1))
    for i in range(n):
        rows.append(pair << (4 * (n - 1 - i)))
    return rows


def psi(code: LinearCode) -> LinearCode:
    """Length-doubling map on L-codes (0->00, 1->01, w->ww, W->wW, plus
    the even {0,1}-words on all pairs)."""
    if code.flavor != "L":
        raise LcodeError("psi expects an L-flavor code")
    return LinearCode("L", 2 * code.n, _doubled_rows(code))


def sigma(code: LinearCode) -> LinearCode:
    """Length-doubling map on K-codes (same bit patterns as psi)."""
    if code.flavor != "K":
        raise LcodeError("sigma expects a K-flavor code")
    as_l = LinearCode("L", code.n, code.basis, _reduced=True)
    doubled = psi(as_l)
    return LinearCode("K", doubled.n, doubled.basis, _reduced=True)


# Three output bits per symbol: 0 -> 000, 1 -> 011, w -> 101, W -> 110.
_BETA_BITS = (0b000, 0b011, 0b101, 0b110)


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code given by a reduced echelon basis of bit rows."""

    n: int
    basis: tuple[int, ...]

    @classmethod
    def from_rows(cls, n: int, rows) -> "BinaryCode":
        return cls(n, rref(rows))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def codewords(self) -> list[int]:
        words = [0]
        for row in self.basis:
            words += [w ^ row for w in words]
        words.sort()
        return words

    def __contains__(self, word: int) -> bool:
        return reduce_mod(word, self.basis) == 0

    def dual(self) -> "BinaryCode":
        if not self.basis:
            return BinaryCode.from_rows(self.n, [1 << b for b in range(self.n)])
        return BinaryCode(self.n, _kernel(self.basis, self.n))

    def to_text(self) -> str:
        lines = [f"B n={self.n}"]
        for b in self.basis:
            lines.append(format(b, f"0{self.n}b"))
        return "\n".join(lines) + "\n"


def beta_word(x: int, n: int) -> int:
    """Binary expansion of one word: each symbol becomes three even-weight
    bits, so the F2 scalar product of two words is preserved."""
    bits = 0
    for s in symbols_of(x, n):
        bits = (bits << 3) | _BETA_BITS[s]
    return bits


def beta(code: LinearCode) -> BinaryCode:
    """Binary expansion tripling the length and doubling the F2 dimension
    rate: each symbol becomes three bits with even weight patterns."""
    return BinaryCode.from_rows(
        3 * code.n, [beta_word(b, code.n) for b in code.basis]
    )
