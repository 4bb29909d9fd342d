"""Additive codes over the Klein four group.

A code of length n is an additive (XOR-closed) set of words; it is stored by
its reduced echelon basis over F2, viewing each word as a vector of 2n bits.
The basis is fully reduced (every pivot bit occurs in exactly one row) and
sorted in decreasing word order, which makes it a unique key for the codeword
set: two codes are equal iff their bases are equal tuples.

The F2 rank r determines the size 2^r; the dimension over the alphabet is
r/2, which may be half-integral.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .klein import (
    LcodeError,
    ewt,
    format_word,
    get_symbol,
    hwt,
    inner,
    parse_word,
    quad,
    swap_pairs,
    word_from_symbols,
)

__all__ = [
    "LinearCode",
    "SplitStructure",
    "rref",
    "reduce_mod",
    "max_enum_rank",
    "self_dual_extensions",
    "even_odd_transfer",
]


def max_enum_rank() -> int:
    """Largest F2 rank for which full codeword enumeration is allowed."""
    return int(os.environ.get("LCODES_MAX_ENUM_RANK", "26"))


def rref(vectors) -> tuple[int, ...]:
    """Fully reduced echelon basis of the F2 span of the given words.

    Rows are returned sorted in decreasing order; each pivot (highest set
    bit of a row) occurs in no other row.
    """
    pivots: dict[int, int] = {}
    for v in vectors:
        for b, row in pivots.items():
            if (v >> b) & 1:
                v ^= row
        if v:
            b = v.bit_length() - 1
            for b2, row in pivots.items():
                if (row >> b) & 1:
                    pivots[b2] = row ^ v
            pivots[b] = v
    return tuple(sorted(pivots.values(), reverse=True))


def reduce_mod(v: int, basis) -> int:
    """Canonical representative of v modulo the span of a reduced basis."""
    for row in basis:
        if (v >> (row.bit_length() - 1)) & 1:
            v ^= row
    return v


def _kernel(constraint_rows, nbits: int) -> tuple[int, ...]:
    """Basis of {x : parity(x & m) = 0 for all m in constraint_rows}."""
    reduced = rref(constraint_rows)
    pivot_bits = {row.bit_length() - 1 for row in reduced}
    out = []
    for f in range(nbits):
        if f in pivot_bits:
            continue
        x = 1 << f
        for row in reduced:
            if (row >> f) & 1:
                x |= 1 << (row.bit_length() - 1)
        out.append(x)
    return rref(out)


class LinearCode:
    """An additive code, identified by its reduced echelon basis."""

    __slots__ = ("flavor", "n", "basis")

    def __init__(self, flavor: str, n: int, generators=(), *, _reduced=False):
        if flavor not in ("L", "K"):
            raise LcodeError(f"unknown flavor {flavor!r}")
        if n < 1:
            raise LcodeError("length must be at least 1")
        mask = (1 << (2 * n)) - 1
        gens = tuple(generators)
        for g in gens:
            if g & ~mask:
                raise LcodeError("generator word does not fit the code length")
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "basis", gens if _reduced else rref(gens)
        )

    def __setattr__(self, name, value):
        raise AttributeError("LinearCode is immutable")

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.flavor == other.flavor
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.flavor, self.n, self.basis))

    def __repr__(self):
        words = ",".join(format_word(b, self.n, self.flavor) for b in self.basis)
        return f"LinearCode({self.flavor!r}, n={self.n}, [{words}])"

    # -- basic parameters ---------------------------------------------------

    @property
    def rank(self) -> int:
        """F2 rank of the code."""
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << len(self.basis)

    @property
    def dim(self) -> Fraction:
        """Dimension over the four-letter alphabet (may be half-integral)."""
        return Fraction(len(self.basis), 2)

    def is_zero(self) -> bool:
        return not self.basis

    # -- codewords ----------------------------------------------------------

    def codewords(self) -> list[int]:
        """All codewords, sorted increasingly.  Guarded by rank."""
        r = len(self.basis)
        if r > max_enum_rank():
            raise LcodeError(
                f"refusing to enumerate 2^{r} codewords "
                f"(limit rank {max_enum_rank()}; set LCODES_MAX_ENUM_RANK)"
            )
        words = [0]
        for row in self.basis:
            words += [w ^ row for w in words]
        words.sort()
        return words

    def __contains__(self, word: int) -> bool:
        return reduce_mod(word, self.basis) == 0

    # -- duality and predicates ----------------------------------------------

    def dual(self) -> "LinearCode":
        """The dual code under the scalar product."""
        if not self.basis:
            full = [1 << b for b in range(2 * self.n)]
            return LinearCode(self.flavor, self.n, rref(full), _reduced=True)
        constraints = [swap_pairs(b) for b in self.basis]
        return LinearCode(
            self.flavor, self.n, _kernel(constraints, 2 * self.n), _reduced=True
        )

    def is_self_orthogonal(self) -> bool:
        basis = self.basis
        return all(
            inner(basis[i], basis[j]) == 0
            for i in range(len(basis))
            for j in range(i + 1, len(basis))
        )

    def is_self_dual(self) -> bool:
        return len(self.basis) == self.n and self.is_self_orthogonal()

    def is_even(self) -> bool:
        """Whether the flavor's quadratic form vanishes on every codeword."""
        if self.is_self_orthogonal():
            # quad is additive on a self-orthogonal code, so the basis decides.
            return all(quad(b, self.flavor) == 0 for b in self.basis)
        return all(quad(w, self.flavor) == 0 for w in self.codewords())

    def is_hamming_even(self) -> bool:
        """Whether every codeword has even Hamming weight."""
        if self.is_self_orthogonal():
            return all(hwt(b) % 2 == 0 for b in self.basis)
        return all(hwt(w) % 2 == 0 for w in self.codewords())

    def min_ewt(self) -> int:
        if not self.basis:
            raise LcodeError("the zero code has no nonzero codeword")
        return min(ewt(w) for w in self.codewords() if w)

    def min_hwt(self) -> int:
        if not self.basis:
            raise LcodeError("the zero code has no nonzero codeword")
        return min(hwt(w) for w in self.codewords() if w)

    # -- constructions -------------------------------------------------------

    def direct_sum(self, other: "LinearCode") -> "LinearCode":
        if self.flavor != other.flavor:
            raise LcodeError("cannot sum codes of different flavors")
        shift = 2 * other.n
        rows = [b << shift for b in self.basis] + list(other.basis)
        return LinearCode(self.flavor, self.n + other.n, rows)

    def restrict(self, support) -> "LinearCode":
        """Restriction to the given coordinates (in the given order)."""
        supp = tuple(support)
        rows = [
            word_from_symbols(get_symbol(b, self.n, i) for i in supp)
            for b in self.basis
        ]
        return LinearCode(self.flavor, len(supp), rows)

    def decompose(self) -> list[tuple[tuple[int, ...], "LinearCode"]]:
        """Split into indecomposable direct summands.

        Returns (support, component) pairs sorted by first coordinate.
        Coordinates touched by no codeword appear as zero components of
        length 1.  The finest decomposition is found via connected
        components of the supports of the reduced basis rows; every
        codeword is a sum of basis rows, so codeword supports cannot
        connect coordinates that basis supports do not.
        """
        n = self.n
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for row in self.basis:
            coords = [i for i in range(n) if get_symbol(row, n, i)]
            for i in coords[1:]:
                ri, rj = find(coords[0]), find(i)
                if ri != rj:
                    parent[rj] = ri
        groups: dict[int, list[int]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        out = []
        for coords in sorted(groups.values()):
            supp = tuple(coords)
            out.append((supp, self.restrict(supp)))
        assert sum(len(c.basis) for _, c in out) == len(self.basis)
        return out

    def weight_k_subcode(self, k: int) -> "LinearCode":
        """Subcode generated by all codewords of Euclidean weight <= k."""
        rows = [w for w in self.codewords() if ewt(w) <= k]
        return LinearCode(self.flavor, self.n, rows)

    def split_weight_structure(self) -> "SplitStructure":
        """Structure of a self-orthogonal code as forced by its light words.

        Decomposes the subcode generated by all words of Euclidean weight
        at most 2 into single-coordinate factors of size 2 (counted as
        ``gamma_count`` when the symbol is 1, ``xi_count`` when it is a
        norm-2 symbol) and even binary blocks on larger supports (their
        lengths collected in ``delta_lengths``).  ``glue_order`` is the
        index of that subcode in the full code.
        """
        if not self.is_self_orthogonal():
            raise LcodeError("split_weight_structure requires a self-orthogonal code")
        core = self.weight_k_subcode(2)
        gamma = 0
        xi = 0
        deltas = []
        for supp, comp in core.decompose():
            if not comp.basis:
                continue
            if len(supp) == 1:
                sym = get_symbol(comp.basis[0], 1, 0)
                if sym == 1:
                    gamma += 1
                else:
                    xi += 1
                continue
            if any(b & int("AA" * comp.n, 16) for b in comp.basis):
                raise LcodeError("unexpected weight-2 structure")
            if len(comp.basis) != len(supp) - 1:
                raise LcodeError("unexpected weight-2 structure")
            deltas.append(len(supp))
        glue_order = 1 << (len(self.basis) - len(core.basis))
        return SplitStructure(gamma, tuple(sorted(deltas)), xi, glue_order)

    # -- text form -----------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.flavor} n={self.n}"]
        lines += [format_word(b, self.n, self.flavor) for b in self.basis]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "LinearCode":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise LcodeError("empty code description")
        head = lines[0].split()
        if len(head) != 2 or head[0] not in ("L", "K") or not head[1].startswith("n="):
            raise LcodeError(f"bad code header {lines[0]!r}")
        flavor = head[0]
        try:
            n = int(head[1][2:])
        except ValueError:
            raise LcodeError(f"bad code header {lines[0]!r}") from None
        gens = []
        for ln in lines[1:]:
            if len(ln) != n:
                raise LcodeError(f"generator {ln!r} has length != {n}")
            gens.append(parse_word(ln, flavor))
        return cls(flavor, n, gens)


@dataclass(frozen=True)
class SplitStructure:
    """Summary of the weight-<=2 structure of a self-orthogonal code."""

    gamma_count: int
    delta_lengths: tuple[int, ...]
    xi_count: int
    glue_order: int


def self_dual_extensions(code: LinearCode) -> list[LinearCode]:
    """All self-dual codes D with code <= D <= dual(code).

    Works up the poset one generator at a time: every self-dual code above
    the input is reached by repeatedly adjoining a coset representative of
    the current code inside its dual.  Requires a self-orthogonal input.
    """
    if not code.is_self_orthogonal():
        raise LcodeError("self_dual_extensions requires a self-orthogonal code")
    found: set[tuple[int, ...]] = set()
    out: list[LinearCode] = []
    stack = [code.basis]
    seen: set[tuple[int, ...]] = {code.basis}
    while stack:
        basis = stack.pop()
        if len(basis) == code.n:
            if basis not in found:
                found.add(basis)
                out.append(LinearCode(code.flavor, code.n, basis, _reduced=True))
            continue
        current = LinearCode(code.flavor, code.n, basis, _reduced=True)
        for v in current.dual().codewords():
            v = reduce_mod(v, basis)
            if v == 0:
                continue
            child = rref(basis + (v,))
            if child not in seen:
                seen.add(child)
                stack.append(child)
    out.sort(key=lambda c: c.basis)
    return out


def even_odd_transfer(code: LinearCode, word: int) -> LinearCode:
    """Pair a coset of an even self-dual code with a non-even self-dual code.

    Given an even self-dual code C and a word outside it, replaces the
    index-2 subcode orthogonal to the word's coset by its extension with
    the smallest odd-Euclidean-weight representative of that coset.  The
    result is self-dual and not even, and depends only on the coset.
    """
    if code.flavor != "L":
        raise LcodeError("even_odd_transfer is defined for L-flavor codes")
    if not code.is_self_dual() or not code.is_even():
        raise LcodeError("even_odd_transfer requires an even self-dual code")
    if word in code:
        raise LcodeError("the word must lie outside the code")
    odd_reps = [word ^ c for c in code.codewords() if ewt(word ^ c) % 2 == 1]
    if not odd_reps:
        raise LcodeError("coset has no representative of odd Euclidean weight")
    y = min(odd_reps)
    good = [b for b in code.basis if inner(b, word) == 0]
    bad = [b for b in code.basis if inner(b, word) == 1]
    sub = good + [bad[0] ^ b for b in bad[1:]]
    return LinearCode(code.flavor, code.n, sub + [y])
