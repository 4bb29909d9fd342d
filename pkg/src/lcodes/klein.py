"""Arithmetic of the Klein four group and words over it.

The alphabet has four symbols encoded in two bits each:

    value 0 -> 0        (the zero symbol)
    value 1 -> 1 / a    (the distinguished symbol of the L-form / first K unit)
    value 2 -> w / b    (omega)
    value 3 -> W / c    (omega bar)

Addition is bitwise XOR (the group is Z2 x Z2).  Two quadratic forms live on
this group:

  * L-flavor: norms 0,1,2,2 -- quad(x) = norm mod 2, i.e. only quad(1) = 1.
  * K-flavor: quad(0) = 0 and quad = 1 on the three nonzero symbols.

Both forms polarize to the same symplectic dot product: dot(x, y) = 1 exactly
when x != y and both are nonzero.

A word of length n is a plain Python int holding n two-bit fields with
coordinate 0 in the MOST significant pair, so comparing ints compares words
lexicographically.  All functions below are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "LcodeError",
    "FLAVORS",
    "SYMBOL_CHARS",
    "SYMBOL_NORM",
    "LOCAL_TABLES",
    "add",
    "ewt",
    "hwt",
    "quad",
    "inner",
    "symbol_dot",
    "symbol_quad",
    "get_symbol",
    "word_from_symbols",
    "symbols_of",
    "parse_word",
    "format_word",
    "swap_pairs",
    "SignedPermutation",
    "identity_perm",
    "group_order",
    "group_generators",
    "all_local_tables",
]


class LcodeError(Exception):
    """Domain error raised by library operations."""


# Low bit of every two-bit field, wide enough for the longest supported word.
_LO = int("55" * 40, 16)


FLAVORS = ("L", "K")

# Text alphabets, indexed by symbol value.
SYMBOL_CHARS = {"L": "01wW", "K": "0abc"}

# Euclidean norms of the four symbols (L-flavor only).
SYMBOL_NORM = (0, 1, 2, 2)

# quad per symbol, by flavor.
_SYMBOL_QUAD = {"L": (0, 1, 0, 0), "K": (0, 1, 1, 1)}

# Per-coordinate symbol permutations allowed in the code-equivalence group.
# Each table t maps symbol value s to t[s]; all tables fix 0.
# L-flavor: identity and the swap of values 2 and 3 (w <-> W).
# K-flavor: all six permutations of the nonzero symbols.
LOCAL_TABLES = {
    "L": ((0, 1, 2, 3), (0, 1, 3, 2)),
    "K": (
        (0, 1, 2, 3),
        (0, 1, 3, 2),
        (0, 2, 1, 3),
        (0, 2, 3, 1),
        (0, 3, 1, 2),
        (0, 3, 2, 1),
    ),
}


def _check_flavor(flavor: str) -> None:
    if flavor not in FLAVORS:
        raise LcodeError(f"unknown flavor {flavor!r}")


def add(x: int, y: int) -> int:
    """Coordinatewise sum of two words (bitwise XOR)."""
    return x ^ y


def ewt(x: int) -> int:
    """Euclidean weight: sum of coordinate norms 0/1/2/2."""
    hi = (x >> 1) & _LO
    lo = x & _LO
    # norm 1 for fields holding symbol 1, norm 2 for fields with high bit set.
    return (lo & ~hi).bit_count() + 2 * hi.bit_count()


def hwt(x: int) -> int:
    """Hamming weight: number of nonzero coordinates."""
    hi = (x >> 1) & _LO
    lo = x & _LO
    return (hi | lo).bit_count()


def quad(x: int, flavor: str = "L") -> int:
    """Quadratic form of a word: ewt mod 2 (L) or hwt mod 2 (K)."""
    if flavor == "L":
        hi = (x >> 1) & _LO
        return ((x & _LO) & ~hi).bit_count() & 1
    _check_flavor(flavor)
    return hwt(x) & 1


def swap_pairs(x: int) -> int:
    """Swap the two bits inside every coordinate field."""
    lo = x & _LO
    hi = (x >> 1) & _LO
    return (lo << 1) | hi


def inner(x: int, y: int) -> int:
    """Scalar product of two words (same for both flavors)."""
    return (x & swap_pairs(y)).bit_count() & 1


def symbol_dot(s: int, t: int) -> int:
    """Dot product of two single symbols."""
    return ((s >> 1) & t & 1) ^ (s & (t >> 1) & 1)


def symbol_quad(s: int, flavor: str = "L") -> int:
    """Quadratic form of a single symbol."""
    _check_flavor(flavor)
    return _SYMBOL_QUAD[flavor][s]


def get_symbol(x: int, n: int, i: int) -> int:
    """Symbol value at coordinate i (0-based from the left)."""
    return (x >> (2 * (n - 1 - i))) & 3


def word_from_symbols(symbols) -> int:
    """Pack a sequence of symbol values into a word."""
    w = 0
    for s in symbols:
        if not 0 <= s <= 3:
            raise LcodeError(f"invalid symbol value {s}")
        w = (w << 2) | s
    return w


def symbols_of(x: int, n: int) -> tuple[int, ...]:
    """Unpack a word into its n symbol values."""
    return tuple((x >> (2 * (n - 1 - i))) & 3 for i in range(n))


def parse_word(text: str, flavor: str = "L") -> int:
    """Parse a word from its text form, e.g. '11w' or 'abc'."""
    _check_flavor(flavor)
    alphabet = SYMBOL_CHARS[flavor]
    w = 0
    for ch in text:
        v = alphabet.find(ch)
        if v < 0:
            raise LcodeError(f"invalid symbol {ch!r} for flavor {flavor}")
        w = (w << 2) | v
    return w


def format_word(x: int, n: int, flavor: str = "L") -> str:
    """Render a word as text."""
    _check_flavor(flavor)
    alphabet = SYMBOL_CHARS[flavor]
    return "".join(alphabet[(x >> (2 * (n - 1 - i))) & 3] for i in range(n))


# ---------------------------------------------------------------------------
# The equivalence group: coordinate permutations with local symbol actions.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignedPermutation:
    """An element of the code-equivalence group for a given flavor.

    ``perm[j]`` is the position coordinate j is sent to; ``local[p]`` is the
    symbol table applied at target position p.  The image word satisfies
    ``symbol(result, perm[j]) = local[perm[j]][symbol(x, j)]``.
    """

    flavor: str
    perm: tuple[int, ...]
    local: tuple[tuple[int, int, int, int], ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    def apply(self, x: int) -> int:
        n = self.n
        perm = self.perm
        local = self.local
        res = 0
        for j in range(n):
            s = (x >> (2 * (n - 1 - j))) & 3
            p = perm[j]
            res |= local[p][s] << (2 * (n - 1 - p))
        return res

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """Return self o other (apply other first)."""
        if self.flavor != other.flavor or self.n != other.n:
            raise LcodeError("cannot compose group elements of different kinds")
        n = self.n
        perm = tuple(self.perm[other.perm[j]] for j in range(n))
        local = [None] * n
        for j in range(n):
            p_mid = other.perm[j]
            p = self.perm[p_mid]
            t_first = other.local[p_mid]
            t_second = self.local[p]
            local[p] = tuple(t_second[t_first[s]] for s in range(4))
        return SignedPermutation(self.flavor, perm, tuple(local))

    def inverse(self) -> "SignedPermutation":
        n = self.n
        inv_perm = [0] * n
        for j, p in enumerate(self.perm):
            inv_perm[p] = j
        local = [None] * n
        for j in range(n):
            t = self.local[self.perm[j]]
            t_inv = [0] * 4
            for s in range(4):
                t_inv[t[s]] = s
            local[j] = tuple(t_inv)
        return SignedPermutation(self.flavor, tuple(inv_perm), tuple(local))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and all(
            t == (0, 1, 2, 3) for t in self.local
        )


def identity_perm(n: int, flavor: str = "L") -> SignedPermutation:
    _check_flavor(flavor)
    return SignedPermutation(flavor, tuple(range(n)), ((0, 1, 2, 3),) * n)


def group_order(n: int, flavor: str = "L") -> int:
    """Order of the full equivalence group: 2^n n! (L) or 6^n n! (K)."""
    _check_flavor(flavor)
    base = len(LOCAL_TABLES[flavor])
    order = 1
    for i in range(1, n + 1):
        order *= i
    return (base**n) * order


def group_generators(n: int, flavor: str = "L") -> list[SignedPermutation]:
    """A small generating set of the full equivalence group."""
    _check_flavor(flavor)
    gens: list[SignedPermutation] = []
    ident = ((0, 1, 2, 3),) * n
    if n >= 2:
        # transposition of the first two coordinates
        perm = (1, 0) + tuple(range(2, n))
        gens.append(SignedPermutation(flavor, perm, ident))
        # full cycle
        perm = tuple((j + 1) % n for j in range(n))
        gens.append(SignedPermutation(flavor, perm, ident))
    for table in LOCAL_TABLES[flavor][1:]:
        local = (table,) + ((0, 1, 2, 3),) * (n - 1)
        gens.append(SignedPermutation(flavor, tuple(range(n)), local))
    if not gens:
        gens.append(identity_perm(n, flavor))
    return gens


def all_local_tables(flavor: str) -> tuple[tuple[int, int, int, int], ...]:
    _check_flavor(flavor)
    return LOCAL_TABLES[flavor]
