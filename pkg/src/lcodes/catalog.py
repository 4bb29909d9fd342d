"""Catalog of named codes used throughout the library and the CLI.

L-flavor names (capitalized):

  Gamma1        length 1, {0, 1}
  Xi1           length 1, {0, w}
  Delta_l       length l, spanned by the l-1 adjacent 11 pairs (Delta_1 is
                the zero code of length 1)
  DeltaPlus_k   Delta_k extended by the all-w word (k >= 2); even self-dual
  Upsilon2      length 2, spanned by 1w and w1
  Upsilon3      length 3, spanned by 11w, 1w1, w11; even self-dual
  Sigma_n       the L-code over deltaPlus_n marked c at every coordinate
                (n >= 3); Sigma_3 equals Upsilon3
  J_n           the L-code over deltaPlus_n marked b everywhere (n odd) or
                b everywhere except a final c (n even), n >= 3
  P3, Q3        the L-codes over deltaPlus_3 with markings aab and abb
  D_k           even k >= 4: the doubled code psi(Upsilon2) for k = 4,
                psi(Sigma_{k/2}) for k >= 6
  Zero_n        the zero code of length n

K-flavor names (lowercase, plus Hexacode):

  gamma1        length 1, {0, a}
  delta_k       length k, spanned by the adjacent aa pairs
  epsilon2      length 2, {00, aa, bb, cc}
  deltaPlus_k   delta_k extended by the all-c word (k >= 2)
  Hexacode      the length-6 self-dual K-code with automorphism group of
                order 2160
"""

from __future__ import annotations

from .klein import LcodeError, parse_word, word_from_symbols
from .codes import LinearCode
from .maps import phi, phi_inv_marked, psi

__all__ = ["named", "named_catalog", "delta", "delta_plus", "kleinian_delta_plus"]


def _pairs(l: int, symbol: int) -> list[int]:
    rows = []
    for i in range(l - 1):
        pair = word_from_symbols([symbol, symbol])
        rows.append(pair << (2 * (l - 2 - i)))
    return rows


def delta(l: int) -> LinearCode:
    """The even {0,1}-subcode of length l (zero code when l = 1)."""
    if l < 1:
        raise LcodeError("delta requires length >= 1")
    return LinearCode("L", l, _pairs(l, 1))


def delta_plus(k: int) -> LinearCode:
    """delta(k) extended by the all-w word; even and self-dual."""
    if k < 2:
        raise LcodeError("delta_plus requires length >= 2")
    all_w = word_from_symbols([2] * k)
    return LinearCode("L", k, _pairs(k, 1) + [all_w])


def kleinian_delta(k: int) -> LinearCode:
    if k < 1:
        raise LcodeError("delta requires length >= 1")
    return LinearCode("K", k, _pairs(k, 1))


def kleinian_delta_plus(k: int) -> LinearCode:
    """delta_k extended by the all-c word; Hamming-even and self-dual."""
    if k < 2:
        raise LcodeError("deltaPlus requires length >= 2")
    all_c = word_from_symbols([3] * k)
    return LinearCode("K", k, _pairs(k, 1) + [all_c])


_HEXACODE_GENERATORS = ("Www00w", "wW0w0w", "w0W0ww", "0w0Www", "00wwWw", "wwwwwW")


def _hexacode() -> LinearCode:
    gens = [parse_word(g, "L") for g in _HEXACODE_GENERATORS]
    return phi(LinearCode("L", 6, gens))


def _sigma_code(n: int) -> LinearCode:
    if n < 3:
        raise LcodeError("Sigma_n requires n >= 3")
    return phi_inv_marked(kleinian_delta_plus(n), (3,) * n)


def _j_code(n: int) -> LinearCode:
    if n < 3:
        raise LcodeError("J_n requires n >= 3")
    marks = (2,) * n if n % 2 else (2,) * (n - 1) + (3,)
    return phi_inv_marked(kleinian_delta_plus(n), marks)


def _d_code(k: int) -> LinearCode:
    if k < 4 or k % 2:
        raise LcodeError("D_k requires an even k >= 4")
    if k == 4:
        return psi(named("Upsilon2"))
    return psi(_sigma_code(k // 2))


def named(name: str) -> LinearCode:
    """Build a named code from the catalog."""
    fixed = {
        "Gamma1": lambda: LinearCode("L", 1, [1]),
        "Xi1": lambda: LinearCode("L", 1, [2]),
        "Upsilon2": lambda: LinearCode(
            "L", 2, [parse_word("1w", "L"), parse_word("w1", "L")]
        ),
        "Upsilon3": lambda: LinearCode(
            "L",
            3,
            [parse_word("11w", "L"), parse_word("1w1", "L"), parse_word("w11", "L")],
        ),
        "P3": lambda: phi_inv_marked(kleinian_delta_plus(3), (1, 1, 2)),
        "Q3": lambda: phi_inv_marked(kleinian_delta_plus(3), (1, 2, 2)),
        "gamma1": lambda: LinearCode("K", 1, [1]),
        "epsilon2": lambda: LinearCode(
            "K", 2, [parse_word("aa", "K"), parse_word("bb", "K")]
        ),
        "Hexacode": _hexacode,
    }
    if name in fixed:
        return fixed[name]()
    if "_" in name:
        head, _, tail = name.partition("_")
        try:
            k = int(tail)
        except ValueError:
            raise LcodeError(f"unknown code name {name!r}") from None
        families = {
            "Delta": delta,
            "DeltaPlus": delta_plus,
            "Sigma": _sigma_code,
            "J": _j_code,
            "D": _d_code,
            "Zero": lambda n: LinearCode("L", n, []),
            "delta": kleinian_delta,
            "deltaPlus": kleinian_delta_plus,
        }
        if head in families:
            return families[head](k)
    raise LcodeError(f"unknown code name {name!r}")


def named_catalog() -> dict[str, str]:
    """Available names with short descriptions (families use placeholders)."""
    return {
        "Gamma1": "length 1, {0, 1}",
        "Xi1": "length 1, {0, w}",
        "Delta_l": "even {0,1}-words on l coordinates (l >= 1)",
        "DeltaPlus_k": "Delta_k plus the all-w coset (k >= 2)",
        "Upsilon2": "length 2 self-dual, no order-2 coordinate symmetry",
        "Upsilon3": "length 3 even self-dual with trivial glue",
        "Sigma_n": "all-c marked L-code over deltaPlus_n (n >= 3)",
        "J_n": "all-b (odd n) or b..bc (even n) marked L-code over deltaPlus_n",
        "P3": "aab-marked L-code over deltaPlus_3",
        "Q3": "abb-marked L-code over deltaPlus_3",
        "D_k": "doubled codes: psi(Upsilon2) for k=4, psi(Sigma_{k/2}) for even k >= 6",
        "Zero_n": "zero code of length n",
        "gamma1": "K-flavor length 1, {0, a}",
        "delta_k": "even {0,a}-words on k coordinates",
        "deltaPlus_k": "delta_k plus the all-c coset (k >= 2)",
        "epsilon2": "K-flavor length 2, {00, aa, bb, cc}",
        "Hexacode": "length 6 self-dual K-code, automorphism order 2160",
    }
