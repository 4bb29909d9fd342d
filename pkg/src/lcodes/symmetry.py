"""Canonical forms, equivalence and automorphism groups of codes.

The acting group is the wreath-type group of all coordinate permutations
combined with per-coordinate symbol permutations that preserve the flavor's
form: order 2^n n! for L-flavor, 6^n n! for K-flavor.

Canonical form is the group image of the code minimizing a level-wise
serialization: for k = 1..n let s_k be the sorted tuple of the length-k
prefixes (as integers) of all codewords; code images are compared by
(s_1, ..., s_n) lexicographically.  Because every s_k is a function of the
codeword set alone, this is a total preorder on images that descends to a
total order on codes, and it is prefix-monotone: the minimal value of s_k
among completions is decided at level k.  That makes depth-first search with
exact argmin pruning sound: we assign, level by level, which source
coordinate (and which symbol table) feeds each target position, keeping all
branches achieving the level minimum.  The surviving leaves are exactly the
coset g0 * Aut(C), so the same search also yields the automorphism group.

For codes with very large automorphism groups the branch count explodes; the
engine then falls back to enumerating the (small) orbit of the code under
the full group, minimizing the same serialization over the orbit and reading
the automorphism group off the orbit-stabilizer relation with Schreier
generators.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .klein import (
    LcodeError,
    LOCAL_TABLES,
    SignedPermutation,
    group_generators,
    group_order,
    identity_perm,
)
from .codes import LinearCode, rref

__all__ = [
    "CanonicalResult",
    "AutGroup",
    "max_length",
    "canonical_form",
    "are_equivalent",
    "aut_group",
    "kleinian_aut_group",
    "act_on_code",
]

DEFAULT_BRANCH_CAP = 4096
ORBIT_CAP = 250_000


def max_length() -> int:
    """Largest code length accepted by the canonicalization engine."""
    return int(os.environ.get("LCODES_MAX_LENGTH", "8"))


class _BranchOverflow(Exception):
    pass


@dataclass(frozen=True)
class CanonicalResult:
    """Canonical form of a code together with group data.

    ``transporter`` maps the input code onto ``code`` (the canonical
    image); ``aut_generators`` generate the automorphism group of the
    *input* code.  ``orbit_size`` is the size of the equivalence class,
    i.e. the group order divided by ``aut_order``.
    """

    code: LinearCode
    transporter: SignedPermutation
    aut_order: int
    aut_generators: tuple[SignedPermutation, ...]
    orbit_size: int


@dataclass(frozen=True)
class AutGroup:
    order: int
    generators: tuple[SignedPermutation, ...]
    orbit_size: int


def _codewords_of(basis) -> list[int]:
    words = [0]
    for row in basis:
        words += [w ^ row for w in words]
    words.sort()
    return words


def _dfs_search(flavor: str, n: int, basis, cap: int):
    """Exact levelwise minimization; returns (canonical words, leaves)."""
    tables = LOCAL_TABLES[flavor]
    words = _codewords_of(basis)
    m = len(words)
    cols = [
        tuple((w >> (2 * (n - 1 - j))) & 3 for w in words) for j in range(n)
    ]
    # A state is (used-source bitmask, assignment, image prefixes per word).
    states = [(0, (), (0,) * m)]
    best_key = None
    for _level in range(n):
        best_key = None
        survivors = []
        for used, assign, prefixes in states:
            for j in range(n):
                if (used >> j) & 1:
                    continue
                col = cols[j]
                for ti, table in enumerate(tables):
                    new_p = tuple(
                        (p << 2) | table[c] for p, c in zip(prefixes, col)
                    )
                    key = tuple(sorted(new_p))
                    if best_key is None or key < best_key:
                        best_key = key
                        survivors = [(used | (1 << j), assign + ((j, ti),), new_p)]
                    elif key == best_key:
                        survivors.append(
                            (used | (1 << j), assign + ((j, ti),), new_p)
                        )
        if len(survivors) > cap:
            raise _BranchOverflow
        states = survivors
    leaves = []
    for _used, assign, _prefixes in states:
        perm = [0] * n
        local = [None] * n
        for position, (src, ti) in enumerate(assign):
            perm[src] = position
            local[position] = tables[ti]
        leaves.append(SignedPermutation(flavor, tuple(perm), tuple(local)))
    return list(best_key), leaves


def act_on_code(g: SignedPermutation, code: LinearCode) -> LinearCode:
    """Image of a code under a group element."""
    if g.n != code.n:
        raise LcodeError("group element length does not match code length")
    if g.flavor != code.flavor:
        raise LcodeError("group element flavor does not match code flavor")
    return LinearCode(
        code.flavor, code.n, rref([g.apply(b) for b in code.basis]), _reduced=True
    )


def _level_key(words, n: int, k: int):
    shift = 2 * (n - k)
    return tuple(sorted(w >> shift for w in words))


def _orbit_search(flavor: str, n: int, basis):
    """Minimize the serialization over the full orbit of the code."""
    gens = group_generators(n, flavor)
    start = tuple(basis)
    transporters: dict[tuple, SignedPermutation] = {start: identity_perm(n, flavor)}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        t = transporters[b]
        for g in gens:
            nb = rref([g.apply(row) for row in b])
            if nb not in transporters:
                if len(transporters) >= ORBIT_CAP:
                    raise LcodeError(
                        "orbit too large to canonicalize within resource limits"
                    )
                transporters[nb] = g.compose(t)
                queue.append(nb)
    orbit_size = len(transporters)
    order = group_order(n, flavor)
    if order % orbit_size:
        raise AssertionError("orbit size does not divide the group order")

    best_basis = None
    best_words = None
    best_levels: list = []
    for b in transporters:
        words = _codewords_of(b)
        if best_basis is None:
            best_basis, best_words = b, words
            best_levels = []
            continue
        verdict = 0
        for k in range(1, n + 1):
            if len(best_levels) < k:
                best_levels.append(_level_key(best_words, n, k))
            cand = _level_key(words, n, k)
            if cand < best_levels[k - 1]:
                verdict = -1
                break
            if cand > best_levels[k - 1]:
                verdict = 1
                break
        if verdict < 0:
            best_basis, best_words = b, words
            best_levels = []
    canonical_words = best_words
    transporter = transporters[best_basis]

    aut_order = order // orbit_size
    schreier: dict = {}
    for b, t in transporters.items():
        for g in gens:
            nb = rref([g.apply(row) for row in b])
            t_nb = transporters[nb]
            a = t_nb.inverse().compose(g).compose(t)
            if a.is_identity():
                continue
            key = (a.perm, a.local)
            if key not in schreier:
                schreier[key] = a
            if len(schreier) >= 2048:
                break
        if len(schreier) >= 2048:
            break
    return canonical_words, transporter, aut_order, list(schreier.values()), orbit_size


def canonicalize_basis(flavor: str, n: int, basis, branch_cap: int | None = None):
    """Core engine; returns (canonical basis, transporter, aut order,
    aut generators for the input code, orbit size)."""
    if n > max_length():
        raise LcodeError(
            f"length {n} exceeds the canonicalization limit "
            f"(set LCODES_MAX_LENGTH to raise it)"
        )
    cap = branch_cap or DEFAULT_BRANCH_CAP
    basis = tuple(basis)
    try:
        words, leaves = _dfs_search(flavor, n, basis, cap)
        canon_basis = rref(words)
        g0 = leaves[0]
        g0_inv = g0.inverse()
        auts = tuple(g0_inv.compose(g) for g in leaves if g is not g0)
        aut_order = len(leaves)
        orbit = group_order(n, flavor) // aut_order
        return canon_basis, g0, aut_order, auts, orbit
    except _BranchOverflow:
        words, transporter, aut_order, gens, orbit = _orbit_search(flavor, n, basis)
        return rref(words), transporter, aut_order, tuple(gens), orbit


def canonical_form(code: LinearCode, branch_cap: int | None = None) -> CanonicalResult:
    """Canonical representative of the equivalence class of a code."""
    canon_basis, transporter, aut_order, gens, orbit = canonicalize_basis(
        code.flavor, code.n, code.basis, branch_cap
    )
    canon = LinearCode(code.flavor, code.n, canon_basis, _reduced=True)
    return CanonicalResult(canon, transporter, aut_order, gens, orbit)


def are_equivalent(a: LinearCode, b: LinearCode) -> SignedPermutation | None:
    """A transporter g with g(a) = b, or None if the codes are inequivalent."""
    if a.flavor != b.flavor or a.n != b.n:
        return None
    ra = canonical_form(a)
    rb = canonical_form(b)
    if ra.code.basis != rb.code.basis:
        return None
    return rb.transporter.inverse().compose(ra.transporter)


def aut_group(code: LinearCode) -> AutGroup:
    """Automorphism group of a code inside its flavor's equivalence group."""
    result = canonical_form(code)
    return AutGroup(result.aut_order, result.aut_generators, result.orbit_size)


def kleinian_aut_group(code: LinearCode) -> AutGroup:
    """Automorphism group under the larger K-flavor group.

    An L-flavor code is reinterpreted over the K alphabet (the underlying
    bit patterns are unchanged) so that all six symbol permutations are
    allowed at each coordinate.
    """
    as_k = (
        code
        if code.flavor == "K"
        else LinearCode("K", code.n, code.basis, _reduced=True)
    )
    return aut_group(as_k)
