"""Shared helpers for the test suite: random words, codes, and symmetries."""

from __future__ import annotations

import random

from lcodes import LinearCode, SignedPermutation
from lcodes.klein import all_local_tables


def random_word(rng: random.Random, n: int) -> int:
    return rng.randrange(4**n)


def random_code(
    rng: random.Random, n: int, flavor: str = "L", max_gens: int | None = None
) -> LinearCode:
    if max_gens is None:
        max_gens = 2 * n
    gens = [random_word(rng, n) for _ in range(rng.randint(0, max_gens))]
    return LinearCode(flavor, n, gens)


def random_group_element(
    rng: random.Random, n: int, flavor: str = "L"
) -> SignedPermutation:
    perm = list(range(n))
    rng.shuffle(perm)
    tables = all_local_tables(flavor)
    local = tuple(rng.choice(tables) for _ in range(n))
    return SignedPermutation(flavor, tuple(perm), local)


def random_self_dual(rng: random.Random, n: int, records) -> LinearCode:
    """A uniformly scattered self-dual code: random class, random symmetry."""
    from lcodes.symmetry import act_on_code

    rec = rng.choice(records)
    return act_on_code(random_group_element(rng, n), rec.code)


def group_elements(n: int, flavor: str = "L") -> list[SignedPermutation]:
    """Every symmetry of length-n words, by closure of the generators."""
    from lcodes.klein import group_generators, identity_perm

    seen = {identity_perm(n, flavor)}
    frontier = list(seen)
    while frontier:
        g = frontier.pop()
        for h in group_generators(n, flavor):
            c = h.compose(g)
            if c not in seen:
                seen.add(c)
                frontier.append(c)
    return sorted(seen, key=lambda g: (g.perm, g.local))
