"""Core symbol/word arithmetic and the wreath-product symmetries."""

import pytest
from hypothesis import given, strategies as st

from lcodes import LcodeError
from lcodes.klein import (
    LOCAL_TABLES,
    SYMBOL_NORM,
    all_local_tables,
    ewt,
    format_word,
    get_symbol,
    group_generators,
    group_order,
    hwt,
    identity_perm,
    inner,
    parse_word,
    quad,
    swap_pairs,
    symbol_dot,
    symbol_quad,
    symbols_of,
    word_from_symbols,
)
from support import random_group_element

# -- frozen symbol facts ------------------------------------------------------

DOT_TABLE = {
    (s, t): (1 if s != t and s and t else 0)
    for s in range(4)
    for t in range(4)
}


def test_symbol_dot_table():
    for (s, t), want in DOT_TABLE.items():
        assert symbol_dot(s, t) == want


def test_symbol_norms_and_quads():
    assert SYMBOL_NORM == (0, 1, 2, 2)
    assert [symbol_quad(s, "L") for s in range(4)] == [0, 1, 0, 0]
    assert [symbol_quad(s, "K") for s in range(4)] == [0, 1, 1, 1]


def test_word_examples():
    x = parse_word("1w")
    y = parse_word("w1")
    assert format_word(x ^ y, 2) == "WW"
    assert ewt(parse_word("11w")) == 4
    assert hwt(parse_word("11w")) == 3
    assert ewt(parse_word("www")) == 6
    assert quad(parse_word("1w")) == 1
    assert inner(parse_word("1w"), parse_word("w1")) == 0
    assert inner(x, x) == 0


def test_parse_word_flavors_and_errors():
    assert parse_word("0abc", "K") == parse_word("01wW", "L")
    with pytest.raises(LcodeError):
        parse_word("01x")
    with pytest.raises(LcodeError):
        parse_word("ab", "L")
    assert format_word(parse_word("abc", "K"), 3, "K") == "abc"


def test_symbol_packing_order():
    # Coordinate 0 occupies the most significant pair: integer order is
    # lexicographic word order.
    x = parse_word("1w")
    assert get_symbol(x, 2, 0) == 1
    assert get_symbol(x, 2, 1) == 2
    assert word_from_symbols([1, 2]) == x
    assert symbols_of(x, 2) == (1, 2)
    assert parse_word("10") > parse_word("01")


# -- hypothesis properties ----------------------------------------------------

words = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, 4**n - 1))
)
word_pairs = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(
        st.just(n), st.integers(0, 4**n - 1), st.integers(0, 4**n - 1)
    )
)


@given(words)
def test_weights_from_symbols(nx):
    n, x = nx
    syms = symbols_of(x, n)
    assert ewt(x) == sum(SYMBOL_NORM[s] for s in syms)
    assert hwt(x) == sum(1 for s in syms if s)
    assert quad(x, "L") == ewt(x) % 2
    assert quad(x, "K") == hwt(x) % 2


@given(word_pairs)
def test_inner_is_quad_polarization(nxy):
    n, x, y = nxy
    for flavor in ("L", "K"):
        assert inner(x, y) == (
            quad(x ^ y, flavor) ^ quad(x, flavor) ^ quad(y, flavor)
        )
    assert inner(x, y) == inner(y, x)


@given(word_pairs)
def test_roundtrips(nxy):
    n, x, y = nxy
    assert parse_word(format_word(x, n)) == x
    assert parse_word(format_word(x, n, "K"), "K") == x
    assert word_from_symbols(symbols_of(x, n)) == x
    assert swap_pairs(swap_pairs(x)) == x
    # swapping the two bits of every coordinate swaps the two norm-2 symbols
    assert hwt(swap_pairs(x)) == hwt(x)


@given(word_pairs, st.randoms(use_true_random=False))
def test_group_action_preserves_structure(nxy, rng):
    n, x, y = nxy
    for flavor in ("L", "K"):
        g = random_group_element(rng, n, flavor)
        gx, gy = g.apply(x), g.apply(y)
        assert hwt(gx) == hwt(x)
        assert inner(gx, gy) == inner(x, y)
        assert quad(gx, flavor) == quad(x, flavor)
        if flavor == "L":
            assert ewt(gx) == ewt(x)


@given(words, st.randoms(use_true_random=False))
def test_compose_apply_inverse(nx, rng):
    n, x = nx
    for flavor in ("L", "K"):
        g = random_group_element(rng, n, flavor)
        h = random_group_element(rng, n, flavor)
        assert g.compose(h).apply(x) == g.apply(h.apply(x))
        assert g.inverse().apply(g.apply(x)) == x
        assert g.compose(g.inverse()).is_identity()
        assert identity_perm(n, flavor).apply(x) == x


def _closure(gens, n):
    seen = {identity_perm(n, gens[0].flavor)}
    frontier = list(seen)
    while frontier:
        g = frontier.pop()
        for h in gens:
            c = h.compose(g)
            if c not in seen:
                seen.add(c)
                frontier.append(c)
    return seen


@pytest.mark.parametrize("flavor,orders", [("L", [2, 8, 48]), ("K", [6, 72, 1296])])
def test_group_order_and_generators(flavor, orders):
    for n, want in zip(range(1, 4), orders):
        assert group_order(n, flavor) == want
        if n <= 2:
            closure = _closure(group_generators(n, flavor), n)
            assert len(closure) == want


def test_local_tables():
    assert LOCAL_TABLES["L"] == ((0, 1, 2, 3), (0, 1, 3, 2))
    assert len(all_local_tables("K")) == 6
    for table in all_local_tables("K"):
        assert table[0] == 0
        assert sorted(table) == [0, 1, 2, 3]


def test_word_orbits_under_full_group():
    # Brute-force orbits of the word "1w" at n=2.  The K group moves it to
    # every word with two nonzero coordinates; the L group preserves the
    # multiset of norms, leaving four images.
    n = 2
    x = parse_word("1w")
    orbits = {}
    for flavor in ("L", "K"):
        group = _closure(group_generators(n, flavor), n)
        assert len(group) == group_order(n, flavor)
        orbits[flavor] = {g.apply(x) for g in group}
    assert len(orbits["K"]) == 9
    assert orbits["L"] == {
        parse_word(w) for w in ("1w", "1W", "w1", "W1")
    }
    assert orbits["L"] <= orbits["K"]
