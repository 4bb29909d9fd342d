"""The invariant ring of the duality/sign substitutions and its generators."""

import pytest

from lcodes import LcodeError
from lcodes.catalog import named
from lcodes.enumerators import Polynomial, SWE_VARS, hamming_we, swe
from lcodes.invariants import (
    decompose_even,
    decompose_general,
    decompose_hamming,
    dual_substitution,
    even_generators,
    expand_even,
    expand_general,
    expand_hamming,
    general_generators,
    hamming_generators,
    invariance_group,
    is_selfdual_invariant,
    jacobian_det,
    molien_series,
    sign_substitution,
    verify_ew_relation,
)

X, Y, Z = (Polynomial.variable(SWE_VARS, v) for v in SWE_VARS)


def test_invariance_group_order():
    assert len(invariance_group()) == 6


def test_substitutions_fix_selfdual_enumerators():
    p = swe(named("Upsilon3"))
    assert dual_substitution(p) == p
    assert sign_substitution(p) == p
    q = swe(named("Gamma1"))
    assert dual_substitution(q) == q  # self-dual
    assert sign_substitution(q) == X - Y  # but not even


def test_is_selfdual_invariant():
    assert is_selfdual_invariant(swe(named("DeltaPlus_2")))
    assert is_selfdual_invariant(swe(named("Upsilon3")))
    assert not is_selfdual_invariant(swe(named("Gamma1")))
    assert not is_selfdual_invariant(swe(named("Upsilon2")))
    assert not is_selfdual_invariant(X)


def test_molien_series():
    assert molien_series(12) == [1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14, 16, 19]


def test_generator_strings():
    assert [str(g) for g in even_generators()] == [
        "x + z",
        "x^2 + y^2 + 2*z^2",
        "x^3 + 3*x*z^2 + 3*y^2*z + z^3",
    ]
    assert [str(g) for g in general_generators()] == [
        "x + y",
        "x + z",
        "x^2 + y^2 + 2*z^2",
    ]
    assert [str(g) for g in hamming_generators()] == ["u + v", "u^2 + 3*v^2"]


def test_decompose_even_named():
    d = decompose_even(swe(named("Upsilon3")))
    assert d.vars == ("Xi1", "DeltaPlus2", "Upsilon3")
    assert d == Polynomial.variable(d.vars, "Upsilon3")
    assert expand_even(d) == swe(named("Upsilon3"))

    s = named("Xi1").direct_sum(named("DeltaPlus_2"))
    ds = decompose_even(swe(s))
    assert ds == Polynomial.variable(ds.vars, "Xi1") * Polynomial.variable(
        ds.vars, "DeltaPlus2"
    )


def test_decompose_general_and_hamming():
    g = decompose_general(swe(named("Upsilon2")))
    assert g.vars == ("Gamma1", "Xi1", "DeltaPlus2")
    assert expand_general(g) == swe(named("Upsilon2"))

    h = decompose_hamming(hamming_we(named("DeltaPlus_2")))
    assert h == Polynomial.variable(("Gamma1", "DeltaPlus2"), "DeltaPlus2")
    g2 = named("Gamma1").direct_sum(named("Gamma1"))
    h2 = decompose_hamming(hamming_we(g2))
    assert h2 == Polynomial.variable(("Gamma1", "DeltaPlus2"), "Gamma1") ** 2
    assert expand_hamming(h2) == hamming_we(g2)


def test_decompose_small_lengths(classified):
    from lcodes.enumerators import swe as swe_of

    for n in (1, 2, 3):
        for rec in classified(n)[0]:
            p = swe_of(rec.code)
            assert expand_general(decompose_general(p)) == p
    for rec in classified(4, True)[0]:
        p = swe_of(rec.code)
        assert expand_even(decompose_even(p)) == p


def test_decompose_rejects_non_members():
    with pytest.raises(LcodeError):
        decompose_even(swe(named("Gamma1")))
    with pytest.raises(LcodeError):
        decompose_even(swe(named("Upsilon2")))
    with pytest.raises(LcodeError):
        decompose_general(X)
    with pytest.raises(LcodeError):
        decompose_hamming(Polynomial.variable(("u", "v"), "u"))


def test_ew_relation_holds():
    assert verify_ew_relation() is True


def test_jacobian():
    j = jacobian_det()
    want = (
        24 * X * Y * Z + 6 * Y**3 - 6 * X**2 * Y - 24 * Y * Z**2
    )
    assert j == want
    assert not j.is_zero()