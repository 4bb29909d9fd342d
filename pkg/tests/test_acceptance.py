"""Acceptance gate: the twelve headline checks, one test and one printed line each.

Each test prints ``C<k> PASS/FAIL (<seconds>) -- <what it checked>`` directly to
the terminal (bypassing capture), so a plain ``pytest -v`` run shows one line
per criterion.  Stated wall-clock budgets are asserted, not just reported.
"""

import random
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from lcodes import tables
from lcodes.catalog import named
from lcodes.classify import (
    distinct_self_dual_count,
    even_odd_census,
    expected_mass,
    find_extremal,
    indecomposable_count,
    mass_check,
)
from lcodes.enumerators import (
    Polynomial,
    hamming_we,
    macwilliams_hamming,
    macwilliams_swe,
    swe,
)
from lcodes.invariants import (
    decompose_even,
    decompose_general,
    expand_even,
    expand_general,
    molien_series,
    verify_ew_relation,
)
from lcodes.klein import inner
from lcodes.maps import beta, beta_word, marking_classes, phi, phi_inv, psi, sigma
from lcodes.symmetry import canonical_form

from support import random_code

FIXTURES = Path(__file__).resolve().parent.parent / "tables"


@contextmanager
def criterion(capsys, tag, desc, budget=None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"{tag} FAIL -- {desc}")
        raise
    elapsed = time.perf_counter() - start
    ok = budget is None or elapsed <= budget
    with capsys.disabled():
        print(f"{tag} {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) -- {desc}")
    if not ok:
        pytest.fail(f"{tag} exceeded budget: {elapsed:.2f}s > {budget}s")


def test_c01_named_code_table(capsys):
    with criterion(capsys, "C01", "named-code table (dim/evenness/aut/swe/EW)", 1.0):
        expected = (FIXTURES / "named_codes.txt").read_text(encoding="utf-8")
        assert tables.render_named_code_table() == expected


def test_c02_self_dual_enumerator_table(capsys):
    with criterion(
        capsys, "C02", "enumerators of all classes n<=3 and even n=4", 5.0
    ):
        expected = (FIXTURES / "selfdual_enumerators.txt").read_text(
            encoding="utf-8"
        )
        assert tables.render_self_dual_enumerator_table() == expected


def test_c03_classification_counts(capsys, classified):
    with criterion(capsys, "C03", "class counts t_1..t_6 and e_1..e_7"):
        counts = [len(classified(n)[0]) for n in range(1, 7)]
        assert counts == [2, 5, 13, 40, 141, 658]
        even_counts = [len(classified(n, True)[0]) for n in range(1, 8)]
        assert even_counts == [1, 2, 4, 9, 21, 64, 218]
        small_wall = sum(classified(n)[1] for n in range(1, 6))
        assert small_wall < 60.0
        assert classified(6)[1] < 1800.0
        assert classified(7, True)[1] < 1800.0


def test_c04_mass_formulas(capsys, classified):
    with criterion(capsys, "C04", "mass formulas and distinct-code counts"):
        for n in range(1, 7):
            report = mass_check(classified(n)[0], n)
            assert report.ok, f"general mass failed at n={n}"
        for n in range(1, 8):
            report = mass_check(classified(n, True)[0], n, even_only=True)
            assert report.ok, f"even mass failed at n={n}"
        for n, want in zip(range(1, 5), (3, 15, 135, 2295)):
            assert distinct_self_dual_count(n) == want == expected_mass(n)
        for n, want in zip(range(1, 5), (2, 6, 30, 270)):
            assert (
                distinct_self_dual_count(n, even_only=True)
                == want
                == expected_mass(n, even_only=True)
            )


def test_c05_indecomposable_census(capsys, classified):
    with criterion(capsys, "C05", "indecomposable counts i_1..i_5 and j_1..j_5"):
        general = [indecomposable_count(classified(n)[0]) for n in range(1, 6)]
        assert general == [2, 2, 5, 16, 64]
        even = [indecomposable_count(classified(n, True)[0]) for n in range(1, 6)]
        assert even == [1, 1, 2, 4, 10]


def test_c06_hexacode_markings(capsys):
    with criterion(
        capsys, "C06", "hexacode marking classes, lift aut orders, top E-row", 60.0
    ):
        rendered = tables.render_hexacode_marking_table()
        expected = (FIXTURES / "hexacode_markings.txt").read_text(encoding="utf-8")
        assert rendered == expected
        rows = [line.split(";") for line in rendered.splitlines()]
        assert sorted(int(r[0]) for r in rows) == [18, 45, 180, 216, 270]
        assert sorted(int(r[1]) for r in rows) == [8, 10, 12, 48, 120]
        first = min(rows, key=lambda r: int(r[0]))
        assert first[2] == "1,0,0,0,0,0,31,0,15,0,15,0,2"


def test_c07_length3_marking_table(capsys):
    with criterion(
        capsys, "C07", "marking classes of the length-3 even Kleinian code", 1.0
    ):
        classes = marking_classes(named("deltaPlus_3"))
        sizes = sorted(c.orbit_size for c in classes)
        assert sizes == [1, 4, 4, 6, 12]
        assert sum(sizes) == 27


def test_c08_macwilliams_suite(capsys):
    with criterion(
        capsys, "C08", "MacWilliams transform vs dual enumerator, 500 codes", 60.0
    ):
        rng = random.Random(801)
        for _ in range(500):
            n = rng.randint(1, 5)
            code = random_code(rng, n, "L")
            dual = code.dual()
            assert macwilliams_hamming(hamming_we(code), code.size) == hamming_we(
                dual
            )
            assert macwilliams_swe(swe(code), code.size) == swe(dual)


def test_c09_map_suite(capsys):
    with criterion(
        capsys, "C09", "structure-map identities on 200 random codes", 60.0
    ):
        rng = random.Random(901)
        for _ in range(200):
            n = rng.randint(1, 4)
            code = random_code(rng, n, "L")
            image = phi(code)

            # reinterpretation is a bijection preserving Hamming structure
            assert phi_inv(image) == code
            assert hamming_we(image) == hamming_we(code)

            # doubling maps: self-duality and evenness carried along
            doubled = psi(code)
            assert doubled.is_self_dual() == code.is_self_dual()
            assert doubled.is_even() == code.is_even()
            k_doubled = sigma(image)
            assert k_doubled.is_self_dual() == image.is_self_dual()
            assert k_doubled.is_even() == code.is_even()

            # the two doubling maps agree across the reinterpretation
            assert phi(doubled) == k_doubled

            # enumerator substitution identities for both doublings
            w = swe(code)
            u, v = (Polynomial.variable(("u", "v"), s) for s in "uv")
            assert hamming_we(k_doubled) == w.substitute(
                {"x": u**2 + v**2, "y": 2 * u * v, "z": 2 * v**2}
            )
            x, y, z = (Polynomial.variable(("x", "y", "z"), s) for s in "xyz")
            assert swe(doubled) == w.substitute(
                {"x": x**2 + y**2, "y": 2 * x * y, "z": 2 * z**2}
            )

            # binary expansion: length triples, dimension doubles,
            # and the scalar product is preserved word by word
            bcode = beta(code)
            assert bcode.n == 3 * n
            assert bcode.dim == code.rank
            words = code.codewords()
            for _ in range(5):
                a = rng.choice(words)
                b = rng.choice(words)
                bits = beta_word(a, n) & beta_word(b, n)
                assert bin(bits).count("1") % 2 == inner(a, b)


def test_c10_invariant_ring(capsys, classified):
    even_records = [rec for n in range(1, 7) for rec in classified(n, True)[0]]
    general_records = [rec for n in range(1, 6) for rec in classified(n)[0]]
    with criterion(
        capsys, "C10", "invariant-ring decompositions, EW relation, Molien", 60.0
    ):
        for rec in even_records:
            p = swe(rec.code)
            assert expand_even(decompose_even(p)) == p
        for rec in general_records:
            p = swe(rec.code)
            assert expand_general(decompose_general(p)) == p
        assert verify_ew_relation()
        # closed form: series of a free ring on generators of degree 1, 2, 3
        closed = [0] * 13
        closed[0] = 1
        for d in (1, 2, 3):
            for k in range(d, 13):
                closed[k] += closed[k - d]
        assert molien_series(12) == closed


def test_c11_even_odd_correspondence(capsys, classified):
    records2 = classified(2)[0]
    records3 = classified(3)[0]
    records4 = classified(4)[0]
    with criterion(
        capsys, "C11", "even/odd class correspondence at n=2,3,4", 60.0
    ):
        report = even_odd_census(2, records=records2)
        assert report.pair_count == 4
        targets = {
            canonical_form(named("Gamma1").direct_sum(named("Xi1"))).code.basis: 1,
            canonical_form(named("Upsilon2")).code.basis: 2,
            canonical_form(named("Gamma1").direct_sum(named("Gamma1"))).code.basis: 1,
        }
        assert report.fiber_sizes == targets
        for n, records in ((3, records3), (4, records4)):
            report = even_odd_census(n, records=records)
            assert report.onto
            assert report.fibers_at_most_two


def test_c12_extremal_codes(capsys, classified):
    with criterion(capsys, "C12", "extremal class counts and weight bounds"):
        for n, want_count, want_d in (
            (3, 1, 4),
            (4, 2, 4),
            (5, 5, 4),
            (6, 1, 6),
            (7, 2, 6),
        ):
            records = find_extremal(
                n, even_only=True, records=classified(n, True)[0]
            )
            assert len(records) == want_count
            assert all(rec.min_ewt == want_d for rec in records)
        for n in range(1, 7):
            for rec in classified(n)[0]:
                assert rec.min_ewt <= n + 1
        for n in range(1, 8):
            for rec in classified(n, True)[0]:
                assert rec.min_ewt <= 2 * (n // 3) + 2