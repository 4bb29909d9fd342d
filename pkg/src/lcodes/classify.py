"""Classification of self-dual codes up to equivalence.

The classifier walks the poset of self-orthogonal codes one F2 generator at
a time: the children of a self-orthogonal code X are the codes X + <v> for
nonzero cosets v + X inside the dual of X (restricted to quad-zero cosets
when classifying even codes; the restriction is well defined because X is
then even).  Every self-dual code contains a flag of self-orthogonal
subcodes, so all classes are reached.  Two prunings keep the search small:

  * cosets are fused into orbits under (generators of) the automorphism
    group of X before extending -- fusing with any subset of genuine
    automorphisms is safe because the surviving children are still
    canonicalized and deduplicated per level;
  * children are reduced to canonical form and deduplicated across all
    parents of the level.

Completeness is certified independently by the mass formula: the number of
distinct self-dual codes of length n is prod_{i=1..n} (2^i + 1), and
prod_{i=0..n-1} (2^i + 1) for even ones; each class contributes the size
of its equivalence orbit (group order / automorphism order).
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import Pool

from .klein import LcodeError, format_word, parse_word, quad
from .codes import LinearCode, reduce_mod, rref
from .enumerators import euclid_we, swe
from .symmetry import canonicalize_basis, max_length
from .klein import group_generators, group_order

__all__ = [
    "ClassRecord",
    "MassReport",
    "EvenOddReport",
    "classify_self_dual",
    "expected_mass",
    "mass_check",
    "census_by_min_weight",
    "indecomposable_count",
    "distinct_self_dual_count",
    "even_odd_census",
    "extremal_bound",
    "sharpened_extremal_bound",
    "find_extremal",
    "record_to_line",
    "parse_db_line",
]

_FUSION_GEN_CAP = 48


@dataclass(frozen=True)
class ClassRecord:
    """One equivalence class of self-dual codes."""

    n: int
    even: bool
    min_ewt: int
    aut_order: int
    orbit_size: int
    basis: tuple[int, ...]
    swe: str
    ew: str
    decomposition: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def code(self) -> LinearCode:
        return LinearCode("L", self.n, self.basis, _reduced=True)

    def is_indecomposable(self) -> bool:
        return len(self.decomposition) == 1


@dataclass(frozen=True)
class MassReport:
    n: int
    even_only: bool
    class_count: int
    expected: int
    total: int
    ok: bool


def expected_mass(n: int, even_only: bool = False) -> int:
    """Number of distinct self-dual codes of length n."""
    total = 1
    exponents = range(0, n) if even_only else range(1, n + 1)
    for i in exponents:
        total *= (1 << i) + 1
    return total


def _complement_generators(basis, dual_basis):
    """Rows extending the code's basis to a basis of its dual."""
    acc = tuple(basis)
    out = []
    for v in dual_basis:
        grown = rref(acc + (v,))
        if len(grown) > len(acc):
            out.append(v)
            acc = grown
    return out


def _conjugated_generators(gens, transporter):
    t_inv = transporter.inverse()
    out = []
    for a in gens[:_FUSION_GEN_CAP]:
        out.append(transporter.compose(a).compose(t_inv))
    return tuple(out)


def _fuse_cosets(reps, basis, gens):
    """Orbit representatives of coset reps under automorphism generators."""
    rep_set = set(reps)
    out = []
    unseen = set(rep_set)
    for start in sorted(rep_set):
        if start not in unseen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            w = frontier.pop()
            for g in gens:
                im = reduce_mod(g.apply(w), basis)
                if im not in orbit:
                    if im not in rep_set:
                        raise AssertionError("coset orbit left the candidate set")
                    orbit.add(im)
                    frontier.append(im)
        unseen -= orbit
        out.append(min(orbit))
    return out


def _canonicalize_child(args):
    flavor, n, basis = args
    canon, transporter, aut_order, gens, orbit = canonicalize_basis(flavor, n, basis)
    return canon, transporter, aut_order, gens, orbit


def classify_self_dual(
    n: int, even_only: bool = False, threads: int = 1, progress=None
) -> list[ClassRecord]:
    """All equivalence classes of (even) self-dual codes of length n,
    sorted by minimum Euclidean weight descending, then canonical basis."""
    if n < 1:
        raise LcodeError("length must be at least 1")
    if n > max_length():
        raise LcodeError(
            f"length {n} exceeds the classification limit "
            f"(set LCODES_MAX_LENGTH to raise it)"
        )
    # level storage: canonical basis -> (aut generators for that basis, order)
    zero = LinearCode("L", n, [])
    level = {(): (tuple(group_generators(n, "L")), group_order(n, "L"))}
    for r in range(n):
        children_raw = set()
        for basis, (gens, _order) in level.items():
            code = LinearCode("L", n, basis, _reduced=True)
            dual_rows = code.dual().basis
            comp = _complement_generators(basis, dual_rows)
            reps = []
            for mask in range(1, 1 << len(comp)):
                v = 0
                m = mask
                idx = 0
                while m:
                    if m & 1:
                        v ^= comp[idx]
                    m >>= 1
                    idx += 1
                rep = reduce_mod(v, basis)
                if even_only and quad(rep) != 0:
                    continue
                reps.append(rep)
            for rep in _fuse_cosets(reps, basis, gens):
                children_raw.add(rref(basis + (rep,)))
        next_level = {}
        ordered = sorted(children_raw)
        jobs = [("L", n, b) for b in ordered]
        if threads > 1 and len(jobs) > 8:
            with Pool(threads) as pool:
                results = pool.map(_canonicalize_child, jobs, chunksize=16)
        else:
            results = [_canonicalize_child(j) for j in jobs]
        for (canon, transporter, aut_order, gens, _orbit) in results:
            if canon not in next_level:
                next_level[canon] = (
                    _conjugated_generators(gens, transporter),
                    aut_order,
                )
        level = next_level
        if progress:
            progress(r + 1, len(level))
    records = []
    for basis, (_gens, aut_order) in level.items():
        code = LinearCode("L", n, basis, _reduced=True)
        records.append(_build_record(code, aut_order))
    records.sort(key=lambda rec: (-rec.min_ewt, rec.basis))
    return records


def _build_record(code: LinearCode, aut_order: int) -> ClassRecord:
    comp_sigs = []
    for supp, comp in code.decompose():
        if comp.basis:
            canon, *_ = canonicalize_basis(comp.flavor, comp.n, comp.basis)
        else:
            canon = ()
        comp_sigs.append((len(supp), canon))
    comp_sigs.sort()
    return ClassRecord(
        n=code.n,
        even=code.is_even(),
        min_ewt=code.min_ewt(),
        aut_order=aut_order,
        orbit_size=group_order(code.n, "L") // aut_order,
        basis=code.basis,
        swe=str(swe(code)),
        ew=str(euclid_we(code)),
        decomposition=tuple(comp_sigs),
    )


def mass_check(records, n: int, even_only: bool = False) -> MassReport:
    """Verify the classification against the mass formula."""
    expected = expected_mass(n, even_only)
    total = sum(rec.orbit_size for rec in records)
    return MassReport(
        n=n,
        even_only=even_only,
        class_count=len(records),
        expected=expected,
        total=total,
        ok=(total == expected),
    )


def census_by_min_weight(records) -> dict[int, int]:
    out: dict[int, int] = {}
    for rec in records:
        out[rec.min_ewt] = out.get(rec.min_ewt, 0) + 1
    return dict(sorted(out.items()))


def indecomposable_count(records) -> int:
    return sum(1 for rec in records if rec.is_indecomposable())


def distinct_self_dual_count(n: int, even_only: bool = False) -> int:
    """Exhaustive count of distinct (not up to equivalence) self-dual codes.

    Independent of the classification machinery: walks the same poset of
    self-orthogonal codes but deduplicates by codeword set instead of
    fusing by symmetry.  Exponential; guarded to short lengths.
    """
    if n > 4:
        raise LcodeError("distinct count is exhaustive; lengths above 4 refused")
    level = {()}
    for _r in range(n):
        nxt = set()
        for basis in level:
            code = LinearCode("L", n, basis, _reduced=True)
            comp = _complement_generators(basis, code.dual().basis)
            for mask in range(1, 1 << len(comp)):
                v = 0
                m = mask
                idx = 0
                while m:
                    if m & 1:
                        v ^= comp[idx]
                    m >>= 1
                    idx += 1
                rep = reduce_mod(v, basis)
                if even_only and quad(rep) != 0:
                    continue
                nxt.add(rref(basis + (rep,)))
        level = nxt
    return len(level)


# ---------------------------------------------------------------------------
# The two-way traffic between even and non-even classes.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EvenOddReport:
    n: int
    pair_count: int
    fiber_sizes: dict
    onto: bool
    fibers_at_most_two: bool
    subcode_counts: dict
    subcode_ok: bool


def even_odd_census(n: int, records=None) -> EvenOddReport:
    """Cross-check the correspondence between even and non-even classes.

    Pairs (even class, coset orbit) map onto non-even classes with fibers
    of size one or two; and for each k, orbits of embedded even binary
    blocks of size k inside even classes biject with self-dual classes of
    length n - k.
    """
    from .codes import even_odd_transfer

    if records is None:
        records = classify_self_dual(n)
    evens = [rec for rec in records if rec.even]
    odds = {rec.basis for rec in records if not rec.even}

    gens_of = {}
    for rec in evens:
        canon, _t, _order, gens, _orbit = canonicalize_basis("L", n, rec.basis)
        if canon != rec.basis:
            raise AssertionError("classification records must be canonical")
        gens_of[rec.basis] = gens

    fiber: dict[tuple, int] = {}
    pair_count = 0
    for rec in evens:
        code = rec.code
        basis = rec.basis
        gens = gens_of[basis]
        full = [1 << b for b in range(2 * n)]
        comp = _complement_generators(basis, rref(full))
        reps = []
        for mask in range(1, 1 << len(comp)):
            v = 0
            m = mask
            idx = 0
            while m:
                if m & 1:
                    v ^= comp[idx]
                m >>= 1
                idx += 1
            reps.append(reduce_mod(v, basis))
        for rep in _fuse_cosets(reps, basis, gens):
            pair_count += 1
            derived = even_odd_transfer(code, rep)
            canon_d, *_ = canonicalize_basis("L", n, derived.basis)
            fiber[canon_d] = fiber.get(canon_d, 0) + 1

    onto = set(fiber) == odds
    fibers_ok = all(v in (1, 2) for v in fiber.values())

    # embedded even binary blocks of every size k = 1..n
    subcode_counts = {}
    subcode_ok = True
    for k in range(1, n + 1):
        total = 0
        for rec in evens:
            valid = [
                subset
                for subset in _subsets(n, k)
                if _delta_block_inside(rec.basis, subset, n)
            ]
            total += _count_subset_orbits(valid, gens_of[rec.basis])
        if n - k == 0:
            expected = 1
        else:
            expected = len(classify_self_dual(n - k))
        subcode_counts[k] = (total, expected)
        if total != expected:
            subcode_ok = False

    return EvenOddReport(
        n=n,
        pair_count=pair_count,
        fiber_sizes=fiber,
        onto=onto,
        fibers_at_most_two=fibers_ok,
        subcode_counts=subcode_counts,
        subcode_ok=subcode_ok,
    )


def _subsets(n: int, k: int):
    from itertools import combinations

    return combinations(range(n), k)


def _delta_block_inside(basis, subset, n: int) -> bool:
    """Whether all adjacent 11 pairs on the subset lie in the code."""
    subset = tuple(subset)
    for a, b in zip(subset, subset[1:]):
        word = (1 << (2 * (n - 1 - a))) | (1 << (2 * (n - 1 - b)))
        if reduce_mod(word, basis) != 0:
            return False
    return True


def _count_subset_orbits(subsets, gens) -> int:
    unseen = {tuple(s) for s in subsets}
    count = 0
    while unseen:
        start = min(unseen)
        orbit = {start}
        frontier = [start]
        while frontier:
            s = frontier.pop()
            for g in gens:
                im = tuple(sorted(g.perm[i] for i in s))
                if im not in orbit:
                    orbit.add(im)
                    frontier.append(im)
        if not orbit <= unseen:
            raise AssertionError("subset orbit left the valid set")
        unseen -= orbit
        count += 1
    return count


# ---------------------------------------------------------------------------
# Extremal codes.
# ---------------------------------------------------------------------------


def extremal_bound(n: int, even_only: bool = False) -> int:
    """Upper bound for the minimum Euclidean weight of a self-dual code."""
    if even_only:
        return 2 * (n // 3) + 2
    return n + 1


def sharpened_extremal_bound(n: int) -> int:
    """Refined bound for even codes, one step higher when n = 2 mod 3."""
    if n % 3 == 2:
        return 2 * (n // 3) + 3
    return 2 * (n // 3) + 2


def find_extremal(n: int, even_only: bool = False, records=None) -> list[ClassRecord]:
    """Classes meeting the extremal bound exactly."""
    if records is None:
        records = classify_self_dual(n, even_only=even_only)
    elif even_only:
        records = [rec for rec in records if rec.even]
    bound = extremal_bound(n, even_only)
    return [rec for rec in records if rec.min_ewt == bound]


# ---------------------------------------------------------------------------
# Database lines.
# ---------------------------------------------------------------------------


def record_to_line(rec: ClassRecord) -> str:
    words = ",".join(format_word(b, rec.n, "L") for b in rec.basis)
    return (
        f"{rec.n};{int(rec.even)};{rec.min_ewt};{rec.aut_order};"
        f"{rec.orbit_size};{words};{rec.swe};{rec.ew}"
    )


def parse_db_line(line: str) -> ClassRecord:
    parts = line.rstrip("\n").split(";")
    if len(parts) != 8:
        raise LcodeError(f"bad database line: {line!r}")
    n = int(parts[0])
    words = tuple(
        parse_word(w, "L") for w in parts[5].split(",") if w
    )
    code = LinearCode("L", n, words)
    comp_sigs = tuple(
        (len(supp), comp.basis) for supp, comp in code.decompose()
    )
    return ClassRecord(
        n=n,
        even=bool(int(parts[1])),
        min_ewt=int(parts[2]),
        aut_order=int(parts[3]),
        orbit_size=int(parts[4]),
        basis=code.basis,
        swe=parts[6],
        ew=parts[7],
        decomposition=comp_sigs,
    )
