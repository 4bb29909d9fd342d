"""The invariant ring containing symmetrized enumerators of self-dual codes.

Two linear substitutions on the variables (x, y, z) pin the ring down:

  * the dual transform S: x -> x/2 + y/2 + z, y -> x/2 + y/2 - z,
    z -> x/2 - y/2 (an involution fixing enumerators of self-dual codes);
  * the sign flip T: y -> -y (fixing enumerators of even codes, whose
    words all carry an even number of 1-symbols).

Together S and T generate a group of order six.  Its invariant ring is free
on generators of degrees 1, 2, 3, realized by the enumerators of the named
codes Xi1, DeltaPlus_2 and Upsilon3; dimensions of the homogeneous pieces
are counted by partitions into parts of size at most 3.  Enumerators of
not-necessarily-even self-dual codes form the free ring on x+y, x+z and
x^2 + y^2 + 2z^2 (degrees 1, 1, 2), and Hamming enumerators of self-dual
codes live in the free ring on u+v and u^2 + 3v^2.

All arithmetic is exact (Fractions); decompositions are obtained by solving
the linear system on coefficients and are unique because the generators are
algebraically independent.
"""

from __future__ import annotations

from fractions import Fraction

from .klein import LcodeError
from .enumerators import (
    EUCLID_VARS,
    HAMMING_VARS,
    SWE_VARS,
    Polynomial,
)

__all__ = [
    "dual_substitution",
    "sign_substitution",
    "invariance_group",
    "is_selfdual_invariant",
    "molien_series",
    "even_generators",
    "general_generators",
    "hamming_generators",
    "decompose_even",
    "decompose_general",
    "decompose_hamming",
    "expand_even",
    "expand_general",
    "expand_hamming",
    "verify_ew_relation",
    "jacobian_det",
]

_HALF = Fraction(1, 2)

# Rows are images of x, y, z.
_S_MATRIX = (
    (_HALF, _HALF, Fraction(1)),
    (_HALF, _HALF, Fraction(-1)),
    (_HALF, -_HALF, Fraction(0)),
)
_T_MATRIX = (
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(-1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1)),
)


def _apply_matrix(p: Polynomial, matrix) -> Polynomial:
    names = p.vars
    images = {}
    for i, name in enumerate(names):
        img = Polynomial(names, {})
        for j, other in enumerate(names):
            img = img + Polynomial.variable(names, other) * matrix[i][j]
        images[name] = img
    return p.substitute(images)


def dual_substitution(p: Polynomial) -> Polynomial:
    """Apply the involution S to a polynomial in (x, y, z)."""
    if p.vars != SWE_VARS:
        raise LcodeError("expected a polynomial in (x, y, z)")
    return _apply_matrix(p, _S_MATRIX)


def sign_substitution(p: Polynomial) -> Polynomial:
    """Apply the sign flip T (y -> -y)."""
    if p.vars != SWE_VARS:
        raise LcodeError("expected a polynomial in (x, y, z)")
    return _apply_matrix(p, _T_MATRIX)


def _mat_mul(a, b):
    size = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size))
        for i in range(size)
    )


def invariance_group():
    """All matrices in the group generated by S and T (six elements)."""
    seen = {_S_MATRIX, _T_MATRIX}
    frontier = [_S_MATRIX, _T_MATRIX]
    while frontier:
        m = frontier.pop()
        for g in (_S_MATRIX, _T_MATRIX):
            prod = _mat_mul(g, m)
            if prod not in seen:
                seen.add(prod)
                frontier.append(prod)
    if len(seen) != 6:
        raise AssertionError("substitution group does not have order 6")
    return tuple(sorted(seen))


def is_selfdual_invariant(p: Polynomial) -> bool:
    """Whether a polynomial in (x, y, z) is fixed by both S and T."""
    return dual_substitution(p) == p and sign_substitution(p) == p


def molien_series(up_to: int) -> list[int]:
    """Dimensions of the invariant ring's graded pieces, degrees 0..up_to.

    Computed by averaging the series 1/det(1 - t*A) over the group and
    checked against the closed form: the count of partitions of the degree
    into parts of size at most 3.
    """
    total = [Fraction(0)] * (up_to + 1)
    group = invariance_group()
    for mat in group:
        c1 = mat[0][0] + mat[1][1] + mat[2][2]
        c2 = (
            mat[0][0] * mat[1][1]
            - mat[0][1] * mat[1][0]
            + mat[0][0] * mat[2][2]
            - mat[0][2] * mat[2][0]
            + mat[1][1] * mat[2][2]
            - mat[1][2] * mat[2][1]
        )
        c3 = (
            mat[0][0] * (mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1])
            - mat[0][1] * (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0])
            + mat[0][2] * (mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0])
        )
        # 1/det(1 - tA) where det(1 - tA) = 1 - c1 t + c2 t^2 - c3 t^3
        series = [Fraction(1)]
        for t in range(1, up_to + 1):
            val = c1 * series[t - 1]
            if t >= 2:
                val -= c2 * series[t - 2]
            if t >= 3:
                val += c3 * series[t - 3]
            series.append(val)
        for t in range(up_to + 1):
            total[t] += series[t]
    averaged = []
    for t in range(up_to + 1):
        v = total[t] / len(group)
        if v.denominator != 1:
            raise AssertionError("non-integral coefficient in averaged series")
        averaged.append(int(v))

    # closed form: partitions into parts 1, 2, 3
    counts = [1] + [0] * up_to
    for part in (1, 2, 3):
        for t in range(part, up_to + 1):
            counts[t] += counts[t - part]
    if averaged != counts:
        raise AssertionError("averaged series disagrees with the closed form")
    return averaged


# ---------------------------------------------------------------------------
# Ring generators and decompositions.
# ---------------------------------------------------------------------------


def _swe_poly(terms) -> Polynomial:
    return Polynomial(SWE_VARS, terms)


def even_generators() -> tuple[Polynomial, Polynomial, Polynomial]:
    """Generators of degrees 1, 2, 3 for enumerators of even self-dual codes."""
    g1 = _swe_poly({(1, 0, 0): 1, (0, 0, 1): 1})
    g2 = _swe_poly({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 2})
    g3 = _swe_poly({(3, 0, 0): 1, (1, 0, 2): 3, (0, 2, 1): 3, (0, 0, 3): 1})
    return g1, g2, g3


def general_generators() -> tuple[Polynomial, Polynomial, Polynomial]:
    """Generators of degrees 1, 1, 2 for enumerators of all self-dual codes."""
    g1 = _swe_poly({(1, 0, 0): 1, (0, 1, 0): 1})
    g2 = _swe_poly({(1, 0, 0): 1, (0, 0, 1): 1})
    g3 = _swe_poly({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 2})
    return g1, g2, g3


def hamming_generators() -> tuple[Polynomial, Polynomial]:
    """Generators of degrees 1, 2 for Hamming enumerators of self-dual codes."""
    g1 = Polynomial(HAMMING_VARS, {(1, 0): 1, (0, 1): 1})
    g2 = Polynomial(HAMMING_VARS, {(2, 0): 1, (0, 2): 3})
    return g1, g2


_EVEN_NAMES = ("Xi1", "DeltaPlus2", "Upsilon3")
_GENERAL_NAMES = ("Gamma1", "Xi1", "DeltaPlus2")
_HAMMING_NAMES = ("Gamma1", "DeltaPlus2")


def _weighted_exponents(weights, degree):
    """All exponent tuples e with sum(e_i * w_i) = degree."""
    out = []

    def rec(idx, remaining, prefix):
        if idx == len(weights):
            if remaining == 0:
                out.append(tuple(prefix))
            return
        w = weights[idx]
        for e in range(remaining // w + 1):
            rec(idx + 1, remaining - e * w, prefix + [e])

    rec(0, degree, [])
    return out


def _decompose(p: Polynomial, gens, names) -> Polynomial:
    if not p.is_homogeneous():
        raise LcodeError("decomposition requires a homogeneous polynomial")
    degree = p.degree()
    weights = [g.degree() for g in gens]
    combos = _weighted_exponents(weights, degree)
    products = []
    for combo in combos:
        prod = Polynomial.constant(p.vars, 1)
        for g, e in zip(gens, combo):
            if e:
                prod = prod * g**e
        products.append(prod)
    monomials = sorted(
        {m for prod in products for m in prod.terms} | set(p.terms)
    )
    # rows: one per monomial; columns: one per combo; solve A c = target.
    rows = [
        [Fraction(prod.terms.get(m, 0)) for prod in products]
        + [Fraction(p.terms.get(m, 0))]
        for m in monomials
    ]
    ncols = len(combos)
    pivot_of_col = {}
    r = 0
    for col in range(ncols):
        pivot = next(
            (i for i in range(r, len(rows)) if rows[i][col] != 0), None
        )
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivot_of_col[col] = r
        r += 1
    if len(pivot_of_col) != ncols:
        raise LcodeError("generator products are unexpectedly dependent")
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            raise LcodeError("polynomial does not lie in the invariant ring")
    coeffs = {combo: rows[pivot_of_col[c]][ncols] for c, combo in enumerate(combos)}
    return Polynomial(names, coeffs)


def decompose_even(p: Polynomial) -> Polynomial:
    """Write a polynomial in the even self-dual ring, as a polynomial in
    the generator symbols; raises if it does not lie in the ring."""
    return _decompose(p, even_generators(), _EVEN_NAMES)


def decompose_general(p: Polynomial) -> Polynomial:
    return _decompose(p, general_generators(), _GENERAL_NAMES)


def decompose_hamming(p: Polynomial) -> Polynomial:
    return _decompose(p, hamming_generators(), _HAMMING_NAMES)


def _expand(d: Polynomial, gens, names) -> Polynomial:
    if d.vars != names:
        raise LcodeError(f"expected a polynomial in {names}")
    target = gens[0].vars
    result = Polynomial(target, {})
    for expo, coeff in d.terms.items():
        term = Polynomial.constant(target, coeff)
        for g, e in zip(gens, expo):
            if e:
                term = term * g**e
        result = result + term
    return result


def expand_even(d: Polynomial) -> Polynomial:
    return _expand(d, even_generators(), _EVEN_NAMES)


def expand_general(d: Polynomial) -> Polynomial:
    return _expand(d, general_generators(), _GENERAL_NAMES)


def expand_hamming(d: Polynomial) -> Polynomial:
    return _expand(d, hamming_generators(), _HAMMING_NAMES)


def verify_ew_relation() -> bool:
    """Check the degree-12 algebraic relation tying the Euclidean
    enumerators P, Q, R of Xi1, DeltaPlus_2 and Upsilon3 together:
    2R^2 = -11P^6 + 36P^4Q - 5P^3R - 36P^2Q^2 + 9PQR + 9Q^3."""
    P = Polynomial(EUCLID_VARS, {(2, 0): 1, (0, 2): 1})
    Q = Polynomial(EUCLID_VARS, {(4, 0): 1, (2, 2): 1, (0, 4): 2})
    R = Polynomial(EUCLID_VARS, {(6, 0): 1, (2, 4): 6, (0, 6): 1})
    lhs = 2 * R**2
    rhs = (
        -11 * P**6
        + 36 * P**4 * Q
        - 5 * P**3 * R
        - 36 * P**2 * Q**2
        + 9 * P * Q * R
        + 9 * Q**3
    )
    return lhs == rhs


def jacobian_det() -> Polynomial:
    """Jacobian determinant of the three even-ring generators with respect
    to (x, y, z); nonzero, witnessing their algebraic independence."""
    gens = even_generators()
    partials = [[g.diff(v) for v in SWE_VARS] for g in gens]
    det = Polynomial(SWE_VARS, {})
    for j, sign in ((0, 1), (1, -1), (2, 1)):
        cols = [c for c in range(3) if c != j]
        minor = (
            partials[1][cols[0]] * partials[2][cols[1]]
            - partials[1][cols[1]] * partials[2][cols[0]]
        )
        det = det + sign * (partials[0][j] * minor)
    return det
