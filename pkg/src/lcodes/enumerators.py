"""Weight enumerators and the transform relating a code to its dual.

Polynomials are exact: coefficients are ints or Fractions, terms are stored
by exponent tuple.  Rendering is deterministic: terms appear in graded
lexicographic order (higher total degree first, then exponent tuple
descending), joined with ' + ' / ' - ', with '*' between factors and '^' for
powers, e.g. ``x^3 + 3*x*z^2 + 3*y^2*z + z^3``.

Enumerator conventions for a code C of length n:

  * complete enumerator, variables (p, q, r, s): one term per codeword with
    exponents counting the symbols 0, 1, w, W.
  * symmetrized enumerator, variables (x, y, z): x tracks zeros, y the
    symbol 1, z the two norm-2 symbols together.
  * Hamming enumerator, variables (u, v): v tracks nonzero coordinates.
  * Euclidean enumerator, variables (a, b): degree 2n, b's exponent is the
    Euclidean weight.
"""

from __future__ import annotations

from fractions import Fraction

from .klein import LcodeError, ewt, hwt, symbols_of
from .codes import LinearCode

__all__ = [
    "Polynomial",
    "cwe",
    "swe",
    "hamming_we",
    "euclid_we",
    "swe_from_cwe",
    "hamming_from_swe",
    "euclid_from_swe",
    "macwilliams_hamming",
    "macwilliams_swe",
    "macwilliams_swe_inverse",
]


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Polynomial:
    """Multivariate polynomial with exact coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        object.__setattr__(self, "vars", tuple(variables))
        clean = {}
        if terms:
            for expo, coeff in (
                terms.items() if isinstance(terms, dict) else terms
            ):
                coeff = _norm_coeff(coeff)
                if coeff:
                    expo = tuple(expo)
                    if len(expo) != len(self.vars):
                        raise LcodeError("exponent tuple has wrong arity")
                    clean[expo] = clean.get(expo, 0) + coeff
        object.__setattr__(
            self, "terms", {e: c for e, c in clean.items() if c}
        )

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        expo = [0] * len(variables)
        expo[variables.index(name)] = 1
        return cls(variables, {tuple(expo): 1})

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise LcodeError("polynomials over different variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(
                self.vars, {e: c * other for e, c in self.terms.items()}
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise LcodeError("negative polynomial power")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        inv = Fraction(1, 1) / Fraction(scalar)
        return Polynomial(
            self.vars, {e: _norm_coeff(c * inv) for e, c in self.terms.items()}
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.vars, other)
        return (
            isinstance(other, Polynomial)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    # -- calculus and substitution -------------------------------------------

    def substitute(self, images: dict) -> "Polynomial":
        """Substitute polynomials for variables (all sharing one var set)."""
        target_vars = None
        for img in images.values():
            target_vars = img.vars
            break
        if target_vars is None:
            raise LcodeError("empty substitution")
        imgs = []
        for name in self.vars:
            if name in images:
                imgs.append(images[name])
            else:
                imgs.append(Polynomial.variable(target_vars, name))
        result = Polynomial(target_vars, {})
        for expo, coeff in self.terms.items():
            term = Polynomial.constant(target_vars, coeff)
            for img, k in zip(imgs, expo):
                if k:
                    term = term * img**k
            result = result + term
        return result

    def evaluate(self, values: dict):
        """Evaluate at numeric values for all variables."""
        total = 0
        for expo, coeff in self.terms.items():
            v = coeff
            for name, k in zip(self.vars, expo):
                if k:
                    v *= values[name] ** k
            total += v
        return total

    def diff(self, name: str) -> "Polynomial":
        idx = self.vars.index(name)
        terms = {}
        for expo, coeff in self.terms.items():
            k = expo[idx]
            if k:
                e = list(expo)
                e[idx] = k - 1
                e = tuple(e)
                terms[e] = terms.get(e, 0) + coeff * k
        return Polynomial(self.vars, terms)

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, expo) -> "int | Fraction":
        return self.terms.get(tuple(expo), 0)

    def is_integral(self) -> bool:
        return all(not isinstance(c, Fraction) for c in self.terms.values())

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        ordered = sorted(
            self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True
        )
        pieces = []
        for idx, (expo, coeff) in enumerate(ordered):
            factors = []
            for name, k in zip(self.vars, expo):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if idx == 0:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Enumerators of codes.
# ---------------------------------------------------------------------------

CWE_VARS = ("p", "q", "r", "s")
SWE_VARS = ("x", "y", "z")
HAMMING_VARS = ("u", "v")
EUCLID_VARS = ("a", "b")


def cwe(code: LinearCode) -> Polynomial:
    """Complete weight enumerator in variables p, q, r, s."""
    terms: dict[tuple, int] = {}
    n = code.n
    for w in code.codewords():
        counts = [0, 0, 0, 0]
        for s in symbols_of(w, n):
            counts[s] += 1
        e = tuple(counts)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(CWE_VARS, terms)


def swe(code: LinearCode) -> Polynomial:
    """Symmetrized weight enumerator in variables x, y, z."""
    terms: dict[tuple, int] = {}
    n = code.n
    for w in code.codewords():
        ones = 0
        heavy = 0
        for s in symbols_of(w, n):
            if s == 1:
                ones += 1
            elif s:
                heavy += 1
        e = (n - ones - heavy, ones, heavy)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(SWE_VARS, terms)


def hamming_we(code: LinearCode) -> Polynomial:
    """Hamming weight enumerator in variables u, v."""
    terms: dict[tuple, int] = {}
    n = code.n
    for w in code.codewords():
        h = hwt(w)
        e = (n - h, h)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(HAMMING_VARS, terms)


def euclid_we(code: LinearCode) -> Polynomial:
    """Euclidean weight enumerator in variables a, b (degree 2n)."""
    terms: dict[tuple, int] = {}
    n = code.n
    for w in code.codewords():
        e_wt = ewt(w)
        e = (2 * n - e_wt, e_wt)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(EUCLID_VARS, terms)


# -- specializations ---------------------------------------------------------


def swe_from_cwe(p: Polynomial) -> Polynomial:
    """Collapse the two norm-2 symbol counts of a complete enumerator."""
    terms: dict[tuple, object] = {}
    for (i, j, k, l), c in p.terms.items():
        e = (i, j, k + l)
        terms[e] = terms.get(e, 0) + c
    return Polynomial(SWE_VARS, terms)


def hamming_from_swe(p: Polynomial) -> Polynomial:
    """Collapse a symmetrized enumerator to the Hamming enumerator."""
    terms: dict[tuple, object] = {}
    for (i, j, k), c in p.terms.items():
        e = (i, j + k)
        terms[e] = terms.get(e, 0) + c
    return Polynomial(HAMMING_VARS, terms)


def euclid_from_swe(p: Polynomial) -> Polynomial:
    """Expand a symmetrized enumerator to the Euclidean enumerator."""
    terms: dict[tuple, object] = {}
    for (i, j, k), c in p.terms.items():
        # a zero contributes a^2, a 1 contributes a*b, a norm-2 symbol b^2
        e = (2 * i + j, j + 2 * k)
        terms[e] = terms.get(e, 0) + c
    return Polynomial(EUCLID_VARS, terms)


# -- dual transforms ----------------------------------------------------------


def macwilliams_hamming(w: Polynomial, code_size: int) -> Polynomial:
    """Hamming enumerator of the dual code from that of the code."""
    u = Polynomial.variable(HAMMING_VARS, "u")
    v = Polynomial.variable(HAMMING_VARS, "v")
    out = w.substitute({"u": u + 3 * v, "v": u - v}) / code_size
    if not out.is_integral():
        raise LcodeError("transform did not yield integer coefficients")
    return out


def _swe_transform(p: Polynomial, size: int) -> Polynomial:
    x = Polynomial.variable(SWE_VARS, "x")
    y = Polynomial.variable(SWE_VARS, "y")
    z = Polynomial.variable(SWE_VARS, "z")
    out = p.substitute(
        {"x": x + y + 2 * z, "y": x + y - 2 * z, "z": x - y}
    ) / size
    if not out.is_integral():
        raise LcodeError("transform did not yield integer coefficients")
    return out


def macwilliams_swe(p: Polynomial, code_size: int) -> Polynomial:
    """Symmetrized enumerator of the dual code from that of the code."""
    return _swe_transform(p, code_size)


def macwilliams_swe_inverse(p_dual: Polynomial, dual_size: int) -> Polynomial:
    """Recover the symmetrized enumerator of a code from its dual's."""
    return _swe_transform(p_dual, dual_size)
