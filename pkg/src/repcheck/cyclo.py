"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are kept in a canonical form: coefficients of the power basis
1, z, ..., z^(phi(n)-1) of Q(zeta_n) modulo the n-th cyclotomic
polynomial, with n reduced to the minimal conductor of the value.
Equality is therefore syntactic, which the character-table code relies
on for conjugate pairing and Galois orbits.  No floating point is used
anywhere except in the optional numeric cross-check helpers.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

Rat = int | Fraction


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    r, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            r *= p - 1
            m //= p
            while m % p == 0:
                r *= p
                m //= p
        p += 1
    if m > 1:
        r *= m - 1
    return r


@lru_cache(maxsize=None)
def _prime_divisors(n: int) -> tuple[int, ...]:
    out = []
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (densely coded, index = degree)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        c //= den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert all(c == 0 for c in num)
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, monic, index = degree."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _pow_table(n: int) -> tuple[tuple[int, ...], ...]:
    """x^j mod Phi_n for 0 <= j < n, over the integers."""
    phi = _phi(n)
    poly = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        nxt = [0] + cur[: phi - 1]
        lead = cur[phi - 1]
        if lead:
            for i in range(phi):
                nxt[i] -= lead * poly[i]
        cur = nxt
    return tuple(rows)


def _reduce_terms(n: int, terms: dict[int, Fraction]) -> list[Fraction]:
    """Reduce a sparse sum of c_j * zeta_n^j to power-basis coefficients."""
    phi = _phi(n)
    table = _pow_table(n)
    out = [Fraction(0)] * phi
    for j, c in terms.items():
        if not c:
            continue
        row = table[j % n]
        for i in range(phi):
            if row[i]:
                out[i] += c * row[i]
    return out


@lru_cache(maxsize=None)
def _descent_solver(n: int, d: int):
    """Echelon data for re-expressing a value of Q(zeta_n) over Q(zeta_d), d | n.

    Returns (pivots, rows) from Gaussian elimination on the phi(n) x phi(d)
    matrix whose columns are zeta_d^i embedded into the power basis of n.
    """
    phi_n, phi_d = _phi(n), _phi(d)
    step = n // d
    cols = [_reduce_terms(n, {(step * i) % n: Fraction(1)}) for i in range(phi_d)]
    # augmented elimination: track how each column combines.
    mat = [[cols[c][r] for c in range(phi_d)] for r in range(phi_n)]
    return mat


def _solve_descent(n: int, d: int, vec: list[Fraction]) -> list[Fraction] | None:
    mat = _descent_solver(n, d)
    phi_n, phi_d = len(mat), len(mat[0]) if mat else 0
    # Gaussian elimination on [mat | vec]
    a = [row[:] + [vec[r]] for r, row in enumerate(mat)]
    piv_cols = []
    r = 0
    for c in range(phi_d):
        pr = next((i for i in range(r, phi_n) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / Fraction(a[r][c])
        a[r] = [x * inv for x in a[r]]
        for i in range(phi_n):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
        if r == phi_n:
            break
    sol = [Fraction(0)] * phi_d
    for i, c in enumerate(piv_cols):
        sol[c] = a[i][phi_d]
    # consistency check on non-pivot rows
    for i in range(r, phi_n):
        if a[i][phi_d]:
            return None
    return sol


def _galois_vec(n: int, coeffs: list[Fraction], m: int) -> list[Fraction]:
    terms: dict[int, Fraction] = {}
    for i, c in enumerate(coeffs):
        if c:
            j = (i * m) % n
            terms[j] = terms.get(j, Fraction(0)) + c
    return _reduce_terms(n, terms)


def _minimize(n: int, coeffs: list[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    """Reduce to minimal conductor."""
    while n > 1:
        if all(c == 0 for c in coeffs[1:]):
            return 1, (coeffs[0],)
        done = True
        for p in _prime_divisors(n):
            d = n // p
            # Galois group of Q(zeta_n)/Q(zeta_d): t = 1 (mod d), gcd(t, n) = 1
            fixed = True
            for k in range(1, p):
                t = 1 + k * d
                if gcd(t, n) != 1:
                    continue
                if _galois_vec(n, coeffs, t) != coeffs:
                    fixed = False
                    break
            if not fixed:
                continue
            sol = _solve_descent(n, d, coeffs)
            if sol is None:
                continue
            n, coeffs = d, sol
            done = False
            break
        if done:
            break
    return n, tuple(coeffs)


class Cyclotomic:
    """An exact element of some cyclotomic field, in canonical form."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: tuple[Fraction, ...], _canonical: bool = False):
        if not _canonical:
            raise TypeError("use the constructors: rational(), zeta(), from_terms()")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def rational(q: Rat) -> "Cyclotomic":
        return Cyclotomic(1, (Fraction(q),), _canonical=True)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        if n < 1:
            raise ValueError("conductor must be positive")
        return Cyclotomic.from_terms(n, {k % n: Fraction(1)})

    @staticmethod
    def from_terms(n: int, terms: dict[int, Rat]) -> "Cyclotomic":
        clean = {j % n: Fraction(c) for j, c in terms.items() if c}
        if not clean:
            return Cyclotomic.rational(0)
        # zeta_n^j = zeta_(n/g)^(j/g) for g dividing every exponent:
        # work in the smallest such field so that stating a value at a
        # large common conductor stays cheap
        g = n
        for j in clean:
            g = gcd(g, j)
            if g == 1:
                break
        if g > 1:
            n //= g
            clean = {j // g: c for j, c in clean.items()}
        vec = _reduce_terms(n, clean)
        m, coeffs = _minimize(n, vec)
        return Cyclotomic(m, coeffs, _canonical=True)

    # -- properties ------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.n

    def is_zero(self) -> bool:
        return self.n == 1 and self.coeffs[0] == 0

    def is_rational(self) -> bool:
        return self.n == 1

    def as_rational(self) -> Fraction | None:
        return self.coeffs[0] if self.n == 1 else None

    def is_integral_rational(self) -> bool:
        return self.n == 1 and self.coeffs[0].denominator == 1

    def is_real(self) -> bool:
        return self.conjugate() == self

    # -- arithmetic ------------------------------------------------------

    def _terms_at(self, m: int) -> dict[int, Fraction]:
        """Value as sparse zeta_m-power terms (m a multiple of the conductor)."""
        assert m % self.n == 0
        step = m // self.n
        return {i * step: c for i, c in enumerate(self.coeffs) if c}

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1 and other.n == 1:
            return Cyclotomic.rational(self.coeffs[0] + other.coeffs[0])
        m = self.n * other.n // gcd(self.n, other.n)
        terms = self._terms_at(m)
        for j, c in other._terms_at(m).items():
            terms[j] = terms.get(j, Fraction(0)) + c
        return Cyclotomic.from_terms(m, terms)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-c for c in self.coeffs), _canonical=True)

    def __sub__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.n == 1:
            q = other.coeffs[0]
            if q == 0:
                return Cyclotomic.rational(0)
            return Cyclotomic(self.n, tuple(c * q for c in self.coeffs), _canonical=True)
        if self.n == 1:
            return other * self
        m = self.n * other.n // gcd(self.n, other.n)
        a = self._terms_at(m)
        b = other._terms_at(m)
        terms: dict[int, Fraction] = {}
        for j1, c1 in a.items():
            for j2, c2 in b.items():
                j = (j1 + j2) % m
                terms[j] = terms.get(j, Fraction(0)) + c1 * c2
        return Cyclotomic.from_terms(m, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Cyclotomic":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.rational(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("cyclotomic division by zero")
            return self * (1 / Fraction(other))
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse, via the product of Galois conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.n == 1:
            return Cyclotomic.rational(1 / self.coeffs[0])
        prod = Cyclotomic.rational(1)
        for m in range(2, self.n):
            if gcd(m, self.n) == 1:
                prod = prod * self.galois(m)
        norm = (self * prod).as_rational()
        assert norm is not None and norm != 0
        return prod * (1 / norm)

    # -- Galois ----------------------------------------------------------

    def galois(self, m: int) -> "Cyclotomic":
        """Apply zeta_n -> zeta_n^m; m must be coprime to the conductor."""
        if gcd(m, self.n) != 1:
            raise ValueError(f"exponent {m} not coprime to conductor {self.n}")
        if self.n == 1:
            return self
        vec = _galois_vec(self.n, list(self.coeffs), m % self.n)
        mm, coeffs = _minimize(self.n, vec)
        return Cyclotomic(mm, coeffs, _canonical=True)

    galois_apply = galois

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def sort_key(self):
        """Deterministic total order key (conductor, then coefficients)."""
        return (self.n, self.coeffs)

    # -- conversion / display ---------------------------------------------

    def terms(self, m: int | None = None) -> dict[int, Fraction]:
        """Power-basis terms {j: c} meaning sum c * zeta_m^j (m defaults to
        the conductor; any multiple of the conductor is accepted)."""
        m = self.n if m is None else m
        return self._terms_at(m)

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum((float(c) * z ** i for i, c in enumerate(self.coeffs) if c), 0j)

    def __repr__(self):
        if self.n == 1:
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                parts.append(f"{c}*z{self.n}^{i}")
        return " + ".join(parts) if parts else "0"


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)
