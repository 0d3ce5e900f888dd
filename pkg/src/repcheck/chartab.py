"""Exact character tables of finite groups.

The table model stores one row per irreducible character with values as
canonical cyclotomic numbers, plus the class data (sizes, element
orders, prime power maps) needed for indicator and Galois work.  Tables
come from two sources: computed from a permutation group by the
Dixon-Schneider algorithm, or loaded from a table file.  Both go
through the same exact validation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt, lcm

from .cyclo import Cyclotomic
from .permcore import PermGroup, Permutation


class TableError(ValueError):
    """A character table failed exact validation."""


# ---------------------------------------------------------------------------
# small number theory mod a prime
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def dixon_prime(group_order: int, exponent: int) -> int:
    """Least prime q = 1 (mod exponent) with q > 2 * sqrt(group order)."""
    q = exponent + 1
    while q * q <= 4 * group_order or not _is_prime(q):
        q += exponent
    return q


def _primitive_root(q: int) -> int:
    fac = _factorize(q - 1)
    for u in range(2, q):
        if all(pow(u, (q - 1) // p, q) != 1 for p in fac):
            return u
    raise ArithmeticError


def _sqrt_mod(a: int, q: int) -> int:
    """A square root of a mod prime q (Tonelli-Shanks)."""
    a %= q
    if a == 0:
        return 0
    if pow(a, (q - 1) // 2, q) != 1:
        raise ArithmeticError(f"{a} is not a square mod {q}")
    if q % 4 == 3:
        return pow(a, (q + 1) // 4, q)
    s, d = 0, q - 1
    while d % 2 == 0:
        d //= 2
        s += 1
    z = next(z for z in range(2, q) if pow(z, (q - 1) // 2, q) == q - 1)
    m, c, t, r = s, pow(z, d, q), pow(a, d, q), pow(a, (d + 1) // 2, q)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % q
            i += 1
        b = pow(c, 1 << (m - i - 1), q)
        m, c = i, b * b % q
        t, r = t * c % q, r * b % q
    return r


# -- polynomials over F_q (dense, index = degree) ---------------------------

def _pol_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pol_mul(f, g, q):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % q
    return _pol_trim(out)


def _pol_mod(f, g, q):
    f = list(f)
    ginv = pow(g[-1], q - 2, q)
    while len(f) >= len(g):
        c = f[-1] * ginv % q
        if c:
            off = len(f) - len(g)
            for j, b in enumerate(g):
                f[off + j] = (f[off + j] - c * b) % q
        f.pop()
    return _pol_trim(f)


def _pol_gcd(f, g, q):
    while g:
        f, g = g, _pol_mod(f, g, q)
    if f:
        inv = pow(f[-1], q - 2, q)
        f = [c * inv % q for c in f]
    return f


def _pol_powmod(f, e, mod, q):
    r = [1]
    f = _pol_mod(f, mod, q)
    while e:
        if e & 1:
            r = _pol_mod(_pol_mul(r, f, q), mod, q)
        f = _pol_mod(_pol_mul(f, f, q), mod, q)
        e >>= 1
    return r


def _pol_deriv(f, q):
    return _pol_trim([i * c % q for i, c in enumerate(f)][1:])


def roots_mod(f: list[int], q: int, rng: random.Random) -> list[int]:
    """All roots in F_q of a polynomial that splits over F_q."""
    f = _pol_trim([c % q for c in f])
    sf = _pol_gcd(f, _pol_deriv(f, q), q)
    if len(sf) > 1:
        f = [c for c in _pol_divexact_mod(f, sf, q)]
    out: list[int] = []
    stack = [f]
    while stack:
        g = stack.pop()
        if len(g) <= 1:
            continue
        if len(g) == 2:
            out.append((-g[0]) * pow(g[1], q - 2, q) % q)
            continue
        if len(g) == 3:
            a, b, c = g[2], g[1], g[0]
            disc = (b * b - 4 * a * c) % q
            r = _sqrt_mod(disc, q)
            inv2a = pow(2 * a % q, q - 2, q)
            out.append((-b + r) * inv2a % q)
            out.append((-b - r) * inv2a % q)
            continue
        for attempt in range(200):
            a = rng.randrange(q)
            h = _pol_powmod([a, 1], (q - 1) // 2, g, q)
            h = _pol_trim([(h[0] - 1) % q] + h[1:] if h else [q - 1])
            d = _pol_gcd(h, g, q)
            if 0 < len(d) - 1 < len(g) - 1:
                stack.append(d)
                stack.append(_pol_divexact_mod(g, d, q))
                break
        else:
            raise ArithmeticError("polynomial did not split over F_q")
    return sorted(out)


def _pol_divexact_mod(f, g, q):
    f = list(f)
    ginv = pow(g[-1], q - 2, q)
    quot = [0] * (len(f) - len(g) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = f[i + len(g) - 1] * ginv % q
        quot[i] = c
        if c:
            for j, b in enumerate(g):
                f[i + j] = (f[i + j] - c * b) % q
    return _pol_trim(quot)


def _charpoly_mod(mat: list[list[int]], q: int) -> list[int]:
    """Characteristic polynomial det(xI - M) mod q, via Hessenberg form."""
    n = len(mat)
    h = [[x % q for x in row] for row in mat]
    for c in range(n - 2):
        piv = next((r for r in range(c + 1, n) if h[r][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            h[c + 1], h[piv] = h[piv], h[c + 1]
            for r in range(n):
                h[r][c + 1], h[r][piv] = h[r][piv], h[r][c + 1]
        inv = pow(h[c + 1][c], q - 2, q)
        for r in range(c + 2, n):
            if h[r][c]:
                f = h[r][c] * inv % q
                h[r] = [(x - f * y) % q for x, y in zip(h[r], h[c + 1])]
                for rr in range(n):
                    h[rr][c + 1] = (h[rr][c + 1] + f * h[rr][r]) % q
    # recurrence on leading principal minors of xI - H
    polys: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        p = _pol_mul(polys[m - 1], [(-h[m - 1][m - 1]) % q, 1], q) or [0]
        prod = 1
        for i in range(1, m):
            prod = prod * h[m - i][m - i - 1] % q
            coef = h[m - 1 - i][m - 1] * prod % q
            if coef:
                pp = polys[m - 1 - i]
                p = p + [0] * (len(pp) - len(p))
                for d, cf in enumerate(pp):
                    p[d] = (p[d] - coef * cf) % q
        polys.append(_pol_trim(p) or [0])
    return polys[n] if polys[n] else [0]


def _kernel_mod(a: list[list[int]], q: int) -> list[list[int]]:
    """Basis of the right kernel of a (rows x cols) matrix mod q."""
    rows = [row[:] for row in a]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % q), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], q - 2, q)
        rows[r] = [x * inv % q for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % q:
                f = rows[i][c]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-rows[i][fc]) % q
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# the table object
# ---------------------------------------------------------------------------

class CharacterTable:
    """An exact character table.

    rows[i][k] is the value of the i-th irreducible character on the
    k-th class; class 0 is the identity.  power_maps[p][k] gives the
    class of the p-th power of an element of class k, for the primes p
    dividing the group order.
    """

    def __init__(self, name: str, order: int, sizes: list[int],
                 element_orders: list[int], rows: list[list[Cyclotomic]],
                 power_maps: dict[int, list[int]],
                 indicators: list[int] | None = None):
        self.name = name
        self.order = order
        self.sizes = list(sizes)
        self.element_orders = list(element_orders)
        self.rows = [list(r) for r in rows]
        self.power_maps = {p: list(m) for p, m in power_maps.items()}
        self.stated_indicators = list(indicators) if indicators is not None else None
        self._galois_maps: dict[int, list[int]] = {}
        self._indicators: list[int] | None = None

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def exponent(self) -> int:
        return lcm(*self.element_orders, 1)

    def degree(self, i: int) -> int:
        d = self.rows[i][0].as_rational()
        if d is None or d.denominator != 1 or d <= 0:
            raise TableError(f"{self.name}: row {i} has invalid degree")
        return int(d)

    @property
    def degrees(self) -> list[int]:
        return [self.degree(i) for i in range(self.k)]

    # -- class maps --------------------------------------------------------

    def _column(self, k: int) -> tuple[Cyclotomic, ...]:
        return tuple(row[k] for row in self.rows)

    def galois_class_map(self, m: int) -> list[int]:
        """Class map k -> l with column l the sigma_m image of column k.
        Needs gcd(m, exponent) = 1; this is how an element of class k maps
        to the class of its m-th power."""
        e = self.exponent
        m %= e
        if gcd(m, e) != 1:
            raise ValueError(f"{m} is not coprime to the exponent {e}")
        if m in self._galois_maps:
            return self._galois_maps[m]
        col_index = {self._column(k): k for k in range(self.k)}
        if len(col_index) != self.k:
            raise TableError(f"{self.name}: columns are not distinct")
        out = []
        for k in range(self.k):
            target = tuple(v.galois(m) for v in self._column(k))
            l = col_index.get(target)
            if l is None:
                raise TableError(f"{self.name}: no class matches the "
                                 f"sigma_{m} image of class {k}")
            out.append(l)
        self._galois_maps[m] = out
        return out

    def inverse_class_map(self) -> list[int]:
        return self.galois_class_map(-1)

    def class_power_map(self, m: int) -> list[int]:
        """Class of g^m for g in each class, composed from the stored prime
        power maps and Galois column maps."""
        if m < 0:
            comp = self.class_power_map(-m)
            inv = self.inverse_class_map()
            return [inv[c] for c in comp]
        cur = list(range(self.k))
        if m == 0:
            return [0] * self.k
        for p, mult in _factorize(m).items():
            for _ in range(mult):
                step = self.power_maps.get(p)
                if step is None:
                    if self.order % p == 0:
                        raise TableError(f"{self.name}: power map for prime "
                                         f"{p} is required but missing")
                    step = self.galois_class_map(p)
                cur = [step[c] for c in cur]
        return cur

    # -- indicators and Galois structure ------------------------------------

    def frobenius_schur(self) -> list[int]:
        """Indicator of each row: +1 real orthogonal, -1 real symplectic,
        0 not real-valued."""
        if self._indicators is not None:
            return self._indicators
        pm2 = self.class_power_map(2)
        out = []
        for i in range(self.k):
            acc = Cyclotomic.rational(0)
            for kk in range(self.k):
                acc = acc + self.rows[i][pm2[kk]] * self.sizes[kk]
            q = (acc / self.order).as_rational()
            if q is None or q.denominator != 1 or int(q) not in (-1, 0, 1):
                raise TableError(f"{self.name}: indicator of row {i} "
                                 f"is not in {{-1,0,1}}")
            out.append(int(q))
        self._indicators = out
        return out

    def conjugate_pairs(self) -> list[int]:
        """partner[i] = j with row j the complex conjugate of row i
        (j = i exactly when row i is real-valued)."""
        row_index = {tuple(r): i for i, r in enumerate(self.rows)}
        if len(row_index) != self.k:
            raise TableError(f"{self.name}: rows are not distinct")
        partner = []
        for i, r in enumerate(self.rows):
            conj = tuple(v.conjugate() for v in r)
            j = row_index.get(conj)
            if j is None:
                raise TableError(f"{self.name}: row {i} has no conjugate row")
            partner.append(j)
        for i, j in enumerate(partner):
            if partner[j] != i:
                raise TableError(f"{self.name}: conjugation is not an involution")
        return partner

    def field_degree(self, i: int) -> int:
        """Degree over Q of the field generated by the values of row i."""
        f = lcm(*(v.conductor for v in self.rows[i]), 1)
        if f == 1:
            return 1
        orbit = set()
        row = tuple(self.rows[i])
        for m in range(1, f):
            if gcd(m, f) == 1:
                orbit.add(tuple(v.galois(m) for v in row))
        return len(orbit)

    # -- validation ---------------------------------------------------------

    def validate(self) -> None:
        """Exact consistency checks; raises TableError on any failure."""
        k = self.k
        if not (len(self.rows) == k and all(len(r) == k for r in self.rows)):
            raise TableError(f"{self.name}: table is not square")
        if sum(self.sizes) != self.order:
            raise TableError(f"{self.name}: class sizes do not sum to the order")
        if self.sizes[0] != 1 or self.element_orders[0] != 1:
            raise TableError(f"{self.name}: class 0 is not the identity")
        for s in self.sizes:
            if s <= 0 or self.order % s != 0:
                raise TableError(f"{self.name}: invalid class size {s}")
        for p, pm in self.power_maps.items():
            if len(pm) != k or any(not 0 <= c < k for c in pm):
                raise TableError(f"{self.name}: malformed power map for {p}")
            for kk in range(k):
                o, t = self.element_orders[kk], self.element_orders[pm[kk]]
                if t != o // gcd(o, p):
                    raise TableError(f"{self.name}: power map {p} breaks "
                                     f"element orders at class {kk}")
        if sum(d * d for d in self.degrees) != self.order:
            raise TableError(f"{self.name}: degrees squared do not sum "
                             f"to the order")
        zero = Cyclotomic.rational(0)
        for i in range(k):
            for j in range(i, k):
                acc = zero
                for kk in range(k):
                    acc = acc + self.rows[i][kk] * self.rows[j][kk].conjugate() * self.sizes[kk]
                want = self.order if i == j else 0
                if acc != Cyclotomic.rational(want):
                    raise TableError(f"{self.name}: row orthogonality fails "
                                     f"at rows {i},{j}")
        for a in range(k):
            for b in range(a, k):
                acc = zero
                for i in range(k):
                    acc = acc + self.rows[i][a] * self.rows[i][b].conjugate()
                want = Fraction(self.order, self.sizes[a]) if a == b else Fraction(0)
                if acc != Cyclotomic.rational(want):
                    raise TableError(f"{self.name}: column orthogonality "
                                     f"fails at classes {a},{b}")
        for kk in range(k):
            o = self.element_orders[kk]
            if o < 1 or self.order % o != 0:
                raise TableError(f"{self.name}: invalid element order {o}")
            for row in self.rows:
                c = row[kk].conductor
                # values are sums of o-th roots of unity
                if o % c != 0:
                    raise TableError(f"{self.name}: value at class {kk} has "
                                     f"conductor {c} not dividing the "
                                     f"element order {o}")
        ind = self.frobenius_schur()
        if self.stated_indicators is not None and ind != self.stated_indicators:
            raise TableError(f"{self.name}: stated indicators disagree with "
                             f"the computed ones")
        # sum of nu(chi) chi(1) counts the solutions of g^2 = 1
        invol = sum(s for s, o in zip(self.sizes, self.element_orders) if o <= 2)
        if sum(n * d for n, d in zip(ind, self.degrees)) != invol:
            raise TableError(f"{self.name}: indicator count identity fails")
        pairs = self.conjugate_pairs()
        for i, j in enumerate(pairs):
            if (ind[i] == 0) != (i != j):
                raise TableError(f"{self.name}: row {i} realness disagrees "
                                 f"with its indicator")


# ---------------------------------------------------------------------------
# Dixon-Schneider
# ---------------------------------------------------------------------------

def dixon_schneider(group: PermGroup, name: str = "", seed: int = 0) -> CharacterTable:
    """Exact character table of a permutation group (Dixon-Schneider).

    The seed only feeds the root-finding inside the eigenspace splitting;
    the returned table is canonical and seed-independent.
    """
    cc = group.conjugacy_classes()
    k = cc.count

    members: list[list[Permutation]] = [[] for _ in range(k)]
    for g, cid in cc.index.items():
        members[cid].append(g)

    inv_class = [cc.index[r.inverse()] for r in cc.reps]

    def class_matrix(j: int) -> list[list[int]]:
        # mat[i][l] = #{x in C_j : x^-1 * z_l in C_i}
        mat = [[0] * k for _ in range(k)]
        invs = [x.inverse() for x in members[j]]
        for l, z in enumerate(cc.reps):
            for xi in invs:
                mat[cc.index[xi * z]][l] += 1
        return mat

    power_classes = [[cc.index[rep ** t] for t in range(cc.orders[i])]
                     for i, rep in enumerate(cc.reps)]
    pmaps = {p: cc.power_map(p) for p in _factorize(cc.group_order)}
    return dixon_from_class_data(
        name, cc.group_order, cc.sizes, cc.orders, class_matrix,
        power_classes, inv_class, pmaps, seed=seed)


def dixon_from_class_data(name: str, order: int, sizes: list[int],
                          orders: list[int],
                          class_matrix: "Callable[[int], list[list[int]]]",
                          power_classes: list[list[int]],
                          inv_class: list[int],
                          power_maps: dict[int, list[int]],
                          seed: int = 0) -> CharacterTable:
    """Dixon-Schneider from abstract class data.

    ``class_matrix(j)[i][l]`` counts the x in class j with x^-1 z_l in
    class i (z_l any representative of class l);
    ``power_classes[i][t]`` is the class of z_i^t for 0 <= t < orders[i].
    This entry point lets large groups supply class data computed by
    means other than full element enumeration.
    """
    k = len(sizes)
    n = order
    e = lcm(*orders, 1)
    q = dixon_prime(n, e)
    rng = random.Random(seed)

    # split F_q^k into common eigenspaces of the class matrices
    spaces: list[list[list[int]]] = [[[1 if i == j else 0 for i in range(k)]
                                      for j in range(k)]]
    for j in range(1, k):
        if all(len(s) == 1 for s in spaces):
            break
        mat = class_matrix(j)
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            # work in the echelonized basis so coordinates line up
            ech, piv = _echelon_with_pivots(basis, q)
            basis = ech
            r = len(basis)
            images = []
            for b in basis:
                w = [sum(mat[i][l] * b[l] for l in range(k)) % q for i in range(k)]
                images.append(_coords(ech, piv, w, q))
            restr = [[images[c][r_] for c in range(r)] for r_ in range(r)]
            for lam in roots_mod(_charpoly_mod(restr, q), q, rng):
                shifted = [[(restr[i][j2] - (lam if i == j2 else 0)) % q
                            for j2 in range(r)] for i in range(r)]
                kern = _kernel_mod(shifted, q)
                new_spaces.append([
                    [sum(cv[c] * basis[c][l] for c in range(r)) % q
                     for l in range(k)] for cv in kern])
        spaces = new_spaces
    if not all(len(s) == 1 for s in spaces) or len(spaces) != k:
        raise ArithmeticError("eigenspace splitting failed")

    u = _primitive_root(q)
    w = pow(u, (q - 1) // e, q)  # primitive e-th root of unity in F_q

    rows: list[list[Cyclotomic]] = []
    for (v,) in spaces:
        v0inv = pow(v[0], q - 2, q)
        v = [x * v0inv % q for x in v]
        s = sum(v[i] * v[inv_class[i]] * pow(sizes[i], q - 2, q)
                for i in range(k)) % q
        d2 = n * pow(s, q - 2, q) % q
        r = _sqrt_mod(d2, q)
        d = min(r, q - r)
        assert d * d <= n
        chi_mod = [d * v[i] * pow(sizes[i], q - 2, q) % q for i in range(k)]
        row = []
        for i in range(k):
            o = orders[i]
            z = pow(w, e // o, q)
            oinv = pow(o, q - 2, q)
            terms: dict[int, Fraction] = {}
            for s_ in range(o):
                m = 0
                for t in range(o):
                    m += chi_mod[power_classes[i][t]] * pow(z, -s_ * t % o, q)
                m = m % q * oinv % q
                if m > d:
                    raise ArithmeticError("character lift out of range")
                if m:
                    terms[s_] = Fraction(m)
            row.append(Cyclotomic.from_terms(o, terms))
        rows.append(row)

    rows.sort(key=lambda r: (r[0].as_rational(), [v.sort_key() for v in r]))
    return CharacterTable(name or "G", n, sizes, orders, rows, power_maps)


def _echelon_with_pivots(basis: list[list[int]], q: int):
    rows = [r[:] for r in basis]
    piv = []
    r = 0
    ncols = len(rows[0])
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] % q), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], q - 2, q)
        rows[r] = [x * inv % q for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % q:
                f = rows[i][c]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    return rows[:r], piv


def _coords(ech: list[list[int]], piv: list[int], w: list[int], q: int) -> list[int]:
    w = [x % q for x in w]
    coeff = []
    for row, c in zip(ech, piv):
        f = w[c]
        coeff.append(f)
        if f:
            w = [(x - f * y) % q for x, y in zip(w, row)]
    if any(w):
        raise ArithmeticError("vector outside subspace")
    return coeff


character_table = dixon_schneider


def induce(sub_table: CharacterTable, fusion: list[int], row: int,
           target: CharacterTable) -> tuple[list[Cyclotomic], bool]:
    """Induce row `row` of a subgroup's table along an explicit fusion map
    (subgroup class -> target class).  Returns the induced class function
    on the target's classes and an exact irreducibility flag."""
    if len(fusion) != sub_table.k:
        raise ValueError("fusion map must cover every subgroup class")
    for j, kk in enumerate(fusion):
        if not 0 <= kk < target.k:
            raise ValueError(f"fusion image {kk} out of range")
        if target.element_orders[kk] != sub_table.element_orders[j]:
            raise ValueError(f"fusion breaks element orders at subgroup "
                             f"class {j}")
    if target.order % sub_table.order:
        raise ValueError("subgroup order does not divide the target order")
    vals = []
    for kk in range(target.k):
        cent = Fraction(target.order, target.sizes[kk])
        acc = Cyclotomic.rational(0)
        for j in range(sub_table.k):
            if fusion[j] == kk:
                acc = acc + sub_table.rows[row][j] * Fraction(sub_table.sizes[j],
                                                              sub_table.order)
        vals.append(acc * cent)
    norm = Cyclotomic.rational(0)
    for kk in range(target.k):
        norm = norm + vals[kk] * vals[kk].conjugate() * target.sizes[kk]
    nq = (norm / target.order).as_rational()
    if nq is None or nq.denominator != 1:
        raise ValueError("inconsistent fusion: induced norm not integral")
    return vals, nq == 1


def induced_class_function(group: PermGroup, sub_values: dict[Permutation, Cyclotomic]) -> list[Cyclotomic]:
    """Induce a class function given elementwise on a subgroup, by the
    direct sum over the whole group.  Returns values on the classes of
    the group, in its canonical class order."""
    cc = group.conjugacy_classes()
    h = len(sub_values)
    out = []
    for rep in cc.reps:
        acc = Cyclotomic.rational(0)
        for x in group.elements():
            y = rep.conjugate_by(x.inverse())
            val = sub_values.get(y)
            if val is not None:
                acc = acc + val
        out.append(acc / h)
    return out
