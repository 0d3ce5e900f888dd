"""Exact linear algebra over prime fields and module machinery.

Provides matrices over F_p (``MatFp``), group actions on F_p^n
(``FpModuleAction``), module constructors (permutation module, deleted
permutation module, dual, tensor), a seeded mini-MeatAxe ``chop`` with a
Norton-style irreducibility certificate, exhaustive orbit censuses on
F_p^n (``orbit_census``), and fixed-space dimensions both by rank and
from Brauer character values.

Vectors are column vectors: a matrix ``g`` sends ``v`` to ``g @ v``.
Vector states are encoded as mixed-radix integers sum(v[i] * p^i).
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
from sympy import Poly, symbols

from .chartab import _charpoly_mod, _kernel_mod
from .cyclo import Cyclotomic
from .permcore import PermGroup, Permutation

MAX_CENSUS_CELLS = 2 ** 27
MAX_CHOP_DIM = 64
CHOP_RETRIES = 64

_X = symbols("x")


# ---------------------------------------------------------------------------
# matrices over F_p


def rank_f2_packed(rows: list[int], ncols: int) -> int:
    """Rank of a matrix over F_2 with rows packed as Python ints
    (bit i = column i); elimination is word-parallel via xor."""
    basis: list[int] = []
    rank = 0
    for word in rows:
        for b in basis:
            word = min(word, word ^ b)
        if word:
            basis.append(word)
            basis.sort(reverse=True)
            rank += 1
    return rank


def _rank_mod(mat: np.ndarray, p: int) -> int:
    if p == 2:
        packed = [int("".join("1" if x else "0" for x in reversed(row)), 2)
                  if row.any() else 0 for row in mat % 2]
        return rank_f2_packed(packed, mat.shape[1])
    rows = (np.array(mat, dtype=np.int64) % p).tolist()
    rank = 0
    n, m = len(rows), len(rows[0]) if len(rows) else 0
    for c in range(m):
        piv = next((r for r in range(rank, n) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == n:
            break
    return rank


def _inv_mod(mat: np.ndarray, p: int) -> np.ndarray | None:
    n = mat.shape[0]
    aug = np.concatenate([mat % p, np.eye(n, dtype=np.int64)], axis=1).tolist()
    rank = 0
    for c in range(n):
        piv = next((r for r in range(rank, n) if aug[r][c]), None)
        if piv is None:
            return None
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][c], -1, p)
        aug[rank] = [(x * inv) % p for x in aug[rank]]
        for r in range(n):
            if r != rank and aug[r][c]:
                f = aug[r][c]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[rank])]
        rank += 1
    return np.array([row[n:] for row in aug], dtype=np.int64)


class MatFp:
    """An n x n matrix over F_p (immutable)."""

    __slots__ = ("p", "n", "_arr")

    def __init__(self, p: int, entries):
        arr = np.array(entries, dtype=np.int64) % p
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("MatFp requires a square matrix")
        arr.setflags(write=False)
        self.p = p
        self.n = arr.shape[0]
        self._arr = arr

    @classmethod
    def identity(cls, p: int, n: int) -> "MatFp":
        return cls(p, np.eye(n, dtype=np.int64))

    @property
    def array(self) -> np.ndarray:
        return self._arr

    def __mul__(self, other: "MatFp") -> "MatFp":
        if not isinstance(other, MatFp):
            return NotImplemented
        if other.p != self.p or other.n != self.n:
            raise ValueError("mismatched matrix shapes or primes")
        return MatFp(self.p, (self._arr @ other._arr) % self.p)

    def __pow__(self, e: int) -> "MatFp":
        if e < 0:
            return self.inverse() ** (-e)
        result = MatFp.identity(self.p, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "MatFp":
        inv = _inv_mod(self._arr, self.p)
        if inv is None:
            raise ZeroDivisionError("matrix is singular mod p")
        return MatFp(self.p, inv)

    def transpose(self) -> "MatFp":
        return MatFp(self.p, self._arr.T)

    def is_invertible(self) -> bool:
        return _rank_mod(self._arr, self.p) == self.n

    def order(self) -> int:
        ident = MatFp.identity(self.p, self.n)
        acc = self
        o = 1
        while acc != ident:
            acc = acc * self
            o += 1
            if o > self.p ** (self.n * self.n):
                raise ArithmeticError("matrix has no finite order")
        return o

    def apply(self, v: np.ndarray) -> np.ndarray:
        return (self._arr @ (np.asarray(v, dtype=np.int64) % self.p)) % self.p

    def __eq__(self, other):
        return (isinstance(other, MatFp) and self.p == other.p
                and np.array_equal(self._arr, other._arr))

    def __hash__(self):
        return hash((self.p, self._arr.tobytes()))

    def __repr__(self):
        return f"MatFp(p={self.p}, {self._arr.tolist()})"


def fixed_space_dim(g: MatFp) -> int:
    """dim of the fixed space of g on F_p^n, as n - rank(g - I)."""
    diff = (g.array - np.eye(g.n, dtype=np.int64)) % g.p
    return g.n - _rank_mod(diff, g.p)


def fixed_dim_from_brauer(values) -> int:
    """Fixed-space dimension of a p'-element g from the Brauer character
    values (beta(g^i) for i = 0..o-1): (1/o) * sum, which must be a
    non-negative rational integer."""
    if not values:
        raise ValueError("need at least one value")
    acc = Cyclotomic.rational(0)
    for v in values:
        acc = acc + (v if isinstance(v, Cyclotomic)
                     else Cyclotomic.rational(v))
    avg = acc / len(values)
    q = avg.as_rational()
    if q is None or q.denominator != 1 or q < 0:
        raise ValueError(f"inconsistent Brauer values: mean {avg!r} is not "
                         f"a non-negative integer")
    return int(q)


# ---------------------------------------------------------------------------
# module actions


class FpModuleAction:
    """A group action on F_p^n given by generator matrices aligned with
    the abstract group's generators."""

    __slots__ = ("p", "n", "generators", "group_order")

    def __init__(self, p: int, n: int, generators: list[MatFp],
                 group_order: int):
        for g in generators:
            if g.p != p or g.n != n:
                raise ValueError("generator shape/prime mismatch")
            if not g.is_invertible():
                raise ValueError("generator matrix is singular mod p")
        if group_order < 1:
            raise ValueError("group order must be positive")
        self.p = p
        self.n = n
        self.generators = list(generators)
        self.group_order = group_order

    def __repr__(self):
        return (f"FpModuleAction(p={self.p}, n={self.n}, "
                f"{len(self.generators)} generators, "
                f"group_order={self.group_order})")


def matrix_group_order(generators: list[MatFp],
                       max_points: int = 500_000) -> int:
    """Order of the matrix group, via the permutation action on the
    nonzero vectors of F_p^n."""
    if not generators:
        return 1
    p, n = generators[0].p, generators[0].n
    total = p ** n - 1
    if total > max_points:
        raise ValueError(f"too many vectors ({total}) for order computation")
    pows = p ** np.arange(n, dtype=np.int64)
    states = np.arange(1, p ** n, dtype=np.int64)
    vecs = (states[:, None] // pows) % p
    index = {int(s): i for i, s in enumerate(states)}
    perms = []
    for g in generators:
        imgs = (vecs @ g.array.T % p) @ pows
        perms.append(Permutation([index[int(s)] for s in imgs]))
    return PermGroup(perms, degree=total).order()


def perm_module(group: PermGroup, p: int) -> FpModuleAction:
    """The permutation module F_p^degree with basis permuted by the
    group generators."""
    deg = group.degree
    gens = []
    for g in group.generators:
        m = np.zeros((deg, deg), dtype=np.int64)
        for x in range(deg):
            m[g(x), x] = 1
        gens.append(MatFp(p, m))
    return FpModuleAction(p, deg, gens, group.order())


def deleted_perm(group: PermGroup, p: int) -> FpModuleAction:
    """The deleted permutation module: the sum-zero subspace of the
    permutation module when p does not divide the degree (dimension
    degree - 1, spanned by e_i - e_last), and the sum-zero-mod-all-ones
    section (dimension degree - 2) when p divides the degree."""
    deg = group.degree
    last = deg - 1
    section = (deg % p == 0)
    dim = deg - 2 if section else deg - 1

    def coords(g: Permutation) -> np.ndarray:
        # image of basis vector v_i = e_i - e_last is e_{g(i)} - e_{g(last)}
        # = v_{g(i)} - v_{g(last)} (with v_last = 0)
        m = np.zeros((deg - 1, deg - 1), dtype=np.int64)
        for i in range(deg - 1):
            a, b = g(i), g(last)
            if a != last:
                m[a, i] += 1
            if b != last:
                m[b, i] -= 1
        if not section:
            return m % p
        # quotient by the all-ones vector = sum of all v_j:
        # v_{deg-2} == -(v_0 + ... + v_{deg-3})
        q = m[:dim, :dim].copy()
        q -= m[dim, :dim]
        return q % p

    gens = [MatFp(p, coords(g)) for g in group.generators]
    return FpModuleAction(p, dim, gens, group.order())


def dual(action: FpModuleAction) -> FpModuleAction:
    """The dual module: generators replaced by inverse-transposes."""
    gens = [g.inverse().transpose() for g in action.generators]
    return FpModuleAction(action.p, action.n, gens, action.group_order)


def tensor(a: FpModuleAction, b: FpModuleAction) -> FpModuleAction:
    """Tensor product of two modules of the same group (generator lists
    aligned one-to-one)."""
    if a.p != b.p:
        raise ValueError(f"mismatched primes {a.p} != {b.p}")
    if len(a.generators) != len(b.generators):
        raise ValueError("generator lists are not aligned")
    if a.group_order != b.group_order:
        raise ValueError("modules belong to groups of different orders")
    gens = [MatFp(a.p, np.kron(x.array, y.array) % a.p)
            for x, y in zip(a.generators, b.generators)]
    return FpModuleAction(a.p, a.n * b.n, gens, a.group_order)


def construct(kind: str, *inputs) -> FpModuleAction:
    """Dispatch to one of the module constructors by name."""
    table = {"perm_module": perm_module, "deleted_perm": deleted_perm,
             "dual": dual, "tensor": tensor}
    if kind not in table:
        raise ValueError(f"unknown module constructor {kind!r}")
    return table[kind](*inputs)


# ---------------------------------------------------------------------------
# orbit census


class OrbitCensus:
    """Exact orbit statistics of a module action on all of F_p^n."""

    __slots__ = ("histogram", "regular_count", "half_regular_count",
                 "group_order", "total")

    def __init__(self, histogram: list[tuple[int, int]], group_order: int,
                 total: int):
        self.histogram = sorted(histogram)
        self.group_order = group_order
        self.total = total
        if sum(length * count for length, count in self.histogram) != total:
            raise ValueError("orbit lengths do not account for every vector")
        for length, _ in self.histogram:
            if group_order % length:
                raise ValueError(f"orbit length {length} does not divide "
                                 f"the group order {group_order}")
        counts = dict(self.histogram)
        self.regular_count = counts.get(group_order, 0)
        self.half_regular_count = (counts.get(group_order // 2, 0)
                                   if group_order % 2 == 0 else 0)

    def __repr__(self):
        return (f"OrbitCensus({self.histogram}, "
                f"regular={self.regular_count}, "
                f"half_regular={self.half_regular_count})")


def orbit_census(action: FpModuleAction,
                 max_cells: int = MAX_CENSUS_CELLS) -> OrbitCensus:
    """Exhaustive orbit histogram of the action on all p^n vectors, by
    vectorized breadth-first marking over mixed-radix state codes."""
    p, n = action.p, action.n
    total = p ** n
    if total > max_cells:
        raise ValueError(f"p^n = {total} exceeds the census bound "
                         f"{max_cells}")
    pows = p ** np.arange(n, dtype=np.int64)
    mats = [g.array.T for g in action.generators]  # right-multiply rows
    visited = np.zeros(total, dtype=bool)
    hist: dict[int, int] = {}
    ptr = 0
    chunk = 1 << 16
    while ptr < total:
        if visited[ptr]:
            block = np.flatnonzero(~visited[ptr:ptr + chunk])
            if block.size == 0:
                ptr += chunk
                continue
            ptr += int(block[0])
        start = ptr
        visited[start] = True
        frontier = np.array([start], dtype=np.int64)
        size = 1
        while frontier.size:
            vecs = (frontier[:, None] // pows) % p
            images = [((vecs @ m) % p) @ pows for m in mats]
            cand = np.unique(np.concatenate(images)) if images else \
                np.empty(0, dtype=np.int64)
            new = cand[~visited[cand]]
            visited[new] = True
            size += int(new.size)
            frontier = new
        hist[size] = hist.get(size, 0) + 1
    return OrbitCensus(sorted(hist.items()), action.group_order, total)


# ---------------------------------------------------------------------------
# spinning and the mini-MeatAxe


class _Echelon:
    """A reduced-row-echelon basis over F_p supporting incremental
    insertion and coordinate extraction."""

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.array(v, dtype=np.int64) % self.p
        for row, piv in zip(self.rows, self.pivots):
            if v[piv]:
                v = (v - v[piv] * row) % self.p
        return v

    def add(self, v: np.ndarray) -> bool:
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = (v * pow(int(v[c]), -1, self.p)) % self.p
        for i, row in enumerate(self.rows):
            if row[c]:
                self.rows[i] = (row - row[c] * v) % self.p
        self.rows.append(v)
        self.pivots.append(c)
        return True

    def coords(self, v: np.ndarray) -> np.ndarray | None:
        v = np.array(v, dtype=np.int64) % self.p
        out = np.array([v[piv] for piv in self.pivots], dtype=np.int64)
        for row, c in zip(self.rows, [v[piv] for piv in self.pivots]):
            if c:
                v = (v - c * row) % self.p
        return out if not v.any() else None

    @property
    def dim(self) -> int:
        return len(self.rows)


def spin(p: int, n: int, seeds, mats: list[np.ndarray]) -> _Echelon:
    """Smallest subspace containing the seed vectors and closed under
    the given matrices (acting by m @ v)."""
    ech = _Echelon(p, n)
    queue = []
    for s in seeds:
        if ech.add(s):
            queue.append(ech.rows[-1].copy())
    while queue:
        v = queue.pop()
        for m in mats:
            w = (m @ v) % p
            if ech.add(w):
                queue.append(ech.rows[-1].copy())
    return ech


def _eval_poly_at_matrix(coeffs_desc: list[int], m: np.ndarray,
                         p: int) -> np.ndarray:
    n = m.shape[0]
    acc = np.zeros((n, n), dtype=np.int64)
    for c in coeffs_desc:
        acc = (acc @ m + c * np.eye(n, dtype=np.int64)) % p
    return acc


def _split_action(action: FpModuleAction, sub: _Echelon) \
        -> tuple[FpModuleAction, FpModuleAction]:
    """Given a proper nonzero invariant subspace, return the subspace
    action and the quotient action."""
    p, n, w = action.p, action.n, sub.dim
    # complete the subspace basis to a full basis with standard vectors
    full = _Echelon(p, n)
    for row in sub.rows:
        full.add(row)
    complement = []
    for c in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[c] = 1
        if full.add(e):
            complement.append(e)
    s_cols = np.stack(sub.rows + complement, axis=1) % p
    s_inv = _inv_mod(s_cols, p)
    sub_gens, quo_gens = [], []
    for g in action.generators:
        a = (s_inv @ g.array @ s_cols) % p
        if a[w:, :w].any():
            raise ArithmeticError("claimed subspace is not invariant")
        sub_gens.append(MatFp(p, a[:w, :w]))
        quo_gens.append(MatFp(p, a[w:, w:]))
    return (FpModuleAction(p, w, sub_gens, action.group_order),
            FpModuleAction(p, n - w, quo_gens, action.group_order))


def _random_algebra_element(mats: list[np.ndarray], p: int, n: int,
                            rng: random.Random) -> np.ndarray:
    acc = (rng.randrange(p) * np.eye(n, dtype=np.int64)) % p
    for _ in range(rng.randrange(2, 5)):
        word = np.eye(n, dtype=np.int64)
        for _ in range(rng.randrange(1, 4)):
            word = (word @ mats[rng.randrange(len(mats))]) % p
        acc = (acc + rng.randrange(1, p) * word) % p
    return acc


def _factor_mod(coeffs_asc: list[int], p: int) -> list[tuple[list[int], int]]:
    """Factor a polynomial over F_p; returns (descending coeffs, mult)."""
    poly = Poly(list(reversed(coeffs_asc)), _X, modulus=p)
    out = []
    for f, mult in poly.factor_list()[1]:
        out.append(([c % p for c in f.all_coeffs()], mult))
    return out


def chop(action: FpModuleAction, seed: int = 0,
         retries: int = CHOP_RETRIES,
         max_dim: int = MAX_CHOP_DIM) -> list[FpModuleAction]:
    """Composition factors of the module (repetition = multiplicity),
    each certified irreducible by Norton's criterion.  Deterministic
    for a given seed."""
    if action.n > max_dim:
        raise ValueError(f"dimension {action.n} exceeds the chop bound "
                         f"{max_dim}")
    rng = random.Random(seed)
    out: list[FpModuleAction] = []
    stack = [action]
    while stack:
        a = stack.pop()
        res = _chop_step(a, rng, retries)
        if res is None:
            out.append(a)
        else:
            stack.extend(res)
    return sorted(out, key=lambda m: m.n)


def _chop_step(action: FpModuleAction, rng: random.Random,
               retries: int) -> tuple[FpModuleAction, FpModuleAction] | None:
    """None when the module is certified irreducible, else a proper
    (submodule, quotient) split."""
    p, n = action.p, action.n
    if n == 1:
        return None
    mats = [g.array for g in action.generators]
    if not mats:  # trivial group: split off a coordinate line
        line = _Echelon(p, n)
        e = np.zeros(n, dtype=np.int64)
        e[0] = 1
        line.add(e)
        return _split_action(action, line)
    tmats = [m.T for m in mats]
    for _ in range(retries):
        theta = _random_algebra_element(mats, p, n, rng)
        charpoly = _charpoly_mod(theta.tolist(), p)
        for fdesc, _mult in sorted(_factor_mod(charpoly, p),
                                   key=lambda fm: len(fm[0])):
            ftheta = _eval_poly_at_matrix(fdesc, theta, p)
            kern = _kernel_mod(ftheta.tolist(), p)
            if not kern:
                continue
            v = np.array(kern[0], dtype=np.int64)
            sub = spin(p, n, [v], mats)
            if sub.dim < n:
                return _split_action(action, sub)
            if len(kern) != len(fdesc) - 1:
                continue  # nullity != deg f: Norton does not apply
            kern_t = _kernel_mod(ftheta.T.tolist(), p)
            w = np.array(kern_t[0], dtype=np.int64)
            dual_sub = spin(p, n, [w], tmats)
            if dual_sub.dim < n:
                # the perp of a transpose-invariant subspace is invariant
                perp_rows = _kernel_mod(
                    np.stack(dual_sub.rows).tolist(), p)
                perp = _Echelon(p, n)
                for row in perp_rows:
                    perp.add(np.array(row, dtype=np.int64))
                return _split_action(action, perp)
            return None  # certified irreducible
    raise ArithmeticError(
        f"chop: could not certify or split a {n}-dimensional module "
        f"within {retries} attempts")
