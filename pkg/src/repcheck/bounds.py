"""Closed-form bounds and combinatorial feasibility tests.

Everything here is exact integer/rational arithmetic; fractional
exponents like p^(n(1-1/r)) are decided by comparing r-th powers, never
by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, isqrt

from .permcore import PermGroup, Permutation

# orders of the two groups (C3xC3) : Q8 and (C5xC5) : Q8 appearing as the
# |L| parameters of the g/h counting functions
L_ORDER_G = 72
L_ORDER_H = 200

SUBSET_ORBIT_BOUND = 10 ** 7


# ---------------------------------------------------------------------------
# counting functions


def eq1(p: int, n: int, a: int) -> int:
    return (p ** n - 1) - 4 * (p ** a - 1)


def f(p: int, n: int) -> int:
    return p ** n - 4 * p ** (n // 2) - 21


def g(q: int, m: int, l_order: int = L_ORDER_G) -> int:
    if m % 2:
        raise ValueError("g requires even m")
    return (q ** m - 1) - 13 * (q ** (m // 2) - 1) - 14 * l_order


def h(q: int, m: int, l_order: int = L_ORDER_H) -> int:
    if m % 2:
        raise ValueError("h requires even m")
    return (q ** m - 1) - 31 * (q ** (m // 2) - 1) - 14 * l_order


def counting_functions(kind: str, *args) -> int:
    table = {"eq1": eq1, "f": f, "g": g, "h": h}
    if kind not in table:
        raise ValueError(f"unknown counting function {kind!r}")
    return table[kind](*args)


# ---------------------------------------------------------------------------
# fixed-space and regular-orbit bounds


def fix_dim_upper(n: int, r: int) -> int:
    """Upper bound floor(n(r-1)/r) for a fixed-space dimension."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return n * (r - 1) // r


def _iroot(x: int, r: int) -> int:
    """Integer part of the r-th root of x >= 0."""
    if x < 0:
        raise ValueError("negative radicand")
    if r == 1 or x in (0, 1):
        return x
    if r == 2:
        return isqrt(x)
    lo, hi = 0, 1
    while hi ** r <= x:
        hi <<= 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** r <= x:
            lo = mid
        else:
            hi = mid
    return lo


def _ceil_frac_power(p: int, num: int, r: int) -> int:
    """Least integer X with X^r >= p^num (i.e. ceil of p^(num/r))."""
    target = p ** num
    x = _iroot(target, r)
    return x if x ** r == target else x + 1


def regular_orbit_lower_bound(order: int, p: int, n: int,
                              spectrum: list[tuple[int, int]]) -> Fraction:
    """Exact rational lower bound for the number of regular orbits of a
    group of the given order on F_p^n: (p^n - sum count * p^(n(1-1/r)))
    divided by the order, with each fractional power rounded up via
    exact r-th-power comparison."""
    total = p ** n
    for count, r in spectrum:
        if r < 2:
            raise ValueError("r must be at least 2")
        total -= count * _ceil_frac_power(p, n * (r - 1), r)
    return Fraction(total, order)


def prime_order_cyclic_count(group: PermGroup) -> int:
    """|P|: number of cyclic subgroups of prime order, from the class
    data (sum over primes l of #order-l elements / (l-1))."""
    cc = group.conjugacy_classes()
    per_order: dict[int, int] = {}
    for size, o in zip(cc.sizes, cc.orders):
        per_order[o] = per_order.get(o, 0) + size
    total = 0
    for o, count in per_order.items():
        if o > 1 and _is_prime(o):
            assert count % (o - 1) == 0
            total += count // (o - 1)
    return total


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _threshold_holds(n: int, order: int, pcount: int, r: int) -> bool:
    """Exact test of 2^(n(1-1/r)) * (2^(n/r) - |P|) > 5 * order.

    With x = 2^(n/r) the left side is x^r - |P| x^(r-1) = 2^n - |P| x^(r-1),
    so the condition is |P| * x^(r-1) < 2^n - 5*order, decided by raising
    both sides to the r-th power."""
    rhs = 2 ** n - 5 * order
    if rhs <= 0:
        return False
    if pcount == 0:
        return True
    return pcount ** r * 2 ** (n * (r - 1)) < rhs ** r


def dimension_threshold(order: int, pcount: int, r: int) -> int:
    """Least n0 such that 2^(n(1-1/r))(2^(n/r) - |P|) > 5|G| holds for
    every n >= n0 (so modules of dimension >= n0 are guaranteed at
    least five regular orbits by the crude estimate)."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if pcount < 0 or order < 1:
        raise ValueError("order must be positive and |P| non-negative")
    last_fail = 0
    n = 1
    while True:
        ok = _threshold_holds(n, order, pcount, r)
        if not ok:
            last_fail = n
        # once 2^(n/r) > |P| the left side is increasing in n, so a
        # success in that region is final
        elif 2 ** n > pcount ** r:
            return last_fail + 1
        n += 1


# ---------------------------------------------------------------------------
# divisor/index machinery for the transitive-action exclusions


def _divisor_sum(n: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d
            if d != n // d:
                total += n // d
        d += 1
    return total


def b_of(order: int) -> int:
    """Largest divisor a of the order with sigma(order) - 1 at least
    C(a, floor(a/2))."""
    if order < 2:
        raise ValueError("order must be at least 2")
    budget = _divisor_sum(order) - 1
    # C(a, floor(a/2)) is increasing in a, so the condition is a <= amax
    amax = 1
    while comb(amax + 1, (amax + 1) // 2) <= budget:
        amax += 1
    best = 1
    d = 1
    while d * d <= order:
        if order % d == 0:
            for a in (d, order // d):
                if best < a <= amax:
                    best = a
        d += 1
    return best


def n1_of(order: int, maximal_indices: list[int],
          refinement_hints: dict[int, set[int]] | None = None) \
        -> tuple[set[int], set[int]]:
    """The candidate degree set N1: multiples c * index of maximal
    subgroup indices that stay at most b(order).

    Returns (raw, refined): the raw formula set, and the refinement in
    which a multiple with c > 1 survives only if an index-c subgroup
    inside the corresponding maximal subgroup is witnessed by
    ``refinement_hints[index]``."""
    if not maximal_indices:
        raise ValueError("no maximal subgroup indices supplied")
    hints = refinement_hints or {}
    bound = b_of(order)
    raw: set[int] = set()
    refined: set[int] = set()
    for idx in maximal_indices:
        c = 1
        while c * idx <= bound:
            raw.add(c * idx)
            if c == 1 or c in hints.get(idx, set()):
                refined.add(c * idx)
            c += 1
    return raw, refined


def nh_wh(group: PermGroup) -> tuple[set[int], set[int]]:
    """The index sets N(H) and W(H) from the subgroup lattice:
    N(H) = indices of proper non-trivial subgroups L with |L/L'| = 3 and
    trivial core; W(H) = indices of proper subgroups T with |T/T'| = 3,
    together with |H| itself."""
    order = group.order()
    n_set: set[int] = set()
    w_set: set[int] = {order}
    for node in group.subgroup_classes():
        if node.order == order or node.abelianization_order != 3:
            continue
        idx = order // node.order
        w_set.add(idx)
        if node.core_trivial:
            n_set.add(idx)
    return n_set, w_set


def distinct_sum_feasible(target: int, pool) -> bool:
    """Whether target is a sum of pairwise-distinct elements of pool."""
    reachable = {0}
    for x in sorted(set(pool)):
        reachable |= {s + x for s in reachable if s + x <= target}
    return target in reachable


# ---------------------------------------------------------------------------
# subset orbits


def subset_orbit_profile(group: PermGroup, k: int,
                         max_subsets: int = SUBSET_ORBIT_BOUND) \
        -> tuple[list[tuple[int, int]], bool]:
    """Orbits of the group on k-subsets of its points: a list of
    (orbit size, set-stabilizer abelianization order) pairs, plus a
    flag telling whether all orbit sizes are distinct."""
    deg = group.degree
    if not 1 <= k <= deg:
        raise ValueError("k out of range")
    if comb(deg, k) > max_subsets:
        raise ValueError(f"C({deg},{k}) exceeds the subset bound "
                         f"{max_subsets}")
    gens = group.generators or [Permutation.identity(deg)]
    seen: set[frozenset[int]] = set()
    profile: list[tuple[int, int]] = []
    elements = group.elements()
    for combo in combinations(range(deg), k):
        y = frozenset(combo)
        if y in seen:
            continue
        orbit = {y}
        frontier = [y]
        while frontier:
            cur = frontier.pop()
            for gen in gens:
                img = frozenset(gen(x) for x in cur)
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        seen |= orbit
        stab_elems = [p for p in elements
                      if frozenset(p(x) for x in y) == y]
        stab = group.subgroup(stab_elems)
        ab_order = stab.order() // stab.derived_subgroup().order()
        profile.append((len(orbit), ab_order))
    sizes = [s for s, _ in profile]
    return sorted(profile), len(sizes) == len(set(sizes))


# ---------------------------------------------------------------------------
# splitting partitions


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def associate(self) -> "Partition":
        if not self.parts:
            return self
        conj = tuple(sum(1 for p in self.parts if p > i)
                     for i in range(self.parts[0]))
        return Partition(conj)

    def diagonal(self) -> int:
        return sum(1 for i, p in enumerate(self.parts) if p > i)


def splitting_partition(n: int) -> tuple[Partition, bool, int, bool]:
    """A self-associate partition of n whose diagonal length k satisfies
    k = n (mod 4); returns (partition, self_associate, k, congruence_ok)
    with all three properties asserted."""
    if n < 13:
        raise ValueError("defined for n >= 13 only")
    m = n % 4
    if m == 1:
        parts = ((n + 1) // 2,) + (1,) * ((n - 1) // 2)
    elif m == 2:
        parts = (n // 2, 2) + (1,) * (n // 2 - 2)
    elif m == 3:
        parts = ((n - 3) // 2, 3, 3) + (1,) * ((n - 9) // 2)
    else:
        parts = ((n - 8) // 2, 4, 4, 4) + (1,) * ((n - 16) // 2)
    lam = Partition(parts)
    if lam.n != n:
        raise AssertionError(f"partition for {n} sums to {lam.n}")
    self_associate = lam.associate() == lam
    if not self_associate:
        raise AssertionError(f"partition for {n} is not self-associate")
    k = lam.diagonal()
    congruence_ok = (k - n) % 4 == 0
    if not congruence_ok:
        raise AssertionError(f"diagonal {k} is not congruent to {n} mod 4")
    return lam, self_associate, k, congruence_ok


# ---------------------------------------------------------------------------
# exceptional r-values


class RTable:
    """Exceptional r(g) values keyed by (group name, element order,
    class size); defaults are 3 for involutions and 2 otherwise."""

    def __init__(self, entries: list[tuple[str, str, int, int, int]]):
        # entries: (group, class label, element order, class size, r);
        # order/size of 0 mean "not resolved numerically"
        self.entries = list(entries)
        self._by_key = {(g, o, s): r for g, _, o, s, r in entries
                        if o and s}
        self._by_group: dict[str, int] = {}
        for gname, _, _, _, r in entries:
            self._by_group[gname] = max(self._by_group.get(gname, 0), r)

    @staticmethod
    def default_r(element_order: int) -> int:
        return 3 if element_order == 2 else 2

    def r_of_class(self, group: str, element_order: int,
                   class_size: int) -> int:
        exceptional = self._by_key.get((group, element_order, class_size))
        base = self.default_r(element_order)
        return max(base, exceptional or 0)

    def r_of_group(self, group: str, has_involutions: bool = True) -> int:
        base = 3 if has_involutions else 2
        return max(base, self._by_group.get(group, 0))
