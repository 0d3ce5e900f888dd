"""Permutation groups with a deterministic stabilizer chain.

Points are 0-based internally.  Everything is exact and deterministic:
the stabilizer chain picks base points in ascending order of the first
moved point, so two runs over the same generators produce identical
chains, element enumerations and conjugacy class orderings.
"""

from __future__ import annotations

from math import lcm
from typing import Callable, Iterable, Sequence

MAX_ENUMERABLE_ORDER = 500_000
MAX_LATTICE_ORDER = 2_000


class Permutation:
    """A permutation of {0, ..., n-1}, stored as its image tuple."""

    __slots__ = ("img",)

    def __init__(self, img: Sequence[int]):
        t = tuple(img)
        if sorted(t) != list(range(len(t))):
            raise ValueError("not a permutation of 0..n-1")
        object.__setattr__(self, "img", t)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(n))

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Sequence[int]], one_based: bool = True) -> "Permutation":
        img = list(range(n))
        off = 1 if one_based else 0
        for cyc in cycles:
            pts = [p - off for p in cyc]
            for p in pts:
                if not 0 <= p < n:
                    raise ValueError(f"point {p + off} out of range for degree {n}")
            for i, p in enumerate(pts):
                if img[p] != p:
                    raise ValueError("cycles are not disjoint")
                img[p] = pts[(i + 1) % len(pts)]
        return Permutation(img)

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, x: int) -> int:
        return self.img[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(p * q)(x) = p(q(x)): q acts first."""
        a, b = self.img, other.img
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "img", tuple(a[x] for x in b))
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.img)
        for i, x in enumerate(self.img):
            inv[x] = i
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "img", tuple(inv))
        return p

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        r = Permutation.identity(len(self.img))
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """g * self * g^-1."""
        a, s = g.img, self.img
        out = [0] * len(a)
        for x in range(len(a)):
            out[a[x]] = a[s[x]]
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "img", tuple(out))
        return p

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.img))

    def cycles(self, one_based: bool = True) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its least point."""
        off = 1 if one_based else 0
        seen = [False] * len(self.img)
        out = []
        for i in range(len(self.img)):
            if seen[i] or self.img[i] == i:
                seen[i] = True
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + off)
                j = self.img[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()), 1)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __lt__(self, other):
        return self.img < other.img

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def close_under_products(gens: Sequence[Permutation], limit: int | None = None) -> set[Permutation]:
    """Brute-force closure of a generator list, by breadth-first products."""
    if not gens:
        raise ValueError("need at least one generator (or use identity)")
    n = gens[0].degree
    ident = Permutation.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if limit is not None and len(seen) > limit:
                        raise ValueError(f"group order exceeds limit {limit}")
        frontier = nxt
    return seen


class _Chain:
    """Stabilizer chain data from the Schreier-Sims procedure."""

    def __init__(self, base: list[int], strong: list[list[Permutation]],
                 transversals: list[dict[int, Permutation]], degree: int):
        self.base = base
        self.strong = strong
        self.transversals = transversals
        self.degree = degree

    @property
    def order(self) -> int:
        r = 1
        for t in self.transversals:
            r *= len(t)
        return r

    def strip(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        for i in range(start, len(self.base)):
            x = g(self.base[i])
            u = self.transversals[i].get(x)
            if u is None:
                return g, i
            g = u.inverse() * g
        return g, len(self.base)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        h, _ = self.strip(g)
        return h.is_identity()


def _orbit_transversal(b: int, gens: Sequence[Permutation], degree: int) -> dict[int, Permutation]:
    t = {b: Permutation.identity(degree)}
    frontier = [b]
    while frontier:
        nxt = []
        for p in frontier:
            up = t[p]
            for s in gens:
                q = s(p)
                if q not in t:
                    t[q] = s * up
                    nxt.append(q)
        frontier = nxt
    return t


def schreier_sims(gens: Sequence[Permutation], degree: int,
                  base_hint: Sequence[int] = ()) -> _Chain:
    """Deterministic Schreier-Sims.  Base points follow base_hint first,
    then ascend through the least point moved by each troublesome residue."""
    base: list[int] = []
    strong: list[list[Permutation]] = []
    transversals: list[dict[int, Permutation]] = []

    def append_base(p: int):
        base.append(p)
        strong.append([])
        transversals.append({})

    def first_moved(g: Permutation) -> int:
        return next(i for i, x in enumerate(g.img) if x != i)

    def distribute(g: Permutation):
        # g joins every level whose base prefix it fixes
        if all(g(b) == b for b in base):
            append_base(first_moved(g))
        lvl = 0
        while g(base[lvl]) == base[lvl]:
            lvl += 1
        for l in range(lvl + 1):
            strong[l].append(g)
        return lvl

    for p in base_hint:
        append_base(p)
    work = [g for g in gens if not g.is_identity()]
    if not work and not base:
        append_base(0)
    for g in work:
        distribute(g)
    if not base:
        append_base(0)

    i = len(base) - 1
    while i >= 0:
        transversals[i] = _orbit_transversal(base[i], strong[i], degree)
        restart = False
        for p in sorted(transversals[i]):
            up = transversals[i][p]
            for s in strong[i]:
                x = s(p)
                g = transversals[i][x].inverse() * (s * up)
                if g.is_identity():
                    continue
                h, j = _strip(base, transversals, g, i + 1)
                if h.is_identity():
                    continue
                distribute(h)
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    return _Chain(base, strong, transversals, degree)


def _strip(base, transversals, g, start):
    for i in range(start, len(base)):
        if i >= len(transversals) or not transversals[i]:
            return g, i
        x = g(base[i])
        u = transversals[i].get(x)
        if u is None:
            return g, i
        g = u.inverse() * g
    return g, len(base)


class ConjugacyClasses:
    """Conjugacy class data: canonical ordering, sizes, element index."""

    def __init__(self, reps: list[Permutation], sizes: list[int],
                 index: dict[Permutation, int], group_order: int):
        self.reps = reps
        self.sizes = sizes
        self.orders = [r.order() for r in reps]
        self.index = index
        self.group_order = group_order

    @property
    def count(self) -> int:
        return len(self.reps)

    def class_of(self, g: Permutation) -> int:
        return self.index[g]

    def power_map(self, m: int) -> list[int]:
        """k-th entry: class of rep_k ** m."""
        return [self.index[r ** m] for r in self.reps]

    def centralizer_order(self, k: int) -> int:
        return self.group_order // self.sizes[k]


class PermGroup:
    """A finite permutation group given by generators."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a trivial group")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degrees disagree")
        self.degree = degree
        self.generators = [g for g in gens if not g.is_identity()]
        self._chain: _Chain | None = None
        self._elements: list[Permutation] | None = None
        self._classes: ConjugacyClasses | None = None

    @staticmethod
    def trivial(degree: int) -> "PermGroup":
        return PermGroup([], degree)

    @property
    def chain(self) -> _Chain:
        if self._chain is None:
            self._chain = schreier_sims(self.generators, self.degree)
        return self._chain

    def order(self) -> int:
        return self.chain.order

    def __contains__(self, g: Permutation) -> bool:
        if not self.generators:
            return isinstance(g, Permutation) and g.degree == self.degree and g.is_identity()
        return self.chain.contains(g)

    def __len__(self):
        return self.order()

    def orbit(self, point: int) -> frozenset[int]:
        return frozenset(_orbit_transversal(point, self.generators, self.degree))

    def elements(self) -> list[Permutation]:
        """All elements, by product over the chain transversals."""
        if self._elements is not None:
            return self._elements
        if self.order() > MAX_ENUMERABLE_ORDER:
            raise ValueError(f"group order {self.order()} exceeds the "
                             f"enumeration bound {MAX_ENUMERABLE_ORDER}")
        out = [Permutation.identity(self.degree)]
        for t in reversed(self.chain.transversals):
            layer = list(t.values())
            if len(layer) == 1:
                continue
            out = [u * g for u in layer for g in out]
        self._elements = out
        return out

    def conjugacy_classes(self) -> ConjugacyClasses:
        """Classes by orbit search under conjugation, deterministically
        sorted by (element order, class size, least image tuple of rep)."""
        if self._classes is not None:
            return self._classes
        elems = self.elements()
        index: dict[Permutation, int] = {}
        raw: list[tuple[Permutation, int]] = []
        gens = self.generators or [Permutation.identity(self.degree)]
        for x in sorted(elems):
            if x in index:
                continue
            cid = len(raw)
            index[x] = cid
            members = [x]
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for s in gens:
                        z = y.conjugate_by(s)
                        if z not in index:
                            index[z] = cid
                            members.append(z)
                            nxt.append(z)
                frontier = nxt
            raw.append((min(members), len(members)))
        order = len(elems)
        perm = sorted(range(len(raw)),
                      key=lambda k: (raw[k][0].order(), raw[k][1], raw[k][0].img))
        relabel = {old: new for new, old in enumerate(perm)}
        reps = [raw[old][0] for old in perm]
        sizes = [raw[old][1] for old in perm]
        index = {g: relabel[c] for g, c in index.items()}
        self._classes = ConjugacyClasses(reps, sizes, index, order)
        return self._classes

    # -- structural operations --------------------------------------------

    def subgroup(self, gens: Sequence[Permutation]) -> "PermGroup":
        return PermGroup(gens, self.degree)

    def stabilizer(self, point: int) -> "PermGroup":
        chain = schreier_sims(self.generators, self.degree, base_hint=[point])
        gens = chain.strong[1] if len(chain.base) > 1 else []
        return PermGroup(list(gens), self.degree)

    def normal_closure(self, seed: Sequence[Permutation]) -> "PermGroup":
        gens = [g for g in seed if not g.is_identity()]
        sub = PermGroup(gens, self.degree)
        work = list(gens)
        while work:
            x = work.pop()
            for s in self.generators:
                y = x.conjugate_by(s)
                if y not in sub:
                    gens.append(y)
                    work.append(y)
                    sub = PermGroup(gens, self.degree)
        return sub

    def derived_subgroup(self) -> "PermGroup":
        comms = []
        for a in self.generators:
            for b in self.generators:
                c = a * b * a.inverse() * b.inverse()
                if not c.is_identity():
                    comms.append(c)
        return self.normal_closure(comms)

    def derived_series(self) -> list["PermGroup"]:
        series = [self]
        while True:
            d = series[-1].derived_subgroup()
            if d.order() == series[-1].order():
                break
            series.append(d)
            if d.order() == 1:
                break
        return series

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].order() == 1

    def is_perfect(self) -> bool:
        return self.order() > 1 and self.derived_subgroup().order() == self.order()

    def is_abelian(self) -> bool:
        return all((a * b) == (b * a) for a in self.generators for b in self.generators)

    def is_normal(self, sub: "PermGroup") -> bool:
        return all(h.conjugate_by(g) in sub for h in sub.generators for g in self.generators)

    # -- cosets and quotients ----------------------------------------------

    def coset_action(self, sub: "PermGroup") -> tuple["PermGroup", list[Permutation],
                                                      Callable[[Permutation], Permutation]]:
        """Action on right cosets of sub, by right multiplication.

        Returns (image group, coset representatives, homomorphism).  The
        identity coset has index 0 and reps[i] lies in coset i.  For a
        normal subgroup the image is the quotient, the action is regular,
        and q -> reps[q(0)].inverse() is a section of hom.
        """
        helems = sub.elements()

        def key(g: Permutation) -> tuple[int, ...]:
            return min((h * g).img for h in helems)

        ident = Permutation.identity(self.degree)
        reps = [ident]
        idx = {key(ident): 0}
        i = 0
        while i < len(reps):
            for s in self.generators:
                c = reps[i] * s
                k = key(c)
                if k not in idx:
                    idx[k] = len(reps)
                    reps.append(c)
            i += 1

        def hom(g: Permutation) -> Permutation:
            gi = g.inverse()
            return Permutation([idx[key(r * gi)] for r in reps])

        images = [hom(s) for s in self.generators]
        return PermGroup(images, len(reps)), reps, hom

    # -- subgroup lattice ---------------------------------------------------

    def all_subgroups(self) -> list["PermGroup"]:
        """Every subgroup, as the closure of cyclic subgroups under join."""
        if self.order() > MAX_LATTICE_ORDER:
            raise ValueError(f"group order {self.order()} exceeds the "
                             f"lattice bound {MAX_LATTICE_ORDER}")
        elems = self.elements()
        ident = Permutation.identity(self.degree)
        cyclics: dict[frozenset[Permutation], Permutation] = {}
        for x in elems:
            if x.is_identity():
                continue
            cyc = frozenset(close_under_products([x]))
            if cyc not in cyclics or x < cyclics[cyc]:
                cyclics.setdefault(cyc, x)
        subs: dict[frozenset[Permutation], list[Permutation]] = {
            frozenset([ident]): []}
        for cyc, g in cyclics.items():
            subs[cyc] = [g]
        frontier = list(subs.items())
        while frontier:
            nxt = []
            for sset, sgens in frontier:
                for cyc, g in cyclics.items():
                    if g in sset:
                        continue
                    jgens = sgens + [g]
                    jset = frozenset(close_under_products(jgens))
                    if jset not in subs:
                        subs[jset] = jgens
                        nxt.append((jset, jgens))
            frontier = nxt
        out = [PermGroup(gens, self.degree) for gens in subs.values()]
        out.sort(key=lambda h: (h.order(), sorted(p.img for p in h.elements())))
        return out

    def subgroup_classes(self) -> list["SubgroupNode"]:
        """The subgroup lattice up to conjugacy, each class annotated with
        order, abelianization order and core-triviality.

        Classes are found by cyclic extension: every subgroup is the join
        of a maximal proper subgroup with a cyclic group of prime-power
        order, so joining each known class representative with every
        prime-power cyclic generator (in increasing order of subgroup
        size) reaches a representative of every class.  Duplicates are
        recognised through the full conjugation orbit of the element set.
        """
        order = self.order()
        if order > MAX_LATTICE_ORDER:
            raise ValueError(f"group order {order} exceeds the "
                             f"lattice bound {MAX_LATTICE_ORDER}")
        ident = Permutation.identity(self.degree)
        cyclics: dict[frozenset[Permutation], Permutation] = {}
        for x in self.elements():
            o = x.order()
            if o == 1 or not _is_prime_power(o):
                continue
            cyc = frozenset(close_under_products([x]))
            cyclics.setdefault(cyc, x)
        class_of: dict[frozenset[Permutation], int] = {}
        raw: list[tuple[frozenset[Permutation], list[Permutation], int]] = []

        def register(sset: frozenset[Permutation],
                     gens: list[Permutation]) -> None:
            if sset in class_of:
                return
            orbit = {sset}
            frontier = [sset]
            while frontier:
                cur = frontier.pop()
                for g in self.generators:
                    img = frozenset(x.conjugate_by(g) for x in cur)
                    if img not in orbit:
                        orbit.add(img)
                        frontier.append(img)
            cid = len(raw)
            for member in orbit:
                class_of[member] = cid
            raw.append((sset, gens, len(orbit)))

        register(frozenset([ident]), [])
        half = order // 2
        done = 0
        while done < len(raw):
            # always expand a smallest unexpanded representative, so every
            # class is seen before anything that could extend it
            pick = min(range(done, len(raw)), key=lambda i: len(raw[i][0]))
            raw[done], raw[pick] = raw[pick], raw[done]
            sset, gens, _ = raw[done]
            done += 1
            if len(sset) == order:
                continue
            for cyc, x in cyclics.items():
                if x in sset:
                    continue
                jgens = gens + [x]
                try:
                    jset = frozenset(close_under_products(jgens, limit=half))
                except ValueError:
                    # a subgroup of more than half the order is the group
                    jset = frozenset(self.elements())
                    jgens = list(self.generators)
                register(jset, jgens)

        decorated = []
        for sset, gens, orbit_len in raw:
            rep = PermGroup(gens, self.degree)
            core = set(sset)
            while True:
                kept = {x for x in core
                        if all(x.conjugate_by(g) in core for g in self.generators)}
                if len(kept) == len(core):
                    break
                core = kept
            ab_order = rep.order() // rep.derived_subgroup().order()
            node = SubgroupNode(rep, rep.order(), ab_order,
                                len(core) == 1, orbit_len)
            decorated.append(((len(sset), sorted(p.img for p in sset)), node))
        decorated.sort(key=lambda pair: pair[0])
        return [node for _, node in decorated]

    # -- abelian structure ----------------------------------------------------

    def abelian_basis(self) -> list[tuple[Permutation, int]]:
        """For an abelian group: independent generators of cyclic factors,
        with their orders, primary component by primary component."""
        if not self.is_abelian():
            raise ValueError("abelian_basis needs an abelian group")
        n = self.order()
        if n == 1:
            return []
        out = []
        m = n
        p = 2
        primes = []
        while p * p <= m:
            if m % p == 0:
                primes.append(p)
                while m % p == 0:
                    m //= p
            p += 1
        if m > 1:
            primes.append(m)
        for p in primes:
            cof = n
            while cof % p == 0:
                cof //= p
            pgens = [g ** cof for g in self.elements()]
            comp = PermGroup([g for g in pgens if not g.is_identity()], self.degree)
            out.extend(_abelian_p_basis(comp))
        return out


class SubgroupNode:
    """A conjugacy class of subgroups with the annotations the index-set
    computations read off the lattice."""

    __slots__ = ("rep", "order", "abelianization_order", "core_trivial",
                 "class_size")

    def __init__(self, rep: PermGroup, order: int, abelianization_order: int,
                 core_trivial: bool, class_size: int):
        self.rep = rep
        self.order = order
        self.abelianization_order = abelianization_order
        self.core_trivial = core_trivial
        self.class_size = class_size

    def __repr__(self):
        return (f"SubgroupNode(order={self.order}, "
                f"ab={self.abelianization_order}, "
                f"core_trivial={self.core_trivial}, "
                f"class_size={self.class_size})")


def close_group(generators: Sequence[Permutation], degree: int | None = None) -> PermGroup:
    return PermGroup(generators, degree)


def conjugacy_data(group: PermGroup) -> ConjugacyClasses:
    return group.conjugacy_classes()


def power_class_map(cd: ConjugacyClasses, m: int) -> list[int]:
    return cd.power_map(m)


def derived_and_solvability(group: PermGroup):
    """(derived series, is_solvable, is_perfect, |G/G'|)."""
    series = group.derived_series()
    solvable = series[-1].order() == 1
    derived_order = series[1].order() if len(series) > 1 else group.order()
    perfect = derived_order == group.order() > 1
    return series, solvable, perfect, group.order() // derived_order


def coset_action(group: PermGroup, sub: PermGroup):
    """(image group, kernel_trivial flag); see PermGroup.coset_action."""
    image, _, _ = group.coset_action(sub)
    return image, image.order() == group.order()


def subgroup_lattice(group: PermGroup) -> list[SubgroupNode]:
    return group.subgroup_classes()


def _abelian_p_basis(grp: PermGroup) -> list[tuple[Permutation, int]]:
    if grp.order() == 1:
        return []
    g = max(grp.elements(), key=lambda x: (x.order(), [-i for i in x.img]))
    m = g.order()
    cyc = grp.subgroup([g])
    if cyc.order() == grp.order():
        return [(g, m)]
    quo, reps, hom = grp.coset_action(cyc)
    powers = {g ** k: k for k in range(m)}
    basis = [(g, m)]
    for qb, o in _abelian_p_basis(quo):
        h = reps[qb(0)].inverse()
        k = powers[h ** o]
        assert k % o == 0
        h = h * (g ** (m - k // o)) if k else h
        assert (h ** o).is_identity()
        basis.append((h, o))
    return basis
