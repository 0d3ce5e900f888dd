"""Independent character-table computation for small groups.

Used as a cross-check oracle for the eigenvalue-based table code: induce
the linear characters of every subgroup up to the whole group, then dig
the norm-one vectors out of the virtual-character lattice by exact
descent.  Everything is exact; the only shared machinery with the code
under test is the cyclotomic arithmetic and the class data.
"""

from fractions import Fraction

from repcheck.chartab import induced_class_function
from repcheck.cyclo import Cyclotomic
from repcheck.permcore import PermGroup, Permutation

ZERO = Cyclotomic.rational(0)


def linear_characters(h: PermGroup) -> list[dict[Permutation, Cyclotomic]]:
    """All degree-1 characters of h, as elementwise value dicts."""
    ident = Permutation.identity(h.degree)
    if h.order() == 1:
        return [{ident: Cyclotomic.rational(1)}]
    der = h.derived_subgroup()
    quo, reps, hom = h.coset_action(der)
    basis = quo.abelian_basis()
    # exponent coordinates of every element of the abelianization
    coords = {Permutation.identity(quo.degree): ()}
    for g, o in basis:
        coords = {x * (g ** e): exps + (e,)
                  for x, exps in coords.items() for e in range(o)}
    assert len(coords) == quo.order()
    chars = []
    tuples = [()]
    for _, o in basis:
        tuples = [t + (a,) for t in tuples for a in range(o)]
    helems = h.elements()
    for a in tuples:
        lam = {}
        for x in helems:
            exps = coords[hom(x)]
            val = Cyclotomic.rational(1)
            for (g, o), e, ai in zip(basis, exps, a):
                val = val * Cyclotomic.zeta(o, ai * e)
            lam[x] = val
        chars.append(lam)
    return chars


def _inner(u, v, sizes, order) -> int:
    acc = ZERO
    for s, a, b in zip(sizes, u, v):
        acc = acc + a * b.conjugate() * s
    r = (acc / order).as_rational()
    assert r is not None and r.denominator == 1, "non-integral inner product"
    return int(r)


def _norm_sq(v, sizes, order) -> int:
    return _inner(v, v, sizes, order)


def irreducibles_from_span(vectors, sizes, order, k):
    """Extract the k irreducible characters from a generating set of the
    virtual-character lattice, by peeling norm-one vectors and exact
    integer descent on the rest."""
    def ip(u, v):
        return _inner(u, v, sizes, order)

    pool = []
    seen = set()
    for v in vectors:
        key = tuple(x.sort_key() for x in v)
        if key not in seen and any(not x.is_zero() for x in v):
            seen.add(key)
            pool.append(list(v))
    found: dict[tuple, list] = {}

    def project(v):
        for chi in found.values():
            c = ip(v, chi)
            if c:
                v = [a - chi_i * c for a, chi_i in zip(v, chi)]
        return v

    while len(found) < k:
        progress = False
        nxt = []
        for v in pool:
            v = project(v)
            n = _norm_sq(v, sizes, order)
            if n == 0:
                continue
            if n == 1:
                d = v[0].as_rational()
                assert d is not None and d != 0, "norm-one vector with zero degree"
                if d < 0:
                    v = [-x for x in v]
                key = tuple(x.sort_key() for x in v)
                if key not in found:
                    found[key] = v
                    progress = True
                continue
            nxt.append(v)
        pool = nxt
        if len(found) == k:
            break
        if progress:
            continue
        # pairwise descent: subtract integer multiples where it shortens
        pool.sort(key=lambda v: _norm_sq(v, sizes, order))
        improved = False
        for j in range(len(pool)):
            for i in range(len(pool)):
                if i == j:
                    continue
                ni = _norm_sq(pool[i], sizes, order)
                if ni == 0:
                    continue
                c = ip(pool[j], pool[i])
                mu = (2 * c + ni) // (2 * ni) if c >= 0 else -((-2 * c + ni) // (2 * ni))
                if mu == 0:
                    continue
                cand = [a - b * mu for a, b in zip(pool[j], pool[i])]
                if _norm_sq(cand, sizes, order) < _norm_sq(pool[j], sizes, order):
                    pool[j] = cand
                    improved = True
        if not improved:
            raise AssertionError("lattice descent is stuck; oracle failed")
    rows = sorted(found.values(),
                  key=lambda r: (r[0].as_rational(), [v.sort_key() for v in r]))
    return rows


def reference_character_rows(group: PermGroup):
    """Character table rows of a small group, independently of the
    eigenvalue method, in the canonical (degree, values) order."""
    cc = group.conjugacy_classes()
    vectors = []
    for h in group.all_subgroups():
        for lam in linear_characters(h):
            vectors.append(induced_class_function(group, lam))
    return irreducibles_from_span(vectors, cc.sizes, cc.group_order, cc.count)
