from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from repcheck.chartab import (CharacterTable, TableError, character_table,
                              dixon_prime, induced_class_function, roots_mod,
                              _sqrt_mod)
from repcheck.cyclo import Cyclotomic
from repcheck.permcore import PermGroup, Permutation

zeta = Cyclotomic.zeta
rat = Cyclotomic.rational


def cycles(n, *cycs):
    return Permutation.from_cycles(n, cycs)


def sym(n):
    return PermGroup([cycles(n, (1, 2)), cycles(n, tuple(range(1, n + 1)))])


def alt(n):
    g2 = cycles(n, tuple(range(1, n + 1))) if n % 2 else cycles(n, tuple(range(2, n + 1)))
    return PermGroup([cycles(n, (1, 2, 3)), g2])


def cyclic(n):
    return PermGroup([cycles(n, tuple(range(1, n + 1)))])


def quaternion8():
    i = cycles(8, (1, 2, 3, 4), (5, 8, 7, 6))
    j = cycles(8, (1, 5, 3, 7), (2, 6, 4, 8))
    return PermGroup([i, j])


def test_dixon_prime():
    assert dixon_prime(6, 6) == 7
    assert dixon_prime(24, 12) == 13
    assert dixon_prime(60, 30) == 31
    assert dixon_prime(1, 1) == 3
    q = dixon_prime(7920, 1320)  # M11 sizes
    assert q % 1320 == 1 and q * q > 4 * 7920


def test_sqrt_mod():
    for q in (7, 13, 17, 97, 2521):
        for a in range(1, 20):
            if pow(a, (q - 1) // 2, q) == 1:
                r = _sqrt_mod(a, q)
                assert r * r % q == a % q


def test_roots_mod():
    import random
    rng = random.Random(0)

    def mul(p, root):
        q = [0] * (len(p) + 1)
        for i, c in enumerate(p):
            q[i] = (q[i] - root * c) % 13
            q[i + 1] = (q[i + 1] + c) % 13
        return q
    poly = [1]
    for r in (1, 2, 2, 5):
        poly = mul(poly, r)
    assert roots_mod(poly, 13, rng) == [1, 2, 5]


def test_trivial_group():
    t = character_table(PermGroup.trivial(1), "1")
    assert t.k == 1 and t.degrees == [1]
    t.validate()


def test_cyclic4():
    t = character_table(cyclic(4), "C4")
    t.validate()
    assert sorted(t.degrees) == [1, 1, 1, 1]
    assert t.element_orders == [1, 2, 4, 4]
    i = zeta(4)
    rows = {tuple(r) for r in t.rows}
    assert (rat(1), rat(-1), i, -i) in rows and (rat(1), rat(-1), -i, i) in rows
    assert sorted(t.frobenius_schur()) == [0, 0, 1, 1]
    pairs = t.conjugate_pairs()
    assert sorted(pairs) == [0, 1, 2, 3] and any(pairs[x] != x for x in range(4))


def test_sym3():
    t = character_table(sym(3), "S3")
    t.validate()
    assert sorted(t.degrees) == [1, 1, 2]
    assert t.frobenius_schur() == [1, 1, 1]
    two = t.degrees.index(2)
    # classes sorted by element order: identity, involutions, 3-cycles
    assert t.element_orders == [1, 2, 3]
    assert t.rows[two] == [rat(2), rat(0), rat(-1)]


def test_sym4():
    t = character_table(sym(4), "S4")
    t.validate()
    assert sorted(t.degrees) == [1, 1, 2, 3, 3]
    assert t.frobenius_schur() == [1] * 5
    assert all(t.field_degree(i) == 1 for i in range(5))


def test_quaternion_symplectic():
    t = character_table(quaternion8(), "Q8")
    t.validate()
    assert sorted(t.degrees) == [1, 1, 1, 1, 2]
    two = t.degrees.index(2)
    assert t.frobenius_schur()[two] == -1
    assert t.conjugate_pairs()[two] == two


def test_alt5():
    t = character_table(alt(5), "A5")
    t.validate()
    assert sorted(t.degrees) == [1, 3, 3, 4, 5]
    assert t.frobenius_schur() == [1] * 5
    golden = rat(1) + zeta(5) + zeta(5, 4)  # (1+sqrt5)/2
    threes = [i for i in range(5) if t.degrees[i] == 3]
    vals = {v for i in threes for v in t.rows[i]}
    assert golden in vals
    assert all(t.field_degree(i) in (1, 2) for i in range(5))
    assert {t.field_degree(i) for i in threes} == {2}


def test_alt4_pairs():
    t = character_table(alt(4), "A4")
    t.validate()
    assert sorted(t.degrees) == [1, 1, 1, 3]
    ind = t.frobenius_schur()
    pairs = t.conjugate_pairs()
    ones = [i for i in range(4) if t.degrees[i] == 1 and ind[i] == 0]
    assert len(ones) == 2 and pairs[ones[0]] == ones[1]


def test_seed_independence():
    a = character_table(sym(4), seed=0)
    b = character_table(sym(4), seed=12345)
    assert a.rows == b.rows


def test_class_power_map():
    t = character_table(cyclic(6), "C6")
    pm2 = t.class_power_map(2)
    pm3 = t.class_power_map(3)
    for k in range(6):
        o = t.element_orders[k]
        from math import gcd
        assert t.element_orders[pm2[k]] == o // gcd(o, 2)
        assert t.element_orders[pm3[k]] == o // gcd(o, 3)
    assert t.class_power_map(6) == [0] * 6
    inv = t.inverse_class_map()
    assert all(t.element_orders[inv[k]] == t.element_orders[k] for k in range(6))


def test_galois_map_needs_coprime():
    t = character_table(sym(3))
    with pytest.raises(ValueError):
        t.galois_class_map(2)


def test_validation_catches_corruption():
    t = character_table(sym(3), "S3")
    bad = CharacterTable(t.name, t.order, t.sizes, t.element_orders,
                         [list(r) for r in t.rows], t.power_maps)
    bad.rows[2][1] = rat(5)
    with pytest.raises(TableError):
        bad.validate()
    bad2 = CharacterTable(t.name, t.order + 6, t.sizes, t.element_orders,
                          t.rows, t.power_maps)
    with pytest.raises(TableError):
        bad2.validate()
    bad3 = CharacterTable(t.name, t.order, t.sizes, t.element_orders,
                          t.rows, t.power_maps, indicators=[1, 1, -1])
    with pytest.raises(TableError):
        bad3.validate()


def test_induced_class_function():
    g = sym(3)
    h = g.subgroup([cycles(3, (1, 2, 3))])
    lam = {x: rat(1) for x in h.elements()}  # trivial character of A3
    ind = induced_class_function(g, lam)
    # Ind(1) = permutation character of S3 on 2 points = trivial + sign
    assert ind[0] == rat(2)
    t = character_table(g)
    sign = next(r for r in t.rows if r[0] == rat(1) and r != [rat(1)] * 3)
    triv = [rat(1)] * 3
    assert ind == [a + b for a, b in zip(triv, sign)]


@st.composite
def small_groups(draw):
    n = draw(st.integers(min_value=2, max_value=5))
    k = draw(st.integers(min_value=1, max_value=2))
    gens = [Permutation(draw(st.permutations(list(range(n))))) for _ in range(k)]
    return PermGroup(gens, n)


@settings(max_examples=25, deadline=None)
@given(small_groups(), st.integers(min_value=0, max_value=10))
def test_random_groups_validate(g, seed):
    t = character_table(g, "G", seed=seed)
    t.validate()
    assert t.k == g.conjugacy_classes().count
    assert all(t.order % d == 0 for d in t.degrees)
    assert sum(d * d for d in t.degrees) == g.order()


def _fusion(group, sub):
    ccg = group.conjugacy_classes()
    cch = sub.conjugacy_classes()
    return [ccg.index[r] for r in cch.reps]


def test_induce_from_normal_cyclic():
    from repcheck.chartab import induce
    g = PermGroup([cycles(7, (1, 2, 3, 4, 5, 6, 7)),
                   Permutation([(2 * x) % 7 for x in range(7)])])
    h = g.subgroup([cycles(7, (1, 2, 3, 4, 5, 6, 7))])
    tg = character_table(g)
    th = character_table(h)
    fusion = _fusion(g, h)
    row = next(i for i, r in enumerate(th.rows) if any(v != rat(1) for v in r))
    vals, irr = induce(th, fusion, row, tg)
    assert irr and vals[0] == rat(3)
    assert vals in tg.rows
    # the trivial character induces the permutation character, norm 3
    triv = next(i for i, r in enumerate(th.rows) if all(v == rat(1) for v in r))
    vals, irr = induce(th, fusion, triv, tg)
    assert not irr and vals[0] == rat(3)


def test_induce_from_klein_four():
    from repcheck.chartab import induce
    g = alt(4)
    h = g.subgroup([cycles(4, (1, 2), (3, 4)), cycles(4, (1, 3), (2, 4))])
    tg = character_table(g)
    th = character_table(h)
    fusion = _fusion(g, h)
    row = next(i for i, r in enumerate(th.rows) if any(v != rat(1) for v in r))
    vals, irr = induce(th, fusion, row, tg)
    assert irr and vals[0] == rat(3) and vals in tg.rows


def test_induce_rejects_bad_fusion():
    from repcheck.chartab import induce
    g = sym(3)
    h = g.subgroup([cycles(3, (1, 2, 3))])
    tg, th = character_table(g), character_table(h)
    with pytest.raises(ValueError):
        induce(th, [0, 1], 0, tg)  # wrong length
    with pytest.raises(ValueError):
        induce(th, [0, 0, 0], 0, tg)  # element orders disagree
