from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from repcheck.chartab import character_table
from repcheck.ctformat import (FormatError, GroupSpecFile, TableFile,
                               emit_group_spec, emit_table, emit_value,
                               parse_group_spec, parse_table, parse_value)
from repcheck.cyclo import Cyclotomic
from repcheck.permcore import PermGroup, Permutation

zeta = Cyclotomic.zeta
rat = Cyclotomic.rational


# --------------------------------------------------------------------------
# group spec files


def test_parse_perm_spec():
    spec = parse_group_spec("name C3\nkind perm\ndegree 3\ngen (1,2,3)\n")
    assert spec.kind == "perm" and spec.degree == 3
    assert PermGroup(spec.perm_generators).order() == 3


def test_parse_perm_multi_cycle_and_comments():
    text = """# a dihedral group
name D4
kind perm
degree 4
gen (1,2,3,4)
gen (1,3)  # reflection
"""
    spec = parse_group_spec(text)
    assert PermGroup(spec.perm_generators).order() == 8
    spec2 = parse_group_spec("kind perm\ndegree 4\ngen (1,2)(3,4)\n")
    assert spec2.perm_generators[0].cycles() == [(1, 2), (3, 4)]


def test_parse_mat_spec_gl32():
    text = ("name GL32\nkind mat\nprime 2\ndim 3\n"
            "gen 0,1,0;0,0,1;1,1,0\n"
            "gen 0,1,0;1,0,0;0,0,1\n")
    spec = parse_group_spec(text)
    assert spec.kind == "mat" and (spec.prime, spec.dim) == (2, 3)
    # permutation action on the 7 nonzero vectors of F_2^3 has order 168
    vecs = [(a, b, c) for a in range(2) for b in range(2) for c in range(2)
            if (a, b, c) != (0, 0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(m, v):
        return tuple(sum(m[i][j] * v[j] for j in range(3)) % 2
                     for i in range(3))

    gens = [Permutation([idx[act(m, v)] for v in vecs])
            for m in spec.mat_generators]
    assert PermGroup(gens).order() == 168


def test_perm_spec_point_out_of_range():
    with pytest.raises(FormatError, match=r"line 3.*point 9 out of range"):
        parse_group_spec("kind perm\ndegree 8\ngen (1,2,9)\n")


def test_group_spec_errors():
    with pytest.raises(FormatError, match="unknown kind"):
        parse_group_spec("kind blob\ndegree 2\ngen (1,2)\n")
    with pytest.raises(FormatError, match="duplicate field"):
        parse_group_spec("kind perm\nkind perm\ndegree 2\ngen (1,2)\n")
    with pytest.raises(FormatError, match="not invertible"):
        parse_group_spec("kind mat\nprime 2\ndim 2\ngen 1,1;1,1\n")
    with pytest.raises(FormatError, match="not prime"):
        parse_group_spec("kind mat\nprime 6\ndim 2\ngen 1,0;0,1\n")
    with pytest.raises(FormatError, match="disjoint"):
        parse_group_spec("kind perm\ndegree 4\ngen (1,2)(2,3)\n")
    with pytest.raises(FormatError, match="no generators"):
        parse_group_spec("kind perm\ndegree 4\n")
    with pytest.raises(FormatError, match="missing required field 'kind'"):
        parse_group_spec("degree 4\ngen (1,2)\n")


def test_group_spec_roundtrip():
    text = "name D4\nkind perm\ndegree 4\ngen (1,2,3,4)\ngen (1,3)\n"
    spec = parse_group_spec(text)
    assert emit_group_spec(spec) == text
    mtext = "name X\nkind mat\nprime 3\ndim 2\ngen 1,1;0,1\ngen 0,2;1,0\n"
    assert emit_group_spec(parse_group_spec(mtext)) == mtext


# --------------------------------------------------------------------------
# cyclotomic value syntax


def test_value_syntax():
    assert parse_value("5", 3) == rat(5)
    assert parse_value("-2/3", 1) == rat(Fraction(-2, 3))
    assert parse_value("1*z^1+1*z^2+1*z^4", 7) == zeta(7) + zeta(7) ** 2 + zeta(7) ** 4
    assert parse_value("1*z^1-1*z^3", 8) == zeta(8) - zeta(8) ** 3
    assert emit_value(rat(0), 12) == "0"
    # canonical spelling uses the power basis (degree < phi(5) = 4)
    assert emit_value(zeta(5) + zeta(5) ** 4, 5) == "-1-1*z^2-1*z^3"
    assert parse_value("1*z^1+1*z^4", 5) == zeta(5) + zeta(5) ** 4
    v = rat(2) - zeta(3)
    assert parse_value(emit_value(v, 3), 3) == v
    with pytest.raises(FormatError):
        parse_value("1*w^2", 5)
    with pytest.raises(FormatError):
        parse_value("", 5)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12),
       st.lists(st.tuples(st.integers(-5, 5), st.integers(0, 11)),
                min_size=1, max_size=4))
def test_value_roundtrip_random(n, raw):
    terms = {}
    for c, j in raw:
        terms[j % n] = terms.get(j % n, Fraction(0)) + c
    v = Cyclotomic.from_terms(n, terms)
    if v.n > n:  # conductor can only shrink or stay
        return
    assert parse_value(emit_value(v, n), n) == v


# --------------------------------------------------------------------------
# table files


S3_TEXT = """name S3
order 6
classes 3
sizes 1 3 2
orders 1 2 3
powermap 2 1 1 3
powermap 3 1 2 1
powermap -1 1 2 3
conductor 3
row 1 1 1
row 1 -1 1
row 2 0 -1
indicators + + +
"""


def test_parse_table_s3():
    tf = parse_table(S3_TEXT)
    assert (tf.name, tf.order, tf.k) == ("S3", 6, 3)
    assert tf.power_maps[2] == [0, 0, 2] and tf.power_maps[-1] == [0, 1, 2]
    table = tf.to_character_table()
    table.validate()
    assert table.frobenius_schur() == [1, 1, 1]


def test_table_roundtrip_canonical_text():
    assert emit_table(parse_table(S3_TEXT)) == S3_TEXT


def test_table_roundtrip_values_c3():
    g = PermGroup([Permutation.from_cycles(3, [(1, 2, 3)])])
    tf = TableFile.from_character_table(character_table(g, name="C3"))
    tf2 = parse_table(emit_table(tf))
    assert tf2.rows == tf.rows and tf2.power_maps == tf.power_maps
    assert tf2.indicators == tf.indicators
    assert emit_table(tf2) == emit_table(tf)


def test_table_roundtrip_a5():
    g = PermGroup([Permutation.from_cycles(5, [(1, 2, 3)]),
                   Permutation.from_cycles(5, [(1, 2, 3, 4, 5)])])
    tf = TableFile.from_character_table(character_table(g, name="A5"))
    tf2 = parse_table(emit_table(tf))
    assert tf2.rows == tf.rows
    t = tf2.to_character_table()
    t.validate()


def test_minimal_c1_table():
    text = "order 1\nclasses 1\nsizes 1\norders 1\npowermap 2 1\nconductor 1\nrow 1\n"
    tf = parse_table(text)
    assert emit_table(tf) == text
    tf.to_character_table().validate()


def test_table_errors():
    with pytest.raises(FormatError, match=r"row 3: expected 3 values, got 2"):
        parse_table(S3_TEXT.replace("row 2 0 -1", "row 2 0"))
    with pytest.raises(FormatError, match="sum to"):
        parse_table(S3_TEXT.replace("sizes 1 3 2", "sizes 1 3 3"))
    with pytest.raises(FormatError, match="out of range"):
        parse_table(S3_TEXT.replace("powermap 2 1 1 3", "powermap 2 1 1 4"))
    with pytest.raises(FormatError, match="bad cyclotomic"):
        parse_table(S3_TEXT.replace("row 2 0 -1", "row 2 0 bad"))
    with pytest.raises(FormatError, match="missing required field"):
        parse_table("order 6\nclasses 3\n")
    with pytest.raises(FormatError, match="indicator symbol"):
        parse_table(S3_TEXT.replace("indicators + + +", "indicators + + ?"))


@settings(max_examples=150, deadline=None)
@given(st.text(alphabet=st.sampled_from(
    list("abcdefgkmnoprstz ()[];,*^+-/#0123456789\n")), max_size=200))
def test_fuzz_never_crashes(text):
    for fn in (parse_table, parse_group_spec):
        try:
            fn(text)
        except FormatError:
            pass
