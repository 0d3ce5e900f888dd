"""Registry of named groups: constructive recipes at small scale, plus
shipped generator and character-table data files for the large groups.

Every entry records its expected order; a mismatch between a
construction (or a parsed data file) and the expected order is a hard
failure, since it signals a transcription error rather than a
recoverable condition.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Optional, Union

from .bounds import RTable
from .chartab import CharacterTable
from .ctformat import parse_group_spec, parse_table
from .modfp import FpModuleAction, MatFp, matrix_group_order
from .permcore import PermGroup, Permutation

GroupLike = Union[PermGroup, FpModuleAction]


class CatalogError(ValueError):
    pass


def data_dir() -> Path:
    override = os.environ.get("REPCHECK_DATA")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


# ---------------------------------------------------------------------------
# construction helpers


def _cyc(n: int, *cycs) -> Permutation:
    return Permutation.from_cycles(n, cycs)


def _linear_perm(p: int, mat) -> Permutation:
    """The permutation of F_p^2 (row vectors, lexicographic) induced by a
    2x2 matrix acting on the right as v -> mat v."""
    pts = [(a, b) for a in range(p) for b in range(p)]
    idx = {v: i for i, v in enumerate(pts)}
    return Permutation([idx[((mat[0][0] * v[0] + mat[0][1] * v[1]) % p,
                             (mat[1][0] * v[0] + mat[1][1] * v[1]) % p)]
                        for v in pts])


def _translations(p: int) -> list[Permutation]:
    pts = [(a, b) for a in range(p) for b in range(p)]
    idx = {v: i for i, v in enumerate(pts)}
    return [Permutation([idx[((v[0] + 1) % p, v[1])] for v in pts]),
            Permutation([idx[(v[0], (v[1] + 1) % p)] for v in pts])]


def _affine_plane_group(p: int, mats) -> PermGroup:
    return PermGroup([_linear_perm(p, m) for m in mats] + _translations(p))


# --- the field with eight elements, as bitmasks over x^3 + x + 1 ----------


def _f8_mul(a: int, b: int) -> int:
    r = 0
    for i in range(3):
        if b & (1 << i):
            r ^= a << i
    for i in (4, 3):
        if r & (1 << i):
            r ^= 0b1011 << (i - 3)
    return r


def _f8_inv(a: int) -> int:
    for b in range(1, 8):
        if _f8_mul(a, b) == 1:
            return b
    raise ValueError("zero has no inverse")


def _agammal18() -> PermGroup:
    """Semilinear affine maps x -> a * x^sigma + b on F_8 (degree 8)."""
    mul_gen = Permutation([_f8_mul(2, x) for x in range(8)])
    frob = Permutation([_f8_mul(x, x) for x in range(8)])
    add_one = Permutation([x ^ 1 for x in range(8)])
    return PermGroup([mul_gen, frob, add_one])


def _pgammal28() -> PermGroup:
    """Semilinear fractional-linear maps on the projective line of F_8
    (9 points; point 8 is infinity)."""
    oo = 8
    shift = Permutation([x ^ 1 for x in range(8)] + [oo])
    mul = Permutation([_f8_mul(2, x) for x in range(8)] + [oo])
    inv_img = [oo] + [_f8_inv(x) for x in range(1, 8)] + [0]
    inv = Permutation(inv_img)
    frob = Permutation([_f8_mul(x, x) for x in range(8)] + [oo])
    return PermGroup([shift, mul, inv, frob])


def _psl27() -> PermGroup:
    """PSL(2,7) = SL3(2) on the projective line of F_7 (point 7 = oo)."""
    oo = 7
    shift = Permutation([1, 2, 3, 4, 5, 6, 0, oo])
    inv = Permutation([oo] + [(-pow(x, 5, 7)) % 7 for x in range(1, 7)] + [0])
    return PermGroup([shift, inv])


# --- the two (C7 x C7) : SL2(3) groups -------------------------------------


def _mat_mul7(a, b):
    return ((a[0][0] * b[0][0] + a[0][1] * b[1][0]) % 7,
            (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % 7), \
           ((a[1][0] * b[0][0] + a[1][1] * b[1][0]) % 7,
            (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % 7)


def _mat_order7(a) -> int:
    ident = ((1, 0), (0, 1))
    x, o = a, 1
    while x != ident:
        x = _mat_mul7(x, a)
        o += 1
        if o > 48:
            raise AssertionError("order overflow in GL(2,7)")
    return o


@lru_cache(maxsize=1)
def _gl27_elements() -> list:
    out = []
    for a in range(7):
        for b in range(7):
            for c in range(7):
                for d in range(7):
                    if (a * d - b * c) % 7:
                        out.append(((a, b), (c, d)))
    return out


def _mat_inv7(m):
    det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 7
    di = pow(det, 5, 7)
    return ((m[1][1] * di) % 7, (-m[0][1] * di) % 7), \
           ((-m[1][0] * di) % 7, (m[0][0] * di) % 7)


def _sl23_planes(seed: int = 0, trials: int = 20000) -> list[frozenset]:
    """All GL(2,7)-conjugacy classes of subgroups isomorphic to SL2(3),
    found by seeded random search; returns one representative per class,
    sorted with the determinant-one class first."""
    rng = random.Random(seed)
    ident = ((1, 0), (0, 1))
    gl = _gl27_elements()
    found: list[frozenset] = []
    seen_sets: set[frozenset] = set()
    for _ in range(trials):
        x, y = rng.choice(gl), rng.choice(gl)
        # breadth-first closure, abandoned beyond order 24
        elems = {ident}
        frontier = [ident]
        small = True
        while frontier and small:
            nxt = []
            for g in frontier:
                for s in (x, y):
                    h = _mat_mul7(g, s)
                    if h not in elems:
                        elems.add(h)
                        nxt.append(h)
                        if len(elems) > 24:
                            small = False
            frontier = nxt
        if not small or len(elems) != 24:
            continue
        sub = frozenset(elems)
        if sub in seen_sets:
            continue
        census: dict[int, int] = {}
        for g in elems:
            o = _mat_order7(g)
            census[o] = census.get(o, 0) + 1
        if census != {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}:
            continue
        # record the whole conjugation orbit so later hits dedup in O(1)
        for g in gl:
            gi = _mat_inv7(g)
            seen_sets.add(frozenset(_mat_mul7(_mat_mul7(g, m), gi)
                                    for m in sub))
        found.append(sub)

    def det_one(sub: frozenset) -> bool:
        return all((m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 7 == 1
                   for m in sub)

    found.sort(key=lambda s: (not det_one(s), sorted(s)))
    return found


@lru_cache(maxsize=1)
def _g1176_pair() -> tuple[PermGroup, PermGroup]:
    planes = _sl23_planes()
    if len(planes) != 2:
        raise CatalogError(
            f"expected exactly two conjugacy classes of SL2(3) planes in "
            f"GL(2,7), found {len(planes)}")
    groups = []
    for plane in planes:
        # two generators suffice: an order-4 and an order-3 element that
        # close to the whole plane
        gens_m = None
        for a in sorted(plane):
            if _mat_order7(a) != 4:
                continue
            for b in sorted(plane):
                if _mat_order7(b) != 3:
                    continue
                elems = {((1, 0), (0, 1))}
                frontier = [((1, 0), (0, 1))]
                while frontier:
                    nxt = []
                    for g in frontier:
                        for s in (a, b):
                            h = _mat_mul7(g, s)
                            if h not in elems:
                                elems.add(h)
                                nxt.append(h)
                    frontier = nxt
                if len(elems) == 24:
                    gens_m = (a, b)
                    break
            if gens_m:
                break
        assert gens_m is not None
        mats = [[[g[0][0], g[0][1]], [g[1][0], g[1][1]]] for g in gens_m]
        pts = [(u, v) for u in range(7) for v in range(7)]
        idx = {v: i for i, v in enumerate(pts)}
        gens = [Permutation([idx[((m[0][0] * v[0] + m[0][1] * v[1]) % 7,
                                  (m[1][0] * v[0] + m[1][1] * v[1]) % 7)]
                             for v in pts]) for m in mats]
        gens.append(Permutation([idx[((v[0] + 1) % 7, v[1])] for v in pts]))
        gens.append(Permutation([idx[(v[0], (v[1] + 1) % 7)] for v in pts]))
        groups.append(PermGroup(gens))
    return groups[0], groups[1]


# --- recipes ----------------------------------------------------------------


def _build_c2():
    return PermGroup([_cyc(2, (1, 2))])


def _build_c3():
    return PermGroup([_cyc(3, (1, 2, 3))])


def _build_q8():
    return PermGroup([_cyc(8, (1, 2, 3, 4), (5, 8, 7, 6)),
                      _cyc(8, (1, 5, 3, 7), (2, 6, 4, 8))])


def _build_s4():
    return PermGroup([_cyc(4, (1, 2, 3, 4)), _cyc(4, (1, 2))])


def _build_a4():
    return PermGroup([_cyc(4, (1, 2, 3)), _cyc(4, (1, 2), (3, 4))])


def _build_c7xc3():
    return PermGroup([_cyc(10, (1, 2, 3, 4, 5, 6, 7)),
                      _cyc(10, (8, 9, 10))])


def _build_c7c3():
    return PermGroup([_cyc(7, (1, 2, 3, 4, 5, 6, 7)),
                      Permutation([(2 * x) % 7 for x in range(7)])])


def _build_sl23():
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def perm(m):
        return Permutation([idx[((m[0][0] * v[0] + m[0][1] * v[1]) % 3,
                                 (m[1][0] * v[0] + m[1][1] * v[1]) % 3)]
                            for v in vecs])

    return PermGroup([perm([[1, 1], [0, 1]]), perm([[0, 2], [1, 0]])])


def _build_a8():
    return PermGroup([_cyc(8, (1, 2, 3)), _cyc(8, (2, 3, 4, 5, 6, 7, 8))])


def _build_gl42():
    a = MatFp(2, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0]])
    b = MatFp(2, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    return FpModuleAction(2, 4, [a, b], matrix_group_order([a, b]))


def _build_from_file(stem: str) -> GroupLike:
    path = data_dir() / "groups" / f"{stem}.grp"
    if not path.exists():
        raise CatalogError(f"missing group data file: {path}")
    spec = parse_group_spec(path.read_text())
    if spec.kind == "perm":
        return PermGroup(spec.perm_generators)
    gens = [MatFp(spec.prime, m) for m in spec.mat_generators]
    return FpModuleAction(spec.prime, spec.dim, gens,
                          matrix_group_order(gens))


# ---------------------------------------------------------------------------
# the registry


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expected_order: int
    builder: Optional[Callable[[], GroupLike]]
    table_source: str                 # "compute" or "data-file"
    in_script_l: bool = False         # member of the list L of simple-ish
                                      # groups from the classification
    expected_hypc: Optional[bool] = None
    expected_real_profile: Optional[bool] = None
    description: str = ""

    @property
    def buildable(self) -> bool:
        return self.builder is not None


_ENTRIES: list[CatalogEntry] = [
    CatalogEntry("C2", 2, _build_c2, "compute", False, False, False,
                 "cyclic of order 2"),
    CatalogEntry("C3", 3, _build_c3, "compute", False, True, True,
                 "cyclic of order 3"),
    CatalogEntry("Q8", 8, _build_q8, "compute", False, False, False,
                 "quaternion group, regular action"),
    CatalogEntry("S4", 24, _build_s4, "compute", False, False, False,
                 "symmetric group on 4 points"),
    CatalogEntry("A4", 12, _build_a4, "compute", False, True, True,
                 "alternating group on 4 points"),
    CatalogEntry("C7xC3", 21, _build_c7xc3, "compute", False, False, False,
                 "abelian C7 x C3"),
    CatalogEntry("C7:C3", 21, _build_c7c3, "compute", False, True, True,
                 "Frobenius group of order 21 (x -> 2x on F_7)"),
    CatalogEntry("SL2(3)", 24, _build_sl23, "compute", False, True, False,
                 "SL(2,3) on the 8 nonzero vectors of F_3^2"),
    CatalogEntry("AGammaL(1,8)", 168, _agammal18, "compute", False, True,
                 True, "semilinear affine maps of F_8, degree 8"),
    CatalogEntry("G1_216", 216, lambda: _affine_plane_group(
        3, [[[1, 1], [0, 1]], [[0, 2], [1, 0]]]), "compute", False, True,
        False, "(C3 x C3) : SL2(3), affine on F_3^2"),
    CatalogEntry("G2_600", 600, lambda: _affine_plane_group(
        5, [[[0, 4], [1, 0]], [[3, 3], [4, 1]]]), "compute", False, True,
        False, "(C5 x C5) : SL2(3), affine on F_5^2"),
    CatalogEntry("G1176a", 1176, lambda: _g1176_pair()[0], "compute", False,
                 False, False,
                 "(C7 x C7) : SL2(3), determinant-one plane"),
    CatalogEntry("G1176b", 1176, lambda: _g1176_pair()[1], "compute", False,
                 False, False,
                 "(C7 x C7) : SL2(3), non-determinant-one plane"),
    CatalogEntry("A8", 20160, _build_a8, "compute", True, True, True,
                 "alternating group on 8 points"),
    CatalogEntry("SL3(2)", 168, _psl27, "compute", True, True, False,
                 "SL(3,2) = PSL(2,7) on the projective line of F_7"),
    CatalogEntry("GL(4,2)", 20160, _build_gl42, "compute", False, None, None,
                 "GL(4,2) as a matrix group over F_2"),
    CatalogEntry("PGammaL(2,8)", 1512, _pgammal28, "data-file", True, True,
                 None, "PGammaL(2,8) = SL2(8).3 on 9 projective points"),
    CatalogEntry("M11", 7920, lambda: _build_from_file("m11"), "compute",
                 True, True, True, "Mathieu group on 11 points"),
    CatalogEntry("M22", 443520, lambda: _build_from_file("m22"), "data-file",
                 True, True, None, "Mathieu group on 22 points"),
    CatalogEntry("SU3(3)", 6048, lambda: _build_from_file("su33"),
                 "data-file", True, True, None,
                 "SU(3,3) on the 28 isotropic points of the Hermitian "
                 "unital over F_9"),
    CatalogEntry("M23", 10200960, None, "data-file", True, True, None,
                 "Mathieu group on 23 points (table data only)"),
    CatalogEntry("M24", 244823040, None, "data-file", True, True, None,
                 "Mathieu group on 24 points (table data only)"),
    CatalogEntry("McL", 898128000, None, "data-file", True, True, None,
                 "McLaughlin group (table data only)"),
    CatalogEntry("Th", 90745943887872000, None, "data-file", True, True,
                 None, "Thompson group (table data only)"),
    CatalogEntry("O8+(2).3", 522547200, None, "data-file", True, True, None,
                 "O8+(2).3 (table data only)"),
    CatalogEntry("Sp6(2)", 1451520, None, "data-file", False, None, None,
                 "Sp(6,2) (table data only, optional)"),
    CatalogEntry("O8+(2)", 174182400, None, "data-file", False, None, None,
                 "O8+(2) (table data only, optional)"),
]

_BY_NAME = {e.name: e for e in _ENTRIES}


def entries() -> list[CatalogEntry]:
    return list(_ENTRIES)


def list_catalog() -> list[CatalogEntry]:
    return entries()


def names() -> list[str]:
    return [e.name for e in _ENTRIES]


def entry(name: str) -> CatalogEntry:
    if name not in _BY_NAME:
        raise CatalogError(f"unknown catalog name: {name!r}")
    return _BY_NAME[name]


@lru_cache(maxsize=None)
def build(name: str) -> GroupLike:
    ent = entry(name)
    if ent.builder is None:
        raise CatalogError(f"{name} has no desk-scale construction; only "
                           f"table data is available")
    grp = ent.builder()
    order = grp.order() if isinstance(grp, PermGroup) else grp.group_order
    if order != ent.expected_order:
        raise CatalogError(f"{name}: constructed order {order} does not "
                           f"match expected {ent.expected_order}")
    return grp


def load_table(name: str) -> CharacterTable:
    ent = entry(name)
    path = data_dir() / "tables" / f"{name}.ctb"
    if not path.exists():
        raise CatalogError(f"missing table data file: {path}")
    tf = parse_table(path.read_text())
    table = tf.to_character_table()
    if table.order != ent.expected_order:
        raise CatalogError(f"{name}: table order {table.order} does not "
                           f"match expected {ent.expected_order}")
    table.validate()
    return table


# ---------------------------------------------------------------------------
# shipped numeric data


def load_rtable() -> RTable:
    path = data_dir() / "rtable.dat"
    entries_: list[tuple[str, str, int, int, int]] = []
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        gname, label, order, size, r = line.split()
        entries_.append((gname, label, int(order), int(size), int(r)))
    return RTable(entries_)


def load_maximal_indices() -> dict[str, list[int]]:
    path = data_dir() / "maximal_indices.dat"
    out: dict[str, list[int]] = {}
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        out[parts[0]] = [int(x) for x in parts[1:]]
    return out
