#!/usr/bin/env python3
"""Generate the shipped permutation-generator data files (.grp).

Constructions, each verified by the group order before anything is
written:

* M11: the classical pair of generators on 11 points (an 11-cycle and a
  product of two 4-cycles), order 7920.
* M24: the projective line of F_23 (24 points) acted on by
  y -> y+1, y -> 2y, y -> -1/y and the Mathieu map
  y -> y^3/9 (y a nonzero square), y -> 9 y^3 (y a non-square),
  fixing 0 and infinity; order 244823040.
* M22: the stabilizer in M24 of two points, relabelled to degree 22,
  order 443520.
* SU3(3): a seeded random search for unitary matrices over F_9 with
  determinant one (Hermitian form = identity), acting on the 28
  isotropic projective points; order 6048.

Run from the repository root:  python3 tools/gen_groups.py
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from repcheck.ctformat import GroupSpecFile, emit_group_spec  # noqa: E402
from repcheck.permcore import PermGroup, Permutation  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "src" / "repcheck" / \
    "data" / "groups"


def write_spec(stem: str, comment: str, group: PermGroup, name: str) -> None:
    spec = GroupSpecFile(name=name, kind="perm", degree=group.degree,
                         perm_generators=list(group.generators))
    text = "".join(f"# {line}\n" for line in comment.splitlines())
    text += emit_group_spec(spec)
    path = OUT / f"{stem}.grp"
    path.write_text(text)
    print(f"wrote {path} (order {group.order()})")


def build_m11() -> PermGroup:
    a = Permutation.from_cycles(11, [tuple(range(1, 12))])
    b = Permutation.from_cycles(11, [(3, 7, 11, 8), (4, 10, 5, 6)])
    g = PermGroup([a, b])
    assert g.order() == 7920, g.order()
    return g


def build_m24() -> PermGroup:
    # points 0..22 = F_23, point 23 = infinity
    oo = 23
    squares = {(x * x) % 23 for x in range(1, 23)}
    ninth = pow(9, 21, 23)  # 1/9 mod 23

    def delta(y: int) -> int:
        if y == 0 or y == oo:
            return y
        if y in squares:
            return (pow(y, 3, 23) * ninth) % 23
        return (9 * pow(y, 3, 23)) % 23

    alpha = Permutation([(y + 1) % 23 for y in range(23)] + [oo])
    beta = Permutation([(2 * y) % 23 for y in range(23)] + [oo])
    gamma = Permutation([oo] + [(-pow(y, 21, 23)) % 23
                                for y in range(1, 23)] + [0])
    dlt = Permutation([delta(y) for y in range(23)] + [oo])
    g = PermGroup([alpha, beta, gamma, dlt])
    assert g.order() == 244823040, g.order()
    return g


def restrict(group: PermGroup, fixed: list[int]) -> PermGroup:
    """Relabel a group fixing the given points onto the remaining ones."""
    moving = [x for x in range(group.degree) if x not in fixed]
    pos = {x: i for i, x in enumerate(moving)}
    gens = []
    for g in group.generators:
        assert all(g(x) == x for x in fixed)
        gens.append(Permutation([pos[g(x)] for x in moving]))
    return PermGroup(gens, len(moving))


def build_m22(m24: PermGroup) -> PermGroup:
    s1 = m24.stabilizer(23)
    assert s1.order() == 10200960, s1.order()   # M23
    s2 = s1.stabilizer(22)
    assert s2.order() == 443520, s2.order()     # M22
    g = restrict(s2, [22, 23])
    assert g.order() == 443520
    return g


# --- F_9 arithmetic: x = a + b*t with t^2 = 2, encoded as a + 3*b ----------


def f9_mul(x: int, y: int) -> int:
    a, b = x % 3, x // 3
    c, d = y % 3, y // 3
    return (a * c + 2 * b * d) % 3 + 3 * ((a * d + b * c) % 3)


def f9_add(x: int, y: int) -> int:
    return (x + y) % 3 + 3 * ((x // 3 + y // 3) % 3)


def f9_conj(x: int) -> int:    # Frobenius a + bt -> a - bt
    return x % 3 + 3 * ((-(x // 3)) % 3)


def mat9_mul(a, b):
    return tuple(tuple(
        f9_add(f9_add(f9_mul(a[i][0], b[0][j]), f9_mul(a[i][1], b[1][j])),
               f9_mul(a[i][2], b[2][j])) for j in range(3))
        for i in range(3))


def mat9_det(m) -> int:
    def mul3(x, y, z):
        return f9_mul(f9_mul(x, y), z)
    plus = f9_add(f9_add(mul3(m[0][0], m[1][1], m[2][2]),
                         mul3(m[0][1], m[1][2], m[2][0])),
                  mul3(m[0][2], m[1][0], m[2][1]))
    minus = f9_add(f9_add(mul3(m[0][2], m[1][1], m[2][0]),
                          mul3(m[0][0], m[1][2], m[2][1])),
                   mul3(m[0][1], m[1][0], m[2][2]))
    neg = (-(minus % 3)) % 3 + 3 * ((-(minus // 3)) % 3)
    return f9_add(plus, neg)


IDENT9 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def is_special_unitary(m) -> bool:
    dag = tuple(tuple(f9_conj(m[j][i]) for j in range(3)) for i in range(3))
    return mat9_mul(dag, m) == IDENT9 and mat9_det(m) == 1


def build_su33() -> PermGroup:
    rng = random.Random(0)
    gens = []
    # vectors of F_9^3 encoded base 9; scalars act coordinatewise
    def vec_apply(m, v):
        out = []
        for i in range(3):
            s = 0
            for j in range(3):
                s = f9_add(s, f9_mul(m[i][j], v[j]))
            out.append(s)
        return tuple(out)

    # the 28 isotropic projective points of sum x_i * conj(x_i) = 0
    points = []
    seen = set()
    for code in range(1, 9 ** 3):
        v = (code % 9, (code // 9) % 9, code // 81)
        if v in seen:
            continue
        norm = 0
        for x in v:
            norm = f9_add(norm, f9_mul(x, f9_conj(x)))
        if norm != 0:
            continue
        cls = frozenset(tuple(f9_mul(s, x) for x in v)
                        for s in range(1, 9))
        seen |= cls
        points.append(cls)
    assert len(points) == 28, len(points)
    pindex = {}
    for i, cls in enumerate(points):
        for v in cls:
            pindex[v] = i

    def to_perm(m) -> Permutation:
        img = [None] * 28
        for i, cls in enumerate(points):
            img[i] = pindex[vec_apply(m, next(iter(cls)))]
        return Permutation(img)

    while True:
        m = tuple(tuple(rng.randrange(9) for _ in range(3))
                  for _ in range(3))
        if not is_special_unitary(m):
            continue
        gens.append(m)
        group = PermGroup([to_perm(g) for g in gens], 28)
        if group.order() == 6048:
            break
        if len(gens) > 8:
            raise AssertionError("search failed to close on SU3(3)")
    # trim to a minimal tail of the generator list that still closes
    while len(gens) > 1:
        trimmed = PermGroup([to_perm(g) for g in gens[1:]], 28)
        if trimmed.order() != 6048:
            break
        gens = gens[1:]
    return PermGroup([to_perm(g) for g in gens], 28)


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    m11 = build_m11()
    write_spec("m11", "Mathieu group M11 on 11 points.\n"
               "Generators: the classical 11-cycle and double-4-cycle "
               "pair; order verified = 7920.", m11, "M11")
    m24 = build_m24()
    m22 = build_m22(m24)
    write_spec("m22", "Mathieu group M22 on 22 points.\n"
               "Constructed as the two-point stabilizer of M24 acting on\n"
               "the projective line of F_23 (generators y+1, 2y, -1/y and\n"
               "the square/non-square cubing map); order verified = "
               "443520.", m22, "M22")
    su33 = build_su33()
    write_spec("su33", "SU(3,3) on the 28 isotropic points of the\n"
               "Hermitian unital over F_9 (form = identity matrix,\n"
               "t^2 = 2 field model); determinant-one unitary matrices\n"
               "found by seeded random search; order verified = 6048.",
               su33, "SU3(3)")


if __name__ == "__main__":
    main()
