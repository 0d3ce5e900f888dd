#!/usr/bin/env python3
"""Generate the character table of M23 (order 10 200 960).

The group is too large for the object-per-element path used by the
in-package Dixon driver, so this tool supplies the same class data from
flat numpy arrays instead:

* elements are enumerated breadth-first as rows of a uint8 image table;
* each element is keyed by its images of the first 8 points — injective
  here because only the identity of a 4-transitive group of degree 23
  fixes 8 points (verified at runtime);
* conjugacy classes, power maps and class-sum matrices are computed by
  vectorized indexing over that table;
* the exact eigenspace-splitting core (dixon_from_class_data) finishes
  the job and the table is validated before emission.

Run from the repository root:  python3 tools/gen_m23.py
"""

import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from gen_groups import build_m24, restrict  # noqa: E402
from repcheck.chartab import dixon_from_class_data  # noqa: E402
from repcheck.ctformat import TableFile, emit_table  # noqa: E402
from repcheck.permcore import PermGroup, Permutation  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "src" / "repcheck" / \
    "data" / "tables"

ORDER = 10_200_960
KEYLEN = 8


def two_generators(group: PermGroup) -> list[Permutation]:
    """A two-element generating set, found deterministically."""
    elems = []
    import random
    rng = random.Random(1)
    chain_gens = list(group.generators)
    while True:
        a = chain_gens[rng.randrange(len(chain_gens))]
        b = chain_gens[rng.randrange(len(chain_gens))]
        x = a * b ** rng.randrange(1, 5)
        elems.append(x)
        if len(elems) >= 2:
            cand = PermGroup(elems[-2:], group.degree)
            if cand.order() == group.order():
                return elems[-2:]
        if len(elems) > 200:
            raise AssertionError("generator search failed")


def keys_of(rows: np.ndarray, pows: np.ndarray) -> np.ndarray:
    return rows[:, :KEYLEN].astype(np.int64) @ pows


def enumerate_elements(gens: list[Permutation], degree: int,
                       order: int) -> tuple[np.ndarray, np.ndarray]:
    """All elements as a uint8 row table sorted by key, plus the keys."""
    pows = degree ** np.arange(KEYLEN, dtype=np.int64)
    gimgs = [np.array(g.img, dtype=np.uint8) for g in gens]
    ident = np.arange(degree, dtype=np.uint8)[None, :]
    chunks = [ident]
    all_keys = keys_of(ident, pows)
    frontier = ident
    while frontier.size:
        cands = np.vstack([frontier[:, g] for g in gimgs])
        ck = keys_of(cands, pows)
        uk, uidx = np.unique(ck, return_index=True)
        cands, ck = cands[uidx], uk
        pos = np.searchsorted(all_keys, ck)
        pos = np.minimum(pos, len(all_keys) - 1)
        fresh = all_keys[pos] != ck
        frontier = cands[fresh]
        if frontier.size:
            chunks.append(frontier)
            all_keys = np.sort(np.concatenate([all_keys, ck[fresh]]))
    master = np.vstack(chunks)
    assert len(master) == order, (len(master), order)
    mk = keys_of(master, pows)
    sorter = np.argsort(mk)
    master = master[sorter]
    all_keys = mk[sorter]
    assert len(np.unique(all_keys)) == order, "key is not injective"
    return master, all_keys


def main() -> None:
    t0 = time.time()
    m24 = build_m24()
    s1 = m24.stabilizer(23)
    assert s1.order() == ORDER
    m23 = restrict(s1, [23])
    gens = two_generators(m23)
    degree = m23.degree
    print(f"group ready ({time.time() - t0:.1f}s)")

    master, all_keys = enumerate_elements(gens, degree, ORDER)
    pows = degree ** np.arange(KEYLEN, dtype=np.int64)
    print(f"elements enumerated ({time.time() - t0:.1f}s)")

    def index_of(rows: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(all_keys, keys_of(rows, pows))
        return idx

    gimgs = [np.array(g.img, dtype=np.uint8) for g in gens]
    ginvs = [np.array(g.inverse().img, dtype=np.uint8) for g in gens]

    cid = np.full(ORDER, -1, dtype=np.int32)
    reps: list[Permutation] = []
    sizes: list[int] = []
    scan = 0
    while True:
        unassigned = np.flatnonzero(cid[scan:] == -1)
        if unassigned.size == 0:
            break
        start = scan + int(unassigned[0])
        scan = start
        c = len(reps)
        cid[start] = c
        reps.append(Permutation([int(x) for x in master[start]]))
        frontier = np.array([start])
        total = 1
        while frontier.size:
            collected = []
            x_rows = master[frontier]
            for g, gi in zip(gimgs, ginvs):
                y = gi[x_rows[:, g]]
                idx = index_of(y)
                take = idx[cid[idx] == -1]
                if take.size:
                    take = np.unique(take)
                    cid[take] = c
                    collected.append(take)
            total += sum(t.size for t in collected)
            frontier = np.concatenate(collected) if collected else \
                np.empty(0, dtype=np.int64)
        sizes.append(int(np.count_nonzero(cid == c)))
    k = len(reps)
    assert sum(sizes) == ORDER
    print(f"{k} classes ({time.time() - t0:.1f}s): sizes {sizes}")

    orders = [r.order() for r in reps]
    # canonical class order: identity first, then by (order, size, key)
    perm = sorted(range(k), key=lambda c: (orders[c], sizes[c],
                                           reps[c].img))
    relabel = {old: new for new, old in enumerate(perm)}
    reps = [reps[old] for old in perm]
    sizes = [sizes[old] for old in perm]
    orders = [orders[old] for old in perm]
    remap = np.array([relabel[c] for c in range(k)], dtype=np.int32)
    cid = remap[cid]

    def class_of(p: Permutation) -> int:
        row = np.array(p.img, dtype=np.uint8)[None, :]
        return int(cid[index_of(row)[0]])

    inv_class = [class_of(r.inverse()) for r in reps]
    power_classes = [[class_of(reps[i] ** t) for t in range(orders[i])]
                     for i in range(k)]
    primes = [p for p in (2, 3, 5, 7, 11, 23) if ORDER % p == 0]
    power_maps = {p: [class_of(r ** p) for r in reps] for p in primes}

    reps_img = [np.array(r.img, dtype=np.uint8) for r in reps]

    def class_matrix(j: int) -> list[list[int]]:
        rows = master[cid == inv_class[j]]
        mat = [[0] * k for _ in range(k)]
        for l in range(k):
            prod = rows[:, reps_img[l]]
            counts = np.bincount(cid[index_of(prod)], minlength=k)
            for i in range(k):
                mat[i][l] = int(counts[i])
        return mat

    table = dixon_from_class_data("M23", ORDER, sizes, orders, class_matrix,
                                  power_classes, inv_class, power_maps,
                                  seed=0)
    print(f"table computed ({time.time() - t0:.1f}s)")
    table.validate()
    print(f"table validated ({time.time() - t0:.1f}s)")
    tf = TableFile.from_character_table(table, indicators=True)
    header = ("# Character table of M23, computed by the exact\n"
              "# eigenspace-splitting core of this package from class data\n"
              "# assembled by vectorized element enumeration\n"
              "# (tools/gen_m23.py, seed 0); validated against the\n"
              "# orthogonality relations before emission.\n")
    OUT.mkdir(parents=True, exist_ok=True)
    path = OUT / "M23.ctb"
    path.write_text(header + emit_table(tf))
    print(f"wrote {path} ({time.time() - t0:.1f}s)")


if __name__ == "__main__":
    main()
