"""Reproduce the bound calculus end to end for one group, A8:

- |P|, the number of cyclic subgroups of prime order, by element census;
- D, the smallest dimension from which the crude regular-orbit estimate
  always gives at least five regular orbits;
- b(|G|) and the candidate degree set N1 from maximal subgroup indices;
- the subgroup-derived index sets N(H), W(H) for a small group, with
  the distinct-sum feasibility check that rules the case out.

Run:  python3 demos/bound_calculus.py
"""

from math import comb

from repcheck import bounds, catalog


def main() -> None:
    a8 = catalog.build("A8")
    order = a8.order()
    pcount = bounds.prime_order_cyclic_count(a8)
    rt = catalog.load_rtable()
    r = rt.r_of_group("A8")
    print(f"A8: |G| = {order}, |P| = {pcount}, r = {r}")
    print(f"  dimension threshold D = "
          f"{bounds.dimension_threshold(order, pcount, r)}")

    b = bounds.b_of(order)
    indices = catalog.load_maximal_indices()["A8"]
    raw, refined = bounds.n1_of(order, indices)
    print(f"  b({order}) = {b}; maximal indices {indices}")
    print(f"  N1 raw {sorted(raw)} -> refined {sorted(refined)} "
          f"(16 = 2*8 needs an index-2 subgroup of A7, which is simple)")

    frob = catalog.build("C7:C3")
    n_set, w_set = bounds.nh_wh(frob)
    print(f"\nC7:C3: N(H) = {sorted(n_set)}, W(H) = {sorted(w_set)}")
    k = 3
    target = comb(7, k)
    feasible = bounds.distinct_sum_feasible(target, w_set)
    print(f"  C(7,{k}) = {target} as a sum of distinct members of W(H): "
          f"{'feasible' if feasible else 'infeasible'} -> "
          f"{'no contradiction' if feasible else 'case ruled out'}")


if __name__ == "__main__":
    main()
