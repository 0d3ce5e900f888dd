"""Count orbits of matrix groups on finite modules, exactly.

Three quick examples:
- the alternating group A8 on its 7-dimensional deleted permutation
  module over F_7 (all 823543 vectors are visited);
- the order-24 complement inside the affine group of order 600 acting
  on the characters of its base group 5^2 (a single regular orbit);
- the crude lower bound for the number of regular orbits, computed as
  an exact rational, for A8 in dimension 46 over F_2.

Run:  python3 demos/orbit_counting.py
"""

from repcheck import bounds, catalog
from repcheck.modfp import (FpModuleAction, MatFp, deleted_perm, dual,
                            matrix_group_order, orbit_census)


def main() -> None:
    a8 = catalog.build("A8")
    census = orbit_census(deleted_perm(a8, 7))
    print("A8 on F_7^7 (deleted permutation module):")
    for length, count in census.histogram:
        print(f"  {count:>5} orbits of length {length}")
    print(f"  regular: {census.regular_count}, "
          f"half-regular: {census.half_regular_count}")

    mats = [MatFp(5, [[0, 4], [1, 0]]), MatFp(5, [[3, 3], [4, 1]])]
    comp = FpModuleAction(5, 2, mats, matrix_group_order(mats))
    census = orbit_census(dual(comp))
    print(f"\norder-{comp.group_order} complement on the dual of F_5^2: "
          f"{census.histogram}")

    pcount = bounds.prime_order_cyclic_count(a8)
    lb = bounds.regular_orbit_lower_bound(a8.order(), 2, 46,
                                          [(pcount, 4)])
    print(f"\nA8 regular-orbit lower bound on F_2^46 "
          f"(|P| = {pcount}): >= {lb} (exact rational)")


if __name__ == "__main__":
    main()
