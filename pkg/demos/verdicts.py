"""Walk the built-in catalog and print, for every group whose character
table can be computed on-machine, the two verdicts the library is built
around: degree/indicator uniqueness (``hypc``) and distinctness of the
real irreducible degrees (``corb``).

Run:  python3 demos/verdicts.py
"""

from repcheck import catalog, hypc
from repcheck.chartab import dixon_schneider
from repcheck.permcore import PermGroup


def main() -> None:
    print(f"{'group':<14} {'order':>10}  {'hypc':<5} {'real-distinct':<13} "
          f"real degrees")
    for ent in catalog.entries():
        if ent.builder is None:
            continue
        if ent.expected_order > 50_000:
            continue  # shipped .ctb data covers the large groups
        grp = catalog.build(ent.name)
        if not isinstance(grp, PermGroup):
            continue
        table = dixon_schneider(grp, name=ent.name)
        report(ent.name, table)
    for ent in catalog.entries():
        if ent.table_source != "data-file":
            continue
        try:
            table = catalog.load_table(ent.name)
        except catalog.CatalogError:
            continue  # no table data shipped for this entry
        report(f"{ent.name} (data)", table)


def report(label: str, table) -> None:
    a = hypc.check_hypothesis_c(table).passed
    degrees, b = hypc.real_degree_profile(table)
    print(f"{label:<14} {table.order:>10}  "
          f"{'PASS' if a else 'fail':<5} "
          f"{'PASS' if b.passed else 'fail':<13} {degrees}")


if __name__ == "__main__":
    main()
