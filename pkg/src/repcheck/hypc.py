"""Decision procedures on character tables.

Three checks, each returning a Verdict with explicit witnesses:

- ``check_hypothesis_c``: every pair of distinct irreducible rows with
  the same degree and the same Frobenius-Schur indicator must be complex
  conjugates of each other.
- ``real_degree_profile``: the degrees of the irreducible *real*
  representations (built from the complex rows and their indicators)
  must be pairwise distinct.
- ``complex_degree_uniqueness``: all complex irreducible degrees must be
  pairwise distinct.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartab import CharacterTable, TableError


@dataclass
class Verdict:
    """Outcome of a table check.

    ``witnesses`` holds violating tuples ``(row_indices, degree,
    indicator)``; ``indicator`` is None where the check does not use
    indicators.  ``profile`` is the degree (and indicator) census the
    check examined.  ``passed`` iff ``witnesses`` is empty.
    """

    passed: bool
    witnesses: list[tuple[tuple[int, ...], int, int | None]] = \
        field(default_factory=list)
    profile: list[tuple[int, int | None]] = field(default_factory=list)

    def __post_init__(self):
        assert self.passed == (not self.witnesses)


def _indicators(table: CharacterTable) -> list[int]:
    """Stated or power-map-derived indicators; TableError when neither
    source is available."""
    try:
        return table.frobenius_schur()
    except (TableError, KeyError) as exc:
        raise TableError(
            f"{table.name or 'table'}: indicators unavailable (no stated "
            f"indicator line and no power map for 2)") from exc


def check_hypothesis_c(table: CharacterTable) -> Verdict:
    """Pass iff any two distinct rows sharing degree and indicator are
    complex conjugates of each other.  Also reports every degree whose
    multiplicity exceeds 4 (impossible when the check passes)."""
    ind = _indicators(table)
    degrees = [table.degree(i) for i in range(table.k)]
    witnesses: list[tuple[tuple[int, ...], int, int | None]] = []
    groups: dict[tuple[int, int], list[int]] = {}
    for i in range(table.k):
        groups.setdefault((degrees[i], ind[i]), []).append(i)
    conj = table.conjugate_pairs()
    for (d, nu), members in sorted(groups.items()):
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                i, j = members[a], members[b]
                if conj[i] != j:
                    witnesses.append(((i, j), d, nu))
    by_degree: dict[int, list[int]] = {}
    for i, d in enumerate(degrees):
        by_degree.setdefault(d, []).append(i)
    for d, members in sorted(by_degree.items()):
        if len(members) > 4:
            witnesses.append((tuple(members), d, None))
    profile = sorted(zip(degrees, ind))
    return Verdict(passed=not witnesses, witnesses=witnesses, profile=profile)


def real_degree_profile(table: CharacterTable) \
        -> tuple[list[int], Verdict]:
    """Degrees of the irreducible real representations: d for an
    indicator-+1 row, 2d for an indicator--1 row, and 2d once per
    unordered conjugate pair of non-real rows.  The verdict passes iff
    these degrees are pairwise distinct."""
    ind = _indicators(table)
    conj = table.conjugate_pairs()
    entries: list[tuple[int, tuple[int, ...], int]] = []
    for i in range(table.k):
        d = table.degree(i)
        if ind[i] == 1:
            entries.append((d, (i,), 1))
        elif ind[i] == -1:
            entries.append((2 * d, (i,), -1))
        else:
            j = conj[i]
            if j <= i:
                continue  # count each non-real pair once
            entries.append((2 * d, (i, j), 0))
    by_degree: dict[int, list[tuple[tuple[int, ...], int]]] = {}
    for d, rows, nu in entries:
        by_degree.setdefault(d, []).append((rows, nu))
    witnesses = []
    for d, hits in sorted(by_degree.items()):
        if len(hits) > 1:
            rows = tuple(i for r, _ in hits for i in r)
            witnesses.append((rows, d, None))
    profile = sorted((d, nu) for d, _, nu in entries)
    verdict = Verdict(passed=not witnesses, witnesses=witnesses,
                      profile=profile)
    return sorted(d for d, _, _ in entries), verdict


def complex_degree_uniqueness(table: CharacterTable) -> Verdict:
    """Pass iff all complex irreducible degrees are pairwise distinct."""
    by_degree: dict[int, list[int]] = {}
    for i in range(table.k):
        by_degree.setdefault(table.degree(i), []).append(i)
    witnesses = [(tuple(members), d, None)
                 for d, members in sorted(by_degree.items())
                 if len(members) > 1]
    profile = sorted((table.degree(i), None) for i in range(table.k))
    return Verdict(passed=not witnesses, witnesses=witnesses,
                   profile=profile)
