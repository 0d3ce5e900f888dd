"""Parsers and emitters for the two on-disk text formats.

Group specification files (``.grp``) describe a permutation or matrix
group by generators.  Character-table exchange files (``.ctb``) carry a
full character table: class data, power maps, and exact cyclotomic
values.  Both formats are line-oriented ASCII with ``#`` comments so
that shipped data files stay hand-auditable.

Points in ``.grp`` cycles and class indices in ``.ctb`` power maps are
1-based on disk; in-memory structures are 0-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .chartab import CharacterTable
from .cyclo import Cyclotomic
from .permcore import Permutation


class FormatError(ValueError):
    """A syntax or validation error with file position diagnostics."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# shared line scanner


def _logical_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            out.append((lineno, body))
    return out


def _split_keyword(lineno: int, body: str) -> tuple[str, str, int]:
    stripped = body.lstrip()
    col = len(body) - len(stripped) + 1
    parts = stripped.split(None, 1)
    keyword = parts[0]
    rest = parts[1] if len(parts) > 1 else ""
    return keyword, rest, col


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what}: not an integer: {token!r}", lineno)


# ---------------------------------------------------------------------------
# group specification files


@dataclass
class GroupSpecFile:
    """A structurally validated group description.

    ``kind`` is ``"perm"`` (with ``degree`` and Permutation generators)
    or ``"mat"`` (with ``prime``, ``dim`` and integer-matrix generators
    reduced mod ``prime``).
    """

    name: str
    kind: str
    degree: int = 0
    prime: int = 0
    dim: int = 0
    perm_generators: list[Permutation] = field(default_factory=list)
    mat_generators: list[tuple[tuple[int, ...], ...]] = field(default_factory=list)


_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")


def _parse_cycles(rest: str, degree: int, lineno: int) -> Permutation:
    pos = 0
    cycs = []
    text = rest.strip()
    if text == "()":
        return Permutation.identity(degree)
    while pos < len(text):
        m = _CYCLE_RE.match(text, pos)
        if not m:
            raise FormatError(f"bad cycle syntax: {text[pos:]!r}", lineno,
                              pos + 1)
        pts = [int(t) for t in m.group(1).split(",")]
        for p in pts:
            if not 1 <= p <= degree:
                raise FormatError(f"point {p} out of range 1..{degree}",
                                  lineno, pos + 1)
        if len(set(pts)) != len(pts):
            raise FormatError(f"repeated point in cycle {m.group(0)}", lineno,
                              pos + 1)
        cycs.append(tuple(pts))
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    seen: set[int] = set()
    for cyc in cycs:
        if seen & set(cyc):
            raise FormatError("cycles in one generator must be disjoint",
                              lineno)
        seen |= set(cyc)
    return Permutation.from_cycles(degree, cycs)


def _mat_inverse_exists(mat: tuple[tuple[int, ...], ...], p: int) -> bool:
    n = len(mat)
    rows = [list(r) for r in mat]
    rank = 0
    for c in range(n):
        piv = next((r for r in range(rank, n) if rows[r][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][c] % p:
                f = rows[r][c]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank == n


def _parse_matrix(rest: str, prime: int, dim: int, lineno: int) \
        -> tuple[tuple[int, ...], ...]:
    rows = rest.split(";")
    if len(rows) != dim:
        raise FormatError(f"matrix generator needs {dim} rows separated by "
                          f"';', got {len(rows)}", lineno)
    out = []
    for rtext in rows:
        entries = [t for t in re.split(r"[,\s]+", rtext.strip()) if t]
        if len(entries) != dim:
            raise FormatError(f"matrix row needs {dim} entries, got "
                              f"{len(entries)}", lineno)
        out.append(tuple(_parse_int(t, lineno, "matrix entry") % prime
                         for t in entries))
    mat = tuple(out)
    if not _mat_inverse_exists(mat, prime):
        raise FormatError("matrix generator is not invertible mod "
                          f"{prime}", lineno)
    return mat


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def parse_group_spec(text: str) -> GroupSpecFile:
    """Parse a ``.grp`` group specification."""
    fields: dict[str, tuple[int, str]] = {}
    gens: list[tuple[int, str]] = []
    for lineno, body in _logical_lines(text):
        keyword, rest, col = _split_keyword(lineno, body)
        if keyword == "gen":
            gens.append((lineno, rest))
        elif keyword in ("name", "kind", "degree", "prime", "dim"):
            if keyword in fields:
                raise FormatError(f"duplicate field {keyword!r}", lineno, col)
            fields[keyword] = (lineno, rest.strip())
        else:
            raise FormatError(f"unknown keyword {keyword!r}", lineno, col)

    if "kind" not in fields:
        raise FormatError("missing required field 'kind'", 1)
    kind_line, kind = fields["kind"]
    name = fields.get("name", (0, ""))[1]
    if kind == "perm":
        if "degree" not in fields:
            raise FormatError("perm spec requires 'degree'", kind_line)
        dline, dtext = fields["degree"]
        degree = _parse_int(dtext, dline, "degree")
        if degree < 1:
            raise FormatError("degree must be positive", dline)
        if not gens:
            raise FormatError("no generators given", kind_line)
        perms = [_parse_cycles(rest, degree, ln) for ln, rest in gens]
        return GroupSpecFile(name=name, kind="perm", degree=degree,
                             perm_generators=perms)
    if kind == "mat":
        for req in ("prime", "dim"):
            if req not in fields:
                raise FormatError(f"mat spec requires {req!r}", kind_line)
        pline, ptext = fields["prime"]
        prime = _parse_int(ptext, pline, "prime")
        if not _is_prime(prime):
            raise FormatError(f"{prime} is not prime", pline)
        nline, ntext = fields["dim"]
        dim = _parse_int(ntext, nline, "dim")
        if dim < 1:
            raise FormatError("dim must be positive", nline)
        if not gens:
            raise FormatError("no generators given", kind_line)
        mats = [_parse_matrix(rest, prime, dim, ln) for ln, rest in gens]
        return GroupSpecFile(name=name, kind="mat", prime=prime, dim=dim,
                             mat_generators=mats)
    raise FormatError(f"unknown kind {kind!r} (expected 'perm' or 'mat')",
                      kind_line)


def emit_group_spec(spec: GroupSpecFile) -> str:
    lines = [f"name {spec.name}", f"kind {spec.kind}"]
    if spec.kind == "perm":
        lines.append(f"degree {spec.degree}")
        for g in spec.perm_generators:
            cycs = g.cycles()
            lines.append("gen " + ("".join(
                "(" + ",".join(str(p) for p in c) + ")" for c in cycs)
                if cycs else "()"))
    else:
        lines.append(f"prime {spec.prime}")
        lines.append(f"dim {spec.dim}")
        for m in spec.mat_generators:
            lines.append("gen " + ";".join(
                ",".join(str(x) for x in row) for row in m))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# cyclotomic value syntax: `c` or sums of `c*z^j` at a stated conductor


_TERM_RE = re.compile(r"([+-]?\d+(?:/\d+)?)(?:\*z\^(\d+))?")


def parse_value(token: str, conductor: int, lineno: int = 0) -> Cyclotomic:
    pos = 0
    terms: dict[int, Fraction] = {}
    while pos < len(token):
        if pos and token[pos] == "+":
            pos += 1
        m = _TERM_RE.match(token, pos)
        if not m or m.end() == m.start():
            raise FormatError(f"bad cyclotomic token {token!r}", lineno,
                              pos + 1)
        coeff = Fraction(m.group(1))
        exp = int(m.group(2)) % conductor if m.group(2) is not None else 0
        terms[exp] = terms.get(exp, Fraction(0)) + coeff
        pos = m.end()
    if not terms:
        raise FormatError(f"empty value token {token!r}", lineno)
    return Cyclotomic.from_terms(conductor, terms)


def emit_value(value: Cyclotomic, conductor: int) -> str:
    terms = sorted((j, c) for j, c in value.terms(conductor).items() if c)
    if not terms:
        return "0"
    parts = []
    for i, (j, c) in enumerate(terms):
        sign = "+" if (i and c > 0) else ""
        body = str(c) if j == 0 else f"{c}*z^{j}"
        parts.append(sign + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# character table exchange files


@dataclass
class TableFile:
    """In-memory form of a ``.ctb`` table file (0-based indices)."""

    name: str
    order: int
    k: int
    sizes: list[int]
    element_orders: list[int]
    power_maps: dict[int, list[int]]
    conductor: int
    rows: list[list[Cyclotomic]]
    indicators: list[int] | None = None

    def to_character_table(self) -> CharacterTable:
        return CharacterTable(
            name=self.name, order=self.order, sizes=list(self.sizes),
            element_orders=list(self.element_orders),
            power_maps={p: list(v) for p, v in self.power_maps.items()},
            rows=[list(r) for r in self.rows],
            indicators=(list(self.indicators)
                        if self.indicators is not None else None))

    @classmethod
    def from_character_table(cls, table: CharacterTable,
                             indicators: bool = True) -> "TableFile":
        conductor = 1
        from math import lcm
        for row in table.rows:
            for v in row:
                conductor = lcm(conductor, v.n)
        pm = {p: list(v) for p, v in table.power_maps.items()}
        if 2 not in pm:
            pm[2] = table.class_power_map(2)
        if -1 not in pm:
            pm[-1] = table.inverse_class_map()
        ind = list(table.frobenius_schur()) if indicators else None
        return cls(name=table.name, order=table.order, k=table.k,
                   sizes=list(table.sizes),
                   element_orders=list(table.element_orders),
                   power_maps=pm, conductor=conductor,
                   rows=[list(r) for r in table.rows], indicators=ind)


_IND_CHARS = {"+": 1, "-": -1, "o": 0}
_IND_EMIT = {1: "+", -1: "-", 0: "o"}


def _int_list(rest: str, expect: int, lineno: int, what: str) -> list[int]:
    toks = rest.split()
    if len(toks) != expect:
        raise FormatError(f"{what}: expected {expect} entries, got "
                          f"{len(toks)}", lineno)
    return [_parse_int(t, lineno, what) for t in toks]


def parse_table(text: str) -> TableFile:
    """Parse a ``.ctb`` character table file with full validation."""
    fields: dict[str, tuple[int, str]] = {}
    powermaps: list[tuple[int, str]] = []
    rows: list[tuple[int, str]] = []
    indicators: tuple[int, str] | None = None
    for lineno, body in _logical_lines(text):
        keyword, rest, col = _split_keyword(lineno, body)
        if keyword == "powermap":
            powermaps.append((lineno, rest))
        elif keyword == "row":
            rows.append((lineno, rest))
        elif keyword == "indicators":
            if indicators is not None:
                raise FormatError("duplicate field 'indicators'", lineno, col)
            indicators = (lineno, rest)
        elif keyword in ("name", "order", "classes", "sizes", "orders",
                         "conductor"):
            if keyword in fields:
                raise FormatError(f"duplicate field {keyword!r}", lineno, col)
            fields[keyword] = (lineno, rest.strip())
        else:
            raise FormatError(f"unknown keyword {keyword!r}", lineno, col)

    for req in ("order", "classes", "sizes", "orders", "conductor"):
        if req not in fields:
            raise FormatError(f"missing required field {req!r}", 1)
    name = fields.get("name", (0, ""))[1]
    oline, otext = fields["order"]
    order = _parse_int(otext, oline, "order")
    kline, ktext = fields["classes"]
    k = _parse_int(ktext, kline, "classes")
    if k < 1 or order < 1:
        raise FormatError("order and class count must be positive", kline)
    sline, stext = fields["sizes"]
    sizes = _int_list(stext, k, sline, "sizes")
    if sum(sizes) != order:
        raise FormatError(f"class sizes sum to {sum(sizes)}, not the stated "
                          f"order {order}", sline)
    eline, etext = fields["orders"]
    element_orders = _int_list(etext, k, eline, "orders")
    cline, ctext = fields["conductor"]
    conductor = _parse_int(ctext, cline, "conductor")
    if conductor < 1:
        raise FormatError("conductor must be positive", cline)

    power_maps: dict[int, list[int]] = {}
    for lineno, rest in powermaps:
        toks = rest.split()
        if len(toks) != k + 1:
            raise FormatError(f"powermap: expected a prime and {k} indices",
                              lineno)
        p = _parse_int(toks[0], lineno, "powermap prime")
        if p != -1 and p < 2:
            raise FormatError(f"powermap label must be a prime or -1, got "
                              f"{p}", lineno)
        if p in power_maps:
            raise FormatError(f"duplicate powermap for {p}", lineno)
        imgs = [_parse_int(t, lineno, "powermap index") for t in toks[1:]]
        for i in imgs:
            if not 1 <= i <= k:
                raise FormatError(f"powermap index {i} out of range 1..{k}",
                                  lineno)
        power_maps[p] = [i - 1 for i in imgs]

    if len(rows) != k:
        raise FormatError(f"expected {k} character rows, got {len(rows)}",
                          rows[0][0] if rows else 1)
    parsed_rows = []
    for rowno, (lineno, rest) in enumerate(rows, 1):
        toks = rest.split()
        if len(toks) != k:
            raise FormatError(f"row {rowno}: expected {k} values, got "
                              f"{len(toks)}", lineno)
        parsed_rows.append([parse_value(t, conductor, lineno) for t in toks])

    ind_list = None
    if indicators is not None:
        lineno, rest = indicators
        toks = rest.split()
        if len(toks) != k:
            raise FormatError(f"indicators: expected {k} symbols, got "
                              f"{len(toks)}", lineno)
        ind_list = []
        for t in toks:
            if t not in _IND_CHARS:
                raise FormatError(f"indicator symbol must be one of + - o, "
                                  f"got {t!r}", lineno)
            ind_list.append(_IND_CHARS[t])

    return TableFile(name=name, order=order, k=k, sizes=sizes,
                     element_orders=element_orders, power_maps=power_maps,
                     conductor=conductor, rows=parsed_rows,
                     indicators=ind_list)


def emit_table(tf: TableFile) -> str:
    lines = []
    if tf.name:
        lines.append(f"name {tf.name}")
    lines.append(f"order {tf.order}")
    lines.append(f"classes {tf.k}")
    lines.append("sizes " + " ".join(str(s) for s in tf.sizes))
    lines.append("orders " + " ".join(str(o) for o in tf.element_orders))
    for p in sorted(tf.power_maps, key=lambda x: (x < 0, abs(x))):
        lines.append(f"powermap {p} " +
                     " ".join(str(i + 1) for i in tf.power_maps[p]))
    lines.append(f"conductor {tf.conductor}")
    for row in tf.rows:
        lines.append("row " + " ".join(emit_value(v, tf.conductor)
                                       for v in row))
    if tf.indicators is not None:
        lines.append("indicators " +
                     " ".join(_IND_EMIT[i] for i in tf.indicators))
    return "\n".join(lines) + "\n"
