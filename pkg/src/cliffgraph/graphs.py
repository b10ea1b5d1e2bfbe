"""Simple loop-free graphs on up to 64 vertices, stored as bitset adjacency rows.

``rows[i]`` is an n-bit integer whose bit ``j`` is set iff vertices ``i`` and
``j`` are adjacent.  Vertices are numbered 0..n-1 internally; every printed or
serialized vertex number is 1-based.  Graph values are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import CapacityError, Graph6Error, ParameterError

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise CapacityError(
                f"vertex count must be between 1 and {MAX_VERTICES}, got {self.n}"
            )
        if len(self.rows) != self.n:
            raise ParameterError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        width = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~width:
                raise ParameterError(f"row {i + 1} has bits beyond vertex {self.n}")
            if (row >> i) & 1:
                raise ParameterError(f"loop at vertex {i + 1}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j) & 1 != (self.rows[j] >> i) & 1:
                    raise ParameterError(f"adjacency not symmetric at ({i + 1},{j + 1})")

    def __repr__(self):
        edges = ",".join(f"{{{i + 1},{j + 1}}}" for i, j in self.edges())
        return f"Graph(n={self.n}, edges=[{edges}])"

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return bin(self.rows[i]).count("1")

    def edges(self):
        for i in range(self.n):
            row = self.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    yield (i, j)
                row >>= 1
                j += 1

    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(self.n)) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((self.degree(i) for i in range(self.n)), reverse=True))

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.rows[i] == 0)


def from_edges(n: int, edges) -> Graph:
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise ParameterError(f"loop at vertex {i + 1}")
        if not (0 <= i < n and 0 <= j < n):
            raise ParameterError(f"edge ({i + 1},{j + 1}) outside 1..{n}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def relabel(g: Graph, perm) -> Graph:
    """Apply a vertex permutation: old vertex i becomes perm[i]."""
    if sorted(perm) != list(range(g.n)):
        raise ParameterError("relabeling is not a permutation of the vertices")
    return from_edges(g.n, ((perm[i], perm[j]) for i, j in g.edges()))


# ---------------------------------------------------------------------------
# named families

def edgeless(n: int) -> Graph:
    _require(n >= 1, "edgeless graph needs n >= 1")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path(n: int) -> Graph:
    _require(n >= 1, "path graph needs n >= 1")
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle graph needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star graph: vertex 1 adjacent to every other vertex."""
    _require(n >= 1, "star graph needs n >= 1")
    return from_edges(n, ((0, i) for i in range(1, n)))


def gkm(k: int, m: int) -> Graph:
    """k disjoint edges {1,2},{3,4},... followed by m isolated vertices."""
    _require(k >= 0 and m >= 0 and k + m >= 1, "gkm needs k >= 0, m >= 0, k+m >= 1")
    return from_edges(2 * k + m, ((2 * t, 2 * t + 1) for t in range(k)))


def dynkin_a(n: int) -> Graph:
    _require(n >= 1, "A-series diagram needs n >= 1")
    return path(n)


def dynkin_d(n: int) -> Graph:
    """Path on n-1 vertices plus one extra vertex attached to vertex n-2."""
    _require(n >= 4, "D-series diagram needs n >= 4")
    g = path(n - 1)
    return from_edges(n, list(g.edges()) + [(n - 3, n - 1)])


def dynkin_e(n: int) -> Graph:
    """Path on n-1 vertices plus one extra vertex attached to the third vertex."""
    _require(n in (6, 7, 8), "E-series diagram needs n in {6, 7, 8}")
    g = path(n - 1)
    return from_edges(n, list(g.edges()) + [(2, n - 1)])


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of g2 are renumbered after g1."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise CapacityError(f"union has {n} vertices, limit is {MAX_VERTICES}")
    rows = g1.rows + tuple(row << g1.n for row in g2.rows)
    return Graph(n, rows)


def is_mating(g: Graph) -> bool:
    """True iff no two vertices have identical neighbor sets."""
    return len(set(g.rows)) == g.n


def _require(cond: bool, message: str):
    if not cond:
        raise ParameterError(message)


# ---------------------------------------------------------------------------
# family specs and the CLI mini-language

_FAMILY_KINDS = (
    "path", "star", "complete", "cycle", "edgeless", "gkm",
    "dynkinA", "dynkinD", "dynkinE", "union",
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    parameters: tuple[int, ...] = ()
    operands: tuple["FamilySpec", ...] = field(default=())

    def __post_init__(self):
        if self.kind not in _FAMILY_KINDS:
            raise ParameterError(f"unknown family kind {self.kind!r}")


def build_family(spec: FamilySpec) -> Graph:
    kind, params = spec.kind, spec.parameters
    if kind == "union":
        if params:
            raise ParameterError("union takes operands, not numeric parameters")
        if len(spec.operands) < 2:
            raise ParameterError("union needs at least two operands")
        g = build_family(spec.operands[0])
        for sub in spec.operands[1:]:
            g = union(g, build_family(sub))
        return g
    if spec.operands:
        raise ParameterError(f"{kind} takes no operands")
    if kind == "gkm":
        if len(params) != 2:
            raise ParameterError("gkm needs exactly two parameters k,m")
        return gkm(*params)
    if len(params) != 1:
        raise ParameterError(f"{kind} needs exactly one parameter")
    builder = {
        "path": path, "star": star, "complete": complete, "cycle": cycle,
        "edgeless": edgeless, "dynkinA": dynkin_a, "dynkinD": dynkin_d,
        "dynkinE": dynkin_e,
    }[kind]
    return builder(params[0])


def parse_family(text: str) -> FamilySpec:
    """Parse the CLI mini-language, e.g. ``gkm:3,2`` or ``union:(path:2,star:3)``."""
    spec, pos = _parse_spec(text, 0)
    if pos != len(text):
        raise ParameterError(f"trailing characters in family spec at column {pos + 1}")
    return spec


def looks_like_family(text: str) -> bool:
    return re.match(r"^(path|star|complete|cycle|edgeless|gkm|dynkin|union):", text) is not None


def _parse_spec(text: str, pos: int) -> tuple[FamilySpec, int]:
    m = re.match(r"([A-Za-z]+):", text[pos:])
    if not m:
        raise ParameterError(f"expected 'kind:' in family spec at column {pos + 1}")
    kind = m.group(1)
    pos += m.end()
    if kind == "union":
        if pos >= len(text) or text[pos] != "(":
            raise ParameterError(f"union needs '(...)' operands at column {pos + 1}")
        pos += 1
        operands = []
        while True:
            sub, pos = _parse_spec(text, pos)
            operands.append(sub)
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            if pos < len(text) and text[pos] == ")":
                return FamilySpec("union", (), tuple(operands)), pos + 1
            raise ParameterError(f"expected ',' or ')' in union at column {pos + 1}")
    if kind == "dynkin":
        m = re.match(r"([ADE])(\d+)", text[pos:])
        if not m:
            raise ParameterError(f"dynkin spec needs a letter A/D/E and an index at column {pos + 1}")
        return FamilySpec("dynkin" + m.group(1), (int(m.group(2)),)), pos + m.end()
    if kind not in _FAMILY_KINDS:
        raise ParameterError(f"unknown family kind {kind!r} at column {pos + 1}")
    m = re.match(r"(\d+)(,(\d+))*", text[pos:])
    if not m:
        raise ParameterError(f"{kind} needs numeric parameters at column {pos + 1}")
    params = tuple(int(p) for p in m.group(0).split(","))
    return FamilySpec(kind, params), pos + m.end()


# ---------------------------------------------------------------------------
# graph6 interchange (standard headerless variant, bit-exact)

_G6_OPTIONAL_PREFIX = b">>graph6<<"


def emit_graph6(g: Graph) -> bytes:
    if g.n <= 62:
        out = bytearray([g.n + 63])
    else:
        out = bytearray([126, ((g.n >> 12) & 63) + 63, ((g.n >> 6) & 63) + 63, (g.n & 63) + 63])
    group = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            group = (group << 1) | ((g.rows[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group, nbits = 0, 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_G6_OPTIONAL_PREFIX):
        data = data[len(_G6_OPTIONAL_PREFIX):]
    if not data:
        raise Graph6Error("empty graph6 record", 0)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise CapacityError("graph6 records beyond 258047 vertices are not supported")
        if len(data) < 4:
            raise Graph6Error("truncated long vertex-count header", len(data))
        for off in (1, 2, 3):
            if not 63 <= data[off] <= 126:
                raise Graph6Error("vertex-count byte outside printable range", off)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body_start = 4
    else:
        if not 63 <= data[0] <= 125:
            raise Graph6Error("vertex-count byte outside printable range", 0)
        n = data[0] - 63
        body_start = 1
    if n == 0:
        raise Graph6Error("empty graphs are not supported", 0)
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 record has {n} vertices, limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[body_start:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated bit body: need {nbytes} bytes, have {len(body)}", len(data)
        )
    if len(body) > nbytes:
        raise Graph6Error("trailing data after bit body", body_start + nbytes)
    rows = [0] * n
    bit_index = 0
    for off, byte in enumerate(body):
        val = byte - 63
        if not 0 <= val <= 63:
            raise Graph6Error("bit-body byte outside printable range", body_start + off)
        for b in range(5, -1, -1):
            bit = (val >> b) & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits", body_start + off)
                continue
            if bit:
                i, j = _edge_from_index(bit_index)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit_index += 1
    return Graph(n, tuple(rows))


def _edge_from_index(k: int) -> tuple[int, int]:
    # upper-triangle column-major: index j*(j-1)/2 + i for i < j
    j = 1
    while (j + 1) * j // 2 <= k:
        j += 1
    return k - j * (j - 1) // 2, j
