"""Exact linear algebra on square bitset matrices: GF(2) rank, nullspace,
determinant parity, the row-and-column replacement move, and fraction-free
integer determinants."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, ParameterError
from .graphs import Graph


@dataclass(frozen=True)
class BitMatrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ParameterError(f"expected {self.n} rows, got {len(self.rows)}")
        width = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~width:
                raise ParameterError(f"row {i + 1} has bits beyond column {self.n}")

    @classmethod
    def from_graph(cls, g: Graph) -> "BitMatrix":
        return cls(g.n, g.rows)


@dataclass(frozen=True)
class Gf2Kernel:
    basis: tuple[int, ...]
    dimension: int
    width: int

    def span(self) -> list[int]:
        """All 2^dimension kernel vectors, sorted ascending."""
        vecs = [0]
        for b in self.basis:
            vecs += [v ^ b for v in vecs]
        return sorted(vecs)


def _echelon(rows: list[int], width: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over GF(2); pivots chosen lowest column first."""
    work = list(rows)
    pivot_cols = []
    r = 0
    for c in range(width):
        pivot = None
        for i in range(r, len(work)):
            if (work[i] >> c) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and ((work[i] >> c) & 1):
                work[i] ^= work[r]
        pivot_cols.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivot_cols


def rank_of_rows(rows, width: int) -> int:
    """GF(2) rank of an arbitrary list of bit-vectors."""
    return len(_echelon(list(rows), width)[1])


def rank_gf2(m: BitMatrix) -> int:
    return rank_of_rows(m.rows, m.n)


def nullspace_gf2(m: BitMatrix) -> Gf2Kernel:
    reduced, pivot_cols = _echelon(list(m.rows), m.n)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.n):
        if free in pivot_set:
            continue
        v = 1 << free
        for r, p in enumerate(pivot_cols):
            if (reduced[r] >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return Gf2Kernel(tuple(basis), len(basis), m.n)


def det_parity(m: BitMatrix) -> str:
    """'odd' iff the matrix is invertible over GF(2), else 'even'."""
    return "odd" if rank_gf2(m) == m.n else "even"


def basic_replacement(m: BitMatrix, src: int, dst: int) -> BitMatrix:
    """Row dst ^= row src, then column dst ^= column src.

    On a symmetric zero-diagonal matrix the result is again symmetric with
    zero diagonal, and the GF(2) rank is unchanged.
    """
    if src == dst:
        raise ParameterError("basic replacement needs two distinct vertices")
    if not (0 <= src < m.n and 0 <= dst < m.n):
        raise ParameterError(f"vertex out of range 1..{m.n}")
    rows = list(m.rows)
    rows[dst] ^= rows[src]
    for i in range(m.n):
        if (rows[i] >> src) & 1:
            rows[i] ^= 1 << dst
    return BitMatrix(m.n, tuple(rows))


DET_INTEGER_MAX = 16


def det_integer(g: Graph) -> int:
    """Exact integer determinant of the 0/1 adjacency matrix (Bareiss)."""
    if g.n > DET_INTEGER_MAX:
        raise CapacityError(
            f"integer determinant is limited to {DET_INTEGER_MAX} vertices, got {g.n}"
        )
    a = [[(g.rows[i] >> j) & 1 for j in range(g.n)] for i in range(g.n)]
    return _bareiss(a)


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
