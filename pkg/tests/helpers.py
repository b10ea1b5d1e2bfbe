"""Shared test utilities: exhaustive labeled-graph generators and slow
reference implementations kept independent of the code paths they check."""

from __future__ import annotations

import itertools

from cliffgraph import AlgebraElement, Graph
from cliffgraph.algebra import monomial_vertices
from cliffgraph.census import code_to_graph

# class counts per vertex count, for cross-checking totals
GRAPH_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346)


def all_graphs(n: int):
    """Every labeled graph on n vertices, by ascending edge code."""
    for code in range(1 << (n * (n - 1) // 2)):
        yield code_to_graph(n, code)


def random_graph(rng, n: int) -> Graph:
    return code_to_graph(n, rng.getrandbits(n * (n - 1) // 2) if n > 1 else 0)


def slow_monomial_mul(g: Graph, a_mask: int, b_mask: int) -> tuple[int, int]:
    """Normal-order the concatenated generator word one adjacent swap at a
    time, literally applying e_i e_j = +-e_j e_i and e_i e_i = -1.

    Returns (sign, mask); completely independent of the popcount formula.
    """
    word = list(monomial_vertices(a_mask)) + list(monomial_vertices(b_mask))
    sign = 1
    changed = True
    while changed:
        changed = False
        k = 0
        while k + 1 < len(word):
            x, y = word[k], word[k + 1]
            if x == y:
                del word[k:k + 2]
                sign = -sign
                changed = True
                k = max(k - 1, 0)
            elif x > y:
                word[k], word[k + 1] = y, x
                if g.has_edge(x, y):
                    sign = -sign
                changed = True
                k += 1
            else:
                k += 1
    mask = 0
    for v in word:
        mask |= 1 << v
    return sign, mask


def leibniz_det(g: Graph) -> int:
    """Determinant straight from the permutation-sum definition."""
    n = g.n
    total = 0
    for perm in itertools.permutations(range(n)):
        prod = 1
        for i in range(n):
            if not (g.rows[i] >> perm[i]) & 1:
                prod = 0
                break
        if prod:
            inversions = sum(
                1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
            )
            total += -1 if inversions % 2 else 1
    return total


def gl2_order(n: int) -> int:
    """Order of the general linear group over GF(2)."""
    out = 1
    for i in range(n):
        out *= (1 << n) - (1 << i)
    return out


def sp2_order(k: int) -> int:
    """Order of the symplectic group Sp(2k) over GF(2)."""
    out = 1 << (k * k)
    for i in range(1, k + 1):
        out *= (1 << (2 * i)) - 1
    return out


def symbolic_center_masks(g: Graph) -> set[int]:
    """Masks whose monomials commute with every generator, checked through
    element products rather than the adjacency matrix."""
    gens = [AlgebraElement.generator(g, i) for i in range(g.n)]
    out = set()
    for mask in range(1 << g.n):
        x = AlgebraElement.monomial(g, mask)
        if all(x * e == e * x for e in gens):
            out.add(mask)
    return out
