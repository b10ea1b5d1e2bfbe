"""Structural classification of Clifford graph algebras.

Two graphs on the same vertex count have isomorphic algebras exactly when
their adjacency matrices have the same GF(2) rank 2k; the algebra is a
direct sum of 2^m copies of the full matrix algebra on 2^k dimensions,
with m = n - 2k.  Every class contains exactly one graph made of k
disjoint edges plus m isolated vertices, and ``reduce_to_canonical``
rewrites any graph down to that representative while tracking, for every
target generator, its image in the source algebra as a signed monomial.
The resulting witness is machine-checkable: images must square to -1,
must anticommute exactly along target edges, and their masks must span
full GF(2) rank so the generator assignment extends to an isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .algebra import (
    I,
    MINUS_ONE,
    ONE,
    SignedMonomial,
    fix_square_minus_one,
    masks_commute,
    monomial_mul,
    render_monomial,
    signed_mul,
    square_coeff,
)
from .errors import ParameterError
from .graphs import Graph, complete, dynkin_a, dynkin_d, dynkin_e, gkm, path, star


@dataclass(frozen=True)
class StructureReport:
    n: int
    rank: int
    k: int
    m: int
    center_dim: int
    summary: str


@dataclass(frozen=True)
class IsomorphismWitness:
    """Images of the target algebra's generators inside the source algebra."""

    source: Graph
    target: Graph
    images: tuple[SignedMonomial, ...]


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    diagnostic: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def classify(g: Graph) -> StructureReport:
    rank = gf2.rank_gf2(gf2.BitMatrix.from_graph(g))
    assert rank % 2 == 0, "adjacency rank over GF(2) is even for symmetric zero-diagonal matrices"
    k = rank // 2
    m = g.n - rank
    block = 1 << k
    summary = f"Mat({block})" if m == 0 else f"⊕_{1 << m} Mat({block})"
    return StructureReport(g.n, rank, k, m, 1 << m, summary)


def same_class(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n:
        raise ParameterError(
            f"Clifford classes compare graphs of equal size, got {g1.n} and {g2.n}"
        )
    return gf2.rank_gf2(gf2.BitMatrix.from_graph(g1)) == gf2.rank_gf2(gf2.BitMatrix.from_graph(g2))


def apply_witness(w: IsomorphismWitness, mask: int, coeff=ONE) -> SignedMonomial:
    """Image of a target basis monomial (times a unit) in the source algebra."""
    acc = SignedMonomial(coeff, 0)
    t = 0
    while mask:
        if mask & 1:
            acc = signed_mul(w.source, acc, w.images[t])
        mask >>= 1
        t += 1
    return acc


def validate_witness(w: IsomorphismWitness) -> WitnessReport:
    n = w.target.n
    if len(w.images) != n:
        return WitnessReport(False, f"expected {n} generator images, got {len(w.images)}")
    for t, sm in enumerate(w.images):
        if sm.mask >> w.source.n:
            return WitnessReport(
                False, f"image of generator {t + 1} uses vertices beyond the source graph"
            )
        total = sm.coeff * sm.coeff * square_coeff(w.source, sm.mask)
        if total != MINUS_ONE:
            return WitnessReport(
                False,
                f"image of generator {t + 1} squares to {total}, not -1",
            )
    for i in range(n):
        for j in range(i + 1, n):
            commute = masks_commute(w.source, w.images[i].mask, w.images[j].mask)
            if w.target.has_edge(i, j) == commute:
                relation = "commute" if commute else "anticommute"
                edge = "an edge" if w.target.has_edge(i, j) else "no edge"
                return WitnessReport(
                    False,
                    f"images of generators {i + 1},{j + 1} {relation} "
                    f"but the target has {edge} {{{i + 1},{j + 1}}}",
                )
    mask_rank = gf2.rank_of_rows([sm.mask for sm in w.images], w.source.n)
    if mask_rank != n:
        return WitnessReport(
            False,
            f"image masks span GF(2) rank {mask_rank}, need {n} for an isomorphism",
        )
    return WitnessReport(True)


def reduce_to_canonical(g: Graph) -> tuple[Graph, IsomorphismWitness]:
    """Rewrite g's algebra onto its canonical class representative.

    Repeatedly pick the lowest-numbered pair of generators whose images
    still anticommute and detach it as an isolated edge: every other
    generator is multiplied by the image of one or both pair members so
    that it commutes with both (scaled by i whenever the raw product
    squares to +1).  Images are composed eagerly, so each witness entry is
    a single signed monomial in the source algebra.
    """
    n = g.n
    images: list[SignedMonomial] = [SignedMonomial(ONE, 1 << i) for i in range(n)]
    active = list(range(n))
    pairs: list[tuple[int, int]] = []

    def anticommute(i: int, j: int) -> bool:
        return not masks_commute(g, images[i].mask, images[j].mask)

    while True:
        found = None
        for u in active:
            partners = [v for v in active if v != u and anticommute(u, v)]
            if partners:
                found = (u, min(partners))
                break
        if found is None:
            break
        u, v = found
        assert u < v
        replacements = {}
        for i in active:
            if i in (u, v):
                continue
            hits_u = anticommute(i, u)
            hits_v = anticommute(i, v)
            if not hits_u and not hits_v:
                continue
            if hits_u and not hits_v:
                sm = signed_mul(g, images[i], images[v])
            elif hits_v and not hits_u:
                sm = signed_mul(g, images[i], images[u])
            else:
                sm = signed_mul(g, signed_mul(g, images[i], images[v]), images[u])
            replacements[i] = fix_square_minus_one(g, sm)
        for i, sm in replacements.items():
            images[i] = sm
        active = [i for i in active if i not in (u, v)]
        for i in active:
            assert not anticommute(u, i) and not anticommute(v, i), "pair failed to detach"
        pairs.append((u, v))

    k = len(pairs)
    m = n - 2 * k
    target = gkm(k, m)
    ordered = []
    for u, v in pairs:
        ordered.append(images[u])
        ordered.append(images[v])
    for i in active:
        ordered.append(images[i])
    witness = IsomorphismWitness(g, target, tuple(ordered))
    assert classify(g).k == k, "detached pair count disagrees with the GF(2) rank"
    return target, witness


# ---------------------------------------------------------------------------
# the two worked isomorphisms between named families

NAMED_KINDS = ("path_complete", "star_oneedge")


def named_isomorphism(kind: str, n: int) -> tuple[IsomorphismWitness, IsomorphismWitness]:
    """The explicit generator substitutions between a path and a complete
    graph, or between a star and the one-edge graph, in both directions.

    Each substitution is normalized (scaled by i where necessary) so that
    every image squares to -1; the forward witness expresses the target
    family's generators inside the source family's algebra.
    """
    if n < 2:
        raise ParameterError("named isomorphisms need n >= 2")
    if kind == "path_complete":
        src, tgt = complete(n), path(n)
        forward = [SignedMonomial(ONE, 1)]
        for t in range(1, n):
            forward.append(signed_mul(src, SignedMonomial(ONE, 1 << (t - 1)),
                                      SignedMonomial(ONE, 1 << t)))
        backward = []
        for t in range(n):
            sm = SignedMonomial(ONE, 1 << t)
            for j in range(t - 1, -1, -1):
                sm = signed_mul(tgt, sm, SignedMonomial(ONE, 1 << j))
            backward.append(sm)
        fw = IsomorphismWitness(src, tgt, tuple(fix_square_minus_one(src, s) for s in forward))
        bw = IsomorphismWitness(tgt, src, tuple(fix_square_minus_one(tgt, s) for s in backward))
        return fw, bw
    if kind == "star_oneedge":
        src, tgt = star(n), gkm(1, n - 2)
        forward = [SignedMonomial(ONE, 1),
                   signed_mul(src, SignedMonomial(ONE, 1), SignedMonomial(ONE, 2))]
        for t in range(2, n):
            forward.append(signed_mul(src, SignedMonomial(ONE, 2), SignedMonomial(ONE, 1 << t)))
        backward = [SignedMonomial(ONE, 1),
                    signed_mul(tgt, SignedMonomial(ONE, 1), SignedMonomial(ONE, 2))]
        for t in range(2, n):
            sm = signed_mul(tgt, SignedMonomial(ONE, 1 << t), SignedMonomial(ONE, 1))
            sm = signed_mul(tgt, sm, SignedMonomial(ONE, 2))
            backward.append(sm)
        fw = IsomorphismWitness(src, tgt, tuple(fix_square_minus_one(src, s) for s in forward))
        bw = IsomorphismWitness(tgt, src, tuple(fix_square_minus_one(tgt, s) for s in backward))
        return fw, bw
    raise ParameterError(f"unknown named isomorphism {kind!r}; choose from {NAMED_KINDS}")


# ---------------------------------------------------------------------------
# Dynkin diagram center dimensions

@dataclass(frozen=True)
class DynkinRow:
    family: str
    index: int
    n: int
    center_dim: int
    expected_dim: int
    matches: bool


def dynkin_table(max_rank: int = 12) -> list[DynkinRow]:
    """Center dimensions for the simply-laced diagram families.

    The expected column encodes the parity pattern (A even -> 1, A odd -> 2,
    D even -> 4, D odd -> 2, E6 -> 1, E7 -> 2, E8 -> 1); the computed value
    comes from the adjacency rank of the actual diagram.
    """
    if max_rank < 1:
        raise ParameterError("max_rank must be at least 1")
    rows = []
    for i in range(1, max_rank + 1):
        dim = classify(dynkin_a(i)).center_dim
        expected = 1 if i % 2 == 0 else 2
        rows.append(DynkinRow("A", i, i, dim, expected, dim == expected))
    for i in range(4, max_rank + 1):
        dim = classify(dynkin_d(i)).center_dim
        expected = 4 if i % 2 == 0 else 2
        rows.append(DynkinRow("D", i, i, dim, expected, dim == expected))
    for i, expected in ((6, 1), (7, 2), (8, 1)):
        dim = classify(dynkin_e(i)).center_dim
        rows.append(DynkinRow("E", i, i, dim, expected, dim == expected))
    return rows
