"""Exact symbolic arithmetic in the Clifford algebra of a graph.

The algebra attached to an n-vertex graph has one generator per vertex.
Every generator squares to -1; two generators anticommute when their
vertices are adjacent and commute otherwise.  Basis monomials are products
of distinct generators in increasing vertex order and are encoded as n-bit
masks (bit i set = generator i present).  The product of two basis
monomials is again a basis monomial up to sign:

    e_a * e_b = (-1)^s * e_(a XOR b)

where s counts the adjacent inversions between the two ordered factor
lists (pairs i in a, j in b with i > j and {i,j} an edge) plus one for
every shared generator, since each collision e_i e_i contributes -1.

Coefficients are Gaussian rationals (exact a + b*i with rational a, b);
no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import gf2
from .errors import AmbientMismatchError, CapacityError, ParameterError
from .graphs import Graph


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        return cls(Fraction(re), Fraction(im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return GaussianRational(self.re * other, self.im * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            norm = other.re * other.re + other.im * other.im
            if norm == 0:
                raise ZeroDivisionError("division by zero Gaussian rational")
            return GaussianRational(
                (self.re * other.re + self.im * other.im) / norm,
                (self.im * other.re - self.re * other.im) / norm,
            )
        return GaussianRational(self.re / Fraction(other), self.im / Fraction(other))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def is_unit(self) -> bool:
        """True for the four scalars 1, -1, i, -i."""
        return (self.re, self.im) in ((1, 0), (-1, 0), (0, 1), (0, -1))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        im_part = "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}i"
        joiner = "" if im_part.startswith("-") else "+"
        return f"({self.re}{joiner}{im_part})"


ZERO = GaussianRational.of(0)
ONE = GaussianRational.of(1)
MINUS_ONE = GaussianRational.of(-1)
I = GaussianRational.of(0, 1)
MINUS_I = GaussianRational.of(0, -1)
HALF = GaussianRational.of(Fraction(1, 2))

UNIT_COEFFICIENTS = {"1": ONE, "-1": MINUS_ONE, "i": I, "-i": MINUS_I}


@dataclass(frozen=True)
class SignedMonomial:
    """A basis monomial scaled by a fourth root of unity."""

    coeff: GaussianRational
    mask: int

    def __post_init__(self):
        if not self.coeff.is_unit():
            raise ParameterError(f"signed monomial coefficient must be a unit, got {self.coeff}")


def _check_mask(g: Graph, mask: int):
    if mask >> g.n:
        raise AmbientMismatchError(f"monomial has generators beyond vertex {g.n}")


def monomial_vertices(mask: int) -> tuple[int, ...]:
    """Set bits of a mask, ascending (0-based vertices)."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_from_vertices(vertices, n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ParameterError(f"vertex {v + 1} outside 1..{n}")
        mask |= 1 << v
    return mask


def render_monomial(mask: int) -> str:
    if mask == 0:
        return "1"
    return "".join(f"e_{v + 1}" for v in monomial_vertices(mask))


def monomial_mul(g: Graph, a: int, b: int) -> SignedMonomial:
    """Product of two basis monomials; the coefficient is always +1 or -1."""
    _check_mask(g, a)
    _check_mask(g, b)
    s = bin(a & b).count("1")
    x = a
    while x:
        i = (x & -x).bit_length() - 1
        s += bin(g.rows[i] & b & ((1 << i) - 1)).count("1")
        x &= x - 1
    return SignedMonomial(MINUS_ONE if s & 1 else ONE, a ^ b)


def signed_mul(g: Graph, a: SignedMonomial, b: SignedMonomial) -> SignedMonomial:
    prod = monomial_mul(g, a.mask, b.mask)
    return SignedMonomial(a.coeff * b.coeff * prod.coeff, prod.mask)


def masks_commute(g: Graph, a: int, b: int) -> bool:
    """Whether e_a e_b = e_b e_a; they anticommute when the edge count
    between the two vertex sets (shared vertices excluded) is odd."""
    _check_mask(g, a)
    _check_mask(g, b)
    s = 0
    x = a
    while x:
        i = (x & -x).bit_length() - 1
        s ^= bin(g.rows[i] & b).count("1") & 1
        x &= x - 1
    return s == 0


def square_coeff(g: Graph, mask: int) -> GaussianRational:
    """The scalar e_mask^2, always +1 or -1."""
    return monomial_mul(g, mask, mask).coeff


def fix_square_minus_one(g: Graph, sm: SignedMonomial) -> SignedMonomial:
    """Scale a signed monomial by i if needed so that its square is -1."""
    total = sm.coeff * sm.coeff * square_coeff(g, sm.mask)
    if total == MINUS_ONE:
        return sm
    return SignedMonomial(sm.coeff * I, sm.mask)


def is_central_monomial(g: Graph, mask: int) -> bool:
    """Central iff every vertex sees an even number of edges into the set."""
    _check_mask(g, mask)
    return all(bin(g.rows[i] & mask).count("1") % 2 == 0 for i in range(g.n))


# ---------------------------------------------------------------------------
# elements

class AlgebraElement:
    """A sparse linear combination of basis monomials over one ambient graph.

    Instances are treated as immutable; all arithmetic returns new elements.
    """

    __slots__ = ("graph", "terms")

    def __init__(self, graph: Graph, terms=None):
        self.graph = graph
        clean = {}
        for mask, coeff in (terms or {}).items():
            _check_mask(graph, mask)
            if coeff:
                clean[mask] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, g: Graph) -> "AlgebraElement":
        return cls(g)

    @classmethod
    def one(cls, g: Graph) -> "AlgebraElement":
        return cls(g, {0: ONE})

    @classmethod
    def monomial(cls, g: Graph, mask: int, coeff: GaussianRational = ONE) -> "AlgebraElement":
        return cls(g, {mask: coeff})

    @classmethod
    def generator(cls, g: Graph, i: int) -> "AlgebraElement":
        if not 0 <= i < g.n:
            raise ParameterError(f"generator index {i + 1} outside 1..{g.n}")
        return cls(g, {1 << i: ONE})

    @classmethod
    def from_signed(cls, g: Graph, sm: SignedMonomial) -> "AlgebraElement":
        return cls(g, {sm.mask: sm.coeff})

    def _require_same_ambient(self, other: "AlgebraElement"):
        if self.graph != other.graph:
            raise AmbientMismatchError("elements live in algebras of different graphs")

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.graph == other.graph and self.terms == other.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._require_same_ambient(other)
        acc = dict(self.terms)
        for mask, coeff in other.terms.items():
            acc[mask] = acc.get(mask, ZERO) + coeff
        return AlgebraElement(self.graph, acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.graph, {m: -c for m, c in self.terms.items()})

    def scale(self, scalar) -> "AlgebraElement":
        if not isinstance(scalar, GaussianRational):
            scalar = GaussianRational.of(scalar)
        return AlgebraElement(self.graph, {m: c * scalar for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        self._require_same_ambient(other)
        acc: dict[int, GaussianRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                prod = monomial_mul(self.graph, m1, m2)
                acc[prod.mask] = acc.get(prod.mask, ZERO) + c1 * c2 * prod.coeff
        return AlgebraElement(self.graph, acc)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[int, GaussianRational]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask, coeff in self.sorted_terms():
            mono = render_monomial(mask)
            if mask == 0:
                parts.append(str(coeff))
            elif coeff == ONE:
                parts.append(mono)
            elif coeff == MINUS_ONE:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff} {mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


# ---------------------------------------------------------------------------
# centers and idempotents

@dataclass(frozen=True)
class CenterBasis:
    """Description of the center: either a GF(2) basis of the central
    monomial masks or the full explicit list, flagged by ``mode``."""

    mode: str                      # "basis" or "explicit"
    monomials: tuple[int, ...]
    nullity: int
    center_dim: int


def center_basis(g: Graph, mode: str = "basis") -> CenterBasis:
    """Central monomials of the algebra, as masks.

    The central monomials are exactly the GF(2) nullspace of the adjacency
    matrix.  Mode "basis" returns the nullspace basis (lowest-pivot reduced
    echelon order); mode "explicit" enumerates the whole span and needs
    n <= 32.
    """
    kernel = gf2.nullspace_gf2(gf2.BitMatrix.from_graph(g))
    dim = 1 << kernel.dimension
    if mode == "basis":
        return CenterBasis("basis", kernel.basis, kernel.dimension, dim)
    if mode == "explicit":
        if g.n > 32:
            raise CapacityError("explicit center enumeration is limited to 32 vertices")
        return CenterBasis("explicit", tuple(kernel.span()), kernel.dimension, dim)
    raise ParameterError(f"unknown center mode {mode!r}")


def central_idempotent(g: Graph, mask: int) -> AlgebraElement:
    """The central idempotent (1 + f)/2 attached to a nonempty central
    monomial, where f is e_mask or i*e_mask, whichever squares to +1."""
    if mask == 0:
        raise ParameterError("the empty monomial gives the trivial idempotent 1")
    if not is_central_monomial(g, mask):
        raise ParameterError(f"monomial {render_monomial(mask)} is not central")
    f_coeff = ONE if square_coeff(g, mask) == ONE else I
    return AlgebraElement(g, {0: HALF, mask: f_coeff * HALF})
