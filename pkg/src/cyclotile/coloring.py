"""Circulant graphs, 2-colourings, and their correspondence with tilings.

A circulant graph on Z/PZ joins every vertex g to g + l and g - l for
each listed distance l, so each vertex has a neighbour multiset of size
exactly 2k; zero and repeated distances are allowed and contribute loops
and multiple edges. A colouring is perfect with parameters (b, c) when
every black vertex has exactly b white neighbours and every white vertex
exactly c black ones, counted with multiplicity.

The bridge to tilings: colour the support of a 0/1 tile v black. The
colouring is perfect with parameters (b, c) exactly when v is a
c-tiling for the structured tile built from the distances and (b, c).
"""

from __future__ import annotations

import dataclasses

from .errors import ModulusMismatch, NotZeroOne
from .polyring import IntPolynomial
from .tiling import Tile

BLACK = "B"
WHITE = "W"


@dataclasses.dataclass(frozen=True)
class CirculantSpec:
    """A circulant graph: group order and the multiset of jump distances.

    Distances are kept exactly as given, neither reduced mod P nor
    deduplicated; the max distance below is the max of the raw values.
    """

    modulus: int
    distances: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "distances", tuple(self.distances))
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not self.distances:
            raise ValueError("at least one distance is required")
        if any(l < 0 for l in self.distances):
            raise ValueError("distances must be nonnegative")

    @property
    def k(self) -> int:
        return len(self.distances)

    @property
    def max_distance(self) -> int:
        return max(self.distances)

    def neighbors(self, vertex: int) -> tuple[int, ...]:
        """The size-2k neighbour multiset of a vertex, as residues."""
        p = self.modulus
        out = []
        for l in self.distances:
            out.append((vertex + l) % p)
            out.append((vertex - l) % p)
        return tuple(out)


@dataclasses.dataclass(frozen=True)
class Coloring:
    """A 2-colouring of Z/PZ with its intended parameters (b, c).

    Monochromatic vectors are representable; they simply can never pass
    the perfection check while b and c are positive.
    """

    colors: str
    b: int
    c: int

    def __post_init__(self):
        if not self.colors:
            raise ValueError("empty colouring")
        if set(self.colors) - {BLACK, WHITE}:
            raise ValueError("colors must be a string over B and W")
        if self.b < 1 or self.c < 1:
            raise ValueError("parameters b and c must be positive")

    @property
    def modulus(self) -> int:
        return len(self.colors)


def structured_tile(spec: CirculantSpec, b: int, c: int) -> Tile:
    """The tile whose c-tilings are exactly the (b, c)-perfect colourings.

    Value b + c - 2k is added at M mod P and 1 at each (M + l) mod P and
    (M - l) mod P, accumulating collisions. The central value may be
    negative when b + c < 2k; that is fine.
    """
    p = spec.modulus
    m = spec.max_distance
    values = [0] * p
    values[m % p] += b + c - 2 * spec.k
    for l in spec.distances:
        values[(m + l) % p] += 1
        values[(m - l) % p] += 1
    return Tile(tuple(values))


def a_polynomial(spec: CirculantSpec, b: int, c: int) -> IntPolynomial:
    """The structured mask before cyclic reduction, degree at most 2M.

    The x^M prefactor clears every negative power, so this lives in
    Z[x]; reduced mod x^P - 1 it equals the mask of structured_tile.
    """
    m = spec.max_distance
    coeffs = [0] * (2 * m + 1)
    coeffs[m] += b + c - 2 * spec.k
    for l in spec.distances:
        coeffs[m + l] += 1
        coeffs[m - l] += 1
    return IntPolynomial(coeffs)


def is_perfect_coloring(spec: CirculantSpec, col: Coloring) -> bool:
    """Direct graph-side check of the perfection condition, vertex by vertex."""
    if spec.modulus != col.modulus:
        raise ModulusMismatch(
            "graph on %d vertices, colouring on %d" % (spec.modulus, col.modulus)
        )
    colors = col.colors
    for g in range(spec.modulus):
        if colors[g] == BLACK:
            whites = sum(1 for h in spec.neighbors(g) if colors[h] == WHITE)
            if whites != col.b:
                return False
        else:
            blacks = sum(1 for h in spec.neighbors(g) if colors[h] == BLACK)
            if blacks != col.c:
                return False
    return True


def perfect_parameters(spec: CirculantSpec, colors: str) -> tuple[int, int] | None:
    """The unique (b, c) a colour vector could be perfect for, if any.

    Perfection forces every black vertex to share one white-neighbour
    count b and every white vertex one black-neighbour count c, so a
    vector determines its parameters. Returns None for monochromatic or
    inconsistent vectors, and when a derived count is zero, since valid
    parameters are positive.
    """
    white_of_black = -1
    white_of_white = -1
    for g in range(spec.modulus):
        whites = sum(1 for h in spec.neighbors(g) if colors[h] == WHITE)
        if colors[g] == BLACK:
            if white_of_black < 0:
                white_of_black = whites
            elif white_of_black != whites:
                return None
        else:
            if white_of_white < 0:
                white_of_white = whites
            elif white_of_white != whites:
                return None
    if white_of_black < 0 or white_of_white < 0:
        return None
    b, c = white_of_black, 2 * spec.k - white_of_white
    if b < 1 or c < 1:
        return None
    return b, c


def coloring_to_tiling(col: Coloring) -> Tile:
    """Indicator tile of the black class."""
    return Tile(tuple(1 if ch == BLACK else 0 for ch in col.colors))


def tiling_to_coloring(v: Tile, b: int, c: int) -> Coloring:
    """Colour the support of a 0/1 tile black; inverse of coloring_to_tiling."""
    if any(value not in (0, 1) for value in v.values):
        raise NotZeroOne("tile values must all be 0 or 1")
    return Coloring("".join(BLACK if value else WHITE for value in v.values), b, c)


def build_document(spec: CirculantSpec, b: int, c: int, colors: str | None) -> dict:
    """The interchange document for a colouring or a bare parameter claim."""
    doc = {
        "version": 1,
        "P": spec.modulus,
        "distances": list(spec.distances),
        "b": b,
        "c": c,
    }
    if colors is not None:
        doc["colors"] = colors
    return doc


def parse_document(doc) -> tuple[CirculantSpec, int, int, str | None]:
    """Validate and unpack an interchange document. Raises ValueError when malformed."""
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    if doc.get("version") != 1:
        raise ValueError("unsupported document version")
    for key in ("P", "distances", "b", "c"):
        if key not in doc:
            raise ValueError("missing field %r" % key)
    p, b, c = doc["P"], doc["b"], doc["c"]
    distances = doc["distances"]
    if not isinstance(p, int) or not isinstance(b, int) or not isinstance(c, int):
        raise ValueError("P, b, c must be integers")
    if not isinstance(distances, list) or not all(isinstance(l, int) for l in distances):
        raise ValueError("distances must be a list of integers")
    if b < 1 or c < 1:
        raise ValueError("b and c must be positive")
    spec = CirculantSpec(p, tuple(distances))
    colors = doc.get("colors")
    if colors is not None:
        if not isinstance(colors, str) or len(colors) != p or set(colors) - {BLACK, WHITE}:
            raise ValueError("colors must be a length-P string over B and W")
    return spec, b, c, colors
