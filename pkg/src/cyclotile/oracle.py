"""Exhaustive search over colourings and 0/1 tilings at small group orders.

This is the ground truth the algebraic machinery is tested against: no
cleverness, just enumeration of all 2^P states in a fixed order. A state
is the integer whose bit g gives the colour (or tile value) at vertex g,
vertex 0 in the least significant bit, Black encoded as 1.
"""

from __future__ import annotations

import dataclasses

from .coloring import BLACK, WHITE, CirculantSpec, Coloring, is_perfect_coloring
from .errors import SearchSpaceTooLarge
from .tiling import Tile, verify_multitiling

MAX_EXHAUSTIVE_ORDER = 24


@dataclasses.dataclass(frozen=True)
class SearchReport:
    spec: CirculantSpec
    b: int
    c: int
    found: tuple[Coloring, ...]
    exhausted: bool
    states_examined: int


def _colors_of(mask: int, modulus: int) -> str:
    return "".join(BLACK if (mask >> g) & 1 else WHITE for g in range(modulus))


def search_colorings(
    spec: CirculantSpec, b: int, c: int, limit: int | None = None
) -> SearchReport:
    """Every (b, c)-perfect colouring of the graph, by filtering all 2^P states.

    With a limit the search stops after that many hits and the report
    says whether the enumeration ran to the end anyway.
    """
    p = spec.modulus
    if p > MAX_EXHAUSTIVE_ORDER and limit is None:
        raise SearchSpaceTooLarge("2^%d states; pass a limit or stay at P <= %d"
                                  % (p, MAX_EXHAUSTIVE_ORDER))
    if b < 1 or c < 1:
        raise ValueError("b and c must be positive")
    found = []
    examined = 0
    for mask in range(1 << p):
        examined += 1
        col = Coloring(_colors_of(mask, p), b, c)
        if is_perfect_coloring(spec, col):
            found.append(col)
            if limit is not None and len(found) >= limit:
                break
    return SearchReport(spec, b, c, tuple(found), examined == 1 << p, examined)


def search_tilings(u: Tile, m: int) -> list[Tile]:
    """Every 0/1 tile that covers the group m-fold with tile u, in counter order."""
    p = u.modulus
    if p > MAX_EXHAUSTIVE_ORDER:
        raise SearchSpaceTooLarge("2^%d states is more than this oracle will try" % p)
    out = []
    for mask in range(1 << p):
        v = Tile(tuple((mask >> g) & 1 for g in range(p)))
        if verify_multitiling(u, v, m):
            out.append(v)
    return out


def census_colorings(spec: CirculantSpec) -> dict[tuple[int, int], list[Coloring]]:
    """All perfect colourings of the graph, bucketed by their (b, c), in one pass.

    A colour vector determines the only (b, c) it could be perfect for
    (the common white-neighbour count of its black vertices and the
    common black-neighbour count of its white ones), so one sweep over
    the 2^P states classifies everything. The derivation here works on
    bit masks for speed; every hit is confirmed with is_perfect_coloring
    before it is reported, and the buckets keep enumeration order.
    """
    p = spec.modulus
    if p > MAX_EXHAUSTIVE_ORDER:
        raise SearchSpaceTooLarge("2^%d states is more than this oracle will try" % p)
    neighbor_table = [spec.neighbors(g) for g in range(p)]
    degree = 2 * spec.k
    buckets: dict[tuple[int, int], list[int]] = {}
    for mask in range(1 << p):
        white_of_black = -1
        white_of_white = -1
        consistent = True
        for g in range(p):
            whites = 0
            for h in neighbor_table[g]:
                whites += 1 - ((mask >> h) & 1)
            if (mask >> g) & 1:
                if white_of_black < 0:
                    white_of_black = whites
                elif white_of_black != whites:
                    consistent = False
                    break
            else:
                if white_of_white < 0:
                    white_of_white = whites
                elif white_of_white != whites:
                    consistent = False
                    break
        if not consistent or white_of_black < 0 or white_of_white < 0:
            continue
        b, c = white_of_black, degree - white_of_white
        if b < 1 or c < 1:
            continue
        buckets.setdefault((b, c), []).append(mask)
    census: dict[tuple[int, int], list[Coloring]] = {}
    for (b, c) in sorted(buckets):
        cols = [Coloring(_colors_of(mask, p), b, c) for mask in buckets[(b, c)]]
        for col in cols:
            if not is_perfect_coloring(spec, col):
                raise AssertionError("census classification disagrees with the direct check")
        census[(b, c)] = cols
    return census
