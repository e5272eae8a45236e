"""Constructive correspondences between the library's objects.

Two families live here.  The component-rewriting maps turn a low-peak-free
Grand-Dyck path whose above-ground components all precede the below-ground
ones into a plain Dyck path (and back), and pair up with the low-peak
insertion/removal maps that account for the binomial(k, i) placement factor.
The composition-pair maps send an irreducible ordered pair of compositions
of n+1 to a low-peak-free Grand-Dyck path of size n by cutting the pair's
lattice diagram at shared vertices into parallelogram polyominoes (possibly
degenerate), encoding each polyomino as a primitive Dyck path, and flipping
according to which composition's path runs on top.

Two conventions are pinned so the maps are reproducible:

* polyomino -> Dyck encoding: column heights become peak heights and column
  overlaps become valley heights plus one, i.e. the word
  U^c1 D^(c1-o1+1) U^(c2-o1+1) ... D^cm, then elevated;
* a factor is kept upright when the FIRST composition's path is its upper
  boundary and reflected when the SECOND's is; the degenerate factor (one
  shared North step) always becomes the below-ground component DU.
"""

from collections.abc import Iterator
from itertools import combinations, pairwise
from typing import NamedTuple, Optional

from .compositions import (
    EAST,
    NORTH,
    Composition,
    CompositionPair,
    common_vertices,
    from_ne_path,
    is_irreducible,
    path_points,
    to_ne_path,
)
from .errors import IrreducibilityError, ShapeError
from .paths import (
    ABOVE,
    BELOW,
    UP,
    Component,
    DyckPath,
    GrandDyckPath,
    components,
    low_peaks,
)

FIRST = "first"
SECOND = "second"

_REFLECT = str.maketrans("UD", "DU")


def reflect(word: str) -> str:
    """Swap up and down steps, mirroring a path in ground level."""
    return word.translate(_REFLECT)


# ---------------------------------------------------------------------------
# component rewriting (low-peak-free canonical paths <-> Dyck paths)


def _require_primitive(word: str) -> None:
    """A primitive word is nonempty, balanced, and positive strictly inside."""
    if not word:
        raise ShapeError("empty word is not primitive")
    height = 0
    for t, step in enumerate(word):
        height += 1 if step == UP else -1
        if height <= 0 and t < len(word) - 1:
            raise ShapeError(f"{word!r} touches ground level before its end")
    if height != 0:
        raise ShapeError(f"{word!r} is not balanced")


def rewrite_above(c: Component) -> tuple[DyckPath, DyckPath]:
    """Split an above component UUPDQD (P, Q Dyck) into the primitive pair
    (UPD, UQD); sizes add up to the component's size.

    Size-1 components (low peaks) have no such form and are rejected.
    """
    if c.sign != ABOVE:
        raise ShapeError(f"expected an above component, got sign {c.sign!r}")
    if c.semilength < 2:
        raise ShapeError("a low peak (size-1 component) cannot be rewritten")
    _require_primitive(c.word)
    interior = c.word[1:-1]  # a nonempty Dyck word
    height = 0
    for t, step in enumerate(interior):
        height += 1 if step == UP else -1
        if height == 0:
            first_return = t + 1
            break
    p = interior[1 : first_return - 1]
    q = interior[first_return:]
    return DyckPath(UP + p + "D"), DyckPath(UP + q + "D")


def _merge_above(first_word: str, second_word: str) -> str:
    """Inverse of rewrite_above: (UPD, UQD) -> UUPDQD."""
    _require_primitive(first_word)
    _require_primitive(second_word)
    p = first_word[1:-1]
    q = second_word[1:-1]
    return "UU" + p + "D" + q + "D"


def rewrite_below(c: Component) -> DyckPath:
    """Turn a below component D R̄ U into the primitive path U R D, where R̄
    is R reflected; size is preserved."""
    if c.sign != BELOW:
        raise ShapeError(f"expected a below component, got sign {c.sign!r}")
    _require_primitive(reflect(c.word))
    interior = c.word[1:-1]
    return DyckPath(UP + reflect(interior) + "D")


def _below_from_primitive(word: str) -> str:
    """Inverse of rewrite_below: URD -> D R̄ U."""
    _require_primitive(word)
    return "D" + reflect(word[1:-1]) + "U"


def canonicalize(p: GrandDyckPath) -> tuple[str, GrandDyckPath]:
    """Sort a path's components above-before-below, keeping their sign word.

    Returns (pattern, canonical path) where pattern records the original
    arrangement as a word over A/B; together they determine p.
    """
    comps = components(p)
    pattern = "".join("A" if c.sign == ABOVE else "B" for c in comps)
    above = [c.word for c in comps if c.sign == ABOVE]
    below = [c.word for c in comps if c.sign == BELOW]
    return pattern, GrandDyckPath("".join(above + below))


def section3_forward(p: GrandDyckPath) -> DyckPath:
    """Rewrite a low-peak-free path with all above components first into a
    Dyck path of the same size: each above component yields two primitive
    components, each below component one, for j + k components in all."""
    parts: list[str] = []
    seen_below = False
    for c in components(p):
        if c.sign == ABOVE:
            if seen_below:
                raise ShapeError("above component after a below one; canonicalize first")
            if c.semilength == 1:
                raise ShapeError("path has a low peak")
            d1, d2 = rewrite_above(c)
            parts.append(d1.word)
            parts.append(d2.word)
        else:
            seen_below = True
            parts.append(rewrite_below(c).word)
    return DyckPath("".join(parts))


def section3_inverse(d: DyckPath, j: int) -> GrandDyckPath:
    """Undo section3_forward: the first 2j components pair into j above
    components, the rest become below components."""
    comps = components(d)
    if j < 0 or len(comps) < 2 * j:
        raise ShapeError(f"need at least {2 * j} components, have {len(comps)}")
    parts = [
        _merge_above(comps[2 * t].word, comps[2 * t + 1].word) for t in range(j)
    ]
    parts += [_below_from_primitive(c.word) for c in comps[2 * j :]]
    return GrandDyckPath("".join(parts))


class LowPeakRecord(NamedTuple):
    """Where the low peaks sit among the k component slots of a path."""

    k: int
    positions: frozenset[int]  # 1-based slots, one per low peak


def insert_low_peaks(p: GrandDyckPath, rec: LowPeakRecord) -> GrandDyckPath:
    """Insert a UD component at each marked slot among rec.k final slots.

    The input must be low-peak-free and fill the unmarked slots exactly.
    """
    comps = components(p)
    if any(c.sign == ABOVE and c.semilength == 1 for c in comps):
        raise ShapeError("input path already has a low peak")
    if rec.k != len(comps) + len(rec.positions):
        raise ShapeError(
            f"record k={rec.k} does not fit {len(comps)} components plus "
            f"{len(rec.positions)} insertions"
        )
    if any(not 1 <= pos <= rec.k for pos in rec.positions):
        raise ShapeError(f"slot out of range 1..{rec.k}: {sorted(rec.positions)}")
    fill = iter(comps)
    slots = [
        "UD" if slot in rec.positions else next(fill).word
        for slot in range(1, rec.k + 1)
    ]
    return GrandDyckPath("".join(slots))


def remove_low_peaks(p: GrandDyckPath) -> tuple[GrandDyckPath, LowPeakRecord]:
    """Delete every low-peak component, recording its slot; exact inverse of
    insert_low_peaks."""
    comps = components(p)
    positions = frozenset(
        slot
        for slot, c in enumerate(comps, start=1)
        if c.sign == ABOVE and c.semilength == 1
    )
    kept = "".join(
        c.word for slot, c in enumerate(comps, start=1) if slot not in positions
    )
    return GrandDyckPath(kept), LowPeakRecord(len(comps), positions)


# ---------------------------------------------------------------------------
# parallelogram polyominoes and the composition-pair bijection


class ParallelogramPolyomino:
    """Region between two North/East paths that share only their endpoints.

    ``upper`` runs weakly above ``lower``; both have the same step count s,
    the semiperimeter.  ``upper_color`` records which composition's path is
    the upper boundary when the polyomino arose from a pair's diagram.
    """

    __slots__ = ("upper", "lower", "upper_color")

    def __init__(self, upper: str, lower: str, upper_color: str = FIRST):
        if upper_color not in (FIRST, SECOND):
            raise ValueError(f"upper_color must be {FIRST!r} or {SECOND!r}")
        if len(upper) < 2:
            raise ShapeError("a polyomino has semiperimeter at least 2")
        pts_u = path_points(upper)
        pts_l = path_points(lower)
        if len(upper) != len(lower) or pts_u[-1] != pts_l[-1]:
            raise ShapeError("bounding paths must share endpoints")
        if set(pts_u[1:-1]) & set(pts_l[1:-1]):
            raise ShapeError("bounding paths meet strictly inside")
        if upper[0] != NORTH or lower[0] != EAST:
            # with interiors disjoint this pins which path runs on top
            raise ShapeError("upper path must start North and lower path East")
        self.upper = upper
        self.lower = lower
        self.upper_color = upper_color

    @property
    def semiperimeter(self) -> int:
        return len(self.upper)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ParallelogramPolyomino)
            and self.upper == other.upper
            and self.lower == other.lower
            and self.upper_color == other.upper_color
        )

    def __hash__(self) -> int:
        return hash((self.upper, self.lower, self.upper_color))

    def __repr__(self) -> str:
        return (
            f"ParallelogramPolyomino({self.upper!r}, {self.lower!r}, "
            f"{self.upper_color!r})"
        )


class Factor(NamedTuple):
    """One segment of a pair's diagram: a polyomino, or None for the
    degenerate case of two coincident North steps."""

    poly: Optional[ParallelogramPolyomino]

    @classmethod
    def degenerate(cls) -> "Factor":
        return cls(None)

    @property
    def is_degenerate(self) -> bool:
        return self.poly is None

    def record(self) -> dict:
        """JSON-ready description of the factor."""
        if self.poly is None:
            return {"kind": "degenerate"}
        return {
            "kind": "polyomino",
            "s": self.poly.semiperimeter,
            "upper": self.poly.upper_color,
        }


def _east_levels(word: str) -> list[int]:
    """Heights at which an NE path takes its East steps, left to right."""
    levels = []
    y = 0
    for step in word:
        if step == NORTH:
            y += 1
        else:
            levels.append(y)
    return levels


def _path_from_east_levels(levels: list[int], height: int) -> str:
    """NE path with East steps at the given heights, ending at that height."""
    word = []
    y = 0
    for level in levels:
        word.append(NORTH * (level - y))
        word.append(EAST)
        y = level
    word.append(NORTH * (height - y))
    return "".join(word)


def _column_profile(poly: ParallelogramPolyomino) -> tuple[list[int], list[int]]:
    """Column heights and adjacent column overlaps of a polyomino."""
    lower = _east_levels(poly.lower)
    upper = _east_levels(poly.upper)
    heights = [u - l for u, l in zip(upper, lower)]
    overlaps = [upper[t] - lower[t + 1] for t in range(len(lower) - 1)]
    return heights, overlaps


def polyomino_to_primitive(poly: ParallelogramPolyomino) -> DyckPath:
    """Encode a polyomino of semiperimeter s as a primitive Dyck path of
    size s: column heights become peak heights, overlaps become valley
    heights plus one, and the resulting size-(s-1) Dyck path is elevated."""
    heights, overlaps = _column_profile(poly)
    runs = [UP * heights[0]]
    for t, o in enumerate(overlaps):
        runs.append("D" * (heights[t] - o + 1))
        runs.append(UP * (heights[t + 1] - o + 1))
    runs.append("D" * heights[-1])
    return DyckPath(UP + "".join(runs) + "D")


def primitive_to_polyomino(
    d: DyckPath, upper_color: str = FIRST
) -> ParallelogramPolyomino:
    """Decode a primitive Dyck path of size s >= 2 back into the polyomino of
    semiperimeter s; inverse of polyomino_to_primitive."""
    _require_primitive(d.word)
    interior = d.word[1:-1]
    if not interior:
        raise ShapeError("size-1 primitive paths decode to the degenerate factor")
    # peak and valley heights of the interior word
    peaks: list[int] = []
    valleys: list[int] = []
    height = 0
    for step, nxt in zip(interior, interior[1:] + "D"):
        height += 1 if step == UP else -1
        if step == UP and nxt != UP:
            peaks.append(height)
        elif step != UP and nxt == UP:
            valleys.append(height)
    heights = peaks
    overlaps = [g + 1 for g in valleys]
    bottoms = [0]
    for t, o in enumerate(overlaps):
        bottoms.append(bottoms[t] + heights[t] - o)
    tops = [b + c for b, c in zip(bottoms, heights)]
    total_height = tops[-1]
    return ParallelogramPolyomino(
        _path_from_east_levels(tops, total_height),
        _path_from_east_levels(bottoms, total_height),
        upper_color,
    )


def enumerate_polyominoes(s: int) -> Iterator[ParallelogramPolyomino]:
    """Every parallelogram polyomino of semiperimeter s, by brute force over
    bounding-path pairs; there are catalan(s-1) of them."""
    if s < 2:
        return
    for width in range(1, s):
        height = s - width
        # a bounding path is determined by the positions of its East steps
        uppers = [
            word
            for word in _ne_words(width, height)
            if word[0] == NORTH and word[-1] == EAST
        ]
        lowers = [
            word
            for word in _ne_words(width, height)
            if word[0] == EAST and word[-1] == NORTH
        ]
        for upper in uppers:
            pts_u = set(path_points(upper)[1:-1])
            for lower in lowers:
                if pts_u & set(path_points(lower)[1:-1]):
                    continue
                yield ParallelogramPolyomino(upper, lower)


def _ne_words(width: int, height: int) -> Iterator[str]:
    """All NE words with the given numbers of East and North steps."""
    total = width + height
    for east_positions in combinations(range(total), width):
        chars = [NORTH] * total
        for pos in east_positions:
            chars[pos] = EAST
        yield "".join(chars)


def factorize_pair(pair: CompositionPair) -> list[Factor]:
    """Cut an irreducible pair's diagram (final East steps dropped) at the
    vertices shared by its two paths.

    Each piece is a parallelogram polyomino, colored by whichever path runs
    on top, or the degenerate shared North step.  Per-path factor lengths
    sum to total - 1.
    """
    if not is_irreducible(pair):
        raise IrreducibilityError(f"pair {pair} has a common proper prefix sum")
    pa = to_ne_path(pair.first, drop_last_east=True)
    pb = to_ne_path(pair.second, drop_last_east=True)
    shared = common_vertices(pa, pb)
    cuts = [x + y for x, y in shared]  # prefix length equals coordinate sum
    factors: list[Factor] = []
    for t0, t1 in pairwise(cuts):
        seg_a = pa[t0:t1]
        seg_b = pb[t0:t1]
        if t1 - t0 == 1:
            if seg_a != NORTH or seg_b != NORTH:
                raise ShapeError(
                    f"coincident non-North step in {pair}; input not irreducible?"
                )
            factors.append(Factor.degenerate())
        elif seg_a[0] == NORTH:
            factors.append(Factor(ParallelogramPolyomino(seg_a, seg_b, FIRST)))
        else:
            factors.append(Factor(ParallelogramPolyomino(seg_b, seg_a, SECOND)))
    return factors


def pair_to_gdp(pair: CompositionPair) -> GrandDyckPath:
    """Map an irreducible pair of compositions of n+1 to a low-peak-free
    Grand-Dyck path of size n.

    Polyomino factors become primitive components, upright when the first
    composition's path is on top, reflected otherwise; degenerate factors
    always become the below component DU.
    """
    parts: list[str] = []
    for factor in factorize_pair(pair):
        if factor.is_degenerate:
            parts.append("DU")
        else:
            word = polyomino_to_primitive(factor.poly).word
            parts.append(word if factor.poly.upper_color == FIRST else reflect(word))
    return GrandDyckPath("".join(parts))


def gdp_to_pair(g: GrandDyckPath) -> CompositionPair:
    """Inverse of pair_to_gdp: a low-peak-free path of size n back to an
    irreducible pair of compositions of n+1."""
    if low_peaks(g) > 0:
        raise ShapeError(f"path {g} has a low peak")
    first_parts: list[str] = []
    second_parts: list[str] = []
    for c in components(g):
        if c.semilength == 1:  # necessarily DU: size-1 above would be a low peak
            first_parts.append(NORTH)
            second_parts.append(NORTH)
            continue
        if c.sign == ABOVE:
            word, color = c.word, FIRST
        else:
            word, color = reflect(c.word), SECOND
        poly = primitive_to_polyomino(DyckPath(word), color)
        if color == FIRST:
            first_parts.append(poly.upper)
            second_parts.append(poly.lower)
        else:
            first_parts.append(poly.lower)
            second_parts.append(poly.upper)
    pair = CompositionPair(
        from_ne_path("".join(first_parts) + EAST),
        from_ne_path("".join(second_parts) + EAST),
    )
    if not is_irreducible(pair):  # cannot happen: factors share no East steps
        raise ShapeError(f"decoding {g} produced a reducible pair {pair}")
    return pair
