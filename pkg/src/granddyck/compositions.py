"""Compositions, ordered pairs of them, and their North/East path pictures.

A composition of n is a nonempty sequence of positive integers summing to n.
An ordered pair of compositions of the same total and the same number of
parts is irreducible when no proper prefix of the first sums to the same
value as the matching prefix of the second.  Each part a contributes a-1
North steps and one East step to a lattice path; dropping the final East
step (always last) gives the picture the composition-pair bijection works on.
"""

from collections.abc import Iterator

from .errors import ResourceError, ShapeError

NORTH = "N"
EAST = "E"

# Pair enumeration visits a filtered product of composition sets; totals past
# this stop being desk-scale even with prefix pruning.
COMPOSITION_CAP = 16


class Composition:
    """An immutable nonempty sequence of positive integer parts."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        self.parts = parts

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse comma-separated positive parts, e.g. '3,1,2,2,3'."""
        try:
            return cls(int(piece) for piece in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad composition {text!r}: {exc}") from exc

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Composition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Composition({self.parts!r})"


class CompositionPair:
    """An ordered pair of compositions with equal totals and part counts."""

    __slots__ = ("first", "second")

    def __init__(self, first: Composition, second: Composition):
        if first.total != second.total:
            raise ValueError(
                f"totals differ: {first.total} vs {second.total}"
            )
        if len(first) != len(second):
            raise ValueError(
                f"part counts differ: {len(first)} vs {len(second)}"
            )
        self.first = first
        self.second = second

    @classmethod
    def parse(cls, text: str) -> "CompositionPair":
        """Parse two comma-separated compositions joined by ';'."""
        pieces = text.split(";")
        if len(pieces) != 2:
            raise ValueError(f"expected 'a,b,...;c,d,...', got {text!r}")
        return cls(Composition.parse(pieces[0]), Composition.parse(pieces[1]))

    @property
    def total(self) -> int:
        return self.first.total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CompositionPair)
            and self.first == other.first
            and self.second == other.second
        )

    def __hash__(self) -> int:
        return hash((self.first, self.second))

    def __str__(self) -> str:
        return f"{self.first};{self.second}"

    def __repr__(self) -> str:
        return f"CompositionPair({self.first!r}, {self.second!r})"


def enumerate_compositions(
    n: int, k: int | None = None, cap: int = COMPOSITION_CAP
) -> Iterator[Composition]:
    """All compositions of n (into k parts when given), lexicographically.

    There are binomial(n-1, k-1) for fixed k and 2^(n-1) altogether.
    """
    if n < 1:
        raise ValueError(f"total must be positive, got {n}")
    if n > cap:
        raise ResourceError(f"total {n} exceeds composition cap {cap}")
    if k is not None and not 1 <= k <= n:
        raise ValueError(f"part count {k} out of range 1..{n}")

    def rec(remaining: int, parts_left: int | None, prefix: list[int]) -> Iterator[Composition]:
        if remaining == 0:
            if parts_left in (None, 0):
                yield Composition(prefix)
            return
        if parts_left == 0:
            return
        low = 1
        high = remaining if parts_left is None else remaining - (parts_left - 1)
        for part in range(low, high + 1):
            prefix.append(part)
            yield from rec(remaining - part, None if parts_left is None else parts_left - 1, prefix)
            prefix.pop()

    yield from rec(n, k, [])


def is_irreducible(pair: CompositionPair) -> bool:
    """True when no proper prefix-sum coincidence exists between the two."""
    sa = sb = 0
    for a, b in zip(pair.first.parts[:-1], pair.second.parts[:-1]):
        sa += a
        sb += b
        if sa == sb:
            return False
    return True


def enumerate_irreducible_pairs(
    n: int, cap: int = COMPOSITION_CAP
) -> Iterator[CompositionPair]:
    """All irreducible ordered pairs of compositions of n, grouped by part
    count k = 1..n, pruning on the first prefix-sum coincidence."""
    if n < 1:
        raise ValueError(f"total must be positive, got {n}")
    if n > cap:
        raise ResourceError(f"total {n} exceeds composition cap {cap}")

    def rec(k: int, sa: int, sb: int, t: int, aparts: list[int], bparts: list[int]) -> Iterator[CompositionPair]:
        if t == k - 1:  # last parts are forced
            a, b = n - sa, n - sb
            if a >= 1 and b >= 1:
                yield CompositionPair(
                    Composition(aparts + [a]), Composition(bparts + [b])
                )
            return
        slots_after = k - t - 1
        for a in range(1, n - sa - slots_after + 1):
            for b in range(1, n - sb - slots_after + 1):
                if sa + a == sb + b:  # coincidence at a proper prefix
                    continue
                aparts.append(a)
                bparts.append(b)
                yield from rec(k, sa + a, sb + b, t + 1, aparts, bparts)
                aparts.pop()
                bparts.pop()

    for k in range(1, n + 1):
        yield from rec(k, 0, 0, 0, [], [])


def to_ne_path(c: Composition, drop_last_east: bool = False) -> str:
    """Lattice-path word of a composition: each part a contributes a-1 North
    steps then one East step; optionally drop the final East step."""
    word = "".join(NORTH * (p - 1) + EAST for p in c.parts)
    return word[:-1] if drop_last_east else word


def from_ne_path(word: str, last_east_dropped: bool = False) -> Composition:
    """Recover the composition whose lattice-path word this is."""
    if any(ch not in (NORTH, EAST) for ch in word):
        raise ValueError(f"bad step in NE path {word!r}")
    if last_east_dropped:
        word += EAST
    if not word.endswith(EAST):
        raise ValueError(f"NE path {word!r} does not end with East")
    runs = word.split(EAST)[:-1]
    return Composition(len(run) + 1 for run in runs)


def path_points(word: str) -> list[tuple[int, int]]:
    """Vertices visited by an NE path starting at the origin, in step order."""
    points = [(0, 0)]
    x = y = 0
    for step in word:
        if step == NORTH:
            y += 1
        elif step == EAST:
            x += 1
        else:
            raise ValueError(f"bad step {step!r} in NE path")
        points.append((x, y))
    return points


def common_vertices(a: str, b: str) -> list[tuple[int, int]]:
    """Lattice points visited by both NE paths, ordered from start to end.

    The paths must share endpoints (they come from an irreducible pair with
    the final East steps dropped).  Points are compared as positions, not
    step indices; for equal-length NE paths a shared point always sits at
    coordinate sum equal to its prefix length.
    """
    pts_a = path_points(a)
    pts_b = path_points(b)
    if len(a) != len(b) or pts_a[-1] != pts_b[-1]:
        raise ShapeError(
            f"paths must share endpoints: {a!r} ends {pts_a[-1]}, {b!r} ends {pts_b[-1]}"
        )
    shared = set(pts_a) & set(pts_b)
    return sorted(shared, key=lambda pt: pt[0] + pt[1])
