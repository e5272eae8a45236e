"""Grand-Dyck path model: the four statistics, components, and exhaustive enumeration.

A Grand-Dyck path is a word over the step alphabet U (up, ``(1,1)``) and D
(down, ``(1,-1)``) with equally many of each; it may dip below the horizontal
line through its endpoints (ground level).  The vertices at ground level cut
a nonempty path into components, each a primitive Dyck path (above ground) or
a reflected one (below ground).  A low peak is a UD factor starting at ground
level, i.e. an above component of semilength 1.

The enumerators here are deliberately naive: they visit every path of a given
size, so the closed-form counts elsewhere in the library can be checked
against an exhaustive tally.
"""

from collections import Counter
from collections.abc import Iterator
from typing import NamedTuple

from .errors import BalanceError, CharError, ResourceError, ShapeError

UP = "U"
DOWN = "D"

ABOVE = "above"
BELOW = "below"

# Largest semilength the exhaustive enumerators accept by default.
# binomial(28, 14) is already ~40 million paths; past that a full walk stops
# being a desk-scale computation.
ENUMERATION_CAP = 14


class GrandDyckPath:
    """An immutable balanced step word.  ``word`` is a string over {U, D}."""

    __slots__ = ("word",)

    def __init__(self, word: str = ""):
        ups = word.count(UP)
        downs = word.count(DOWN)
        if ups + downs != len(word):
            bad = next(c for c in word if c not in (UP, DOWN))
            raise CharError(f"invalid step character {bad!r}; expected U or D")
        if ups != downs:
            raise BalanceError(f"{ups} up steps vs {downs} down steps in {word!r}")
        self.word = word

    @property
    def semilength(self) -> int:
        return len(self.word) // 2

    def __len__(self) -> int:
        return len(self.word)

    def __eq__(self, other) -> bool:
        return isinstance(other, GrandDyckPath) and self.word == other.word

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.word))

    def __str__(self) -> str:
        return self.word

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.word!r})"


class DyckPath(GrandDyckPath):
    """A Grand-Dyck path that never goes below ground level."""

    __slots__ = ()

    def __init__(self, word: str = ""):
        super().__init__(word)
        height = 0
        for step in word:
            height += 1 if step == UP else -1
            if height < 0:
                raise ShapeError(f"{word!r} dips below ground level")


class Component(NamedTuple):
    """A maximal piece of a path between consecutive ground-level vertices."""

    sign: str  # ABOVE or BELOW
    word: str

    @property
    def semilength(self) -> int:
        return len(self.word) // 2


class PathStats(NamedTuple):
    """Joint statistics of a path: size and the three component counts."""

    n: int  # semilength
    i: int  # low peaks
    j: int  # components above ground level
    k: int  # components altogether


def parse_path(text: str) -> GrandDyckPath:
    """Parse a U/D word into a path.  The empty string is the empty path."""
    return GrandDyckPath(text)


def _component_spans(word: str) -> Iterator[tuple[int, int]]:
    """Yield (start, end) index pairs of the components of a balanced word."""
    height = 0
    start = 0
    for t, step in enumerate(word):
        height += 1 if step == UP else -1
        if height == 0:
            yield start, t + 1
            start = t + 1


def _scan(word: str) -> tuple[int, int, int]:
    """One walk over the word, tallying (low peaks, above components, components)."""
    i = j = k = 0
    height = 0
    start = 0
    for t, step in enumerate(word):
        height += 1 if step == UP else -1
        if height == 0:
            k += 1
            if word[start] == UP:
                j += 1
                if t == start + 1:
                    i += 1
            start = t + 1
    return i, j, k


def low_peaks(p: GrandDyckPath) -> int:
    """Number of UD factors of p that start at ground level."""
    return _scan(p.word)[0]


def components(p: GrandDyckPath) -> list[Component]:
    """Split p at its ground-level vertices, in left-to-right order.

    Each piece starting with U is a primitive Dyck path (sign ABOVE); each
    piece starting with D is a reflected one (sign BELOW).  The empty path
    has no components.
    """
    word = p.word
    return [
        Component(ABOVE if word[a] == UP else BELOW, word[a:b])
        for a, b in _component_spans(word)
    ]


def stats(p: GrandDyckPath) -> PathStats:
    """All four statistics of p in one pass."""
    i, j, k = _scan(p.word)
    return PathStats(p.semilength, i, j, k)


def big_components_above(p: GrandDyckPath) -> int:
    """Number of above-ground components of semilength at least 2."""
    word = p.word
    return sum(
        1 for a, b in _component_spans(word) if word[a] == UP and b - a >= 4
    )


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError(f"semilength must be nonnegative, got {n}")
    if n > cap:
        raise ResourceError(f"semilength {n} exceeds enumeration cap {cap}")


def _balanced_words(n: int) -> Iterator[str]:
    """All words with n U's and n D's, lexicographically with D < U."""
    if n == 0:
        yield ""
        return
    chars = [DOWN] * n + [UP] * n
    while True:
        yield "".join(chars)
        # standard next-permutation step on the multiset
        i = len(chars) - 2
        while i >= 0 and chars[i] >= chars[i + 1]:
            i -= 1
        if i < 0:
            return
        j = len(chars) - 1
        while chars[j] <= chars[i]:
            j -= 1
        chars[i], chars[j] = chars[j], chars[i]
        chars[i + 1 :] = reversed(chars[i + 1 :])


def _dyck_words(n: int) -> Iterator[str]:
    """All Dyck words of semilength n, lexicographically with D < U."""

    def extend(prefix: list[str], ups_left: int, height: int) -> Iterator[str]:
        if ups_left == 0 and height == 0:
            yield "".join(prefix)
            return
        if height > 0:  # D first keeps lexicographic order
            prefix.append(DOWN)
            yield from extend(prefix, ups_left, height - 1)
            prefix.pop()
        if ups_left > 0:
            prefix.append(UP)
            yield from extend(prefix, ups_left - 1, height + 1)
            prefix.pop()

    yield from extend([], n, 0)


def enumerate_grand_dyck(n: int, cap: int = ENUMERATION_CAP) -> Iterator[GrandDyckPath]:
    """Every Grand-Dyck path of semilength n, exactly once.

    Order is lexicographic with D before U, so streams are reproducible.
    The stream has binomial(2n, n) entries; raises ResourceError past ``cap``.
    """
    _check_cap(n, cap)
    for word in _balanced_words(n):
        yield GrandDyckPath(word)


def enumerate_dyck(n: int, cap: int = ENUMERATION_CAP) -> Iterator[DyckPath]:
    """Every Dyck path of semilength n, exactly once (lexicographic, D < U)."""
    _check_cap(n, cap)
    for word in _dyck_words(n):
        yield DyckPath(word)


def histogram(n: int, cap: int = ENUMERATION_CAP) -> dict[tuple[int, int, int], int]:
    """Exhaustive tally of the (i, j, k) statistics over all paths of size n.

    The values sum to binomial(2n, n).  This is the brute-force oracle the
    closed-form counters are tested against.
    """
    _check_cap(n, cap)
    tally: Counter[tuple[int, int, int]] = Counter()
    for word in _balanced_words(n):
        tally[_scan(word)] += 1
    return dict(tally)


def histogram_records(hist: dict[tuple[int, int, int], int]) -> list[dict]:
    """Histogram as sorted JSON-ready records with decimal-string counts."""
    return [
        {"i": i, "j": j, "k": k, "count": str(hist[(i, j, k)])}
        for (i, j, k) in sorted(hist)
    ]
