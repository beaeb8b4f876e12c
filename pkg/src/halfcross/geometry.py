"""Points, the three distance measures, and the half-cross shape as an offset set.

The shape of interest is the (0.5, n)-cross scaled by two: a discrete body of
2^n(n+1) unit cells.  We represent it purely by its codeword-relative offset
set: a codeword X covers a cell A exactly when X - A lies in the offset set
returned by :func:`upsilon_offsets`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

Point = tuple[int, ...]

#: offset entries that count as "exceptional" (at most one per offset vector)
_EXCEPTIONAL = (-1, 2)


class DimensionMismatch(ValueError):
    """Two points of different lengths were combined."""


def _pair(x: Point, y: Point) -> None:
    if len(x) != len(y):
        raise DimensionMismatch(f"length {len(x)} vs {len(y)}")


def hamming_distance(x: Point, y: Point) -> int:
    """Number of positions where x and y differ."""
    _pair(x, y)
    return sum(1 for a, b in zip(x, y) if a != b)


def manhattan_distance(x: Point, y: Point) -> int:
    """Sum of absolute coordinate differences."""
    _pair(x, y)
    return sum(abs(a - b) for a, b in zip(x, y))


def cross_distance(x: Point, y: Point) -> int:
    """Sum over coordinates of max(0, |y_i - x_i| - 1).

    Not a metric: it violates the triangle inequality, but two shape
    translates at X and Y are disjoint exactly when this is >= 3.
    """
    _pair(x, y)
    return sum(max(0, abs(b - a) - 1) for a, b in zip(x, y))


def cross_weight(x: Point) -> int:
    """Cross distance from x to the origin."""
    return sum(max(0, abs(a) - 1) for a in x)


def torus_cross_distance(x: Point, y: Point, p: int) -> int:
    """Cross distance on the torus (Z_p)^n, minimizing each |y_i - x_i| over wraps.

    Valid coordinate-by-coordinate because the cross distance is separable.
    Periods below 4 are rejected: the shape has extent 4 per axis and would
    self-overlap.
    """
    _pair(x, y)
    if p < 4:
        raise ValueError(f"period must be >= 4, got {p}")
    total = 0
    for a, b in zip(x, y):
        d = abs(b - a) % p
        d = min(d, p - d)
        total += max(0, d - 1)
    return total


@dataclass(frozen=True)
class UpsilonShape:
    """The half-cross shape of dimension n as a canonical offset set.

    ``offsets`` holds every vector D = X - A such that a codeword at X covers
    the cell A, in lexicographic order.
    """

    n: int
    offsets: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.offsets)

    def cells(self, x: Point) -> set[Point]:
        """All cells covered by a codeword at x (in Z^n, no wraparound)."""
        return {tuple(a - d for a, d in zip(x, off)) for off in self.offsets}

    def torus_cells(self, x: Point, p: int) -> set[Point]:
        """All cells covered by x on the torus (Z_p)^n."""
        if p < 4:
            raise ValueError(f"period must be >= 4, got {p}")
        return {tuple((a - d) % p for a, d in zip(x, off)) for off in self.offsets}


@lru_cache(maxsize=None)
def upsilon_offsets(n: int) -> UpsilonShape:
    """Offset set of the n-dimensional half-cross: 2^n(n+1) vectors.

    These are exactly the D in {-1,0,1,2}^n with at most one entry in {-1,2}.
    Generated directly ({0,1}^n plus one exceptional coordinate) rather than
    by filtering {-1,..,2}^n, so large n stay cheap.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    offsets: list[Point] = [tuple(core) for core in product((0, 1), repeat=n)]
    for r in range(n):
        for e in _EXCEPTIONAL:
            for rest in product((0, 1), repeat=n - 1):
                offsets.append(rest[:r] + (e,) + rest[r:])
    offsets.sort()
    return UpsilonShape(n=n, offsets=tuple(offsets))


def covers(x: Point, a: Point) -> bool:
    """True iff the codeword x covers the cell a.

    Equivalent to (x - a) being a member of ``upsilon_offsets(n)``: every
    x_i in {a_i-1, .., a_i+2} and at most one i with x_i in {a_i-1, a_i+2}.
    """
    _pair(x, a)
    exceptional = 0
    for xi, ai in zip(x, a):
        d = xi - ai
        if d < -1 or d > 2:
            return False
        if d == -1 or d == 2:
            exceptional += 1
            if exceptional > 1:
                return False
    return True


def torus_covers(x: Point, a: Point, p: int) -> bool:
    """Torus version of :func:`covers` for points reduced mod p (p >= 4)."""
    _pair(x, a)
    if p < 4:
        raise ValueError(f"period must be >= 4, got {p}")
    exceptional = 0
    for xi, ai in zip(x, a):
        d = (xi - ai) % p
        if d == 2 or d == p - 1:
            exceptional += 1
            if exceptional > 1:
                return False
        elif d != 0 and d != 1:
            return False
    return True
