"""Backtracking existence search for half-cross tilings of small tori.

Independent of the constructions: picks the lowest uncovered cell, branches
over every codeword placement covering it, and prunes on overlap.  Used to
confirm existence and nonexistence at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Point, upsilon_offsets
from .tiling import PeriodicTiling

#: search is refused above this window size; use the constructions instead
MAX_SEARCH_CELLS = 10**6


@dataclass(frozen=True)
class SearchConfig:
    n: int
    p: int
    max_solutions: int = 1
    symmetry_breaking: bool = True
    node_budget: int = 10**7

    def __post_init__(self):
        if self.p < 4:
            raise ValueError(f"period must be >= 4, got {self.p}")
        if self.p**self.n > MAX_SEARCH_CELLS:
            raise ValueError(
                f"window {self.p}^{self.n} exceeds search scale "
                f"{MAX_SEARCH_CELLS}; use the constructions plus verify"
            )


@dataclass
class SearchStats:
    nodes: int = 0
    backtracks: int = 0
    solutions: int = 0
    status: str = "complete"  # complete | budget | divisibility


def divisibility_precheck(n: int, p: int) -> bool:
    """Whether the shape size 2^n(n+1) divides the window size p^n."""
    return p**n % (2**n * (n + 1)) == 0


class _Budget(Exception):
    pass


def search_tilings(cfg: SearchConfig) -> tuple[list[PeriodicTiling], SearchStats]:
    """Enumerate tilings of the (Z_p)^n torus up to ``max_solutions``.

    With symmetry breaking the origin is fixed as a codeword (any tiling can
    be translated to one containing it), so each reported solution stands for
    its p^n translates.  Deterministic: cells and candidate placements are
    tried in lexicographic order.
    """
    n, p = cfg.n, cfg.p
    stats = SearchStats()
    if not divisibility_precheck(n, p):
        stats.status = "divisibility"
        return [], stats

    total = p**n
    shape = upsilon_offsets(n)
    tiles_needed = total // len(shape)

    def cell_index(pt: Point) -> int:
        idx = 0
        for v in reversed(pt):
            idx = idx * p + v
        return idx

    def cell_point(idx: int) -> Point:
        coords = []
        for _ in range(n):
            coords.append(idx % p)
            idx //= p
        return tuple(coords)

    cells_cache: dict[Point, list[int]] = {}

    def cells_of(x: Point) -> list[int]:
        got = cells_cache.get(x)
        if got is None:
            got = [
                cell_index(tuple((xi - di) % p for xi, di in zip(x, off)))
                for off in shape.offsets
            ]
            cells_cache[x] = got
        return got

    covered = bytearray(total)
    placed: list[Point] = []
    solutions: list[PeriodicTiling] = []

    def place(x: Point) -> bool:
        cells = cells_of(x)
        if any(covered[c] for c in cells):
            return False
        for c in cells:
            covered[c] = 1
        placed.append(x)
        return True

    def unplace(x: Point) -> None:
        for c in cells_of(x):
            covered[c] = 0
        placed.pop()

    def recurse() -> None:
        stats.nodes += 1
        if stats.nodes > cfg.node_budget:
            raise _Budget
        if len(placed) == tiles_needed:
            solutions.append(
                PeriodicTiling(n=n, p=p, codewords=tuple(sorted(placed)))
            )
            stats.solutions += 1
            return
        lowest = covered.find(0)
        a = cell_point(lowest)
        candidates = sorted(
            {tuple((ai + di) % p for ai, di in zip(a, off)) for off in shape.offsets}
        )
        for x in candidates:
            if not place(x):
                continue
            recurse()
            unplace(x)
            stats.backtracks += 1
            if stats.solutions >= cfg.max_solutions:
                return

    try:
        if cfg.symmetry_breaking:
            origin = (0,) * n
            place(origin)
            recurse()
        else:
            recurse()
    except _Budget:
        stats.status = "budget"

    return solutions, stats
