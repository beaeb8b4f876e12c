"""Periodic tilings, the exact-cover verifier, symmetry transforms, and audits.

A periodic tiling with period p is stored by its window codewords in
{0,..,p-1}^n.  Verification marks, for every codeword X and shape offset D,
the cell (X - D) mod p, and demands that every cell of the p^n window is
marked exactly once.  The window is sharded by the last coordinate so the
12^8-cell case fits comfortably in memory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .geometry import Point, torus_covers, torus_cross_distance, upsilon_offsets

#: default ceiling on window size p^n (the 12^8 case, criterion scale)
DEFAULT_CELL_BUDGET = 12**8
#: min cross distance is only computed when k^2 stays below this
DEFAULT_PAIR_BUDGET = 10**8

_OFFSET_LAST = (-1, 0, 1, 2)


class CellBudgetExceeded(ValueError):
    """The window p^n is larger than the configured cell budget."""


class TilingFormatError(ValueError):
    """A TILING v1 file failed to parse."""


@dataclass(frozen=True)
class PeriodicTiling:
    """Window representation of T = codewords + p Z^n."""

    n: int
    p: int
    codewords: tuple[Point, ...]

    def __post_init__(self):
        if self.p < 4:
            raise ValueError(f"period must be >= 4, got {self.p}")
        seen = set()
        for w in self.codewords:
            if len(w) != self.n:
                raise ValueError(f"codeword {w} has length != {self.n}")
            if any(v < 0 or v >= self.p for v in w):
                raise ValueError(f"codeword {w} outside window of period {self.p}")
            if w in seen:
                raise ValueError(f"duplicate codeword {w}")
            seen.add(w)
        object.__setattr__(self, "codewords", tuple(sorted(self.codewords)))

    def __len__(self) -> int:
        return len(self.codewords)

    def codeword_set(self) -> set[Point]:
        return set(self.codewords)


@dataclass(frozen=True)
class VerificationReport:
    is_tiling: bool
    cells_total: int
    multiply_covered: int
    uncovered: int
    first_witness: tuple[Point, tuple[Point, ...]] | None = None
    min_cross_distance: int | None = None

    def to_dict(self) -> dict:
        d = {
            "is_tiling": self.is_tiling,
            "cells_total": self.cells_total,
            "multiply_covered": self.multiply_covered,
            "uncovered": self.uncovered,
        }
        if self.first_witness is not None:
            cell, cws = self.first_witness
            d["first_witness"] = {
                "cell": list(cell),
                "covering_codewords": [list(w) for w in cws],
            }
        if self.min_cross_distance is not None:
            d["min_cross_distance"] = self.min_cross_distance
        return d


@dataclass(frozen=True)
class NonexistenceCertificate:
    n: int
    forced_period: int
    shape_size: int
    window_size: int
    divides: bool
    conclusion: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "forced_period": self.forced_period,
            "shape_size": self.shape_size,
            "window_size": self.window_size,
            "divides": self.divides,
            "conclusion": self.conclusion,
        }


@dataclass(frozen=True)
class Admissibility:
    n: int
    admissible: bool
    base: int | None = None
    t: int | None = None


@dataclass(frozen=True)
class AuditCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class AuditReport:
    n: int
    p: int
    profile: str  # "odd" or "even"
    f1_pairs: tuple[tuple[int, int], ...]  # 1-based (r, s) with 3e_r+2e_s in T
    f2_triples: tuple[tuple[int, int, int], ...]  # 1-based coordinate triples
    spencer_bound: int
    checks: tuple[AuditCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "profile": self.profile,
            "f1_pairs": [list(p) for p in self.f1_pairs],
            "f2_triples": [list(t) for t in self.f2_triples],
            "spencer_bound": self.spencer_bound,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def _index_to_point(idx: int, n: int, p: int) -> Point:
    # mixed-radix little-endian: coordinate 1 varies fastest
    coords = []
    for _ in range(n):
        coords.append(idx % p)
        idx //= p
    return tuple(coords)


def verify(
    tiling: PeriodicTiling,
    *,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> VerificationReport:
    """Exact-cover check of the full p^n window.

    Marks (X - D) mod p for every codeword X and offset D, sharded by the
    cell's last coordinate; each shard's cell indices are sorted and compared
    against the full range, so exact-once covering (and hence both the
    packing and covering properties) is established with one byte-bounded
    pass per shard.  The minimum torus cross distance over codeword pairs is
    reported when the pair count is within budget.
    """
    n, p = tiling.n, tiling.p
    total = p**n
    if total > cell_budget:
        raise CellBudgetExceeded(f"window {p}^{n} = {total} exceeds budget {cell_budget}")
    shard_size = total // p
    shape = upsilon_offsets(n)
    k = len(tiling.codewords)

    # codeword first-coordinates grouped by last coordinate value
    cw = np.array(tiling.codewords, dtype=np.int32).reshape(k, n)
    by_last: list[np.ndarray] = []
    for v in range(p):
        sel = cw[cw[:, n - 1] == v][:, : n - 1]
        by_last.append(np.ascontiguousarray(sel))
    offs = np.array(shape.offsets, dtype=np.int32)
    off_by_last = {
        d: np.ascontiguousarray(offs[offs[:, n - 1] == d][:, : n - 1])
        for d in _OFFSET_LAST
    }
    radix = np.array([p**i for i in range(n - 1)], dtype=np.int64)

    uncovered = 0
    multiply = 0
    witness_idx: int | None = None
    for c in range(p):
        marks = sum(
            by_last[(c + dlast) % p].shape[0] * off_by_last[dlast].shape[0]
            for dlast in _OFFSET_LAST
        )
        arr = np.empty(marks, dtype=np.int32)
        pos = 0
        for dlast in _OFFSET_LAST:
            xs = by_last[(c + dlast) % p]
            ds = off_by_last[dlast]
            if xs.shape[0] == 0 or ds.shape[0] == 0:
                continue
            m1 = ds.shape[0]
            chunk = max(1, 4_000_000 // m1)
            for lo in range(0, xs.shape[0], chunk):
                block = xs[lo : lo + chunk]
                idx = np.zeros((block.shape[0], m1), dtype=np.int32)
                for i in range(n - 1):
                    idx += ((block[:, i, None] - ds[None, :, i]) % p).astype(
                        np.int32
                    ) * np.int32(radix[i])
                flat = idx.ravel()
                arr[pos : pos + flat.size] = flat
                pos += flat.size
        arr.sort()
        ok = arr.size == shard_size
        if ok:
            # sorted equals 0..shard_size-1, checked in bounded slices
            for lo in range(0, shard_size, 8_000_000):
                seg = arr[lo : lo + 8_000_000]
                if not np.array_equal(
                    seg, np.arange(lo, lo + seg.size, dtype=np.int32)
                ):
                    ok = False
                    break
        if ok:
            continue
        uniq, counts = np.unique(arr, return_counts=True)
        multiply += int(np.count_nonzero(counts > 1))
        uncovered += shard_size - uniq.size
        if witness_idx is None:
            # lowest local cell index that is uncovered or multiply covered
            bad_multi = int(uniq[counts > 1][0]) if np.any(counts > 1) else None
            bad_gap = None
            if uniq.size < shard_size:
                mismatch = np.flatnonzero(uniq != np.arange(uniq.size, dtype=arr.dtype))
                bad_gap = int(mismatch[0]) if mismatch.size else int(uniq.size)
            candidates = [b for b in (bad_multi, bad_gap) if b is not None]
            witness_idx = min(candidates) + c * shard_size

    first_witness = None
    if witness_idx is not None:
        cell = _index_to_point(witness_idx, n, p)
        covering = tuple(
            w for w in tiling.codewords if torus_covers(w, cell, p)
        )
        first_witness = (cell, covering)

    min_dc = None
    if k >= 2 and k * k <= pair_budget:
        min_dc = _min_torus_cross_distance(tiling)

    return VerificationReport(
        is_tiling=(uncovered == 0 and multiply == 0),
        cells_total=total,
        multiply_covered=multiply,
        uncovered=uncovered,
        first_witness=first_witness,
        min_cross_distance=min_dc,
    )


def _min_torus_cross_distance(tiling: PeriodicTiling) -> int:
    p = tiling.p
    cw = np.array(tiling.codewords, dtype=np.int64)
    k = cw.shape[0]
    best = None
    chunk = max(1, 2_000_000 // max(1, k))
    for lo in range(0, k, chunk):
        block = cw[lo : lo + chunk]
        d = np.abs(block[:, None, :] - cw[None, :, :]) % p
        d = np.minimum(d, p - d)
        d = np.maximum(d - 1, 0).sum(axis=2)
        for i in range(block.shape[0]):
            d[i, lo + i] = np.iinfo(d.dtype).max
        m = int(d.min())
        best = m if best is None else min(best, m)
    assert best is not None
    return best


def normalize(tiling: PeriodicTiling, x0: Point) -> PeriodicTiling:
    """Translate so that the codeword x0 moves to the origin."""
    if x0 not in tiling.codeword_set():
        raise ValueError(f"{x0} is not a codeword")
    p = tiling.p
    moved = tuple(
        tuple((v - u) % p for v, u in zip(w, x0)) for w in tiling.codewords
    )
    return PeriodicTiling(n=tiling.n, p=p, codewords=moved)


def permute(tiling: PeriodicTiling, sigma: tuple[int, ...]) -> PeriodicTiling:
    """Apply a coordinate permutation: coordinate i takes the old sigma[i]-th value."""
    if sorted(sigma) != list(range(tiling.n)):
        raise ValueError(f"{sigma} is not a permutation of 0..{tiling.n - 1}")
    moved = tuple(tuple(w[sigma[i]] for i in range(tiling.n)) for w in tiling.codewords)
    return PeriodicTiling(n=tiling.n, p=tiling.p, codewords=moved)


def reflect(tiling: PeriodicTiling, signs: Point) -> PeriodicTiling:
    """Negate (mod p) every coordinate whose sign entry is -1."""
    if len(signs) != tiling.n or any(a not in (-1, 1) for a in signs):
        raise ValueError("signs must be a length-n vector over {-1, 1}")
    p = tiling.p
    moved = tuple(
        tuple(v if a == 1 else (-v) % p for v, a in zip(w, signs))
        for w in tiling.codewords
    )
    return PeriodicTiling(n=tiling.n, p=p, codewords=moved)


def is_periodic_with(tiling: PeriodicTiling, p2: int) -> bool:
    """Whether the codeword set is invariant under adding p2*e_i mod p, all i."""
    if p2 <= 0 or tiling.p % p2 != 0:
        raise ValueError(f"{p2} does not divide the period {tiling.p}")
    words = tiling.codeword_set()
    p = tiling.p
    for i in range(tiling.n):
        shifted = {
            w[:i] + ((w[i] + p2) % p,) + w[i + 1 :] for w in words
        }
        if shifted != words:
            return False
    return True


def admissible_dimension(n: int) -> Admissibility:
    """Whether n = 2^t - 1 or n = 3^t - 1 for some t > 0, with the witness."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    for base in (2, 3):
        t = 1
        while base**t - 1 <= n:
            if base**t - 1 == n:
                return Admissibility(n=n, admissible=True, base=base, t=t)
            t += 1
    return Admissibility(n=n, admissible=False)


def nonexistence_certificate(n: int) -> NonexistenceCertificate:
    """Period-forcing divisibility certificate.

    Any tiling is periodic with period 4 for odd n and 12 for even n, so the
    shape size 2^n(n+1) must divide the forced window size; when it does not,
    no integer tiling exists.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    forced = 4 if n % 2 == 1 else 12
    shape_size = 2**n * (n + 1)
    window_size = forced**n
    divides = window_size % shape_size == 0
    if divides:
        conclusion = (
            f"inconclusive: {shape_size} divides {forced}^{n}; "
            "existence is settled by construction"
        )
    else:
        conclusion = (
            f"no integer tiling: forced period {forced}, "
            f"{shape_size} does not divide {forced}^{n} = {window_size}"
        )
    return NonexistenceCertificate(
        n=n,
        forced_period=forced,
        shape_size=shape_size,
        window_size=window_size,
        divides=divides,
        conclusion=conclusion,
    )


def spencer_bound(n: int) -> int:
    """Packing-triple-system bound floor(n/3 * floor((n-1)/2)) (n != 5 mod 6)."""
    return (n * ((n - 1) // 2)) // 3


def _unit_like(n: int, p: int, entries: dict[int, int]) -> Point:
    # residue word with the given {0-based coordinate: value} entries, 0 elsewhere
    w = [0] * n
    for i, v in entries.items():
        w[i] = v % p
    return tuple(w)


def structural_audit(
    tiling: PeriodicTiling, report: VerificationReport
) -> AuditReport:
    """Structure checks a true tiling (normalized at 0) must exhibit.

    Extracts F1 (codewords 3e_r + 2e_s) and F2 (codewords with the value 2 at
    exactly three coordinates and 0/1 elsewhere), then checks the companion
    and partition facts: disjoint F1 supports covering all coordinates for
    even n, the 4e_s / -4e_s / -(3e_r+2e_s) companions, the period-12 chain
    points, the pair partition by F1 union F2, and the triple-system bound.
    Negative canonical codewords are read as mod-p residues, faithful because
    audited tilings carry their forced period.
    """
    if not report.is_tiling:
        raise ValueError("structural audit requires a verified tiling")
    n, p = tiling.n, tiling.p
    words = tiling.codeword_set()
    if (0,) * n not in words:
        raise ValueError("structural audit requires 0 to be a codeword (normalize first)")

    checks: list[AuditCheck] = []

    def check(name: str, passed: bool, detail: str) -> None:
        checks.append(AuditCheck(name=name, passed=passed, detail=detail))

    # F1: ordered pairs (r, s), 1-based, with the residue word 3@r, 2@s in T
    f1 = []
    for w in tiling.codewords:
        nz = [(i, v) for i, v in enumerate(w) if v != 0]
        if len(nz) == 2 and sorted(v for _, v in nz) == [2, 3]:
            r = next(i for i, v in nz if v == 3)
            s = next(i for i, v in nz if v == 2)
            f1.append((r + 1, s + 1))
    f1.sort()

    # F2: coordinate triples from codewords with 2 exactly thrice, 0/1 elsewhere
    f2 = set()
    for w in tiling.codewords:
        twos = [i for i, v in enumerate(w) if v == 2]
        if len(twos) == 3 and all(v in (0, 1, 2) for v in w):
            f2.add(tuple(i + 1 for i in twos))
    f2_sorted = tuple(sorted(f2))

    profile = "odd" if n % 2 == 1 else "even"

    supports = [set(pair) for pair in f1]
    disjoint = all(
        supports[i].isdisjoint(supports[j])
        for i in range(len(supports))
        for j in range(i + 1, len(supports))
    )
    check("f1-supports-disjoint", disjoint, f"F1 = {f1}")

    if n % 2 == 0:
        covered = set().union(*supports) if supports else set()
        check(
            "f1-count-half-n",
            len(f1) == n // 2,
            f"|F1| = {len(f1)}, expected {n // 2}",
        )
        check(
            "f1-covers-all-coordinates",
            covered == set(range(1, n + 1)),
            f"coordinates covered: {sorted(covered)}",
        )
    else:
        check("f1-empty-for-odd-n", len(f1) == 0, f"|F1| = {len(f1)}")

    for r, s in f1:
        s0 = s - 1
        r0 = r - 1
        have_4 = _unit_like(n, p, {s0: 4}) in words
        have_m4 = _unit_like(n, p, {s0: -4}) in words
        have_m32 = _unit_like(n, p, {r0: -3, s0: -2}) in words
        check(
            f"companions-({r},{s})",
            have_4 and have_m4 and have_m32,
            f"4e_{s}: {have_4}, -4e_{s}: {have_m4}, -(3e_{r}+2e_{s}): {have_m32}",
        )
        if p == 12:
            have_64 = _unit_like(n, p, {r0: 6, s0: 4}) in words
            have_96 = _unit_like(n, p, {r0: 9, s0: 6}) in words
            check(
                f"chain-({r},{s})",
                have_64 and have_96,
                f"6e_{r}+4e_{s}: {have_64}, 9e_{r}+6e_{s}: {have_96}",
            )

    # every unordered coordinate pair lies in exactly one member of F1 u F2
    members = [frozenset(pair) for pair in f1] + [frozenset(t) for t in f2_sorted]
    bad_pairs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            hits = sum(1 for m in members if {i, j} <= m)
            if hits != 1:
                bad_pairs.append((i, j, hits))
    check(
        "pair-partition-f1-f2",
        not bad_pairs,
        "each pair in exactly one member" if not bad_pairs else f"violations: {bad_pairs}",
    )

    bound = spencer_bound(n)
    if n % 6 != 5:
        check(
            "triple-system-bound",
            len(f2_sorted) <= bound,
            f"|F2| = {len(f2_sorted)} <= {bound}",
        )

    forced = 4 if n % 2 == 1 else 12
    if p % forced == 0:
        check(
            f"forced-period-{forced}",
            is_periodic_with(tiling, forced),
            f"invariant under +{forced}e_i for all i",
        )
    else:
        check(
            f"forced-period-{forced}",
            False,
            f"window period {p} is not a multiple of the forced period {forced}",
        )

    return AuditReport(
        n=n,
        p=p,
        profile=profile,
        f1_pairs=tuple(f1),
        f2_triples=f2_sorted,
        spencer_bound=bound,
        checks=tuple(checks),
    )


def write_tiling(tiling: PeriodicTiling, path: str | Path) -> None:
    """Write a TILING v1 file (codewords sorted lexicographically)."""
    lines = [
        "TILING v1",
        f"n {tiling.n}",
        f"p {tiling.p}",
        f"count {len(tiling.codewords)}",
    ]
    for w in sorted(tiling.codewords):
        lines.append(" ".join(str(v) for v in w))
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def read_tiling(path: str | Path) -> PeriodicTiling:
    """Parse a TILING v1 file."""
    lines = Path(path).read_text(encoding="ascii").splitlines()
    try:
        if lines[0] != "TILING v1":
            raise TilingFormatError(f"bad header {lines[0]!r}")
        n = int(lines[1].removeprefix("n "))
        p = int(lines[2].removeprefix("p "))
        count = int(lines[3].removeprefix("count "))
        words = []
        for line in lines[4 : 4 + count]:
            words.append(tuple(int(v) for v in line.split()))
        if len(words) != count:
            raise TilingFormatError(f"expected {count} codewords, got {len(words)}")
    except (IndexError, ValueError) as exc:
        if isinstance(exc, TilingFormatError):
            raise
        raise TilingFormatError(f"malformed TILING file {path}: {exc}") from exc
    try:
        return PeriodicTiling(n=n, p=p, codewords=tuple(words))
    except ValueError as exc:
        raise TilingFormatError(str(exc)) from exc
