"""Exact-cover verification, transforms, certificates, audits, file round-trips."""

import itertools

import pytest

from halfcross.geometry import torus_covers, upsilon_offsets
from halfcross.tiling import (
    CellBudgetExceeded,
    PeriodicTiling,
    TilingFormatError,
    admissible_dimension,
    is_periodic_with,
    nonexistence_certificate,
    normalize,
    permute,
    read_tiling,
    reflect,
    spencer_bound,
    structural_audit,
    verify,
    write_tiling,
)

LAMBDA2_WORDS = (
    (0, 0), (0, 4), (0, 8), (3, 2), (3, 6), (3, 10),
    (6, 0), (6, 4), (6, 8), (9, 2), (9, 6), (9, 10),
)


def lambda2_tiling():
    return PeriodicTiling(n=2, p=12, codewords=LAMBDA2_WORDS)


def verify_oracle(tiling):
    """Per-cell cover counting straight from the definition (p^n <= 1e5)."""
    n, p = tiling.n, tiling.p
    assert p**n <= 10**5
    counts = {}
    shape = upsilon_offsets(n)
    for x in tiling.codewords:
        for cell in shape.torus_cells(x, p):
            counts[cell] = counts.get(cell, 0) + 1
    uncovered = p**n - len(counts)
    multiply = sum(1 for v in counts.values() if v > 1)
    return uncovered, multiply


def test_verify_lambda2_window():
    report = verify(lambda2_tiling())
    assert report.is_tiling
    assert report.cells_total == 144
    assert report.multiply_covered == 0 and report.uncovered == 0
    assert report.first_witness is None
    assert report.min_cross_distance == 3


def test_verify_matches_oracle_on_perturbations():
    base = set(LAMBDA2_WORDS)
    cases = [base]
    # drop one codeword; move one codeword to every other free cell class
    cases.append(base - {(3, 6)})
    for repl in ((3, 7), (4, 6), (0, 1), (11, 11)):
        cases.append((base - {(3, 6)}) | {repl})
    cases.append(base | {(5, 5)})
    for words in cases:
        t = PeriodicTiling(n=2, p=12, codewords=tuple(sorted(words)))
        report = verify(t)
        unc, mult = verify_oracle(t)
        assert report.uncovered == unc, words
        assert report.multiply_covered == mult, words
        assert report.is_tiling == (unc == 0 and mult == 0)


def test_verify_oracle_random_small():
    # deterministic pseudo-random codeword sets on small tori, n in {1, 2, 3}
    import random

    rng = random.Random(20240817)
    for n, p in ((1, 4), (2, 8), (3, 4)):
        cells = list(itertools.product(range(p), repeat=n))
        for _ in range(20):
            k = rng.randrange(1, max(2, p**n // (2**n * (n + 1)) + 2))
            words = tuple(sorted(rng.sample(cells, k)))
            t = PeriodicTiling(n=n, p=p, codewords=words)
            report = verify(t)
            unc, mult = verify_oracle(t)
            assert (report.uncovered, report.multiply_covered) == (unc, mult)


def test_verify_witness_is_lowest_bad_cell():
    # remove the codeword at (0,0): its 12 cells go uncovered; the lowest in
    # the coordinate-1-fastest order is (0,0) itself... check via the oracle
    words = tuple(w for w in LAMBDA2_WORDS if w != (0, 0))
    report = verify(PeriodicTiling(n=2, p=12, codewords=words))
    assert not report.is_tiling
    assert report.uncovered == 12
    cell, covering = report.first_witness
    assert covering == ()
    # no bad cell precedes it in the (coordinate 1 fastest) cell order
    n, p = 2, 12
    shape = upsilon_offsets(n)
    covered = set()
    for x in words:
        covered |= shape.torus_cells(x, p)
    bad = sorted(
        (a2 * p + a1) for a1 in range(p) for a2 in range(p)
        if (a1, a2) not in covered
    )
    assert cell == (bad[0] % p, bad[0] // p)


def test_verify_witness_multiply_covered():
    words = LAMBDA2_WORDS + ((5, 5),)
    report = verify(PeriodicTiling(n=2, p=12, codewords=words))
    assert not report.is_tiling
    assert report.multiply_covered == 12
    cell, covering = report.first_witness
    assert len(covering) == 2
    assert all(torus_covers(w, cell, 12) for w in covering)


def test_verify_min_distance_skipped_over_pair_budget():
    report = verify(lambda2_tiling(), pair_budget=0)
    assert report.min_cross_distance is None
    assert report.is_tiling


def test_verify_cell_budget():
    with pytest.raises(CellBudgetExceeded):
        verify(lambda2_tiling(), cell_budget=100)


def test_verify_n1():
    t = PeriodicTiling(n=1, p=4, codewords=((0,),))
    report = verify(t)
    assert report.is_tiling and report.cells_total == 4


def test_normalize_translates_to_origin():
    t = normalize(lambda2_tiling(), (3, 6))
    assert (0, 0) in t.codeword_set()
    assert verify(t).is_tiling
    with pytest.raises(ValueError):
        normalize(lambda2_tiling(), (1, 1))


def test_permute_and_reflect_preserve_tiling():
    t = lambda2_tiling()
    assert verify(permute(t, (1, 0))).is_tiling
    assert verify(reflect(t, (-1, 1))).is_tiling
    assert verify(reflect(permute(t, (1, 0)), (-1, -1))).is_tiling
    with pytest.raises(ValueError):
        permute(t, (0, 0))
    with pytest.raises(ValueError):
        reflect(t, (2, 1))


def test_permute_composition_convention():
    t = PeriodicTiling(n=3, p=4, codewords=((0, 1, 2),))
    # coordinate i of the image takes the old sigma[i]-th value
    assert permute(t, (2, 0, 1)).codewords == ((2, 0, 1),)


def test_is_periodic_with():
    t = lambda2_tiling()
    assert is_periodic_with(t, 12)
    assert not is_periodic_with(t, 4)
    assert not is_periodic_with(t, 6)
    with pytest.raises(ValueError):
        is_periodic_with(t, 5)


def test_admissible_dimensions_up_to_16():
    admissible = {n for n in range(1, 17) if admissible_dimension(n).admissible}
    assert admissible == {1, 2, 3, 7, 8, 15}
    a = admissible_dimension(8)
    assert (a.base, a.t) == (3, 2)
    a = admissible_dimension(7)
    assert (a.base, a.t) == (2, 3)


def test_nonexistence_certificate_spot_values():
    c = nonexistence_certificate(5)
    assert c.forced_period == 4
    assert c.shape_size == 192 and c.window_size == 1024
    assert not c.divides
    assert "no integer tiling" in c.conclusion

    c = nonexistence_certificate(4)
    assert c.forced_period == 12
    assert c.shape_size == 80 and c.window_size == 20736
    assert not c.divides

    c = nonexistence_certificate(7)
    assert c.forced_period == 4 and c.divides

    c = nonexistence_certificate(8)
    assert c.forced_period == 12 and c.divides


def test_certificate_agrees_with_admissibility():
    # divisibility holds exactly at the admissible dimensions (desk range)
    for n in range(1, 17):
        assert nonexistence_certificate(n).divides == admissible_dimension(n).admissible


def test_spencer_bound_values():
    assert spencer_bound(8) == 8
    assert spencer_bound(2) == 0
    assert spencer_bound(3) == 1
    assert spencer_bound(7) == 7
    assert spencer_bound(9) == 12


def test_structural_audit_lambda2():
    t = lambda2_tiling()
    report = verify(t)
    audit = structural_audit(t, report)
    assert audit.passed
    assert audit.profile == "even"
    assert audit.f1_pairs == ((1, 2),)
    assert audit.f2_triples == ()
    names = [c.name for c in audit.checks]
    assert "f1-count-half-n" in names
    assert "companions-(1,2)" in names
    assert "chain-(1,2)" in names
    assert "forced-period-12" in names


def test_structural_audit_requires_verified_normalized():
    t = lambda2_tiling()
    bad_report = verify(PeriodicTiling(n=2, p=12, codewords=LAMBDA2_WORDS[:6]))
    with pytest.raises(ValueError):
        structural_audit(t, bad_report)
    shifted = normalize(t, (0, 0))  # identity; now break normalization
    moved = PeriodicTiling(
        n=2, p=12, codewords=tuple(((a + 1) % 12, b) for a, b in LAMBDA2_WORDS)
    )
    with pytest.raises(ValueError):
        structural_audit(moved, verify(moved))
    assert structural_audit(shifted, verify(shifted)).passed


def test_structural_audit_odd_profile():
    t = PeriodicTiling(n=1, p=4, codewords=((0,),))
    audit = structural_audit(t, verify(t))
    assert audit.profile == "odd"
    assert audit.f1_pairs == ()
    assert audit.passed
    assert any(c.name == "f1-empty-for-odd-n" for c in audit.checks)
    assert any(c.name == "forced-period-4" for c in audit.checks)


def test_tiling_file_round_trip(tmp_path):
    t = lambda2_tiling()
    path = tmp_path / "l2.tiling"
    write_tiling(t, path)
    back = read_tiling(path)
    assert back == t
    head = path.read_text(encoding="ascii").splitlines()[:5]
    assert head == ["TILING v1", "n 2", "p 12", "count 12", "0 0"]


def test_tiling_file_rejects_garbage(tmp_path):
    path = tmp_path / "bad.tiling"
    path.write_text("TILING v1\nn 2\np 12\ncount 3\n0 0\n0 4\n")
    with pytest.raises(TilingFormatError):
        read_tiling(path)
    path.write_text("TILING v1\nn 2\np 12\ncount 1\n0 12\n")
    with pytest.raises(TilingFormatError):
        read_tiling(path)  # coordinate outside the window


def test_periodic_tiling_validation():
    with pytest.raises(ValueError):
        PeriodicTiling(n=2, p=3, codewords=())
    with pytest.raises(ValueError):
        PeriodicTiling(n=2, p=4, codewords=((0, 0, 0),))
    with pytest.raises(ValueError):
        PeriodicTiling(n=2, p=4, codewords=((0, 0), (0, 0)))
