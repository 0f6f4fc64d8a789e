import itertools

import pytest

import brute
from hypergraphic import (
    CaseTag,
    ExtremeSpec,
    OutOfDomain,
    TripartiteDegreeSequence,
    complement_tripartite,
    degree_sequence_of_tripartite,
    extreme_spec_for,
    large_degree,
    oracle_tripartite,
    realize_extreme,
    realize_tripartite,
    small_degree,
    verify_realization,
)
from hypergraphic.tripartite import (
    Case2bIIWork,
    _complement_shape,
    _needs_complement,
    realize_tripartite_report,
)

T = TripartiteDegreeSequence


def all_specs(n):
    lo, hi = small_degree(n), large_degree(n)
    for x in range(1, n + 1):
        for d in range(lo, hi + 1):
            yield ExtremeSpec(n, x, d)


def test_thresholds():
    # ceil(2n^2/7) and floor(5n^2/7) by exact rational comparison
    for n in range(2, 40):
        lo, hi = small_degree(n), large_degree(n)
        assert 7 * lo >= 2 * n * n > 7 * (lo - 1)
        assert 7 * hi <= 5 * n * n < 7 * (hi + 1)
    assert (small_degree(7), large_degree(7)) == (14, 35)


def test_extreme_spec_examples():
    assert extreme_spec_for(98, 7) == ExtremeSpec(7, 1, 14)
    assert extreme_spec_for(245, 7) == ExtremeSpec(7, 7, 35)
    assert extreme_spec_for(167, 7) == ExtremeSpec(7, 4, 20)


def test_extreme_spec_unique_by_scan():
    matches = [(x, d) for x in range(1, 8) for d in range(15, 36) if ExtremeSpec(7, x, d).class_sum == 167]
    assert matches == [(4, 20)]


@pytest.mark.parametrize("n", [2, 3, 4, 7, 11])
def test_extreme_spec_every_sum(n):
    lo, hi = small_degree(n), large_degree(n)
    for total in range(n * lo, n * hi + 1):
        spec = extreme_spec_for(total, n)
        assert spec.class_sum == total
        assert spec.x == 1 or spec.d > lo


def test_extreme_spec_out_of_range():
    with pytest.raises(OutOfDomain):
        extreme_spec_for(97, 7)
    with pytest.raises(OutOfDomain):
        extreme_spec_for(246, 7)
    with pytest.raises(OutOfDomain):
        ExtremeSpec(7, 4, 36)
    with pytest.raises(OutOfDomain):
        ExtremeSpec(7, 0, 20)


def test_case_dispatch_n7():
    # x=5: (x-1)^2 = 16 >= 14 so the first case applies directly
    assert realize_extreme(ExtremeSpec(7, 5, 20))[1] is CaseTag.CASE1
    assert realize_extreme(ExtremeSpec(7, 4, 35))[1] is CaseTag.CASE2A
    assert realize_extreme(ExtremeSpec(7, 4, 16))[1] is CaseTag.CASE2B_I
    assert realize_extreme(ExtremeSpec(7, 4, 20))[1] is CaseTag.CASE2B_II
    assert realize_extreme(ExtremeSpec(7, 2, 20))[1] is CaseTag.COMPLEMENTED


def test_n7_x4_d35():
    spec = ExtremeSpec(7, 4, 35)
    assert spec.degrees() == (35, 35, 35, 35, 14, 14, 14)
    h, _ = realize_extreme(spec)
    assert verify_realization(h, T.symmetric(spec.degrees()))


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_every_extreme_spec_realizes(n):
    for spec in all_specs(n):
        h, tag = realize_extreme(spec)
        assert verify_realization(h, T.symmetric(spec.degrees())), spec


def test_n2_only_sequence():
    h, trace = realize_tripartite(T.symmetric((2, 2)))
    assert verify_realization(h, T.symmetric((2, 2)))
    assert len(trace) == 0
    assert realize_extreme(ExtremeSpec(2, 1, 2))[1] is CaseTag.BASE_SMALL_N


N3 = [(6, 6, 6), (5, 6, 6), (4, 6, 6), (3, 6, 6), (3, 5, 6)]


@pytest.mark.parametrize("d", N3 + [tuple(9 - v for v in d) for d in N3])
def test_n3_base_sequences_and_complements(d):
    seq = T.symmetric(d)
    h, _ = realize_tripartite(seq)
    assert verify_realization(h, seq)


def test_n3_band_is_graphic_per_oracle():
    # every n=3 shape the realizer accepts must also be graphic for the oracle
    for spec in all_specs(3):
        h, tag = realize_extreme(spec)
        assert tag is CaseTag.BASE_SMALL_N
        assert oracle_tripartite(T.symmetric(spec.degrees())).graphic


def test_all_21_at_n7():
    seq = T.symmetric((21,) * 7)
    h, _ = realize_tripartite(seq)
    assert verify_realization(h, seq)
    assert len(h) == 147


def test_mixed_orders_and_classes():
    seq = T((14, 35, 20, 21, 22, 15, 20), (21,) * 7, (35, 14, 14, 14, 35, 20, 15))
    h, _ = realize_tripartite(seq)
    assert verify_realization(h, seq)


def error_code(seq):
    with pytest.raises(OutOfDomain) as info:
        realize_tripartite(seq)
    return info.value.code


def test_domain_errors():
    assert error_code(T((13, 23, 23, 22, 22, 22, 22), (21,) * 7, (21,) * 7)) == "below_lower_bound"
    assert error_code(T((36,) + (19, 19, 19, 19, 19, 16), (21,) * 7, (21,) * 7)) == "above_upper_bound"
    assert error_code(T((21,) * 7, (21,) * 7, (22,) + (21,) * 6)) == "unequal_sums"
    assert error_code(T((21,) * 7, (21,) * 7, (21,) * 6)) == "unequal_lengths"


def test_real_valued_bounds():
    # n=4: 32/7 = 4.57 and 80/7 = 11.43, so 5 and 11 are the integer limits
    assert error_code(T((4, 6, 6, 8), (6,) * 4, (6,) * 4)) == "below_lower_bound"
    assert error_code(T((12, 5, 5, 5), (6, 7, 7, 7), (6, 7, 7, 7))) == "above_upper_bound"
    h, _ = realize_tripartite(T((11, 5, 5, 5), (6, 6, 7, 7), (5, 6, 7, 8)))
    assert len(h) == 26


@pytest.mark.parametrize("n", [4, 5, 6, 7, 9])
def test_complement_path_agrees(n):
    for spec in all_specs(n):
        x, d = spec.x, spec.d
        if d == small_degree(n):
            x, d = x - 1, large_degree(n)
        if x == 0 or not _needs_complement(n, x, d):
            continue
        cx, cd = _complement_shape(n, x, d)
        other = ExtremeSpec(n, cx, cd)
        assert not _needs_complement(n, cx, cd)
        comp = complement_tripartite(realize_extreme(other)[0])
        got = degree_sequence_of_tripartite(comp)
        want = spec.degrees()
        assert all(sorted(c) == sorted(want) for c in got)
        assert verify_realization(realize_extreme(spec)[0], T.symmetric(want))


def test_case2b_ii_work_invariants():
    seen = 0
    for n in range(4, 30):
        for x in range(n // 2 + 1, n):
            lo, hi = small_degree(n), large_degree(n)
            if (x - 1) ** 2 >= lo:
                continue
            for d in range(x * x + 1, hi):
                w = Case2bIIWork.of(n, x, d)
                seen += 1
                assert w.d_star % 2 == 0
                assert w.f_ceil <= x
                assert 0 <= w.t <= n - x
                assert w.t * w.f_floor + (n - x - w.t) * w.f_ceil == w.d_star // 2
    assert seen > 0


def test_report_exposes_shape():
    seq = T.symmetric((21,) * 7)
    _, report = realize_tripartite_report(seq)
    assert report.spec == extreme_spec_for(147, 7)
    assert report.spec.degrees() == (35, 35, 21, 14, 14, 14, 14)


def test_enumeration_agrees_at_n2():
    # every (2,2,2) sequence in the band is graphic by brute force
    graphic = brute.tripartite_sequences(2, 2, 2)
    for a, b, c in itertools.product(itertools.product(range(5), repeat=2), repeat=3):
        seq = T(a, b, c)
        try:
            h, _ = realize_tripartite(seq)
        except OutOfDomain:
            continue
        assert seq in graphic
        assert verify_realization(h, seq)


def test_spot_oracle_agreement_n4():
    for d in [(5, 5, 5, 5), (11, 11, 5, 5), (8, 7, 6, 5), (11, 9, 8, 8)]:
        seq = T.symmetric(d)
        h, _ = realize_tripartite(seq)
        assert verify_realization(h, seq)
        assert oracle_tripartite(seq).graphic
