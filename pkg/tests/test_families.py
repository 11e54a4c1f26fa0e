import pytest

from lucasfrob import (
    apery_closed_form,
    build_S,
    build_T,
    check_S_T_decomposition,
    count_sparse_subsets,
    embedding_dimension_closed,
    enumerate_L,
    frobenius_S_closed,
    frobenius_T_closed,
    genus_S_binomial,
    genus_S_closed,
    genus_T_closed,
    genus_beta_sum,
    lucas,
    lucas_tilde,
    oracle_report,
    report,
)


def ceil_half(k):
    return -(-k // 2)


def test_build_S():
    assert build_S(2).generators == [3, 4, 5]
    assert build_S(1).generators == [1]
    assert build_S(0).generators == [2, 3]
    assert build_S(6).generators == [18, 19, 20, 21, 22, 25, 29]
    with pytest.raises(ValueError):
        build_S(-1)


def test_build_T():
    assert build_T(0).generators == [3, 4, 5]
    assert build_T(1).generators == [2, 3]
    assert build_T(2).generators == [4, 5, 6, 7]
    assert build_T(3).generators == [5, 6, 7, 8]
    assert build_T(6).generators == [19, 20, 21, 22, 25, 29, 36]
    assert build_T(6).minimal_generators() == [19, 20, 21, 22, 25, 29, 36]


def test_generators_already_minimal():
    for a in range(2, 12):
        s = build_S(a)
        assert s.minimal_generators() == s.generators
    for a in range(3, 12):
        t = build_T(a)
        assert t.minimal_generators() == t.generators


def test_redundant_generators_are_removed():
    # adding l_a + l_a, l_a + l_{a+1}, l_a + l_{a+2} must change nothing
    for a in range(2, 10):
        la = lucas(a)
        extra = [la + lucas(a), la + lucas(a + 1), la + lucas(a + 2)]
        from lucasfrob import from_generators

        s = from_generators(build_S(a).generators + extra)
        assert s.minimal_generators() == build_S(a).generators


def test_embedding_dimension_closed():
    assert embedding_dimension_closed("S", 6) == 7
    assert embedding_dimension_closed("T", 3) == 4
    assert embedding_dimension_closed("S", 2) == 3
    with pytest.raises(ValueError):
        embedding_dimension_closed("S", 1)
    with pytest.raises(ValueError):
        embedding_dimension_closed("T", 2)


def test_apery_closed_form_golden():
    t = apery_closed_form(6)
    assert t.n == 18
    assert t.w[0] == 0
    assert t.w[5] == 41
    assert t.w[11] == 29
    with pytest.raises(ValueError):
        apery_closed_form(1)


def test_apery_maximum():
    for a in range(2, 21):
        assert apery_closed_form(a).max() == ceil_half(a - 1) * lucas(a) + lucas(a) - 1


def test_frobenius_S_closed():
    assert frobenius_S_closed(6) == 53
    assert frobenius_S_closed(2) == 2
    assert frobenius_S_closed(20) == 10 * lucas(20) - 1 == 151269
    with pytest.raises(ValueError):
        frobenius_S_closed(1)


def test_frobenius_cor15_restatement():
    for a in range(2, 61):
        e, m = a + 1, lucas(a)
        assert frobenius_S_closed(a) == ceil_half(e - 2) * m - 1


def test_genus_S_closed():
    assert genus_S_closed(6) == 30
    assert genus_S_closed(1) == 0
    assert genus_S_closed(2) == 2
    with pytest.raises(ValueError):
        genus_S_closed(0)


def test_genus_S_binomial():
    assert genus_S_binomial(3) == 3
    assert genus_S_binomial(6) == 30
    assert genus_S_binomial(4) == 8
    with pytest.raises(ValueError):
        genus_S_binomial(2)


def test_genus_beta_sum():
    assert genus_beta_sum(6) == 30
    assert genus_beta_sum(2) == 2
    assert genus_beta_sum(3) == 3


def test_genus_routes_agree():
    for a in range(3, 16):
        g = genus_S_closed(a)
        assert genus_S_binomial(a) == g
        assert genus_beta_sum(a) == g


def test_genus_recurrence():
    for a in range(5, 61):
        assert genus_S_closed(a) == genus_S_closed(a - 1) + genus_S_closed(
            a - 2
        ) + lucas(a - 2)


def test_frobenius_T_closed():
    assert frobenius_T_closed(3) == 9
    assert frobenius_T_closed(5) == 23
    assert frobenius_T_closed(6) == 53
    for a in (3, 4, 5):
        assert frobenius_T_closed(a) == 2 * lucas(a) + 1
    for a in range(6, 30):
        assert frobenius_T_closed(a) == frobenius_S_closed(a)
    with pytest.raises(ValueError):
        frobenius_T_closed(2)


def test_genus_T_closed():
    assert genus_T_closed(3) == 5
    assert genus_T_closed(6) == 32
    assert genus_T_closed(4) == 10


def test_check_S_T_decomposition():
    for a in (3, 6, 10):
        assert check_S_T_decomposition(a)


def test_S_minus_T_is_exactly_the_pair():
    for a in (3, 6):
        s, t = build_S(a), build_T(a)
        la = lucas(a)
        limit = max(s.frobenius(), t.frobenius()) + 1
        diff = [x for x in range(limit + 1) if x in s and x not in t]
        assert diff == [la, 2 * la + 1]


def test_generator_telescoping():
    # l_a + l_{a+i} is in S(a) for all i
    for a in range(2, 16):
        s = build_S(a)
        for i in range(11):
            assert s.contains(lucas(a) + lucas(a + i))


def test_T_closure_under_adding_la():
    for a in range(3, 13):
        t = build_T(a)
        la = lucas(a)
        excluded = {0, la + lucas(1)}
        for x in range(t.frobenius() + la + 1):
            if x in t and x not in excluded:
                assert (x + la) in t


def test_multiples_of_la_in_T():
    for a in range(3, 13):
        t = build_T(a)
        for k in range(2, 9):
            assert t.contains(k * lucas(a))


def test_prop18_apery_reconstruction():
    for a in range(4, 11):
        la = lucas(a)
        values = sorted(
            len(b.members) * la + sum(lucas_tilde(i) for i in b.members)
            for b in enumerate_L(a)
        )
        assert len(set(values)) == len(values)  # no duplicates
        oracle = sorted(build_S(a).apery().w)
        assert values == oracle[1:]  # everything except w(0) = 0


def test_wilf_closed_forms():
    for fam in ("S", "T"):
        for a in range(0, 61):
            rep = report(fam, a)
            assert rep.wilf_ok
            assert rep.g + rep.n_count == rep.F + 1


def test_report_golden():
    rep = report("S", 6, use_oracle=True)
    assert (rep.F, rep.g, rep.e, rep.wilf_ok) == (53, 30, 7, True)
    assert rep.oracle_checked and rep.mismatches == []

    rep = report("S", 1)
    assert (rep.F, rep.g, rep.wilf_ok) == (-1, 0, True)

    rep = report("T", 3, use_oracle=True)
    assert (rep.F, rep.g, rep.e) == (9, 5, 4)
    assert rep.mismatches == []


def test_oracle_report_matches_closed_report():
    for fam, rng in (("S", range(2, 10)), ("T", range(3, 10))):
        for a in rng:
            closed = report(fam, a)
            oracle = oracle_report(fam, a)
            assert (closed.msg, closed.e, closed.m, closed.F, closed.g) == (
                oracle.msg,
                oracle.e,
                oracle.m,
                oracle.F,
                oracle.g,
            )


def test_report_rejects_bad_family():
    with pytest.raises(ValueError):
        report("X", 3)
    with pytest.raises(ValueError):
        report("S", -1)


def test_report_scales_without_oracle():
    rep = report("S", 200)
    assert rep.m == lucas(200)
    assert rep.F == ceil_half(199) * lucas(200) - 1
    assert rep.g == 200 * (lucas(200) + lucas(198)) // 5
    assert rep.wilf_ok
