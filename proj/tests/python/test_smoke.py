import itertools

import pytest

import rampkit as rk


def test_field_arithmetic():
    f = rk.Field(2, 3)
    assert f.order == 8
    assert f.reducing_poly == [1, 0, 1, 1]
    assert rk.Field.of_order(9) == rk.Field(3, 2)
    for a in range(1, 8):
        assert f.mul(a, f.inv(a)) == 1
    with pytest.raises(rk.ParameterError):
        rk.Field.of_order(6)


def test_rank_and_row_space():
    f = rk.Field(3)
    m = rk.Matrix(f, [[1, 1, 1, 0], [0, 1, 2, 1]])
    assert rk.rank(m) == 2
    assert len(rk.row_space(m)) == 9
    assert rk.columns_independent(m, [0, 3])
    assert rk.rs_generator(f, 2) == m


def test_rs_array_verifies():
    oa = rk.oa_from_generator(rk.rs_generator(rk.Field(5), 3), 3)
    assert (oa.t, oa.k, oa.v, len(oa)) == (3, 6, 5, 125)
    assert rk.verify_oa(oa)
    assert rk.verify_mds(oa)
    # Every 3 columns carry every triple exactly once.
    for cols in itertools.combinations(range(6), 3):
        assert len({tuple(r[c] for c in cols) for r in oa.rows}) == 125


def test_example_aoa_and_split():
    a = rk.example_aoa_1333()
    assert len(a) == 27
    assert rk.verify_aoa(a).ok
    array, verdict, relation = rk.aoa_split(a)
    assert not verdict.ok
    assert relation == "column 4 = column 1 + column 2"
    assert array.k == 5


def test_merge_split_round_trip():
    oa = rk.oa_from_generator(rk.rs_generator(rk.Field(3), 2), 2)
    aoa = rk.aoa_merge(oa, 1)
    assert rk.verify_aoa(aoa)
    back, verdict, relation = rk.aoa_split(aoa)
    assert verdict.ok and relation is None
    assert back == oa


def test_text_round_trip():
    a = rk.example_aoa_1333()
    assert rk.array_from_text(a.to_text()) == a
    with pytest.raises(rk.ParseError):
        rk.array_from_text("OA 2 3 2\n0 0\n")


def test_bounds():
    assert rk.bush_bound(4, 3).max_k == 5
    assert rk.bush_bound(3, 3).max_k == 4
    m = rk.mds_max(3, 4)
    assert (m.max_k, m.status) == (6, "proven")


def test_nonexistence_witnesses():
    r = rk.nonexistence_witness("thm48", 3, 3)
    assert r.certified and r.oa_columns == 5 and r.bound.max_k == 4
    d = rk.nonexistence_witness("thm410", 3, 2)
    assert d.certified and d.oa_columns == 6
    assert d.generator == rk.Matrix(
        rk.Field(3),
        [[1, 0, 0, 0, 1, 0], [0, 1, 0, 0, 1, 1], [0, 0, 1, 0, 1, 2], [0, 0, 0, 1, 0, 1]],
    )


def test_ramp_round_trip():
    s = rk.scheme_shamir(rk.Field(5), 1, 2, 3)
    assert s.num_rules == 25 and s.ideal
    for secret in s.secrets:
        for seed in range(10):
            shares = rk.deal(s, secret, seed)
            assert rk.reconstruct(s, shares) == secret
            assert rk.reconstruct(s, dict(list(shares.items())[:2])) == secret
    assert rk.deal(s, [3], 1) == rk.deal(s, [3], 1)
    with pytest.raises(rk.ParameterError):
        rk.reconstruct(s, {1: 0})


def test_audit_and_equivalence():
    s = rk.scheme_shamir(rk.Field(5), 2, 3, 4)
    report = rk.audit_security(s)
    assert report.passed and report.equal_counts and report.bijection
    a = rk.aoa_from_scheme(s)
    assert rk.verify_aoa(a)
    assert rk.scheme_from_aoa(a) == s
    check = rk.ideal_bound_check(1, 3, 3, 3, 9)
    assert check["ok"] and check["ideal"]
