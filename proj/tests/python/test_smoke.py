"""Smoke tests for the Python bindings: pinned small-rank values."""

import symfer


def test_n_d():
    assert [symfer.n_d(d) for d in (1, 2, 3)] == [11, 41, 105]


def test_graded_series_matches_counts():
    series = symfer.graded_dim_series(1, 8)
    assert series[0] == 1
    for w in range(9):
        assert symfer.basis_count(1, w) == series[w]
    # even-parity counts never exceed the full counts
    for w in range(9):
        assert symfer.basis_count(1, w, even_only=True) <= series[w]


def test_c2_quotient_dims():
    rep = symfer.c2_quotient_dims(1, 12)
    assert rep["total"] == rep["expected"] == 11
    per = {row["weight"]: row["quotient_dim"] for row in rep["per_weight"]}
    assert per[0] == 1
    assert all(per[w] == 0 for w in range(9, 13))


def test_quotient_algebra_dim():
    assert symfer.zhu_algebra_dim(1) == 11


def test_omega_min_poly():
    p = symfer.omega_min_poly(1)
    # x^2 (x - 1) (x + 1/8) (x + 1/8 - 1/2) expanded
    assert p == "x^5 - 5/4*x^4 + 13/64*x^3 + 3/64*x^2"


def test_center_dim():
    assert symfer.center_dim(1) == 5


def test_nilpotency_degree():
    assert symfer.nilpotency_degree(1) == 5


def test_lambda_bracket_ok():
    assert symfer.lambda_bracket_ok(1)
    assert symfer.lambda_bracket_ok(2, max_depth=3, max_w=3)
