#include <doctest.h>

#include "symfer/linalg.hpp"

using namespace symfer;

namespace {

SparseVec vec(std::initializer_list<std::pair<int, long>> entries) {
    SparseVec v;
    for (auto [c, x] : entries) v.set(c, Rat(x));
    return v;
}

} // namespace

TEST_CASE("row span rank and membership") {
    RowSpan s;
    CHECK(s.contains(SparseVec{})); // empty span contains zero
    CHECK(s.insert(vec({{0, 1}, {1, 2}})));
    CHECK_FALSE(s.insert(vec({{0, 2}, {1, 4}}))); // proportional row
    CHECK(s.rank() == 1);
    CHECK(s.contains(vec({{0, 3}, {1, 6}})));
    CHECK_FALSE(s.contains(vec({{1, 1}})));
    CHECK(s.insert(vec({{1, 1}})));
    CHECK(s.rank() == 2);
    CHECK(s.contains(vec({{0, 7}, {1, -5}})));
}

TEST_CASE("rref basics") {
    MatrixQ id = MatrixQ::identity(3);
    auto [rank, pivots, red] = rref(id);
    CHECK(rank == 3);
    CHECK(pivots == std::vector<int>{0, 1, 2});
    CHECK(red == id);

    MatrixQ z(2, 4);
    CHECK(std::get<0>(rref(z)) == 0);

    MatrixQ m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2;
    m.at(1, 0) = 2; m.at(1, 1) = 4;
    auto [r2, p2, red2] = rref(m);
    CHECK(r2 == 1);
    // idempotence
    auto [r3, p3, red3] = rref(red2);
    CHECK(red3 == red2);
}

TEST_CASE("kernel") {
    MatrixQ m(1, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 1;
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0].get(0) == -k[0].get(1));

    CHECK(kernel(MatrixQ::identity(4)).empty());

    MatrixQ p(2, 2);
    p.at(0, 0) = 1; p.at(0, 1) = 2;
    p.at(1, 0) = 2; p.at(1, 1) = 4;
    auto kp = kernel(p);
    REQUIRE(kp.size() == 1);
    CHECK(kp[0].get(0) * 2 + kp[0].get(1) * 4 == 0);
}

TEST_CASE("min_poly small cases") {
    MatrixQ z(2, 2);
    CHECK(min_poly(z).str() == "x");
    CHECK(min_poly(MatrixQ::identity(3)).str() == "x - 1");
    MatrixQ jordan(2, 2);
    jordan.at(0, 1) = 1;
    CHECK(min_poly(jordan).str() == "x^2");

    MatrixQ d(2, 2);
    d.at(0, 0) = 1; d.at(1, 1) = 2;
    PolyQ p = min_poly(d);
    CHECK(p.degree() == 2);
    CHECK(p.eval(d).is_zero());
}

TEST_CASE("min_poly annihilates its matrix") {
    MatrixQ m(3, 3);
    m.at(0, 1) = 2; m.at(1, 2) = rat(1, 3); m.at(2, 0) = -5; m.at(1, 1) = 7;
    PolyQ p = min_poly(m);
    CHECK(p.eval(m).is_zero());
}

TEST_CASE("algebra closure") {
    // off-diagonal generators of M_2
    MatrixQ e12(2, 2), e21(2, 2);
    e12.at(0, 1) = 1;
    e21.at(1, 0) = 1;
    CHECK(algebra_closure({e12, e21}, MatrixQ::identity(2)).size() == 4);

    CHECK(algebra_closure({}, MatrixQ::identity(3)).size() == 1);

    MatrixQ d(2, 2);
    d.at(0, 0) = 1; d.at(1, 1) = 2;
    auto basis = algebra_closure({d}, MatrixQ::identity(2));
    CHECK(basis.size() == 2);
    // closed under products
    RowSpan span;
    for (const auto& b : basis) span.insert(b.flatten());
    for (const auto& a : basis)
        for (const auto& b : basis) CHECK(span.contains((a * b).flatten()));
}

TEST_CASE("polynomial arithmetic and gcd") {
    PolyQ x = PolyQ::monomial(1);
    PolyQ one = PolyQ::monomial(0);
    PolyQ a = (x - one) * x * x;      // x^3 - x^2
    PolyQ b = (x - one) * (x + one);  // x^2 - 1
    CHECK(PolyQ::gcd(a, b).str() == "x - 1");
    auto [q, r] = a.divmod(x - one);
    CHECK(r.is_zero());
    CHECK(q.str() == "x^2");
}

TEST_CASE("solve_in_span") {
    std::vector<SparseVec> basis = {vec({{0, 1}, {1, 1}}), vec({{1, 1}})};
    auto sol = solve_in_span(basis, vec({{0, 2}, {1, 5}}));
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 3);
    CHECK_FALSE(solve_in_span(basis, vec({{2, 1}})).has_value());
}
