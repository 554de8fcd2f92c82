#include <doctest.h>

#include "symfer/fock.hpp"
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace symfer;

namespace {
Monomial mono(std::initializer_list<ModeKey> ms) {
    auto [sign, m] = canonical_form(ms);
    REQUIRE(sign == 1);
    return m;
}
} // namespace

TEST_CASE("canonical form") {
    // odd square vanishes
    auto [s0, m0] = canonical_form({{1, -2}, {1, -2}});
    CHECK(s0 == 0);
    // one transposition: f1_{-1} e1_{-2} -> - e1_{-2} f1_{-1}  (d=1 gens: e=1, f=2)
    auto [s1, m1] = canonical_form({{2, -2}, {1, -4}});
    CHECK(s1 == -1);
    CHECK(m1.modes == std::vector<ModeKey>{{1, -4}, {2, -2}});
    // already canonical after sort by gen at equal depth
    auto [s2, m2] = canonical_form({{1, -2}, {3, -2}, {2, -2}, {4, -2}});
    CHECK(s2 == -1); // one swap of gens 3,2
    // stability: re-canonicalizing is the identity
    auto [s3, m3] = canonical_form(m2.modes);
    CHECK(s3 == 1);
    CHECK(m3 == m2);
    // swapping two adjacent distinct modes flips the sign
    auto [s4, m4] = canonical_form({{3, -2}, {1, -2}, {2, -2}, {4, -2}});
    CHECK(s4 == -s2);
    CHECK(m4 == m2);
}

TEST_CASE("weights") {
    AlgebraConfig cfg{1};
    State s = monomial_state(Sector::Untwisted, mono({{1, -4}, {2, -2}}));
    CHECK(s.weight(cfg) == 3);

    AlgebraConfig cfg2{2};
    CHECK(vacuum_state(Sector::Twisted).weight(cfg2) == rat(-1, 4));

    // e1_{-1/2} over the twisted vacuum, d=1: -1/8 + 1/2
    State t = monomial_state(Sector::Twisted, mono({{1, -1}}));
    CHECK(t.weight(cfg) == rat(3, 8));

    State mixed = s + monomial_state(Sector::Untwisted, mono({{1, -2}, {2, -2}}));
    CHECK_THROWS(mixed.weight(cfg));
}

TEST_CASE("basis enumeration against the product series") {
    for (int d = 1; d <= 4; ++d) {
        AlgebraConfig cfg{d};
        auto series = graded_dim_series(d, 12);
        for (int w = 0; w <= 12; ++w) {
            auto all = enumerate_basis(cfg, Sector::Untwisted, Rat(w), false);
            auto even = enumerate_basis(cfg, Sector::Untwisted, Rat(w), true);
            CHECK(long(all.size()) == series[w]);
            long odd = 0;
            for (const auto& m : all)
                if (m.parity() == 1) ++odd;
            CHECK(long(even.size()) + odd == long(all.size()));
        }
    }
}

TEST_CASE("specific small bases") {
    AlgebraConfig cfg{1};
    auto b = enumerate_basis(cfg, Sector::Untwisted, Rat(2), true);
    REQUIRE(b.size() == 1);
    CHECK(b[0].modes == std::vector<ModeKey>{{1, -2}, {2, -2}});
    CHECK(enumerate_basis(cfg, Sector::Untwisted, Rat(2), false).size() == 3);

    auto z = enumerate_basis(cfg, Sector::ZeroExtended, Rat(0), true);
    REQUIRE(z.size() == 2); // vacuum and e1_0 f1_0
    CHECK(z[0].modes.empty());
    CHECK(z[1].modes == std::vector<ModeKey>{{1, 0}, {2, 0}});

    for (int d = 1; d <= 3; ++d) {
        AlgebraConfig c{d};
        auto zz = enumerate_basis(c, Sector::ZeroExtended, Rat(0), true);
        CHECK(long(zz.size()) == (1L << (2 * d - 1)));
    }

    // twisted sector: weight -d/8 + 1/2, d=1 -> the two half-modes
    auto tw = enumerate_basis(cfg, Sector::Twisted, rat(3, 8), false);
    CHECK(tw.size() == 2);
}

TEST_CASE("basis cache round trip") {
    AlgebraConfig cfg{2};
    std::string dir = std::filesystem::temp_directory_path() / "symfer_cache_test";
    std::filesystem::remove_all(dir);
    auto fresh = basis_cached(cfg, Sector::Untwisted, Rat(4), true, dir);
    auto warm = basis_cached(cfg, Sector::Untwisted, Rat(4), true, dir);
    CHECK(fresh == warm);
    CHECK(fresh == enumerate_basis(cfg, Sector::Untwisted, Rat(4), true));

    // corrupt the cache: must recompute and repair
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::ofstream f(entry.path());
        f << "garbage\n";
    }
    auto repaired = basis_cached(cfg, Sector::Untwisted, Rat(4), true, dir);
    CHECK(repaired == fresh);
    std::filesystem::remove_all(dir);
}
