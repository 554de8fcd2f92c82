#pragma once

#include "symfer/rational.hpp"
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace symfer {

// Generator indices run 1..2d: x^i = e^i for i <= d, x^{i+d} = f^i.
struct AlgebraConfig {
    int d = 1;
    // <e^i, f^i> value; the library convention is -1.  Flippable as a
    // negative-control hook for the bracket verification suite.
    int pairing_sign = -1;

    int ngens() const { return 2 * d; }
    bool is_e(int gen) const { return gen <= d; }
    // <x^a, x^b>
    Rat pairing(int a, int b) const {
        if (a <= d && b == a + d) return Rat(pairing_sign);
        if (b <= d && a == b + d) return Rat(-pairing_sign);
        return Rat(0);
    }
};

enum class Sector { Untwisted, Twisted, ZeroExtended };

std::string sector_name(Sector s);

// One fermion mode x^gen_{depth}.  Depths are stored doubled so that the
// half-integer twisted lattice stays integral.  Creation modes have
// twice_depth < 0; zero modes have twice_depth == 0.
struct ModeKey {
    int gen = 0;
    int twice_depth = 0;

    // canonical order: deepest first, zero modes last, ties by generator
    std::strong_ordering operator<=>(const ModeKey& o) const {
        if (auto c = twice_depth <=> o.twice_depth; c != 0) return c;
        return gen <=> o.gen;
    }
    bool operator==(const ModeKey&) const = default;
};

struct Monomial {
    std::vector<ModeKey> modes; // strictly increasing in canonical order

    std::size_t length() const { return modes.size(); }
    int parity() const { return int(modes.size()) % 2; }
    int twice_oscillator_weight() const {
        int t = 0;
        for (const auto& m : modes) t -= m.twice_depth;
        return t;
    }
    auto operator<=>(const Monomial&) const = default;
};

// Sorts raw creation/zero modes into canonical order tracking the
// anticommutation sign.  Returns sign 0 if any mode repeats.
std::pair<int, Monomial> canonical_form(std::vector<ModeKey> raw);

struct State {
    Sector sector = Sector::Untwisted;
    std::map<Monomial, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const State& o) const {
        return sector == o.sector && terms == o.terms;
    }
    void add_term(const Monomial& m, const Rat& coeff);
    State& operator+=(const State& o);
    State& operator-=(const State& o);
    State operator+(const State& o) const;
    State operator-(const State& o) const;
    State operator*(const Rat& s) const;

    // conformal weight; throws on a mixed-weight state
    Rat weight(const AlgebraConfig& cfg) const;
    // throws if parities mix
    int parity() const;
    std::string str() const;
};

State vacuum_state(Sector sector = Sector::Untwisted);
State monomial_state(Sector sector, const Monomial& m, const Rat& coeff = Rat(1));

Rat sector_offset(const AlgebraConfig& cfg, Sector s);
bool depth_admissible(Sector s, int twice_depth);

// All canonical monomials of conformal weight w in the sector,
// optionally restricted to even parity.  Deterministic order.
std::vector<Monomial> enumerate_basis(const AlgebraConfig& cfg, Sector sector,
                                      const Rat& w, bool even_only);

// enumerate_basis backed by a line-oriented text cache; falls back to a
// fresh computation (with a warning) if the cache file is corrupt.
std::vector<Monomial> basis_cached(const AlgebraConfig& cfg, Sector sector,
                                   const Rat& w, bool even_only,
                                   const std::string& cache_dir);

// coefficients of prod_{n>=1} (1+q^n)^{2d} up to q^max_w (independent
// series oracle for basis counts)
std::vector<long> graded_dim_series(int d, int max_w);

std::string monomial_str(const Monomial& m);

} // namespace symfer
