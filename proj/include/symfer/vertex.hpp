#pragma once

#include "symfer/fock.hpp"
#include "symfer/linalg.hpp"
#include <map>
#include <string>
#include <vector>

namespace symfer {

// anticommutator value {x_m, y_n} = m * <x, y> * delta_{m+n,0}
Rat contraction(const AlgebraConfig& cfg, const ModeKey& a, const ModeKey& b);

// Applies one generator mode to a state: creation modes left-multiply and
// recanonicalize; annihilation/zero modes Wick-commute rightward, picking up
// contraction terms, and hit the vacuum (zero modes survive only in the
// zero_extended sector, where they join the tail of the monomial).
State apply_mode(const AlgebraConfig& cfg, const ModeKey& k, const State& s);

// The quadratic strong generators of the even subalgebra.
enum class GenKind { SmallE, SmallF, SmallH, LargeE, LargeF, LargeH };

struct GenId {
    GenKind kind;
    int i = 1, j = 1;
    std::string name() const;
    int weight() const {
        return (kind == GenKind::SmallE || kind == GenKind::SmallF ||
                kind == GenKind::SmallH)
                   ? 2
                   : 3;
    }
};

std::vector<GenId> strong_generators(const AlgebraConfig& cfg);
State quadratic_state(const AlgebraConfig& cfg, const GenId& g);

State omega_state(const AlgebraConfig& cfg);
// J^4 = sum_i (e^i_{-3}f^i - f^i_{-3}e^i) over i = 1..d
State j4_state(const AlgebraConfig& cfg);
// B_{m_1..m_k}(a^1..a^k) = prod (m_i-1)! / (sum m_i - 1)! * a^1_{-m_1}...a^k_{-m_k}1
State b_state(const AlgebraConfig& cfg, const std::vector<int>& depths,
              const std::vector<int>& gens);

// x^g_{-n} x^h_{-1} 1 as a state (single length-2 monomial, canonical sign)
State pair_state(const AlgebraConfig& cfg, int gen_a, int depth_a, int gen_b,
                 int depth_b);

class ProductEngine {
public:
    explicit ProductEngine(AlgebraConfig cfg) : cfg_(cfg) {}
    const AlgebraConfig& config() const { return cfg_; }

    // a_{(n)} b; a must be untwisted
    State nth_product(const State& a, long n, const State& b);
    // L(n) s = omega_{(n+1)} s
    State virasoro(long n, const State& s);
    // L(-1) on a single monomial (depth-shift derivation; cheaper than the
    // generic product and used heavily by the quotient spans)
    State translate(Sector sector, const Monomial& m);

    // drop product memoization (long sweeps over many distinct pairs would
    // otherwise grow it without reuse)
    void clear_memo() { memo_.clear(); }

private:
    struct Key {
        Monomial a;
        long n;
        Monomial b;
        Sector sec;
        auto operator<=>(const Key&) const = default;
    };

    State nth_mono(const Monomial& a, long n, const Monomial& b, Sector sec);
    State nth_mono_state(const Monomial& a, long n, const State& b);

    AlgebraConfig cfg_;
    std::map<Key, State> memo_;
};

// One sp(2d) basis element acting on the generator span: rho.at(t, s) is the
// coefficient of x^{t+1} in the image of x^{s+1}.
struct SpElement {
    std::string name;
    MatrixQ rho; // 2d x 2d
};

std::vector<SpElement> sp_basis(const AlgebraConfig& cfg);

// Leibniz extension over the modes of each monomial (even operator: no signs)
State sp_derivation(const AlgebraConfig& cfg, const MatrixQ& rho, const State& s);

struct CheckReport {
    bool pass = true;
    std::string witness;
};

// verifies {x_m, y_n} = contraction * id as operators, for all generator
// pairs, |m|,|n| <= max_depth, on untwisted states of weight <= max_w
CheckReport lambda_bracket_check(const AlgebraConfig& cfg, int max_depth = 6,
                                 int max_w = 6);

} // namespace symfer
