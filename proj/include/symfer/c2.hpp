#pragma once

#include "symfer/linalg.hpp"
#include "symfer/vertex.hpp"
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symfer {

// Row span over the graded monomial basis itself (columns are monomials in
// lexicographic order, deepest modes first).  Used for the quotient-by-C2
// computations, where assigning dense column indices up front would be wasteful.
class MonoSpan {
public:
    using Vec = std::map<Monomial, Rat>;

    static void axpy(Vec& x, const Vec& y, const Rat& s);
    void reduce(Vec& v) const;
    bool insert(Vec v); // true if the rank grew
    bool has_pivot(const Monomial& m) const { return rows_.count(m) != 0; }
    std::size_t rank() const { return rows_.size(); }

private:
    std::map<Monomial, Vec> rows_;
};

// The span of the degree-w slice of the C2 subspace of the even subalgebra,
// generated from translation rows L(-1)v and strong-generator rows g_{(-2)}v.
// Building stops early once the slice is known to be everything.
class C2Slice {
public:
    C2Slice(ProductEngine& eng, int weight, long row_cap = -1);

    int weight() const { return weight_; }
    long ambient_dim() const { return ambient_dim_; }
    long rank() const { return long(span_.rank()); }
    long quotient_dim() const { return ambient_dim_ - rank(); }
    bool truncated() const { return truncated_; } // row cap hit before done

    // residual of s after reduction; s must be even and homogeneous of this
    // weight (in the untwisted sector)
    MonoSpan::Vec residual(const State& s) const;
    bool contains(const State& s) const { return residual(s).empty(); }

    const MonoSpan& span() const { return span_; }
    MonoSpan span_copy() const { return span_; }

private:
    int weight_;
    long ambient_dim_;
    bool truncated_ = false;
    MonoSpan span_;
};

// g_{(n)} c for a two-mode monomial g, expanded directly through single
// fermion modes (no engine memo); g untwisted, c untwisted or zero_extended
State quadratic_nth(const AlgebraConfig& cfg, const Monomial& g, long n,
                    const State& c);

// Caches C2 slices per weight for one rank d.
class C2Workspace {
public:
    explicit C2Workspace(AlgebraConfig cfg, long row_cap = -1)
        : cfg_(cfg), eng_(cfg), row_cap_(row_cap) {}

    const AlgebraConfig& config() const { return cfg_; }
    ProductEngine& engine() { return eng_; }
    C2Slice& slice(int weight);

    // representative-level Poisson operations
    State product(const State& a, const State& b) { return eng_.nth_product(a, -1, b); }
    State bracket(const State& a, const State& b) { return eng_.nth_product(a, 0, b); }
    // true iff a - b lies in C2 at its weight; throws if inhomogeneous
    bool eq_mod_c2(const State& a, const State& b);

private:
    AlgebraConfig cfg_;
    ProductEngine eng_;
    long row_cap_;
    std::map<int, std::unique_ptr<C2Slice>> slices_;
};

struct WeightRow {
    int weight;
    long ambient_dim;
    long c2_rank;
    long quotient_dim;
    bool truncated;
};

struct GradedDimReport {
    int d;
    std::vector<WeightRow> per_weight;
    long total = 0;
    long expected = 0;   // n_d
    int stable_from = -1; // first weight after which all checked quotients vanish
    bool truncated = false;
    bool pass = false;
};

long n_d(int d);

GradedDimReport c2_quotient_dims(const AlgebraConfig& cfg, int max_weight,
                                 long row_cap = -1);

// independent all-pairs route (the definition) for cross-validation at small sizes
long c2_rank_allpairs(ProductEngine& eng, int weight);

// ---- B_d spanning set ----

// part 1: even products of depth-1 modes; part 2: the fixed 8d^2+1 two-mode list
std::vector<State> bd_part1(const AlgebraConfig& cfg);
std::vector<State> bd_part2(const AlgebraConfig& cfg);

struct BdReport {
    bool pass = false;
    long rank = 0;
    long expected = 0;
    std::string first_dependent; // empty when independent
    std::vector<std::pair<int, long>> per_weight_counts;
};

// checks that the images of the B set are independent mod C2 with per-weight
// counts matching the quotient dimensions; drop_top removes the deepest
// element (negative control: rank must fall short)
BdReport verify_bd_basis(C2Workspace& ws, bool drop_top = false);

// ---- relation suites ----

struct SuiteItem {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};

struct SuiteReport {
    std::string suite;
    bool pass = true;
    bool inconclusive = false; // a resource guard tripped before a verdict
    std::vector<SuiteItem> items;
    void add(const std::string& name, const std::string& expected,
             const std::string& actual);
    void add_check(const std::string& name, bool ok);
    // informational row; never affects the overall verdict
    void add_info(const std::string& name, const std::string& actual);
};

// relation_id in {b-shift, b-swap, ef-product, ee6, ef9, cube-diff, cube-sum,
// fourth-power, length-two-span}; mode indices range over 1..max_mode
SuiteReport relation_suite(C2Workspace& ws, const std::string& relation_id,
                           int max_mode = 6);
SuiteReport relation_suite(const AlgebraConfig& cfg, const std::string& relation_id,
                           int max_mode = 6);
std::vector<std::string> relation_ids();

// ---- nilpotency ----

struct NilpotencyReport {
    int degree = 0; // least k with omega-bar^k = 0
    bool witness_ok = false;
    std::string witness;
    bool pass = false;
    bool inconclusive = false;
};

NilpotencyReport nilpotency_degree(C2Workspace& ws);

// membership-only reducer with lazily generated C2 rows (for large d where a
// complete slice is out of reach); returns nullopt when the row budget runs
// out before the residual clears
std::optional<bool> lazy_c2_membership(ProductEngine& eng, const State& s,
                                       long row_budget);

// d >= 5 identity: omega-bar^d = d! * (all depth-1 modes) at weight 2d
SuiteReport omega_power_identity_high_d(int d, long row_budget = 2000000);

// ---- structural suites ----

// [L(m), L(n)] = (m-n) L(m+n) + c/12 (m^3-m) delta_{m+n,0}, c = -2d, verified
// on every basis state of weight <= max_weight, |m|,|n| <= mode_range
SuiteReport virasoro_suite(const AlgebraConfig& cfg, int max_weight = 6,
                           int mode_range = 3);

// pairwise mode anticommutators (with a sign-flipped negative control),
// the commutator formula, and skew symmetry, on small states
SuiteReport bracket_suite(const AlgebraConfig& cfg);

} // namespace symfer
