#include "symfer/c2.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symfer {

// ---- MonoSpan ----

void MonoSpan::axpy(Vec& x, const Vec& y, const Rat& s) {
    for (const auto& [m, c] : y) {
        auto it = x.find(m);
        if (it == x.end()) {
            Rat v = c * s;
            if (v != 0) x.emplace(m, std::move(v));
        } else {
            it->second += c * s;
            if (it->second == 0) x.erase(it);
        }
    }
}

void MonoSpan::reduce(Vec& v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto r = rows_.find(it->first);
        if (r == rows_.end()) {
            ++it;
            continue;
        }
        Monomial key = it->first;
        Rat c = it->second;
        axpy(v, r->second, -c); // pivot rows are monic, so the lead cancels
        it = v.upper_bound(key);
    }
}

bool MonoSpan::insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    Rat lead = v.begin()->second;
    if (lead != 1)
        for (auto& [m, c] : v) c /= lead;
    Monomial pivot = v.begin()->first;
    rows_.emplace(std::move(pivot), std::move(v));
    return true;
}

// ---- degree-shifted action of a single-mode state ----
// (y_{(-p)}|0>)_{(k)} acts as a binomial multiple of the plain mode y_{k-p+1}

namespace {

State single_nth(const AlgebraConfig& cfg, int gen, long p, long k,
                 const State& s) {
    Rat coeff;
    if (k <= -1) {
        coeff = Rat(binom(p - 2 - k, -1 - k));
    } else {
        if (k - p + 1 < 0) {
            State z;
            z.sector = s.sector;
            return z;
        }
        coeff = Rat(binom(k, p - 1)) * (p % 2 == 0 ? -1 : 1);
    }
    if (coeff == 0) {
        State z;
        z.sector = s.sector;
        return z;
    }
    return apply_mode(cfg, ModeKey{gen, int(2 * (k - p + 1))}, s) * coeff;
}

} // namespace

State quadratic_nth(const AlgebraConfig& cfg, const Monomial& g, long n,
                    const State& c) {
    if (g.length() != 2)
        throw std::invalid_argument("quadratic_nth wants a two-mode monomial");
    ModeKey x = g.modes[0];
    ModeKey y = g.modes[1];
    long m = -x.twice_depth / 2;
    long p = -y.twice_depth / 2;
    int sgn2 = (m % 2 != 0) ? -1 : 1;

    State out;
    out.sector = c.sector;
    for (const auto& [cm, cc] : c.terms) {
        long wt = cm.twice_oscillator_weight() / 2;
        long jmax1 = p + wt - n - 1;
        long jmax2 = wt;
        State cs = monomial_state(c.sector, cm);
        for (long j = 0; j <= std::max(jmax1, jmax2); ++j) {
            Rat cb(binom(m + j - 1, j));
            if (cb == 0) continue;
            if (j <= jmax1) {
                State inner = single_nth(cfg, y.gen, p, n + j, cs);
                if (!inner.is_zero())
                    out += apply_mode(cfg, ModeKey{x.gen, int(-2 * (m + j))},
                                      inner) *
                           (cb * cc);
            }
            if (j <= jmax2) {
                State xb = apply_mode(cfg, ModeKey{x.gen, int(2 * j)}, cs);
                if (!xb.is_zero())
                    out += single_nth(cfg, y.gen, p, n - m - j, xb) *
                           (cb * cc * sgn2);
            }
        }
    }
    return out;
}

namespace {

State strong_gen_row(const AlgebraConfig& cfg, const State& gs, long n,
                     const State& v) {
    State row;
    row.sector = v.sector;
    for (const auto& [gm, gc] : gs.terms)
        row += quadratic_nth(cfg, gm, n, v) * gc;
    return row;
}

} // namespace

// ---- C2Slice ----

C2Slice::C2Slice(ProductEngine& eng, int weight, long row_cap)
    : weight_(weight) {
    const AlgebraConfig& cfg = eng.config();
    ambient_dim_ =
        long(enumerate_basis(cfg, Sector::Untwisted, Rat(weight), true).size());

    long rows_used = 0;
    auto feed = [&](const State& s) {
        // returns true when building can stop
        if (row_cap >= 0 && rows_used >= row_cap) {
            truncated_ = true;
            return true;
        }
        ++rows_used;
        span_.insert(MonoSpan::Vec(s.terms.begin(), s.terms.end()));
        return long(span_.rank()) == ambient_dim_;
    };

    if (weight >= 1) {
        for (const auto& m :
             enumerate_basis(cfg, Sector::Untwisted, Rat(weight - 1), true))
            if (feed(eng.translate(Sector::Untwisted, m))) return;
    }
    for (const auto& g : strong_generators(cfg)) {
        int wv = weight - g.weight() - 1;
        if (wv < 0) continue;
        State gs = quadratic_state(cfg, g);
        for (const auto& m :
             enumerate_basis(cfg, Sector::Untwisted, Rat(wv), true)) {
            State v = monomial_state(Sector::Untwisted, m);
            if (feed(strong_gen_row(cfg, gs, -2, v))) return;
        }
    }
}

MonoSpan::Vec C2Slice::residual(const State& s) const {
    MonoSpan::Vec v(s.terms.begin(), s.terms.end());
    span_.reduce(v);
    return v;
}

// ---- C2Workspace ----

C2Slice& C2Workspace::slice(int weight) {
    auto& p = slices_[weight];
    if (!p) p = std::make_unique<C2Slice>(eng_, weight, row_cap_);
    return *p;
}

bool C2Workspace::eq_mod_c2(const State& a, const State& b) {
    State diff = a - b;
    if (diff.is_zero()) return true;
    if (diff.parity() != 0)
        throw std::invalid_argument("eq_mod_c2: states must be even");
    Rat w = diff.weight(cfg_);
    if (w.get_den() != 1 || w < 0)
        throw std::invalid_argument("eq_mod_c2: non-integral weight");
    return slice(int(w.get_num().get_si())).contains(diff);
}

// ---- quotient dimensions ----

long n_d(int d) { return (1L << (2 * d - 1)) + 8L * d * d + 1; }

GradedDimReport c2_quotient_dims(const AlgebraConfig& cfg, int max_weight,
                                 long row_cap) {
    C2Workspace ws(cfg, row_cap);
    GradedDimReport rep;
    rep.d = cfg.d;
    rep.expected = n_d(cfg.d);
    for (int w = 0; w <= max_weight; ++w) {
        C2Slice& sl = ws.slice(w);
        rep.per_weight.push_back({w, sl.ambient_dim(), sl.rank(),
                                  sl.quotient_dim(), sl.truncated()});
        rep.total += sl.quotient_dim();
        rep.truncated = rep.truncated || sl.truncated();
    }
    int last_nonzero = -1;
    for (const auto& row : rep.per_weight)
        if (row.quotient_dim != 0) last_nonzero = row.weight;
    rep.stable_from = (last_nonzero < max_weight) ? last_nonzero + 1 : -1;
    rep.pass =
        !rep.truncated && rep.total == rep.expected && rep.stable_from != -1;
    return rep;
}

long c2_rank_allpairs(ProductEngine& eng, int weight) {
    const AlgebraConfig& cfg = eng.config();
    MonoSpan sp;
    for (int wa = 0; wa <= weight - 1; ++wa) {
        int wb = weight - 1 - wa;
        auto ba = enumerate_basis(cfg, Sector::Untwisted, Rat(wa), true);
        auto bb = enumerate_basis(cfg, Sector::Untwisted, Rat(wb), true);
        for (const auto& a : ba) {
            if (a.length() == 0) continue; // vacuum_{(-2)} acts as zero here
            State sa = monomial_state(Sector::Untwisted, a);
            for (const auto& b : bb) {
                State row = eng.nth_product(
                    sa, -2, monomial_state(Sector::Untwisted, b));
                sp.insert(MonoSpan::Vec(row.terms.begin(), row.terms.end()));
            }
        }
    }
    return long(sp.rank());
}

// ---- spanning set ----

std::vector<State> bd_part1(const AlgebraConfig& cfg) {
    int n = cfg.ngens();
    std::vector<std::pair<int, unsigned>> masks; // (popcount, mask)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc % 2 == 0) masks.push_back({pc, mask});
    }
    std::sort(masks.begin(), masks.end());
    std::vector<State> out;
    for (auto [pc, mask] : masks) {
        std::vector<ModeKey> raw;
        for (int g = 1; g <= n; ++g)
            if (mask & (1u << (g - 1))) raw.push_back(ModeKey{g, -2});
        auto [sign, cm] = canonical_form(std::move(raw));
        out.push_back(monomial_state(Sector::Untwisted, cm, Rat(sign)));
    }
    return out;
}

std::vector<State> bd_part2(const AlgebraConfig& cfg) {
    int n = cfg.ngens();
    std::vector<State> out;
    for (int depth : {2, 3, 4, 5}) {
        bool strict = (depth % 2 == 1);
        for (int i = 1; i <= n; ++i)
            for (int j = strict ? i + 1 : i; j <= n; ++j)
                out.push_back(pair_state(cfg, i, depth, j, 1));
    }
    out.push_back(pair_state(cfg, 1, 7, 1 + cfg.d, 1));
    return out;
}

BdReport verify_bd_basis(C2Workspace& ws, bool drop_top) {
    const AlgebraConfig& cfg = ws.config();
    BdReport rep;
    rep.expected = n_d(cfg.d);

    auto b1 = bd_part1(cfg);
    auto b2 = bd_part2(cfg);
    if (drop_top) b2.pop_back();

    std::map<int, std::vector<State>> by_weight;
    for (auto& s : b1)
        by_weight[int(s.weight(cfg).get_num().get_si())].push_back(s);
    for (auto& s : b2)
        by_weight[int(s.weight(cfg).get_num().get_si())].push_back(s);

    int top_w = std::max(2 * cfg.d, 8);
    bool all_match = true;
    for (int w = 0; w <= top_w; ++w) {
        C2Slice& sl = ws.slice(w);
        MonoSpan sp = sl.span_copy();
        long cnt = 0;
        auto it = by_weight.find(w);
        if (it != by_weight.end()) {
            for (const auto& s : it->second) {
                if (sp.insert(MonoSpan::Vec(s.terms.begin(), s.terms.end())))
                    ++cnt;
                else if (rep.first_dependent.empty())
                    rep.first_dependent = s.str();
            }
        }
        rep.per_weight_counts.push_back({w, cnt});
        rep.rank += cnt;
        if (cnt != sl.quotient_dim()) all_match = false;
    }
    rep.pass =
        all_match && rep.first_dependent.empty() && rep.rank == rep.expected;
    return rep;
}

// ---- suites ----

void SuiteReport::add(const std::string& name, const std::string& expected,
                      const std::string& actual) {
    bool ok = expected == actual;
    items.push_back({name, expected, actual, ok});
    pass = pass && ok;
}

void SuiteReport::add_check(const std::string& name, bool ok) {
    add(name, "holds", ok ? "holds" : "fails");
}

void SuiteReport::add_info(const std::string& name, const std::string& actual) {
    items.push_back({name, actual, actual, true});
}

std::vector<std::string> relation_ids() {
    return {"b-shift",    "b-swap",       "ef-product",
            "ee6",        "ef9",          "cube-diff",
            "cube-sum",   "fourth-power", "length-two-span"};
}

namespace {

State zero_state() {
    State z;
    z.sector = Sector::Untwisted;
    return z;
}

std::vector<Monomial> length_two_monomials(const AlgebraConfig& cfg, int weight,
                                           int max_mode) {
    std::vector<Monomial> out;
    int n = cfg.ngens();
    for (int a = (weight + 1) / 2; a <= weight - 1; ++a) {
        int b = weight - a;
        if (a > max_mode || b > max_mode || b < 1) continue;
        for (int g1 = 1; g1 <= n; ++g1)
            for (int g2 = (a == b ? g1 + 1 : 1); g2 <= n; ++g2) {
                auto [sign, cm] =
                    canonical_form({ModeKey{g1, -2 * a}, ModeKey{g2, -2 * b}});
                if (sign) out.push_back(cm);
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<State> length_two_span_list(const AlgebraConfig& cfg, int weight) {
    std::vector<State> out;
    int n = cfg.ngens();
    if (weight == 2) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                out.push_back(pair_state(cfg, i, 1, j, 1));
    } else if (weight >= 3 && weight <= 6) {
        int depth = weight - 1;
        bool strict = (depth % 2 == 1);
        for (int i = 1; i <= n; ++i)
            for (int j = strict ? i + 1 : i; j <= n; ++j)
                out.push_back(pair_state(cfg, i, depth, j, 1));
    } else if (weight == 8) {
        out.push_back(pair_state(cfg, 1, 7, 1 + cfg.d, 1));
    }
    return out;
}

} // namespace

SuiteReport relation_suite(C2Workspace& ws, const std::string& id,
                           int max_mode) {
    SuiteReport rep;
    rep.suite = id;
    const AlgebraConfig& cfg = ws.config();
    int d = cfg.d;

    // Each relation instance involves at most two e/f pairs of generators, so
    // it can be checked inside the rank-1 or rank-2 subalgebra it actually
    // lives in: a vanishing statement certified there also holds at rank d,
    // because the small C2 rows are C2 rows of the big algebra.
    C2Workspace w1{AlgebraConfig{1}};
    std::optional<C2Workspace> w2;
    if (d >= 2) w2.emplace(AlgebraConfig{2});

    struct Cls {
        C2Workspace* ws;
        int ga, gb;
        std::string label;
    };
    std::vector<Cls> classes = {
        {&w1, 1, 1, "same pair e,e"},
        {&w1, 1, 2, "same pair e,f"},
        {&w1, 2, 1, "same pair f,e"},
        {&w1, 2, 2, "same pair f,f"},
    };
    if (w2) {
        classes.push_back({&*w2, 1, 2, "distinct pairs e,e"});
        classes.push_back({&*w2, 1, 4, "distinct pairs e,f"});
        classes.push_back({&*w2, 3, 2, "distinct pairs f,e"});
        classes.push_back({&*w2, 3, 4, "distinct pairs f,f"});
    }

    auto item_name = [](const std::string& head, int m, int n,
                        const std::string& label) {
        std::ostringstream os;
        os << head << "(" << m << "," << n << ") " << label;
        return os.str();
    };

    if (id == "b-shift") {
        for (const auto& c : classes)
            for (int m = 1; m <= max_mode; ++m)
                for (int n = 1; n <= max_mode; ++n) {
                    State lhs = b_state(c.ws->config(), {m, n}, {c.ga, c.gb});
                    State rhs =
                        b_state(c.ws->config(), {m + n - 1, 1}, {c.ga, c.gb}) *
                        Rat(n % 2 == 1 ? 1 : -1);
                    rep.add_check(item_name("shift B", m, n, c.label),
                                  c.ws->eq_mod_c2(lhs, rhs));
                }
    } else if (id == "b-swap") {
        for (const auto& c : classes)
            for (int m = 1; m <= max_mode; ++m)
                for (int n = 1; n <= max_mode; ++n) {
                    State lhs = b_state(c.ws->config(), {m, n}, {c.ga, c.gb});
                    State rhs =
                        b_state(c.ws->config(), {m, n}, {c.gb, c.ga}) *
                        Rat((m + n) % 2 == 0 ? -1 : 1);
                    rep.add_check(item_name("swap B", m, n, c.label),
                                  c.ws->eq_mod_c2(lhs, rhs));
                }
    } else if (id == "ef-product") {
        const AlgebraConfig& c1 = w1.config();
        for (int m = 1; m <= max_mode; ++m)
            for (int k = 1; k <= max_mode; ++k) {
                State lhs = w1.product(pair_state(c1, 1, m, 2, 1),
                                       pair_state(c1, 1, k, 2, 1));
                Rat co = Rat(m) * Rat(k) * (rat(1, m + 1) + rat(1, k + 1)) *
                         Rat(binom(m + k, k));
                State rhs = pair_state(c1, 1, m + k + 1, 2, 1) * co;
                rep.add_check(item_name("ef-product", m, k, ""),
                              w1.eq_mod_c2(lhs, rhs));
            }
    } else if (id == "ee6") {
        const AlgebraConfig& c1 = w1.config();
        rep.add_check("e_{-6}e in C2",
                      w1.eq_mod_c2(pair_state(c1, 1, 6, 1, 1), zero_state()));
        rep.add_check("f_{-6}f in C2",
                      w1.eq_mod_c2(pair_state(c1, 2, 6, 2, 1), zero_state()));
    } else if (id == "ef9") {
        const AlgebraConfig& c1 = w1.config();
        rep.add_check("e_{-9}f in C2",
                      w1.eq_mod_c2(pair_state(c1, 1, 9, 2, 1), zero_state()));
        rep.add_check("f_{-9}e in C2",
                      w1.eq_mod_c2(pair_state(c1, 2, 9, 1, 1), zero_state()));
    } else if (id == "cube-diff" || id == "cube-sum" || id == "fourth-power") {
        const AlgebraConfig& c1 = w1.config();
        if (id == "fourth-power") {
            State h = pair_state(c1, 1, 1, 2, 1);
            State h4 = w1.product(h, w1.product(h, w1.product(h, h)));
            rep.add_check(
                "h^4 = 360 e_{-7}f",
                w1.eq_mod_c2(h4, pair_state(c1, 1, 7, 2, 1) * Rat(360)));
        }
        if (!w2) {
            rep.add("two-pair instances", "none at rank 1", "none at rank 1");
            return rep;
        }
        const AlgebraConfig& c2 = w2->config();
        State h1 = pair_state(c2, 1, 1, 3, 1);
        State h2 = pair_state(c2, 2, 1, 4, 1);
        if (id == "cube-diff") {
            State u = h1 - h2;
            State u3 = w2->product(u, w2->product(u, u));
            rep.add_check("(h1-h2)^3 in C2", w2->eq_mod_c2(u3, zero_state()));
        } else if (id == "cube-sum") {
            State v = h1 + h2;
            State v3 = w2->product(v, w2->product(v, v));
            State rhs = w2->product(v, w2->product(h1, h2)) * Rat(12);
            rep.add_check("(h1+h2)^3 = 12(h1+h2)h1h2",
                          w2->eq_mod_c2(v3, rhs));
        } else {
            auto pow4 = [&](const State& h) {
                return w2->product(h, w2->product(h, w2->product(h, h)));
            };
            rep.add_check("h1^4 = h2^4",
                          w2->eq_mod_c2(pow4(h1), pow4(h2)));
            rep.add_check("e1_{-7}f1 = e2_{-7}f2",
                          w2->eq_mod_c2(pair_state(c2, 1, 7, 3, 1),
                                        pair_state(c2, 2, 7, 4, 1)));
        }
    } else if (id == "length-two-span") {
        int top = std::min(12, 2 * max_mode);
        for (int w = 2; w <= top; ++w) {
            C2Slice& sl = ws.slice(w);
            MonoSpan sp = sl.span_copy();
            for (const auto& s : length_two_span_list(cfg, w))
                sp.insert(MonoSpan::Vec(s.terms.begin(), s.terms.end()));
            bool ok = true;
            std::string first;
            for (const auto& m : length_two_monomials(cfg, w, max_mode)) {
                MonoSpan::Vec v{{m, Rat(1)}};
                sp.reduce(v);
                if (!v.empty()) {
                    ok = false;
                    if (first.empty()) first = monomial_str(m);
                    break;
                }
            }
            rep.add("two-mode classes at weight " + std::to_string(w),
                    "spanned by listed elements",
                    ok ? "spanned by listed elements"
                       : "not spanned: " + first);
        }
    } else {
        throw std::invalid_argument("unknown relation id: " + id);
    }
    return rep;
}

SuiteReport relation_suite(const AlgebraConfig& cfg, const std::string& id,
                           int max_mode) {
    C2Workspace ws(cfg);
    return relation_suite(ws, id, max_mode);
}

// ---- nilpotency ----

namespace {

long even_dim(const AlgebraConfig& cfg, int w) {
    return long(
        enumerate_basis(cfg, Sector::Untwisted, Rat(w), true).size());
}

State interleaved_top(const AlgebraConfig& cfg) {
    std::vector<ModeKey> raw;
    for (int i = 1; i <= cfg.d; ++i) {
        raw.push_back(ModeKey{i, -2});
        raw.push_back(ModeKey{i + cfg.d, -2});
    }
    auto [sign, cm] = canonical_form(std::move(raw));
    return monomial_state(Sector::Untwisted, cm, Rat(sign));
}

// slices beyond this many basis monomials switch to membership-only checks
constexpr long kFullSliceLimit = 8000;

} // namespace

NilpotencyReport nilpotency_degree(C2Workspace& ws) {
    const AlgebraConfig& cfg = ws.config();
    int d = cfg.d;
    NilpotencyReport rep;

    State om = omega_state(cfg);
    State pw = om;
    int expected = std::max(5, d + 1);
    for (int k = 1; k <= expected + 2; ++k) {
        int w = 2 * k;
        bool is_zero;
        if (even_dim(cfg, w) <= kFullSliceLimit) {
            C2Slice& sl = ws.slice(w);
            if (sl.truncated()) {
                rep.inconclusive = true;
                return rep;
            }
            is_zero = sl.contains(pw);
        } else {
            auto r = lazy_c2_membership(ws.engine(), pw, 4000000);
            if (!r) {
                rep.inconclusive = true;
                return rep;
            }
            is_zero = *r;
        }
        if (is_zero) {
            rep.degree = k;
            break;
        }
        pw = ws.product(om, pw);
    }

    // identify the fourth power against the rank-specific witness
    if (d >= 1 && d <= 4 && rep.degree == 5) {
        static const Rat coeffs[] = {rat(1, 1), rat(16, 5), rat(37, 5),
                                     rat(72, 5)};
        State h = pair_state(cfg, 1, 1, 1 + d, 1);
        State h4 = ws.product(h, ws.product(h, ws.product(h, h)));
        State om4 = ws.product(om, ws.product(om, ws.product(om, om)));
        State expect = h4 * coeffs[d - 1];
        if (d == 4) expect += interleaved_top(cfg) * Rat(24);
        bool a = ws.eq_mod_c2(om4, expect);
        bool b = ws.eq_mod_c2(h4, pair_state(cfg, 1, 7, 1 + d, 1) * Rat(360));
        rep.witness_ok = a && b;
        std::ostringstream os;
        os << "omega^4 matches " << coeffs[d - 1].get_str() << " h^4"
           << (d == 4 ? " + 24 top" : "") << ": " << (a ? "yes" : "no")
           << "; h^4 = 360 e_{-7}f: " << (b ? "yes" : "no");
        rep.witness = os.str();
    }
    rep.pass = (rep.degree == expected) && (d > 4 || rep.witness_ok);
    return rep;
}

// ---- lazily generated membership certificates ----

std::optional<bool> lazy_c2_membership(ProductEngine& eng, const State& s,
                                       long row_budget) {
    if (s.is_zero()) return true;
    const AlgebraConfig& cfg = eng.config();
    Rat wq = s.weight(cfg);
    if (wq.get_den() != 1 || wq < 2) return s.is_zero();
    int weight = int(wq.get_num().get_si());

    MonoSpan span;
    MonoSpan::Vec residual(s.terms.begin(), s.terms.end());
    long used = 0;

    std::vector<std::pair<GenId, State>> gens;
    for (const auto& g : strong_generators(cfg))
        gens.push_back({g, quadratic_state(cfg, g)});

    auto slot_pair = [&](const GenId& g) {
        int a = 0, b = 0;
        switch (g.kind) {
            case GenKind::SmallE:
            case GenKind::LargeE: a = g.i; b = g.j; break;
            case GenKind::SmallF:
            case GenKind::LargeF: a = g.i + cfg.d; b = g.j + cfg.d; break;
            case GenKind::SmallH:
            case GenKind::LargeH: a = g.i; b = g.j + cfg.d; break;
        }
        return std::minmax(a, b);
    };

    auto feed = [&](const State& row) {
        ++used;
        span.insert(MonoSpan::Vec(row.terms.begin(), row.terms.end()));
    };

    // phase 1: rows aimed at the current leading monomial of the residual
    std::set<Monomial> targeted;
    while (true) {
        span.reduce(residual);
        if (residual.empty()) return true;
        if (used > row_budget) return std::nullopt;
        Monomial mu = residual.begin()->first;
        if (!targeted.insert(mu).second) break;

        for (std::size_t p = 0; p < mu.modes.size(); ++p) {
            if (mu.modes[p].twice_depth > -4) continue;
            auto raw = mu.modes;
            raw[p].twice_depth += 2;
            auto [sg, cm] = canonical_form(std::move(raw));
            if (sg) feed(eng.translate(Sector::Untwisted, cm));
        }
        for (std::size_t p = 0; p + 1 < mu.modes.size(); ++p)
            for (std::size_t q = p + 1; q < mu.modes.size(); ++q) {
                int a = -mu.modes[p].twice_depth / 2;
                int b = -mu.modes[q].twice_depth / 2;
                auto want = std::minmax(mu.modes[p].gen, mu.modes[q].gen);
                Monomial v;
                for (std::size_t t = 0; t < mu.modes.size(); ++t)
                    if (t != p && t != q) v.modes.push_back(mu.modes[t]);
                State vs = monomial_state(Sector::Untwisted, v);
                for (const auto& [g, gs] : gens) {
                    if (slot_pair(g) != want) continue;
                    long nn = a + b - g.weight() + 1;
                    if (nn < 2) continue;
                    feed(strong_gen_row(cfg, gs, -nn, vs));
                }
            }
    }

    // phase 2: stream the full generating family until the residual clears
    long tick = 0;
    auto pump = [&](const State& row) -> std::optional<bool> {
        if (used > row_budget) return std::nullopt;
        feed(row);
        if (++tick % 256 == 0) {
            span.reduce(residual);
            if (residual.empty()) return true;
        }
        return std::optional<bool>(); // keep going (engaged? no) -- see below
    };
    // NOTE: pump returns an *empty* optional to mean "continue"; callers must
    // distinguish it from the engaged values via has_value().

    for (const auto& m :
         enumerate_basis(cfg, Sector::Untwisted, Rat(weight - 1), true)) {
        auto r = pump(eng.translate(Sector::Untwisted, m));
        if (r.has_value()) return r;
        if (used > row_budget) return std::nullopt;
    }
    for (const auto& [g, gs] : gens) {
        int wv = weight - g.weight() - 1;
        if (wv < 0) continue;
        for (const auto& m :
             enumerate_basis(cfg, Sector::Untwisted, Rat(wv), true)) {
            auto r =
                pump(strong_gen_row(cfg, gs, -2,
                                    monomial_state(Sector::Untwisted, m)));
            if (r.has_value()) return r;
            if (used > row_budget) return std::nullopt;
        }
    }
    // the complete family has been fed, so the answer is definitive
    span.reduce(residual);
    return residual.empty();
}

SuiteReport omega_power_identity_high_d(int d, long row_budget) {
    SuiteReport rep;
    rep.suite = "omega-power";
    AlgebraConfig cfg{d};
    ProductEngine eng(cfg);
    State om = omega_state(cfg);
    State pw = om;
    for (int k = 2; k <= d; ++k) pw = eng.nth_product(om, -1, pw);

    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), d);
    State target = pw - interleaved_top(cfg) * Rat(fact);

    std::ostringstream name;
    name << "omega^" << d << " = " << fact.get_str()
         << " e1 f1 ... e" << d << " f" << d << " mod C2";
    auto r = lazy_c2_membership(eng, target, row_budget);
    if (!r) {
        rep.inconclusive = true;
        rep.add(name.str(), "holds", "inconclusive: row budget exhausted");
    } else {
        rep.add_check(name.str(), *r);
    }
    return rep;
}

SuiteReport virasoro_suite(const AlgebraConfig& cfg, int max_weight,
                           int mode_range) {
    SuiteReport rep;
    rep.suite = "virasoro";
    ProductEngine eng(cfg);
    Rat c = Rat(-2 * cfg.d);

    std::vector<State> states;
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& m : enumerate_basis(cfg, Sector::Untwisted, Rat(w), false))
            states.push_back(monomial_state(Sector::Untwisted, m));

    for (int m = -mode_range; m <= mode_range; ++m)
        for (int n = m; n <= mode_range; ++n) {
            bool ok = true;
            for (const auto& s : states) {
                State lhs = eng.virasoro(m, eng.virasoro(n, s)) -
                            eng.virasoro(n, eng.virasoro(m, s));
                State rhs = eng.virasoro(m + n, s) * Rat(m - n);
                if (m + n == 0)
                    rhs += s * (c * rat(long(m) * m * m - m, 12));
                if (!(lhs == rhs)) {
                    ok = false;
                    break;
                }
            }
            std::ostringstream name;
            name << "[L(" << m << "),L(" << n << ")] closes on weight<="
                 << max_weight;
            rep.add_check(name.str(), ok);
        }

    // the central term alone: L(2)L(-2)1 = c/2 1
    State cw = eng.virasoro(2, eng.virasoro(-2, vacuum_state()));
    rep.add("central charge witness", Rat(c / 2).get_str(),
            cw.is_zero() ? "0" : cw.terms.begin()->second.get_str());
    return rep;
}

namespace {

// sum_j C(m,j) (a_(j) b)_(m+n-j) s for integer m (possibly negative)
State iterate_rhs(ProductEngine& eng, const State& a, long m, const State& b,
                  long n, const State& s) {
    State out;
    out.sector = s.sector;
    // C(m,j) for negative m never vanishes; terms die once a_(j)b does and
    // stay dead (a_(j)b = 0 for j >= wt a + wt b)
    Rat binmj(1);
    for (long j = 0;; ++j) {
        if (j > 0) binmj *= rat(m - j + 1, j);
        State ab = eng.nth_product(a, j, b);
        if (ab.is_zero()) {
            if (j > std::max(m, 8L)) break;
            continue;
        }
        out += eng.nth_product(ab, m + n - j, s) * binmj;
    }
    return out;
}

} // namespace

SuiteReport bracket_suite(const AlgebraConfig& cfg) {
    SuiteReport rep;
    rep.suite = "lambda-bracket";
    ProductEngine eng(cfg);

    auto mode_report = lambda_bracket_check(cfg, 6, 6);
    rep.add_check("mode anticommutators match the pairing", mode_report.pass);

    AlgebraConfig flipped = cfg;
    flipped.pairing_sign = -cfg.pairing_sign;
    rep.add("sign-flipped pairing breaks the match (control)", "fails",
            lambda_bracket_check(flipped, 4, 4).pass ? "holds" : "fails");

    // commutator formula on small states:
    // a_(m) b_(n) - (-1)^{|a||b|} b_(n) a_(m) = sum_j C(m,j) (a_(j)b)_(m+n-j)
    std::vector<std::pair<std::string, State>> elems;
    elems.push_back({"e1", monomial_state(Sector::Untwisted,
                                          Monomial{{{1, -2}}})});
    elems.push_back({"f1", monomial_state(Sector::Untwisted,
                                          Monomial{{{1 + cfg.d, -2}}})});
    elems.push_back({"omega", omega_state(cfg)});
    elems.push_back({"h11", quadratic_state(cfg, {GenKind::SmallH, 1, 1})});

    std::vector<State> states;
    for (int w = 0; w <= 4; ++w)
        for (const auto& m : enumerate_basis(cfg, Sector::Untwisted, Rat(w), false))
            states.push_back(monomial_state(Sector::Untwisted, m));

    for (const auto& [an, a] : elems)
        for (const auto& [bn, b] : elems) {
            int sign = (a.parity() && b.parity()) ? -1 : 1;
            bool ok = true;
            for (long m = -2; m <= 2 && ok; ++m)
                for (long n = -2; n <= 2 && ok; ++n)
                    for (const auto& s : states) {
                        State lhs =
                            eng.nth_product(a, m, eng.nth_product(b, n, s)) -
                            eng.nth_product(b, n, eng.nth_product(a, m, s)) *
                                Rat(sign);
                        if (!(lhs == iterate_rhs(eng, a, m, b, n, s))) {
                            ok = false;
                            break;
                        }
                    }
            rep.add_check("commutator formula for (" + an + ", " + bn + ")",
                          ok);
        }

    // skew symmetry: a_(n) b = (-1)^{|a||b|} sum_j (-1)^{n+1+j} T^j/j! b_(n+j) a
    for (const auto& [an, a] : elems)
        for (const auto& [bn, b] : elems) {
            int sign = (a.parity() && b.parity()) ? -1 : 1;
            bool ok = true;
            for (long n = -3; n <= 2 && ok; ++n) {
                State lhs = eng.nth_product(a, n, b);
                State rhs;
                rhs.sector = Sector::Untwisted;
                Rat jfact(1);
                for (long j = 0;; ++j) {
                    if (j > 0) jfact /= j;
                    State ba = eng.nth_product(b, n + j, a);
                    if (ba.is_zero() && j > 8) break;
                    for (long t = 0; t < j; ++t) ba = eng.virasoro(-1, ba);
                    int par = (n + 1 + j) % 2 ? -1 : 1;
                    rhs += ba * (jfact * sign * par);
                }
                if (!(lhs == rhs)) ok = false;
            }
            rep.add_check("skew symmetry for (" + an + ", " + bn + ")", ok);
        }

    return rep;
}

} // namespace symfer
