#include "symfer/zhu.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace symfer {

namespace {

std::map<long, State> split_by_weight(const State& a) {
    std::map<long, State> parts;
    for (const auto& [m, c] : a.terms) {
        long w = m.twice_oscillator_weight() / 2;
        auto& p = parts[w];
        p.sector = a.sector;
        p.add_term(m, c);
    }
    return parts;
}

} // namespace

State zhu_star(ProductEngine& eng, const State& a, const State& b) {
    State out;
    out.sector = b.sector;
    for (const auto& [w, aw] : split_by_weight(a))
        for (long k = 0; k <= w; ++k)
            out += eng.nth_product(aw, k - 1, b) * Rat(binom(w, k));
    return out;
}

State zhu_circ(ProductEngine& eng, const State& a, const State& b) {
    State out;
    out.sector = b.sector;
    for (const auto& [w, aw] : split_by_weight(a))
        for (long k = 0; k <= w; ++k)
            out += eng.nth_product(aw, k - 2, b) * Rat(binom(w, k));
    return out;
}

std::string module_name(ModuleId m) {
    switch (m) {
        case ModuleId::HatPlus: return "hat_plus";
        case ModuleId::Minus: return "minus";
        case ModuleId::ThetaPlus: return "theta_plus";
        case ModuleId::ThetaMinus: return "theta_minus";
    }
    return "?";
}

long module_top_dim(const AlgebraConfig& cfg, ModuleId m) {
    switch (m) {
        case ModuleId::HatPlus: return 1L << (2 * cfg.d - 1);
        case ModuleId::Minus: return 2 * cfg.d;
        case ModuleId::ThetaPlus: return 1;
        case ModuleId::ThetaMinus: return 2 * cfg.d;
    }
    return 0;
}

MatrixQ build_rep_block(const AlgebraConfig& cfg, ModuleId mod, const GenId& g) {
    int d = cfg.d;
    int n = int(module_top_dim(cfg, mod));
    MatrixQ mat(n, n);
    int i = g.i, j = g.j;
    // columns/rows on the 2d-dimensional tops: e^k -> k-1, f^k -> d+k-1
    auto E = [&](int row, int col, const Rat& v) { mat.at(row, col) += v; };

    switch (mod) {
        case ModuleId::HatPlus: {
            if (g.weight() == 3) return mat; // large generators act as zero
            // wedge multiplication by the corresponding zero-mode pair
            auto basis = enumerate_basis(cfg, Sector::ZeroExtended, Rat(0), true);
            std::map<Monomial, int> index;
            for (int s = 0; s < int(basis.size()); ++s) index[basis[s]] = s;
            ModeKey m1{0, 0}, m2{0, 0};
            switch (g.kind) {
                case GenKind::SmallE: m1.gen = i; m2.gen = j; break;
                case GenKind::SmallF: m1.gen = i + d; m2.gen = j + d; break;
                case GenKind::SmallH: m1.gen = i; m2.gen = j + d; break;
                default: break;
            }
            for (int s = 0; s < int(basis.size()); ++s) {
                std::vector<ModeKey> raw = {m1, m2};
                raw.insert(raw.end(), basis[s].modes.begin(),
                           basis[s].modes.end());
                auto [sign, cm] = canonical_form(std::move(raw));
                if (sign) mat.at(index.at(cm), s) += sign;
            }
            return mat;
        }
        case ModuleId::Minus:
            switch (g.kind) {
                case GenKind::SmallE:
                    E(j - 1, d + i - 1, 1);
                    E(i - 1, d + j - 1, -1);
                    break;
                case GenKind::SmallF:
                    E(d + i - 1, j - 1, 1);
                    E(d + j - 1, i - 1, -1);
                    break;
                case GenKind::SmallH:
                    E(i - 1, j - 1, 1);
                    E(d + j - 1, d + i - 1, 1);
                    break;
                case GenKind::LargeE:
                    E(j - 1, d + i - 1, -1);
                    E(i - 1, d + j - 1, -1);
                    break;
                case GenKind::LargeF:
                    E(d + i - 1, j - 1, 1);
                    E(d + j - 1, i - 1, 1);
                    break;
                case GenKind::LargeH:
                    E(i - 1, j - 1, 1);
                    E(d + j - 1, d + i - 1, -1);
                    break;
            }
            return mat;
        case ModuleId::ThetaPlus:
            if (g.kind == GenKind::SmallH && i == j) mat.at(0, 0) = rat(-1, 8);
            return mat;
        case ModuleId::ThetaMinus: {
            Rat half = rat(1, 2), quarter = rat(1, 4);
            switch (g.kind) {
                case GenKind::SmallE:
                    E(j - 1, d + i - 1, half);
                    E(i - 1, d + j - 1, -half);
                    break;
                case GenKind::SmallF:
                    E(d + i - 1, j - 1, half);
                    E(d + j - 1, i - 1, -half);
                    break;
                case GenKind::SmallH:
                    if (i != j) {
                        E(i - 1, j - 1, half);
                        E(d + j - 1, d + i - 1, half);
                    } else {
                        E(i - 1, i - 1, half);
                        E(d + i - 1, d + i - 1, half);
                        for (int k = 0; k < n; ++k) E(k, k, rat(-1, 8));
                    }
                    break;
                case GenKind::LargeE:
                    E(j - 1, d + i - 1, -quarter);
                    E(i - 1, d + j - 1, -quarter);
                    break;
                case GenKind::LargeF:
                    E(d + i - 1, j - 1, quarter);
                    E(d + j - 1, i - 1, quarter);
                    break;
                case GenKind::LargeH:
                    E(i - 1, j - 1, quarter);
                    E(d + j - 1, d + i - 1, -quarter);
                    break;
            }
            return mat;
        }
    }
    return mat;
}

std::vector<State> top_basis(const AlgebraConfig& cfg, ModuleId m) {
    std::vector<State> out;
    if (m == ModuleId::HatPlus) {
        for (const auto& b :
             enumerate_basis(cfg, Sector::ZeroExtended, Rat(0), true))
            out.push_back(monomial_state(Sector::ZeroExtended, b));
    } else if (m == ModuleId::Minus) {
        for (const auto& b :
             enumerate_basis(cfg, Sector::Untwisted, Rat(1), false))
            out.push_back(monomial_state(Sector::Untwisted, b));
    } else {
        throw std::invalid_argument(
            "top_basis: only the untwisted tops are state-backed");
    }
    return out;
}

MatrixQ direct_block_matrix(ProductEngine& eng, ModuleId mod, const State& a) {
    const AlgebraConfig& cfg = eng.config();
    auto basis = top_basis(cfg, mod);
    int n = int(basis.size());
    std::map<Monomial, int> index;
    for (int s = 0; s < n; ++s)
        index[basis[s].terms.begin()->first] = s;

    MatrixQ mat(n, n);
    for (const auto& [w, aw] : split_by_weight(a))
        for (int s = 0; s < n; ++s) {
            State res = eng.nth_product(aw, w - 1, basis[s]);
            for (const auto& [m, c] : res.terms) mat.at(index.at(m), s) += c;
        }
    return mat;
}

SuiteReport oracle_rep_check(const AlgebraConfig& cfg) {
    SuiteReport rep;
    rep.suite = "oracle-reps";
    ProductEngine eng(cfg);
    auto gens = strong_generators(cfg);

    for (ModuleId mod : {ModuleId::HatPlus, ModuleId::Minus}) {
        for (const auto& g : gens) {
            MatrixQ table = build_rep_block(cfg, mod, g);
            MatrixQ direct =
                direct_block_matrix(eng, mod, quadratic_state(cfg, g));
            rep.add_check("o(" + g.name() + ") on " + module_name(mod),
                          table == direct);
        }
        // multiplicativity through modes: o(g * h) = o(g) o(h) on the top
        std::size_t pair_cap = cfg.d <= 2 ? gens.size() : 8;
        for (std::size_t x = 0; x < std::min(gens.size(), pair_cap); ++x)
            for (std::size_t y = 0; y < std::min(gens.size(), pair_cap); ++y) {
                State gx = quadratic_state(cfg, gens[x]);
                State gy = quadratic_state(cfg, gens[y]);
                MatrixQ lhs =
                    direct_block_matrix(eng, mod, zhu_star(eng, gx, gy));
                MatrixQ rhs = direct_block_matrix(eng, mod, gx) *
                              direct_block_matrix(eng, mod, gy);
                rep.add_check("o(" + gens[x].name() + " * " + gens[y].name() +
                                  ") on " + module_name(mod),
                              lhs == rhs);
            }
    }
    // the weight-0 top of the untwisted even part itself: everything acts as 0
    bool plus_trivial = true;
    for (const auto& g : gens)
        if (!eng.nth_product(quadratic_state(cfg, g), g.weight() - 1,
                             vacuum_state())
                 .is_zero())
            plus_trivial = false;
    rep.add_check("generators act as zero on the vacuum top", plus_trivial);
    return rep;
}

MatrixQ block_diag_image(const AlgebraConfig& cfg, const GenId& g) {
    const ModuleId order[] = {ModuleId::HatPlus, ModuleId::Minus,
                              ModuleId::ThetaPlus, ModuleId::ThetaMinus};
    long N = 0;
    for (ModuleId m : order) N += module_top_dim(cfg, m);
    MatrixQ out{int(N), int(N)};
    long off = 0;
    for (ModuleId m : order) {
        MatrixQ b = build_rep_block(cfg, m, g);
        for (int r = 0; r < b.n; ++r)
            for (int c = 0; c < b.m; ++c)
                out.at(int(off) + r, int(off) + c) = b.at(r, c);
        off += b.n;
    }
    return out;
}

AdAlgebra build_Ad(const AlgebraConfig& cfg) {
    AdAlgebra ad;
    ad.cfg = cfg;
    for (ModuleId m : {ModuleId::HatPlus, ModuleId::Minus, ModuleId::ThetaPlus,
                       ModuleId::ThetaMinus})
        ad.block_dims.push_back(module_top_dim(cfg, m));
    ad.N = 0;
    for (long b : ad.block_dims) ad.N += b;
    ad.gens = strong_generators(cfg);
    for (const auto& g : ad.gens)
        ad.gen_images.push_back(block_diag_image(cfg, g));
    ad.unit = MatrixQ::identity(int(ad.N));
    ad.omega = MatrixQ(int(ad.N), int(ad.N));
    for (int i = 1; i <= cfg.d; ++i)
        ad.omega = ad.omega + block_diag_image(cfg, {GenKind::SmallH, i, i});
    ad.basis = algebra_closure(ad.gen_images, ad.unit);
    if (long(ad.basis.size()) != n_d(cfg.d))
        throw std::runtime_error(
            "closure dimension " + std::to_string(ad.basis.size()) +
            " != " + std::to_string(n_d(cfg.d)) + " at d=" +
            std::to_string(cfg.d));
    return ad;
}

namespace {

PolyQ linear_factor(const Rat& root) {
    PolyQ p;
    p.c = {-root, Rat(1)};
    return p;
}

std::string poly_str(const PolyQ& p) { return p.str(); }

} // namespace

SuiteReport coprimality_check(const AdAlgebra& ad) {
    SuiteReport rep;
    rep.suite = "coprimality";
    int d = ad.cfg.d;

    PolyQ expected = PolyQ::monomial(d + 1);
    expected = expected * linear_factor(Rat(1));
    expected = expected * linear_factor(rat(-d, 8));
    expected = expected * linear_factor(rat(4 - d, 8)); // 1/2 - d/8
    PolyQ mp = min_poly(ad.omega);
    rep.add("minimal polynomial of the omega image", poly_str(expected),
            poly_str(mp));

    // per-block factors
    const char* names[] = {"hat_plus", "minus", "theta_plus", "theta_minus"};
    std::vector<PolyQ> fac = {PolyQ::monomial(d + 1), linear_factor(Rat(1)),
                              linear_factor(rat(-d, 8)),
                              linear_factor(rat(4 - d, 8))};
    long off = 0;
    std::vector<PolyQ> block_mp;
    for (std::size_t b = 0; b < ad.block_dims.size(); ++b) {
        long n = ad.block_dims[b];
        MatrixQ sub{int(n), int(n)};
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                sub.at(r, c) = ad.omega.at(int(off) + r, int(off) + c);
        PolyQ bmp = min_poly(sub);
        block_mp.push_back(bmp);
        rep.add(std::string("omega block factor on ") + names[b],
                poly_str(fac[b]), poly_str(bmp));
        off += n;
    }
    for (std::size_t x = 0; x < block_mp.size(); ++x)
        for (std::size_t y = x + 1; y < block_mp.size(); ++y) {
            PolyQ g = PolyQ::gcd(block_mp[x], block_mp[y]);
            rep.add_check(std::string("coprime: ") + names[x] + " vs " +
                              names[y],
                          g.degree() == 0);
        }
    return rep;
}

namespace {

// left kernel of the stacked constraint rows, via tag columns
std::vector<SparseVec> dependency_kernel(
    const std::vector<SparseVec>& rows, long tag_offset) {
    RowSpan span;
    std::vector<SparseVec> kernel;
    for (std::size_t j = 0; j < rows.size(); ++j) {
        SparseVec v = rows[j];
        v.set(int(tag_offset + long(j)), Rat(1));
        span.reduce(v);
        if (!v.empty() && v.lead() >= tag_offset) {
            SparseVec dep;
            for (const auto& [col, val] : v.entries)
                dep.set(int(col - tag_offset), val);
            kernel.push_back(dep);
        }
        if (!v.empty()) span.insert(std::move(v));
    }
    return kernel;
}

SparseVec shifted_flatten(const MatrixQ& m, long offset) {
    SparseVec out;
    SparseVec f = m.flatten();
    for (const auto& [col, val] : f.entries) out.set(int(offset + col), val);
    return out;
}

} // namespace

std::pair<long, std::vector<SparseVec>> center(const AdAlgebra& ad) {
    long NN = ad.N * ad.N;
    std::vector<SparseVec> rows;
    for (const auto& b : ad.basis) {
        SparseVec row;
        for (std::size_t g = 0; g < ad.gen_images.size(); ++g) {
            MatrixQ comm = b * ad.gen_images[g] - ad.gen_images[g] * b;
            SparseVec part = shifted_flatten(comm, long(g) * NN);
            for (const auto& [col, val] : part.entries) row.set(col, val);
        }
        rows.push_back(std::move(row));
    }
    auto kern = dependency_kernel(rows, long(ad.gen_images.size()) * NN);
    return {long(kern.size()), kern};
}

long center_dim(const AdAlgebra& ad) { return center(ad).first; }

long symmetric_functionals_dim(const AdAlgebra& ad) {
    RowSpan span;
    for (std::size_t i = 0; i < ad.basis.size(); ++i)
        for (std::size_t j = i + 1; j < ad.basis.size(); ++j) {
            MatrixQ comm = ad.basis[i] * ad.basis[j] - ad.basis[j] * ad.basis[i];
            if (!comm.is_zero()) span.insert(comm.flatten());
        }
    return long(ad.basis.size()) - long(span.rank());
}

namespace {

State wedge(const State& a, const State& b) {
    State out;
    out.sector = Sector::ZeroExtended;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            std::vector<ModeKey> raw = ma.modes;
            raw.insert(raw.end(), mb.modes.begin(), mb.modes.end());
            auto [sign, cm] = canonical_form(std::move(raw));
            if (sign) out.add_term(cm, ca * cb * sign);
        }
    return out;
}

} // namespace

InvariantsReport sp_invariants(const AdAlgebra& ad) {
    const AlgebraConfig& cfg = ad.cfg;
    int d = cfg.d;
    InvariantsReport rep;
    rep.expected = d + 4;

    auto sp = sp_basis(cfg);
    auto hat = enumerate_basis(cfg, Sector::ZeroExtended, Rat(0), true);
    int hn = int(hat.size());
    std::map<Monomial, int> hidx;
    for (int s = 0; s < hn; ++s) hidx[hat[s]] = s;

    // derivation matrices on the zero-mode exterior algebra
    std::vector<MatrixQ> dmats;
    for (const auto& x : sp) {
        MatrixQ dm(hn, hn);
        for (int s = 0; s < hn; ++s) {
            State der = sp_derivation(
                cfg, x.rho, monomial_state(Sector::ZeroExtended, hat[s]));
            for (const auto& [m, c] : der.terms) dm.at(hidx.at(m), s) += c;
        }
        dmats.push_back(std::move(dm));
    }

    // block-diagonal derivation action on the whole algebra
    std::vector<MatrixQ> X;
    for (std::size_t xi = 0; xi < sp.size(); ++xi) {
        MatrixQ m(int(ad.N), int(ad.N));
        long off = 0;
        auto put = [&](const MatrixQ& blk) {
            for (int r = 0; r < blk.n; ++r)
                for (int c = 0; c < blk.m; ++c)
                    m.at(int(off) + r, int(off) + c) = blk.at(r, c);
            off += blk.n;
        };
        put(dmats[xi]);
        put(sp[xi].rho);
        off += 1; // the one-dimensional block carries the trivial action
        put(sp[xi].rho);
        X.push_back(std::move(m));
    }

    long NN = ad.N * ad.N;
    std::vector<SparseVec> rows;
    for (const auto& b : ad.basis) {
        SparseVec row;
        for (std::size_t xi = 0; xi < X.size(); ++xi) {
            MatrixQ comm = X[xi] * b - b * X[xi];
            SparseVec part = shifted_flatten(comm, long(xi) * NN);
            for (const auto& [col, val] : part.entries) row.set(col, val);
        }
        rows.push_back(std::move(row));
    }
    auto kern = dependency_kernel(rows, long(X.size()) * NN);
    rep.dim = long(kern.size());

    // the invariants must be exactly the polynomials in the omega image
    std::vector<SparseVec> flat_basis;
    for (const auto& b : ad.basis) flat_basis.push_back(b.flatten());
    RowSpan powers;
    long prank = 0;
    MatrixQ P = ad.unit;
    for (int p = 0; p <= d + 3; ++p) {
        auto coords = solve_in_span(flat_basis, P.flatten());
        if (coords) {
            SparseVec sv;
            for (std::size_t j = 0; j < coords->size(); ++j)
                sv.set(int(j), (*coords)[j]);
            if (powers.insert(std::move(sv))) ++prank;
        }
        P = P * ad.omega;
    }
    bool contained = (prank == rep.dim);
    for (const auto& k : kern)
        if (!powers.contains(k)) contained = false;
    rep.omega_span = contained;

    // invariants inside each even exterior degree separately
    State omega_wedge;
    omega_wedge.sector = Sector::ZeroExtended;
    for (int i = 1; i <= d; ++i) {
        auto [sign, cm] = canonical_form({ModeKey{i, 0}, ModeKey{i + d, 0}});
        omega_wedge.add_term(cm, Rat(sign));
    }
    State wk = vacuum_state(Sector::ZeroExtended);
    bool lambda_ok = true;
    for (int k = 0; k <= d; ++k) {
        std::vector<int> sub;
        for (int s = 0; s < hn; ++s)
            if (int(hat[s].length()) == 2 * k) sub.push_back(s);
        int sn = int(sub.size());
        MatrixQ stacked(int(sp.size()) * sn, sn);
        for (std::size_t xi = 0; xi < sp.size(); ++xi)
            for (int r = 0; r < sn; ++r)
                for (int c = 0; c < sn; ++c)
                    stacked.at(int(xi) * sn + r, c) =
                        dmats[xi].at(sub[r], sub[c]);
        auto kv = kernel(stacked);
        rep.lambda_blocks.push_back({2 * k, long(kv.size())});
        if (long(kv.size()) != 1) lambda_ok = false;
        // the invariant there is the k-th wedge power of the omega element
        if (wk.is_zero()) lambda_ok = false;
        for (std::size_t xi = 0; xi < sp.size() && lambda_ok; ++xi) {
            State der = sp_derivation(cfg, sp[xi].rho, wk);
            if (!der.is_zero()) lambda_ok = false;
        }
        wk = wedge(omega_wedge, wk);
    }

    rep.pass = (rep.dim == rep.expected) && rep.omega_span && lambda_ok;
    return rep;
}

SuiteReport verify_j4(const AlgebraConfig& cfg) {
    if (cfg.d != 2)
        throw std::invalid_argument(
            "the weight-4 invariant identity is specific to rank 2");
    SuiteReport rep;
    rep.suite = "j4";
    ProductEngine eng(cfg);
    State om = omega_state(cfg);
    State j4 = j4_state(cfg);

    for (ModuleId mod : {ModuleId::HatPlus, ModuleId::Minus}) {
        MatrixQ W = direct_block_matrix(eng, mod, om);
        MatrixQ J = direct_block_matrix(eng, mod, j4);
        MatrixQ W2 = W * W;
        MatrixQ W3 = W2 * W;
        MatrixQ poly = (W3 * W2).scaled(rat(-144, 5)) +
                       (W2 * W2).scaled(Rat(24)) + W3.scaled(rat(29, 5));
        // the cubic-and-up part alone misses the image: the identity needs a
        // linear term as well (cross-checked against the circ-product span)
        rep.add_check("weight-4 invariant identity on " + module_name(mod),
                      J == poly + W.scaled(Rat(2)));
        rep.add("identity without the linear term on " + module_name(mod),
                "fails", J == poly ? "holds" : "fails");
    }
    rep.add_check("both sides vanish on the vacuum top",
                  eng.nth_product(j4, 3, vacuum_state()).is_zero());
    rep.add("twisted tops", "no action table for weight-4 elements; skipped",
            "no action table for weight-4 elements; skipped");
    return rep;
}

// ---- truncated direct quotient ----

namespace {

// columns ordered by weight descending, then by monomial
using DKey = std::pair<int, Monomial>;
using DVec = std::map<DKey, Rat>;

struct DSpan {
    std::map<DKey, DVec> rows;

    static void axpy(DVec& x, const DVec& y, const Rat& s) {
        for (const auto& [k, c] : y) {
            auto it = x.find(k);
            if (it == x.end()) {
                Rat v = c * s;
                if (v != 0) x.emplace(k, std::move(v));
            } else {
                it->second += c * s;
                if (it->second == 0) x.erase(it);
            }
        }
    }

    void reduce(DVec& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto r = rows.find(it->first);
            if (r == rows.end()) {
                ++it;
                continue;
            }
            DKey key = it->first;
            Rat c = it->second;
            axpy(v, r->second, -c);
            it = v.upper_bound(key);
        }
    }

    bool insert(DVec v) {
        reduce(v);
        if (v.empty()) return false;
        Rat lead = v.begin()->second;
        if (lead != 1)
            for (auto& [k, c] : v) c /= lead;
        DKey pivot = v.begin()->first;
        rows.emplace(std::move(pivot), std::move(v));
        return true;
    }
};

DVec to_dvec(const State& s) {
    DVec v;
    for (const auto& [m, c] : s.terms)
        v.emplace(DKey{-m.twice_oscillator_weight() / 2, m}, c);
    return v;
}

} // namespace

ZhuTruncation direct_zhu_dim(const AlgebraConfig& cfg, int cap_weight) {
    ZhuTruncation rep;
    rep.cap = cap_weight;
    rep.expected = n_d(cfg.d);

    ProductEngine eng(cfg);
    std::vector<std::vector<Monomial>> basis(cap_weight + 1);
    std::vector<long> cum(cap_weight + 1, 0);
    for (int w = 0; w <= cap_weight; ++w) {
        basis[w] = enumerate_basis(cfg, Sector::Untwisted, Rat(w), true);
        cum[w] = (w ? cum[w - 1] : 0) + long(basis[w].size());
    }
    rep.ambient = cum[cap_weight];

    DSpan span;
    for (int wa = 2; wa <= cap_weight - 1; ++wa) {
        for (int wb = 0; wa + wb + 1 <= cap_weight; ++wb) {
            for (const auto& am : basis[wa]) {
                State sa = monomial_state(Sector::Untwisted, am);
                for (const auto& bm : basis[wb]) {
                    State sb = monomial_state(Sector::Untwisted, bm);
                    State row = zhu_circ(eng, sa, sb);
                    if (row.is_zero()) continue;
                    ++rep.rows_used;
                    span.insert(to_dvec(row));
                }
            }
        }
        eng.clear_memo();
    }

    std::vector<long> pivots_le(cap_weight + 1, 0);
    for (const auto& [key, row] : span.rows) {
        int w = -key.first;
        if (w <= cap_weight) ++pivots_le[w];
    }
    for (int c = 1; c <= cap_weight; ++c) pivots_le[c] += pivots_le[c - 1];
    for (int c = 0; c <= cap_weight; ++c)
        rep.qdims.push_back({c, cum[c] - pivots_le[c]});
    rep.dim = rep.qdims.back().second;
    rep.stabilized =
        cap_weight >= 1 &&
        rep.qdims[cap_weight].second == rep.qdims[cap_weight - 1].second;
    rep.pass = rep.stabilized && rep.dim == rep.expected;

    if (cfg.d == 2 && cap_weight >= 10) {
        State om = omega_state(cfg);
        State p2 = zhu_star(eng, om, om);
        State p3 = zhu_star(eng, om, p2);
        State p4 = zhu_star(eng, om, p3);
        State p5 = zhu_star(eng, om, p4);
        State target = j4_state(cfg) - (p5 * rat(-144, 5) + p4 * Rat(24) +
                                        p3 * rat(29, 5) + om * Rat(2));
        DVec v = to_dvec(target);
        span.reduce(v);
        if (v.empty()) rep.j4_member = true;
        // a nonzero residual against a partial span proves nothing; leave unset
    }
    return rep;
}

} // namespace symfer
