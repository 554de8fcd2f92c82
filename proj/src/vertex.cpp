#include "symfer/vertex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symfer {

Rat contraction(const AlgebraConfig& cfg, const ModeKey& a, const ModeKey& b) {
    if (a.twice_depth + b.twice_depth != 0) return Rat(0);
    return rat(a.twice_depth, 2) * cfg.pairing(a.gen, b.gen);
}

State apply_mode(const AlgebraConfig& cfg, const ModeKey& k, const State& s) {
    State out;
    out.sector = s.sector;
    for (const auto& [mono, coeff] : s.terms) {
        if (k.twice_depth < 0) {
            std::vector<ModeKey> raw;
            raw.reserve(mono.modes.size() + 1);
            raw.push_back(k);
            raw.insert(raw.end(), mono.modes.begin(), mono.modes.end());
            auto [sign, cm] = canonical_form(std::move(raw));
            if (sign) out.add_term(cm, coeff * sign);
            continue;
        }
        // Wick-move the annihilation/zero mode rightward
        int sgn = 1;
        for (std::size_t i = 0; i < mono.modes.size(); ++i) {
            Rat c = contraction(cfg, k, mono.modes[i]);
            if (c != 0) {
                Monomial rest;
                rest.modes.reserve(mono.modes.size() - 1);
                for (std::size_t j = 0; j < mono.modes.size(); ++j)
                    if (j != i) rest.modes.push_back(mono.modes[j]);
                out.add_term(rest, coeff * sgn * c);
            }
            sgn = -sgn;
        }
        if (k.twice_depth == 0 && s.sector == Sector::ZeroExtended) {
            std::vector<ModeKey> raw = mono.modes;
            raw.push_back(k);
            auto [sign2, cm] = canonical_form(std::move(raw));
            if (sign2) out.add_term(cm, coeff * sgn * sign2);
        }
    }
    return out;
}

State ProductEngine::nth_mono_state(const Monomial& a, long n, const State& b) {
    State out;
    out.sector = b.sector;
    for (const auto& [m, c] : b.terms) out += nth_mono(a, n, m, b.sector) * c;
    return out;
}

State ProductEngine::nth_mono(const Monomial& a, long n, const Monomial& b,
                              Sector sec) {
    if (a.modes.empty()) {
        State out;
        out.sector = sec;
        if (n == -1) out.add_term(b, Rat(1));
        return out;
    }
    Key key{a, n, b, sec};
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    // a = x_{(-m)} u with x the deepest mode; expand the iterate formula
    //   a_{(n)}c = sum_j C(m+j-1,j) [ x_{(-m-j)}(u_{(n+j)}c)
    //                               + sgn2 * u_{(n-m-j)}(x_{(j)}c) ]
    // with sgn2 = -(-1)^m (-1)^{|u|}, truncated by weight positivity.
    ModeKey x = a.modes.front();
    long m = -x.twice_depth / 2;
    Monomial u;
    u.modes.assign(a.modes.begin() + 1, a.modes.end());
    int pu = int(u.modes.size()) % 2;
    int sgn2 = ((m + pu) % 2 == 0) ? -1 : 1;

    long wt_u = u.twice_oscillator_weight() / 2;
    long wt_b = b.twice_oscillator_weight() / 2;
    long jmax1 = wt_u + wt_b - n - 1;
    long jmax2 = wt_b;

    State out;
    out.sector = sec;
    long jmax = std::max(jmax1, jmax2);
    for (long j = 0; j <= jmax; ++j) {
        Rat c(binom(m + j - 1, j));
        if (j <= jmax1) {
            State inner = nth_mono(u, n + j, b, sec);
            if (!inner.is_zero()) {
                State t = apply_mode(cfg_, ModeKey{x.gen, int(-2 * (m + j))}, inner);
                out += t * c;
            }
        }
        if (j <= jmax2) {
            State xb = apply_mode(cfg_, ModeKey{x.gen, int(2 * j)},
                                  monomial_state(sec, b));
            if (!xb.is_zero()) {
                State t = nth_mono_state(u, n - m - j, xb);
                out += t * (c * sgn2);
            }
        }
    }
    memo_.emplace(std::move(key), out);
    return out;
}

State ProductEngine::nth_product(const State& a, long n, const State& b) {
    if (!a.is_zero() && a.sector != Sector::Untwisted)
        throw std::invalid_argument("left factor of nth_product must be untwisted");
    if (!b.is_zero() && b.sector == Sector::Twisted)
        throw std::invalid_argument("twisted right factor unsupported");
    State out;
    out.sector = b.sector;
    for (const auto& [am, ac] : a.terms)
        for (const auto& [bm, bc] : b.terms)
            out += nth_mono(am, n, bm, b.sector) * (ac * bc);
    return out;
}

State ProductEngine::virasoro(long n, const State& s) {
    return nth_product(omega_state(cfg_), n + 1, s);
}

State ProductEngine::translate(Sector sector, const Monomial& m) {
    State out;
    out.sector = sector;
    for (std::size_t p = 0; p < m.modes.size(); ++p) {
        int t = m.modes[p].twice_depth;
        if (t == 0) continue;
        std::vector<ModeKey> raw = m.modes;
        raw[p].twice_depth = t - 2;
        auto [sign, cm] = canonical_form(std::move(raw));
        if (sign) out.add_term(cm, rat(-t, 2) * sign);
    }
    return out;
}

std::string GenId::name() const {
    static const char* base[] = {"e", "f", "h", "E", "F", "H"};
    std::ostringstream os;
    os << base[int(kind)] << i << j;
    return os.str();
}

std::vector<GenId> strong_generators(const AlgebraConfig& cfg) {
    std::vector<GenId> out;
    int d = cfg.d;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) out.push_back({GenKind::SmallE, i, j});
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) out.push_back({GenKind::SmallF, i, j});
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) out.push_back({GenKind::SmallH, i, j});
    for (int i = 1; i <= d; ++i)
        for (int j = i; j <= d; ++j) out.push_back({GenKind::LargeE, i, j});
    for (int i = 1; i <= d; ++i)
        for (int j = i; j <= d; ++j) out.push_back({GenKind::LargeF, i, j});
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) out.push_back({GenKind::LargeH, i, j});
    return out;
}

namespace {

State two_mode_state(const AlgebraConfig&, int g1, int t1, int g2, int t2,
                     const Rat& coeff) {
    auto [sign, cm] = canonical_form({ModeKey{g1, t1}, ModeKey{g2, t2}});
    State s;
    s.sector = Sector::Untwisted;
    if (sign) s.add_term(cm, coeff * sign);
    return s;
}

} // namespace

State quadratic_state(const AlgebraConfig& cfg, const GenId& g) {
    int d = cfg.d;
    Rat half = rat(1, 2);
    switch (g.kind) {
        case GenKind::SmallE:
            return two_mode_state(cfg, g.i, -2, g.j, -2, Rat(1));
        case GenKind::SmallF:
            return two_mode_state(cfg, g.i + d, -2, g.j + d, -2, Rat(1));
        case GenKind::SmallH:
            return two_mode_state(cfg, g.i, -2, g.j + d, -2, Rat(1));
        case GenKind::LargeE:
            return two_mode_state(cfg, g.i, -4, g.j, -2, half) +
                   two_mode_state(cfg, g.j, -4, g.i, -2, half);
        case GenKind::LargeF:
            return two_mode_state(cfg, g.i + d, -4, g.j + d, -2, half) +
                   two_mode_state(cfg, g.j + d, -4, g.i + d, -2, half);
        case GenKind::LargeH:
            return two_mode_state(cfg, g.i, -4, g.j + d, -2, half) +
                   two_mode_state(cfg, g.j + d, -4, g.i, -2, half);
    }
    throw std::logic_error("bad generator kind");
}

State omega_state(const AlgebraConfig& cfg) {
    State s;
    s.sector = Sector::Untwisted;
    for (int i = 1; i <= cfg.d; ++i)
        s += two_mode_state(cfg, i, -2, i + cfg.d, -2, Rat(1));
    return s;
}

State j4_state(const AlgebraConfig& cfg) {
    State s;
    s.sector = Sector::Untwisted;
    for (int i = 1; i <= cfg.d; ++i) {
        s += two_mode_state(cfg, i, -6, i + cfg.d, -2, Rat(1));
        s -= two_mode_state(cfg, i + cfg.d, -6, i, -2, Rat(1));
    }
    return s;
}

State b_state(const AlgebraConfig& cfg, const std::vector<int>& depths,
              const std::vector<int>& gens) {
    if (depths.size() != gens.size() || depths.empty())
        throw std::invalid_argument("b_state: mismatched arguments");
    mpz_class num = 1;
    long total = 0;
    for (int m : depths) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), m - 1);
        num *= f;
        total += m;
    }
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), total - 1);
    Rat coeff(num, den);
    coeff.canonicalize();

    std::vector<ModeKey> raw;
    for (std::size_t k = 0; k < gens.size(); ++k)
        raw.push_back(ModeKey{gens[k], -2 * depths[k]});
    auto [sign, cm] = canonical_form(std::move(raw));
    State s;
    s.sector = Sector::Untwisted;
    if (sign) s.add_term(cm, coeff * sign);
    return s;
}

State pair_state(const AlgebraConfig& cfg, int gen_a, int depth_a, int gen_b,
                 int depth_b) {
    return two_mode_state(cfg, gen_a, -2 * depth_a, gen_b, -2 * depth_b, Rat(1));
}

std::vector<SpElement> sp_basis(const AlgebraConfig& cfg) {
    int d = cfg.d;
    int n = 2 * d;
    std::vector<SpElement> out;
    auto fresh = [&](const std::string& name) {
        out.push_back({name, MatrixQ(n, n)});
        return &out.back().rho;
    };
    auto E = [&](MatrixQ* m, int target, int source, int v) {
        m->at(target - 1, source - 1) += v;
    };
    for (int i = 1; i <= d; ++i) {
        auto* m = fresh("H" + std::to_string(i));
        E(m, i, i, 1);          // e^i -> e^i
        E(m, i + d, i + d, -1); // f^i -> -f^i
    }
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            if (i == j) continue;
            auto* m = fresh("X" + std::to_string(i) + std::to_string(j));
            E(m, i, j, 1);           // e^j -> e^i
            E(m, j + d, i + d, -1);  // f^i -> -f^j
        }
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            auto* m = fresh("Y" + std::to_string(i) + std::to_string(j));
            E(m, i, j + d, 1); // f^j -> e^i
            E(m, j, i + d, 1); // f^i -> e^j
        }
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            auto* m = fresh("Z" + std::to_string(i) + std::to_string(j));
            E(m, i + d, j, 1); // e^j -> f^i
            E(m, j + d, i, 1); // e^i -> f^j
        }
    for (int i = 1; i <= d; ++i) {
        auto* m = fresh("U" + std::to_string(i));
        E(m, i, i + d, 1); // f^i -> e^i
    }
    for (int i = 1; i <= d; ++i) {
        auto* m = fresh("V" + std::to_string(i));
        E(m, i + d, i, 1); // e^i -> f^i
    }
    return out;
}

State sp_derivation(const AlgebraConfig& cfg, const MatrixQ& rho, const State& s) {
    State out;
    out.sector = s.sector;
    int n = cfg.ngens();
    for (const auto& [mono, coeff] : s.terms) {
        for (std::size_t p = 0; p < mono.modes.size(); ++p) {
            int src = mono.modes[p].gen;
            for (int tgt = 1; tgt <= n; ++tgt) {
                const Rat& c = rho.at(tgt - 1, src - 1);
                if (c == 0) continue;
                std::vector<ModeKey> raw = mono.modes;
                raw[p].gen = tgt;
                auto [sign, cm] = canonical_form(std::move(raw));
                if (sign) out.add_term(cm, coeff * c * sign);
            }
        }
    }
    return out;
}

CheckReport lambda_bracket_check(const AlgebraConfig& cfg, int max_depth,
                                 int max_w) {
    // expectations always use the library's canonical pairing, so the
    // pairing_sign hook acts as a negative control
    AlgebraConfig reference = cfg;
    reference.pairing_sign = -1;
    std::vector<Monomial> basis;
    for (int w = 0; w <= max_w; ++w) {
        auto bw = enumerate_basis(cfg, Sector::Untwisted, Rat(w), false);
        basis.insert(basis.end(), bw.begin(), bw.end());
    }
    for (int g1 = 1; g1 <= cfg.ngens(); ++g1)
        for (int g2 = g1; g2 <= cfg.ngens(); ++g2)
            for (int m1 = -max_depth; m1 <= max_depth; ++m1)
                for (int m2 = -max_depth; m2 <= max_depth; ++m2) {
                    ModeKey k1{g1, 2 * m1}, k2{g2, 2 * m2};
                    Rat expect = contraction(reference, k1, k2);
                    for (const auto& v : basis) {
                        State sv = monomial_state(Sector::Untwisted, v);
                        State lhs = apply_mode(cfg, k1, apply_mode(cfg, k2, sv)) +
                                    apply_mode(cfg, k2, apply_mode(cfg, k1, sv));
                        State rhs = sv * expect;
                        if (!(lhs - rhs).is_zero()) {
                            std::ostringstream os;
                            os << "{x" << g1 << "_" << m1 << ", x" << g2 << "_"
                               << m2 << "} on " << monomial_str(v);
                            return {false, os.str()};
                        }
                    }
                }
    return {true, ""};
}

} // namespace symfer
