#include "symfer/fock.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace symfer {

std::string sector_name(Sector s) {
    switch (s) {
        case Sector::Untwisted: return "untwisted";
        case Sector::Twisted: return "twisted";
        case Sector::ZeroExtended: return "zero_extended";
    }
    return "?";
}

std::pair<int, Monomial> canonical_form(std::vector<ModeKey> raw) {
    // insertion sort, counting transpositions (lists are short)
    int sign = 1;
    for (std::size_t i = 1; i < raw.size(); ++i) {
        ModeKey key = raw[i];
        std::size_t j = i;
        while (j > 0 && key < raw[j - 1]) {
            raw[j] = raw[j - 1];
            --j;
            sign = -sign;
        }
        raw[j] = key;
    }
    for (std::size_t i = 1; i < raw.size(); ++i)
        if (raw[i] == raw[i - 1]) return {0, Monomial{}};
    return {sign, Monomial{std::move(raw)}};
}

void State::add_term(const Monomial& m, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

State& State::operator+=(const State& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) sector = o.sector;
    if (sector != o.sector) throw std::invalid_argument("sector mismatch in state sum");
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

State& State::operator-=(const State& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) sector = o.sector;
    if (sector != o.sector) throw std::invalid_argument("sector mismatch in state sum");
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
}

State State::operator+(const State& o) const {
    State out = *this;
    out += o;
    return out;
}

State State::operator-(const State& o) const {
    State out = *this;
    out -= o;
    return out;
}

State State::operator*(const Rat& s) const {
    State out;
    out.sector = sector;
    if (s == 0) return out;
    for (const auto& [m, c] : terms) out.terms.emplace(m, c * s);
    return out;
}

Rat sector_offset(const AlgebraConfig& cfg, Sector s) {
    return s == Sector::Twisted ? rat(-cfg.d, 8) : Rat(0);
}

bool depth_admissible(Sector s, int twice_depth) {
    switch (s) {
        case Sector::Untwisted: return twice_depth <= -2 && twice_depth % 2 == 0;
        case Sector::Twisted: return twice_depth <= -1 && twice_depth % 2 != 0;
        case Sector::ZeroExtended: return twice_depth <= 0 && twice_depth % 2 == 0;
    }
    return false;
}

Rat State::weight(const AlgebraConfig& cfg) const {
    if (terms.empty()) throw std::invalid_argument("weight of zero state");
    Rat w;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rat mw = rat(m.twice_oscillator_weight(), 2) + sector_offset(cfg, sector);
        if (first) {
            w = mw;
            first = false;
        } else if (mw != w) {
            throw std::invalid_argument("mixed-weight state: " + rat_str(w) + " vs " +
                                        rat_str(mw));
        }
    }
    return w;
}

int State::parity() const {
    if (terms.empty()) throw std::invalid_argument("parity of zero state");
    int p = terms.begin()->first.parity();
    for (const auto& [m, c] : terms)
        if (m.parity() != p) throw std::invalid_argument("mixed-parity state");
    return p;
}

State vacuum_state(Sector sector) {
    State s;
    s.sector = sector;
    s.terms.emplace(Monomial{}, Rat(1));
    return s;
}

State monomial_state(Sector sector, const Monomial& m, const Rat& coeff) {
    State s;
    s.sector = sector;
    s.add_term(m, coeff);
    return s;
}

namespace {

void enumerate_rec(const AlgebraConfig& cfg, Sector sector, int remaining_twice,
                   bool has_prev, ModeKey prev, std::vector<ModeKey>& stack,
                   bool even_only, std::vector<Monomial>& out) {
    if (remaining_twice == 0) {
        if (!even_only || stack.size() % 2 == 0)
            out.push_back(Monomial{stack});
        if (sector != Sector::ZeroExtended) return;
        // fall through: zero modes may still be appended below
    }
    const int step = 2; // doubled-lattice spacing, all sectors
    int shallowest = (sector == Sector::Twisted) ? -1 : (sector == Sector::ZeroExtended ? 0 : -2);
    // iterate candidate modes after prev in canonical order
    int t_start = -remaining_twice;
    if (sector == Sector::Twisted && t_start % 2 == 0) ++t_start; // odd lattice
    if (sector != Sector::Twisted && t_start % 2 != 0) ++t_start; // even lattice
    for (int t = t_start; t <= shallowest; t += step) {
        if (t == 0 && remaining_twice != 0) break;
        for (int g = 1; g <= cfg.ngens(); ++g) {
            ModeKey k{g, t};
            if (has_prev && !(prev < k)) continue;
            stack.push_back(k);
            enumerate_rec(cfg, sector, remaining_twice + t, true, k, stack,
                          even_only, out);
            stack.pop_back();
        }
    }
}

} // namespace

std::vector<Monomial> enumerate_basis(const AlgebraConfig& cfg, Sector sector,
                                      const Rat& w, bool even_only) {
    Rat osc = w - sector_offset(cfg, sector);
    Rat twice = osc * 2;
    if (twice.get_den() != 1 || twice < 0) return {};
    long W = twice.get_num().get_si();
    std::vector<Monomial> out;
    std::vector<ModeKey> stack;
    enumerate_rec(cfg, sector, int(W), false, ModeKey{}, stack, even_only, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> graded_dim_series(int d, int max_w) {
    std::vector<long> coeff(max_w + 1, 0);
    coeff[0] = 1;
    for (int n = 1; n <= max_w; ++n)
        for (int rep = 0; rep < 2 * d; ++rep)
            for (int w = max_w; w >= n; --w) coeff[w] += coeff[w - n];
    return coeff;
}

std::string monomial_str(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& k : m.modes) {
        if (!first) os << ",";
        first = false;
        int num = k.twice_depth, den = 2;
        if (num % 2 == 0) {
            num /= 2;
            den = 1;
        }
        os << "g" << k.gen << ":" << num << "/" << den;
    }
    return os.str();
}

namespace {

bool parse_monomial_line(const std::string& line, Monomial& out) {
    out.modes.clear();
    if (line.empty()) return true; // vacuum
    std::istringstream is(line);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int gen, num, den;
        if (std::sscanf(tok.c_str(), "g%d:%d/%d", &gen, &num, &den) != 3) return false;
        if (den != 1 && den != 2) return false;
        out.modes.push_back(ModeKey{gen, num * (den == 1 ? 2 : 1)});
    }
    for (std::size_t i = 1; i < out.modes.size(); ++i)
        if (!(out.modes[i - 1] < out.modes[i])) return false;
    return true;
}

} // namespace

std::vector<Monomial> basis_cached(const AlgebraConfig& cfg, Sector sector,
                                   const Rat& w, bool even_only,
                                   const std::string& cache_dir) {
    namespace fs = std::filesystem;
    std::string header = "symfer-basis v1 d=" + std::to_string(cfg.d) +
                         " sector=" + sector_name(sector) + " w=" +
                         w.get_num().get_str() + "/" + w.get_den().get_str() +
                         " parity=" + (even_only ? "even" : "all");
    std::ostringstream fn;
    fn << "basis_d" << cfg.d << "_" << sector_name(sector) << "_w"
       << w.get_num().get_str() << "_" << w.get_den().get_str() << "_"
       << (even_only ? "even" : "all") << ".txt";
    fs::path path = fs::path(cache_dir) / fn.str();

    if (fs::exists(path)) {
        std::ifstream in(path);
        std::string first;
        if (std::getline(in, first) && first == header) {
            std::vector<Monomial> out;
            std::string line;
            bool ok = true;
            while (std::getline(in, line)) {
                Monomial m;
                if (!parse_monomial_line(line, m)) {
                    ok = false;
                    break;
                }
                out.push_back(std::move(m));
            }
            if (ok) return out;
        }
        std::cerr << "symfer: corrupt basis cache " << path << ", recomputing\n";
    }

    auto basis = enumerate_basis(cfg, sector, w, even_only);
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream outf(tmp);
        outf << header << "\n";
        for (const auto& m : basis) outf << monomial_str(m) << "\n";
    }
    fs::rename(tmp, path);
    return basis;
}

std::string State::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        if (!m.modes.empty()) os << "·" << monomial_str(m);
        else os << "·1";
    }
    return os.str();
}

} // namespace symfer
