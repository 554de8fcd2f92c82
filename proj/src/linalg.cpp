#include "symfer/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace symfer {

void SparseVec::set(int col, const Rat& v) {
    if (v == 0)
        entries.erase(col);
    else
        entries[col] = v;
}

Rat SparseVec::get(int col) const {
    auto it = entries.find(col);
    return it == entries.end() ? Rat(0) : it->second;
}

void SparseVec::add_scaled(const SparseVec& other, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [col, v] : other.entries) {
        auto it = entries.find(col);
        if (it == entries.end()) {
            entries.emplace(col, v * scale);
        } else {
            it->second += v * scale;
            if (it->second == 0) entries.erase(it);
        }
    }
}

void SparseVec::scale(const Rat& s) {
    if (s == 0) {
        entries.clear();
        return;
    }
    for (auto& [col, v] : entries) v *= s;
}

void RowSpan::reduce(SparseVec& v) const {
    // Rows are echelon: a pivot row has no entries left of its pivot, so one
    // ascending sweep over v's support suffices.
    while (!v.empty()) {
        auto it = rows_.lower_bound(v.lead());
        bool progressed = false;
        for (; it != rows_.end(); ++it) {
            Rat coeff = v.get(it->first);
            if (coeff != 0) {
                v.add_scaled(it->second, -coeff);
                progressed = true;
                break;
            }
        }
        if (!progressed) return;
    }
}

bool RowSpan::insert(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    Rat inv = 1 / v.lead_coeff();
    v.scale(inv);
    int p = v.lead();
    rows_.emplace(p, std::move(v));
    return true;
}

bool RowSpan::contains(SparseVec v) const {
    reduce(v);
    return v.empty();
}

MatrixQ MatrixQ::identity(int k) {
    MatrixQ out(k, k);
    for (int i = 0; i < k; ++i) out.at(i, i) = 1;
    return out;
}

MatrixQ MatrixQ::operator*(const MatrixQ& o) const {
    if (m != o.n) throw std::invalid_argument("matrix shape mismatch");
    MatrixQ out(n, o.m);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.m; ++j) {
                const Rat& w = o.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    return out;
}

MatrixQ MatrixQ::operator+(const MatrixQ& o) const {
    MatrixQ out(n, m);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + o.a[i];
    return out;
}

MatrixQ MatrixQ::operator-(const MatrixQ& o) const {
    MatrixQ out(n, m);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] - o.a[i];
    return out;
}

MatrixQ MatrixQ::scaled(const Rat& s) const {
    MatrixQ out(n, m);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] * s;
    return out;
}

bool MatrixQ::is_zero() const {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

SparseVec MatrixQ::flatten() const {
    SparseVec out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) out.entries.emplace(int(i), a[i]);
    return out;
}

void PolyQ::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyQ PolyQ::monomial(int deg, const Rat& coeff) {
    PolyQ p;
    p.c.assign(deg + 1, Rat(0));
    p.c[deg] = coeff;
    p.trim();
    return p;
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (c.empty() || o.c.empty()) return {};
    PolyQ out;
    out.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j)
            out.c[i + j] += c[i] * o.c[j];
    out.trim();
    return out;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    PolyQ out = *this;
    if (out.c.size() < o.c.size()) out.c.resize(o.c.size(), Rat(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
    out.trim();
    return out;
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    PolyQ out = *this;
    if (out.c.size() < o.c.size()) out.c.resize(o.c.size(), Rat(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) out.c[i] -= o.c[i];
    out.trim();
    return out;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero polynomial");
    PolyQ rem = *this;
    PolyQ quot;
    quot.c.assign(c.size(), Rat(0));
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
        int shift = rem.degree() - o.degree();
        Rat f = rem.c.back() / o.c.back();
        quot.c[shift] += f;
        for (std::size_t i = 0; i < o.c.size(); ++i)
            rem.c[i + shift] -= f * o.c[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rat inv = 1 / a.c.back();
        for (auto& v : a.c) v *= inv;
    }
    return a;
}

MatrixQ PolyQ::eval(const MatrixQ& x) const {
    MatrixQ out(x.n, x.m);
    // Horner
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        out = out * x;
        for (int i = 0; i < x.n; ++i) out.at(i, i) += *it;
    }
    return out;
}

std::string PolyQ::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        Rat v = c[i];
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        } else if (v < 0) {
            os << "-";
            v = -v;
        }
        first = false;
        if (i == 0 || v != 1) os << v.get_str();
        if (i > 0) {
            if (v != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::tuple<int, std::vector<int>, MatrixQ> rref(const MatrixQ& m) {
    MatrixQ r = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.m && row < r.n; ++col) {
        int sel = -1;
        for (int i = row; i < r.n; ++i)
            if (r.at(i, col) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < r.m; ++j) std::swap(r.at(sel, j), r.at(row, j));
        Rat inv = 1 / r.at(row, col);
        for (int j = col; j < r.m; ++j) r.at(row, j) *= inv;
        for (int i = 0; i < r.n; ++i) {
            if (i == row) continue;
            Rat f = r.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < r.m; ++j) r.at(i, j) -= f * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {row, pivots, r};
}

std::vector<SparseVec> kernel(const MatrixQ& m) {
    auto [rank, pivots, r] = rref(m);
    std::vector<bool> is_pivot(m.m, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<SparseVec> out;
    for (int free = 0; free < m.m; ++free) {
        if (is_pivot[free]) continue;
        SparseVec v;
        v.set(free, Rat(1));
        for (int i = 0; i < rank; ++i)
            if (r.at(i, free) != 0) v.set(pivots[i], -r.at(i, free));
        out.push_back(std::move(v));
    }
    return out;
}

PolyQ min_poly(const MatrixQ& x) {
    if (x.n != x.m) throw std::invalid_argument("min_poly needs a square matrix");
    // Augmented elimination on flattened powers: columns >= off track which
    // combination of powers each reduced row represents.
    const int off = x.n * x.m;
    std::map<int, SparseVec> rows; // keyed by matrix-part pivot column
    MatrixQ pw = MatrixQ::identity(x.n);
    for (int k = 0;; ++k) {
        SparseVec probe = pw.flatten();
        probe.set(off + k, Rat(1));
        bool again = true;
        while (again) {
            again = false;
            for (const auto& [pivot, prow] : rows) {
                Rat coeff = probe.get(pivot);
                if (coeff != 0) {
                    probe.add_scaled(prow, -coeff);
                    again = true;
                }
            }
        }
        bool zero_matrix_part = probe.empty() || probe.lead() >= off;
        if (zero_matrix_part) {
            PolyQ p;
            p.c.assign(k + 1, Rat(0));
            for (const auto& [col, v] : probe.entries) p.c[col - off] = v;
            Rat inv = 1 / p.c[k];
            for (auto& v : p.c) v *= inv;
            return p;
        }
        probe.scale(1 / probe.lead_coeff());
        int piv = probe.lead();
        rows.emplace(piv, std::move(probe));
        pw = pw * x;
    }
}

std::vector<MatrixQ> algebra_closure(const std::vector<MatrixQ>& gens,
                                     const MatrixQ& unit) {
    RowSpan span;
    std::vector<MatrixQ> basis;
    std::vector<MatrixQ> frontier;
    if (span.insert(unit.flatten())) {
        basis.push_back(unit);
        frontier.push_back(unit);
    }
    while (!frontier.empty()) {
        std::vector<MatrixQ> next;
        for (const auto& b : frontier)
            for (const auto& g : gens) {
                MatrixQ prod = b * g;
                if (span.insert(prod.flatten())) {
                    basis.push_back(prod);
                    next.push_back(basis.back());
                }
            }
        frontier = std::move(next);
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_in_span(const std::vector<SparseVec>& basis,
                                              const SparseVec& target) {
    // Augmented elimination: tag column off+i marks basis vector i.
    int off = 0;
    for (const auto& b : basis)
        if (!b.empty()) off = std::max(off, b.entries.rbegin()->first + 1);
    for (const auto& [col, v] : target.entries) off = std::max(off, col + 1);

    RowSpan span;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        SparseVec row = basis[i];
        row.set(off + int(i), Rat(1));
        span.insert(std::move(row));
    }
    SparseVec probe = target;
    bool again = true;
    while (again && !probe.empty()) {
        again = false;
        for (const auto& [pivot, prow] : span.rows()) {
            if (pivot >= off) continue;
            Rat coeff = probe.get(pivot);
            if (coeff != 0) {
                probe.add_scaled(prow, -coeff);
                again = true;
            }
        }
    }
    std::vector<Rat> coeffs(basis.size(), Rat(0));
    for (const auto& [col, v] : probe.entries) {
        if (col < off) return std::nullopt; // not in span
        coeffs[col - off] = -v;
    }
    return coeffs;
}

} // namespace symfer
