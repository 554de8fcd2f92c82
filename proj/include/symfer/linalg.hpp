#pragma once

#include "symfer/rational.hpp"
#include <map>
#include <vector>
#include <optional>
#include <cstddef>

namespace symfer {

// Sparse row vector over Q, indexed by column.
struct SparseVec {
    std::map<int, Rat> entries;

    bool empty() const { return entries.empty(); }
    // column index of the first nonzero entry
    int lead() const { return entries.begin()->first; }
    const Rat& lead_coeff() const { return entries.begin()->second; }

    void set(int col, const Rat& v);
    void add_scaled(const SparseVec& other, const Rat& scale);
    void scale(const Rat& s);
    Rat get(int col) const;
};

// Incrementally maintained row-echelon span.  Rows are stored normalized
// (pivot coefficient 1) and keyed by pivot column; rows are only reduced
// forward, which is all rank and membership queries need.
class RowSpan {
public:
    // Reduce v against current rows in place; returns residual.
    void reduce(SparseVec& v) const;
    // Reduce and, if nonzero, add as a new pivot row.  Returns true if the
    // row increased the rank.
    bool insert(SparseVec v);
    bool contains(SparseVec v) const;
    std::size_t rank() const { return rows_.size(); }
    const std::map<int, SparseVec>& rows() const { return rows_; }

private:
    std::map<int, SparseVec> rows_;
};

// Dense matrix over Q (small sizes: associative-algebra images).
struct MatrixQ {
    int n = 0, m = 0;
    std::vector<Rat> a; // row-major

    MatrixQ() = default;
    MatrixQ(int rows, int cols) : n(rows), m(cols), a(std::size_t(rows) * cols) {}
    static MatrixQ identity(int k);

    Rat& at(int i, int j) { return a[std::size_t(i) * m + j]; }
    const Rat& at(int i, int j) const { return a[std::size_t(i) * m + j]; }

    MatrixQ operator*(const MatrixQ& o) const;
    MatrixQ operator+(const MatrixQ& o) const;
    MatrixQ operator-(const MatrixQ& o) const;
    MatrixQ scaled(const Rat& s) const;
    bool is_zero() const;
    bool operator==(const MatrixQ& o) const { return n == o.n && m == o.m && a == o.a; }

    SparseVec flatten() const;
};

// Polynomial over Q, coefficients ascending in degree.
struct PolyQ {
    std::vector<Rat> c;

    int degree() const { return int(c.size()) - 1; }
    void trim();
    static PolyQ monomial(int deg, const Rat& coeff = Rat(1));
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    // division with remainder; o must be nonzero
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& o) const;
    bool is_zero() const { return c.empty(); }
    // monic gcd
    static PolyQ gcd(PolyQ a, PolyQ b);
    MatrixQ eval(const MatrixQ& x) const;
    std::string str() const; // human-readable, variable "x"
};

// Reduced row-echelon form: (rank, pivot columns, reduced matrix).
std::tuple<int, std::vector<int>, MatrixQ> rref(const MatrixQ& m);

// Basis of the right null space.
std::vector<SparseVec> kernel(const MatrixQ& m);

// Monic minimal polynomial of a square matrix (Krylov on the flattened
// matrix powers with coefficient tracking).
PolyQ min_poly(const MatrixQ& x);

// Closure of span{unit} under right multiplication by gens.
// Returns a linear basis of the unital associative algebra generated.
std::vector<MatrixQ> algebra_closure(const std::vector<MatrixQ>& gens,
                                     const MatrixQ& unit);

// Express target as a linear combination of basis vectors, if possible.
std::optional<std::vector<Rat>> solve_in_span(const std::vector<SparseVec>& basis,
                                              const SparseVec& target);

} // namespace symfer
