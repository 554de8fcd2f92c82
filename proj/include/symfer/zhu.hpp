#pragma once

#include "symfer/c2.hpp"
#include "symfer/linalg.hpp"
#include "symfer/vertex.hpp"
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symfer {

// a * b = sum_k C(deg a, k) a_{(-k-1)} b,  a o b = sum_k C(deg a, k) a_{(-k-2)} b
State zhu_star(ProductEngine& eng, const State& a, const State& b);
State zhu_circ(ProductEngine& eng, const State& a, const State& b);

// The four irreducible-top blocks the quotient algebra acts on, in the fixed
// order used for the block-diagonal assembly.
enum class ModuleId { HatPlus, Minus, ThetaPlus, ThetaMinus };

std::string module_name(ModuleId m);
long module_top_dim(const AlgebraConfig& cfg, ModuleId m);

// matrix of the zero-mode action of a strong generator on the top component,
// straight from the fixed action tables
MatrixQ build_rep_block(const AlgebraConfig& cfg, ModuleId m, const GenId& g);

// top component bases for the sectors the product engine can act on
// (HatPlus: weight-0 even zero-mode monomials; Minus: the 2d depth-one states)
std::vector<State> top_basis(const AlgebraConfig& cfg, ModuleId m);

// o(a) on an untwisted top component computed directly through modes
MatrixQ direct_block_matrix(ProductEngine& eng, ModuleId m, const State& a);

// compares the table matrices against the direct mode computation on the
// untwisted blocks, and checks o(g * h) = o(g) o(h) there
SuiteReport oracle_rep_check(const AlgebraConfig& cfg);

struct AdAlgebra {
    AlgebraConfig cfg;
    long N = 0;
    std::vector<long> block_dims; // HatPlus, Minus, ThetaPlus, ThetaMinus
    std::vector<GenId> gens;
    std::vector<MatrixQ> gen_images;
    MatrixQ unit;
    MatrixQ omega;
    std::vector<MatrixQ> basis; // linear basis of the generated algebra
};

MatrixQ block_diag_image(const AlgebraConfig& cfg, const GenId& g);
AdAlgebra build_Ad(const AlgebraConfig& cfg);

// minimal polynomial of the omega image, its per-block factors, and their
// pairwise coprimality
SuiteReport coprimality_check(const AdAlgebra& ad);

// (dimension, coefficient vectors over ad.basis)
std::pair<long, std::vector<SparseVec>> center(const AdAlgebra& ad);
long center_dim(const AdAlgebra& ad);

// dimension of the space of linear functionals vanishing on commutators
long symmetric_functionals_dim(const AdAlgebra& ad);

struct InvariantsReport {
    long dim = 0;
    long expected = 0;
    // per even exterior degree 2k: dimension of the invariants there
    std::vector<std::pair<int, long>> lambda_blocks;
    bool omega_span = false; // invariants lie in the span of omega powers
    bool pass = false;
};

InvariantsReport sp_invariants(const AdAlgebra& ad);

// the rank-2 weight-4 invariant identity, checked blockwise on the
// mode-computable tops (the twisted tops have no table for weight-4 elements,
// which is reported, not hidden)
SuiteReport verify_j4(const AlgebraConfig& cfg);

struct ZhuTruncation {
    int cap = 0;
    long ambient = 0;
    long rows_used = 0;
    std::vector<std::pair<int, long>> qdims; // quotient dim at each sub-cap
    long dim = -1;
    bool stabilized = false;
    long expected = 0;
    bool pass = false;
    // d = 2 only: the weight-4 invariant identity as an O-span membership;
    // empty when the partial span could not certify it
    std::optional<bool> j4_member;
};

// truncated elimination against the circ-product span inside V_{<=cap}
ZhuTruncation direct_zhu_dim(const AlgebraConfig& cfg, int cap_weight);

} // namespace symfer
