#pragma once

#include "qinv/cgl.hpp"

namespace qinv {

// Symmetrizable generalized Cartan matrix with its minimal positive
// symmetrizer: d_i * gcm[i][j] == d_j * gcm[j][i].
struct CartanData {
  std::size_t rank = 0;
  std::vector<std::vector<long long>> gcm;
  std::vector<Int> d;
};

// Validates the matrix shape and derives d; throws on non-symmetrizable input.
CartanData make_cartan(const std::vector<std::vector<long long>>& gcm);
// "A1".."An", "B2"+, "C2"+, "D3"+, "G2", "F4".
CartanData cartan_type(const std::string& name);

// ||alpha_i||^2 = 2 d_i / min(d): a short root has squared length 2.  Throws
// when the normalization is not integral.
std::vector<Int> norms_sq(const CartanData& c);
// Invariant symmetric form in the same normalization, on root-lattice
// coordinate vectors.
Int pairing(const CartanData& c, const IntVec& a, const IntVec& b);

// Letters 1..rank.
using WeylWord = std::vector<std::size_t>;

// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) via s_i(v) = v - <row i, v> alpha_i.
std::vector<IntVec> roots_beta(const CartanData& c, const WeylWord& w);
// True iff every beta_k is a positive root and they are pairwise distinct.
bool is_reduced(const CartanData& c, const WeylWord& w);

struct SchubertInvariants {
  std::vector<ScalarElement> lambda_k;  // q^(-||alpha_{i_k}||^2) per letter
  std::vector<std::size_t> support;     // sorted distinct letters
  Int d_of_w;                           // gcd of support squared lengths
  ScalarSubgroup tw;                    // <q^d_of_w> over context {q}
};
// Requires a reduced word; internally asserts ||beta_k||^2 = ||alpha_{i_k}||^2.
SchubertInvariants schubert_invariants(const CartanData& c, const WeylWord& w);

// Symmetric skew-polynomial descriptor for the cell: levels are the letters,
// the commutation matrix is caller-supplied (entries over a context with a
// parameter named "q"), witnesses are solved from the root degrees
// sum m_i beta_i = beta_{p(k)} + beta_k, and the eigenvalues
// q^(-||alpha_{i_k}||^2) are cross-checked against the matrix.
CglDescriptor schubert_to_cgl(const CartanData& c, const WeylWord& w,
                              const Bicharacter& lambda_entries);

// Default commutation matrix over context {q}: entry (k, j) for k > j is
// q^(-(beta_k, beta_j)).
Bicharacter standard_cell_matrix(const CartanData& c, const WeylWord& w);

}  // namespace qinv
