#pragma once

#include "qinv/cluster.hpp"

#include <map>
#include <optional>

namespace qinv {

// One recorded monomial of the skew derivation attached to variable k:
// delta_k(x_j) contains the monomial x^m (exponents over variables 0..k-1).
struct DeltaWitness {
  std::size_t j = 0;  // the variable delta_k acts on, j < k
  IntVec m;           // length k, entries >= 0
};

// Iterated skew polynomial presentation x_1..x_n with torus action: all
// formulas below consume only the commutation matrix lambda_{kj} (entry(k, j)
// for k > j), the eta level sets, the eigenvalues lambda_k, and one witness
// monomial per variable whose derivation is nonzero.
struct CglDescriptor {
  Bicharacter lambda;
  std::vector<long long> eta;                      // length nvars
  std::map<std::size_t, DeltaWitness> delta_witness;  // keys: k with delta_k != 0
  std::map<std::size_t, ScalarElement> lambda_k;      // same keys
  std::optional<GradingMap> grading_pi;            // default: degree_map_hmax
  bool symmetric = false;
  std::string label;

  std::size_t nvars() const { return lambda.rank; }
  const ScalarContext& ctx() const { return lambda.ctx; }
};

// Variables with nonzero derivation (witness keys) and their complement.
std::vector<std::size_t> exceptional_set(const CglDescriptor& d);
std::vector<std::size_t> homogeneous_set(const CglDescriptor& d);

// p[k] = max { j < k : eta[j] = eta[k] }, -1 when none; o_minus[k] counts the
// iterations until the chain leaves off.
struct PredecessorData {
  std::vector<std::ptrdiff_t> p;
  std::vector<std::size_t> o_minus;
};
PredecessorData predecessor(const std::vector<long long>& eta);

// beta(e_k) = sum of e over the predecessor chain of k; q = lambda pulled
// back through beta is the commutation matrix of the associated cluster.
struct ClusterData {
  Bicharacter q;
  IntMatrix beta;  // rows = beta(e_k); unitriangular
};
ClusterData cluster_matrix(const CglDescriptor& d);

// The finest torus grading: images of the witness-free variables are the
// standard basis of Z^#homogeneous, the rest follow the recursion
// pi(e_k) = -pi(e_{j_k}) + sum m_{k,i} pi(e_i).
GradingMap degree_map_hmax(const CglDescriptor& d);

// b_k = e_k + e_{j_k} - sum m_{k,i} e_i for each witness key; checked to lie
// in ker pi and (jointly) to be a basis of it.
std::vector<IntVec> kernel_vectors(const CglDescriptor& d, const GradingMap& pi);

// Commutation subgroup <lambda entries>; cross-checked against the cluster
// matrix subgroup <q>.
ScalarSubgroup ad_cgl(const CglDescriptor& d);

// Twist invariant: <lambda_k; lambda(b_k, e_i) for homogeneous i < k>,
// cross-checked against the sandwich route through the cluster matrix; the
// symmetric flag additionally collapses the generators to the lambda_k alone
// after validation.
ScalarSubgroup tw_cgl(const CglDescriptor& d);

struct SymmetricReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;  // e.g. torsion eigenvalues
};
// Checks the symmetric witness shape (j_k the predecessor, monomial supported
// strictly between) and the pairing pattern lambda(b_k, e_j): trivial off
// {p(k), k}, the eigenvalue at k, its inverse at p(k).
SymmetricReport validate_symmetric(const CglDescriptor& d);

// The sandwich seen by the cluster: chi = q, grading = pi after beta.
SandwichDescriptor cluster_sandwich(const CglDescriptor& d);

// n x n quantum matrices in the generic two-parameter family (lambda, p_ij);
// variables X_11, X_12, ..., X_nn in row-major order.
CglDescriptor quantum_matrices_descriptor(std::size_t n);
// Same presentation specialized to lambda = q^-2, p_ij = q^-1 over {q}.
CglDescriptor standard_quantum_matrices_descriptor(std::size_t n);
// Rank-n quantized Weyl algebra in the order y_n, ..., y_1, x_1, ..., x_n
// over parameters q_1..q_n and p_ij.
CglDescriptor quantized_weyl_descriptor(std::size_t n);
// Skew polynomial ring with the given commutation matrix; no derivations.
CglDescriptor quantum_affine_descriptor(Bicharacter q, std::string label);

// Independent route for the Weyl algebra: the cluster on z_1..z_n, y_1..y_n
// with deg z = 0, deg y_j = -e_j (z_k = x_k y_k - y_k x_k).
SandwichDescriptor weyl_sandwich_descriptor(std::size_t n);

}  // namespace qinv
