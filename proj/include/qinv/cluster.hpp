#pragma once

#include "qinv/bicharacter.hpp"
#include "qinv/errors.hpp"

#include <string>

namespace qinv {

// Z^n -> Z^r, v |-> v * matrix (rows are the images of the e_i).
struct GradingMap {
  IntMatrix matrix;

  std::size_t source_rank() const { return matrix.rows(); }
  std::size_t target_rank() const { return matrix.cols(); }
  bool operator==(const GradingMap&) const = default;
};

GradingMap grading_from_rows(std::size_t target_rank, const std::vector<IntVec>& rows);
GradingMap identity_grading(std::size_t n);
Lattice grading_kernel(const GradingMap& phi);

// An algebra pinned between a skew polynomial ring and its quantum torus:
// chi records the commutation scalars of the cluster, phi the grading by
// Z^r under which the cluster generators are homogeneous.
struct SandwichDescriptor {
  Bicharacter chi;  // carries the scalar context
  GradingMap phi;   // chi.rank rows
  std::string label;

  const ScalarContext& ctx() const { return chi.ctx; }
  bool operator==(const SandwichDescriptor&) const = default;
};

// Validates shape: phi has chi.rank rows, chi alternating.
SandwichDescriptor make_sandwich(Bicharacter chi, GradingMap phi, std::string label);

// <all chi(e_i, e_j)>: the commutation subgroup of the cluster.
ScalarSubgroup ad_invariant(const SandwichDescriptor& d);

// <chi(ker phi, Z^n)>.  Requires phi of full target rank; the kernel pairing
// is what survives every cocycle twist of the grading.
ScalarSubgroup tw_invariant(const SandwichDescriptor& d);

// Same grading, chi composed with the commutation change of the class.
SandwichDescriptor apply_twist(const SandwichDescriptor& d, const CocycleClass& c);

// Descriptor re-read on the square-root-refined exponent grid.
SandwichDescriptor refine_descriptor(const SandwichDescriptor& d);

// s central polynomial variables, graded by fresh Z factors: chi gains zero
// rows/columns, phi maps each new generator to a new basis vector of Z^(r+s).
SandwichDescriptor polynomial_extend(const SandwichDescriptor& d, std::size_t s);

struct PiReport {
  bool pi = false;
  GroupOrder card;
};
// Finite commutation subgroup <=> polynomial identity; card is the order.
PiReport is_pi(const SandwichDescriptor& d);

enum class Classification { TwistTrivial, EssentiallyUniparameter, TrulyMultiparameter };
std::string to_string(Classification c);
// Keyed to tw: trivial, cyclic nontrivial, or not cyclic.
Classification uniparameter_report(const SandwichDescriptor& d);

// Class killing every commutation scalar between the complement-of-kernel
// generators, so that ad of the twisted descriptor collapses onto tw.
// Requires phi genuinely surjective (all elementary divisors 1); the result
// may live on the refined grid, in which case compare against the refined
// descriptor.
CocycleClass block_killing_cocycle(const SandwichDescriptor& d);

}  // namespace qinv
