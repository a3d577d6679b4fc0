#include "qinv/cluster.hpp"

#include <sstream>

namespace qinv {

GradingMap grading_from_rows(std::size_t target_rank, const std::vector<IntVec>& rows) {
  return GradingMap{IntMatrix::from_rows(rows, target_rank)};
}

GradingMap identity_grading(std::size_t n) { return GradingMap{IntMatrix::identity(n)}; }

Lattice grading_kernel(const GradingMap& phi) { return kernel_basis(phi.matrix); }

SandwichDescriptor make_sandwich(Bicharacter chi, GradingMap phi, std::string label) {
  if (phi.matrix.rows() != chi.rank)
    throw std::invalid_argument("make_sandwich: grading rows must match cluster rank");
  if (!is_alternating(chi))
    throw std::invalid_argument("make_sandwich: commutation matrix is not alternating");
  return SandwichDescriptor{std::move(chi), std::move(phi), std::move(label)};
}

ScalarSubgroup ad_invariant(const SandwichDescriptor& d) {
  return image_subgroup(d.chi, full_lattice(d.chi.rank));
}

ScalarSubgroup tw_invariant(const SandwichDescriptor& d) {
  std::size_t want = d.phi.target_rank(), got = rank(d.phi.matrix);
  if (got != want) {
    std::ostringstream msg;
    msg << "grading map is not surjective: target rank " << want << ", found rank " << got;
    throw PreconditionError(msg.str());
  }
  return image_subgroup(d.chi, grading_kernel(d.phi));
}

SandwichDescriptor apply_twist(const SandwichDescriptor& d, const CocycleClass& c) {
  return make_sandwich(twist_bicharacter(d.chi, d.phi.matrix, c), d.phi, d.label);
}

SandwichDescriptor refine_descriptor(const SandwichDescriptor& d) {
  return SandwichDescriptor{refine_bicharacter(d.chi), d.phi, d.label};
}

SandwichDescriptor polynomial_extend(const SandwichDescriptor& d, std::size_t s) {
  std::size_t n = d.chi.rank, r = d.phi.target_rank();
  Bicharacter chi = trivial_bicharacter(d.ctx(), n + s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) set_entry(chi, i, j, entry(d.chi, i, j));
  IntMatrix phi(n + s, r + s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) phi.at(i, j) = d.phi.matrix.at(i, j);
  for (std::size_t i = 0; i < s; ++i) phi.at(n + i, r + i) = 1;
  return make_sandwich(std::move(chi), GradingMap{std::move(phi)}, d.label);
}

PiReport is_pi(const SandwichDescriptor& d) {
  GroupOrder card = cardinality(ad_invariant(d));
  return PiReport{card.finite, card};
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::TwistTrivial: return "twist-trivial";
    case Classification::EssentiallyUniparameter: return "essentially-uniparameter";
    case Classification::TrulyMultiparameter: return "truly-multiparameter";
  }
  return "unknown";
}

Classification uniparameter_report(const SandwichDescriptor& d) {
  ScalarSubgroup tw = tw_invariant(d);
  if (is_trivial(tw)) return Classification::TwistTrivial;
  if (is_cyclic(tw)) return Classification::EssentiallyUniparameter;
  return Classification::TrulyMultiparameter;
}

CocycleClass block_killing_cocycle(const SandwichDescriptor& d) {
  std::size_t n = d.chi.rank, r = d.phi.target_rank();
  if (n < r)
    throw PreconditionError("block-killing cocycle: grading target exceeds cluster rank");
  SnfResult s = snf(d.phi.matrix);
  for (const Int& div : s.invariant_factors)
    if (div != 1) {
      std::ostringstream msg;
      msg << "block-killing cocycle needs a genuinely surjective grading"
          << " (elementary divisor " << div << ")";
      throw PreconditionError(msg.str());
    }
  // rows 1..r of the left transform are a section of phi: row i maps to row i
  // of right^-1, a basis of Z^r; rows r+1..n span the kernel.  Killing the
  // section-section pairings is what the class below does.
  Bicharacter section_chi = trivial_bicharacter(d.ctx(), r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      set_entry(section_chi, i, j, evaluate(d.chi, s.left.row(i), s.left.row(j)));
  // pull back through right^-1: target(a, b) = -section_chi(V_a, V_b) makes
  // csharp(phi u_i, phi u_j) the exact inverse of chi(u_i, u_j)
  Bicharacter target = trivial_bicharacter(d.ctx(), r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      set_entry(target, a, b,
                scalar_inverse(evaluate(section_chi, s.right.row(a), s.right.row(b))));
  return cocycle_from_skew_ratios(target);
}

}  // namespace qinv
