#pragma once

#include "qinv/zlattice.hpp"

#include <string>

namespace qinv {

// Multiplicative bookkeeping done additively: an exponent vector a over the
// parameters p_1..p_m denotes prod p_i^(a_i / scale).  Relation rows are
// exponent vectors declared equal to 1 (e.g. 6*e_q for q^6 = 1), so two
// elements agree iff their difference lies in the relation lattice.
struct ScalarContext {
  std::vector<std::string> params;
  Lattice relations;  // ambient rank = params.size()
  Int scale = 1;      // power of 2, denominator of the exponent grid

  std::size_t arity() const { return params.size(); }
  bool operator==(const ScalarContext&) const = default;
};

// Validates that names are nonempty and unique; relation rows are HNF-reduced.
ScalarContext make_context(std::vector<std::string> params,
                           const std::vector<IntVec>& relation_rows = {});

// Bare exponent vector; the owning context supplies names, scale and the
// relation lattice.  Operations check only vector length, so keeping elements
// paired with the right context is the caller's job.
struct ScalarElement {
  IntVec exp;
};

ScalarElement scalar_one(const ScalarContext& ctx);
ScalarElement scalar_param(const ScalarContext& ctx, const std::string& name, Int power = 1);
ScalarElement scalar_from_exponents(const ScalarContext& ctx, IntVec exp);
ScalarElement scalar_mul(const ScalarElement& a, const ScalarElement& b);
ScalarElement scalar_inverse(const ScalarElement& a);
ScalarElement scalar_pow(const ScalarElement& a, const Int& k);
bool scalar_equal(const ScalarContext& ctx, const ScalarElement& a, const ScalarElement& b);
bool scalar_is_one(const ScalarContext& ctx, const ScalarElement& a);

// Subgroup of K^x generated by monomials in the parameters, canonicalized as
// the HNF lattice of exponents.  Always absorbs the relation lattice, so
// structural equality is group equality.
struct ScalarSubgroup {
  ScalarContext ctx;
  Lattice lattice;  // HNF; contains ctx.relations

  bool operator==(const ScalarSubgroup&) const = default;
};

ScalarSubgroup trivial_subgroup(const ScalarContext& ctx);
ScalarSubgroup generated_subgroup(const ScalarContext& ctx,
                                  const std::vector<ScalarElement>& gens);
ScalarSubgroup subgroup_join(const ScalarSubgroup& a, const ScalarSubgroup& b);
bool is_member(const ScalarSubgroup& g, const ScalarElement& s);
bool is_trivial(const ScalarSubgroup& g);

// Isomorphism type of lattice/relations: free rank plus the nontrivial
// invariant factors (divisibility chain) of the torsion part.
struct QuotientShape {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
};
QuotientShape quotient_shape(const ScalarSubgroup& g);
bool is_cyclic(const ScalarSubgroup& g);

struct GroupOrder {
  bool finite = false;
  Int order = 0;  // meaningful only when finite
};
GroupOrder cardinality(const ScalarSubgroup& g);

// Refined context on the same parameter names whose grid admits square roots
// of everything previously expressible: scale doubles, existing data embeds
// by doubling exponents.
ScalarContext adjoin_square_roots(const ScalarContext& ctx);
ScalarElement refine_element(const ScalarElement& s);
ScalarSubgroup refine_subgroup(const ScalarSubgroup& g);
// Halves the exponent vector; requires every entry even.
ScalarElement square_root(const ScalarElement& s);

// "q^2*p12^-1"; fractional exponents appear as q^(3/2) under a refined grid.
std::string to_string(const ScalarContext& ctx, const ScalarElement& s);
// One monomial per HNF basis row of the subgroup lattice.
std::vector<std::string> generator_monomials(const ScalarSubgroup& g);

}  // namespace qinv
