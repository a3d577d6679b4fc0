#pragma once

#include "qinv/bicharacter.hpp"
#include "qinv/cluster.hpp"
#include "qinv/errors.hpp"

#include <map>
#include <utility>

namespace qinv {

// Z-linear combination of scalar monomials keyed by exponent vector: the
// integral group ring of the (free) scalar group.  No zero coefficients
// stored, so structural equality is ring equality.
struct CoefficientPoly {
  std::map<IntVec, Int> terms;

  bool operator==(const CoefficientPoly&) const = default;
};

CoefficientPoly poly_zero();
CoefficientPoly poly_from_scalar(const ScalarElement& s, const Int& c = 1);
CoefficientPoly poly_add(const CoefficientPoly& a, const CoefficientPoly& b);
CoefficientPoly poly_negate(const CoefficientPoly& a);
CoefficientPoly poly_mul(const CoefficientPoly& a, const CoefficientPoly& b);
CoefficientPoly poly_mul_scalar(const CoefficientPoly& a, const ScalarElement& s);
bool poly_is_zero(const CoefficientPoly& a);

// Element in PBW normal form: multi-index a maps the ordered monomial
// x_1^(a_1) ... x_N^(a_N) to its coefficient.  Exponents may be negative
// only at invertible variables.
struct NcElement {
  std::map<IntVec, CoefficientPoly> terms;

  bool operator==(const NcElement&) const = default;
};

NcElement nc_zero();
NcElement nc_one(const ScalarContext& ctx, std::size_t nvars);
NcElement nc_monomial(const IntVec& index, const CoefficientPoly& c);
NcElement nc_add(const NcElement& a, const NcElement& b);
NcElement nc_sub(const NcElement& a, const NcElement& b);
NcElement nc_scale(const NcElement& a, const ScalarElement& s);
bool nc_is_zero(const NcElement& a);

// Iterated skew polynomial presentation on x_1 < ... < x_N: for k > j the
// rewrite x_k x_j -> lambda_kj x_j x_k + delta_kj, with lambda_kj read off
// the alternating matrix and delta terms stored as explicit normal forms
// over the variables below k.  Invertible variables carry no delta.
struct OrePresentation {
  Bicharacter lambda;
  std::map<std::pair<std::size_t, std::size_t>, NcElement> delta;
  std::vector<bool> invertible;

  std::size_t nvars() const { return lambda.rank; }
  const ScalarContext& ctx() const { return lambda.ctx; }
};

// Validates the shape; rejects contexts with relations (the engine works in
// the group ring of a free scalar group), delta keys that are not k > j,
// delta monomials reaching variable k or using negative exponents, and any
// delta attached to an invertible variable.
OrePresentation make_ore(Bicharacter lambda,
                         std::map<std::pair<std::size_t, std::size_t>, NcElement> delta,
                         std::vector<bool> invertible);

// Commutation-only presentations straight from a matrix.
OrePresentation quantum_space_presentation(const Bicharacter& chi);
OrePresentation quantum_torus_presentation(const Bicharacter& chi);

// Quantized Weyl algebra on interleaved generators y_1, x_1, ..., y_n, x_n
// with scalars Q = (q_1..q_n) and the skew-symmetric P; the generic overload
// allocates fresh parameters q1..qn, p12, ...
OrePresentation weyl_presentation(const std::vector<ScalarElement>& q_values,
                                  const Bicharacter& p_matrix);
OrePresentation weyl_presentation(std::size_t n);

// Generic n x n quantum matrices on lexicographic X_11, ..., X_nn with
// parameters lambda and p_ij.
OrePresentation quantum_matrices_presentation(std::size_t n);

struct StraightenOptions {
  std::size_t term_cap = 100000;
};

// Product of generator powers reduced to PBW normal form.  Terminates since
// each rewrite either drops the top variable multiset or removes an
// inversion; refuses to grow past the term budget.
using GenWord = std::vector<std::pair<std::size_t, long long>>;
NcElement straighten(const OrePresentation& p, const GenWord& word,
                     const StraightenOptions& opt = {});

// Product of two normal forms under the same presentation.
NcElement nc_mul(const OrePresentation& p, const NcElement& a, const NcElement& b,
                 const StraightenOptions& opt = {});

// Scalar of the group commutator y^a y^b y^(-a) y^(-b) in the quantum torus
// of chi, computed by letter-by-letter straightening rather than the
// bilinear pairing formula.
ScalarElement torus_commutator_scalar(const Bicharacter& chi, const IntVec& a,
                                      const IntVec& b);

// Subgroup generated by all torus commutator scalars with both exponent
// vectors in the box [-radius, radius]^rank.
ScalarSubgroup ad_bruteforce(const Bicharacter& chi, long long radius);

// Product a *_c b = c(phi a, phi b) . (a b) of two torus monomials, with the
// plain product straightened under chi.
NcElement twisted_product(const Bicharacter& chi, const GradingMap& phi,
                          const CocycleClass& c, const IntVec& a, const IntVec& b);

struct WeylReport {
  bool ok = true;
  std::vector<std::string> checks;
  std::vector<std::string> failures;
};

// Builds z_k = x_k y_k - y_k x_k by straightening and verifies the scaled
// commutation of every z_k with every generator and with the other z_l.
WeylReport verify_weyl_normal_elements(const std::vector<ScalarElement>& q_values,
                                       const Bicharacter& p_matrix);
WeylReport verify_weyl_normal_elements(std::size_t n);

}  // namespace qinv
