#pragma once

#include "qinv/scalargroup.hpp"

namespace qinv {

// Alternating bicharacter on Z^rank with values in the context's scalar
// group, stored as the rank x rank matrix of exponent vectors at the standard
// basis: diag entries zero, entries[j][i] = -entries[i][j].  Values at
// arbitrary vectors extend bilinearly.
struct Bicharacter {
  ScalarContext ctx;
  std::size_t rank = 0;
  std::vector<IntVec> entries;  // rank*rank exponent vectors, row-major

  const IntVec& exp_at(std::size_t i, std::size_t j) const { return entries[i * rank + j]; }
  bool operator==(const Bicharacter&) const = default;
};

Bicharacter trivial_bicharacter(const ScalarContext& ctx, std::size_t rank);
// Entries for i < j in row-major order, n(n-1)/2 of them.
Bicharacter bicharacter_from_upper(const ScalarContext& ctx, std::size_t rank,
                                   const std::vector<ScalarElement>& upper);
// Writes (i, j) and its negated mirror; (i, i) accepts only the identity.
void set_entry(Bicharacter& chi, std::size_t i, std::size_t j, const ScalarElement& v);
ScalarElement entry(const Bicharacter& chi, std::size_t i, std::size_t j);
// Structural validation for deserialized data.
bool is_alternating(const Bicharacter& chi);
// All entries doubled into the square-root-refined context.
Bicharacter refine_bicharacter(const Bicharacter& chi);

// prod chi(e_i, e_j)^(a_i b_j)
ScalarElement evaluate(const Bicharacter& chi, const IntVec& a, const IntVec& b);

// Subgroup generated by chi(b, e_j) over basis rows b of sub and all j.
ScalarSubgroup image_subgroup(const Bicharacter& chi, const Lattice& sub);

// Cohomology class of a 2-cocycle on Z^rank, carried by its alternating
// bilinear representative: c(s, t) = prod form_{ij}^(s_i t_j).  The induced
// commutation change is csharp = c(s,t)/c(t,s), the doubled form.
struct CocycleClass {
  Bicharacter form;
  bool operator==(const CocycleClass&) const = default;
};

CocycleClass trivial_cocycle(const ScalarContext& ctx, std::size_t rank);
Bicharacter csharp(const CocycleClass& c);
// Twisting by c then d composes additively on forms.
CocycleClass product_class(const CocycleClass& c, const CocycleClass& d);
// Alternating square root of a skew ratio matrix: form^2 = ratios.  Halves
// even exponent matrices in place; otherwise re-reads the same exponents on
// the square-root-refined grid (adjoin_square_roots), which halves them.
CocycleClass cocycle_from_skew_ratios(const Bicharacter& ratios);
// Class of an arbitrary bilinear cocycle given by a rank*rank exponent
// matrix b (row-major): form = (b - b^T)/2, refining the grid when odd.
CocycleClass cocycle_from_bilinear(const ScalarContext& ctx, std::size_t rank,
                                   const std::vector<IntVec>& bilinear);

// chi_c: entries (i, j) = chi(e_i, e_j) + csharp(phi e_i, phi e_j), where
// phi maps Z^n to Z^r by rows of an n x r matrix.  Shared context required;
// refine chi first when the class lives on the finer grid.
Bicharacter twist_bicharacter(const Bicharacter& chi, const IntMatrix& phi,
                              const CocycleClass& c);

// Explicit values of a candidate cocycle on a finite set of points of Z^r;
// values[i][j] sits at (points[i], points[j]).
struct CocycleTable {
  std::vector<IntVec> points;
  std::vector<std::vector<ScalarElement>> values;
};

CocycleTable tabulate_bilinear_cocycle(const ScalarContext& ctx, std::size_t rank,
                                       const std::vector<IntVec>& bilinear,
                                       const std::vector<IntVec>& points);

// c(s, t+u) c(t, u) == c(s+t, u) c(s, t) for every in-grid triple, compared
// modulo the context's relations.  Throws when no triple is checkable.
bool verify_cocycle_identity(const ScalarContext& ctx, const CocycleTable& table);

}  // namespace qinv
