#include "qinv/bicharacter.hpp"

#include <map>
#include <stdexcept>

namespace qinv {

namespace {

bool all_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

IntVec negated(const IntVec& v) {
  IntVec w = v;
  for (Int& x : w) x = -x;
  return w;
}

void add_into(IntVec& acc, const IntVec& v, const Int& coef) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += coef * v[i];
}

void check_shape(const Bicharacter& chi, const char* who) {
  if (chi.entries.size() != chi.rank * chi.rank)
    throw std::invalid_argument(std::string(who) + ": entry matrix has wrong size");
  for (const IntVec& e : chi.entries)
    if (e.size() != chi.ctx.arity())
      throw std::invalid_argument(std::string(who) + ": entry exponent length mismatch");
}

}  // namespace

Bicharacter trivial_bicharacter(const ScalarContext& ctx, std::size_t rank) {
  Bicharacter chi;
  chi.ctx = ctx;
  chi.rank = rank;
  chi.entries.assign(rank * rank, IntVec(ctx.arity(), Int(0)));
  return chi;
}

Bicharacter bicharacter_from_upper(const ScalarContext& ctx, std::size_t rank,
                                   const std::vector<ScalarElement>& upper) {
  if (upper.size() != rank * (rank - 1) / 2)
    throw std::invalid_argument("bicharacter_from_upper: expected rank*(rank-1)/2 entries");
  Bicharacter chi = trivial_bicharacter(ctx, rank);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) set_entry(chi, i, j, upper[k++]);
  return chi;
}

void set_entry(Bicharacter& chi, std::size_t i, std::size_t j, const ScalarElement& v) {
  if (i >= chi.rank || j >= chi.rank)
    throw std::invalid_argument("set_entry: index out of range");
  if (v.exp.size() != chi.ctx.arity())
    throw std::invalid_argument("set_entry: exponent length mismatch");
  if (i == j) {
    if (!all_zero(v.exp)) throw std::invalid_argument("set_entry: diagonal must be 1");
    return;
  }
  chi.entries[i * chi.rank + j] = v.exp;
  chi.entries[j * chi.rank + i] = negated(v.exp);
}

ScalarElement entry(const Bicharacter& chi, std::size_t i, std::size_t j) {
  return ScalarElement{chi.exp_at(i, j)};
}

bool is_alternating(const Bicharacter& chi) {
  if (chi.entries.size() != chi.rank * chi.rank) return false;
  for (const IntVec& e : chi.entries)
    if (e.size() != chi.ctx.arity()) return false;
  for (std::size_t i = 0; i < chi.rank; ++i) {
    if (!all_zero(chi.exp_at(i, i))) return false;
    for (std::size_t j = i + 1; j < chi.rank; ++j)
      if (chi.exp_at(j, i) != negated(chi.exp_at(i, j))) return false;
  }
  return true;
}

Bicharacter refine_bicharacter(const Bicharacter& chi) {
  Bicharacter fine = chi;
  fine.ctx = adjoin_square_roots(chi.ctx);
  for (IntVec& e : fine.entries)
    for (Int& x : e) x *= 2;
  return fine;
}

ScalarElement evaluate(const Bicharacter& chi, const IntVec& a, const IntVec& b) {
  if (a.size() != chi.rank || b.size() != chi.rank)
    throw std::invalid_argument("evaluate: vector length mismatch");
  check_shape(chi, "evaluate");
  IntVec acc(chi.ctx.arity(), Int(0));
  for (std::size_t i = 0; i < chi.rank; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < chi.rank; ++j) {
      if (b[j] == 0) continue;
      add_into(acc, chi.exp_at(i, j), a[i] * b[j]);
    }
  }
  return ScalarElement{acc};
}

ScalarSubgroup image_subgroup(const Bicharacter& chi, const Lattice& sub) {
  if (sub.ambient_rank != chi.rank)
    throw std::invalid_argument("image_subgroup: ambient rank mismatch");
  std::vector<ScalarElement> gens;
  for (std::size_t r = 0; r < sub.rank(); ++r) {
    IntVec b = sub.basis.row(r);
    for (std::size_t j = 0; j < chi.rank; ++j) {
      IntVec acc(chi.ctx.arity(), Int(0));
      for (std::size_t i = 0; i < chi.rank; ++i)
        if (b[i] != 0) add_into(acc, chi.exp_at(i, j), b[i]);
      gens.push_back(ScalarElement{acc});
    }
  }
  return generated_subgroup(chi.ctx, gens);
}

CocycleClass trivial_cocycle(const ScalarContext& ctx, std::size_t rank) {
  return CocycleClass{trivial_bicharacter(ctx, rank)};
}

Bicharacter csharp(const CocycleClass& c) {
  Bicharacter d = c.form;
  for (IntVec& e : d.entries)
    for (Int& x : e) x *= 2;
  return d;
}

CocycleClass product_class(const CocycleClass& c, const CocycleClass& d) {
  if (!(c.form.ctx == d.form.ctx) || c.form.rank != d.form.rank)
    throw std::invalid_argument("product_class: mixed classes");
  CocycleClass out = c;
  for (std::size_t k = 0; k < out.form.entries.size(); ++k)
    for (std::size_t m = 0; m < out.form.entries[k].size(); ++m)
      out.form.entries[k][m] += d.form.entries[k][m];
  return out;
}

CocycleClass cocycle_from_skew_ratios(const Bicharacter& ratios) {
  if (!is_alternating(ratios))
    throw std::invalid_argument("cocycle_from_skew_ratios: matrix is not skew");
  bool even = true;
  for (const IntVec& e : ratios.entries)
    for (const Int& x : e)
      if (x % 2 != 0) even = false;
  Bicharacter form = ratios;
  if (even) {
    for (IntVec& e : form.entries)
      for (Int& x : e) x /= 2;
  } else {
    // same exponents over the doubled grid denote the square roots
    form.ctx = adjoin_square_roots(ratios.ctx);
  }
  return CocycleClass{form};
}

CocycleClass cocycle_from_bilinear(const ScalarContext& ctx, std::size_t rank,
                                   const std::vector<IntVec>& bilinear) {
  if (bilinear.size() != rank * rank)
    throw std::invalid_argument("cocycle_from_bilinear: expected rank*rank entries");
  Bicharacter skew = trivial_bicharacter(ctx, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      const IntVec& fwd = bilinear[i * rank + j];
      const IntVec& bwd = bilinear[j * rank + i];
      if (fwd.size() != ctx.arity() || bwd.size() != ctx.arity())
        throw std::invalid_argument("cocycle_from_bilinear: entry exponent length mismatch");
      IntVec diff(ctx.arity());
      for (std::size_t m = 0; m < diff.size(); ++m) diff[m] = fwd[m] - bwd[m];
      set_entry(skew, i, j, ScalarElement{diff});
    }
  return cocycle_from_skew_ratios(skew);
}

Bicharacter twist_bicharacter(const Bicharacter& chi, const IntMatrix& phi,
                              const CocycleClass& c) {
  if (phi.rows() != chi.rank || phi.cols() != c.form.rank)
    throw std::invalid_argument("twist_bicharacter: grading shape mismatch");
  if (!(chi.ctx == c.form.ctx))
    throw std::invalid_argument("twist_bicharacter: context mismatch (refine chi first)");
  Bicharacter sharp = csharp(c);
  Bicharacter out = chi;
  for (std::size_t i = 0; i < chi.rank; ++i)
    for (std::size_t j = i + 1; j < chi.rank; ++j) {
      ScalarElement shift = evaluate(sharp, phi.row(i), phi.row(j));
      set_entry(out, i, j, scalar_mul(entry(chi, i, j), shift));
    }
  return out;
}

CocycleTable tabulate_bilinear_cocycle(const ScalarContext& ctx, std::size_t rank,
                                       const std::vector<IntVec>& bilinear,
                                       const std::vector<IntVec>& points) {
  if (bilinear.size() != rank * rank)
    throw std::invalid_argument("tabulate_bilinear_cocycle: expected rank*rank entries");
  CocycleTable table;
  table.points = points;
  table.values.resize(points.size());
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = 0; b < points.size(); ++b) {
      IntVec acc(ctx.arity(), Int(0));
      for (std::size_t i = 0; i < rank; ++i) {
        if (points[a][i] == 0) continue;
        for (std::size_t j = 0; j < rank; ++j)
          if (points[b][j] != 0)
            add_into(acc, bilinear[i * rank + j], points[a][i] * points[b][j]);
      }
      table.values[a].push_back(ScalarElement{acc});
    }
  return table;
}

bool verify_cocycle_identity(const ScalarContext& ctx, const CocycleTable& table) {
  const std::size_t n = table.points.size();
  if (table.values.size() != n)
    throw std::invalid_argument("verify_cocycle_identity: ragged value matrix");
  for (const auto& row : table.values)
    if (row.size() != n)
      throw std::invalid_argument("verify_cocycle_identity: ragged value matrix");
  std::map<IntVec, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(table.points[i], i).second)
      throw std::invalid_argument("verify_cocycle_identity: duplicate grid point");

  auto sum_index = [&](const IntVec& a, const IntVec& b) -> const std::size_t* {
    IntVec s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
    auto it = index.find(s);
    return it == index.end() ? nullptr : &it->second;
  };

  bool checked = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t* ij = sum_index(table.points[i], table.points[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t* jk = sum_index(table.points[j], table.points[k]);
        if (!ij || !jk) continue;
        checked = true;
        ScalarElement lhs = scalar_mul(table.values[i][*jk], table.values[j][k]);
        ScalarElement rhs = scalar_mul(table.values[*ij][k], table.values[i][j]);
        if (!scalar_equal(ctx, lhs, rhs)) return false;
      }
    }
  if (!checked)
    throw std::invalid_argument("verify_cocycle_identity: grid not closed under any needed addition");
  return true;
}

}  // namespace qinv
