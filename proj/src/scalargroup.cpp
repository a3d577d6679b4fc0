#include "qinv/scalargroup.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qinv {

namespace {

std::size_t param_index(const ScalarContext& ctx, const std::string& name) {
  for (std::size_t i = 0; i < ctx.params.size(); ++i)
    if (ctx.params[i] == name) return i;
  throw std::invalid_argument("unknown parameter: " + name);
}

void check_arity(const ScalarContext& ctx, const ScalarElement& s, const char* who) {
  if (s.exp.size() != ctx.arity())
    throw std::invalid_argument(std::string(who) + ": exponent length does not match context");
}

IntVec doubled(const IntVec& v) {
  IntVec w = v;
  for (Int& x : w) x *= 2;
  return w;
}

std::vector<IntVec> doubled_rows(const Lattice& l) {
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < l.rank(); ++i) rows.push_back(doubled(l.basis.row(i)));
  return rows;
}

}  // namespace

ScalarContext make_context(std::vector<std::string> params,
                           const std::vector<IntVec>& relation_rows) {
  std::set<std::string> seen;
  for (const std::string& p : params) {
    if (p.empty()) throw std::invalid_argument("empty parameter name");
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate parameter: " + p);
  }
  for (const IntVec& r : relation_rows)
    if (r.size() != params.size())
      throw std::invalid_argument("relation row length does not match parameter count");
  ScalarContext ctx;
  ctx.relations = lattice_from_rows(params.size(), relation_rows);
  ctx.params = std::move(params);
  return ctx;
}

ScalarElement scalar_one(const ScalarContext& ctx) {
  return ScalarElement{IntVec(ctx.arity(), Int(0))};
}

ScalarElement scalar_param(const ScalarContext& ctx, const std::string& name, Int power) {
  ScalarElement s = scalar_one(ctx);
  s.exp[param_index(ctx, name)] = power;
  return s;
}

ScalarElement scalar_from_exponents(const ScalarContext& ctx, IntVec exp) {
  ScalarElement s{std::move(exp)};
  check_arity(ctx, s, "scalar_from_exponents");
  return s;
}

ScalarElement scalar_mul(const ScalarElement& a, const ScalarElement& b) {
  if (a.exp.size() != b.exp.size())
    throw std::invalid_argument("scalar_mul: mixed contexts");
  ScalarElement c = a;
  for (std::size_t i = 0; i < c.exp.size(); ++i) c.exp[i] += b.exp[i];
  return c;
}

ScalarElement scalar_inverse(const ScalarElement& a) {
  ScalarElement c = a;
  for (Int& x : c.exp) x = -x;
  return c;
}

ScalarElement scalar_pow(const ScalarElement& a, const Int& k) {
  ScalarElement c = a;
  for (Int& x : c.exp) x *= k;
  return c;
}

bool scalar_equal(const ScalarContext& ctx, const ScalarElement& a, const ScalarElement& b) {
  check_arity(ctx, a, "scalar_equal");
  check_arity(ctx, b, "scalar_equal");
  IntVec diff(a.exp.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = a.exp[i] - b.exp[i];
  return contains(ctx.relations, diff);
}

bool scalar_is_one(const ScalarContext& ctx, const ScalarElement& a) {
  return scalar_equal(ctx, a, scalar_one(ctx));
}

ScalarSubgroup trivial_subgroup(const ScalarContext& ctx) {
  return ScalarSubgroup{ctx, ctx.relations};
}

ScalarSubgroup generated_subgroup(const ScalarContext& ctx,
                                  const std::vector<ScalarElement>& gens) {
  std::vector<IntVec> rows;
  for (const ScalarElement& s : gens) {
    check_arity(ctx, s, "generated_subgroup");
    rows.push_back(s.exp);
  }
  for (std::size_t i = 0; i < ctx.relations.rank(); ++i)
    rows.push_back(ctx.relations.basis.row(i));
  return ScalarSubgroup{ctx, lattice_from_rows(ctx.arity(), rows)};
}

ScalarSubgroup subgroup_join(const ScalarSubgroup& a, const ScalarSubgroup& b) {
  if (!(a.ctx == b.ctx)) throw std::invalid_argument("subgroup_join: mixed contexts");
  return ScalarSubgroup{a.ctx, lattice_sum(a.lattice, b.lattice)};
}

bool is_member(const ScalarSubgroup& g, const ScalarElement& s) {
  check_arity(g.ctx, s, "is_member");
  return contains(g.lattice, s.exp);
}

bool is_trivial(const ScalarSubgroup& g) { return g.lattice == g.ctx.relations; }

QuotientShape quotient_shape(const ScalarSubgroup& g) {
  QuotientShape shape;
  std::size_t rl = g.lattice.rank(), rr = g.ctx.relations.rank();
  if (rr == 0) {
    shape.free_rank = rl;
    return shape;
  }
  // relations sit inside the subgroup lattice; their coordinates present the
  // quotient as Z^rl modulo the rows of c
  IntMatrix c(rr, rl);
  for (std::size_t i = 0; i < rr; ++i) {
    auto x = coordinates(g.lattice, g.ctx.relations.basis.row(i));
    if (!x) throw std::logic_error("quotient_shape: relations escape the subgroup lattice");
    for (std::size_t j = 0; j < rl; ++j) c.at(i, j) = (*x)[j];
  }
  std::size_t nonzero = 0;
  for (const Int& d : snf(c).invariant_factors)
    if (d != 0) {
      ++nonzero;
      if (d > 1) shape.torsion.push_back(d);
    }
  shape.free_rank = rl - nonzero;
  return shape;
}

bool is_cyclic(const ScalarSubgroup& g) {
  QuotientShape s = quotient_shape(g);
  return s.free_rank + s.torsion.size() <= 1;
}

GroupOrder cardinality(const ScalarSubgroup& g) {
  QuotientShape s = quotient_shape(g);
  if (s.free_rank > 0) return GroupOrder{false, 0};
  Int order = 1;
  for (const Int& d : s.torsion) order *= d;
  return GroupOrder{true, order};
}

ScalarContext adjoin_square_roots(const ScalarContext& ctx) {
  ScalarContext fine = ctx;
  fine.scale *= 2;
  fine.relations = lattice_from_rows(ctx.arity(), doubled_rows(ctx.relations));
  return fine;
}

ScalarElement refine_element(const ScalarElement& s) { return ScalarElement{doubled(s.exp)}; }

ScalarSubgroup refine_subgroup(const ScalarSubgroup& g) {
  return ScalarSubgroup{adjoin_square_roots(g.ctx),
                        lattice_from_rows(g.lattice.ambient_rank, doubled_rows(g.lattice))};
}

ScalarElement square_root(const ScalarElement& s) {
  ScalarElement r = s;
  for (Int& x : r.exp) {
    if (x % 2 != 0) throw std::invalid_argument("square_root: odd exponent");
    x /= 2;
  }
  return r;
}

std::string to_string(const ScalarContext& ctx, const ScalarElement& s) {
  check_arity(ctx, s, "to_string");
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < s.exp.size(); ++i) {
    if (s.exp[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(s.exp[i]), ctx.scale);
    Int num = s.exp[i] / g, den = ctx.scale / g;
    out << ctx.params[i];
    if (den == 1) {
      if (num != 1) out << "^" << num;
    } else {
      out << "^(" << num << "/" << den << ")";
    }
  }
  if (first) out << "1";
  return out.str();
}

std::vector<std::string> generator_monomials(const ScalarSubgroup& g) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.lattice.rank(); ++i) {
    IntVec row = g.lattice.basis.row(i);
    // rows inside the relation lattice present the identity scalar
    if (contains(g.ctx.relations, row)) continue;
    out.push_back(to_string(g.ctx, ScalarElement{row}));
  }
  return out;
}

}  // namespace qinv
