#include "qinv/cgl.hpp"

#include "qinv/errors.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace qinv {

namespace {

void check_descriptor(const CglDescriptor& d) {
  std::size_t n = d.nvars();
  if (d.eta.size() != n)
    throw std::invalid_argument("level vector length differs from the variable count");
  if (!is_alternating(d.lambda))
    throw std::invalid_argument("commutation matrix is not alternating");
  for (const auto& [k, w] : d.delta_witness) {
    if (k >= n) throw std::invalid_argument("witness key out of range");
    if (w.j >= k)
      throw std::invalid_argument("witness target must precede its variable");
    if (w.m.size() != k)
      throw std::invalid_argument("witness monomial has the wrong length");
    for (const Int& e : w.m)
      if (e < 0) throw std::invalid_argument("witness monomial exponents must be nonnegative");
  }
  if (d.lambda_k.size() != d.delta_witness.size())
    throw std::invalid_argument("eigenvalue keys must match witness keys");
  for (const auto& [k, v] : d.lambda_k) {
    if (d.delta_witness.count(k) == 0)
      throw std::invalid_argument("eigenvalue keys must match witness keys");
    if (v.exp.size() != d.ctx().arity())
      throw std::invalid_argument("eigenvalue exponent arity mismatch");
  }
  if (d.grading_pi && d.grading_pi->source_rank() != n)
    throw std::invalid_argument("grading source rank differs from the variable count");
}

IntVec unit(std::size_t n, std::size_t i) {
  IntVec v(n, Int(0));
  v[i] = 1;
  return v;
}

// b_k = e_k + e_{j_k} - sum_i m_{k,i} e_i; independent of any grading.
IntVec kernel_vector_for(const CglDescriptor& d, std::size_t k) {
  const DeltaWitness& w = d.delta_witness.at(k);
  IntVec b(d.nvars(), Int(0));
  b[k] = 1;
  b[w.j] += 1;
  for (std::size_t i = 0; i < w.m.size(); ++i) b[i] -= w.m[i];
  return b;
}

std::string var_name(std::size_t k) { return "variable " + std::to_string(k + 1); }

}  // namespace

std::vector<std::size_t> exceptional_set(const CglDescriptor& d) {
  std::vector<std::size_t> out;
  for (const auto& [k, w] : d.delta_witness) out.push_back(k);
  return out;
}

std::vector<std::size_t> homogeneous_set(const CglDescriptor& d) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < d.nvars(); ++k)
    if (d.delta_witness.count(k) == 0) out.push_back(k);
  return out;
}

PredecessorData predecessor(const std::vector<long long>& eta) {
  std::size_t n = eta.size();
  PredecessorData pd;
  pd.p.assign(n, -1);
  pd.o_minus.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k; j-- > 0;) {
      if (eta[j] == eta[k]) {
        pd.p[k] = static_cast<std::ptrdiff_t>(j);
        pd.o_minus[k] = pd.o_minus[j] + 1;
        break;
      }
    }
  }
  return pd;
}

ClusterData cluster_matrix(const CglDescriptor& d) {
  check_descriptor(d);
  std::size_t n = d.nvars();
  PredecessorData pd = predecessor(d.eta);
  IntMatrix beta = IntMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::ptrdiff_t at = pd.p[k]; at >= 0; at = pd.p[at]) beta.at(k, at) += 1;
  Bicharacter q = trivial_bicharacter(d.ctx(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      set_entry(q, j, k, evaluate(d.lambda, beta.row(j), beta.row(k)));
  return ClusterData{std::move(q), std::move(beta)};
}

GradingMap degree_map_hmax(const CglDescriptor& d) {
  check_descriptor(d);
  std::size_t n = d.nvars();
  std::vector<std::size_t> homog = homogeneous_set(d);
  std::vector<std::ptrdiff_t> col(n, -1);
  for (std::size_t idx = 0; idx < homog.size(); ++idx)
    col[homog[idx]] = static_cast<std::ptrdiff_t>(idx);
  std::vector<IntVec> rows(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (col[k] >= 0) {
      rows[k] = unit(homog.size(), static_cast<std::size_t>(col[k]));
      continue;
    }
    const DeltaWitness& w = d.delta_witness.at(k);
    IntVec r(homog.size(), Int(0));
    for (std::size_t t = 0; t < r.size(); ++t) r[t] = -rows[w.j][t];
    for (std::size_t i = 0; i < w.m.size(); ++i)
      for (std::size_t t = 0; t < r.size(); ++t) r[t] += w.m[i] * rows[i][t];
    rows[k] = std::move(r);
  }
  return grading_from_rows(homog.size(), rows);
}

std::vector<IntVec> kernel_vectors(const CglDescriptor& d, const GradingMap& pi) {
  check_descriptor(d);
  std::size_t n = d.nvars();
  if (pi.source_rank() != n)
    throw std::invalid_argument("grading source rank differs from the variable count");

  // The homogeneous-variable degrees must be independent; the b_k are a basis
  // of ker pi exactly under that hypothesis.
  std::vector<std::size_t> homog = homogeneous_set(d);
  std::vector<IntVec> degs;
  for (std::size_t i : homog) degs.push_back(pi.matrix.row(i));
  Lattice deg_lattice = lattice_from_rows(pi.target_rank(), degs);
  if (deg_lattice.rank() != homog.size())
    throw PreconditionError(
        "derivation-free variable degrees are not linearly independent: rank " +
        std::to_string(deg_lattice.rank()) + " from " + std::to_string(homog.size()) +
        " variables");

  std::vector<IntVec> out;
  for (const auto& [k, w] : d.delta_witness) {
    IntVec b = kernel_vector_for(d, k);
    if (vec_mat_mul(b, pi.matrix) != IntVec(pi.target_rank(), Int(0)))
      throw PreconditionError("witness vector for " + var_name(k) +
                              " is not in the kernel of the grading");
    out.push_back(std::move(b));
  }
  if (lattice_from_rows(n, out) != grading_kernel(pi))
    throw InternalMismatchError("witness vectors do not span the grading kernel");
  return out;
}

ScalarSubgroup ad_cgl(const CglDescriptor& d) {
  check_descriptor(d);
  ScalarSubgroup from_lambda = image_subgroup(d.lambda, full_lattice(d.nvars()));
  ClusterData cd = cluster_matrix(d);
  ScalarSubgroup from_cluster = image_subgroup(cd.q, full_lattice(d.nvars()));
  if (!(from_lambda == from_cluster))
    throw InternalMismatchError(
        "commutation subgroup disagrees with its cluster pullback");
  return from_lambda;
}

ScalarSubgroup tw_cgl(const CglDescriptor& d) {
  check_descriptor(d);
  const ScalarContext& ctx = d.ctx();
  std::size_t n = d.nvars();
  GradingMap pi = d.grading_pi ? *d.grading_pi : degree_map_hmax(d);
  std::vector<IntVec> b = kernel_vectors(d, pi);
  std::vector<std::size_t> keys = exceptional_set(d);
  std::vector<std::size_t> homog = homogeneous_set(d);

  std::vector<ScalarElement> gens;
  for (std::size_t idx = 0; idx < keys.size(); ++idx) {
    std::size_t k = keys[idx];
    const ScalarElement& stored = d.lambda_k.at(k);
    if (!scalar_equal(ctx, stored, evaluate(d.lambda, b[idx], unit(n, k))))
      throw PreconditionError("stored eigenvalue of " + var_name(k) +
                              " disagrees with the kernel pairing");
    gens.push_back(stored);
    for (std::size_t i : homog)
      if (i < k) gens.push_back(evaluate(d.lambda, b[idx], unit(n, i)));
  }
  ScalarSubgroup general = generated_subgroup(ctx, gens);

  // Independent route: pull the kernel through the cluster coordinates and
  // image it under the cluster commutation matrix.
  ClusterData cd = cluster_matrix(d);
  GradingMap through_cluster{mat_mul(cd.beta, pi.matrix)};
  ScalarSubgroup via_cluster = image_subgroup(cd.q, grading_kernel(through_cluster));
  if (!(general == via_cluster))
    throw InternalMismatchError(
        "twist invariant differs between the direct formula and the cluster route");

  if (d.symmetric) {
    SymmetricReport rep = validate_symmetric(d);
    if (!rep.ok)
      throw PreconditionError("descriptor is flagged symmetric but fails validation: " +
                              rep.failures.front());
    std::vector<ScalarElement> eigen;
    for (std::size_t k : keys) eigen.push_back(d.lambda_k.at(k));
    if (!(generated_subgroup(ctx, eigen) == general))
      throw InternalMismatchError(
          "symmetric eigenvalue subgroup differs from the general formula");
  }
  return general;
}

SymmetricReport validate_symmetric(const CglDescriptor& d) {
  check_descriptor(d);
  SymmetricReport rep;
  const ScalarContext& ctx = d.ctx();
  std::size_t n = d.nvars();
  PredecessorData pd = predecessor(d.eta);
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  for (const auto& [k, w] : d.delta_witness) {
    if (pd.p[k] < 0) {
      fail(var_name(k) + " has a derivation but no predecessor at its level");
      continue;
    }
    std::size_t p = static_cast<std::size_t>(pd.p[k]);
    if (w.j != p) fail(var_name(k) + ": witness does not target the level predecessor");
    for (std::size_t i = 0; i < w.m.size(); ++i)
      if (w.m[i] != 0 && i <= p)
        fail(var_name(k) + ": witness monomial reaches at or before the predecessor");

    IntVec b = kernel_vector_for(d, k);
    const ScalarElement& lk = d.lambda_k.at(k);
    for (std::size_t j = 0; j < n; ++j) {
      ScalarElement v = evaluate(d.lambda, b, unit(n, j));
      if (j == k) {
        if (!scalar_equal(ctx, v, lk))
          fail(var_name(k) + ": eigenvalue disagrees with the kernel pairing");
      } else if (j == p) {
        if (!scalar_equal(ctx, v, scalar_inverse(lk)))
          fail(var_name(k) + ": pairing at the predecessor is not the inverse eigenvalue");
      } else if (!scalar_is_one(ctx, v)) {
        fail(var_name(k) + ": pairing with " + var_name(j) + " is nontrivial");
      }
    }
    GroupOrder ord = cardinality(generated_subgroup(ctx, {lk}));
    if (ord.finite)
      rep.warnings.push_back(var_name(k) + ": eigenvalue is a root of unity (order " +
                             ord.order.str() + ")");
  }
  return rep;
}

SandwichDescriptor cluster_sandwich(const CglDescriptor& d) {
  ClusterData cd = cluster_matrix(d);
  GradingMap pi = d.grading_pi ? *d.grading_pi : degree_map_hmax(d);
  return make_sandwich(cd.q, GradingMap{mat_mul(cd.beta, pi.matrix)},
                       d.label.empty() ? "cluster" : d.label + "-cluster");
}

namespace {

// Parameters p_ij for 1 <= i < j <= n appended after `base` head parameters;
// p_ji enters as the inverse.
struct PairTable {
  std::size_t n = 0;
  std::size_t base = 0;

  std::vector<std::string> names(std::vector<std::string> head) const {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        head.push_back("p" + std::to_string(i) + std::to_string(j));
    return head;
  }
  void add(IntVec& v, std::size_t i, std::size_t j, long s) const {
    if (i == j) return;  // p_ii = 1
    if (i > j) {
      std::swap(i, j);
      s = -s;
    }
    std::size_t off = (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
    v[base + off] += s;
  }
};

using PairAdd = std::function<void(IntVec&, std::size_t, std::size_t, long)>;

CglDescriptor build_quantum_matrices(std::size_t n, ScalarContext ctx, const IntVec& lam,
                                     const PairAdd& addp, std::string label) {
  std::size_t N = n * n;
  std::size_t ar = ctx.arity();
  auto var = [n](std::size_t r, std::size_t c) { return (r - 1) * n + (c - 1); };
  Bicharacter chi = trivial_bicharacter(ctx, N);
  for (std::size_t k0 = 1; k0 < N; ++k0) {
    std::size_t rk = k0 / n + 1, ck = k0 % n + 1;
    for (std::size_t j0 = 0; j0 < k0; ++j0) {
      std::size_t rj = j0 / n + 1, cj = j0 % n + 1;
      IntVec e(ar, Int(0));
      if (rk == rj) {
        addp(e, cj, ck, 1);
      } else if (ck > cj) {
        addp(e, rk, rj, 1);
        addp(e, cj, ck, 1);
      } else {
        for (std::size_t t = 0; t < ar; ++t) e[t] += lam[t];
        addp(e, rk, rj, 1);
        if (ck < cj) addp(e, cj, ck, 1);
      }
      set_entry(chi, k0, j0, scalar_from_exponents(ctx, e));
    }
  }
  CglDescriptor d;
  d.lambda = std::move(chi);
  d.eta.resize(N);
  for (std::size_t k0 = 0; k0 < N; ++k0)
    d.eta[k0] = static_cast<long long>(k0 % n) - static_cast<long long>(k0 / n);
  for (std::size_t l = 2; l <= n; ++l)
    for (std::size_t m = 2; m <= n; ++m) {
      std::size_t k0 = var(l, m);
      DeltaWitness w;
      w.j = var(l - 1, m - 1);
      w.m = IntVec(k0, Int(0));
      w.m[var(l - 1, m)] = 1;
      w.m[var(l, m - 1)] = 1;
      d.delta_witness.emplace(k0, std::move(w));
      d.lambda_k.emplace(k0, scalar_from_exponents(d.ctx(), lam));
    }
  d.symmetric = true;
  d.label = std::move(label);
  return d;
}

}  // namespace

CglDescriptor quantum_matrices_descriptor(std::size_t n) {
  PairTable pt{n, 1};
  ScalarContext ctx = make_context(pt.names({"lambda"}));
  IntVec lam = unit(ctx.arity(), 0);
  return build_quantum_matrices(
      n, ctx, lam,
      [pt](IntVec& v, std::size_t i, std::size_t j, long s) { pt.add(v, i, j, s); },
      "quantum-matrices-" + std::to_string(n));
}

CglDescriptor standard_quantum_matrices_descriptor(std::size_t n) {
  ScalarContext ctx = make_context({"q"});
  IntVec lam(1, Int(-2));
  // p_ij = q^-1 below the diagonal pairings; inverses flip the sign.
  return build_quantum_matrices(
      n, ctx, lam,
      [](IntVec& v, std::size_t i, std::size_t j, long s) {
        if (i == j) return;
        v[0] += (i < j) ? -s : s;
      },
      "standard-quantum-matrices-" + std::to_string(n));
}

CglDescriptor quantized_weyl_descriptor(std::size_t n) {
  PairTable pt{n, n};
  std::vector<std::string> head;
  for (std::size_t i = 1; i <= n; ++i) head.push_back("q" + std::to_string(i));
  ScalarContext ctx = make_context(pt.names(std::move(head)));
  std::size_t ar = ctx.arity();

  // Variable order y_n, ..., y_1, x_1, ..., x_n.
  Bicharacter chi = trivial_bicharacter(ctx, 2 * n);
  for (std::size_t k0 = 1; k0 < 2 * n; ++k0)
    for (std::size_t j0 = 0; j0 < k0; ++j0) {
      IntVec e(ar, Int(0));
      if (k0 < n) {
        pt.add(e, n - k0, n - j0, 1);  // y-y: p_{ij'} with i < j'
      } else if (j0 < n) {
        std::size_t m = k0 - n + 1, b = n - j0;
        if (m < b) {
          pt.add(e, m, b, -1);  // x_m y_b = p_bm y_b x_m
        } else if (m > b) {
          e[b - 1] += 1;  // q_b p_bm
          pt.add(e, b, m, 1);
        } else {
          e[m - 1] += 1;  // q_m, with delta hitting 1 + lower y x pairs
        }
      } else {
        std::size_t m1 = j0 - n + 1, m2 = k0 - n + 1;
        e[m1 - 1] -= 1;  // x_m2 x_m1 = p_m2m1 / q_m1 * x_m1 x_m2
        pt.add(e, m1, m2, -1);
      }
      set_entry(chi, k0, j0, scalar_from_exponents(ctx, e));
    }

  CglDescriptor d;
  d.lambda = std::move(chi);
  d.eta.resize(2 * n);
  for (std::size_t a = 0; a < 2 * n; ++a)
    d.eta[a] = static_cast<long long>(a < n ? n - a : a - n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t k0 = n + m - 1;
    DeltaWitness w;
    w.j = n - m;
    w.m = IntVec(k0, Int(0));
    if (m >= 2) {
      w.m[n + 1 - m] = 1;  // y_{m-1}
      w.m[n + m - 2] = 1;  // x_{m-1}
    }
    d.delta_witness.emplace(k0, std::move(w));
    IntVec le(ar, Int(0));
    le[m - 1] = -1;
    d.lambda_k.emplace(k0, scalar_from_exponents(d.ctx(), le));
  }
  d.symmetric = true;
  d.label = "quantized-weyl-" + std::to_string(n);
  return d;
}

CglDescriptor quantum_affine_descriptor(Bicharacter q, std::string label) {
  if (!is_alternating(q))
    throw std::invalid_argument("commutation matrix is not alternating");
  CglDescriptor d;
  std::size_t n = q.rank;
  d.lambda = std::move(q);
  d.eta.resize(n);
  for (std::size_t k = 0; k < n; ++k) d.eta[k] = static_cast<long long>(k);
  d.symmetric = true;
  d.label = std::move(label);
  return d;
}

SandwichDescriptor weyl_sandwich_descriptor(std::size_t n) {
  PairTable pt{n, n};
  std::vector<std::string> head;
  for (std::size_t i = 1; i <= n; ++i) head.push_back("q" + std::to_string(i));
  ScalarContext ctx = make_context(pt.names(std::move(head)));

  // Cluster variables z_1..z_n (degree 0), y_1..y_n (degree -e_j), where
  // z_k = x_k y_k - y_k x_k.
  Bicharacter chi = trivial_bicharacter(ctx, 2 * n);
  for (std::size_t i0 = 0; i0 < 2 * n; ++i0)
    for (std::size_t j0 = i0 + 1; j0 < 2 * n; ++j0) {
      IntVec e(ctx.arity(), Int(0));
      if (i0 >= n) {
        pt.add(e, i0 - n + 1, j0 - n + 1, 1);  // y_i y_j pairing
      } else if (j0 >= n) {
        std::size_t k = i0 + 1, j = j0 - n + 1;
        if (j <= k) e[j - 1] += 1;  // z_k y_j = q_j y_j z_k
      }
      set_entry(chi, i0, j0, scalar_from_exponents(ctx, e));
    }

  std::vector<IntVec> rows(2 * n, IntVec(n, Int(0)));
  for (std::size_t j = 0; j < n; ++j) rows[n + j][j] = -1;
  return make_sandwich(std::move(chi), grading_from_rows(n, rows),
                       "quantized-weyl-zy-" + std::to_string(n));
}

}  // namespace qinv
