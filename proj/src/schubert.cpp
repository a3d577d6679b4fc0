#include "qinv/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace qinv {
namespace {

// Exact rational with cpp_int parts, just enough for symmetrizer propagation.
struct Frac {
  Int num = 0;
  Int den = 1;
};

Frac frac_reduce(Int n, Int d) {
  if (d < 0) { n = -n; d = -d; }
  Int g = boost::multiprecision::gcd(n < 0 ? Int(-n) : n, d);
  if (g == 0) g = 1;
  return Frac{n / g, d / g};
}

Frac frac_mul(const Frac& a, Int n, Int d) { return frac_reduce(a.num * n, a.den * d); }

bool frac_eq(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }

// Minimal positive symmetrizer: propagate d_j = d_i * a_ij / a_ji along edges of
// each connected component, check consistency on revisits, then clear
// denominators and divide by the global gcd.
std::vector<Int> symmetrize(const std::vector<std::vector<long long>>& a) {
  std::size_t n = a.size();
  std::vector<Frac> val(n);
  std::vector<char> seen(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    val[root] = Frac{1, 1};
    std::vector<std::size_t> stack = {root};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Frac prop = frac_mul(val[i], Int(a[i][j]), Int(a[j][i]));
        if (!seen[j]) {
          seen[j] = 1;
          val[j] = prop;
          stack.push_back(j);
        } else if (!frac_eq(val[j], prop)) {
          throw std::invalid_argument("matrix is not symmetrizable");
        }
      }
    }
  }
  Int lcm_den = 1;
  for (const Frac& f : val) lcm_den = boost::multiprecision::lcm(lcm_den, f.den);
  std::vector<Int> d(n);
  Int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = val[i].num * (lcm_den / val[i].den);
    g = boost::multiprecision::gcd(g, d[i]);
  }
  for (Int& x : d) x /= g;
  return d;
}

}  // namespace

CartanData make_cartan(const std::vector<std::vector<long long>>& gcm) {
  std::size_t n = gcm.size();
  if (n == 0) throw std::invalid_argument("Cartan matrix must be nonempty");
  for (std::size_t i = 0; i < n; ++i) {
    if (gcm[i].size() != n) throw std::invalid_argument("Cartan matrix must be square");
    if (gcm[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (gcm[i][j] > 0)
        throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
      if ((gcm[i][j] == 0) != (gcm[j][i] == 0))
        throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
    }
  }
  CartanData c;
  c.rank = n;
  c.gcm = gcm;
  c.d = symmetrize(gcm);
  return c;
}

CartanData cartan_type(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unknown Cartan type: " + name);
  char family = name[0];
  std::size_t n = 0;
  try {
    std::size_t pos = 0;
    long long parsed = std::stoll(name.substr(1), &pos);
    if (pos != name.size() - 1 || parsed <= 0) throw std::invalid_argument("");
    n = static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown Cartan type: " + name);
  }
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&a](std::size_t i, std::size_t j) { a[i][j] = -1; a[j][i] = -1; };
  switch (family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("unknown Cartan type: " + name);
      for (std::size_t i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[n - 1][n - 2] = -2;  // short last root
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("unknown Cartan type: " + name);
      for (std::size_t i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[n - 2][n - 1] = -2;  // long last root
      break;
    case 'D':
      if (n < 3) throw std::invalid_argument("unknown Cartan type: " + name);
      for (std::size_t i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("unknown Cartan type: " + name);
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("unknown Cartan type: " + name);
      for (std::size_t i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[2][1] = -2;
      break;
    default:
      throw std::invalid_argument("unknown Cartan type: " + name);
  }
  return make_cartan(a);
}

std::vector<Int> norms_sq(const CartanData& c) {
  Int dmin = *std::min_element(c.d.begin(), c.d.end());
  std::vector<Int> out(c.rank);
  for (std::size_t i = 0; i < c.rank; ++i) {
    Int twice = 2 * c.d[i];
    if (twice % dmin != 0)
      throw std::invalid_argument("symmetrizer does not yield integer square norms");
    out[i] = twice / dmin;
  }
  return out;
}

Int pairing(const CartanData& c, const IntVec& a, const IntVec& b) {
  if (a.size() != c.rank || b.size() != c.rank)
    throw std::invalid_argument("root coordinate length differs from the rank");
  Int dmin = *std::min_element(c.d.begin(), c.d.end());
  Int acc = 0;
  for (std::size_t i = 0; i < c.rank; ++i)
    for (std::size_t j = 0; j < c.rank; ++j)
      acc += a[i] * Int(c.gcm[i][j]) * c.d[i] * b[j];
  if (acc % dmin != 0)
    throw std::invalid_argument("symmetrizer does not yield an integer pairing");
  return acc / dmin;
}

std::vector<IntVec> roots_beta(const CartanData& c, const WeylWord& w) {
  for (std::size_t letter : w)
    if (letter < 1 || letter > c.rank)
      throw std::invalid_argument("word letter out of range");
  // beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}), built by applying each new
  // reflection to all earlier roots.
  std::vector<IntVec> beta;
  beta.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::size_t i = w[k] - 1;
    IntVec v(c.rank, Int(0));
    v[i] = 1;
    beta.push_back(v);
    for (std::size_t t = k; t-- > 0;) {
      std::size_t s = w[t] - 1;
      Int coeff = 0;
      for (std::size_t j = 0; j < c.rank; ++j) coeff += Int(c.gcm[s][j]) * beta[k][j];
      beta[k][s] -= coeff;
    }
  }
  return beta;
}

bool is_reduced(const CartanData& c, const WeylWord& w) {
  std::vector<IntVec> beta = roots_beta(c, w);
  std::set<IntVec> seen;
  for (const IntVec& b : beta) {
    bool nonneg = std::all_of(b.begin(), b.end(), [](const Int& x) { return x >= 0; });
    if (!nonneg) return false;
    if (!seen.insert(b).second) return false;
  }
  return true;
}

SchubertInvariants schubert_invariants(const CartanData& c, const WeylWord& w) {
  if (!is_reduced(c, w)) throw PreconditionError("word is not reduced");
  std::vector<IntVec> beta = roots_beta(c, w);
  std::vector<Int> norms = norms_sq(c);
  ScalarContext ctx = make_context({"q"});

  SchubertInvariants inv{{}, {}, Int(0), trivial_subgroup(ctx)};
  std::set<std::size_t> support(w.begin(), w.end());
  inv.support.assign(support.begin(), support.end());

  for (std::size_t k = 0; k < w.size(); ++k) {
    // Reflections preserve the form, so |beta_k|^2 must equal |alpha_{i_k}|^2.
    if (pairing(c, beta[k], beta[k]) != norms[w[k] - 1])
      throw InternalMismatchError("root norm drifted under the reflection action");
    IntVec e(1, -norms[w[k] - 1]);
    inv.lambda_k.push_back(scalar_from_exponents(ctx, e));
  }
  for (std::size_t letter : inv.support)
    inv.d_of_w = boost::multiprecision::gcd(inv.d_of_w, norms[letter - 1]);

  std::vector<ScalarElement> gens;
  if (inv.d_of_w != 0) gens.push_back(scalar_from_exponents(ctx, IntVec(1, inv.d_of_w)));
  inv.tw = generated_subgroup(ctx, gens);
  return inv;
}

namespace {

// All nonnegative m supported on the open interval (lo, hi) with
// sum m_i beta_i = target, in lexicographic order from index lo.
void solve_witness(const std::vector<IntVec>& beta, std::size_t hi, const IntVec& target,
                   std::size_t i, IntVec& m, std::vector<IntVec>& out) {
  bool zero = std::all_of(target.begin(), target.end(), [](const Int& x) { return x == 0; });
  if (i >= hi) {
    if (zero) out.push_back(m);
    return;
  }
  for (Int t = 0;; ++t) {
    // Positive roots: each increment only shrinks the remaining target, so
    // stop once any coordinate would go negative.
    IntVec rest = target;
    bool feasible = true;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      rest[j] -= t * beta[i][j];
      if (rest[j] < 0) { feasible = false; break; }
    }
    if (!feasible) break;
    m[i] = t;
    solve_witness(beta, hi, rest, i + 1, m, out);
  }
  m[i] = 0;
}

}  // namespace

Bicharacter standard_cell_matrix(const CartanData& c, const WeylWord& w) {
  ScalarContext ctx = make_context({"q"});
  std::vector<IntVec> beta = roots_beta(c, w);
  Bicharacter chi = trivial_bicharacter(ctx, w.size());
  for (std::size_t k = 1; k < w.size(); ++k)
    for (std::size_t j = 0; j < k; ++j) {
      IntVec e(1, -pairing(c, beta[k], beta[j]));
      set_entry(chi, k, j, scalar_from_exponents(ctx, e));
    }
  return chi;
}

CglDescriptor schubert_to_cgl(const CartanData& c, const WeylWord& w,
                              const Bicharacter& lambda_entries) {
  if (lambda_entries.rank != w.size())
    throw std::invalid_argument("commutation matrix rank differs from the word length");
  bool has_q = std::find(lambda_entries.ctx.params.begin(), lambda_entries.ctx.params.end(),
                         "q") != lambda_entries.ctx.params.end();
  if (!has_q) throw std::invalid_argument("scalar context must contain the parameter q");
  if (!is_reduced(c, w)) throw PreconditionError("word is not reduced");

  std::vector<IntVec> beta = roots_beta(c, w);
  std::vector<Int> norms = norms_sq(c);
  const ScalarContext& ctx = lambda_entries.ctx;
  std::size_t qi = static_cast<std::size_t>(
      std::find(ctx.params.begin(), ctx.params.end(), "q") - ctx.params.begin());

  CglDescriptor d;
  d.lambda = lambda_entries;
  d.eta.assign(w.begin(), w.end());
  d.symmetric = true;
  {
    std::ostringstream label;
    label << "schubert";
    for (std::size_t letter : w) label << "-" << letter;
    d.label = label.str();
  }
  PredecessorData pd = predecessor(d.eta);
  for (std::size_t k = 0; k < w.size(); ++k) {
    IntVec e(ctx.arity(), Int(0));
    e[qi] = -norms[w[k] - 1];
    ScalarElement lam = scalar_from_exponents(ctx, e);
    if (pd.p[k] < 0) {
      // First occurrence of the letter: no derivation, but the diagonal
      // eigenvalue would be lambda_k if one were present.
      continue;
    }
    std::size_t j = static_cast<std::size_t>(pd.p[k]);
    IntVec target(c.rank, Int(0));
    for (std::size_t t = 0; t < c.rank; ++t) target[t] = beta[j][t] + beta[k][t];
    IntVec scratch(k, Int(0));
    std::vector<IntVec> candidates;
    solve_witness(beta, k, target, j + 1, scratch, candidates);
    if (candidates.empty())
      throw PreconditionError("no derivation monomial matches the degree of variable " +
                              std::to_string(k + 1));

    // The degree pins the witness only up to finitely many monomials; the
    // commutation matrix selects the one whose kernel vector pairs as
    // (1, ..., lambda_k^-1 at j, ..., lambda_k at k, ..., 1).
    auto pairs_cleanly = [&](const IntVec& m) {
      IntVec b(w.size(), Int(0));
      b[k] = 1;
      b[j] += 1;
      for (std::size_t t = 0; t < k; ++t) b[t] -= m[t];
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        IntVec e(w.size(), Int(0));
        e[pos] = 1;
        ScalarElement v = evaluate(lambda_entries, b, e);
        ScalarElement want = pos == k   ? lam
                             : pos == j ? scalar_inverse(lam)
                                        : scalar_one(ctx);
        if (!scalar_equal(ctx, v, want)) return false;
      }
      return true;
    };
    auto hit = std::find_if(candidates.begin(), candidates.end(), pairs_cleanly);
    if (hit == candidates.end()) {
      IntVec b(w.size(), Int(0));
      b[k] = 1;
      b[j] += 1;
      for (std::size_t t = 0; t < k; ++t) b[t] -= candidates.front()[t];
      IntVec ek(w.size(), Int(0));
      ek[k] = 1;
      ScalarElement got = evaluate(lambda_entries, b, ek);
      if (!scalar_equal(ctx, got, lam))
        throw PreconditionError("commutation matrix eigenvalue for variable " +
                                std::to_string(k + 1) +
                                " disagrees with the root length");
      throw PreconditionError(
          "no derivation monomial of the right degree commutes cleanly for variable " +
          std::to_string(k + 1));
    }
    d.delta_witness[k] = DeltaWitness{j, *hit};
    d.lambda_k[k] = lam;
  }
  return d;
}

}  // namespace qinv
