#include "qinv/ore.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace qinv {

CoefficientPoly poly_zero() { return {}; }

CoefficientPoly poly_from_scalar(const ScalarElement& s, const Int& c) {
  CoefficientPoly p;
  if (c != 0) p.terms[s.exp] = c;
  return p;
}

namespace {

void poly_accumulate(CoefficientPoly& into, const IntVec& exp, const Int& c) {
  auto [it, fresh] = into.terms.try_emplace(exp, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) into.terms.erase(it);
}

}  // namespace

CoefficientPoly poly_add(const CoefficientPoly& a, const CoefficientPoly& b) {
  CoefficientPoly out = a;
  for (const auto& [e, c] : b.terms) poly_accumulate(out, e, c);
  return out;
}

CoefficientPoly poly_negate(const CoefficientPoly& a) {
  CoefficientPoly out = a;
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

CoefficientPoly poly_mul(const CoefficientPoly& a, const CoefficientPoly& b) {
  CoefficientPoly out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      IntVec e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      poly_accumulate(out, e, ca * cb);
    }
  return out;
}

CoefficientPoly poly_mul_scalar(const CoefficientPoly& a, const ScalarElement& s) {
  CoefficientPoly out;
  for (const auto& [e, c] : a.terms) {
    IntVec shifted = e;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += s.exp[i];
    out.terms[shifted] = c;
  }
  return out;
}

bool poly_is_zero(const CoefficientPoly& a) { return a.terms.empty(); }

NcElement nc_zero() { return {}; }

NcElement nc_one(const ScalarContext& ctx, std::size_t nvars) {
  return nc_monomial(IntVec(nvars, Int(0)), poly_from_scalar(scalar_one(ctx)));
}

NcElement nc_monomial(const IntVec& index, const CoefficientPoly& c) {
  NcElement e;
  if (!poly_is_zero(c)) e.terms[index] = c;
  return e;
}

namespace {

void nc_accumulate(NcElement& into, const IntVec& index, const CoefficientPoly& c) {
  if (poly_is_zero(c)) return;
  auto [it, fresh] = into.terms.try_emplace(index, c);
  if (fresh) return;
  it->second = poly_add(it->second, c);
  if (poly_is_zero(it->second)) into.terms.erase(it);
}

}  // namespace

NcElement nc_add(const NcElement& a, const NcElement& b) {
  NcElement out = a;
  for (const auto& [i, c] : b.terms) nc_accumulate(out, i, c);
  return out;
}

NcElement nc_sub(const NcElement& a, const NcElement& b) {
  NcElement out = a;
  for (const auto& [i, c] : b.terms) nc_accumulate(out, i, poly_negate(c));
  return out;
}

NcElement nc_scale(const NcElement& a, const ScalarElement& s) {
  NcElement out;
  for (const auto& [i, c] : a.terms) out.terms[i] = poly_mul_scalar(c, s);
  return out;
}

bool nc_is_zero(const NcElement& a) { return a.terms.empty(); }

OrePresentation make_ore(Bicharacter lambda,
                         std::map<std::pair<std::size_t, std::size_t>, NcElement> delta,
                         std::vector<bool> invertible) {
  if (!is_alternating(lambda))
    throw std::invalid_argument("commutation matrix is not alternating");
  if (lambda.ctx.relations.rank() != 0)
    throw std::invalid_argument(
        "scalar context with relations is not supported by the rewriting engine");
  std::size_t n = lambda.rank;
  if (invertible.size() != n)
    throw std::invalid_argument("invertible flag count differs from the variable count");
  for (auto it = delta.begin(); it != delta.end();) {
    const auto& [k, j] = it->first;
    if (k >= n || j >= k)
      throw std::invalid_argument("delta key must pair a later variable with an earlier one");
    if (nc_is_zero(it->second)) {
      it = delta.erase(it);
      continue;
    }
    if (invertible[k] || invertible[j])
      throw std::invalid_argument("delta term attached to an invertible variable");
    for (const auto& [index, c] : it->second.terms) {
      if (index.size() != n)
        throw std::invalid_argument("delta term has the wrong variable count");
      for (std::size_t v = 0; v < n; ++v) {
        if (index[v] < 0)
          throw std::invalid_argument("delta term uses negative exponents");
        if (index[v] != 0 && v >= k)
          throw std::invalid_argument("delta term reaches variable at or above its own level");
      }
    }
    ++it;
  }
  return OrePresentation{std::move(lambda), std::move(delta), std::move(invertible)};
}

OrePresentation quantum_space_presentation(const Bicharacter& chi) {
  return make_ore(chi, {}, std::vector<bool>(chi.rank, false));
}

OrePresentation quantum_torus_presentation(const Bicharacter& chi) {
  return make_ore(chi, {}, std::vector<bool>(chi.rank, true));
}

namespace {

// Parameter block p_ij for 1 <= i < j <= n, appended after `base` leading
// names; p_ji is the inverse, p_ii trivial.
std::vector<std::string> with_pair_names(std::vector<std::string> head, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      head.push_back("p" + std::to_string(i) + std::to_string(j));
  return head;
}

ScalarElement pair_param(const ScalarContext& ctx, std::size_t base, std::size_t n,
                         std::size_t i, std::size_t j) {
  if (i == j) return scalar_one(ctx);
  long sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  std::size_t at = base + (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
  IntVec e(ctx.arity(), Int(0));
  e[at] = sign;
  return scalar_from_exponents(ctx, e);
}

}  // namespace

OrePresentation weyl_presentation(const std::vector<ScalarElement>& q_values,
                                  const Bicharacter& p_matrix) {
  std::size_t n = q_values.size();
  if (p_matrix.rank != n)
    throw std::invalid_argument("q list and p matrix sizes differ");
  const ScalarContext& ctx = p_matrix.ctx;
  std::size_t nv = 2 * n;
  auto yv = [](std::size_t m) { return 2 * m; };       // y_(m+1)
  auto xv = [](std::size_t m) { return 2 * m + 1; };   // x_(m+1)
  auto pel = [&](std::size_t i, std::size_t j) {       // p_(i+1)(j+1)
    return i == j ? scalar_one(ctx) : entry(p_matrix, i, j);
  };

  Bicharacter lam = trivial_bicharacter(ctx, nv);
  std::map<std::pair<std::size_t, std::size_t>, NcElement> delta;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      // y_a y_b = p_ab y_b y_a; x_a x_b = (q_b p_ba)^-1 x_b x_a;
      // x_a y_b = q_b p_ba y_b x_a; y_a x_b = p_ba^-1 x_b y_a
      set_entry(lam, yv(a), yv(b), pel(a, b));
      set_entry(lam, xv(a), xv(b),
                scalar_inverse(scalar_mul(q_values[b], pel(b, a))));
      set_entry(lam, xv(a), yv(b), scalar_mul(q_values[b], pel(b, a)));
      set_entry(lam, yv(a), xv(b), scalar_inverse(pel(a, b)));
    }
    // x_a y_a = q_a y_a x_a + (1 + sum_(l<a) (q_l - 1) y_l x_l)
    set_entry(lam, xv(a), yv(a), q_values[a]);
    NcElement d = nc_one(ctx, nv);
    for (std::size_t l = 0; l < a; ++l) {
      IntVec idx(nv, Int(0));
      idx[yv(l)] = 1;
      idx[xv(l)] = 1;
      CoefficientPoly c = poly_add(poly_from_scalar(q_values[l]),
                                   poly_from_scalar(scalar_one(ctx), -1));
      d = nc_add(d, nc_monomial(idx, c));
    }
    delta[{xv(a), yv(a)}] = std::move(d);
  }
  return make_ore(std::move(lam), std::move(delta), std::vector<bool>(nv, false));
}

OrePresentation weyl_presentation(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
  ScalarContext ctx = make_context(with_pair_names(std::move(names), n));
  std::vector<ScalarElement> q;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(ctx.arity(), Int(0));
    e[i] = 1;
    q.push_back(scalar_from_exponents(ctx, e));
  }
  Bicharacter p = trivial_bicharacter(ctx, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      set_entry(p, i, j, pair_param(ctx, n, n, i + 1, j + 1));
  return weyl_presentation(q, p);
}

OrePresentation quantum_matrices_presentation(std::size_t n) {
  ScalarContext ctx = make_context(with_pair_names({"lambda"}, n));
  ScalarElement lam_param = scalar_param(ctx, "lambda");
  auto pel = [&](std::size_t i, std::size_t j) { return pair_param(ctx, 1, n, i, j); };
  std::size_t nv = n * n;
  auto var = [n](std::size_t r, std::size_t c) { return (r - 1) * n + (c - 1); };

  Bicharacter lam = trivial_bicharacter(ctx, nv);
  std::map<std::pair<std::size_t, std::size_t>, NcElement> delta;
  for (std::size_t l = 1; l <= n; ++l)
    for (std::size_t m = 1; m <= n; ++m)
      for (std::size_t i = 1; i <= l; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
          std::size_t K = var(l, m), J = var(i, j);
          if (J >= K) continue;
          if (l == i) {  // same row, m > j
            set_entry(lam, K, J, pel(j, m));
          } else if (m <= j) {
            set_entry(lam, K, J, scalar_mul(lam_param, scalar_mul(pel(l, i), pel(j, m))));
          } else {
            set_entry(lam, K, J, scalar_mul(pel(l, i), pel(j, m)));
            // + (lambda - 1) p_li X_im X_lj
            IntVec idx(nv, Int(0));
            idx[var(i, m)] = 1;
            idx[var(l, j)] = 1;
            CoefficientPoly c =
                poly_add(poly_from_scalar(scalar_mul(lam_param, pel(l, i))),
                         poly_from_scalar(pel(l, i), -1));
            delta[{K, J}] = nc_monomial(idx, c);
          }
        }
  return make_ore(std::move(lam), std::move(delta), std::vector<bool>(nv, false));
}

namespace {

struct Letter {
  std::size_t var;
  int sign;
};

std::vector<Letter> letters_of_index(const IntVec& index) {
  std::vector<Letter> out;
  for (std::size_t v = 0; v < index.size(); ++v) {
    Int e = index[v];
    int s = e < 0 ? -1 : 1;
    for (Int t = 0; t < (e < 0 ? -e : e); ++t) out.push_back({v, s});
  }
  return out;
}

struct PendingTerm {
  CoefficientPoly coeff;
  std::vector<Letter> letters;
};

// Worklist rewriting: resolve the first descent of each term either by a
// scalar swap or by substituting the delta element for the pair.  The top
// variable multiset drops on delta branches and the inversion count drops on
// swaps, so the loop terminates.
NcElement straighten_letters(const OrePresentation& p, CoefficientPoly coeff,
                             std::vector<Letter> letters, const StraightenOptions& opt) {
  NcElement out;
  std::vector<PendingTerm> work;
  work.push_back({std::move(coeff), std::move(letters)});
  while (!work.empty()) {
    PendingTerm t = std::move(work.back());
    work.pop_back();
    std::size_t i = 0;
    bool descent = false;
    for (; i + 1 < t.letters.size(); ++i)
      if (t.letters[i].var > t.letters[i + 1].var) {
        descent = true;
        break;
      }
    if (!descent) {
      IntVec index(p.nvars(), Int(0));
      for (const Letter& L : t.letters) index[L.var] += L.sign;
      nc_accumulate(out, index, t.coeff);
      continue;
    }
    Letter u = t.letters[i], v = t.letters[i + 1];
    ScalarElement lam = entry(p.lambda, u.var, v.var);
    if (u.sign * v.sign < 0) lam = scalar_inverse(lam);

    PendingTerm swapped;
    swapped.coeff = poly_mul_scalar(t.coeff, lam);
    swapped.letters = t.letters;
    std::swap(swapped.letters[i], swapped.letters[i + 1]);
    work.push_back(std::move(swapped));

    auto dit = p.delta.find({u.var, v.var});
    if (dit != p.delta.end()) {
      // invertible variables carry no delta, so both signs are positive here
      for (const auto& [index, c] : dit->second.terms) {
        PendingTerm branch;
        branch.coeff = poly_mul(t.coeff, c);
        branch.letters.assign(t.letters.begin(), t.letters.begin() + i);
        std::vector<Letter> mid = letters_of_index(index);
        branch.letters.insert(branch.letters.end(), mid.begin(), mid.end());
        branch.letters.insert(branch.letters.end(), t.letters.begin() + i + 2,
                              t.letters.end());
        work.push_back(std::move(branch));
      }
    }
    if (work.size() + out.terms.size() > opt.term_cap)
      throw PreconditionError("straightening exceeded the term budget of " +
                              std::to_string(opt.term_cap) + " terms");
  }
  return out;
}

std::vector<Letter> letters_of_word(const OrePresentation& p, const GenWord& word) {
  std::vector<Letter> letters;
  for (const auto& [v, pw] : word) {
    if (v >= p.nvars())
      throw std::invalid_argument("word references a variable out of range");
    if (pw < 0 && !p.invertible[v])
      throw std::invalid_argument("negative power at a non-invertible variable");
    int s = pw < 0 ? -1 : 1;
    for (long long t = 0; t < (pw < 0 ? -pw : pw); ++t) letters.push_back({v, s});
  }
  return letters;
}

}  // namespace

NcElement straighten(const OrePresentation& p, const GenWord& word,
                     const StraightenOptions& opt) {
  return straighten_letters(p, poly_from_scalar(scalar_one(p.ctx())),
                            letters_of_word(p, word), opt);
}

NcElement nc_mul(const OrePresentation& p, const NcElement& a, const NcElement& b,
                 const StraightenOptions& opt) {
  NcElement out;
  for (const auto& [ia, ca] : a.terms)
    for (const auto& [ib, cb] : b.terms) {
      if (ia.size() != p.nvars() || ib.size() != p.nvars())
        throw std::invalid_argument("element has the wrong variable count");
      for (std::size_t v = 0; v < p.nvars(); ++v)
        if ((ia[v] < 0 || ib[v] < 0) && !p.invertible[v])
          throw std::invalid_argument("negative exponent at a non-invertible variable");
      std::vector<Letter> letters = letters_of_index(ia);
      std::vector<Letter> tail = letters_of_index(ib);
      letters.insert(letters.end(), tail.begin(), tail.end());
      out = nc_add(out, straighten_letters(p, poly_mul(ca, cb), letters, opt));
    }
  return out;
}

namespace {

// Bubble-sort the letter sequence of a torus word, accumulating the swap
// scalar; the sorted sequence must telescope to the expected index.
ScalarElement torus_sort(const Bicharacter& chi, std::vector<Letter> letters) {
  IntVec acc(chi.ctx.arity(), Int(0));
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i].var <= letters[i + 1].var) continue;
      const IntVec& e = chi.exp_at(letters[i].var, letters[i + 1].var);
      int s = letters[i].sign * letters[i + 1].sign;
      for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += s * e[t];
      std::swap(letters[i], letters[i + 1]);
      moved = true;
    }
  }
  return ScalarElement{acc};
}

}  // namespace

ScalarElement torus_commutator_scalar(const Bicharacter& chi, const IntVec& a,
                                      const IntVec& b) {
  if (a.size() != chi.rank || b.size() != chi.rank)
    throw std::invalid_argument("exponent vector length differs from the rank");
  // The monomial inverse reverses the letter order: (x1^a1 ... xN^aN)^-1 is
  // xN^-aN ... x1^-a1, not the ordered monomial of -a.
  auto inverse_letters = [](std::vector<Letter> seg) {
    std::reverse(seg.begin(), seg.end());
    for (Letter& L : seg) L.sign = -L.sign;
    return seg;
  };
  std::vector<Letter> letters = letters_of_index(a);
  for (std::vector<Letter> seg :
       {letters_of_index(b), inverse_letters(letters_of_index(a)),
        inverse_letters(letters_of_index(b))}) {
    letters.insert(letters.end(), seg.begin(), seg.end());
  }
  return torus_sort(chi, std::move(letters));
}

ScalarSubgroup ad_bruteforce(const Bicharacter& chi, long long radius) {
  if (radius < 1) throw PreconditionError("box radius must be at least 1");
  std::size_t n = chi.rank;
  std::vector<IntVec> box;
  IntVec cur(n, Int(-radius));
  while (true) {
    box.push_back(cur);
    std::size_t d = 0;
    while (d < n && cur[d] == radius) cur[d++] = -radius;
    if (d == n) break;
    cur[d] += 1;
  }
  std::set<IntVec> exps;
  for (std::size_t i = 0; i < box.size(); ++i)
    for (std::size_t j = i + 1; j < box.size(); ++j)
      exps.insert(torus_commutator_scalar(chi, box[i], box[j]).exp);
  std::vector<ScalarElement> gens;
  for (const IntVec& e : exps) gens.push_back(ScalarElement{e});
  return generated_subgroup(chi.ctx, gens);
}

NcElement twisted_product(const Bicharacter& chi, const GradingMap& phi,
                          const CocycleClass& c, const IntVec& a, const IntVec& b) {
  if (!(chi.ctx == c.form.ctx))
    throw std::invalid_argument(
        "cocycle class and commutation matrix use different scalar contexts");
  if (phi.source_rank() != chi.rank)
    throw std::invalid_argument("grading source rank differs from the variable count");
  if (c.form.rank != phi.target_rank())
    throw std::invalid_argument("cocycle form rank differs from the grading target");
  if (a.size() != chi.rank || b.size() != chi.rank)
    throw std::invalid_argument("exponent vector length differs from the rank");

  std::vector<Letter> letters = letters_of_index(a);
  std::vector<Letter> tail = letters_of_index(b);
  letters.insert(letters.end(), tail.begin(), tail.end());
  ScalarElement swap_scalar = torus_sort(chi, std::move(letters));

  ScalarElement cval =
      evaluate(c.form, vec_mat_mul(a, phi.matrix), vec_mat_mul(b, phi.matrix));
  IntVec sum = a;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b[i];
  return nc_monomial(sum, poly_from_scalar(scalar_mul(swap_scalar, cval)));
}

WeylReport verify_weyl_normal_elements(const std::vector<ScalarElement>& q_values,
                                       const Bicharacter& p_matrix) {
  OrePresentation p = weyl_presentation(q_values, p_matrix);
  const ScalarContext& ctx = p.ctx();
  std::size_t n = q_values.size();
  WeylReport rep;
  auto named = [](const char* head, std::size_t i) {
    return std::string(head) + std::to_string(i + 1);
  };
  auto record = [&rep](std::string name, bool held) {
    if (!held) {
      rep.ok = false;
      rep.failures.push_back(name + " failed");
    }
    rep.checks.push_back(std::move(name));
  };

  std::vector<NcElement> z;
  for (std::size_t k = 0; k < n; ++k) {
    GenWord xy = {{2 * k + 1, 1}, {2 * k, 1}};
    GenWord yx = {{2 * k, 1}, {2 * k + 1, 1}};
    z.push_back(nc_sub(straighten(p, xy), straighten(p, yx)));
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      NcElement yj = nc_monomial([&] {
        IntVec idx(2 * n, Int(0));
        idx[2 * j] = 1;
        return idx;
      }(), poly_from_scalar(scalar_one(ctx)));
      NcElement xj = nc_monomial([&] {
        IntVec idx(2 * n, Int(0));
        idx[2 * j + 1] = 1;
        return idx;
      }(), poly_from_scalar(scalar_one(ctx)));

      bool scaled = j <= k;
      NcElement y_rhs = nc_mul(p, yj, z[k]);
      if (scaled) y_rhs = nc_scale(y_rhs, q_values[j]);
      record(named("z", k) + " " + named("y", j) + (scaled ? " == q y z" : " == y z"),
             nc_mul(p, z[k], yj) == y_rhs);

      NcElement x_rhs = nc_mul(p, xj, z[k]);
      if (scaled) x_rhs = nc_scale(x_rhs, scalar_inverse(q_values[j]));
      record(named("z", k) + " " + named("x", j) + (scaled ? " == q^-1 x z" : " == x z"),
             nc_mul(p, z[k], xj) == x_rhs);
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      record(named("z", k) + " " + named("z", l) + " commute",
             nc_mul(p, z[k], z[l]) == nc_mul(p, z[l], z[k]));
  return rep;
}

WeylReport verify_weyl_normal_elements(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
  ScalarContext ctx = make_context(with_pair_names(std::move(names), n));
  std::vector<ScalarElement> q;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(ctx.arity(), Int(0));
    e[i] = 1;
    q.push_back(scalar_from_exponents(ctx, e));
  }
  Bicharacter pm = trivial_bicharacter(ctx, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      set_entry(pm, i, j, pair_param(ctx, n, n, i + 1, j + 1));
  return verify_weyl_normal_elements(q, pm);
}

}  // namespace qinv
