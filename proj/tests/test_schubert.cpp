#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qinv/schubert.hpp"

#include <set>

using namespace qinv;

namespace {

IntVec rv(std::initializer_list<long> cs) {
  IntVec v;
  for (long c : cs) v.push_back(Int(c));
  return v;
}

ScalarElement qpow(const ScalarContext& ctx, long e) {
  IntVec v(ctx.arity(), Int(0));
  v[0] = e;
  return scalar_from_exponents(ctx, v);
}

// The standard commutation matrix of the cell: entry (k, j) for k > j is
// q^(-(beta_k, beta_j)).
Bicharacter hand_cell_matrix(const CartanData& c, const WeylWord& w) {
  ScalarContext ctx = make_context({"q"});
  std::vector<IntVec> beta = roots_beta(c, w);
  Bicharacter chi = trivial_bicharacter(ctx, w.size());
  for (std::size_t k = 1; k < w.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      set_entry(chi, k, j, qpow(ctx, static_cast<long>(-pairing(c, beta[k], beta[j]))));
  return chi;
}

// All reduced words of length <= cap; prefixes of reduced words are reduced,
// so the tree is pruned at the first non-reduced extension.
void reduced_words_upto(const CartanData& c, std::size_t cap, WeylWord& w,
                        std::vector<WeylWord>& out) {
  out.push_back(w);
  if (w.size() == cap) return;
  for (std::size_t i = 1; i <= c.rank; ++i) {
    w.push_back(i);
    if (is_reduced(c, w)) reduced_words_upto(c, cap, w, out);
    w.pop_back();
  }
}

std::vector<WeylWord> reduced_words(const CartanData& c, std::size_t cap) {
  WeylWord w;
  std::vector<WeylWord> out;
  reduced_words_upto(c, cap, w, out);
  return out;
}

}  // namespace

TEST_CASE("cartan data: builtin types and symmetrizers") {
  CartanData a2 = cartan_type("A2");
  CHECK(a2.rank == 2);
  CHECK(a2.gcm == std::vector<std::vector<long long>>{{2, -1}, {-1, 2}});
  CHECK(a2.d == std::vector<Int>{1, 1});
  CHECK(norms_sq(a2) == std::vector<Int>{2, 2});

  CartanData b2 = cartan_type("B2");
  CHECK(b2.gcm == std::vector<std::vector<long long>>{{2, -1}, {-2, 2}});
  CHECK(b2.d == std::vector<Int>{2, 1});
  CHECK(norms_sq(b2) == std::vector<Int>{4, 2});

  CartanData g2 = cartan_type("G2");
  CHECK(g2.gcm == std::vector<std::vector<long long>>{{2, -1}, {-3, 2}});
  CHECK(g2.d == std::vector<Int>{3, 1});
  CHECK(norms_sq(g2) == std::vector<Int>{6, 2});

  CHECK(cartan_type("B3").d == std::vector<Int>{2, 2, 1});
  CHECK(cartan_type("C3").d == std::vector<Int>{1, 1, 2});
  CHECK(cartan_type("D4").d == std::vector<Int>{1, 1, 1, 1});
  CHECK(cartan_type("F4").d == std::vector<Int>{2, 2, 1, 1});
  CHECK(norms_sq(cartan_type("F4")) == std::vector<Int>{4, 4, 2, 2});

  CHECK_THROWS_AS(cartan_type("E6"), std::invalid_argument);
  CHECK_THROWS_AS(cartan_type("G3"), std::invalid_argument);
  CHECK_THROWS_AS(cartan_type(""), std::invalid_argument);
}

TEST_CASE("cartan data: raw matrices are validated") {
  CHECK(make_cartan({{2, -1}, {-1, 2}}).d == std::vector<Int>{1, 1});
  // diagonal must be 2
  CHECK_THROWS_AS(make_cartan({{1, -1}, {-1, 2}}), std::invalid_argument);
  // off-diagonal entries must be <= 0
  CHECK_THROWS_AS(make_cartan({{2, 1}, {-1, 2}}), std::invalid_argument);
  // zero pattern must be symmetric
  CHECK_THROWS_AS(make_cartan({{2, 0}, {-1, 2}}), std::invalid_argument);
  // ragged shape
  CHECK_THROWS_AS(make_cartan({{2, -1}, {-1}}), std::invalid_argument);
  // 3-cycle with inconsistent ratios is not symmetrizable
  CHECK_THROWS_AS(make_cartan({{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}}),
                  std::invalid_argument);
}

TEST_CASE("pairing: form values against the symmetrizer") {
  CartanData b2 = cartan_type("B2");
  CHECK(pairing(b2, rv({1, 0}), rv({1, 0})) == 4);
  CHECK(pairing(b2, rv({0, 1}), rv({0, 1})) == 2);
  CHECK(pairing(b2, rv({1, 0}), rv({0, 1})) == -2);
  CHECK(pairing(b2, rv({0, 1}), rv({1, 0})) == -2);  // symmetric
  CartanData g2 = cartan_type("G2");
  CHECK(pairing(g2, rv({1, 0}), rv({0, 1})) == -3);
}

TEST_CASE("roots: iterated reflections") {
  CartanData a2 = cartan_type("A2");
  CHECK(roots_beta(a2, {1, 2, 1}) ==
        std::vector<IntVec>{rv({1, 0}), rv({1, 1}), rv({0, 1})});
  CHECK(roots_beta(a2, {2}) == std::vector<IntVec>{rv({0, 1})});
  CHECK(roots_beta(a2, {}).empty());

  CartanData b2 = cartan_type("B2");
  CHECK(roots_beta(b2, {1, 2, 1}) ==
        std::vector<IntVec>{rv({1, 0}), rv({1, 1}), rv({1, 2})});
  CHECK(roots_beta(b2, {2, 1, 2, 1}) ==
        std::vector<IntVec>{rv({0, 1}), rv({1, 2}), rv({1, 1}), rv({1, 0})});

  CartanData g2 = cartan_type("G2");
  CHECK(roots_beta(g2, {1, 2, 1, 2, 1, 2}) ==
        std::vector<IntVec>{rv({1, 0}), rv({1, 1}), rv({2, 3}), rv({1, 2}),
                            rv({1, 3}), rv({0, 1})});
}

TEST_CASE("reducedness") {
  CartanData a2 = cartan_type("A2");
  CHECK(is_reduced(a2, {}));
  CHECK(is_reduced(a2, {1, 2, 1}));
  CHECK(is_reduced(a2, {2, 1, 2}));
  CHECK_FALSE(is_reduced(a2, {1, 1}));
  CHECK_FALSE(is_reduced(a2, {1, 2, 1, 2}));
  CHECK_FALSE(is_reduced(a2, {2, 1, 2, 1, 2}));
}

TEST_CASE("cell invariants: hand values") {
  CartanData a2 = cartan_type("A2");
  SchubertInvariants inv = schubert_invariants(a2, {1, 2, 1});
  const ScalarContext& ctx = inv.tw.ctx;
  CHECK(inv.d_of_w == 2);
  CHECK(inv.support == std::vector<std::size_t>{1, 2});
  REQUIRE(inv.lambda_k.size() == 3);
  for (const ScalarElement& l : inv.lambda_k)
    CHECK(scalar_equal(ctx, l, qpow(ctx, -2)));
  CHECK(inv.tw == generated_subgroup(ctx, {qpow(ctx, 2)}));

  CartanData b2 = cartan_type("B2");
  SchubertInvariants long_only = schubert_invariants(b2, {1});
  CHECK(long_only.d_of_w == 4);
  CHECK(long_only.tw == generated_subgroup(ctx, {qpow(ctx, 4)}));
  CHECK(scalar_equal(ctx, long_only.lambda_k[0], qpow(ctx, -4)));
  CHECK(schubert_invariants(b2, {2}).d_of_w == 2);
  CHECK(schubert_invariants(b2, {1, 2}).d_of_w == 2);

  CartanData g2 = cartan_type("G2");
  SchubertInvariants full = schubert_invariants(g2, {1, 2, 1, 2, 1, 2});
  CHECK(full.d_of_w == 2);
  CHECK(full.tw == generated_subgroup(ctx, {qpow(ctx, 2)}));

  SchubertInvariants empty = schubert_invariants(a2, {});
  CHECK(empty.d_of_w == 0);
  CHECK(is_trivial(empty.tw));

  CHECK_THROWS_WITH_AS(schubert_invariants(a2, {1, 1}), doctest::Contains("reduced"),
                       PreconditionError);
}

TEST_CASE("all short reduced words: length invariance and the divisor law") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    CartanData c = cartan_type(name);
    std::vector<Int> norms = norms_sq(c);
    for (const WeylWord& w : reduced_words(c, 6)) {
      if (w.empty()) continue;
      SchubertInvariants inv = schubert_invariants(c, w);  // norm assert inside
      for (std::size_t letter : inv.support) CHECK(norms[letter - 1] % inv.d_of_w == 0);
      ScalarSubgroup expect =
          generated_subgroup(inv.tw.ctx, {qpow(inv.tw.ctx, static_cast<long>(inv.d_of_w))});
      CHECK(inv.tw == expect);
    }
  }
}

TEST_CASE("simply laced cells always twist down to <q^2>") {
  for (const char* name : {"A2", "A3"}) {
    CartanData c = cartan_type(name);
    for (const WeylWord& w : reduced_words(c, 6)) {
      if (w.empty()) continue;
      SchubertInvariants inv = schubert_invariants(c, w);
      CHECK(inv.d_of_w == 2);
    }
  }
}

TEST_CASE("longest elements sweep out the positive roots") {
  struct Row {
    const char* type;
    std::size_t length;
    std::size_t roots;
  };
  for (Row r : {Row{"A2", 3, 3}, Row{"B2", 4, 4}, Row{"G2", 6, 6}}) {
    CartanData c = cartan_type(r.type);
    std::set<std::set<IntVec>> beta_sets;
    std::size_t words = 0;
    for (const WeylWord& w : reduced_words(c, r.length)) {
      if (w.size() != r.length) continue;
      ++words;
      std::vector<IntVec> beta = roots_beta(c, w);
      std::set<IntVec> s(beta.begin(), beta.end());
      CHECK(s.size() == r.roots);
      beta_sets.insert(std::move(s));
    }
    CHECK(words > 0);
    CHECK(beta_sets.size() == 1);  // every reduced expression hits the same set
    // No reduced word extends past the longest element.
    for (const WeylWord& w : reduced_words(c, r.length + 1))
      CHECK(w.size() <= r.length);
  }
}

TEST_CASE("cell descriptor: simply laced fixture") {
  CartanData a2 = cartan_type("A2");
  WeylWord w = {1, 2, 1};
  CglDescriptor d = schubert_to_cgl(a2, w, hand_cell_matrix(a2, w));
  const ScalarContext& ctx = d.ctx();
  CHECK(d.symmetric);
  CHECK(d.eta == std::vector<long long>{1, 2, 1});
  REQUIRE(d.delta_witness.count(2) == 1);
  CHECK(d.delta_witness.at(2).j == 0);
  CHECK(d.delta_witness.at(2).m == rv({0, 1}));  // the middle root once
  CHECK(scalar_equal(ctx, d.lambda_k.at(2), qpow(ctx, -2)));
  CHECK(validate_symmetric(d).ok);
  CHECK(tw_cgl(d) == schubert_invariants(a2, w).tw);
  CHECK(tw_cgl(d) == generated_subgroup(ctx, {qpow(ctx, 2)}));
}

TEST_CASE("cell descriptor: mixed-length fixture reports a finer subgroup") {
  // The two gradings genuinely disagree here: the letter-gcd subgroup is
  // <q^2> while the eigenvalue subgroup of the descriptor is <q^4>.
  CartanData b2 = cartan_type("B2");
  WeylWord w = {1, 2, 1};
  CglDescriptor d = schubert_to_cgl(b2, w, hand_cell_matrix(b2, w));
  const ScalarContext& ctx = d.ctx();
  CHECK(d.delta_witness.at(2).m == rv({0, 2}));  // the middle root twice
  ScalarSubgroup hmax = tw_cgl(d);
  ScalarSubgroup letter_gcd = schubert_invariants(b2, w).tw;
  CHECK(hmax == generated_subgroup(ctx, {qpow(ctx, 4)}));
  CHECK(letter_gcd == generated_subgroup(ctx, {qpow(ctx, 2)}));
  CHECK_FALSE(hmax == letter_gcd);
  CHECK(subgroup_join(letter_gcd, hmax) == letter_gcd);  // refinement direction
}

TEST_CASE("cell descriptor: full G2 word closes the gap again") {
  CartanData g2 = cartan_type("G2");
  WeylWord w = {1, 2, 1, 2, 1, 2};
  CglDescriptor d = schubert_to_cgl(g2, w, hand_cell_matrix(g2, w));
  CHECK(validate_symmetric(d).ok);
  CHECK(tw_cgl(d) == schubert_invariants(g2, w).tw);
}

TEST_CASE("cell descriptor: single letters have no derivations") {
  CartanData a1 = cartan_type("A1");
  WeylWord w = {1};
  CglDescriptor d = schubert_to_cgl(a1, w, hand_cell_matrix(a1, w));
  CHECK(d.delta_witness.empty());
  CHECK(is_trivial(tw_cgl(d)));
  // ...while the letter-gcd grading still reports <q^2>: both are surfaced.
  CHECK(schubert_invariants(a1, w).tw ==
        generated_subgroup(d.ctx(), {qpow(d.ctx(), 2)}));

  CglDescriptor empty = schubert_to_cgl(a1, {}, trivial_bicharacter(make_context({"q"}), 0));
  CHECK(is_trivial(tw_cgl(empty)));
}

TEST_CASE("cell descriptor: every short reduced word validates") {
  for (const char* name : {"A2", "B2", "A3"}) {
    CartanData c = cartan_type(name);
    for (const WeylWord& w : reduced_words(c, 5)) {
      CglDescriptor d = schubert_to_cgl(c, w, hand_cell_matrix(c, w));
      SymmetricReport rep = validate_symmetric(d);
      CHECK(rep.ok);
      ScalarSubgroup tw = tw_cgl(d);
      // The eigenvalue subgroup refines the letter-gcd subgroup.
      if (!w.empty())
        CHECK(subgroup_join(schubert_invariants(c, w).tw, tw) ==
              schubert_invariants(c, w).tw);
    }
  }
}

TEST_CASE("cell descriptor: rejects bad input") {
  CartanData a2 = cartan_type("A2");
  WeylWord w = {1, 2, 1};
  CHECK_THROWS_AS(schubert_to_cgl(a2, {1, 1}, hand_cell_matrix(a2, {1, 1})),
                  PreconditionError);
  CHECK_THROWS_AS(schubert_to_cgl(a2, w, hand_cell_matrix(a2, {1, 2})),
                  std::invalid_argument);  // rank mismatch
  Bicharacter no_q = trivial_bicharacter(make_context({"t"}), 3);
  CHECK_THROWS_AS(schubert_to_cgl(a2, w, no_q), std::invalid_argument);

  Bicharacter off = hand_cell_matrix(a2, w);
  set_entry(off, 2, 0, qpow(off.ctx, 2));  // should be q^{+1}
  CHECK_THROWS_WITH_AS(schubert_to_cgl(a2, w, off), doctest::Contains("eigenvalue"),
                       PreconditionError);
}

TEST_CASE("cell matrix: library builder equals the hand construction") {
  for (const char* name : {"A2", "B2", "G2"}) {
    CartanData c = cartan_type(name);
    for (const WeylWord& w : reduced_words(c, 4))
      CHECK(standard_cell_matrix(c, w) == hand_cell_matrix(c, w));
  }
}
