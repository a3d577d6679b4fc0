#include "qinv/driver.hpp"

#include "qinv/ore.hpp"

#include "json.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace qinv {

namespace {

CglDescriptor cell_descriptor(const SchubertInput& in) {
  return schubert_to_cgl(in.cartan, in.word, in.matrix);
}

SandwichDescriptor to_sandwich(const ParsedDescriptor& d, std::vector<std::string>* notes) {
  if (d.sandwich) return *d.sandwich;
  if (notes) notes->push_back("working at the cluster sandwich of the presentation");
  if (d.cgl) return cluster_sandwich(*d.cgl);
  return cluster_sandwich(cell_descriptor(*d.schubert));
}

ScalarSubgroup tw_of(const ParsedDescriptor& d) {
  if (d.sandwich) return tw_invariant(*d.sandwich);
  if (d.cgl) return tw_cgl(*d.cgl);
  return tw_cgl(cell_descriptor(*d.schubert));
}

ScalarSubgroup letter_route_subgroup(const SchubertInput& in, const ScalarContext& ctx) {
  SchubertInvariants inv = schubert_invariants(in.cartan, in.word);
  if (inv.support.empty()) return trivial_subgroup(ctx);
  return generated_subgroup(ctx, {scalar_param(ctx, "q", inv.d_of_w)});
}

std::string route_note(const ScalarSubgroup& cluster, const ScalarSubgroup& letter) {
  if (cluster == letter) return "the cluster route matches the single-parameter route";
  if (subgroup_join(cluster, letter) == letter)
    return "the cluster route is a proper subgroup of the single-parameter route";
  return "the cluster route and the single-parameter route disagree";
}

void add_classification(const SandwichDescriptor& s, InvariantReport& r) {
  try {
    r.classification = to_string(uniparameter_report(s));
  } catch (const PreconditionError& e) {
    r.notes.push_back(std::string("classification unavailable: ") + e.what());
  }
}

void add_pi_note(const SandwichDescriptor& s, InvariantReport& r) {
  PiReport pi = is_pi(s);
  std::ostringstream note;
  if (pi.pi)
    note << "polynomial identity: yes (commutation subgroup of order " << pi.card.order << ")";
  else
    note << "polynomial identity: no (infinite commutation subgroup)";
  r.notes.push_back(note.str());
}

void verify_weyl(const ParsedDescriptor& d, InvariantReport& r) {
  WeylReport rep = d.weyl_q ? verify_weyl_normal_elements(*d.weyl_q, *d.weyl_p)
                            : verify_weyl_normal_elements(d.builtin_n);
  if (!rep.ok)
    throw PreconditionError("normal element relation failed: " + rep.failures.front());
  std::ostringstream note;
  note << "straightening confirmed " << rep.checks.size() << " normal-element relations";
  r.notes.push_back(note.str());

  std::size_t n = d.builtin_n;
  ScalarSubgroup skew_tw = trivial_subgroup(d.ctx());
  ScalarSubgroup normal_tw = trivial_subgroup(d.ctx());
  if (d.weyl_q) {
    std::vector<IntVec> images;
    for (const ScalarElement& q : *d.weyl_q) images.push_back(q.exp);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) images.push_back(entry(*d.weyl_p, i, j).exp);
    skew_tw = tw_cgl(substitute_cgl(quantized_weyl_descriptor(n), images, d.ctx()));
    SandwichDescriptor base = weyl_sandwich_descriptor(n);
    normal_tw = tw_invariant(
        make_sandwich(substitute_bicharacter(base.chi, images, d.ctx()), base.phi, base.label));
  } else {
    skew_tw = tw_cgl(quantized_weyl_descriptor(n));
    normal_tw = tw_invariant(weyl_sandwich_descriptor(n));
  }
  if (!(skew_tw == normal_tw))
    throw InternalMismatchError(
        "twist subgroup differs between the normal-element grading and the iterated-skew route");
  r.tw = view_subgroup(skew_tw);
  r.notes.push_back("twist subgroup agrees between the normal-element grading and the "
                    "iterated-skew route");
}

void verify_quantum_matrices(const ParsedDescriptor& d, InvariantReport& r) {
  std::size_t n = d.builtin_n;
  const CglDescriptor& desc = *d.cgl;
  OrePresentation pres = quantum_matrices_presentation(n);
  Bicharacter pres_lambda = pres.lambda;
  if (desc.ctx().arity() == 1) {
    // standard specialization: lambda -> q^-2, every p -> q^-1
    std::vector<IntVec> images{IntVec{Int(-2)}};
    for (std::size_t i = 1; i < pres.ctx().arity(); ++i) images.push_back(IntVec{Int(-1)});
    pres_lambda = substitute_bicharacter(pres_lambda, images, desc.ctx());
  }
  if (!(pres_lambda == desc.lambda))
    throw InternalMismatchError(
        "commutation matrix disagrees between the rewriting presentation and the iterated-skew data");
  r.notes.push_back("commutation matrix agrees with the rewriting presentation");

  std::size_t nn = n * n;
  for (const auto& [k, wit] : desc.delta_witness) {
    auto it = pres.delta.find({k, wit.j});
    if (it == pres.delta.end())
      throw InternalMismatchError("derivation witness has no matching rewriting term");
    if (it->second.terms.size() != 1)
      throw InternalMismatchError("rewriting derivation is not a single monomial");
    const IntVec& mono = it->second.terms.begin()->first;
    for (std::size_t t = 0; t < nn; ++t) {
      Int want = t < wit.m.size() ? wit.m[t] : Int(0);
      if (mono[t] != want)
        throw InternalMismatchError("derivation witness monomial differs from the rewriting term");
    }
  }
  r.notes.push_back("derivation witnesses match the rewriting terms");

  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<std::size_t> var(0, nn - 1);
  std::uniform_int_distribution<long long> pw(1, 2);
  std::uniform_int_distribution<std::size_t> len(2, 4);
  int rounds = n == 2 ? 6 : 3;
  for (int round = 0; round < rounds; ++round) {
    GenWord w;
    std::size_t length = len(rng);
    for (std::size_t t = 0; t < length; ++t) w.push_back({var(rng), pw(rng)});
    NcElement full = straighten(pres, w);
    std::size_t cut = 1 + static_cast<std::size_t>(round) % (length - 1);
    GenWord left(w.begin(), w.begin() + cut), right(w.begin() + cut, w.end());
    if (!(nc_mul(pres, straighten(pres, left), straighten(pres, right)) == full))
      throw InternalMismatchError("straightening is not confluent on a split product");
  }
  r.notes.push_back("confluence spot-checks passed");
  r.tw = view_subgroup(tw_cgl(desc));
}

void verify_quantum_affine(const ParsedDescriptor& d, InvariantReport& r) {
  const Bicharacter& chi = d.cgl->lambda;
  ScalarSubgroup brute = ad_bruteforce(chi, 1);
  if (!(brute == image_subgroup(chi, full_lattice(chi.rank))))
    throw InternalMismatchError("brute-force commutators disagree with the closed-form subgroup");
  r.notes.push_back("radius-1 brute force reproduced the commutation subgroup");

  if (chi.ctx.relations.rank() != 0) {
    r.notes.push_back("sorting oracle skipped: the rewriting engine works over relation-free scalars");
  } else if (chi.rank > 0) {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long long> coord(-2, 2);
    for (int t = 0; t < 5; ++t) {
      IntVec a(chi.rank), b(chi.rank);
      for (Int& v : a) v = coord(rng);
      for (Int& v : b) v = coord(rng);
      ScalarElement got = torus_commutator_scalar(chi, a, b);
      if (!scalar_equal(chi.ctx, got, evaluate(chi, a, b)))
        throw InternalMismatchError("sorting oracle disagrees with the bilinear commutator");
    }
    r.notes.push_back("sorting oracle matched the bilinear commutator on sampled pairs");
  }
  r.ad = view_subgroup(ad_cgl(*d.cgl));
  r.tw = view_subgroup(tw_cgl(*d.cgl));
  add_pi_note(cluster_sandwich(*d.cgl), r);
}

void verify_sandwich(const ParsedDescriptor& d, InvariantReport& r) {
  const SandwichDescriptor& s = *d.sandwich;
  ScalarSubgroup ad = ad_invariant(s);
  r.ad = view_subgroup(ad);
  try {
    ScalarSubgroup tw = tw_invariant(s);
    if (!(subgroup_join(tw, ad) == ad))
      throw InternalMismatchError("twist subgroup escapes the commutation subgroup");
    r.tw = view_subgroup(tw);
    r.notes.push_back("twist subgroup is contained in the commutation subgroup");
  } catch (const PreconditionError& e) {
    r.notes.push_back(std::string("twist subgroup unavailable: ") + e.what());
  }
  add_pi_note(s, r);
}

void verify_cgl(const ParsedDescriptor& d, InvariantReport& r) {
  const CglDescriptor& c = *d.cgl;
  if (c.symmetric) {
    SymmetricReport rep = validate_symmetric(c);
    if (!rep.ok)
      throw PreconditionError("descriptor is flagged symmetric but fails validation: " +
                              rep.failures.front());
    for (const std::string& w : rep.warnings) r.notes.push_back("warning: " + w);
    r.notes.push_back("symmetric witness shape validated");
  }
  ScalarSubgroup ad = ad_cgl(c);
  r.notes.push_back("commutation subgroup agrees with its cluster pullback");
  ScalarSubgroup tw = tw_cgl(c);
  r.notes.push_back("twist subgroup agrees between the direct formula and the cluster route");
  if (!(subgroup_join(tw, ad) == ad))
    throw InternalMismatchError("twist subgroup escapes the commutation subgroup");
  r.notes.push_back("twist subgroup is contained in the commutation subgroup");
  r.ad = view_subgroup(ad);
  r.tw = view_subgroup(tw);
}

void verify_schubert(const ParsedDescriptor& d, InvariantReport& r) {
  const SchubertInput& in = *d.schubert;
  if (!is_reduced(in.cartan, in.word)) throw PreconditionError("word is not reduced");
  r.notes.push_back("word is reduced");
  schubert_invariants(in.cartan, in.word);
  r.notes.push_back("root norms stayed consistent under the reflection action");
  CglDescriptor c = cell_descriptor(in);
  SymmetricReport rep = validate_symmetric(c);
  if (!rep.ok)
    throw PreconditionError("cell descriptor fails symmetric validation: " + rep.failures.front());
  r.notes.push_back("cell witnesses pair cleanly under the commutation matrix");
  ScalarSubgroup tw = tw_cgl(c);
  ScalarSubgroup letter = letter_route_subgroup(in, c.ctx());
  r.ad = view_subgroup(ad_cgl(c));
  r.tw = view_subgroup(tw);
  r.notes.push_back("single-parameter route: " + view_subgroup(letter).display);
  r.notes.push_back(route_note(tw, letter));
}

}  // namespace

InvariantReport cmd_ad(const ParsedDescriptor& d) {
  InvariantReport r;
  r.command = "ad";
  r.label = d.label();
  if (d.sandwich) {
    r.ad = view_subgroup(ad_invariant(*d.sandwich));
    r.notes.push_back("ad generated by the commutation scalars of the cluster");
  } else {
    CglDescriptor c = d.cgl ? *d.cgl : cell_descriptor(*d.schubert);
    r.ad = view_subgroup(ad_cgl(c));
    r.notes.push_back(
        "ad generated by the commutation scalars and cross-checked against the cluster pullback");
  }
  return r;
}

InvariantReport cmd_tw(const ParsedDescriptor& d) {
  InvariantReport r;
  r.command = "tw";
  r.label = d.label();
  if (d.sandwich) {
    r.tw = view_subgroup(tw_invariant(*d.sandwich));
    r.notes.push_back("tw generated by the pairing of the grading kernel with the exponent lattice");
    add_classification(*d.sandwich, r);
    return r;
  }
  CglDescriptor c = d.cgl ? *d.cgl : cell_descriptor(*d.schubert);
  ScalarSubgroup tw = tw_cgl(c);
  r.tw = view_subgroup(tw);
  r.notes.push_back("tw computed from the derivation kernel and cross-checked through the cluster grading");
  if (d.schubert) {
    ScalarSubgroup letter = letter_route_subgroup(*d.schubert, c.ctx());
    r.notes.push_back("single-parameter route: " + view_subgroup(letter).display);
    r.notes.push_back(route_note(tw, letter));
  }
  add_classification(cluster_sandwich(c), r);
  return r;
}

InvariantReport cmd_twist(const ParsedDescriptor& d, const std::vector<CocycleClass>& extra) {
  std::vector<CocycleClass> classes = d.cocycles;
  classes.insert(classes.end(), extra.begin(), extra.end());
  if (classes.empty())
    throw std::invalid_argument(
        "twist: no cocycle class supplied; add a cocycles block or a --cocycle file");
  InvariantReport r;
  r.command = "twist";
  r.label = d.label();
  SandwichDescriptor s = to_sandwich(d, &r.notes);
  CocycleClass cls = classes.front();
  for (std::size_t i = 1; i < classes.size(); ++i) {
    if (!(classes[i].form.ctx == cls.form.ctx))
      throw std::invalid_argument("twist: cocycle classes use different scalar contexts");
    cls = product_class(cls, classes[i]);
  }
  if (!(cls.form.ctx == s.ctx())) {
    if (cls.form.ctx == adjoin_square_roots(s.ctx())) {
      s = refine_descriptor(s);
      r.notes.push_back("descriptor refined to the square-root grid to absorb the class");
    } else {
      throw std::invalid_argument("twist: cocycle class context does not match the descriptor");
    }
  }
  SandwichDescriptor t = apply_twist(s, cls);
  r.notes.push_back("ad before the twist: " + view_subgroup(ad_invariant(s)).display);
  r.ad = view_subgroup(ad_invariant(t));
  ScalarSubgroup before = tw_invariant(s), after = tw_invariant(t);
  if (!(before == after)) throw InternalMismatchError("twisting changed the twist-invariant subgroup");
  r.tw = view_subgroup(after);
  r.notes.push_back("tw unchanged by the twist");
  add_classification(t, r);
  return r;
}

InvariantReport cmd_extend(const ParsedDescriptor& d, std::size_t vars) {
  InvariantReport r;
  r.command = "extend";
  r.label = d.label();
  SandwichDescriptor s = to_sandwich(d, &r.notes);
  SandwichDescriptor e = polynomial_extend(s, vars);
  r.ad = view_subgroup(ad_invariant(e));
  ScalarSubgroup before = tw_invariant(s), after = tw_invariant(e);
  if (!(before == after))
    throw InternalMismatchError("polynomial extension changed the twist subgroup");
  r.tw = view_subgroup(after);
  std::ostringstream note;
  note << "added " << vars << " central polynomial variables; tw is unchanged";
  r.notes.push_back(note.str());
  return r;
}

InvariantReport cmd_schubert(const SchubertInput& in) {
  InvariantReport r;
  r.command = "schubert";
  r.label = in.label;
  SchubertInvariants inv = schubert_invariants(in.cartan, in.word);
  CglDescriptor c = cell_descriptor(in);
  ScalarSubgroup tw = tw_cgl(c);
  r.ad = view_subgroup(ad_cgl(c));
  r.tw = view_subgroup(tw);
  std::ostringstream dn;
  dn << "gcd of the squared root lengths over the support: " << inv.d_of_w;
  r.notes.push_back(dn.str());
  ScalarSubgroup letter = letter_route_subgroup(in, c.ctx());
  r.notes.push_back("single-parameter route: " + view_subgroup(letter).display);
  r.notes.push_back(route_note(tw, letter));
  add_classification(cluster_sandwich(c), r);
  return r;
}

InvariantReport cmd_oracle(const ParsedDescriptor& d, long long radius) {
  InvariantReport r;
  r.command = "oracle";
  r.label = d.label();
  Bicharacter chi = d.sandwich ? d.sandwich->chi : d.cgl ? d.cgl->lambda : d.schubert->matrix;
  ScalarSubgroup brute = ad_bruteforce(chi, radius);
  if (!(brute == image_subgroup(chi, full_lattice(chi.rank))))
    throw InternalMismatchError(
        "brute-force commutators disagree with the closed-form commutation subgroup");
  r.ad = view_subgroup(brute);
  std::ostringstream note;
  note << "box of radius " << radius << " reproduced the closed-form subgroup";
  r.notes.push_back(note.str());
  return r;
}

InvariantReport cmd_verify(const ParsedDescriptor& d) {
  InvariantReport r;
  r.command = "verify";
  r.label = d.label();
  if (d.kind == "weyl")
    verify_weyl(d, r);
  else if (d.kind == "quantum_matrices")
    verify_quantum_matrices(d, r);
  else if (d.kind == "quantum_affine")
    verify_quantum_affine(d, r);
  else if (d.kind == "sandwich")
    verify_sandwich(d, r);
  else if (d.kind == "cgl")
    verify_cgl(d, r);
  else
    verify_schubert(d, r);
  return r;
}

CompareResult cmd_compare(const ParsedDescriptor& a, const ParsedDescriptor& b) {
  if (!(a.ctx() == b.ctx()))
    throw std::invalid_argument("compare: descriptors use different scalar contexts");
  ScalarSubgroup ga = tw_of(a), gb = tw_of(b);
  CompareResult out;
  out.equal = ga == gb;
  out.report.command = "compare";
  out.report.label = a.label() + " vs " + b.label();
  out.report.tw = view_subgroup(ga);
  out.report.notes.push_back("first tw: " + view_subgroup(ga).display);
  out.report.notes.push_back("second tw: " + view_subgroup(gb).display);
  out.report.notes.push_back(out.equal ? "twist subgroups are identical" : "twist subgroups differ");
  return out;
}

namespace {

struct Example {
  std::string name;
  std::function<std::string()> run;
};

void check(bool cond, const char* msg) {
  if (!cond) throw std::runtime_error(msg);
}

}  // namespace

SuiteReport reproduce_examples(bool corrupt) {
  std::vector<Example> examples;

  examples.push_back({"quantum-matrices-2-generic", [corrupt]() {
    CglDescriptor d = quantum_matrices_descriptor(2);
    if (corrupt)
      set_entry(d.lambda, 0, 1,
                scalar_mul(entry(d.lambda, 0, 1), scalar_param(d.ctx(), "lambda")));
    const ScalarContext& ctx = d.ctx();
    ScalarSubgroup tw = tw_cgl(d);
    check(tw == generated_subgroup(ctx, {scalar_param(ctx, "lambda")}),
          "tw should be generated by lambda alone");
    check(ad_cgl(d) == generated_subgroup(
                           ctx, {scalar_param(ctx, "lambda"), scalar_param(ctx, "p12")}),
          "ad should be generated by lambda and p12");
    check(uniparameter_report(cluster_sandwich(d)) == Classification::EssentiallyUniparameter,
          "the generic 2x2 case should be essentially uniparameter");
    return "tw = <lambda>, ad = <lambda, p12>";
  }});

  examples.push_back({"quantum-matrices-2-standard", []() {
    CglDescriptor d = standard_quantum_matrices_descriptor(2);
    const ScalarContext& ctx = d.ctx();
    ScalarSubgroup tw = tw_cgl(d);
    check(tw == generated_subgroup(ctx, {scalar_param(ctx, "q", 2)}), "tw should be <q^2>");
    check(ad_cgl(d) == generated_subgroup(ctx, {scalar_param(ctx, "q")}), "ad should be <q>");
    check(!is_member(tw, scalar_param(ctx, "q")), "q itself should not survive twisting");
    return "tw = <q^2>, ad = <q>, q not in tw";
  }});

  examples.push_back({"quantum-matrices-3-generic", []() {
    CglDescriptor d = quantum_matrices_descriptor(3);
    check(tw_cgl(d) == generated_subgroup(d.ctx(), {scalar_param(d.ctx(), "lambda")}),
          "tw should be generated by lambda alone");
    return "tw = <lambda>";
  }});

  examples.push_back({"quantized-weyl-2-two-routes", []() {
    CglDescriptor c = quantized_weyl_descriptor(2);
    SandwichDescriptor s = weyl_sandwich_descriptor(2);
    check(c.ctx() == s.ctx(), "the two routes must share one scalar context");
    ScalarSubgroup skew = tw_cgl(c), normal = tw_invariant(s);
    check(skew == normal, "the two routes must agree");
    check(skew == generated_subgroup(
                      c.ctx(), {scalar_param(c.ctx(), "q1"), scalar_param(c.ctx(), "q2")}),
          "tw should be <q1, q2>");
    return "tw = <q1, q2> by both routes";
  }});

  examples.push_back({"quantized-weyl-2-specializations", []() {
    ScalarContext ctx = make_context({"q1", "q2"});
    std::vector<IntVec> same{{1, 0}, {1, 0}, {0, 0}};
    std::vector<IntVec> distinct{{1, 0}, {0, 1}, {0, 0}};
    ScalarSubgroup ta = tw_cgl(substitute_cgl(quantized_weyl_descriptor(2), distinct, ctx));
    ScalarSubgroup tb = tw_cgl(substitute_cgl(quantized_weyl_descriptor(2), same, ctx));
    check(ta == generated_subgroup(ctx, {scalar_param(ctx, "q1"), scalar_param(ctx, "q2")}),
          "distinct deformation parameters should both survive");
    check(tb == generated_subgroup(ctx, {scalar_param(ctx, "q1")}),
          "equal deformation parameters should collapse to one line");
    check(!(ta == tb), "the specializations must be distinguished");
    return "tw = <q1, q2> vs <q1>: distinguished";
  }});

  examples.push_back({"quantum-plane-oracle", []() {
    ScalarContext ctx = make_context({"q"});
    Bicharacter chi = trivial_bicharacter(ctx, 2);
    set_entry(chi, 0, 1, scalar_param(ctx, "q"));
    check(ad_bruteforce(chi, 1) == generated_subgroup(ctx, {scalar_param(ctx, "q")}),
          "radius-1 commutators should generate <q>");
    return "radius-1 commutators generate <q>";
  }});

  examples.push_back({"cell-A2-long-word", []() {
    CartanData c = cartan_type("A2");
    WeylWord w{1, 2, 1};
    ScalarSubgroup tw = tw_cgl(schubert_to_cgl(c, w, standard_cell_matrix(c, w)));
    SchubertInvariants inv = schubert_invariants(c, w);
    check(inv.d_of_w == 2, "the support gcd should be 2");
    check(tw == inv.tw, "the cluster route should match the single-parameter route");
    return "tw = <q^2> by both routes";
  }});

  examples.push_back({"cell-G2-long-word", []() {
    CartanData c = cartan_type("G2");
    WeylWord w{1, 2, 1, 2, 1, 2};
    SchubertInvariants inv = schubert_invariants(c, w);
    check(inv.d_of_w == 2, "mixed root lengths should leave gcd 2");
    ScalarSubgroup tw = tw_cgl(schubert_to_cgl(c, w, standard_cell_matrix(c, w)));
    check(tw == inv.tw, "the cluster route should match the single-parameter route");
    return "tw = <q^2> on the full word";
  }});

  examples.push_back({"cell-B2-single-letters", []() {
    CartanData c = cartan_type("B2");
    SchubertInvariants long_root = schubert_invariants(c, {1});
    SchubertInvariants short_root = schubert_invariants(c, {2});
    check(long_root.d_of_w == 4, "the long simple root should give d = 4");
    check(short_root.d_of_w == 2, "the short simple root should give d = 2");
    return "single letters give <q^4> and <q^2>";
  }});

  examples.push_back({"weyl-normal-elements", []() {
    check(verify_weyl_normal_elements(1).ok, "size 1 relations should straighten cleanly");
    check(verify_weyl_normal_elements(2).ok, "size 2 relations should straighten cleanly");
    return "normal-element relations hold for sizes 1 and 2";
  }});

  examples.push_back({"polynomial-to-quantum-twist", []() {
    ScalarContext ctx = make_context({"q"});
    SandwichDescriptor s =
        make_sandwich(trivial_bicharacter(ctx, 2), identity_grading(2), "polynomial-plane");
    Bicharacter form = trivial_bicharacter(ctx, 2);
    set_entry(form, 0, 1, scalar_param(ctx, "q"));
    SandwichDescriptor t = apply_twist(s, CocycleClass{form});
    check(scalar_equal(ctx, entry(t.chi, 0, 1), scalar_param(ctx, "q", 2)),
          "the twisted plane should commute by q^2");
    check(tw_invariant(t) == tw_invariant(s), "tw must not move under the twist");
    return "the polynomial plane twists to the q^2 plane; tw stays trivial";
  }});

  examples.push_back({"cocycle-invariance-standard", []() {
    SandwichDescriptor s = cluster_sandwich(standard_quantum_matrices_descriptor(2));
    std::size_t r = s.phi.target_rank();
    check(r >= 2, "the level grading should have at least two targets");
    Bicharacter form = trivial_bicharacter(s.ctx(), r);
    set_entry(form, 0, 1, scalar_param(s.ctx(), "q"));
    if (r > 2) set_entry(form, 1, 2, scalar_inverse(scalar_param(s.ctx(), "q")));
    check(tw_invariant(apply_twist(s, CocycleClass{form})) == tw_invariant(s),
          "a cocycle twist must preserve tw");
    return "tw of the standard 2x2 cluster is cocycle-stable";
  }});

  examples.push_back({"quantum-affine-trivial", []() {
    ScalarContext ctx = make_context({"q"});
    CglDescriptor d = quantum_affine_descriptor(trivial_bicharacter(ctx, 3), "flat-space");
    check(is_trivial(ad_cgl(d)), "a commutative cluster should have trivial ad");
    check(is_trivial(tw_cgl(d)), "a commutative cluster should have trivial tw");
    return "ad = <1>, tw = <1>";
  }});

  examples.push_back({"root-of-unity-cardinality", []() {
    ScalarContext ctx = make_context({"q"}, {IntVec{3}});
    Bicharacter chi = trivial_bicharacter(ctx, 2);
    set_entry(chi, 0, 1, scalar_param(ctx, "q"));
    CglDescriptor d = quantum_affine_descriptor(chi, "unity-plane");
    GroupOrder card = cardinality(ad_cgl(d));
    check(card.finite && card.order == 3, "the commutation subgroup should have order 3");
    check(is_pi(cluster_sandwich(d)).pi, "a cube root of unity forces a polynomial identity");
    return "order-3 commutation subgroup; polynomial identity detected";
  }});

  SuiteReport out;
  for (const Example& ex : examples) {
    SuiteRow row{ex.name, false, ""};
    try {
      row.detail = ex.run();
      row.pass = true;
    } catch (const std::exception& e) {
      row.detail = e.what();
      out.ok = false;
    }
    out.rows.push_back(row);
  }
  return out;
}

std::string suite_text(const SuiteReport& s) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const SuiteRow& row : s.rows) {
    out << (row.pass ? "PASS " : "FAIL ") << row.name << ": " << row.detail << "\n";
    passed += row.pass ? 1 : 0;
  }
  out << "suite: " << passed << " passed, " << (s.rows.size() - passed) << " failed\n";
  return out.str();
}

std::string suite_json(const SuiteReport& s) {
  nlohmann::json rows = nlohmann::json::array();
  std::size_t passed = 0;
  for (const SuiteRow& row : s.rows) {
    nlohmann::json r;
    r["detail"] = row.detail;
    r["name"] = row.name;
    r["pass"] = row.pass;
    rows.push_back(r);
    passed += row.pass ? 1 : 0;
  }
  nlohmann::json j;
  j["failed"] = s.rows.size() - passed;
  j["ok"] = s.ok;
  j["passed"] = passed;
  j["rows"] = rows;
  return j.dump();
}

}  // namespace qinv
