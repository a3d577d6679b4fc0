#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qinv/descriptor.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>

using namespace qinv;

namespace {

IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

ParsedDescriptor parse(const std::string& text) { return parse_descriptor_text(text); }

// The message of the schema error raised by a bad descriptor.
std::string schema_error(const std::string& text) {
  try {
    parse_descriptor_text(text);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/qinv-descriptor-") + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("parse: builtin quantum matrices") {
  ParsedDescriptor d = parse(R"({"version": 1, "quantum_matrices": {"n": 2}})");
  CHECK(d.kind == "quantum_matrices");
  CHECK(d.builtin_n == 2);
  REQUIRE(d.cgl.has_value());
  CHECK(d.cgl->lambda == quantum_matrices_descriptor(2).lambda);
  CHECK(d.label() == quantum_matrices_descriptor(2).label);
  CHECK(d.cocycles.empty());

  ParsedDescriptor s = parse(R"({"version": 1, "quantum_matrices": {"n": 2, "standard": true}})");
  CHECK(s.cgl->lambda == standard_quantum_matrices_descriptor(2).lambda);
  CHECK(s.ctx().params == std::vector<std::string>{"q"});
}

TEST_CASE("parse: builtin scalars must match exactly when given") {
  std::string ok = R"({"version": 1,
    "scalars": {"params": ["lambda", "p12"]},
    "quantum_matrices": {"n": 2}})";
  CHECK(parse(ok).kind == "quantum_matrices");
  std::string bad = R"({"version": 1,
    "scalars": {"params": ["q"]},
    "quantum_matrices": {"n": 2}})";
  CHECK(schema_error(bad).find("must match the builtin parameters") != std::string::npos);
}

TEST_CASE("parse: weyl generic routes") {
  ParsedDescriptor c = parse(R"({"version": 1, "weyl": {"n": 2}})");
  CHECK(c.kind == "weyl");
  REQUIRE(c.cgl.has_value());
  CHECK(c.cgl->lambda == quantized_weyl_descriptor(2).lambda);
  CHECK_FALSE(c.weyl_q.has_value());

  ParsedDescriptor s = parse(R"({"version": 1, "weyl": {"n": 2, "route": "sandwich"}})");
  REQUIRE(s.sandwich.has_value());
  CHECK(s.sandwich->chi == weyl_sandwich_descriptor(2).chi);
  CHECK_FALSE(s.cgl.has_value());
}

TEST_CASE("parse: weyl specialization substitutes the builtin data") {
  std::string text = R"({"version": 1,
    "scalars": {"params": ["q1", "q2"]},
    "weyl": {"n": 2, "q": [[1, 0], [0, 1]]}})";
  ParsedDescriptor d = parse(text);
  REQUIRE(d.cgl.has_value());
  REQUIRE(d.weyl_q.has_value());
  CHECK(d.ctx().params == std::vector<std::string>{"q1", "q2"});
  // p12 defaults to 1, so the lambda entries mention only q1, q2
  const ScalarContext& ctx = d.ctx();
  CHECK(tw_cgl(*d.cgl) ==
        generated_subgroup(ctx, {scalar_param(ctx, "q1"), scalar_param(ctx, "q2")}));

  // collapsing q2 onto q1 shrinks the twist subgroup
  std::string collapsed = R"({"version": 1,
    "scalars": {"params": ["q1", "q2"]},
    "weyl": {"n": 2, "q": [[1, 0], [1, 0]]}})";
  ParsedDescriptor e = parse(collapsed);
  CHECK(tw_cgl(*e.cgl) == generated_subgroup(ctx, {scalar_param(ctx, "q1")}));
}

TEST_CASE("parse: weyl specialization with explicit p entries") {
  std::string text = R"({"version": 1,
    "scalars": {"params": ["q", "p"]},
    "weyl": {"n": 2, "q": [[1, 0], [1, 0]], "p": [{"i": 1, "j": 2, "exp": [0, 1]}]}})";
  ParsedDescriptor d = parse(text);
  REQUIRE(d.weyl_p.has_value());
  CHECK(scalar_equal(d.ctx(), entry(*d.weyl_p, 0, 1), scalar_param(d.ctx(), "p")));
  // the y_2 y_1 commutation scalar of the symmetric cluster is p12
  CHECK(scalar_equal(d.ctx(), entry(d.cgl->lambda, 1, 0), scalar_param(d.ctx(), "p")));
}

TEST_CASE("parse: quantum affine over explicit scalars") {
  std::string text = R"({"version": 1,
    "scalars": {"params": ["q"]},
    "quantum_affine": {"label": "plane",
      "chi": {"rank": 2, "entries": [{"i": 1, "j": 2, "exp": [1]}]}}})";
  ParsedDescriptor d = parse(text);
  CHECK(d.kind == "quantum_affine");
  CHECK(d.label() == "plane");
  CHECK(scalar_equal(d.ctx(), entry(d.cgl->lambda, 0, 1), scalar_param(d.ctx(), "q")));
  CHECK(d.cgl->delta_witness.empty());
}

TEST_CASE("parse: schubert by type and by matrix") {
  ParsedDescriptor d = parse(R"({"version": 1, "schubert": {"type": "A2", "word": [1, 2, 1]}})");
  CHECK(d.kind == "schubert");
  REQUIRE(d.schubert.has_value());
  CHECK(d.schubert->word == WeylWord{1, 2, 1});
  CHECK(d.schubert->matrix == standard_cell_matrix(cartan_type("A2"), {1, 2, 1}));
  CHECK(d.label() == "A2-cell-1-2-1");

  std::string gcm = R"({"version": 1,
    "schubert": {"gcm": [[2, -1], [-2, 2]], "word": [2], "label": "short-root"}})";
  ParsedDescriptor g = parse(gcm);
  CHECK(g.schubert->cartan.d == cartan_type("B2").d);
  CHECK(g.label() == "short-root");

  std::string explicit_matrix = R"({"version": 1,
    "scalars": {"params": ["q"]},
    "schubert": {"type": "A2", "word": [1, 2],
      "matrix": {"rank": 2, "entries": [{"i": 1, "j": 2, "exp": [1]}]}}})";
  ParsedDescriptor m = parse(explicit_matrix);
  CHECK(scalar_equal(m.ctx(), entry(m.schubert->matrix, 0, 1), scalar_param(m.ctx(), "q")));
}

TEST_CASE("parse: schubert scalars may carry relations for the default matrix") {
  std::string text = R"({"version": 1,
    "scalars": {"params": ["q"], "relations": [[6]]},
    "schubert": {"type": "A2", "word": [1, 2, 1]}})";
  ParsedDescriptor d = parse(text);
  CHECK(d.ctx().relations.rank() == 1);
  GroupOrder card = cardinality(tw_cgl(schubert_to_cgl(d.schubert->cartan, d.schubert->word,
                                                       d.schubert->matrix)));
  CHECK(card.finite);
  CHECK(card.order == 3);  // <q^2> inside Z/6
}

TEST_CASE("parse: sandwich payload") {
  std::string text = R"({"version": 1,
    "scalars": {"params": ["q"]},
    "sandwich": {"label": "plane",
      "chi": {"rank": 2, "entries": [{"i": 1, "j": 2, "exp": [1]}]},
      "phi": {"target_rank": 1, "rows": [[1], [1]]}}})";
  ParsedDescriptor d = parse(text);
  CHECK(d.kind == "sandwich");
  REQUIRE(d.sandwich.has_value());
  CHECK(d.sandwich->phi.target_rank() == 1);
  CHECK(tw_invariant(*d.sandwich) ==
        generated_subgroup(d.ctx(), {scalar_param(d.ctx(), "q")}));
}

TEST_CASE("parse: cgl payload round-trips the builtin data") {
  // hand-written descriptor of the quantum plane at level grading (1, 2)
  std::string text = R"({"version": 1,
    "scalars": {"params": ["q"]},
    "cgl": {"label": "plane",
      "lambda": {"rank": 2, "entries": [{"i": 1, "j": 2, "exp": [-1]}]},
      "eta": [1, 2],
      "delta_witness": {},
      "lambda_k": {},
      "symmetric": false}})";
  ParsedDescriptor d = parse(text);
  CHECK(d.kind == "cgl");
  CHECK(d.cgl->eta == std::vector<long long>{1, 2});
  CHECK(ad_cgl(*d.cgl) == generated_subgroup(d.ctx(), {scalar_param(d.ctx(), "q")}));
}

TEST_CASE("parse: cgl witnesses with one-based keys") {
  std::string text = R"({"version": 1,
    "scalars": {"params": ["q"]},
    "cgl": {"label": "toy",
      "lambda": {"rank": 3, "entries": [
        {"i": 1, "j": 3, "exp": [1]}, {"i": 2, "j": 3, "exp": [-1]}]},
      "eta": [1, 1, 2],
      "delta_witness": {"3": {"j": 2, "m": [1, 0]}},
      "lambda_k": {"3": [1]},
      "symmetric": false}})";
  ParsedDescriptor d = parse(text);
  REQUIRE(d.cgl->delta_witness.count(2) == 1);
  CHECK(d.cgl->delta_witness.at(2).j == 1);
  CHECK(d.cgl->delta_witness.at(2).m == iv({1, 0}));
  CHECK(scalar_equal(d.ctx(), d.cgl->lambda_k.at(2), scalar_param(d.ctx(), "q")));
}

TEST_CASE("parse: cocycles ride along the descriptor") {
  std::string text = R"({"version": 1,
    "scalars": {"params": ["q"]},
    "quantum_affine": {"chi": {"rank": 2, "entries": []}},
    "cocycles": [
      {"form": {"rank": 2, "entries": [{"i": 1, "j": 2, "exp": [1]}]}},
      {"bilinear": {"rank": 2, "rows": [[[0], [2]], [[0], [0]]]}}]})";
  ParsedDescriptor d = parse(text);
  REQUIRE(d.cocycles.size() == 2);
  CHECK(scalar_equal(d.ctx(), entry(d.cocycles[0].form, 0, 1), scalar_param(d.ctx(), "q")));
  // (b - b^T)/2 of the bilinear matrix has entry q at (1, 2)
  CHECK(d.cocycles[1] == d.cocycles[0]);
}

TEST_CASE("parse: skew ratios halve onto the refined grid when odd") {
  std::string text = R"({"version": 1,
    "scalars": {"params": ["q"]},
    "quantum_affine": {"chi": {"rank": 2, "entries": []}},
    "cocycles": [{"skew_ratios": {"rank": 2, "entries": [{"i": 1, "j": 2, "exp": [1]}]}}]})";
  ParsedDescriptor d = parse(text);
  REQUIRE(d.cocycles.size() == 1);
  CHECK(d.cocycles[0].form.ctx.scale == 2);
}

TEST_CASE("parse: schema errors name the offending key") {
  CHECK(schema_error("not json at all").find("not valid JSON") != std::string::npos);
  CHECK(schema_error(R"({"version": 2, "weyl": {"n": 1}})").find("version") != std::string::npos);
  CHECK(schema_error(R"({"version": 1})").find("exactly one payload") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "weyl": {"n": 1}, "cgl": {}})")
            .find("exactly one payload") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "weyl": {"n": 1}, "extra": 3})")
            .find("unknown key \"extra\"") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "weyl": {"n": 1, "boost": 2}})")
            .find("unknown key \"boost\"") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "weyl": {"n": 0}})").find("positive") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "quantum_affine": {"chi": {"rank": 1}}})")
            .find("scalars block is required") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "weyl": {"n": 2, "p": [{"i": 1, "j": 2, "exp": [1]}]}})")
            .find("q must accompany p") != std::string::npos);
}

TEST_CASE("parse: bicharacter entry validation") {
  std::string dup = R"({"version": 1, "scalars": {"params": ["q"]},
    "quantum_affine": {"chi": {"rank": 2, "entries": [
      {"i": 1, "j": 2, "exp": [1]}, {"i": 1, "j": 2, "exp": [2]}]}}})";
  CHECK(schema_error(dup).find("duplicate") != std::string::npos);
  std::string lower = R"({"version": 1, "scalars": {"params": ["q"]},
    "quantum_affine": {"chi": {"rank": 2, "entries": [{"i": 2, "j": 1, "exp": [1]}]}}})";
  CHECK(schema_error(lower).find("1 <= i < j <= rank") != std::string::npos);
  std::string arity = R"({"version": 1, "scalars": {"params": ["q"]},
    "quantum_affine": {"chi": {"rank": 2, "entries": [{"i": 1, "j": 2, "exp": [1, 1]}]}}})";
  CHECK(schema_error(arity).find("length 1") != std::string::npos);
}

TEST_CASE("parse: cgl shape validation") {
  std::string eta = R"({"version": 1, "scalars": {"params": ["q"]},
    "cgl": {"lambda": {"rank": 2, "entries": []}, "eta": [1]}})";
  CHECK(schema_error(eta).find("one level per variable") != std::string::npos);
  std::string keys = R"({"version": 1, "scalars": {"params": ["q"]},
    "cgl": {"lambda": {"rank": 2, "entries": []}, "eta": [1, 1],
            "delta_witness": {"2": {"j": 1, "m": [1]}}, "lambda_k": {}}})";
  CHECK(schema_error(keys).find("same variables") != std::string::npos);
  std::string late = R"({"version": 1, "scalars": {"params": ["q"]},
    "cgl": {"lambda": {"rank": 2, "entries": []}, "eta": [1, 1],
            "delta_witness": {"2": {"j": 2, "m": [1]}}, "lambda_k": {"2": [1]}}})";
  CHECK(schema_error(late).find("earlier variable") != std::string::npos);
  std::string negative = R"({"version": 1, "scalars": {"params": ["q"]},
    "cgl": {"lambda": {"rank": 2, "entries": []}, "eta": [1, 1],
            "delta_witness": {"2": {"j": 1, "m": [-1]}}, "lambda_k": {"2": [1]}}})";
  CHECK(schema_error(negative).find("nonnegative") != std::string::npos);
}

TEST_CASE("parse: schubert shape validation") {
  CHECK(schema_error(R"({"version": 1, "schubert": {"word": [1]}})")
            .find("exactly one of type, gcm") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "schubert": {"type": "A2", "word": [3]}})")
            .find("1..rank") != std::string::npos);
  std::string rank = R"({"version": 1, "scalars": {"params": ["q"]},
    "schubert": {"type": "A2", "word": [1, 2],
      "matrix": {"rank": 3, "entries": []}}})";
  CHECK(schema_error(rank).find("word length") != std::string::npos);
  std::string scale = R"({"version": 1, "scalars": {"params": ["t"]},
    "schubert": {"type": "A2", "word": [1]}})";
  CHECK(schema_error(scale).find("single parameter q") != std::string::npos);
}

TEST_CASE("parse: scalars block validation") {
  CHECK(schema_error(R"({"version": 1, "scalars": {"params": []}, "weyl": {"n": 1}})")
            .find("nonempty") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "scalars": {"params": ["q", "q"]},
    "quantum_affine": {"chi": {"rank": 1}}})")
            .find("duplicate") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "scalars": {"params": ["q"], "scale": 3},
    "quantum_affine": {"chi": {"rank": 1}}})")
            .find("power of two") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "scalars": {"params": ["q"], "relations": [[1, 2]]},
    "quantum_affine": {"chi": {"rank": 1}}})")
            .find("length 1") != std::string::npos);
}

TEST_CASE("parse: cocycle object validation") {
  std::string both = R"({"version": 1, "scalars": {"params": ["q"]},
    "quantum_affine": {"chi": {"rank": 2, "entries": []}},
    "cocycles": [{"form": {"rank": 2, "entries": []},
                  "bilinear": {"rank": 2, "rows": [[[0], [0]], [[0], [0]]]}}]})";
  CHECK(schema_error(both).find("exactly one of form") != std::string::npos);
}

TEST_CASE("files: descriptor and cocycle files") {
  std::string path = write_temp("qm2.json", R"({"version": 1, "quantum_matrices": {"n": 2}})");
  CHECK(parse_descriptor_file(path).kind == "quantum_matrices");
  CHECK(schema_error("") != "");  // empty text is not valid JSON
  CHECK_THROWS_AS(parse_descriptor_file("/tmp/qinv-no-such-file.json"), std::invalid_argument);

  std::string cpath = write_temp("cocycle.json", R"({"version": 1,
    "scalars": {"params": ["q"]},
    "cocycle": {"form": {"rank": 3, "entries": [{"i": 1, "j": 2, "exp": [1]}]}}})");
  CocycleClass c = parse_cocycle_file(cpath);
  CHECK(c.form.rank == 3);
  std::string bad = write_temp("bad-cocycle.json", R"({"version": 1, "cocycle": {}})");
  CHECK_THROWS_AS(parse_cocycle_file(bad), std::invalid_argument);
  std::remove(path.c_str());
  std::remove(cpath.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("substitution: elements are exponent-linear") {
  ScalarContext target = make_context({"a", "b"});
  // source parameters x, y with x -> a b^2, y -> b^-1
  std::vector<IntVec> images{iv({1, 2}), iv({0, -1})};
  ScalarElement s{iv({2, 3})};  // x^2 y^3
  CHECK(substitute_element(s, images, target).exp == iv({2, 1}));
  CHECK_THROWS_AS(substitute_element(ScalarElement{iv({1})}, images, target),
                  std::invalid_argument);
}

TEST_CASE("substitution: bicharacters map entrywise") {
  ScalarContext source = make_context({"x", "y"});
  Bicharacter chi = trivial_bicharacter(source, 2);
  set_entry(chi, 0, 1, ScalarElement{iv({1, -1})});
  ScalarContext target = make_context({"t"});
  Bicharacter sub = substitute_bicharacter(chi, {iv({2}), iv({1})}, target);
  CHECK(scalar_equal(target, entry(sub, 0, 1), scalar_param(target, "t")));
  CHECK(scalar_equal(target, entry(sub, 1, 0), scalar_inverse(scalar_param(target, "t"))));
}

TEST_CASE("views: display and shape of subgroups") {
  ScalarContext ctx = make_context({"q", "p"});
  SubgroupView trivial = view_subgroup(trivial_subgroup(ctx));
  CHECK(trivial.display == "<1>");
  CHECK(trivial.free_rank == 0);
  CHECK(trivial.generators.empty());

  SubgroupView line = view_subgroup(generated_subgroup(ctx, {scalar_param(ctx, "q", 2)}));
  CHECK(line.display == "<q^2>");
  CHECK(line.free_rank == 1);
  CHECK(line.torsion.empty());

  ScalarContext unity = make_context({"q"}, {iv({6})});
  SubgroupView torsion = view_subgroup(generated_subgroup(unity, {scalar_param(unity, "q")}));
  CHECK(torsion.free_rank == 0);
  REQUIRE(torsion.torsion.size() == 1);
  CHECK(torsion.torsion[0] == "6");
}

TEST_CASE("reports: text layout") {
  InvariantReport r;
  r.command = "tw";
  r.label = "plane";
  SubgroupView v;
  v.generators = {"q^2"};
  v.free_rank = 1;
  v.display = "<q^2>";
  r.tw = v;
  r.classification = "essentially-uniparameter";
  r.notes = {"one note"};
  CHECK(report_text(r) ==
        "label: plane\n"
        "command: tw\n"
        "tw: <q^2>\n"
        "tw free rank: 1\n"
        "classification: essentially-uniparameter\n"
        "notes:\n"
        "  - one note\n");
}

TEST_CASE("reports: json is canonical and round-trips") {
  InvariantReport r;
  r.command = "ad";
  r.label = "test";
  SubgroupView v;
  v.generators = {"q"};
  v.free_rank = 1;
  v.display = "<q>";
  r.ad = v;
  r.notes = {"b-note", "a-note"};
  std::string bytes = report_json(r);
  nlohmann::json parsed = nlohmann::json::parse(bytes);
  CHECK(parsed.dump() == bytes);
  CHECK(parsed.at("command") == "ad");
  CHECK(parsed.at("ad").at("free_rank") == 1);
  CHECK(parsed.at("notes")[0] == "b-note");  // note order is preserved
  CHECK_FALSE(parsed.contains("tw"));
  CHECK_FALSE(parsed.contains("classification"));
}
