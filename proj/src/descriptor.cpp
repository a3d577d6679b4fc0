#include "qinv/descriptor.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qinv {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_keys(const json& obj, const char* where,
                  std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(std::string(where) + ": expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) { known = true; break; }
    if (!known) fail(std::string(where) + ": unknown key \"" + item.key() + "\"");
  }
}

long long to_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where + ": expected an integer");
  return v.get<long long>();
}

std::string to_str(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where + ": expected a string");
  return v.get<std::string>();
}

IntVec parse_exp(const json& v, std::size_t len, const std::string& where) {
  if (!v.is_array() || v.size() != len) {
    std::ostringstream msg;
    msg << where << ": expected an exponent vector of length " << len;
    fail(msg.str());
  }
  IntVec out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = to_int(v[i], where);
  return out;
}

ScalarContext parse_context(const json& j) {
  require_keys(j, "scalars", {"params", "relations", "scale"});
  if (!j.contains("params")) fail("scalars: missing params");
  const json& p = j.at("params");
  if (!p.is_array() || p.empty()) fail("scalars.params: expected a nonempty array");
  std::vector<std::string> params;
  for (const json& name : p) {
    std::string s = to_str(name, "scalars.params");
    if (s.empty()) fail("scalars.params: empty parameter name");
    params.push_back(s);
  }
  std::set<std::string> uniq(params.begin(), params.end());
  if (uniq.size() != params.size()) fail("scalars.params: duplicate parameter name");

  std::vector<IntVec> rows;
  if (j.contains("relations")) {
    const json& r = j.at("relations");
    if (!r.is_array()) fail("scalars.relations: expected an array of rows");
    for (const json& row : r) rows.push_back(parse_exp(row, params.size(), "scalars.relations"));
  }
  ScalarContext ctx = make_context(params, rows);
  if (j.contains("scale")) {
    long long s = to_int(j.at("scale"), "scalars.scale");
    if (s < 1 || (s & (s - 1)) != 0) fail("scalars.scale: expected a power of two");
    ctx.scale = s;
  }
  return ctx;
}

Bicharacter parse_bicharacter(const json& j, const ScalarContext& ctx, const std::string& where) {
  require_keys(j, where.c_str(), {"rank", "entries"});
  if (!j.contains("rank")) fail(where + ": missing rank");
  long long rank = to_int(j.at("rank"), where + ".rank");
  if (rank < 0) fail(where + ".rank: expected a nonnegative integer");
  Bicharacter chi = trivial_bicharacter(ctx, static_cast<std::size_t>(rank));
  if (!j.contains("entries")) return chi;
  const json& entries = j.at("entries");
  if (!entries.is_array()) fail(where + ".entries: expected an array");
  std::set<std::pair<long long, long long>> seen;
  for (const json& e : entries) {
    require_keys(e, (where + ".entries").c_str(), {"i", "j", "exp"});
    if (!e.contains("i") || !e.contains("j") || !e.contains("exp"))
      fail(where + ".entries: each entry needs i, j, exp");
    long long i = to_int(e.at("i"), where + ".entries.i");
    long long jj = to_int(e.at("j"), where + ".entries.j");
    if (i < 1 || jj <= i || jj > rank)
      fail(where + ".entries: indices must satisfy 1 <= i < j <= rank");
    if (!seen.insert({i, jj}).second) fail(where + ".entries: duplicate index pair");
    set_entry(chi, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1),
              ScalarElement{parse_exp(e.at("exp"), ctx.arity(), where + ".entries.exp")});
  }
  return chi;
}

GradingMap parse_grading(const json& j, const std::string& where) {
  require_keys(j, where.c_str(), {"target_rank", "rows"});
  if (!j.contains("target_rank") || !j.contains("rows"))
    fail(where + ": needs target_rank and rows");
  long long r = to_int(j.at("target_rank"), where + ".target_rank");
  if (r < 0) fail(where + ".target_rank: expected a nonnegative integer");
  const json& rows = j.at("rows");
  if (!rows.is_array()) fail(where + ".rows: expected an array of rows");
  std::vector<IntVec> parsed;
  for (const json& row : rows)
    parsed.push_back(parse_exp(row, static_cast<std::size_t>(r), where + ".rows"));
  return grading_from_rows(static_cast<std::size_t>(r), parsed);
}

CocycleClass parse_cocycle_object(const json& j, const ScalarContext& ctx) {
  require_keys(j, "cocycle", {"form", "skew_ratios", "bilinear"});
  int count = int(j.contains("form")) + int(j.contains("skew_ratios")) + int(j.contains("bilinear"));
  if (count != 1) fail("cocycle: provide exactly one of form, skew_ratios, bilinear");
  if (j.contains("form"))
    return CocycleClass{parse_bicharacter(j.at("form"), ctx, "cocycle.form")};
  if (j.contains("skew_ratios"))
    return cocycle_from_skew_ratios(parse_bicharacter(j.at("skew_ratios"), ctx, "cocycle.skew_ratios"));
  const json& b = j.at("bilinear");
  require_keys(b, "cocycle.bilinear", {"rank", "rows"});
  if (!b.contains("rank") || !b.contains("rows")) fail("cocycle.bilinear: needs rank and rows");
  long long rank = to_int(b.at("rank"), "cocycle.bilinear.rank");
  if (rank < 0) fail("cocycle.bilinear.rank: expected a nonnegative integer");
  const json& rows = b.at("rows");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(rank))
    fail("cocycle.bilinear.rows: expected rank many rows");
  std::vector<IntVec> flat;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
      fail("cocycle.bilinear.rows: each row needs rank many exponent vectors");
    for (const json& cell : row)
      flat.push_back(parse_exp(cell, ctx.arity(), "cocycle.bilinear.rows"));
  }
  return cocycle_from_bilinear(ctx, static_cast<std::size_t>(rank), flat);
}

std::size_t parse_var_key(const std::string& key, std::size_t n, const std::string& where) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    fail(where + ": keys must be variable numbers, got \"" + key + "\"");
  unsigned long k = std::stoul(key);
  if (k < 1 || k > n) fail(where + ": variable number " + key + " out of range");
  return static_cast<std::size_t>(k);
}

CglDescriptor parse_cgl_payload(const json& j, const ScalarContext& ctx) {
  require_keys(j, "cgl", {"label", "lambda", "eta", "delta_witness", "lambda_k", "symmetric", "pi"});
  if (!j.contains("lambda")) fail("cgl: missing lambda");
  CglDescriptor d;
  d.lambda = parse_bicharacter(j.at("lambda"), ctx, "cgl.lambda");
  std::size_t n = d.lambda.rank;

  if (!j.contains("eta")) fail("cgl: missing eta");
  const json& eta = j.at("eta");
  if (!eta.is_array() || eta.size() != n) fail("cgl.eta: expected one level per variable");
  for (const json& v : eta) d.eta.push_back(to_int(v, "cgl.eta"));

  if (j.contains("delta_witness")) {
    const json& dw = j.at("delta_witness");
    if (!dw.is_object()) fail("cgl.delta_witness: expected an object keyed by variable number");
    for (const auto& item : dw.items()) {
      std::size_t k = parse_var_key(item.key(), n, "cgl.delta_witness");
      require_keys(item.value(), "cgl.delta_witness", {"j", "m"});
      if (!item.value().contains("j") || !item.value().contains("m"))
        fail("cgl.delta_witness: each witness needs j and m");
      long long jj = to_int(item.value().at("j"), "cgl.delta_witness.j");
      if (jj < 1 || static_cast<std::size_t>(jj) >= k)
        fail("cgl.delta_witness.j: must name an earlier variable");
      IntVec m = parse_exp(item.value().at("m"), k - 1, "cgl.delta_witness.m");
      for (const Int& e : m)
        if (e < 0) fail("cgl.delta_witness.m: exponents must be nonnegative");
      d.delta_witness[k - 1] = DeltaWitness{static_cast<std::size_t>(jj - 1), m};
    }
  }
  if (j.contains("lambda_k")) {
    const json& lk = j.at("lambda_k");
    if (!lk.is_object()) fail("cgl.lambda_k: expected an object keyed by variable number");
    for (const auto& item : lk.items()) {
      std::size_t k = parse_var_key(item.key(), n, "cgl.lambda_k");
      d.lambda_k[k - 1] = ScalarElement{parse_exp(item.value(), ctx.arity(), "cgl.lambda_k")};
    }
  }
  {
    auto wi = d.delta_witness.begin();
    auto li = d.lambda_k.begin();
    for (; wi != d.delta_witness.end() && li != d.lambda_k.end(); ++wi, ++li)
      if (wi->first != li->first) break;
    if (wi != d.delta_witness.end() || li != d.lambda_k.end())
      fail("cgl: delta_witness and lambda_k must cover the same variables");
  }

  if (j.contains("symmetric")) {
    if (!j.at("symmetric").is_boolean()) fail("cgl.symmetric: expected a boolean");
    d.symmetric = j.at("symmetric").get<bool>();
  }
  if (j.contains("pi")) {
    GradingMap pi = parse_grading(j.at("pi"), "cgl.pi");
    if (pi.source_rank() != n) fail("cgl.pi: grading needs one row per variable");
    d.grading_pi = pi;
  }
  d.label = j.contains("label") ? to_str(j.at("label"), "cgl.label") : std::string("cgl");
  return d;
}

void check_builtin_scalars(const std::optional<ScalarContext>& given,
                           const ScalarContext& builtin, const char* where) {
  if (!given) return;
  if (!(*given == builtin))
    fail(std::string(where) + ": scalars must match the builtin parameters exactly");
}

void parse_weyl_payload(const json& j, const std::optional<ScalarContext>& scalars,
                        ParsedDescriptor& out) {
  require_keys(j, "weyl", {"n", "route", "q", "p"});
  if (!j.contains("n")) fail("weyl: missing n");
  long long n = to_int(j.at("n"), "weyl.n");
  if (n < 1) fail("weyl.n: expected a positive integer");
  std::string route = "cgl";
  if (j.contains("route")) {
    route = to_str(j.at("route"), "weyl.route");
    if (route != "cgl" && route != "sandwich") fail("weyl.route: expected \"cgl\" or \"sandwich\"");
  }
  std::size_t un = static_cast<std::size_t>(n);
  out.kind = "weyl";
  out.builtin_n = un;

  if (!j.contains("q") && !j.contains("p")) {
    CglDescriptor generic = quantized_weyl_descriptor(un);
    check_builtin_scalars(scalars, generic.ctx(), "weyl");
    if (route == "cgl")
      out.cgl = generic;
    else
      out.sandwich = weyl_sandwich_descriptor(un);
    return;
  }

  if (!j.contains("q")) fail("weyl: q must accompany p");
  if (!scalars) fail("weyl: scalars block is required when q or p is specialized");
  const ScalarContext& ctx = *scalars;

  const json& q = j.at("q");
  if (!q.is_array() || q.size() != un) fail("weyl.q: expected one exponent vector per index");
  std::vector<IntVec> images;
  for (const json& v : q) images.push_back(parse_exp(v, ctx.arity(), "weyl.q"));

  Bicharacter p = trivial_bicharacter(ctx, un);
  if (j.contains("p")) {
    const json& pj = j.at("p");
    if (!pj.is_array()) fail("weyl.p: expected an array of entries");
    std::set<std::pair<long long, long long>> seen;
    for (const json& e : pj) {
      require_keys(e, "weyl.p", {"i", "j", "exp"});
      if (!e.contains("i") || !e.contains("j") || !e.contains("exp"))
        fail("weyl.p: each entry needs i, j, exp");
      long long i = to_int(e.at("i"), "weyl.p.i");
      long long jj = to_int(e.at("j"), "weyl.p.j");
      if (i < 1 || jj <= i || jj > n) fail("weyl.p: indices must satisfy 1 <= i < j <= n");
      if (!seen.insert({i, jj}).second) fail("weyl.p: duplicate index pair");
      set_entry(p, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1),
                ScalarElement{parse_exp(e.at("exp"), ctx.arity(), "weyl.p.exp")});
    }
  }
  for (std::size_t i = 0; i + 1 < un; ++i)
    for (std::size_t jj = i + 1; jj < un; ++jj) images.push_back(entry(p, i, jj).exp);

  if (route == "cgl")
    out.cgl = substitute_cgl(quantized_weyl_descriptor(un), images, ctx);
  else {
    SandwichDescriptor base = weyl_sandwich_descriptor(un);
    out.sandwich = make_sandwich(substitute_bicharacter(base.chi, images, ctx), base.phi, base.label);
  }
  std::vector<ScalarElement> qv;
  for (std::size_t i = 0; i < un; ++i) qv.push_back(ScalarElement{images[i]});
  out.weyl_q = qv;
  out.weyl_p = p;
}

void parse_schubert_payload(const json& j, const std::optional<ScalarContext>& scalars,
                            ParsedDescriptor& out) {
  require_keys(j, "schubert", {"type", "gcm", "word", "matrix", "label"});
  int sources = int(j.contains("type")) + int(j.contains("gcm"));
  if (sources != 1) fail("schubert: provide exactly one of type, gcm");
  CartanData cartan;
  std::string type_name;
  if (j.contains("type")) {
    type_name = to_str(j.at("type"), "schubert.type");
    cartan = cartan_type(type_name);
  } else {
    const json& g = j.at("gcm");
    if (!g.is_array() || g.empty()) fail("schubert.gcm: expected a nonempty matrix");
    std::vector<std::vector<long long>> rows;
    for (const json& row : g) {
      if (!row.is_array()) fail("schubert.gcm: expected a matrix of integers");
      std::vector<long long> r;
      for (const json& v : row) r.push_back(to_int(v, "schubert.gcm"));
      rows.push_back(r);
    }
    cartan = make_cartan(rows);
  }

  if (!j.contains("word")) fail("schubert: missing word");
  const json& w = j.at("word");
  if (!w.is_array()) fail("schubert.word: expected an array of letters");
  WeylWord word;
  for (const json& v : w) {
    long long letter = to_int(v, "schubert.word");
    if (letter < 1 || static_cast<std::size_t>(letter) > cartan.rank)
      fail("schubert.word: letters must lie in 1..rank");
    word.push_back(static_cast<std::size_t>(letter));
  }

  SchubertInput in;
  in.cartan = cartan;
  in.word = word;
  if (j.contains("matrix")) {
    if (!scalars) fail("schubert.matrix: scalars block is required for an explicit matrix");
    in.matrix = parse_bicharacter(j.at("matrix"), *scalars, "schubert.matrix");
    if (in.matrix.rank != word.size())
      fail("schubert.matrix: rank must equal the word length");
  } else {
    Bicharacter standard = standard_cell_matrix(cartan, word);
    if (scalars) {
      if (scalars->params != standard.ctx.params || scalars->scale != 1)
        fail("schubert: scalars must use the single parameter q when no matrix is given");
      in.matrix = substitute_bicharacter(standard, {IntVec{Int(1)}}, *scalars);
    } else {
      in.matrix = standard;
    }
  }

  std::ostringstream label;
  if (j.contains("label")) {
    label << to_str(j.at("label"), "schubert.label");
  } else {
    label << (type_name.empty() ? std::string("cartan") : type_name) << "-cell";
    for (std::size_t letter : word) label << "-" << letter;
  }
  in.label = label.str();
  out.kind = "schubert";
  out.schubert = in;
}

ParsedDescriptor parse_descriptor_json(const json& j) {
  if (!j.is_object()) fail("descriptor: top level must be an object");
  require_keys(j, "descriptor",
               {"version", "scalars", "sandwich", "cgl", "weyl", "quantum_matrices",
                "quantum_affine", "schubert", "cocycles"});
  if (!j.contains("version") || !j.at("version").is_number_integer() ||
      j.at("version").get<long long>() != 1)
    fail("descriptor: version must be 1");

  const char* payload_keys[] = {"sandwich",        "cgl",            "weyl",
                                "quantum_matrices", "quantum_affine", "schubert"};
  int payloads = 0;
  for (const char* k : payload_keys) payloads += int(j.contains(k));
  if (payloads != 1)
    fail("descriptor: exactly one payload of sandwich, cgl, weyl, quantum_matrices, "
         "quantum_affine, schubert");

  std::optional<ScalarContext> scalars;
  if (j.contains("scalars")) scalars = parse_context(j.at("scalars"));

  ParsedDescriptor out;
  if (j.contains("sandwich")) {
    if (!scalars) fail("sandwich: scalars block is required");
    const json& p = j.at("sandwich");
    require_keys(p, "sandwich", {"label", "chi", "phi"});
    if (!p.contains("chi") || !p.contains("phi")) fail("sandwich: needs chi and phi");
    std::string label =
        p.contains("label") ? to_str(p.at("label"), "sandwich.label") : std::string("sandwich");
    out.kind = "sandwich";
    out.sandwich = make_sandwich(parse_bicharacter(p.at("chi"), *scalars, "sandwich.chi"),
                                 parse_grading(p.at("phi"), "sandwich.phi"), label);
  } else if (j.contains("cgl")) {
    if (!scalars) fail("cgl: scalars block is required");
    out.kind = "cgl";
    out.cgl = parse_cgl_payload(j.at("cgl"), *scalars);
  } else if (j.contains("weyl")) {
    parse_weyl_payload(j.at("weyl"), scalars, out);
  } else if (j.contains("quantum_matrices")) {
    const json& p = j.at("quantum_matrices");
    require_keys(p, "quantum_matrices", {"n", "standard"});
    if (!p.contains("n")) fail("quantum_matrices: missing n");
    long long n = to_int(p.at("n"), "quantum_matrices.n");
    if (n < 1) fail("quantum_matrices.n: expected a positive integer");
    bool standard = false;
    if (p.contains("standard")) {
      if (!p.at("standard").is_boolean()) fail("quantum_matrices.standard: expected a boolean");
      standard = p.at("standard").get<bool>();
    }
    std::size_t un = static_cast<std::size_t>(n);
    CglDescriptor d =
        standard ? standard_quantum_matrices_descriptor(un) : quantum_matrices_descriptor(un);
    check_builtin_scalars(scalars, d.ctx(), "quantum_matrices");
    out.kind = "quantum_matrices";
    out.builtin_n = un;
    out.cgl = d;
  } else if (j.contains("quantum_affine")) {
    if (!scalars) fail("quantum_affine: scalars block is required");
    const json& p = j.at("quantum_affine");
    require_keys(p, "quantum_affine", {"label", "chi"});
    if (!p.contains("chi")) fail("quantum_affine: missing chi");
    std::string label = p.contains("label") ? to_str(p.at("label"), "quantum_affine.label")
                                            : std::string("quantum-affine");
    out.kind = "quantum_affine";
    out.cgl = quantum_affine_descriptor(parse_bicharacter(p.at("chi"), *scalars, "quantum_affine.chi"),
                                        label);
  } else {
    parse_schubert_payload(j.at("schubert"), scalars, out);
  }

  if (j.contains("cocycles")) {
    const json& cs = j.at("cocycles");
    if (!cs.is_array()) fail("cocycles: expected an array");
    for (const json& c : cs) out.cocycles.push_back(parse_cocycle_object(c, out.ctx()));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read descriptor file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

json subgroup_json(const SubgroupView& v) {
  json j;
  j["display"] = v.display;
  j["free_rank"] = v.free_rank;
  j["generators"] = v.generators;
  j["torsion"] = v.torsion;
  return j;
}

}  // namespace

const ScalarContext& ParsedDescriptor::ctx() const {
  if (sandwich) return sandwich->ctx();
  if (cgl) return cgl->ctx();
  if (schubert) return schubert->matrix.ctx;
  throw std::logic_error("descriptor holds no payload");
}

std::string ParsedDescriptor::label() const {
  if (sandwich) return sandwich->label;
  if (cgl) return cgl->label;
  if (schubert) return schubert->label;
  return "";
}

ParsedDescriptor parse_descriptor_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("descriptor is not valid JSON: ") + e.what());
  }
  try {
    return parse_descriptor_json(j);
  } catch (const json::exception& e) {
    fail(std::string("descriptor: malformed value: ") + e.what());
  }
}

ParsedDescriptor parse_descriptor_file(const std::string& path) {
  return parse_descriptor_text(read_file(path));
}

CocycleClass parse_cocycle_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    fail(std::string("cocycle file is not valid JSON: ") + e.what());
  }
  try {
    require_keys(j, "cocycle file", {"version", "scalars", "cocycle"});
    if (!j.contains("version") || !j.at("version").is_number_integer() ||
        j.at("version").get<long long>() != 1)
      fail("cocycle file: version must be 1");
    if (!j.contains("scalars") || !j.contains("cocycle"))
      fail("cocycle file: needs scalars and cocycle");
    ScalarContext ctx = parse_context(j.at("scalars"));
    return parse_cocycle_object(j.at("cocycle"), ctx);
  } catch (const json::exception& e) {
    fail(std::string("cocycle file: malformed value: ") + e.what());
  }
}

ScalarElement substitute_element(const ScalarElement& s, const std::vector<IntVec>& images,
                                 const ScalarContext& target) {
  if (images.size() != s.exp.size())
    throw std::invalid_argument("substitution: image count differs from the source arity");
  IntVec out(target.arity(), Int(0));
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].size() != target.arity())
      throw std::invalid_argument("substitution: image arity differs from the target context");
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += s.exp[i] * images[i][t];
  }
  return ScalarElement{out};
}

Bicharacter substitute_bicharacter(const Bicharacter& chi, const std::vector<IntVec>& images,
                                   const ScalarContext& target) {
  Bicharacter out = trivial_bicharacter(target, chi.rank);
  for (std::size_t i = 0; i + 1 < chi.rank; ++i)
    for (std::size_t j = i + 1; j < chi.rank; ++j)
      set_entry(out, i, j, substitute_element(entry(chi, i, j), images, target));
  return out;
}

CglDescriptor substitute_cgl(const CglDescriptor& d, const std::vector<IntVec>& images,
                             const ScalarContext& target) {
  CglDescriptor out = d;
  out.lambda = substitute_bicharacter(d.lambda, images, target);
  for (auto& [k, v] : out.lambda_k) v = substitute_element(v, images, target);
  return out;
}

SubgroupView view_subgroup(const ScalarSubgroup& g) {
  SubgroupView v;
  v.generators = generator_monomials(g);
  QuotientShape shape = quotient_shape(g);
  v.free_rank = shape.free_rank;
  for (const Int& t : shape.torsion) v.torsion.push_back(t.str());
  v.display = v.generators.empty() ? "<1>" : "<" + join(v.generators, ", ") + ">";
  return v;
}

std::string report_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "label: " << r.label << "\n";
  out << "command: " << r.command << "\n";
  auto put = [&](const char* name, const SubgroupView& v) {
    out << name << ": " << v.display << "\n";
    out << name << " free rank: " << v.free_rank << "\n";
    if (!v.torsion.empty()) out << name << " invariant factors: " << join(v.torsion, ", ") << "\n";
  };
  if (r.ad) put("ad", *r.ad);
  if (r.tw) put("tw", *r.tw);
  if (r.classification) out << "classification: " << *r.classification << "\n";
  if (!r.notes.empty()) {
    out << "notes:\n";
    for (const std::string& note : r.notes) out << "  - " << note << "\n";
  }
  return out.str();
}

std::string report_json(const InvariantReport& r) {
  json j;
  j["command"] = r.command;
  j["label"] = r.label;
  if (r.ad) j["ad"] = subgroup_json(*r.ad);
  if (r.tw) j["tw"] = subgroup_json(*r.tw);
  if (r.classification) j["classification"] = *r.classification;
  j["notes"] = r.notes;
  return j.dump();
}

}  // namespace qinv
