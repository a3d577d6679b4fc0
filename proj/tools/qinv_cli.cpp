#include "qinv/driver.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>

namespace {

// 0 success, 1 compare-differs, 2 schema, 3 failed precondition, 4 internal.
constexpr int kExitDiffer = 1;
constexpr int kExitSchema = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

void emit(const qinv::InvariantReport& r, bool as_json) {
  if (as_json)
    std::cout << qinv::report_json(r) << "\n";
  else
    std::cout << qinv::report_text(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twist invariants of graded quantum algebras"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string path, second_path, cocycle_path, cell_type;
  std::size_t extend_vars = 1;
  long long radius = 1;
  std::vector<std::size_t> cell_word;
  bool corrupt = false;

  CLI::App* ad = app.add_subcommand("ad", "commutation subgroup of a descriptor");
  ad->add_option("descriptor", path, "descriptor file")->required();

  CLI::App* tw = app.add_subcommand("tw", "twist-invariant subgroup of a descriptor");
  tw->add_option("descriptor", path, "descriptor file")->required();

  CLI::App* twist = app.add_subcommand("twist", "invariants after a cocycle twist");
  twist->add_option("descriptor", path, "descriptor file")->required();
  twist->add_option("--cocycle", cocycle_path, "cocycle class file");

  CLI::App* extend = app.add_subcommand("extend", "invariants after central polynomial variables");
  extend->add_option("descriptor", path, "descriptor file")->required();
  extend->add_option("--vars", extend_vars, "number of added variables")->required();

  CLI::App* cell = app.add_subcommand("schubert", "dual-route invariants of a cell");
  cell->add_option("descriptor", path, "descriptor file");
  cell->add_option("--type", cell_type, "builtin Cartan type, e.g. B2");
  cell->add_option("--word", cell_word, "reduced word letters")->delimiter(',');

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force commutators against the closed form");
  oracle->add_option("descriptor", path, "descriptor file")->required();
  oracle->add_option("--radius", radius, "exponent box radius")->required();

  CLI::App* verify = app.add_subcommand("verify", "internal consistency checks for a descriptor");
  verify->add_option("descriptor", path, "descriptor file")->required();

  CLI::App* compare = app.add_subcommand("compare", "compare the twist subgroups of two descriptors");
  compare->add_option("first", path, "first descriptor file")->required();
  compare->add_option("second", second_path, "second descriptor file")->required();

  CLI::App* reproduce = app.add_subcommand("reproduce", "recompute the worked examples");
  reproduce->add_flag("--corrupt", corrupt, "tamper one commutation matrix first");

  for (CLI::App* sub : app.get_subcommands({}))
    sub->add_flag("--json", as_json, "emit the machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ad->parsed()) {
      emit(qinv::cmd_ad(qinv::parse_descriptor_file(path)), as_json);
    } else if (tw->parsed()) {
      emit(qinv::cmd_tw(qinv::parse_descriptor_file(path)), as_json);
    } else if (twist->parsed()) {
      std::vector<qinv::CocycleClass> extra;
      if (!cocycle_path.empty()) extra.push_back(qinv::parse_cocycle_file(cocycle_path));
      emit(qinv::cmd_twist(qinv::parse_descriptor_file(path), extra), as_json);
    } else if (extend->parsed()) {
      emit(qinv::cmd_extend(qinv::parse_descriptor_file(path), extend_vars), as_json);
    } else if (cell->parsed()) {
      qinv::SchubertInput in;
      if (!path.empty()) {
        qinv::ParsedDescriptor d = qinv::parse_descriptor_file(path);
        if (!d.schubert)
          throw std::invalid_argument("schubert: the descriptor must carry a schubert payload");
        in = *d.schubert;
      } else if (!cell_type.empty() && !cell_word.empty()) {
        in.cartan = qinv::cartan_type(cell_type);
        for (std::size_t letter : cell_word)
          if (letter < 1 || letter > in.cartan.rank)
            throw std::invalid_argument("schubert: word letters must lie in 1..rank");
        in.word = cell_word;
        in.matrix = qinv::standard_cell_matrix(in.cartan, in.word);
        in.label = cell_type + "-cell";
        for (std::size_t letter : in.word) in.label += "-" + std::to_string(letter);
      } else {
        throw std::invalid_argument("schubert: pass a descriptor file or both --type and --word");
      }
      emit(qinv::cmd_schubert(in), as_json);
    } else if (oracle->parsed()) {
      emit(qinv::cmd_oracle(qinv::parse_descriptor_file(path), radius), as_json);
    } else if (verify->parsed()) {
      emit(qinv::cmd_verify(qinv::parse_descriptor_file(path)), as_json);
    } else if (compare->parsed()) {
      qinv::CompareResult res = qinv::cmd_compare(qinv::parse_descriptor_file(path),
                                                  qinv::parse_descriptor_file(second_path));
      emit(res.report, as_json);
      return res.equal ? 0 : kExitDiffer;
    } else if (reproduce->parsed()) {
      qinv::SuiteReport suite = qinv::reproduce_examples(corrupt);
      std::cout << (as_json ? qinv::suite_json(suite) + "\n" : qinv::suite_text(suite));
      return suite.ok ? 0 : kExitDiffer;
    }
  } catch (const qinv::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const qinv::InternalMismatchError& e) {
    std::cerr << "internal mismatch: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
