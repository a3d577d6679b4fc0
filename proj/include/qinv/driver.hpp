#pragma once

#include "qinv/descriptor.hpp"

namespace qinv {

// One report per CLI command; math preconditions surface as PreconditionError,
// cross-route disagreements as InternalMismatchError.
InvariantReport cmd_ad(const ParsedDescriptor& d);
InvariantReport cmd_tw(const ParsedDescriptor& d);
InvariantReport cmd_twist(const ParsedDescriptor& d, const std::vector<CocycleClass>& extra);
InvariantReport cmd_extend(const ParsedDescriptor& d, std::size_t vars);
InvariantReport cmd_schubert(const SchubertInput& in);
InvariantReport cmd_oracle(const ParsedDescriptor& d, long long radius);
InvariantReport cmd_verify(const ParsedDescriptor& d);

struct CompareResult {
  bool equal = false;
  InvariantReport report;
};
// Twist subgroups of two descriptors over one shared scalar context.
CompareResult cmd_compare(const ParsedDescriptor& a, const ParsedDescriptor& b);

struct SuiteRow {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct SuiteReport {
  std::vector<SuiteRow> rows;
  bool ok = true;
};
// Recomputes the worked examples against their frozen values; corrupt tampers
// one commutation matrix so the internal cross-checks must catch it.
SuiteReport reproduce_examples(bool corrupt = false);
std::string suite_text(const SuiteReport& s);
std::string suite_json(const SuiteReport& s);

}  // namespace qinv
