#pragma once

#include "qinv/cgl.hpp"
#include "qinv/schubert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qinv {

// A Schubert cell request: Cartan datum, word, and the commutation matrix of
// the cell generators (defaults to the standard one built from the roots).
struct SchubertInput {
  CartanData cartan;
  WeylWord word;
  Bicharacter matrix;
  std::string label;
};

// One descriptor file, decoded.  Exactly one of sandwich / cgl / schubert is
// populated; builtin payloads (weyl, quantum_matrices, quantum_affine) land
// in the cgl slot.  kind remembers which payload key produced it.
struct ParsedDescriptor {
  std::string kind;
  std::optional<SandwichDescriptor> sandwich;
  std::optional<CglDescriptor> cgl;
  std::optional<SchubertInput> schubert;
  std::vector<CocycleClass> cocycles;

  // weyl payloads keep their size and specialization for relation checks
  std::size_t builtin_n = 0;
  std::optional<std::vector<ScalarElement>> weyl_q;
  std::optional<Bicharacter> weyl_p;

  const ScalarContext& ctx() const;
  std::string label() const;
};

// Schema errors throw std::invalid_argument naming the offending key.
ParsedDescriptor parse_descriptor_text(const std::string& text);
ParsedDescriptor parse_descriptor_file(const std::string& path);

// A standalone file {version, scalars, cocycle: {...}}.
CocycleClass parse_cocycle_file(const std::string& path);

// Exponent-linear substitution: parameter i of the source context becomes the
// element with exponent vector images[i] over target.  Requires scale 1 and a
// relation-free source.
ScalarElement substitute_element(const ScalarElement& s,
                                 const std::vector<IntVec>& images,
                                 const ScalarContext& target);
Bicharacter substitute_bicharacter(const Bicharacter& chi,
                                   const std::vector<IntVec>& images,
                                   const ScalarContext& target);
CglDescriptor substitute_cgl(const CglDescriptor& d,
                             const std::vector<IntVec>& images,
                             const ScalarContext& target);

// Presentation of a scalar subgroup for reports: monomial generators plus the
// shape of the quotient group it generates.
struct SubgroupView {
  std::vector<std::string> generators;
  std::size_t free_rank = 0;
  std::vector<std::string> torsion;
  std::string display;  // "<q^2, p12>" or "<1>"
};
SubgroupView view_subgroup(const ScalarSubgroup& g);

struct InvariantReport {
  std::string command;
  std::string label;
  std::optional<SubgroupView> ad;
  std::optional<SubgroupView> tw;
  std::optional<std::string> classification;
  std::vector<std::string> notes;
};

std::string report_text(const InvariantReport& r);
// Canonical bytes: sorted keys, compact separators; re-parsing and re-dumping
// reproduces them exactly.
std::string report_json(const InvariantReport& r);

}  // namespace qinv
