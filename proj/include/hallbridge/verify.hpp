#pragma once

#include "hallbridge/bridgeland.hpp"

#include <string>

namespace hb {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// All catalog iso-classes with dim vector componentwise <= the engine
/// bound, in deterministic (dim vector lex, class index) order.
std::vector<ClassId> all_classes(Engine& eng);

std::vector<CheckResult> verify_euler(Engine& eng);
std::vector<CheckResult> verify_resolution_identities(Engine& eng);
std::vector<CheckResult> verify_ext1_c2(BridgelandSession& s);       // hom/ext dimension match
std::vector<CheckResult> verify_acyclic_relations(BridgelandSession& s);
std::vector<CheckResult> verify_resolution_independence(BridgelandSession& s, int paddings);
std::vector<CheckResult> verify_counts(BridgelandSession& s);
std::vector<CheckResult> verify_psi_phi(BridgelandSession& s);
std::vector<CheckResult> verify_embedding(BridgelandSession& s);  // phi multiplicative iff Ext
std::vector<CheckResult> verify_serre(BridgelandSession& s);
std::vector<CheckResult> verify_associativity(BridgelandSession& s, int samples);

std::vector<CheckResult> verify_all(BridgelandSession& s);

}  // namespace hb
