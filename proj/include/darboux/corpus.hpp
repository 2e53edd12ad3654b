#pragma once

// Built-in systems with known integrals and the golden assertions run by
// `darboux examples`.

#include <string>
#include <vector>

#include "darboux/hamiltonian.hpp"

namespace darboux {

struct CorpusSystem {
  std::string name;
  std::string description;
  std::string definition;  ///< system-file text
};

const std::vector<CorpusSystem>& builtin_systems();
/// Throws InputError for an unknown name.
NaturalHamiltonian load_builtin(const std::string& name);

struct GoldenCheck {
  std::string system;
  std::string claim;
  std::string poly;
  bool passed = false;
  std::string detail;
};

std::vector<GoldenCheck> run_golden_corpus();

}  // namespace darboux
