#pragma once

// Command reports: JSON (canonical, byte-deterministic) and plain text.
//
// JSON schema:
//   {command, system: {m, field, mu, V, degV} | null,
//    results: [{kind, poly, cofactor?, verdict?, evidence?}],
//    residual_conditions: [string], <extra keys>, timing_ms}
// Polynomials are canonical text accepted back by parse_poly.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "darboux/darboux.hpp"
#include "darboux/hamiltonian.hpp"

namespace darboux {

using Json = nlohmann::ordered_json;

struct ResultEntry {
  std::string kind;
  std::string poly;
  std::optional<std::string> cofactor;
  std::optional<std::string> verdict;
  Json evidence;  ///< omitted when null
};

struct Report {
  std::string command;
  Json system;  ///< null when the command has no single system
  std::vector<ResultEntry> results;
  std::vector<std::string> residual_conditions;
  std::vector<std::pair<std::string, Json>> extra;
  std::optional<double> timing_ms;
};

Json system_json(const NaturalHamiltonian& sys);
/// Entry for a certificate; verdict is "proper" or "first-integral".
ResultEntry certificate_entry(const DarbouxCertificate& cert, std::string kind = "darboux");

Json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace darboux
