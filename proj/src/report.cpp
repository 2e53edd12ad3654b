#include "darboux/report.hpp"

#include <sstream>

#include "darboux/parser.hpp"

namespace darboux {

Json system_json(const NaturalHamiltonian& sys) {
  Json mu = Json::array();
  for (const auto& c : sys.mu()) mu.push_back(format_scalar(c));
  return Json{{"m", sys.m()},
              {"field", sys.field().to_string()},
              {"mu", mu},
              {"V", format_poly(sys.potential())},
              {"degV", sys.degree()}};
}

ResultEntry certificate_entry(const DarbouxCertificate& cert, std::string kind) {
  return ResultEntry{std::move(kind), format_poly(cert.polynomial), format_poly(cert.cofactor),
                     cert.proper ? "proper" : "first-integral", nullptr};
}

Json to_json(const Report& r) {
  Json out;
  out["command"] = r.command;
  out["system"] = r.system;
  Json results = Json::array();
  for (const auto& e : r.results) {
    Json j;
    j["kind"] = e.kind;
    j["poly"] = e.poly;
    if (e.cofactor) j["cofactor"] = *e.cofactor;
    if (e.verdict) j["verdict"] = *e.verdict;
    if (!e.evidence.is_null()) j["evidence"] = e.evidence;
    results.push_back(std::move(j));
  }
  out["results"] = std::move(results);
  out["residual_conditions"] = r.residual_conditions;
  for (const auto& [key, value] : r.extra) out[key] = value;
  out["timing_ms"] = r.timing_ms ? Json(*r.timing_ms) : Json(nullptr);
  return out;
}

namespace {

void text_evidence(std::ostringstream& os, const Json& ev) {
  if (ev.is_null()) return;
  if (!ev.is_array()) {
    os << "    " << (ev.is_string() ? ev.get<std::string>() : ev.dump()) << "\n";
    return;
  }
  for (const auto& item : ev) {
    if (item.is_string()) {
      os << "    " << item.get<std::string>() << "\n";
    } else if (item.is_object() && item.contains("poly")) {
      os << "    " << item["poly"].get<std::string>();
      if (item.contains("cofactor")) os << "   [cofactor " << item["cofactor"].get<std::string>() << "]";
      os << "\n";
    } else {
      os << "    " << item.dump() << "\n";
    }
  }
}

}  // namespace

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  if (!r.system.is_null()) {
    os << "system: m = " << r.system["m"].get<std::size_t>() << ", field = " << r.system["field"].get<std::string>()
       << ", mu = (";
    bool first = true;
    for (const auto& x : r.system["mu"]) {
      os << (first ? "" : ", ") << x.get<std::string>();
      first = false;
    }
    os << "), V = " << r.system["V"].get<std::string>() << " (degree " << r.system["degV"].get<long>() << ")\n";
  }
  for (const auto& e : r.results) {
    os << e.kind << ": " << e.poly;
    if (e.cofactor) os << "   cofactor: " << *e.cofactor;
    if (e.verdict) os << "   => " << *e.verdict;
    os << "\n";
    text_evidence(os, e.evidence);
  }
  if (r.results.empty()) os << "(no results)\n";
  for (const auto& c : r.residual_conditions) os << "residual condition: " << c << " = 0\n";
  for (const auto& [key, value] : r.extra) {
    os << key << ":";
    if (value.is_object()) {
      os << "\n";
      for (const auto& [k, v] : value.items()) os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
      os << " " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  if (r.timing_ms) os << "time: " << *r.timing_ms << " ms\n";
  return os.str();
}

}  // namespace darboux
