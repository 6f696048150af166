#include "liya/report.hpp"

#include <sstream>

#include "json.hpp"

namespace liya {

std::string residual_summary(const Tensor& t, std::size_t cap) {
  auto nz = t.nonzeros();
  if (nz.empty()) return "zero";
  std::ostringstream os;
  os << nz.size() << " nonzero:";
  for (std::size_t k = 0; k < nz.size() && k < cap; ++k) {
    os << " (";
    for (std::size_t i = 0; i < nz[k].first.size(); ++i) {
      if (i) os << ",";
      os << nz[k].first[i] + 1;  // 1-based in reports, as in the file formats
    }
    os << ")=" << nz[k].second.str();
  }
  if (nz.size() > cap) os << " ...";
  return os.str();
}

void VerificationReport::absorb(const AxiomReport& rep, const std::string& prefix) {
  for (const auto& c : rep.checks)
    add(prefix + c.name, c.pass, c.pass ? "" : residual_summary(c.residual));
}

std::string VerificationReport::to_text(bool with_timing) const {
  std::ostringstream os;
  os << "subject: " << subject << "\n";
  os << "suite:   " << suite << "\n";
  for (const auto& e : entries) {
    os << "  [" << (e.pass ? "pass" : "FAIL") << "] " << e.check;
    if (!e.detail.empty()) os << "  -- " << e.detail;
    os << "\n";
  }
  os << "verdict: " << (pass() ? "PASS" : "FAIL") << "\n";
  if (with_timing) os << "elapsed_ms: " << elapsed_ms << "\n";
  return os.str();
}

std::string VerificationReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["subject"] = subject;
  j["suite"] = suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json c;
    c["name"] = e.check;
    c["pass"] = e.pass;
    if (!e.detail.empty()) c["detail"] = e.detail;
    j["checks"].push_back(std::move(c));
  }
  j["pass"] = pass();
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2) + "\n";
}

} // namespace liya
