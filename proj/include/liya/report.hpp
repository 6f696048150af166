#ifndef LIYA_REPORT_HPP
#define LIYA_REPORT_HPP

#include <string>
#include <vector>

#include "liya/ly_algebra.hpp"

namespace liya {

/// One line of a verification report.
struct ReportEntry {
  std::string check;
  std::string detail;  // which identity / residual summary
  bool pass = false;
};

/// Deterministic verification report: overall verdict is the conjunction of
/// the member verdicts; serialization has stable key order and no timing
/// unless explicitly requested.
struct VerificationReport {
  std::string subject;
  std::string suite;
  std::vector<ReportEntry> entries;
  long elapsed_ms = 0;

  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  void add(std::string check, bool ok, std::string detail = "") {
    entries.push_back(ReportEntry{std::move(check), std::move(detail), ok});
  }
  /// Folds an AxiomReport in as one entry per identity, with sparse residual
  /// summaries for failures.
  void absorb(const AxiomReport& rep, const std::string& prefix = "");

  std::string to_text(bool with_timing = false) const;
  std::string to_json(bool with_timing = false) const;
};

/// Sparse "(i,j,...) = value" listing of a residual tensor, capped.
std::string residual_summary(const Tensor& t, std::size_t cap = 8);

} // namespace liya

#endif
