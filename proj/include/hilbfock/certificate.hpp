#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hilbfock {

// Machine-readable record of one verified identity instance.
struct VerificationCertificate {
  std::string identity;
  nlohmann::json params;
  nlohmann::json bounds;
  std::string surface;
  bool synthetic = false;
  bool pass = false;
  std::string method;  // "canonical" or "evaluated(weight<=N)" or suite-specific
  std::vector<std::string> residual;
  std::string note;
  long long millis = 0;

  nlohmann::json to_json() const;
};

// Sorted, deterministic report over a set of certificates.
nlohmann::json make_report(const std::vector<VerificationCertificate>& certs,
                           const std::string& surface_desc);

// Merge report files: deduplicates by (identity, params), accumulates counts.
nlohmann::json merge_reports(const std::vector<nlohmann::json>& reports);

}  // namespace hilbfock
