#include "hilbfock/certificate.hpp"

#include <algorithm>
#include <ctime>

namespace hilbfock {

using nlohmann::json;

json VerificationCertificate::to_json() const {
  json j;
  j["identity"] = identity;
  j["params"] = params;
  j["bounds"] = bounds;
  j["surface"] = surface;
  j["synthetic"] = synthetic;
  j["status"] = pass ? "pass" : "fail";
  j["method"] = method;
  j["residual_terms"] = residual;
  if (!note.empty()) j["note"] = note;
  j["millis"] = millis;
  return j;
}

json make_report(const std::vector<VerificationCertificate>& certs,
                 const std::string& surface_desc) {
  std::vector<const VerificationCertificate*> order;
  order.reserve(certs.size());
  for (auto& c : certs) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(),
                   [](const VerificationCertificate* a, const VerificationCertificate* b) {
                     if (a->identity != b->identity) return a->identity < b->identity;
                     return a->params.dump() < b->params.dump();
                   });
  json arr = json::array();
  int passed = 0;
  for (auto* c : order) {
    arr.push_back(c->to_json());
    passed += c->pass;
  }
  json j;
  j["schema"] = 1;
  j["surface"] = surface_desc;
  j["certificates"] = arr;
  j["summary"] = {{"total", certs.size()},
                  {"passed", passed},
                  {"failed", certs.size() - (size_t)passed}};
  char buf[64];
  std::time_t t = std::time(nullptr);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  j["generated_at"] = buf;
  return j;
}

json merge_reports(const std::vector<json>& reports) {
  std::map<std::string, json> by_key;
  for (auto& r : reports) {
    if (!r.contains("certificates"))
      throw std::invalid_argument("malformed certificate file: no 'certificates'");
    for (auto& c : r["certificates"]) {
      std::string key = c.value("identity", "") + "\x1f" + c["params"].dump();
      by_key.emplace(key, c);  // first wins on duplicates
    }
  }
  json arr = json::array();
  std::map<std::string, std::pair<int, int>> counts;  // id -> (pass, fail)
  int passed = 0;
  for (auto& [k, c] : by_key) {
    arr.push_back(c);
    bool ok = c.value("status", "") == "pass";
    passed += ok;
    auto& pc = counts[c.value("identity", "")];
    (ok ? pc.first : pc.second) += 1;
  }
  json per_id = json::object();
  for (auto& [id, pf] : counts) per_id[id] = {{"passed", pf.first}, {"failed", pf.second}};
  json j;
  j["schema"] = 1;
  j["certificates"] = arr;
  j["per_identity"] = per_id;
  j["summary"] = {{"total", by_key.size()},
                  {"passed", passed},
                  {"failed", by_key.size() - (size_t)passed}};
  return j;
}

}  // namespace hilbfock
