#include "nvs/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace nvs {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

void VerificationReport::add(const std::string& key, bool passed, std::uint64_t count,
                             const std::string& witness) {
  checks.push_back(Check{key, passed, count, witness});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const Check& c : other.checks) {
    checks.push_back(Check{prefix.empty() ? c.key : prefix + "." + c.key, c.passed,
                           c.count, c.witness});
  }
}

static std::vector<const Check*> sorted_checks(const VerificationReport& r) {
  std::vector<const Check*> out;
  out.reserve(r.checks.size());
  for (const Check& c : r.checks) out.push_back(&c);
  std::stable_sort(out.begin(), out.end(),
                   [](const Check* a, const Check* b) { return a->key < b->key; });
  return out;
}

std::string VerificationReport::to_text(bool with_elapsed) const {
  std::ostringstream os;
  os << "report: " << name << "\n";
  for (const Check* c : sorted_checks(*this)) {
    os << "  " << c->key << " = " << (c->passed ? "pass" : "FAIL");
    if (c->count > 0) os << " (cases=" << c->count << ")";
    if (!c->witness.empty()) os << " witness: " << c->witness;
    os << "\n";
  }
  os << "  result = " << (all_passed() ? "pass" : "FAIL") << "\n";
  if (with_elapsed) os << "  elapsed_ms = " << elapsed_ms << "\n";
  return os.str();
}

std::string VerificationReport::to_json_string(bool with_elapsed) const {
  nlohmann::json j;
  j["name"] = name;
  j["result"] = all_passed() ? "pass" : "fail";
  nlohmann::json items = nlohmann::json::object();
  for (const Check* c : sorted_checks(*this)) {
    nlohmann::json item;
    item["pass"] = c->passed;
    if (c->count > 0) item["cases"] = c->count;
    if (!c->witness.empty()) item["witness"] = c->witness;
    items[c->key] = item;
  }
  j["checks"] = items;
  if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

}  // namespace nvs
