#include "bax/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace bax {

Check& VerificationReport::add(std::string name, double residual, double tolerance, int samples, std::string detail,
                               std::string status) {
  Check c;
  c.name = std::move(name);
  c.max_residual = residual;
  c.tolerance = tolerance;
  c.samples = samples;
  c.pass = residual < tolerance;
  c.detail = std::move(detail);
  c.status = std::move(status);
  checks.push_back(std::move(c));
  return checks.back();
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

double VerificationReport::residual(const std::string& name) const {
  const Check* c = find(name);
  return c ? c->max_residual : -1.0;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["check"] = c.name;
    j["family"] = family;
    j["params"] = params;
    j["samples"] = c.samples;
    j["seed"] = seed;
    j["max_residual"] = c.max_residual;
    j["tolerance"] = c.tolerance;
    j["verdict"] = c.pass ? "pass" : "fail";
    if (!c.status.empty()) j["status"] = c.status;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string VerificationReport::to_table() const {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-34s %-8s %-24s %9s %8s\n", "check", "verdict", "max_residual", "tolerance",
                "samples");
  os << buf;
  for (const auto& c : checks) {
    // %.17g so the table value round-trips to the JSON double
    std::snprintf(buf, sizeof buf, "%-34s %-8s %-24.17g %9.1e %8d", c.name.c_str(), c.pass ? "pass" : "FAIL",
                  c.max_residual, c.tolerance, c.samples);
    os << buf;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace bax
