#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bax {

struct Check {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int samples = 0;
  bool pass = true;
  std::string status;  // "proof", "conjecture check", "axiom" ...
  std::string detail;  // first counterexample or observation
};

struct VerificationReport {
  std::string family;
  std::string params;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  // verdict = residual < tolerance
  Check& add(std::string name, double residual, double tolerance, int samples,
             std::string detail = {}, std::string status = {});
  bool passed() const;
  const Check* find(const std::string& name) const;
  double residual(const std::string& name) const;

  std::string to_json() const;
  std::string to_table() const;
};

}  // namespace bax
